//! Splitting objects at the frame's center lines.
//!
//! An object that straddles a center line is cut exactly at the line and each
//! piece contributes with its own center and area. Objects whose edge only
//! touches a line are not split.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::layout::{Layout, LayoutObject, Rect};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
    Top,
    Bottom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Quadrant {
    UL,
    UR,
    LL,
    LR,
}

impl Quadrant {
    /// Reading order: upper-left first.
    pub const ALL: [Quadrant; 4] = [Quadrant::UL, Quadrant::UR, Quadrant::LL, Quadrant::LR];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_sides(horizontal: Side, vertical: Side) -> Quadrant {
        match (vertical, horizontal) {
            (Side::Top, Side::Left) => Quadrant::UL,
            (Side::Top, Side::Right) => Quadrant::UR,
            (Side::Bottom, Side::Left) => Quadrant::LL,
            (Side::Bottom, Side::Right) => Quadrant::LR,
            _ => panic!("invalid side pair {horizontal:?}/{vertical:?}"),
        }
    }

    /// Quadrant reached by reflecting across the vertical center line.
    pub fn mirror_horizontal(self) -> Quadrant {
        match self {
            Quadrant::UL => Quadrant::UR,
            Quadrant::UR => Quadrant::UL,
            Quadrant::LL => Quadrant::LR,
            Quadrant::LR => Quadrant::LL,
        }
    }
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Where a piece of an object landed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Side(Side),
    Quadrant(Quadrant),
}

/// A positive-area piece of an object confined to one side or quadrant.
#[derive(Debug, Clone, PartialEq)]
pub struct SubObject {
    pub parent: String,
    pub rect: Rect,
    pub region: Region,
}

impl SubObject {
    pub fn area(&self) -> f64 {
        self.rect.area()
    }
}

/// Cuts `[lo, hi]` at `axis`, returning the pieces below and above it.
/// Zero-length pieces are dropped.
fn cut(lo: f64, hi: f64, axis: f64) -> (Option<(f64, f64)>, Option<(f64, f64)>) {
    if hi <= axis {
        (Some((lo, hi)), None)
    } else if lo >= axis {
        (None, Some((lo, hi)))
    } else {
        (Some((lo, axis)), Some((axis, hi)))
    }
}

fn split_rect_x(r: &Rect, x_c: f64) -> Vec<(Side, Rect)> {
    let (left, right) = cut(r.x, r.right(), x_c);
    let mut out = Vec::with_capacity(2);
    if let Some((a, b)) = left {
        // keep the original width when the object is not cut
        let w = if right.is_none() { r.width } else { b - a };
        out.push((Side::Left, Rect::new(a, r.y, w, r.height)));
    }
    if let Some((a, b)) = right {
        let w = if left.is_none() { r.width } else { b - a };
        out.push((Side::Right, Rect::new(a, r.y, w, r.height)));
    }
    out
}

fn split_rect_y(r: &Rect, y_c: f64) -> Vec<(Side, Rect)> {
    let (top, bottom) = cut(r.y, r.bottom(), y_c);
    let mut out = Vec::with_capacity(2);
    if let Some((a, b)) = top {
        let h = if bottom.is_none() { r.height } else { b - a };
        out.push((Side::Top, Rect::new(r.x, a, r.width, h)));
    }
    if let Some((a, b)) = bottom {
        let h = if top.is_none() { r.height } else { b - a };
        out.push((Side::Bottom, Rect::new(r.x, a, r.width, h)));
    }
    out
}

/// Splits an object at the vertical center line `x_c` into pieces tagged
/// left/right.
pub fn split_at_vertical_axis(obj: &LayoutObject, x_c: f64) -> Vec<SubObject> {
    split_rect_x(&obj.rect, x_c)
        .into_iter()
        .map(|(side, rect)| SubObject {
            parent: obj.id.clone(),
            rect,
            region: Region::Side(side),
        })
        .collect()
}

/// Splits an object at the horizontal center line `y_c` into pieces tagged
/// top/bottom (top is the smaller `y`).
pub fn split_at_horizontal_axis(obj: &LayoutObject, y_c: f64) -> Vec<SubObject> {
    split_rect_y(&obj.rect, y_c)
        .into_iter()
        .map(|(side, rect)| SubObject {
            parent: obj.id.clone(),
            rect,
            region: Region::Side(side),
        })
        .collect()
}

/// Splits one object at both center lines into 1 to 4 quadrant pieces.
pub fn split_into_quadrants(obj: &LayoutObject, x_c: f64, y_c: f64) -> Vec<SubObject> {
    let mut out = Vec::with_capacity(4);
    for (hside, column) in split_rect_x(&obj.rect, x_c) {
        for (vside, piece) in split_rect_y(&column, y_c) {
            out.push(SubObject {
                parent: obj.id.clone(),
                rect: piece,
                region: Region::Quadrant(Quadrant::from_sides(hside, vside)),
            });
        }
    }
    out
}

/// Per-quadrant pieces of every object, indexed by [`Quadrant::index`].
#[derive(Debug, Clone, Default, PartialEq)]
pub struct QuadrantPartition {
    pieces: [Vec<SubObject>; 4],
}

impl QuadrantPartition {
    pub fn get(&self, q: Quadrant) -> &[SubObject] {
        &self.pieces[q.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Quadrant, &[SubObject])> {
        Quadrant::ALL.into_iter().map(move |q| (q, self.get(q)))
    }
}

pub fn quadrant_partition(layout: &Layout) -> QuadrantPartition {
    let x_c = layout.frame.center_x();
    let y_c = layout.frame.center_y();
    let mut part = QuadrantPartition::default();
    for obj in &layout.objects {
        for sub in split_into_quadrants(obj, x_c, y_c) {
            let Region::Quadrant(q) = sub.region else {
                unreachable!()
            };
            part.pieces[q.index()].push(sub);
        }
    }
    part
}
