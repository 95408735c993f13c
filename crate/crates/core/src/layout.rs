//! Frames, annotated objects and layouts.
//!
//! Coordinates are real-valued pixels with the origin at the top-left corner
//! of the frame and `y` growing downward.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The interface canvas every measure is taken against.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Frame {
    pub width: f64,
    pub height: f64,
}

impl Frame {
    pub fn new(width: f64, height: f64) -> Self {
        Self { width, height }
    }

    /// Vertical center line.
    pub fn center_x(&self) -> f64 {
        self.width / 2.0
    }

    /// Horizontal center line.
    pub fn center_y(&self) -> f64 {
        self.height / 2.0
    }

    fn is_valid(&self) -> bool {
        self.width.is_finite() && self.height.is_finite() && self.width > 0.0 && self.height > 0.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ObjectKind {
    Image,
    Text,
    #[default]
    Other,
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObjectKind::Image => "image",
            ObjectKind::Text => "text",
            ObjectKind::Other => "other",
        })
    }
}

/// Axis-aligned rectangle in frame coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub x: f64,
    pub y: f64,
    pub width: f64,
    pub height: f64,
}

impl Rect {
    pub fn new(x: f64, y: f64, width: f64, height: f64) -> Self {
        Self { x, y, width, height }
    }

    pub fn right(&self) -> f64 {
        self.x + self.width
    }

    pub fn bottom(&self) -> f64 {
        self.y + self.height
    }

    pub fn center_x(&self) -> f64 {
        self.x + self.width / 2.0
    }

    pub fn center_y(&self) -> f64 {
        self.y + self.height / 2.0
    }

    pub fn area(&self) -> f64 {
        self.width * self.height
    }
}

/// One annotated object on the interface.
///
/// `kind` and `label` are carried as metadata only; no measure reads them.
#[derive(Debug, Clone, PartialEq)]
pub struct LayoutObject {
    pub id: String,
    pub rect: Rect,
    pub kind: ObjectKind,
    pub label: Option<String>,
}

impl LayoutObject {
    pub fn new(id: impl Into<String>, x: f64, y: f64, width: f64, height: f64) -> Self {
        Self {
            id: id.into(),
            rect: Rect::new(x, y, width, height),
            kind: ObjectKind::Other,
            label: None,
        }
    }

    pub fn with_kind(mut self, kind: ObjectKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn center(&self) -> (f64, f64) {
        (self.rect.center_x(), self.rect.center_y())
    }

    pub fn area(&self) -> f64 {
        self.rect.area()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LayoutMeta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub title: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub screenshot: Option<String>,
}

/// Current layout document version.
pub const LAYOUT_VERSION: u32 = 1;

/// A frame plus the objects annotated on it.
#[derive(Debug, Clone, PartialEq)]
pub struct Layout {
    pub version: u32,
    pub frame: Frame,
    pub objects: Vec<LayoutObject>,
    pub meta: Option<LayoutMeta>,
}

impl Layout {
    pub fn new(frame: Frame, objects: Vec<LayoutObject>) -> Self {
        Self {
            version: LAYOUT_VERSION,
            frame,
            objects,
            meta: None,
        }
    }

    pub fn total_area(&self) -> f64 {
        self.objects.iter().map(LayoutObject::area).sum()
    }

    /// Applies `f` to every object rectangle, keeping ids and metadata.
    pub fn map_rects(&self, frame: Frame, f: impl Fn(&Rect) -> Rect) -> Layout {
        Layout {
            version: self.version,
            frame,
            objects: self
                .objects
                .iter()
                .map(|o| LayoutObject {
                    rect: f(&o.rect),
                    ..o.clone()
                })
                .collect(),
            meta: self.meta.clone(),
        }
    }

    /// Reflection across the vertical center line.
    pub fn mirror_horizontally(&self) -> Layout {
        let w = self.frame.width;
        self.map_rects(self.frame, |r| Rect::new(w - r.x - r.width, r.y, r.width, r.height))
    }

    /// Reflection across the horizontal center line.
    pub fn mirror_vertically(&self) -> Layout {
        let h = self.frame.height;
        self.map_rects(self.frame, |r| Rect::new(r.x, h - r.y - r.height, r.width, r.height))
    }

    /// Uniform scaling of the frame and every object by `k`.
    pub fn scaled(&self, k: f64) -> Layout {
        let frame = Frame::new(self.frame.width * k, self.frame.height * k);
        self.map_rects(frame, |r| Rect::new(r.x * k, r.y * k, r.width * k, r.height * k))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Violation {
    #[error("layout has no objects")]
    EmptyObjects,
    #[error("object `{0}` lies outside the frame")]
    OutOfFrame(String),
    #[error("object `{0}` has non-positive width or height")]
    NonPositiveSize(String),
    #[error("duplicate object id `{0}`")]
    DuplicateId(String),
    #[error("frame must have positive finite width and height, got {width}x{height}")]
    BadFrame { width: f64, height: f64 },
    #[error("unsupported layout version {0}")]
    BadVersion(u32),
}

/// Every invariant violation found in a layout, in discovery order.
#[derive(Debug, Clone, PartialEq, Error)]
pub struct ValidationErrors(pub Vec<Violation>);

impl ValidationErrors {
    pub fn violations(&self) -> &[Violation] {
        &self.0
    }
}

impl fmt::Display for ValidationErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks every layout invariant and returns the layout unchanged when all
/// hold, otherwise the complete list of violations.
pub fn validate_layout(raw: Layout) -> Result<Layout, ValidationErrors> {
    let violations = collect_violations(&raw);
    if violations.is_empty() {
        Ok(raw)
    } else {
        Err(ValidationErrors(violations))
    }
}

/// Borrowing variant of [`validate_layout`].
pub fn check_layout(layout: &Layout) -> Result<(), ValidationErrors> {
    let violations = collect_violations(layout);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(ValidationErrors(violations))
    }
}

fn collect_violations(layout: &Layout) -> Vec<Violation> {
    let mut out = Vec::new();
    if layout.version != LAYOUT_VERSION {
        out.push(Violation::BadVersion(layout.version));
    }
    let frame_ok = layout.frame.is_valid();
    if !frame_ok {
        out.push(Violation::BadFrame {
            width: layout.frame.width,
            height: layout.frame.height,
        });
    }
    if layout.objects.is_empty() {
        out.push(Violation::EmptyObjects);
    }

    let mut seen = HashSet::new();
    let mut reported = HashSet::new();
    for obj in &layout.objects {
        let r = &obj.rect;
        // negated comparisons so NaN fails too
        if !(r.width > 0.0 && r.height > 0.0) || !r.width.is_finite() || !r.height.is_finite() {
            out.push(Violation::NonPositiveSize(obj.id.clone()));
        } else if frame_ok {
            let inside = r.x >= 0.0
                && r.y >= 0.0
                && r.right() <= layout.frame.width
                && r.bottom() <= layout.frame.height;
            if !inside {
                out.push(Violation::OutOfFrame(obj.id.clone()));
            }
        }
        if !seen.insert(obj.id.as_str()) && reported.insert(obj.id.as_str()) {
            out.push(Violation::DuplicateId(obj.id.clone()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame100() -> Frame {
        Frame::new(100.0, 100.0)
    }

    #[test]
    fn centered_object_is_valid() {
        let layout = Layout::new(frame100(), vec![LayoutObject::new("o1", 40.0, 40.0, 20.0, 20.0)]);
        assert_eq!(validate_layout(layout.clone()).unwrap(), layout);
    }

    #[test]
    fn overhanging_object_is_out_of_frame() {
        let layout = Layout::new(frame100(), vec![LayoutObject::new("o1", 90.0, 90.0, 20.0, 20.0)]);
        let err = validate_layout(layout).unwrap_err();
        assert_eq!(err.0, vec![Violation::OutOfFrame("o1".into())]);
    }

    #[test]
    fn duplicate_ids_are_reported_once() {
        let layout = Layout::new(
            frame100(),
            vec![
                LayoutObject::new("o1", 0.0, 0.0, 10.0, 10.0),
                LayoutObject::new("o1", 20.0, 20.0, 10.0, 10.0),
                LayoutObject::new("o1", 40.0, 40.0, 10.0, 10.0),
            ],
        );
        let err = validate_layout(layout).unwrap_err();
        assert_eq!(err.0, vec![Violation::DuplicateId("o1".into())]);
    }

    #[test]
    fn all_violations_are_collected() {
        let layout = Layout::new(
            frame100(),
            vec![
                LayoutObject::new("a", 0.0, 0.0, -5.0, 10.0),
                LayoutObject::new("b", 95.0, 0.0, 10.0, 10.0),
                LayoutObject::new("b", 0.0, 0.0, 10.0, 0.0),
            ],
        );
        let err = validate_layout(layout).unwrap_err();
        assert_eq!(
            err.0,
            vec![
                Violation::NonPositiveSize("a".into()),
                Violation::OutOfFrame("b".into()),
                Violation::NonPositiveSize("b".into()),
                Violation::DuplicateId("b".into()),
            ]
        );
    }

    #[test]
    fn empty_and_bad_frame() {
        let err = validate_layout(Layout::new(Frame::new(0.0, f64::NAN), vec![])).unwrap_err();
        assert!(matches!(err.0[0], Violation::BadFrame { .. }));
        assert_eq!(err.0[1], Violation::EmptyObjects);
    }

    #[test]
    fn nan_coordinates_are_rejected() {
        let layout = Layout::new(frame100(), vec![LayoutObject::new("n", f64::NAN, 0.0, 1.0, 1.0)]);
        assert_eq!(
            validate_layout(layout).unwrap_err().0,
            vec![Violation::OutOfFrame("n".into())]
        );
    }

    #[test]
    fn objects_may_touch_frame_edges() {
        let layout = Layout::new(frame100(), vec![LayoutObject::new("o1", 0.0, 0.0, 100.0, 100.0)]);
        assert!(validate_layout(layout).is_ok());
    }

    #[test]
    fn half_pixel_center_for_odd_frames() {
        let f = Frame::new(101.0, 75.0);
        assert_eq!(f.center_x(), 50.5);
        assert_eq!(f.center_y(), 37.5);
    }
}
