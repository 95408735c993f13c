//! The five component layout measures and their aggregate.
//!
//! Every score lies in `[0, 1]`, 1 being the most ordered layout. Any ratio
//! whose denominator is zero evaluates to 0 ("no asymmetry detected"), so a
//! single centered object scores 1 everywhere.

use serde::Serialize;
use thiserror::Error;

use crate::layout::{check_layout, Layout, ValidationErrors};
use crate::partition::{quadrant_partition, split_at_horizontal_axis, split_at_vertical_axis};
use crate::partition::{Quadrant, Region, Side};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricsError {
    #[error("invalid layout: {0}")]
    Invalid(#[from] ValidationErrors),
    #[error("component {index} is {value}, expected a value in [0, 1]")]
    ComponentOutOfRange { index: usize, value: f64 },
}

pub type Result<T> = std::result::Result<T, MetricsError>;

/// Values keyed by quadrant, serialized as `{"UL":..,"UR":..,"LL":..,"LR":..}`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct PerQuadrant<T> {
    #[serde(rename = "UL")]
    pub ul: T,
    #[serde(rename = "UR")]
    pub ur: T,
    #[serde(rename = "LL")]
    pub ll: T,
    #[serde(rename = "LR")]
    pub lr: T,
}

impl<T: Copy> PerQuadrant<T> {
    pub fn from_array(a: [T; 4]) -> Self {
        Self {
            ul: a[0],
            ur: a[1],
            ll: a[2],
            lr: a[3],
        }
    }

    pub fn to_array(&self) -> [T; 4] {
        [self.ul, self.ur, self.ll, self.lr]
    }

    pub fn get(&self, q: Quadrant) -> T {
        self.to_array()[q.index()]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Balance {
    pub score: f64,
    /// Signed left/right weight difference, positive when the left is heavier.
    pub vertical: f64,
    /// Signed top/bottom weight difference, positive when the top is heavier.
    pub horizontal: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Equilibrium {
    pub score: f64,
    /// Signed center-of-mass offset, in half frame widths.
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Symmetry {
    pub score: f64,
    pub vertical: f64,
    pub horizontal: f64,
    pub radial: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sequence {
    pub score: f64,
    /// Reading-pattern ranks: UL 4, UR 3, LL 2, LR 1.
    pub reading_order: PerQuadrant<u8>,
    /// Ranks by visual weight, 4 for the heaviest quadrant.
    pub weight_order: PerQuadrant<u8>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rhythm {
    pub score: f64,
    pub x: f64,
    pub y: f64,
    pub area: f64,
}

/// Sums over the partition pieces that fall in one quadrant. Distances are
/// measured from piece centers to the frame center lines.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct QuadrantSums {
    pub count: usize,
    pub area: f64,
    pub x_distance: f64,
    pub y_distance: f64,
    pub heights: f64,
    pub widths: f64,
    pub slope: f64,
    pub radial_distance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct QuadrantStats {
    pub quadrants: [QuadrantSums; 4],
}

impl QuadrantStats {
    pub fn get(&self, q: Quadrant) -> &QuadrantSums {
        &self.quadrants[q.index()]
    }

    pub fn total_area(&self) -> f64 {
        self.quadrants.iter().map(|s| s.area).sum()
    }

    fn family(&self, f: impl Fn(&QuadrantSums) -> f64) -> [f64; 4] {
        [0, 1, 2, 3].map(|i| f(&self.quadrants[i]))
    }
}

/// Everything "Count Aesthetics Value" produces for one layout.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureReport {
    pub balance: Balance,
    pub equilibrium: Equilibrium,
    pub symmetry: Symmetry,
    pub sequence: Sequence,
    pub rhythm: Rhythm,
    pub aesthetic_value: f64,
}

impl MeasureReport {
    /// The five component scores in presentation order.
    pub fn components(&self) -> [f64; 5] {
        [
            self.balance.score,
            self.equilibrium.score,
            self.symmetry.score,
            self.sequence.score,
            self.rhythm.score,
        ]
    }
}

fn ratio(num: f64, den: f64) -> f64 {
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

fn normalize(values: [f64; 4]) -> [f64; 4] {
    let max = values.iter().copied().fold(0.0, f64::max);
    values.map(|v| ratio(v, max))
}

fn signed_weight_difference(first: f64, second: f64) -> f64 {
    ratio(first - second, first.max(second))
}

pub fn balance(layout: &Layout) -> Result<Balance> {
    check_layout(layout)?;
    Ok(balance_unchecked(layout))
}

fn balance_unchecked(layout: &Layout) -> Balance {
    let x_c = layout.frame.center_x();
    let y_c = layout.frame.center_y();
    let (mut left, mut right, mut top, mut bottom) = (0.0, 0.0, 0.0, 0.0);
    for obj in &layout.objects {
        for piece in split_at_vertical_axis(obj, x_c) {
            match piece.region {
                Region::Side(Side::Left) => left += piece.area() * (x_c - piece.rect.center_x()),
                _ => right += piece.area() * (piece.rect.center_x() - x_c),
            }
        }
        for piece in split_at_horizontal_axis(obj, y_c) {
            match piece.region {
                Region::Side(Side::Top) => top += piece.area() * (y_c - piece.rect.center_y()),
                _ => bottom += piece.area() * (piece.rect.center_y() - y_c),
            }
        }
    }
    let vertical = signed_weight_difference(left, right);
    let horizontal = signed_weight_difference(top, bottom);
    Balance {
        score: 1.0 - (vertical.abs() + horizontal.abs()) / 2.0,
        vertical,
        horizontal,
    }
}

pub fn equilibrium(layout: &Layout) -> Result<Equilibrium> {
    check_layout(layout)?;
    Ok(equilibrium_unchecked(layout))
}

fn equilibrium_unchecked(layout: &Layout) -> Equilibrium {
    let x_c = layout.frame.center_x();
    let y_c = layout.frame.center_y();
    let mut total = 0.0;
    let mut moment_x = 0.0;
    let mut moment_y = 0.0;
    for obj in &layout.objects {
        let a = obj.area();
        let (cx, cy) = obj.center();
        total += a;
        moment_x += a * (cx - x_c);
        moment_y += a * (cy - y_c);
    }
    let x = ratio(2.0 * moment_x, layout.frame.width * total);
    let y = ratio(2.0 * moment_y, layout.frame.height * total);
    Equilibrium {
        score: 1.0 - (x.abs() + y.abs()) / 2.0,
        x,
        y,
    }
}

/// Per-quadrant aggregates over the quadrant partition of `layout`.
pub fn quadrant_stats(layout: &Layout) -> QuadrantStats {
    let x_c = layout.frame.center_x();
    let y_c = layout.frame.center_y();
    let eps = 1e-9 * layout.frame.width.max(layout.frame.height);
    let mut stats = QuadrantStats::default();
    for (q, pieces) in quadrant_partition(layout).iter() {
        let s = &mut stats.quadrants[q.index()];
        for p in pieces {
            let dx = (p.rect.center_x() - x_c).abs();
            let dy = (p.rect.center_y() - y_c).abs();
            s.count += 1;
            s.area += p.area();
            s.x_distance += dx;
            s.y_distance += dy;
            s.heights += p.rect.height;
            s.widths += p.rect.width;
            s.slope += dy / dx.max(eps);
            s.radial_distance += dx.hypot(dy);
        }
    }
    stats
}

pub fn symmetry(layout: &Layout) -> Result<Symmetry> {
    check_layout(layout)?;
    Ok(symmetry_unchecked(&quadrant_stats(layout)))
}

fn symmetry_unchecked(stats: &QuadrantStats) -> Symmetry {
    let families = [
        normalize(stats.family(|s| s.x_distance)),
        normalize(stats.family(|s| s.y_distance)),
        normalize(stats.family(|s| s.heights)),
        normalize(stats.family(|s| s.widths)),
        normalize(stats.family(|s| s.slope)),
        normalize(stats.family(|s| s.radial_distance)),
    ];
    let (ul, ur, ll, lr) = (0, 1, 2, 3);
    let direction = |pairs: [(usize, usize); 2]| {
        let total: f64 = families
            .iter()
            .flat_map(|f| pairs.iter().map(move |&(a, b)| (f[a] - f[b]).abs()))
            .sum();
        total / (2 * families.len()) as f64
    };
    let vertical = direction([(ul, ur), (ll, lr)]);
    let horizontal = direction([(ul, ll), (ur, lr)]);
    let radial = direction([(ul, lr), (ur, ll)]);
    Symmetry {
        score: 1.0 - (vertical + horizontal + radial) / 3.0,
        vertical,
        horizontal,
        radial,
    }
}

/// Reading-pattern rank of each quadrant.
pub const READING_ORDER: [u8; 4] = [4, 3, 2, 1];

/// Resolution used when comparing quadrant weights. Weights closer than this
/// fraction of the heaviest quadrant count as a tie.
const WEIGHT_TIE_RESOLUTION: f64 = 1e9;

/// Ranks quadrants 4..1 by `weights`, heaviest first, resolving ties in
/// reading order.
pub fn weight_ranks(weights: [f64; 4]) -> [u8; 4] {
    let max = weights.iter().copied().fold(0.0, f64::max);
    let keys = weights.map(|w| (ratio(w, max) * WEIGHT_TIE_RESOLUTION).round() as i64);
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&a, &b| {
        keys[b]
            .cmp(&keys[a])
            .then(READING_ORDER[b].cmp(&READING_ORDER[a]))
    });
    let mut ranks = [0u8; 4];
    for (pos, &q) in order.iter().enumerate() {
        ranks[q] = 4 - pos as u8;
    }
    ranks
}

pub fn sequence(layout: &Layout) -> Result<Sequence> {
    check_layout(layout)?;
    Ok(sequence_unchecked(&quadrant_stats(layout)))
}

fn sequence_unchecked(stats: &QuadrantStats) -> Sequence {
    let weights = [0, 1, 2, 3].map(|i| f64::from(READING_ORDER[i]) * stats.quadrants[i].area);
    let ranks = weight_ranks(weights);
    let mismatch: u32 = READING_ORDER
        .iter()
        .zip(ranks.iter())
        .map(|(&q, &v)| u32::from(q.abs_diff(v)))
        .sum();
    Sequence {
        score: 1.0 - f64::from(mismatch) / 8.0,
        reading_order: PerQuadrant::from_array(READING_ORDER),
        weight_order: PerQuadrant::from_array(ranks),
    }
}

pub fn rhythm(layout: &Layout) -> Result<Rhythm> {
    check_layout(layout)?;
    Ok(rhythm_unchecked(&quadrant_stats(layout)))
}

fn rhythm_unchecked(stats: &QuadrantStats) -> Rhythm {
    let mean = |f: fn(&QuadrantSums) -> f64| {
        normalize(stats.family(|s| {
            if s.count == 0 {
                0.0
            } else {
                f(s) / s.count as f64
            }
        }))
    };
    let spread = |v: [f64; 4]| {
        let mut total = 0.0;
        for a in 0..4 {
            for b in a + 1..4 {
                total += (v[a] - v[b]).abs();
            }
        }
        total / 6.0
    };
    let x = spread(mean(|s| s.x_distance));
    let y = spread(mean(|s| s.y_distance));
    let area = spread(mean(|s| s.area));
    Rhythm {
        score: 1.0 - (x + y + area) / 3.0,
        x,
        y,
        area,
    }
}

/// Order-and-complexity: the mean of the five component scores.
pub fn aesthetic_value(components: [f64; 5]) -> Result<f64> {
    if let Some((index, &value)) = components
        .iter()
        .enumerate()
        .find(|(_, v)| !(0.0..=1.0).contains(*v))
    {
        return Err(MetricsError::ComponentOutOfRange { index, value });
    }
    Ok(components.iter().sum::<f64>() / 5.0)
}

/// Computes every measure for a layout in one pass.
pub fn measure(layout: &Layout) -> Result<MeasureReport> {
    check_layout(layout)?;
    let stats = quadrant_stats(layout);
    let balance = balance_unchecked(layout);
    let equilibrium = equilibrium_unchecked(layout);
    let symmetry = symmetry_unchecked(&stats);
    let sequence = sequence_unchecked(&stats);
    let rhythm = rhythm_unchecked(&stats);
    let aesthetic_value = aesthetic_value([
        balance.score,
        equilibrium.score,
        symmetry.score,
        sequence.score,
        rhythm.score,
    ])?;
    Ok(MeasureReport {
        balance,
        equilibrium,
        symmetry,
        sequence,
        rhythm,
        aesthetic_value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::{Frame, LayoutObject, Violation};

    fn layout(objects: &[(f64, f64, f64, f64)]) -> Layout {
        Layout::new(
            Frame::new(100.0, 100.0),
            objects
                .iter()
                .enumerate()
                .map(|(i, &(x, y, w, h))| LayoutObject::new(format!("o{}", i + 1), x, y, w, h))
                .collect(),
        )
    }

    fn centered() -> Layout {
        layout(&[(40.0, 40.0, 20.0, 20.0)])
    }

    fn corner() -> Layout {
        layout(&[(10.0, 10.0, 20.0, 20.0)])
    }

    fn mirrored_pair() -> Layout {
        layout(&[(10.0, 40.0, 20.0, 20.0), (70.0, 40.0, 20.0, 20.0)])
    }

    #[test]
    fn balance_examples() {
        assert_eq!(balance(&centered()).unwrap().score, 1.0);
        let b = balance(&corner()).unwrap();
        assert_eq!((b.score, b.vertical, b.horizontal), (0.0, 1.0, 1.0));
        assert_eq!(balance(&mirrored_pair()).unwrap().score, 1.0);
    }

    #[test]
    fn balance_sign_follows_heavier_side() {
        let b = balance(&layout(&[(70.0, 70.0, 20.0, 20.0)])).unwrap();
        assert_eq!((b.vertical, b.horizontal), (-1.0, -1.0));
    }

    #[test]
    fn equilibrium_examples() {
        assert_eq!(equilibrium(&centered()).unwrap().score, 1.0);
        let e = equilibrium(&corner()).unwrap();
        assert!((e.score - 0.4).abs() < 1e-15);
        assert!((e.x + 0.6).abs() < 1e-15 && (e.y + 0.6).abs() < 1e-15);
        assert_eq!(equilibrium(&mirrored_pair()).unwrap().score, 1.0);
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(symmetry(&centered()).unwrap().score, 1.0);
        let s = symmetry(&corner()).unwrap();
        assert_eq!((s.score, s.vertical, s.horizontal, s.radial), (0.5, 0.5, 0.5, 0.5));
        assert_eq!(symmetry(&mirrored_pair()).unwrap().score, 1.0);
    }

    #[test]
    fn sequence_examples() {
        assert_eq!(sequence(&centered()).unwrap().score, 1.0);
        let lr = sequence(&layout(&[(70.0, 70.0, 20.0, 20.0)])).unwrap();
        assert_eq!(lr.score, 0.25);
        assert_eq!(lr.weight_order.to_array(), [3, 2, 1, 4]);
        assert_eq!(sequence(&corner()).unwrap().score, 1.0);
    }

    #[test]
    fn weight_ranks_break_ties_in_reading_order() {
        assert_eq!(weight_ranks([0.0; 4]), [4, 3, 2, 1]);
        assert_eq!(weight_ranks([1.0, 2.0, 2.0, 0.0]), [2, 4, 3, 1]);
        // sub-resolution differences count as ties
        assert_eq!(weight_ranks([1.0, 1.0 + 1e-13, 0.0, 0.0]), [4, 3, 2, 1]);
    }

    #[test]
    fn rhythm_examples() {
        assert_eq!(rhythm(&centered()).unwrap().score, 1.0);
        let r = rhythm(&corner()).unwrap();
        assert_eq!((r.score, r.x, r.y, r.area), (0.5, 0.5, 0.5, 0.5));
        assert_eq!(rhythm(&mirrored_pair()).unwrap().score, 1.0);
    }

    #[test]
    fn aesthetic_value_is_the_mean() {
        let av = aesthetic_value([0.9445, 0.9991, 0.9013, 1.0, 0.9085]).unwrap();
        assert!((av - 0.95068).abs() < 1e-12);
        let av = aesthetic_value([0.3296, 0.9859, 0.3421, 0.5, 0.3134]).unwrap();
        assert!((av - 0.4942).abs() < 1e-12);
        assert_eq!(aesthetic_value([1.0; 5]).unwrap(), 1.0);
    }

    #[test]
    fn aesthetic_value_rejects_out_of_range() {
        assert_eq!(
            aesthetic_value([1.0, 1.2, 0.0, 0.0, 0.0]),
            Err(MetricsError::ComponentOutOfRange { index: 1, value: 1.2 })
        );
        assert!(aesthetic_value([f64::NAN, 0.0, 0.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn measure_corner_fixture() {
        let r = measure(&corner()).unwrap();
        assert_eq!(r.components(), [0.0, r.equilibrium.score, 0.5, 1.0, 0.5]);
        assert!((r.aesthetic_value - 0.48).abs() < 1e-15);
    }

    #[test]
    fn empty_layout_is_an_error() {
        let err = measure(&layout(&[])).unwrap_err();
        assert_eq!(err, MetricsError::Invalid(ValidationErrors(vec![Violation::EmptyObjects])));
        assert!(balance(&layout(&[])).is_err());
        assert!(rhythm(&layout(&[])).is_err());
    }

    #[test]
    fn quadrant_stats_conserve_area() {
        let l = layout(&[(10.0, 40.0, 55.0, 21.0), (33.0, 3.0, 40.0, 60.0)]);
        let stats = quadrant_stats(&l);
        assert!((stats.total_area() - l.total_area()).abs() < 1e-9);
        assert_eq!(stats.get(Quadrant::UL).count, 2);
    }
}
