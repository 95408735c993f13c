//! Ordering competing layouts by aesthetic value.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedEntry {
    pub id: String,
    #[serde(rename = "aesthetic_value")]
    pub value: f64,
    pub rank: usize,
}

/// Sorts entries by value, highest first, and assigns competition ranks:
/// equal values share a rank and the next rank skips accordingly. Entries
/// with equal values keep their input order.
pub fn rank<S: Into<String>>(entries: impl IntoIterator<Item = (S, f64)>) -> Vec<RankedEntry> {
    let mut sorted: Vec<(String, f64)> = entries.into_iter().map(|(id, v)| (id.into(), v)).collect();
    sorted.sort_by(|a, b| b.1.total_cmp(&a.1));

    let mut out: Vec<RankedEntry> = Vec::with_capacity(sorted.len());
    for (pos, (id, value)) in sorted.into_iter().enumerate() {
        let rank = match out.last() {
            Some(prev) if prev.value == value => prev.rank,
            _ => pos + 1,
        };
        out.push(RankedEntry { id, value, rank });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ranks(values: &[f64]) -> Vec<(String, usize)> {
        rank(values.iter().enumerate().map(|(i, &v)| (format!("g{}", i + 1), v)))
            .into_iter()
            .map(|e| (e.id, e.rank))
            .collect()
    }

    #[test]
    fn distinct_values() {
        assert_eq!(
            ranks(&[0.4858, 0.9507, 0.6830, 0.9259]),
            vec![("g2".into(), 1), ("g4".into(), 2), ("g3".into(), 3), ("g1".into(), 4)]
        );
    }

    #[test]
    fn single_entry() {
        assert_eq!(ranks(&[0.7]), vec![("g1".into(), 1)]);
    }

    #[test]
    fn ties_share_rank_and_skip() {
        let r: Vec<usize> = ranks(&[0.5, 0.5, 0.4]).into_iter().map(|(_, r)| r).collect();
        assert_eq!(r, [1, 1, 3]);
    }

    #[test]
    fn empty_input() {
        assert!(rank(Vec::<(String, f64)>::new()).is_empty());
    }
}
