//! Occurrence reports, baselines and the fern-based problem solvers.
//!
//! A start `i ∈ [0, |T|]` is a `(k, w)`-occurrence of `P` when some fragment
//! `T[i..j)` has `ed^w(P → T[i..j)) ≤ k`; the empty fragment at `|T|` counts.

mod baseline;
mod fern;
mod list;

pub use baseline::{bf_occurrences, min_end, sellers_starts, unweighted_occ, BF_LIMIT};
pub use fern::{grow_fern, grow_fern_traced, FernBranch};
pub use list::{list_all_occs, verify};

use std::collections::BTreeMap;

use crate::text::Cost;

/// Sorted occurrence output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OccReport {
    /// `(start, min distance)` pairs, strictly increasing by start.
    Starts(Vec<(usize, Cost)>),
    /// `(start, end, distance)` triples, lexicographically increasing.
    Triples(Vec<(usize, usize, Cost)>),
}

impl OccReport {
    /// Collects starts, keeping the minimum distance of repeated ones.
    pub fn from_starts(items: impl IntoIterator<Item = (usize, Cost)>) -> OccReport {
        let mut best: BTreeMap<usize, Cost> = BTreeMap::new();
        for (i, d) in items {
            best.entry(i).and_modify(|c| *c = (*c).min(d)).or_insert(d);
        }
        OccReport::Starts(best.into_iter().collect())
    }

    /// Collects triples, sorted and deduplicated.
    pub fn from_triples(items: impl IntoIterator<Item = (usize, usize, Cost)>) -> OccReport {
        let mut v: Vec<_> = items.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        OccReport::Triples(v)
    }

    /// Projection onto `(start, min distance)` pairs.
    pub fn to_starts(&self) -> Vec<(usize, Cost)> {
        match self {
            OccReport::Starts(s) => s.clone(),
            OccReport::Triples(t) => match OccReport::from_starts(t.iter().map(|&(i, _, d)| (i, d))) {
                OccReport::Starts(s) => s,
                OccReport::Triples(_) => unreachable!(),
            },
        }
    }

    pub fn start_positions(&self) -> Vec<usize> {
        self.to_starts().into_iter().map(|(i, _)| i).collect()
    }

    pub fn len(&self) -> usize {
        match self {
            OccReport::Starts(s) => s.len(),
            OccReport::Triples(t) => t.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Entries whose start lies in `[lo, hi]`.
    pub fn restrict(&self, lo: usize, hi: usize) -> OccReport {
        match self {
            OccReport::Starts(s) => OccReport::Starts(s.iter().copied().filter(|&(i, _)| lo <= i && i <= hi).collect()),
            OccReport::Triples(t) => {
                OccReport::Triples(t.iter().copied().filter(|&(i, _, _)| lo <= i && i <= hi).collect())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_normalization() {
        let r = OccReport::from_starts([(3, Cost::units(2)), (1, Cost::units(1)), (3, Cost::units(1))]);
        assert_eq!(r, OccReport::Starts(vec![(1, Cost::units(1)), (3, Cost::units(1))]));
        let t = OccReport::from_triples([(1, 3, Cost::ZERO), (0, 2, Cost::units(1)), (1, 3, Cost::ZERO)]);
        assert_eq!(t.len(), 2);
        assert_eq!(t.to_starts(), vec![(0, Cost::units(1)), (1, Cost::ZERO)]);
        assert_eq!(t.restrict(1, 5).start_positions(), vec![1]);
        assert!(OccReport::Starts(vec![]).is_empty());
    }
}
