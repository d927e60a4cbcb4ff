//! Ferns of a pattern against a whole text.

use crate::alignment::unweighted_alignment_lv;
use crate::ferns::{restricted_distance_matrix, Fern, PuzzlePiece, Role};
use crate::monge::CostMatrix;
use crate::text::{Cost, Sym, WeightTable, SCALE};

/// Patterns shorter than this many multiples of `κ` get the exact matrix.
const SMALL_FACTOR: usize = 20;

/// How [`grow_fern_traced`] produced its matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FernBranch {
    /// `ed(P, T) > 3κ`: every entry is `k + 1`.
    Trivial,
    /// Shortest paths over the whole augmented grid.
    Exact,
    /// Shortest paths restricted to a diagonal band.
    Banded,
}

/// A Monge `(Δ→Δ, k)`-fern of `(P, T)` with `Δ = min(|T|, ⌊k/SCALE⌋)`.
pub fn grow_fern(p: &[Sym], t: &[Sym], k: Cost, w: &WeightTable) -> Fern {
    grow_fern_traced(p, t, k, w).0
}

/// As [`grow_fern`], also reporting which branch ran.
pub fn grow_fern_traced(p: &[Sym], t: &[Sym], k: Cost, w: &WeightTable) -> (Fern, FernBranch) {
    let (m, n) = (p.len(), t.len());
    let kappa = k.whole_units() as usize;
    let delta = n.min(kappa);
    let fern = |matrix| Fern {
        matrix,
        delta_in: delta,
        delta_out: delta,
        k,
        role: Role::Full,
    };
    if unweighted_alignment_lv(p, t, 3 * kappa).is_none() {
        let m = CostMatrix::filled(delta + 1, delta + 1, k + Cost::from_micros(SCALE));
        return (fern(m), FernBranch::Trivial);
    }
    if m < SMALL_FACTOR * kappa.max(1) {
        let piece = PuzzlePiece::new(p.to_vec(), t.to_vec());
        let m = restricted_distance_matrix(&piece, delta, delta, w).expect("Δ ≤ |T|");
        return (fern(m), FernBranch::Exact);
    }
    (fern(banded_matrix(p, t, delta, 4 * kappa.max(1), w)), FernBranch::Banded)
}

/// Restricted matrix over the band `−r ≤ t − p ≤ |T| − |P| + r`.
///
/// Sources on the top row reach targets to their right by forward paths
/// only; a target to the left of its source costs one back edge per column
/// plus deleting the whole pattern.
pub(crate) fn banded_matrix(p: &[Sym], t: &[Sym], delta: usize, r: usize, w: &WeightTable) -> CostMatrix {
    let (m, n) = (p.len(), t.len());
    let lo = -(r as isize);
    let hi = n as isize - m as isize + r as isize;
    let width = (hi - lo + 1) as usize;
    let first_col = n - delta;
    let dels: Cost = p.iter().map(|&a| w.del(a)).sum();
    let back = w.back_edge();
    let mut data = vec![Cost::INF; (delta + 1) * (delta + 1)];
    let idx = |row: usize, col: usize| (col as isize - row as isize - lo) as usize;
    let mut prev = vec![Cost::INF; width];
    let mut cur = vec![Cost::INF; width];
    for i in 0..=delta {
        prev.iter_mut().for_each(|c| *c = Cost::INF);
        let top = (hi.max(0) as usize).min(n);
        for col in i..=top {
            prev[idx(0, col)] = if col == i { Cost::ZERO } else { prev[idx(0, col - 1)] + w.ins(t[col - 1]) };
        }
        for row in 1..=m {
            let a = p[row - 1];
            let del = w.del(a);
            cur.iter_mut().for_each(|c| *c = Cost::INF);
            let c_lo = (row as isize + lo).max(i as isize) as usize;
            let c_hi = (row as isize + hi).min(n as isize);
            if c_hi >= c_lo as isize {
                for col in c_lo..=c_hi as usize {
                    let x = idx(row, col);
                    let mut v = Cost::INF;
                    if x + 1 < width {
                        v = v.min(prev[x + 1] + del);
                    }
                    if col > i {
                        v = v.min(prev[x] + w.w(a, t[col - 1]));
                        if x > 0 {
                            v = v.min(cur[x - 1] + w.ins(t[col - 1]));
                        }
                    }
                    cur[x] = v;
                }
            }
            std::mem::swap(&mut prev, &mut cur);
        }
        for j in 0..=delta {
            let col = first_col + j;
            data[i * (delta + 1) + j] = if col >= i {
                prev[idx(m, col)]
            } else {
                back.times((i - col) as u64) + dels
            };
        }
    }
    CostMatrix::new(delta + 1, delta + 1, data).expect("square by construction")
}
