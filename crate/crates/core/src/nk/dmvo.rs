//! Distance-matrix–vector oracle over the self-alignment band of `P`.
//!
//! `G^{P,d}` is the union of the `d`-slices of `P` aligned onto itself: slice
//! `i` spans rows `[i−2d, i+1+2d]` (clamped) and columns `[i, i+1]`. For a
//! range of slices `[l, r)` the portal matrix `D_{l,r}` holds augmented
//! distances from portal `V_l` to portal `V_r`.
//!
//! Slices are grouped into aligned blocks of `LEAF·2^s` slices. A block's
//! matrix is the min-plus product of its two halves, and leaves are filled by
//! one propagation per column. Matrices are built on demand: under the
//! adaptive policy a block is materialized once enough queries have crossed
//! it for the matrix to pay for itself, and only while the memory budget
//! allows; until then queries propagate through it slice by slice.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use rayon::prelude::*;

use super::slices::SliceDecomposition;
use super::sweep::{Slice, Sweeper};
use crate::error::{Error, Result};
use crate::monge::{is_monge, minplus_mat_mat, minplus_mat_vec, CostMatrix};
use crate::text::{Cost, Sym, WeightTable};

/// Slices per leaf block.
pub const LEAF: usize = 8;

/// Default cap on the bytes held by stored matrices.
pub const DEFAULT_BUDGET: usize = 256 << 20;

/// A query span `[l, r)` and, when it is a whole block, its `(level, index)`.
type Piece = (usize, usize, Option<(usize, usize)>);

/// When portal matrices are built.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DmvoPolicy {
    /// Build a block once it has been crossed about `4d+1` times.
    #[default]
    Adaptive,
    /// Build every block up front.
    Eager,
    /// Never build; always propagate slice by slice.
    Never,
}

struct Block {
    l: usize,
    r: usize,
    hits: AtomicUsize,
    matrix: OnceLock<CostMatrix>,
}

/// Portal matrices of `G^{P,d}` for aligned dyadic blocks.
pub struct DmvoIndex {
    p: Vec<Sym>,
    w: WeightTable,
    dec: SliceDecomposition,
    policy: DmvoPolicy,
    threshold: usize,
    budget: usize,
    used: AtomicUsize,
    /// `levels[s][b]` covers slices `[b·LEAF·2^s, (b+1)·LEAF·2^s)`.
    levels: Vec<Vec<Block>>,
}

/// An adaptive index with the default budget.
pub fn dmvo_init(p: &[Sym], d: usize, w: &WeightTable) -> Result<DmvoIndex> {
    DmvoIndex::new(p, d, w, DmvoPolicy::Adaptive, DEFAULT_BUDGET)
}

/// `D_{i,j} ⊕ v`.
pub fn dmvo_query(idx: &DmvoIndex, i: usize, j: usize, v: &[Cost]) -> Result<Vec<Cost>> {
    idx.query(i, j, v)
}

impl DmvoIndex {
    pub fn new(p: &[Sym], d: usize, w: &WeightTable, policy: DmvoPolicy, budget: usize) -> Result<DmvoIndex> {
        if d == 0 {
            return Err(Error::Precondition("d must be at least 1".into()));
        }
        let m = p.len();
        let mut levels = Vec::new();
        let mut span = LEAF;
        while span <= m {
            levels.push(
                (0..m / span)
                    .map(|b| Block {
                        l: b * span,
                        r: (b + 1) * span,
                        hits: AtomicUsize::new(0),
                        matrix: OnceLock::new(),
                    })
                    .collect(),
            );
            span *= 2;
        }
        let idx = DmvoIndex {
            p: p.to_vec(),
            w: w.clone(),
            dec: SliceDecomposition::identity(m, d),
            policy,
            threshold: 4 * d + 1,
            budget,
            used: AtomicUsize::new(0),
            levels,
        };
        if policy == DmvoPolicy::Eager {
            for s in 0..idx.levels.len() {
                (0..idx.levels[s].len()).into_par_iter().for_each(|b| {
                    idx.materialize(s, b);
                });
            }
        }
        Ok(idx)
    }

    pub fn d(&self) -> usize {
        self.dec.d
    }

    pub fn pattern(&self) -> &[Sym] {
        &self.p
    }

    pub fn policy(&self) -> DmvoPolicy {
        self.policy
    }

    /// Rows `[lo, hi]` of portal `V_i`.
    pub fn portal(&self, i: usize) -> (usize, usize) {
        self.dec.portal(i)
    }

    pub fn portal_len(&self, i: usize) -> usize {
        self.dec.portal_len(i)
    }

    /// Stored blocks as `(l, r, D_{l,r})`.
    pub fn stored_blocks(&self) -> Vec<(usize, usize, CostMatrix)> {
        self.levels
            .iter()
            .flatten()
            .filter_map(|b| b.matrix.get().map(|m| (b.l, b.r, m.clone())))
            .collect()
    }

    fn slice(&self, i: usize) -> Slice {
        let dec = &self.dec;
        Slice {
            lo: dec.lo[i],
            hi: dec.hi[i + 1],
            in_lo: dec.lo[i + 1],
            out_hi: dec.hi[i],
            c0: i,
            c1: i + 1,
        }
    }

    /// Propagates `v` from `V_r` to `V_l` slice by slice.
    fn propagate(&self, sw: &mut Sweeper<'_>, l: usize, r: usize, mut v: Vec<Cost>) -> Vec<Cost> {
        for i in (l..r).rev() {
            v = sw.slice(self.slice(i), &v, false, None);
        }
        v
    }

    /// `D_{l,r}` by one propagation per column.
    fn direct_matrix(&self, l: usize, r: usize) -> CostMatrix {
        let mut sw = Sweeper::new(&self.p, &self.p, &self.w);
        let (rows, cols) = (self.portal_len(l), self.portal_len(r));
        let mut data = vec![Cost::INF; rows * cols];
        for b in 0..cols {
            let mut v = vec![Cost::INF; cols];
            v[b] = Cost::ZERO;
            let out = self.propagate(&mut sw, l, r, v);
            for (a, &x) in out.iter().enumerate() {
                data[a * cols + b] = x;
            }
        }
        CostMatrix::new(rows, cols, data).expect("portal sizes")
    }

    fn matrix_bytes(&self, b: &Block) -> usize {
        self.portal_len(b.l) * self.portal_len(b.r) * std::mem::size_of::<Cost>()
    }

    /// Builds and stores block `(s, b)` if the budget allows.
    fn materialize(&self, s: usize, b: usize) -> Option<&CostMatrix> {
        let block = &self.levels[s][b];
        if let Some(m) = block.matrix.get() {
            return Some(m);
        }
        let bytes = self.matrix_bytes(block);
        if self.used.fetch_add(bytes, Ordering::Relaxed) + bytes > self.budget {
            self.used.fetch_sub(bytes, Ordering::Relaxed);
            return None;
        }
        let built = if s == 0 {
            self.direct_matrix(block.l, block.r)
        } else {
            let (lb, rb) = (&self.levels[s - 1][2 * b], &self.levels[s - 1][2 * b + 1]);
            let (lo, ro);
            let lm = match self.materialize(s - 1, 2 * b) {
                Some(m) => m,
                None => {
                    lo = self.direct_matrix(lb.l, lb.r);
                    &lo
                }
            };
            let rm = match self.materialize(s - 1, 2 * b + 1) {
                Some(m) => m,
                None => {
                    ro = self.direct_matrix(rb.l, rb.r);
                    &ro
                }
            };
            minplus_mat_mat(lm, rm).expect("portal sizes agree")
        };
        debug_assert!(is_monge(&built));
        let mut lost = true;
        block.matrix.get_or_init(|| {
            lost = false;
            built
        });
        if lost {
            // another thread stored it first
            self.used.fetch_sub(bytes, Ordering::Relaxed);
        }
        block.matrix.get()
    }

    /// `D_{block} ⊕ v`, recursing into halves when the block is not stored.
    fn apply_block(&self, sw: &mut Sweeper<'_>, s: usize, b: usize, v: Vec<Cost>) -> Vec<Cost> {
        let block = &self.levels[s][b];
        let stored = match block.matrix.get() {
            Some(m) => Some(m),
            None if self.policy == DmvoPolicy::Adaptive => {
                let hits = block.hits.fetch_add(1, Ordering::Relaxed) + 1;
                if hits >= self.threshold {
                    self.materialize(s, b)
                } else {
                    None
                }
            }
            None => None,
        };
        match stored {
            Some(m) => minplus_mat_vec(m, &v).expect("portal sizes agree"),
            None if s == 0 => self.propagate(sw, block.l, block.r, v),
            None => {
                let v = self.apply_block(sw, s - 1, 2 * b + 1, v);
                self.apply_block(sw, s - 1, 2 * b, v)
            }
        }
    }

    /// `D_{i,j} ⊕ v` for `v` indexed by the rows of `V_j`.
    pub fn query(&self, i: usize, j: usize, v: &[Cost]) -> Result<Vec<Cost>> {
        let mut sw = Sweeper::new(&self.p, &self.p, &self.w);
        self.query_with(&mut sw, i, j, v.to_vec())
    }

    pub(crate) fn query_with(&self, sw: &mut Sweeper<'_>, i: usize, j: usize, v: Vec<Cost>) -> Result<Vec<Cost>> {
        let m = self.p.len();
        if i > j || j > m {
            return Err(Error::Range(format!("slice range [{i}, {j}) outside [0, {m}]")));
        }
        if v.len() != self.portal_len(j) {
            return Err(Error::Dimension {
                expected: self.portal_len(j),
                found: v.len(),
            });
        }
        // canonical pieces from left to right: single slices or whole blocks
        let mut pieces: Vec<Piece> = Vec::new();
        let mut pos = i;
        while pos < j {
            let mut best = None;
            for s in (0..self.levels.len()).rev() {
                let span = LEAF << s;
                if pos.is_multiple_of(span) && pos + span <= j {
                    best = Some((s, pos / span));
                    break;
                }
            }
            match best {
                Some((s, b)) => {
                    let span = LEAF << s;
                    pieces.push((pos, pos + span, Some((s, b))));
                    pos += span;
                }
                None => {
                    pieces.push((pos, pos + 1, None));
                    pos += 1;
                }
            }
        }
        let mut v = v;
        for &(l, r, block) in pieces.iter().rev() {
            v = match block {
                Some((s, b)) if self.policy != DmvoPolicy::Never => self.apply_block(sw, s, b, v),
                _ => self.propagate(sw, l, r, v),
            };
        }
        Ok(v)
    }

    /// `D_{l,r}` computed directly (no storage).
    pub fn portal_matrix(&self, l: usize, r: usize) -> Result<CostMatrix> {
        if l > r || r > self.p.len() {
            return Err(Error::Range(format!("slice range [{l}, {r}) outside [0, {}]", self.p.len())));
        }
        Ok(self.direct_matrix(l, r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::SubGrid;
    use crate::monge::minplus_mat_vec_naive;
    use crate::text::Alphabet;
    use proptest::prelude::*;

    fn table() -> WeightTable {
        WeightTable::parse("a\tb\t1.5\nc\tEPS\t2\nEPS\ta\t2.5\nb\tc\t4\n", &Alphabet::new(['a', 'b', 'c'])).unwrap()
    }

    /// Explicit `G^{P,d}` restricted to slices `[l, r)`.
    fn band(p: &[Sym], d: usize, w: &WeightTable, l: usize, r: usize) -> SubGrid {
        let dec = SliceDecomposition::identity(p.len(), d);
        let mut g = SubGrid::new();
        for i in l..r {
            g.add_rect(p, p, w, dec.lo[i], dec.hi[i + 1], i, i + 1);
        }
        g
    }

    fn check_against_dijkstra(p: &[Sym], d: usize, w: &WeightTable, l: usize, r: usize, got: &CostMatrix) {
        let (lo_l, hi_l) = SliceDecomposition::identity(p.len(), d).portal(l);
        let (lo_r, hi_r) = SliceDecomposition::identity(p.len(), d).portal(r);
        let g = band(p, d, w, l, r);
        for a in lo_l..=hi_l {
            let dist = g.distances_from((a, l));
            for b in lo_r..=hi_r {
                assert_eq!(got.get(a - lo_l, b - lo_r), dist[&(b, r)], "D[{l},{r}] ({a},{b})");
            }
        }
    }

    #[test]
    fn eager_blocks_match_dijkstra() {
        let w = table();
        let p: Vec<Sym> = (0..40).map(|i| 1 + ((i * i + 3 * i) % 3) as Sym).collect();
        let idx = DmvoIndex::new(&p, 2, &w, DmvoPolicy::Eager, DEFAULT_BUDGET).unwrap();
        let stored = idx.stored_blocks();
        assert_eq!(stored.len(), 5 + 2 + 1);
        for (l, r, m) in &stored {
            assert!(is_monge(m));
            check_against_dijkstra(&p, 2, &w, *l, *r, m);
        }
        // composition through an interior portal
        let (a, b, c) = (3, 17, 29);
        let left = idx.portal_matrix(a, b).unwrap();
        let right = idx.portal_matrix(b, c).unwrap();
        assert_eq!(minplus_mat_mat(&left, &right).unwrap(), idx.portal_matrix(a, c).unwrap());
    }

    #[test]
    fn wide_band_is_whole_grid() {
        let w = table();
        let p: Vec<Sym> = vec![1, 2, 3, 1, 2];
        let idx = DmvoIndex::new(&p, 5, &w, DmvoPolicy::Never, 0).unwrap();
        let full = idx.portal_matrix(0, 5).unwrap();
        let mut g = SubGrid::new();
        g.add_rect(&p, &p, &w, 0, 5, 0, 5);
        for a in 0..=5 {
            let dist = g.distances_from((a, 0));
            for b in 0..=5 {
                assert_eq!(full.get(a, b), dist[&(b, 5)]);
            }
        }
    }

    #[test]
    fn query_errors() {
        let w = table();
        let p: Vec<Sym> = vec![1; 20];
        let idx = dmvo_init(&p, 1, &w).unwrap();
        assert!(matches!(idx.query(5, 3, &[]), Err(Error::Range(_))));
        assert!(matches!(idx.query(3, 5, &[Cost::ZERO]), Err(Error::Dimension { .. })));
        let v = vec![Cost::units(1); idx.portal_len(4)];
        assert_eq!(idx.query(4, 4, &v).unwrap(), v);
        assert!(DmvoIndex::new(&p, 0, &w, DmvoPolicy::Never, 0).is_err());
    }

    #[test]
    fn adaptive_materializes_after_threshold() {
        let w = table();
        let p: Vec<Sym> = (0..64).map(|i| 1 + (i % 3) as Sym).collect();
        let idx = dmvo_init(&p, 1, &w).unwrap();
        let v = vec![Cost::ZERO; idx.portal_len(16)];
        let want = minplus_mat_vec_naive(&idx.portal_matrix(0, 16).unwrap(), &v).unwrap();
        for _ in 0..idx.threshold + 1 {
            assert_eq!(idx.query(0, 16, &v).unwrap(), want);
        }
        assert!(idx.stored_blocks().iter().any(|&(l, r, _)| (l, r) == (0, 16)));
        let tight = DmvoIndex::new(&p, 1, &w, DmvoPolicy::Adaptive, 0).unwrap();
        for _ in 0..tight.threshold + 1 {
            assert_eq!(tight.query(0, 16, &v).unwrap(), want);
        }
        assert!(tight.stored_blocks().is_empty());
    }

    proptest! {
        #[test]
        fn queries_match_naive_products(
            p in prop::collection::vec(1u32..=3, 1..50),
            d in 1usize..4,
            ij in (0usize..50, 0usize..50),
            vals in prop::collection::vec(0u64..9_000_000, 64),
            policy in prop_oneof![Just(DmvoPolicy::Eager), Just(DmvoPolicy::Never), Just(DmvoPolicy::Adaptive)],
        ) {
            let w = table();
            let m = p.len();
            let (i, j) = (ij.0 % (m + 1), ij.1 % (m + 1));
            let (i, j) = (i.min(j), i.max(j));
            let idx = DmvoIndex::new(&p, d, &w, policy, DEFAULT_BUDGET).unwrap();
            let v: Vec<Cost> = (0..idx.portal_len(j)).map(|x| Cost::from_micros(vals[x % 64])).collect();
            let direct = idx.portal_matrix(i, j).unwrap();
            prop_assert!(is_monge(&direct));
            let want = minplus_mat_vec_naive(&direct, &v).unwrap();
            prop_assert_eq!(idx.query(i, j, &v).unwrap(), want);
            // monotone under domination
            let bigger: Vec<Cost> = v.iter().map(|&x| x + Cost::units(1)).collect();
            let out = idx.query(i, j, &bigger).unwrap();
            prop_assert!(out.iter().zip(idx.query(i, j, &v).unwrap()).all(|(a, b)| *a >= b));
        }

        #[test]
        fn portal_matrices_match_dijkstra(
            p in prop::collection::vec(1u32..=3, 2..14),
            d in 1usize..3,
            lr in (0usize..14, 0usize..14),
        ) {
            let w = table();
            let m = p.len();
            let (l, r) = (lr.0 % m, lr.1 % m);
            let (l, r) = (l.min(r), l.max(r) + 1);
            let idx = DmvoIndex::new(&p, d, &w, DmvoPolicy::Never, 0).unwrap();
            check_against_dijkstra(&p, d, &w, l, r, &idx.portal_matrix(l, r).unwrap());
        }
    }
}
