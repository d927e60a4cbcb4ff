//! Right-to-left propagation of distance-to-target vectors through slices.
//!
//! A vector on portal `V_{i+1}` holds, for each of its vertices, the cost of
//! reaching a target from there. Propagating through slice `i` yields the
//! same quantity on `V_i`. The augmented back edges (cost `W+1`) are honored
//! inside each slice: within a column a path moves either only down or only
//! up, so one pass in each direction suffices.

use crate::text::{Cost, Sym, WeightTable};

/// Geometry of one slice.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Slice {
    /// Pattern rows `[lo, hi]` of the slice.
    pub lo: usize,
    pub hi: usize,
    /// First row of the incoming (right) portal.
    pub in_lo: usize,
    /// Last row of the outgoing (left) portal.
    pub out_hi: usize,
    /// Text columns `[c0, c1]`.
    pub c0: usize,
    pub c1: usize,
}

/// Reusable propagation state.
pub(crate) struct Sweeper<'a> {
    p: &'a [Sym],
    s: &'a [Sym],
    w: &'a WeightTable,
    back: Cost,
    /// `w(P[x], ε)` per row.
    dels: Vec<Cost>,
    col: Vec<Cost>,
    next: Vec<Cost>,
}

impl<'a> Sweeper<'a> {
    pub fn new(p: &'a [Sym], s: &'a [Sym], w: &'a WeightTable) -> Self {
        Sweeper {
            p,
            s,
            w,
            back: w.back_edge(),
            dels: p.iter().map(|&a| w.del(a)).collect(),
            col: Vec::new(),
            next: Vec::new(),
        }
    }

    fn vertical(&self, col: &mut [Cost], lo: usize) {
        let len = col.len();
        let dels = &self.dels[lo..];
        for x in (0..len - 1).rev() {
            let v = col[x + 1] + dels[x];
            if v < col[x] {
                col[x] = v;
            }
        }
        for x in 1..len {
            let v = col[x - 1] + self.back;
            if v < col[x] {
                col[x] = v;
            }
        }
    }

    /// Propagates `v` (indexed from `sl.in_lo`) through the slice and returns
    /// the vector on rows `[sl.lo, sl.out_hi]` of column `c0`.
    ///
    /// When `targets` is set, row `m` is a zero-cost target in every column.
    /// When `sources` is given, the row-0 value of every column `t` is folded
    /// into `sources[t]`.
    pub fn slice(&mut self, sl: Slice, v: &[Cost], targets: bool, mut sources: Option<&mut [Cost]>) -> Vec<Cost> {
        let m = self.p.len();
        let rows = sl.hi - sl.lo + 1;
        let mut col = std::mem::take(&mut self.col);
        let mut next = std::mem::take(&mut self.next);
        col.clear();
        col.resize(rows, Cost::INF);
        let off = sl.in_lo - sl.lo;
        col[off..off + v.len()].copy_from_slice(v);
        let target_row = (targets && sl.hi == m).then_some(rows - 1);
        if let Some(r) = target_row {
            col[r] = Cost::ZERO;
        }
        self.vertical(&mut col, sl.lo);
        let mut record = |t: usize, col: &[Cost]| {
            if let Some(src) = sources.as_deref_mut() {
                if sl.lo == 0 && col[0] < src[t] {
                    src[t] = col[0];
                }
            }
        };
        record(sl.c1, &col);
        next.resize(rows, Cost::INF);
        let pat = &self.p[sl.lo..sl.hi];
        let dels = &self.dels[sl.lo..];
        for t in (sl.c0..sl.c1).rev() {
            let c = self.s[t];
            let ins = self.w.ins(c);
            next[rows - 1] = col[rows - 1] + ins;
            for x in (0..rows - 1).rev() {
                let v = (col[x] + ins).min(col[x + 1] + self.w.w(pat[x], c)).min(next[x + 1] + dels[x]);
                next[x] = v;
            }
            if let Some(r) = target_row {
                next[r] = Cost::ZERO;
            }
            for x in 1..rows {
                let v = next[x - 1] + self.back;
                if v < next[x] {
                    next[x] = v;
                }
            }
            std::mem::swap(&mut col, &mut next);
            record(t, &col);
        }
        let out = col[..sl.out_hi - sl.lo + 1].to_vec();
        self.col = col;
        self.next = next;
        out
    }
}
