//! The band solver: chunking, the unweighted filter, slices and the boosted
//! right-to-left pass with distance-matrix–vector queries.
//!
//! The text is cut into chunks of length about `m + 2k`. A chunk whose
//! unit-cost distance to `P` exceeds `4k` holds no occurrence. Otherwise the
//! optimal unit-cost alignment fixes a band of slices around it, and every
//! alignment of weight at most `k` stays inside that band. The band is
//! swept from the last slice to the first; runs of slices where the
//! alignment matches exactly look the same as in `P`'s own band, so they are
//! crossed with a single oracle query instead of slice by slice.

mod dmvo;
mod slices;
mod sweep;

pub use dmvo::{dmvo_init, dmvo_query, DmvoIndex, DmvoPolicy, DEFAULT_BUDGET, LEAF};
pub use slices::{build_slices, filter_alignment, filter_alignment_with, split_text_chunks, SliceDecomposition};

use rayon::prelude::*;

use crate::alignment::Alignment;
use crate::error::{Error, Result};
use crate::occurrences::{sellers_starts, OccReport};
use crate::text::{Cost, LceIndex, Sym, WeightTable};
use sweep::{Slice, Sweeper};

/// Tuning knobs for [`solve_nk_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NkOptions {
    pub dmvo: DmvoPolicy,
    /// Worker threads for chunks; `0` uses the global pool, `1` runs inline.
    pub threads: usize,
    /// Bytes the oracle may spend on stored matrices.
    pub budget: usize,
}

impl Default for NkOptions {
    fn default() -> Self {
        NkOptions {
            dmvo: DmvoPolicy::Adaptive,
            threads: 0,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Occurrences of `P` in `S` from a sweep over the slices of `al`.
///
/// Requires `m > 4d + 1`, an alignment with at most `d` edits, `⌊k/SCALE⌋ ≤ d`
/// and an oracle built for `P` with the same `d`.
pub fn boosted_occurrences(
    idx: &DmvoIndex,
    p: &[Sym],
    s: &[Sym],
    al: &Alignment,
    d: usize,
    k: Cost,
    w: &WeightTable,
) -> Result<OccReport> {
    let m = p.len();
    if m <= 4 * d + 1 {
        return Err(Error::Precondition(format!("m = {m} must exceed 4d + 1 = {}", 4 * d + 1)));
    }
    if k.whole_units() > d as u64 {
        return Err(Error::Precondition(format!("k = {k} exceeds d = {d}")));
    }
    if idx.d() != d || idx.pattern() != p {
        return Err(Error::Precondition("oracle was built for a different pattern or d".into()));
    }
    let dec = build_slices(p, s, al, d)?;
    let mut sources = vec![Cost::INF; s.len() + 1];
    let mut sw = Sweeper::new(p, s, w);
    let mut qsw = Sweeper::new(p, p, w);
    let (first_center, last_center) = (2 * d + 1, m - 2 * d - 1);
    let center_pure = |i: usize| first_center <= i && i < last_center && dec.pure[i];
    let mut v = vec![Cost::INF; dec.portal_len(m)];
    let mut i = m;
    while i > 0 {
        if center_pure(i - 1) {
            let mut a = i - 1;
            while a > 0 && center_pure(a - 1) {
                a -= 1;
            }
            v = idx.query_with(&mut qsw, a, i, v)?;
            i = a;
        } else {
            let j = i - 1;
            let sl = Slice {
                lo: dec.lo[j],
                hi: dec.hi[i],
                in_lo: dec.lo[i],
                out_hi: dec.hi[j],
                c0: dec.s[j],
                c1: dec.s[i],
            };
            v = sw.slice(sl, &v, true, Some(&mut sources));
            i = j;
        }
    }
    Ok(OccReport::Starts(
        sources.into_iter().enumerate().filter(|&(_, c)| c <= k).collect(),
    ))
}

/// All `(k, w)`-occurrences of `P` in `T` with their minimum distances.
pub fn solve_nk(p: &[Sym], t: &[Sym], k: Cost, w: &WeightTable) -> OccReport {
    solve_nk_with(p, t, k, w, &NkOptions::default())
}

/// The same pipeline with every slice crossed directly (no oracle matrices).
pub fn solve_banded(p: &[Sym], t: &[Sym], k: Cost, w: &WeightTable) -> OccReport {
    let opts = NkOptions {
        dmvo: DmvoPolicy::Never,
        ..NkOptions::default()
    };
    solve_nk_with(p, t, k, w, &opts)
}

pub fn solve_nk_with(p: &[Sym], t: &[Sym], k: Cost, w: &WeightTable, opts: &NkOptions) -> OccReport {
    let (m, n) = (p.len(), t.len());
    if m == 0 {
        return OccReport::Starts((0..=n).map(|i| (i, Cost::ZERO)).collect());
    }
    let kappa = (k.whole_units() as usize).max(1);
    let d = 4 * kappa;
    let chunks = split_text_chunks(n, m, kappa);
    let sep = p.iter().chain(t).copied().max().unwrap_or(0) + 1;
    let mut concat = Vec::with_capacity(m + n + 2);
    concat.extend_from_slice(p);
    concat.push(sep);
    concat.extend_from_slice(t);
    concat.push(sep + 1);
    let lce = LceIndex::new(&concat);
    let boosted = m > 4 * d + 1;
    let idx = boosted.then(|| DmvoIndex::new(p, d, w, opts.dmvo, opts.budget).expect("d ≥ 4"));

    let run = |&(c, e): &(usize, usize)| -> Vec<(usize, Cost)> {
        let s = &t[c..e];
        let oracle = |i: usize, j: usize| {
            if i >= m || j >= s.len() {
                0
            } else {
                lce.lce(i, m + 1 + c + j).min(m - i).min(s.len() - j)
            }
        };
        let Some(al) = filter_alignment_with(p, s, kappa, oracle).expect("chunks are at most m + 2κ long") else {
            return Vec::new();
        };
        let report = match &idx {
            Some(idx) => boosted_occurrences(idx, p, s, &al, d, k, w).expect("preconditions hold per chunk"),
            None => sellers_starts(p, s, k, w),
        };
        report.to_starts().into_iter().map(|(i, dist)| (c + i, dist)).collect()
    };

    let found: Vec<Vec<(usize, Cost)>> = match opts.threads {
        1 => chunks.iter().map(run).collect(),
        0 => chunks.par_iter().map(run).collect(),
        nt => match rayon::ThreadPoolBuilder::new().num_threads(nt).build() {
            Ok(pool) => pool.install(|| chunks.par_iter().map(run).collect()),
            Err(_) => chunks.iter().map(run).collect(),
        },
    };
    OccReport::from_starts(found.into_iter().flatten())
}
