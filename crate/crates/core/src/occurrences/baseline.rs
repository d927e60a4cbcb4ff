//! Quadratic reference matchers.

use super::OccReport;
use crate::error::{Error, Result};
use crate::text::{Cost, Sym, WeightTable};

/// Largest `(n+1)²·(m+1)` accepted by [`bf_occurrences`].
pub const BF_LIMIT: u64 = 500_000_000;

/// Sellers DP with a free start column, returning for every `j` the minimum
/// over `i ≤ j` of `ed^w(x → y[i..j))`.
fn sellers_ends(x: &[Sym], y: &[Sym], w: &WeightTable) -> Vec<Cost> {
    let m = x.len();
    let dels: Vec<Cost> = x.iter().map(|&a| w.del(a)).collect();
    // col[p] = best cost of aligning x[..p) ending at the current column
    let mut col: Vec<Cost> = Vec::with_capacity(m + 1);
    col.push(Cost::ZERO);
    for p in 0..m {
        let last = col[p];
        col.push(last + dels[p]);
    }
    let mut out = Vec::with_capacity(y.len() + 1);
    out.push(col[m]);
    for &b in y {
        let ins = w.ins(b);
        let mut diag = col[0];
        for p in 0..m {
            let left = col[p + 1];
            let v = (diag + w.w(x[p], b)).min(left + ins).min(col[p] + dels[p]);
            diag = left;
            col[p + 1] = v;
        }
        out.push(col[m]);
    }
    out
}

/// For every start `i ∈ [0, n]`, `min_j ed^w(P → T[i..j))`; reports those ≤ `k`.
///
/// Runs the free-start DP on the reversed strings, where ends become starts.
pub fn sellers_starts(p: &[Sym], t: &[Sym], k: Cost, w: &WeightTable) -> OccReport {
    let pr: Vec<Sym> = p.iter().rev().copied().collect();
    let tr: Vec<Sym> = t.iter().rev().copied().collect();
    let ends = sellers_ends(&pr, &tr, w);
    let n = t.len();
    OccReport::Starts(
        (0..=n)
            .filter_map(|i| {
                let d = ends[n - i];
                (d <= k).then_some((i, d))
            })
            .collect(),
    )
}

/// Every `(i, j, ed^w(P → T[i..j)))` with distance ≤ `k`, by one DP per start.
pub fn bf_occurrences(p: &[Sym], t: &[Sym], k: Cost, w: &WeightTable) -> Result<OccReport> {
    let (m, n) = (p.len() as u64, t.len() as u64);
    let work = (n + 1).saturating_mul(n + 1).saturating_mul(m + 1);
    if work > BF_LIMIT {
        return Err(Error::Size(format!("brute force over |P| = {m}, |T| = {n}")));
    }
    let mut out = Vec::new();
    for i in 0..=t.len() {
        let y = &t[i..];
        // row[j] = ed^w(P[..p) → y[..j)), advanced one pattern row at a time
        let mut row: Vec<Cost> = Vec::with_capacity(y.len() + 1);
        row.push(Cost::ZERO);
        for &b in y {
            let last = *row.last().unwrap();
            row.push(last + w.ins(b));
        }
        for &a in p {
            let del = w.del(a);
            let mut diag = row[0];
            row[0] += del;
            for (j, &b) in y.iter().enumerate() {
                let up = row[j + 1];
                let v = (diag + w.w(a, b)).min(up + del).min(row[j] + w.ins(b));
                diag = up;
                row[j + 1] = v;
            }
        }
        out.extend(row.iter().enumerate().filter(|(_, &d)| d <= k).map(|(j, &d)| (i, i + j, d)));
    }
    Ok(OccReport::Triples(out))
}

/// Smallest end `j` minimizing `ed^w(P → T[i..j))`, with that distance, if it
/// is at most `k`.
///
/// Any alignment of cost `≤ k` stays within `⌊k/SCALE⌋` diagonals of its
/// start, so only that band is filled.
pub fn min_end(p: &[Sym], t: &[Sym], i: usize, k: Cost, w: &WeightTable) -> Option<(usize, Cost)> {
    if i > t.len() {
        return None;
    }
    let kappa = k.whole_units() as usize;
    let y = &t[i..t.len().min(i + p.len() + kappa)];
    let width = 2 * kappa + 1;
    // cell (row, j) at index j + κ − row
    let mut prev = vec![Cost::INF; width];
    let mut cur = vec![Cost::INF; width];
    for j in 0..=kappa.min(y.len()) {
        prev[j + kappa] = if j == 0 { Cost::ZERO } else { prev[j + kappa - 1] + w.ins(y[j - 1]) };
    }
    for (r, &a) in p.iter().enumerate() {
        let row = r + 1;
        let del = w.del(a);
        cur.iter_mut().for_each(|c| *c = Cost::INF);
        let lo = row.saturating_sub(kappa);
        let hi = (row + kappa).min(y.len());
        for j in lo..=hi {
            let idx = j + kappa - row;
            let mut v = Cost::INF;
            if idx + 1 < width {
                v = v.min(prev[idx + 1] + del);
            }
            if j > 0 {
                v = v.min(prev[idx] + w.w(a, y[j - 1]));
                if idx > 0 {
                    v = v.min(cur[idx - 1] + w.ins(y[j - 1]));
                }
            }
            cur[idx] = v;
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    let m = p.len();
    let mut best: Option<(usize, Cost)> = None;
    for j in m.saturating_sub(kappa)..=(m + kappa).min(y.len()) {
        let d = prev[j + kappa - m];
        if d <= k && best.is_none_or(|(_, b)| d < b) {
            best = Some((i + j, d));
        }
    }
    best
}

/// Classic unit-cost `k`-error starting positions.
///
/// Free-start DP on the reversed strings with Ukkonen's cutoff: rows below
/// the last one holding a value `≤ k` are never touched.
pub fn unweighted_occ(p: &[Sym], t: &[Sym], k: usize) -> Vec<usize> {
    let (m, n) = (p.len(), t.len());
    let pr: Vec<Sym> = p.iter().rev().copied().collect();
    let above_k = k + 1;
    let mut col: Vec<usize> = (0..=m).collect();
    // largest row holding a value ≤ k; rows below it only need to be known to exceed k
    let mut last = m.min(k);
    let mut starts = Vec::new();
    if col[m] <= k {
        starts.push(n);
    }
    for (jj, &b) in t.iter().rev().enumerate() {
        let lim = (last + 1).min(m);
        let mut diag = col[0];
        for r in 1..=lim {
            let left = col[r];
            let v = (diag + usize::from(pr[r - 1] != b)).min(left + 1).min(col[r - 1] + 1);
            diag = left;
            col[r] = v;
        }
        if lim < m {
            col[lim + 1] = col[lim + 1].max(above_k);
        }
        last = lim;
        while col[last] > k {
            last -= 1;
        }
        if last == m {
            starts.push(n - jj - 1);
        }
    }
    starts.reverse();
    starts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alignment::{levenshtein, weighted_edit_distance};
    use crate::text::Alphabet;
    use proptest::prelude::*;

    fn ab() -> Alphabet {
        Alphabet::new(['a', 'b', 'c', 'x'])
    }

    fn enc(s: &str) -> Vec<Sym> {
        ab().encode(s).unwrap()
    }

    fn unit() -> WeightTable {
        WeightTable::unit(ab())
    }

    /// Minimum over all ends by independent full DPs.
    fn naive_starts(p: &[Sym], t: &[Sym], k: Cost, w: &WeightTable) -> Vec<(usize, Cost)> {
        (0..=t.len())
            .filter_map(|i| {
                let d = (i..=t.len()).map(|j| weighted_edit_distance(p, &t[i..j], w)).min().unwrap();
                (d <= k).then_some((i, d))
            })
            .collect()
    }

    #[test]
    fn sellers_examples() {
        let w = unit();
        assert_eq!(
            sellers_starts(&enc("ab"), &enc("abab"), Cost::ZERO, &w),
            OccReport::Starts(vec![(0, Cost::ZERO), (2, Cost::ZERO)])
        );
        let r = sellers_starts(&enc("ab"), &enc("aab"), Cost::units(1), &w);
        assert_eq!(r, OccReport::Starts(vec![(0, Cost::units(1)), (1, Cost::ZERO), (2, Cost::units(1))]));
    }

    #[test]
    fn bf_examples() {
        let w = unit();
        let r = bf_occurrences(&enc("ab"), &enc("aab"), Cost::units(1), &w).unwrap();
        let u = Cost::units(1);
        assert_eq!(
            r,
            OccReport::Triples(vec![(0, 1, u), (0, 2, u), (0, 3, u), (1, 2, u), (1, 3, Cost::ZERO), (2, 3, u)])
        );
        let big = vec![1; 1000];
        assert!(matches!(bf_occurrences(&big, &big, Cost::ZERO, &w), Err(Error::Size(_))));
    }

    #[test]
    fn unweighted_examples() {
        assert_eq!(unweighted_occ(&enc("ab"), &enc("abab"), 0), vec![0, 2]);
        assert_eq!(unweighted_occ(&enc("abc"), &enc("xbc"), 1), vec![0, 1]);
        assert_eq!(unweighted_occ(&[], &enc("ab"), 0), vec![0, 1, 2]);
    }

    #[test]
    fn min_end_examples() {
        let w = unit();
        assert_eq!(min_end(&enc("ab"), &enc("aab"), 0, Cost::units(1), &w), Some((1, Cost::units(1))));
        assert_eq!(min_end(&enc("ab"), &enc("aab"), 1, Cost::units(1), &w), Some((3, Cost::ZERO)));
        assert_eq!(min_end(&enc("ab"), &enc("aab"), 3, Cost::ZERO, &w), None);
    }

    fn table() -> impl Strategy<Value = WeightTable> {
        prop::collection::vec((0u32..5, 0u32..5, 1u64..5_000_000), 0..8).prop_map(|entries| {
            let e: Vec<(Sym, Sym, Cost)> = entries
                .into_iter()
                .filter(|(a, b, _)| a != b)
                .map(|(a, b, c)| (a, b, Cost::from_micros(c.max(1_000_000))))
                .collect();
            WeightTable::from_sym_entries(ab(), Cost::units(1), &e).unwrap()
        })
    }

    proptest! {
        #[test]
        fn sellers_matches_naive(
            p in prop::collection::vec(1u32..=3, 0..7),
            t in prop::collection::vec(1u32..=3, 0..12),
            k in 0u64..6_000_000,
            w in table(),
        ) {
            let k = Cost::from_micros(k);
            let want = naive_starts(&p, &t, k, &w);
            prop_assert_eq!(sellers_starts(&p, &t, k, &w).to_starts(), want.clone());
            prop_assert_eq!(bf_occurrences(&p, &t, k, &w).unwrap().to_starts(), want.clone());
            for &(i, d) in &want {
                let (j, dj) = min_end(&p, &t, i, k, &w).unwrap();
                prop_assert_eq!(dj, d);
                prop_assert_eq!(weighted_edit_distance(&p, &t[i..j], &w), d);
                prop_assert!((i..j).all(|e| weighted_edit_distance(&p, &t[i..e], &w) > d));
            }
        }

        #[test]
        fn unweighted_matches_levenshtein(
            p in prop::collection::vec(1u32..=3, 0..8),
            t in prop::collection::vec(1u32..=3, 0..16),
            k in 0usize..5,
        ) {
            let want: Vec<usize> = (0..=t.len())
                .filter(|&i| (i..=t.len()).any(|j| levenshtein(&p, &t[i..j]) <= k))
                .collect();
            prop_assert_eq!(unweighted_occ(&p, &t, k), want);
        }

        #[test]
        fn weighted_starts_are_unweighted_starts(
            p in prop::collection::vec(1u32..=3, 1..7),
            t in prop::collection::vec(1u32..=3, 0..12),
            k in 0u64..5,
            w in table(),
        ) {
            let weighted = sellers_starts(&p, &t, Cost::units(k), &w).start_positions();
            let plain = unweighted_occ(&p, &t, k as usize);
            prop_assert!(weighted.iter().all(|i| plain.contains(i)));
        }

        #[test]
        fn monotone_in_k(
            p in prop::collection::vec(1u32..=3, 0..7),
            t in prop::collection::vec(1u32..=3, 0..12),
            k in 0u64..4_000_000,
            extra in 0u64..3_000_000,
            w in table(),
        ) {
            let small = sellers_starts(&p, &t, Cost::from_micros(k), &w).to_starts();
            let large = sellers_starts(&p, &t, Cost::from_micros(k + extra), &w).to_starts();
            for (i, d) in small {
                prop_assert!(large.iter().any(|&(j, e)| j == i && e <= d));
            }
        }
    }
}
