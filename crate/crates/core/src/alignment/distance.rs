use super::Alignment;
use crate::text::{Cost, Sym, WeightTable};

/// Diagonal window `lo ≤ t − p ≤ hi` explored by a banded run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BandWindow {
    pub lo: isize,
    pub hi: isize,
}

impl BandWindow {
    /// Window for threshold `k` over a pattern of length `m` and text of length `n`:
    /// `−κ ≤ t − p ≤ n − m + κ` with `κ = ⌊k/SCALE⌋`.
    pub fn for_threshold(m: usize, n: usize, k: Cost) -> BandWindow {
        let kappa = k.whole_units() as isize;
        BandWindow {
            lo: -kappa,
            hi: n as isize - m as isize + kappa,
        }
    }

    pub fn contains(&self, p: usize, t: usize) -> bool {
        let d = t as isize - p as isize;
        self.lo <= d && d <= self.hi
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }
}

/// `ed^w(x → y)` by the full dynamic program, row by row.
pub fn weighted_edit_distance(x: &[Sym], y: &[Sym], w: &WeightTable) -> Cost {
    let mut row: Vec<Cost> = Vec::with_capacity(y.len() + 1);
    row.push(Cost::ZERO);
    for &b in y {
        let last = *row.last().unwrap();
        row.push(last + w.ins(b));
    }
    for &a in x {
        let del = w.del(a);
        let sub = w.sub_row(a);
        let mut diag = row[0];
        row[0] += del;
        for (t, &b) in y.iter().enumerate() {
            let up = row[t + 1];
            let v = (diag + sub[b as usize]).min(up + del).min(row[t] + w.ins(b));
            diag = up;
            row[t + 1] = v;
        }
    }
    row[y.len()]
}

/// `ed^w(x → y)` if it is at most `k`, else `INF`; only the band of
/// [`BandWindow::for_threshold`] is explored.
pub fn weighted_edit_distance_capped(x: &[Sym], y: &[Sym], w: &WeightTable, k: Cost) -> Cost {
    let (m, n) = (x.len(), y.len());
    let band = BandWindow::for_threshold(m, n, k);
    if band.lo > 0 || band.hi < 0 || band.is_empty() {
        // the corner (m, n) lies on diagonal n − m, which must be inside
        return Cost::INF;
    }
    let width = (band.hi - band.lo + 1) as usize;
    // cell (p, t) lives at index t − p − lo of row p
    let idx = |p: usize, t: usize| (t as isize - p as isize - band.lo) as usize;
    let mut prev = vec![Cost::INF; width];
    let mut cur = vec![Cost::INF; width];
    for t in 0..=n.min(band.hi as usize) {
        prev[idx(0, t)] = if t == 0 { Cost::ZERO } else { prev[idx(0, t - 1)] + w.ins(y[t - 1]) };
    }
    for p in 1..=m {
        let a = x[p - 1];
        let (del, sub) = (w.del(a), w.sub_row(a));
        let t_lo = (p as isize + band.lo).max(0) as usize;
        let t_hi = ((p as isize + band.hi).min(n as isize)).max(-1);
        cur.iter_mut().for_each(|c| *c = Cost::INF);
        if t_hi < t_lo as isize {
            std::mem::swap(&mut prev, &mut cur);
            continue;
        }
        for t in t_lo..=t_hi as usize {
            let i = idx(p, t);
            let mut v = Cost::INF;
            // vertical from (p-1, t): one diagonal up
            if i + 1 < width {
                v = v.min(prev[i + 1] + del);
            }
            if t > 0 {
                v = v.min(prev[i] + sub[y[t - 1] as usize]);
                if i > 0 {
                    v = v.min(cur[i - 1] + w.ins(y[t - 1]));
                }
            }
            cur[i] = v;
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    let d = prev[idx(m, n)];
    if d <= k {
        d
    } else {
        Cost::INF
    }
}

/// Optimal alignment with a canonical witness: on ties the traceback
/// prefers the diagonal step, then the vertical, then the horizontal.
pub fn optimal_alignment(x: &[Sym], y: &[Sym], w: &WeightTable) -> (Cost, Alignment) {
    let (m, n) = (x.len(), y.len());
    let cols = n + 1;
    let mut d = vec![Cost::ZERO; (m + 1) * cols];
    for t in 1..=n {
        d[t] = d[t - 1] + w.ins(y[t - 1]);
    }
    for p in 1..=m {
        d[p * cols] = d[(p - 1) * cols] + w.del(x[p - 1]);
        for t in 1..=n {
            let diag = d[(p - 1) * cols + t - 1] + w.w(x[p - 1], y[t - 1]);
            let up = d[(p - 1) * cols + t] + w.del(x[p - 1]);
            let left = d[p * cols + t - 1] + w.ins(y[t - 1]);
            d[p * cols + t] = diag.min(up).min(left);
        }
    }
    let cost = d[m * cols + n];
    let mut path = vec![(m, n)];
    let (mut p, mut t) = (m, n);
    while (p, t) != (0, 0) {
        let here = d[p * cols + t];
        if p > 0 && t > 0 && d[(p - 1) * cols + t - 1] + w.w(x[p - 1], y[t - 1]) == here {
            p -= 1;
            t -= 1;
        } else if p > 0 && d[(p - 1) * cols + t] + w.del(x[p - 1]) == here {
            p -= 1;
        } else {
            t -= 1;
        }
        path.push((p, t));
    }
    path.reverse();
    let al = Alignment::from_path(&path, x, y, cost).expect("traceback yields a lattice path");
    (cost, al)
}

/// Classic unit-cost edit distance.
pub fn levenshtein(x: &[Sym], y: &[Sym]) -> usize {
    let mut row: Vec<usize> = (0..=y.len()).collect();
    for (p, &a) in x.iter().enumerate() {
        let mut diag = row[0];
        row[0] = p + 1;
        for (t, &b) in y.iter().enumerate() {
            let up = row[t + 1];
            row[t + 1] = (diag + usize::from(a != b)).min(up + 1).min(row[t] + 1);
            diag = up;
        }
    }
    row[y.len()]
}
