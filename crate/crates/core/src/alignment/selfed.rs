use crate::text::Sym;

/// Minimum unit cost of aligning `x` with itself without using any edge
/// `(i,i)→(i+1,i+1)`; `None` when that cost exceeds `cap`.
///
/// A path of cost `c` never leaves the diagonals `|t − p| ≤ c`, so the band
/// `|t − p| ≤ cap + 1` suffices.
pub fn self_edit_distance(x: &[Sym], cap: usize) -> Option<usize> {
    let n = x.len();
    if n == 0 {
        return Some(0);
    }
    let r = cap + 1;
    let width = 2 * r + 1;
    const INF: usize = usize::MAX / 4;
    // cell (p, t) at index t − p + r
    let mut prev = vec![INF; width];
    let mut cur = vec![INF; width];
    for t in 0..=n.min(r) {
        prev[t + r] = t;
    }
    for p in 1..=n {
        cur.iter_mut().for_each(|c| *c = INF);
        let t_lo = p.saturating_sub(r);
        let t_hi = (p + r).min(n);
        for t in t_lo..=t_hi {
            let i = t + r - p;
            let mut v = INF;
            if i + 1 < width {
                v = v.min(prev[i + 1] + 1);
            }
            if i > 0 && t > t_lo {
                v = v.min(cur[i - 1] + 1);
            }
            if t > 0 && t != p {
                v = v.min(prev[i] + usize::from(x[p - 1] != x[t - 1]));
            }
            cur[i] = v;
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    let d = prev[r];
    (d <= cap).then_some(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Full quadratic table with the main-diagonal edges removed.
    fn oracle(x: &[Sym]) -> usize {
        let n = x.len();
        let mut d = vec![vec![usize::MAX / 4; n + 1]; n + 1];
        for p in 0..=n {
            for t in 0..=n {
                if p == 0 && t == 0 {
                    d[p][t] = 0;
                    continue;
                }
                let mut v = usize::MAX / 4;
                if p > 0 {
                    v = v.min(d[p - 1][t] + 1);
                }
                if t > 0 {
                    v = v.min(d[p][t - 1] + 1);
                }
                if p > 0 && t > 0 && p != t {
                    v = v.min(d[p - 1][t - 1] + usize::from(x[p - 1] != x[t - 1]));
                }
                d[p][t] = v;
            }
        }
        d[n][n]
    }

    fn enc(s: &str) -> Vec<Sym> {
        s.bytes().map(u32::from).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(self_edit_distance(&[], 0), Some(0));
        assert_eq!(self_edit_distance(&enc("aaaa"), 5), Some(2));
        assert_eq!(self_edit_distance(&enc("ab"), 5), Some(3));
        assert_eq!(self_edit_distance(&enc("ab"), 2), None);
        assert_eq!(oracle(&enc("aaaa")), 2);
        assert_eq!(oracle(&enc("ab")), 3);
    }

    proptest! {
        #[test]
        fn matches_oracle(x in prop::collection::vec(0u32..3, 0..40), cap in 0usize..90) {
            let want = oracle(&x);
            prop_assert_eq!(self_edit_distance(&x, cap), (want <= cap).then_some(want));
        }
    }
}
