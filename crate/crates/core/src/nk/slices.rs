//! Text chunks, the unweighted filter and the slice decomposition.

use crate::alignment::{unweighted_alignment_lv_with, Alignment};
use crate::error::{Error, Result};
use crate::text::{lce_scan, Sym};

/// Chunks `[i, min(i+m+2k, n))` for `i = 0, k, 2k, …, k·⌊max(0, n−m+k)/k⌋`.
///
/// Every fragment of length at most `m+k` lies inside the chunk whose start
/// is the largest multiple of `k` not exceeding the fragment's start.
pub fn split_text_chunks(n: usize, m: usize, k: usize) -> Vec<(usize, usize)> {
    let k = k.max(1);
    let last = (n + k).saturating_sub(m) / k;
    (0..=last).map(|c| (c * k, (c * k + m + 2 * k).min(n))).filter(|&(s, _)| s <= n).collect()
}

/// Optimal unit-cost alignment of `P` onto `S` if their distance is at most
/// `4k`; otherwise `S` holds no `(k, w)`-occurrence of `P`.
pub fn filter_alignment(p: &[Sym], s: &[Sym], k: usize) -> Result<Option<Alignment>> {
    filter_alignment_with(p, s, k, |i, j| lce_scan(p, i, s, j))
}

/// As [`filter_alignment`], with a caller-supplied LCE oracle on `(P, S)`.
pub fn filter_alignment_with(
    p: &[Sym],
    s: &[Sym],
    k: usize,
    lce: impl Fn(usize, usize) -> usize,
) -> Result<Option<Alignment>> {
    if s.len() > p.len() + 2 * k {
        return Err(Error::Precondition(format!(
            "|S| = {} exceeds |P| + 2k = {}",
            s.len(),
            p.len() + 2 * k
        )));
    }
    Ok(unweighted_alignment_lv_with(p, s, 4 * k, lce))
}

/// The `d`-slices of `P` along an alignment onto `S`.
///
/// Slice `i` spans pattern rows `[lo[i], hi[i+1]]` and text columns
/// `[s[i], s[i+1]]`; its left portal is rows `[lo[i], hi[i]]` of column `s[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceDecomposition {
    pub d: usize,
    /// `lo[i] = max(0, i − 2d)` for `i ∈ [0, m]`.
    pub lo: Vec<usize>,
    /// `hi[i] = min(m, i + 2d)` for `i ∈ [0, m]`.
    pub hi: Vec<usize>,
    /// First column of row `i` on the alignment; `s[m] = |S|`.
    pub s: Vec<usize>,
    /// `pure[i]`: the alignment matches `P[i]` with `S[s[i]]`.
    pub pure: Vec<bool>,
}

impl SliceDecomposition {
    /// Slices of `P` against itself along the identity alignment.
    pub fn identity(m: usize, d: usize) -> SliceDecomposition {
        SliceDecomposition {
            d,
            lo: (0..=m).map(|i| i.saturating_sub(2 * d)).collect(),
            hi: (0..=m).map(|i| (i + 2 * d).min(m)).collect(),
            s: (0..=m).collect(),
            pure: vec![true; m],
        }
    }

    pub fn m(&self) -> usize {
        self.pure.len()
    }

    /// Rows `[lo[i], hi[i]]` of portal `V_i`.
    pub fn portal(&self, i: usize) -> (usize, usize) {
        (self.lo[i], self.hi[i])
    }

    pub fn portal_len(&self, i: usize) -> usize {
        self.hi[i] - self.lo[i] + 1
    }
}

/// Slices along `al`, which must align all of `P` onto all of `S` with at
/// most `d` edits.
pub fn build_slices(p: &[Sym], s: &[Sym], al: &Alignment, d: usize) -> Result<SliceDecomposition> {
    let m = p.len();
    al.validate()?;
    if al.source() != (0, m) || al.target() != (0, s.len()) {
        return Err(Error::Shape(format!(
            "alignment covers {:?} → {:?}, expected (0, {m}) → (0, {})",
            al.source(),
            al.target(),
            s.len()
        )));
    }
    if al.edits() > d {
        return Err(Error::Precondition(format!("alignment has {} edits, more than d = {d}", al.edits())));
    }
    let mut first = vec![usize::MAX; m + 1];
    for (row, col) in al.expand() {
        first[row] = first[row].min(col);
    }
    first[m] = s.len();
    let pure = (0..m).map(|i| first[i + 1] == first[i] + 1 && s[first[i]] == p[i]).collect();
    let mut dec = SliceDecomposition::identity(m, d);
    dec.s = first;
    dec.pure = pure;
    Ok(dec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alignment::levenshtein;
    use crate::occurrences::bf_occurrences;
    use crate::text::{Alphabet, Cost, WeightTable};
    use proptest::prelude::*;

    #[test]
    fn chunk_examples() {
        let chunks = split_text_chunks(10, 4, 2);
        let want: Vec<(usize, usize)> = [0, 2, 4, 6, 8].iter().map(|&i| (i, (i + 8).min(10))).collect();
        assert_eq!(chunks, want);
        assert_eq!(split_text_chunks(2, 9, 3), vec![(0, 2)]);
        assert_eq!(split_text_chunks(0, 0, 1), vec![(0, 0)]);
    }

    #[test]
    fn filter_examples() {
        let sigma = Alphabet::new(['a', 'b']);
        let p = sigma.encode("abba").unwrap();
        let al = filter_alignment(&p, &p, 0).unwrap().unwrap();
        assert_eq!(al.edits(), 0);
        let (a4, b4) = (sigma.encode("aaaa").unwrap(), sigma.encode("bbbb").unwrap());
        assert!(filter_alignment(&a4, &b4, 0).unwrap().is_none());
        assert!(matches!(filter_alignment(&a4, &p, 0), Ok(None)));
        let long = sigma.encode("abababab").unwrap();
        assert!(matches!(filter_alignment(&a4, &long, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn slice_bounds() {
        let dec = SliceDecomposition::identity(6, 1);
        for i in 0..6 {
            assert_eq!(dec.lo[i], i.saturating_sub(2));
            assert_eq!(dec.hi[i + 1], (i + 3).min(6));
        }
        let sigma = Alphabet::new(['a', 'b']);
        let p = sigma.encode("abab").unwrap();
        let built = build_slices(&p, &p, &Alignment::identity(0, 4), 1).unwrap();
        assert_eq!(built.s, vec![0, 1, 2, 3, 4]);
        assert!(built.pure.iter().all(|&x| x));
        assert!(matches!(build_slices(&p, &p, &Alignment::identity(0, 3), 1), Err(Error::Shape(_))));
    }

    proptest! {
        #[test]
        fn chunks_cover_short_fragments(n in 0usize..40, m in 0usize..12, k in 1usize..5) {
            let chunks = split_text_chunks(n, m, k);
            for i in 0..=n {
                for j in i..=n.min(i + m + k) {
                    // a fragment that could carry an occurrence needs length ≥ m − k
                    if j - i + k < m {
                        continue;
                    }
                    let c = chunks.iter().find(|&&(s, _)| s == i / k * k);
                    prop_assert!(c.is_some_and(|&(s, e)| s <= i && j <= e), "{i}..{j} in {chunks:?}");
                }
            }
        }

        #[test]
        fn filter_is_sound(
            p in prop::collection::vec(1u32..=2, 0..8),
            t in prop::collection::vec(1u32..=2, 0..14),
            k in 0usize..3,
        ) {
            let s = &t[..t.len().min(p.len() + 2 * k)];
            let w = WeightTable::unit(Alphabet::new(['a', 'b']));
            let occ = bf_occurrences(&p, s, Cost::units(k as u64), &w).unwrap();
            let filtered = filter_alignment(&p, s, k).unwrap();
            if !occ.is_empty() {
                prop_assert!(filtered.is_some());
            }
            prop_assert_eq!(filtered.is_some(), levenshtein(&p, s) <= 4 * k);
        }

        #[test]
        fn slices_follow_the_alignment(
            p in prop::collection::vec(1u32..=2, 1..10),
            t in prop::collection::vec(1u32..=2, 0..12),
        ) {
            let d = levenshtein(&p, &t);
            let al = crate::alignment::unweighted_alignment_lv(&p, &t, d).unwrap();
            let dec = build_slices(&p, &t, &al, d).unwrap();
            prop_assert!(dec.s.windows(2).all(|w| w[0] <= w[1]));
            for i in 0..p.len() {
                if dec.pure[i] {
                    prop_assert_eq!(dec.s[i + 1], dec.s[i] + 1);
                    prop_assert_eq!(p[i], t[dec.s[i]]);
                }
            }
            prop_assert_eq!(dec.pure.iter().filter(|&&x| !x).count() <= 2 * d, true);
        }
    }
}
