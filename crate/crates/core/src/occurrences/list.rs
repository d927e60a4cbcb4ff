//! Listing all occurrences and verifying candidate intervals.

use super::fern::grow_fern;
use super::OccReport;
use crate::text::{Cost, Sym, WeightTable};

/// Every `(i, j, ed^w(P → T[i..j)))` with distance at most `k`.
///
/// `T` is cut into fragments `T_t = T[tκ, min(n, m + (t+2)κ))`; each fragment
/// contributes the occurrences starting in its first `κ` positions, read off
/// a fern grown with threshold `4κ` (entries up to `k` are exact there).
pub fn list_all_occs(p: &[Sym], t: &[Sym], k: Cost, w: &WeightTable) -> OccReport {
    let (m, n) = (p.len(), t.len());
    let kappa = (k.whole_units() as usize).max(1);
    let big_k = Cost::units(4 * kappa as u64);
    let mut out = Vec::new();
    for chunk in 0..=n / kappa {
        let start = chunk * kappa;
        let end = n.min(m + (chunk + 2) * kappa);
        let frag = &t[start..end];
        let nt = frag.len();
        let f = grow_fern(p, frag, big_k, w);
        let delta = f.delta_in;
        for l in 0..=delta.min(kappa - 1) {
            for r in 0..=delta {
                let j = nt - delta + r;
                let d = f.matrix.get(l, r);
                if l <= j && d <= k {
                    out.push((start + l, start + j, d));
                }
            }
        }
    }
    OccReport::from_triples(out)
}

/// Occurrences with start in `[lo, hi]` (clamped to `[0, |T|]`), each with its
/// minimum distance.
pub fn verify(p: &[Sym], t: &[Sym], k: Cost, lo: usize, hi: usize, w: &WeightTable) -> OccReport {
    let n = t.len();
    let hi = hi.min(n);
    if lo > hi {
        return OccReport::Starts(Vec::new());
    }
    let kappa = k.whole_units() as usize;
    let trimmed = &t[lo..n.min(hi + p.len() + kappa)];
    let listed = list_all_occs(p, trimmed, k, w);
    let OccReport::Triples(triples) = listed else {
        unreachable!("listing yields triples")
    };
    OccReport::from_starts(
        triples
            .into_iter()
            .filter(|&(i, _, _)| i <= hi - lo)
            .map(|(i, _, d)| (lo + i, d)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::occurrences::{bf_occurrences, sellers_starts};
    use crate::text::Alphabet;
    use proptest::prelude::*;

    fn sigma() -> Alphabet {
        Alphabet::new(['a', 'b', 'c'])
    }

    fn enc(s: &str) -> Vec<Sym> {
        sigma().encode(s).unwrap()
    }

    #[test]
    fn examples() {
        let w = WeightTable::unit(sigma());
        assert_eq!(
            list_all_occs(&enc("ab"), &enc("abab"), Cost::ZERO, &w),
            OccReport::Triples(vec![(0, 2, Cost::ZERO), (2, 4, Cost::ZERO)])
        );
        assert_eq!(
            verify(&enc("ab"), &enc("abab"), Cost::ZERO, 0, 3, &w),
            OccReport::Starts(vec![(0, Cost::ZERO), (2, Cost::ZERO)])
        );
        assert!(verify(&enc("ab"), &enc("abab"), Cost::ZERO, 3, 4, &w).is_empty());
        assert!(verify(&enc("ab"), &enc("abab"), Cost::ZERO, 5, 9, &w).is_empty());
    }

    proptest! {
        #[test]
        fn listing_matches_brute_force(
            p in prop::collection::vec(1u32..=3, 0..8),
            t in prop::collection::vec(1u32..=3, 0..20),
            k in 0u64..4_000_000,
        ) {
            let w = WeightTable::parse("a\tb\t1.5\nEPS\tc\t2\nc\ta\t3\n", &sigma()).unwrap();
            let k = Cost::from_micros(k);
            prop_assert_eq!(list_all_occs(&p, &t, k, &w), bf_occurrences(&p, &t, k, &w).unwrap());
        }

        #[test]
        fn verify_matches_sellers(
            p in prop::collection::vec(1u32..=3, 0..8),
            t in prop::collection::vec(1u32..=3, 0..20),
            k in 0u64..4_000_000,
            lo in 0usize..24,
            len in 0usize..24,
        ) {
            let w = WeightTable::parse("b\ta\t2.25\na\tEPS\t1.5\n", &sigma()).unwrap();
            let k = Cost::from_micros(k);
            let want = sellers_starts(&p, &t, k, &w).restrict(lo, lo + len);
            prop_assert_eq!(verify(&p, &t, k, lo, lo + len, &w), want);
        }
    }
}
