//! Furthest-reaching diagonal method for unit-cost alignment.

use super::{Alignment, Breakpoint};
use crate::text::{lce_scan, Cost, Sym, EPS};

#[derive(Clone, Copy, PartialEq, Eq)]
enum From {
    Start,
    Sub,
    Del,
    Ins,
}

/// Optimal unit-cost alignment of `x` onto `y` if their distance is at most
/// `d`, using character scans for extensions.
pub fn unweighted_alignment_lv(x: &[Sym], y: &[Sym], d: usize) -> Option<Alignment> {
    unweighted_alignment_lv_with(x, y, d, |i, j| lce_scan(x, i, y, j))
}

/// As [`unweighted_alignment_lv`], with `lce(i, j)` answering the longest
/// common prefix of `x[i..)` and `y[j..)`. Runs in `O(d²)` extensions.
pub fn unweighted_alignment_lv_with(
    x: &[Sym],
    y: &[Sym],
    d: usize,
    lce: impl Fn(usize, usize) -> usize,
) -> Option<Alignment> {
    let (m, n) = (x.len() as i64, y.len() as i64);
    let goal = n - m;
    if goal.unsigned_abs() as usize > d {
        return None;
    }
    // reach[e][diag + e] = furthest row on diagonal `diag` using e edits
    let mut reach: Vec<Vec<i64>> = Vec::new();
    let mut from: Vec<Vec<From>> = Vec::new();
    let slide = |p: i64, diag: i64| p + lce(p as usize, (p + diag) as usize) as i64;

    reach.push(vec![slide(0, 0)]);
    from.push(vec![From::Start]);
    let mut found = (goal == 0 && reach[0][0] == m).then_some(0usize);
    let mut e = 0usize;
    while found.is_none() && e < d {
        e += 1;
        let ei = e as i64;
        let prev = &reach[e - 1];
        let get = |diag: i64| -> i64 {
            let off = diag + ei - 1;
            if off < 0 || off >= prev.len() as i64 {
                -1
            } else {
                prev[off as usize]
            }
        };
        let mut row = vec![-1i64; 2 * e + 1];
        let mut src = vec![From::Start; 2 * e + 1];
        for diag in (-ei).max(-m)..=ei.min(n) {
            let mut best = -1i64;
            let mut how = From::Start;
            let p = get(diag);
            if p >= 0 && p < m && p + diag < n {
                best = p + 1;
                how = From::Sub;
            }
            let p = get(diag + 1);
            if p >= 0 && p < m && p + 1 > best {
                best = p + 1;
                how = From::Del;
            }
            let p = get(diag - 1);
            if p >= 0 && p + diag - 1 < n && p > best {
                best = p;
                how = From::Ins;
            }
            if best >= 0 {
                let off = (diag + ei) as usize;
                row[off] = slide(best, diag);
                src[off] = how;
            }
        }
        if let Some(&r) = row.get((goal + ei) as usize) {
            if r == m {
                found = Some(e);
            }
        }
        reach.push(row);
        from.push(src);
    }
    let e_final = found?;

    // walk back, collecting edit breakpoints
    let mut bps = Vec::with_capacity(e_final + 2);
    bps.push(Breakpoint { p: m as usize, t: n as usize, a: EPS, b: EPS });
    let mut diag = goal;
    for e in (1..=e_final).rev() {
        let ei = e as i64;
        let prev_at = |dg: i64| reach[e - 1][(dg + ei - 1) as usize];
        let (p, t, a, b, pd) = match from[e][(diag + ei) as usize] {
            From::Sub => {
                let p = prev_at(diag);
                (p, p + diag, x[p as usize], y[(p + diag) as usize], diag)
            }
            From::Del => {
                let p = prev_at(diag + 1);
                (p, p + diag + 1, x[p as usize], EPS, diag + 1)
            }
            From::Ins => {
                let p = prev_at(diag - 1);
                (p, p + diag - 1, EPS, y[(p + diag - 1) as usize], diag - 1)
            }
            From::Start => unreachable!("only e = 0 starts"),
        };
        bps.push(Breakpoint { p: p as usize, t: t as usize, a, b });
        diag = pd;
    }
    bps.push(Breakpoint { p: 0, t: 0, a: EPS, b: EPS });
    bps.reverse();
    Some(Alignment::from_breakpoints(bps, Cost::units(e_final as u64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alignment::{alignment_cost, levenshtein};
    use crate::text::{Alphabet, WeightTable};
    use proptest::prelude::*;

    fn enc(s: &str) -> (Vec<Sym>, Alphabet) {
        let a = Alphabet::new("kitensg".chars());
        (a.encode(s).unwrap(), a)
    }

    #[test]
    fn kitten_sitting() {
        let (x, a) = enc("kitten");
        let (y, _) = enc("sitting");
        let al = unweighted_alignment_lv(&x, &y, 3).unwrap();
        assert_eq!(al.edits(), 3);
        assert_eq!(alignment_cost(&al, &x, &y, &WeightTable::unit(a)).unwrap(), Cost::units(3));
        assert!(unweighted_alignment_lv(&x, &y, 2).is_none());
    }

    #[test]
    fn identity_at_zero() {
        let (x, _) = enc("kitten");
        let al = unweighted_alignment_lv(&x, &x, 0).unwrap();
        assert_eq!(al, Alignment::identity(0, 6));
    }

    #[test]
    fn empty_sides() {
        let (x, _) = enc("kit");
        assert_eq!(unweighted_alignment_lv(&x, &[], 3).unwrap().edits(), 3);
        assert_eq!(unweighted_alignment_lv(&[], &x, 3).unwrap().edits(), 3);
        assert!(unweighted_alignment_lv(&[], &x, 2).is_none());
        assert_eq!(unweighted_alignment_lv(&[], &[], 0).unwrap().edits(), 0);
    }

    proptest! {
        #[test]
        fn optimal_when_within_budget(
            x in prop::collection::vec(1u32..=3, 0..30),
            y in prop::collection::vec(1u32..=3, 0..30),
            d in 0usize..20,
        ) {
            let lev = levenshtein(&x, &y);
            match unweighted_alignment_lv(&x, &y, d) {
                None => prop_assert!(lev > d),
                Some(al) => {
                    prop_assert!(lev <= d);
                    al.validate().unwrap();
                    prop_assert_eq!(al.edits(), lev);
                    let w = WeightTable::unit(Alphabet::lowercase(3));
                    prop_assert_eq!(alignment_cost(&al, &x, &y, &w).unwrap(), Cost::units(lev as u64));
                }
            }
        }
    }
}
