//! Periods and internal pattern matching.

use super::weights::Sym;
use crate::error::{Error, Result};

/// Prefix function (border lengths).
fn borders(s: &[Sym]) -> Vec<usize> {
    let mut pi = vec![0usize; s.len()];
    for i in 1..s.len() {
        let mut k = pi[i - 1];
        while k > 0 && s[i] != s[k] {
            k = pi[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        pi[i] = k;
    }
    pi
}

/// Z-array: `z[i]` = LCP of `s` and `s[i..)`, with `z[0] = |s|`.
pub(crate) fn z_array<T: Eq>(s: &[T]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0usize; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    let (mut l, mut r) = (0, 0);
    for i in 1..n {
        if i < r {
            z[i] = (r - i).min(z[i - l]);
        }
        while i + z[i] < n && s[z[i]] == s[i + z[i]] {
            z[i] += 1;
        }
        if i + z[i] > r {
            l = i;
            r = i + z[i];
        }
    }
    z
}

/// Smallest period of a nonempty sequence.
pub fn period(s: &[Sym]) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(s.len() - borders(s)[s.len() - 1])
}

/// Arithmetic progression `first, first+step, …` with `count` terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Progression {
    pub first: usize,
    pub step: usize,
    pub count: usize,
}

impl Progression {
    pub const EMPTY: Progression = Progression { first: 0, step: 0, count: 0 };

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.count).map(move |i| self.first + i * self.step)
    }
}

/// All exact occurrences of `p` in `t`, for `|t| ≤ 2|p|`.
///
/// Three or more occurrences are spaced by `period(p)`. With exactly two, the
/// step is their actual distance, which may be a multiple of the period; with
/// one, the step is `period(p)`.
pub fn ipm(p: &[Sym], t: &[Sym]) -> Result<Progression> {
    if p.is_empty() {
        return Err(Error::Precondition("pattern must be nonempty".into()));
    }
    if t.len() > 2 * p.len() {
        return Err(Error::Precondition(format!(
            "text length {} exceeds twice the pattern length {}",
            t.len(),
            p.len()
        )));
    }
    // P · # · T over Option so the separator never matches
    let joined: Vec<Option<Sym>> = p.iter().map(|&c| Some(c)).chain([None]).chain(t.iter().map(|&c| Some(c))).collect();
    let z = z_array(&joined);
    let occ: Vec<usize> = (0..t.len())
        .filter(|&i| z[p.len() + 1 + i] >= p.len())
        .collect();
    Ok(match occ.len() {
        0 => Progression::EMPTY,
        1 => Progression { first: occ[0], step: period(p)?, count: 1 },
        c => {
            let step = occ[1] - occ[0];
            debug_assert!(occ.windows(2).all(|w| w[1] - w[0] == step));
            Progression { first: occ[0], step, count: c }
        }
    })
}
