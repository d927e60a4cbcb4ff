//! Longest-common-extension queries over a suffix array.
//!
//! The suffix array is built by prefix doubling with radix passes, the LCP
//! array by Kasai's scan, and range minima by a sparse table, so a query is
//! a handful of array reads after `O(n log n)` preprocessing.

use std::sync::Arc;

use super::fragment::TextFragment;
use super::weights::Sym;
use crate::error::{Error, Result};

/// Characters compared directly before falling back to the range-minimum query.
const SCAN_AHEAD: usize = 8;

pub(crate) fn suffix_array(s: &[u32]) -> Vec<u32> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    // compress the alphabet to 0..classes
    let mut sorted: Vec<u32> = s.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut rank: Vec<u32> = s.iter().map(|c| sorted.binary_search(c).unwrap() as u32).collect();
    let mut classes = sorted.len();

    let mut sa: Vec<u32> = (0..n as u32).collect();
    sa.sort_unstable_by_key(|&i| rank[i as usize]);
    let mut tmp = vec![0u32; n];
    let mut second = vec![0u32; n];
    let mut count = vec![0usize; n.max(classes) + 1];
    let mut k = 1;
    while classes < n {
        // order by the second key: suffixes running off the end come first
        let mut p = 0;
        for i in n - k.min(n)..n {
            second[p] = i as u32;
            p += 1;
        }
        for &i in &sa {
            if i as usize >= k {
                second[p] = i - k as u32;
                p += 1;
            }
        }
        // stable counting sort by the first key
        count[..classes + 1].iter_mut().for_each(|c| *c = 0);
        for &r in &rank {
            count[r as usize + 1] += 1;
        }
        for c in 1..=classes {
            count[c] += count[c - 1];
        }
        for &i in &second {
            let r = rank[i as usize] as usize;
            sa[count[r]] = i;
            count[r] += 1;
        }
        // re-rank
        let key = |i: usize, rank: &[u32]| (rank[i], if i + k < n { rank[i + k] as i64 } else { -1 });
        tmp[sa[0] as usize] = 0;
        let mut c = 0u32;
        for w in 1..n {
            if key(sa[w] as usize, &rank) != key(sa[w - 1] as usize, &rank) {
                c += 1;
            }
            tmp[sa[w] as usize] = c;
        }
        std::mem::swap(&mut rank, &mut tmp);
        classes = c as usize + 1;
        k *= 2;
    }
    sa
}

/// `lcp[r]` = LCP of the suffixes at `sa[r-1]` and `sa[r]`; `lcp[0] = 0`.
pub(crate) fn lcp_array(s: &[u32], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

/// LCE oracle over one sequence.
#[derive(Clone, Debug)]
pub struct LceIndex {
    text: Vec<u32>,
    rank: Vec<u32>,
    sparse: Vec<Vec<u32>>,
}

impl LceIndex {
    pub fn new(text: &[u32]) -> LceIndex {
        let sa = suffix_array(text);
        let mut rank = vec![0u32; text.len()];
        for (r, &i) in sa.iter().enumerate() {
            rank[i as usize] = r as u32;
        }
        let lcp = lcp_array(text, &sa, &rank);
        let mut sparse = vec![lcp];
        let mut width = 1;
        while 2 * width < text.len() {
            let prev = sparse.last().unwrap();
            let next: Vec<u32> = (0..prev.len() - width).map(|i| prev[i].min(prev[i + width])).collect();
            sparse.push(next);
            width *= 2;
        }
        LceIndex {
            text: text.to_vec(),
            rank,
            sparse,
        }
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    /// Length of the longest common prefix of the suffixes at `i` and `j`.
    #[inline]
    pub fn lce(&self, i: usize, j: usize) -> usize {
        let n = self.text.len();
        if i == j {
            return n - i;
        }
        if i >= n || j >= n {
            return 0;
        }
        let lim = (n - i).min(n - j).min(SCAN_AHEAD);
        let mut h = 0;
        while h < lim {
            if self.text[i + h] != self.text[j + h] {
                return h;
            }
            h += 1;
        }
        if h < SCAN_AHEAD {
            return h;
        }
        let (mut a, mut b) = (self.rank[i] as usize, self.rank[j] as usize);
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        // minimum of lcp[a+1..=b]
        let len = b - a;
        let lvl = (usize::BITS - 1 - len.leading_zeros()) as usize;
        let row = &self.sparse[lvl];
        row[a + 1].min(row[b + 1 - (1 << lvl)]) as usize
    }
}

/// Naive forward scan: `max ℓ` with `x[i..i+ℓ) = y[j..j+ℓ)`.
pub fn lce_scan(x: &[Sym], i: usize, y: &[Sym], j: usize) -> usize {
    x[i..].iter().zip(&y[j..]).take_while(|(a, b)| a == b).count()
}

/// Naive backward scan: longest common suffix of `x[..i)` and `y[..j)`.
pub fn lce_rev_scan(x: &[Sym], i: usize, y: &[Sym], j: usize) -> usize {
    x[..i].iter().rev().zip(y[..j].iter().rev()).take_while(|(a, b)| a == b).count()
}

/// Standard-setting string services over a fixed family of sequences.
///
/// Fragments passed to queries must be windows of one of the indexed roots.
#[derive(Clone, Debug)]
pub struct Pillar {
    roots: Vec<Arc<[Sym]>>,
    offsets: Vec<usize>,
    total: usize,
    fwd: LceIndex,
    rev: LceIndex,
}

impl Pillar {
    pub fn new(fragments: &[&TextFragment]) -> Pillar {
        let mut roots: Vec<Arc<[Sym]>> = Vec::new();
        for f in fragments {
            if !roots.iter().any(|r| Arc::ptr_eq(r, f.base())) {
                roots.push(Arc::clone(f.base()));
            }
        }
        let sep_base = roots.iter().flat_map(|r| r.iter()).copied().max().unwrap_or(0) + 1;
        let mut concat = Vec::new();
        let mut offsets = Vec::new();
        for (id, r) in roots.iter().enumerate() {
            offsets.push(concat.len());
            concat.extend_from_slice(r);
            concat.push(sep_base + id as u32);
        }
        let total = concat.len();
        let fwd = LceIndex::new(&concat);
        concat.reverse();
        let rev = LceIndex::new(&concat);
        Pillar {
            roots,
            offsets,
            total,
            fwd,
            rev,
        }
    }

    fn global(&self, x: &TextFragment, i: usize) -> Result<usize> {
        if i > x.len() {
            return Err(Error::Index { index: i, len: x.len() });
        }
        let id = self
            .roots
            .iter()
            .position(|r| Arc::ptr_eq(r, x.base()))
            .ok_or_else(|| Error::Precondition("fragment is not backed by an indexed sequence".into()))?;
        Ok(self.offsets[id] + x.start() + i)
    }

    /// Longest common prefix of `x[i..)` and `y[j..)`.
    pub fn lce(&self, x: &TextFragment, i: usize, y: &TextFragment, j: usize) -> Result<usize> {
        let (gi, gj) = (self.global(x, i)?, self.global(y, j)?);
        let cap = (x.len() - i).min(y.len() - j);
        Ok(self.fwd.lce(gi, gj).min(cap))
    }

    /// Longest common suffix of `x[..i)` and `y[..j)`.
    pub fn lce_rev(&self, x: &TextFragment, i: usize, y: &TextFragment, j: usize) -> Result<usize> {
        let (gi, gj) = (self.global(x, i)?, self.global(y, j)?);
        if i == 0 || j == 0 {
            return Ok(0);
        }
        let cap = i.min(j);
        Ok(self.rev.lce(self.total - gi, self.total - gj).min(cap))
    }
}
