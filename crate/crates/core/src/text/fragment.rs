use std::ops::Deref;
use std::sync::Arc;

use super::weights::Sym;
use crate::error::{Error, Result};

/// A window `base[start..end)` over an immutable shared sequence.
#[derive(Clone, Debug)]
pub struct TextFragment {
    base: Arc<[Sym]>,
    start: usize,
    end: usize,
}

impl TextFragment {
    /// The whole of `base`.
    pub fn new(base: Arc<[Sym]>) -> TextFragment {
        let end = base.len();
        TextFragment { base, start: 0, end }
    }

    pub fn from_vec(v: Vec<Sym>) -> TextFragment {
        TextFragment::new(v.into())
    }

    /// Sub-fragment `self[l..r)`, resolved against the root sequence.
    pub fn extract(&self, l: usize, r: usize) -> Result<TextFragment> {
        if l > r {
            return Err(Error::Range(format!("[{l}, {r}) is not an interval")));
        }
        if r > self.len() {
            return Err(Error::Index { index: r, len: self.len() });
        }
        Ok(TextFragment {
            base: Arc::clone(&self.base),
            start: self.start + l,
            end: self.start + r,
        })
    }

    pub fn base(&self) -> &Arc<[Sym]> {
        &self.base
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn as_slice(&self) -> &[Sym] {
        &self.base[self.start..self.end]
    }
}

impl Deref for TextFragment {
    type Target = [Sym];
    fn deref(&self) -> &[Sym] {
        self.as_slice()
    }
}

impl PartialEq for TextFragment {
    fn eq(&self, other: &Self) -> bool {
        self.as_slice() == other.as_slice()
    }
}

impl Eq for TextFragment {}
