use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Iterate the set bits of a word slice in increasing order.
pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

#[inline]
pub(crate) fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// A subset of `[0, n)` stored as a bit row.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "VertexSetRepr", try_from = "VertexSetRepr")]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct VertexSetRepr {
    n: usize,
    members: Vec<usize>,
}

impl From<VertexSet> for VertexSetRepr {
    fn from(s: VertexSet) -> Self {
        VertexSetRepr { n: s.n, members: s.to_vec() }
    }
}

impl TryFrom<VertexSetRepr> for VertexSet {
    type Error = Error;
    fn try_from(r: VertexSetRepr) -> Result<Self> {
        VertexSet::from_vertices(r.n, r.members)
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet { n, words: vec![0; words_for(n)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    /// Builds a set, rejecting members outside `[0, n)`.
    pub fn from_vertices(n: usize, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = Self::new(n);
        for v in vertices {
            if v >= n {
                return Err(Error::invalid(format!("vertex {v} out of range for n = {n}")));
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub(crate) fn from_words(n: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(n));
        VertexSet { n, words }
    }

    /// Size of the ground set `[0, n)`.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        popcount(&self.words)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    /// # Panics
    /// If `v` is outside the ground set.
    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range for n = {}", self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        iter_bits(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & !b)
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        assert_eq!(self.n, other.n, "vertex sets over different ground sets");
        let words = self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect();
        VertexSet { n: self.n, words }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_tracks_members() {
        let mut s = VertexSet::new(130);
        for v in [0, 63, 64, 129] {
            s.insert(v);
        }
        assert_eq!(s.len(), 4);
        s.remove(64);
        assert_eq!(s.to_vec(), vec![0, 63, 129]);
        assert!(VertexSet::from_vertices(5, [5]).is_err());
    }

    #[test]
    fn serde_uses_member_lists() {
        let s = VertexSet::from_vertices(10, [1, 4, 9]).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"n":10,"members":[1,4,9]}"#);
        let back: VertexSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
