//! Packed vertex sets.
//!
//! Vertices are stored 0-based internally. Everything that faces a user
//! (text formats, `Display`, JSON) is 1-based.

use std::fmt;

use smallvec::{smallvec, SmallVec};

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// A subset of `[w]`, packed into machine words.
///
/// Two sets compare equal only if they were created for the same width.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet {
    width: usize,
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    pub fn empty(width: usize) -> Self {
        VertexSet {
            width,
            words: smallvec![0; words_for(width)],
        }
    }

    pub fn full(width: usize) -> Self {
        let mut s = Self::empty(width);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let n = (width - lo).min(WORD);
            *w = if n == WORD { !0 } else { (1u64 << n) - 1 };
        }
        s
    }

    /// Builds a set from 0-based indices. Panics on an index `>= width`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, indices: I) -> Self {
        let mut s = Self::empty(width);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Builds a set from 1-based vertex labels, returning `None` if a label is
    /// zero or exceeds `width`.
    pub fn from_one_based<I: IntoIterator<Item = usize>>(width: usize, labels: I) -> Option<Self> {
        let mut s = Self::empty(width);
        for v in labels {
            if v == 0 || v > width {
                return None;
            }
            s.insert(v - 1);
        }
        Some(s)
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.width, "vertex index {i} out of range for width {}", self.width);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < self.width {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.width && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    /// Complement with respect to `[w]`.
    pub fn complement(&self) -> VertexSet {
        let mut s = VertexSet::full(self.width);
        s.difference_with(self);
        s
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// `|self ∩ other|`, without allocating.
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Ascending 0-based indices.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Ascending 1-based labels.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + t);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A bitstring of arbitrary length, used for matrix columns.
pub(crate) fn all_ones(len: usize) -> Vec<u64> {
    let mut v = vec![!0u64; words_for(len)];
    if len % WORD != 0 {
        if let Some(last) = v.last_mut() {
            *last = (1u64 << (len % WORD)) - 1;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = VertexSet::from_one_based(70, [1, 5, 66]).unwrap();
        let b = VertexSet::from_one_based(70, [5, 66, 70]).unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(a.intersection(&b).to_one_based(), vec![5, 66]);
        assert_eq!(a.union(&b).len(), 4);
        assert_eq!(a.difference(&b).to_one_based(), vec![1]);
        assert!(a.intersection(&b).is_subset(&a));
        assert_eq!(a.complement().len(), 67);
        assert_eq!(a.first(), Some(0));
        assert_eq!(a.to_string(), "{1,5,66}");
        assert!(VertexSet::from_one_based(4, [0]).is_none());
        assert!(VertexSet::from_one_based(4, [5]).is_none());
    }

    #[test]
    fn full_sets() {
        for w in [0, 1, 63, 64, 65, 128, 130] {
            let f = VertexSet::full(w);
            assert_eq!(f.len(), w);
            assert!(f.complement().is_empty());
        }
        assert_eq!(all_ones(0).len(), 0);
        assert_eq!(all_ones(65), vec![!0, 1]);
    }
}
