//! Fixed-width vertex bit sets.
//!
//! A [`VertexSet`] holds one bit per vertex index of an associated graph and
//! is the universal currency of the crate: black sets, dominating sets,
//! extension frontiers and witnesses are all `VertexSet`s. Sets are plain
//! values; all binary operations require both operands to share a width.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Largest supported vertex count. Covers every reproduction target in the
/// suite, including 30 x 30 grid witness checks (900 vertices).
pub const MAX_VERTICES: usize = 1024;

const WORD_BITS: usize = 64;

#[inline]
fn words_for(width: usize) -> usize {
    width.div_ceil(WORD_BITS)
}

/// A set of vertex indices `0..width`, stored as 64-bit words.
///
/// Invariants: bits at positions `>= width` are always zero, and iteration
/// yields members in ascending index order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    words: Vec<u64>,
    width: usize,
}

impl VertexSet {
    /// The empty set over indices `0..width`.
    pub fn new(width: usize) -> Self {
        assert!(width <= MAX_VERTICES, "width {width} exceeds MAX_VERTICES");
        VertexSet {
            words: vec![0; words_for(width)],
            width,
        }
    }

    /// The full set `{0, .., width-1}`.
    pub fn full(width: usize) -> Self {
        let mut s = VertexSet::new(width);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.mask_tail();
        s
    }

    /// A one-element set.
    pub fn singleton(width: usize, v: usize) -> Self {
        let mut s = VertexSet::new(width);
        s.insert(v);
        s
    }

    /// Builds a set from an iterator of indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, indices: I) -> Self {
        let mut s = VertexSet::new(width);
        for v in indices {
            s.insert(v);
        }
        s
    }

    /// Number of representable indices (the fixed width), not the member count.
    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of members (popcount).
    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Membership test; indices `>= width` are never members.
    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.width && (self.words[v / WORD_BITS] >> (v % WORD_BITS)) & 1 == 1
    }

    /// Inserts `v`. Panics if `v >= width`.
    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.width, "index {v} out of range for width {}", self.width);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    /// Removes `v`. Panics if `v >= width`.
    #[inline]
    pub fn remove(&mut self, v: usize) {
        assert!(v < self.width, "index {v} out of range for width {}", self.width);
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    pub fn clear(&mut self) {
        for w in self.words.iter_mut() {
            *w = 0;
        }
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    #[inline]
    fn assert_same_width(&self, other: &VertexSet) {
        assert_eq!(
            self.width, other.width,
            "vertex sets of different widths ({} vs {})",
            self.width, other.width
        );
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.assert_same_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.assert_same_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.assert_same_width(other);
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

    /// Complement within `0..width`.
    pub fn complement(&self) -> VertexSet {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        s.mask_tail();
        s
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.assert_same_width(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.assert_same_width(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Popcount of the intersection, without allocating.
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.assert_same_width(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Iterates members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Members collected into a vector, ascending.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn mask_tail(&mut self) {
        let used = self.width % WORD_BITS;
        if used != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << used) - 1;
            }
        }
        if self.width == 0 {
            self.words.clear();
        }
    }
}

pub struct Iter<'a> {
    set: &'a VertexSet,
    word_idx: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * WORD_BITS + bit);
            }
            self.word_idx += 1;
            if self.word_idx >= self.set.words.len() {
                return None;
            }
            self.current = self.set.words[self.word_idx];
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
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
