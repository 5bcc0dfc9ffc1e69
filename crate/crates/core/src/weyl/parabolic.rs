use std::fmt;

use serde::{Serialize, Serializer};

use super::MAX_RANK;
use crate::error::{Error, Result};

/// A subset of the simple-root indices `{1, ..., n-1}` of `GL_n`.
///
/// Encodes a standard parabolic subgroup (or its Levi factor) by the simple
/// roots it contains.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParabolicSet {
    n: usize,
    mask: u64,
}

impl ParabolicSet {
    pub fn empty(n: usize) -> Self {
        assert!((1..=MAX_RANK).contains(&n), "rank {n} out of range");
        Self { n, mask: 0 }
    }

    /// All of `Δ = {1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut set = Self::empty(n);
        set.mask = (1u64 << (n - 1)) - 1;
        set
    }

    pub fn new(n: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 || n > MAX_RANK {
            return Err(Error::InvalidParabolic(format!("rank {n} out of range")));
        }
        let mut set = Self::empty(n);
        for i in indices {
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            set.insert(i);
        }
        Ok(set)
    }

    /// `Δ ∖ {d}`, the maximal parabolic attached to `α_d`.
    pub fn maximal(n: usize, d: usize) -> Result<Self> {
        if d == 0 || d >= n {
            return Err(Error::IndexOutOfRange { index: d, n });
        }
        let mut set = Self::full(n);
        set.remove(d);
        Ok(set)
    }

    /// Parses comma-separated indices; the empty string is the empty set.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Self::new(n, []);
        }
        let indices = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParabolic(format!("cannot parse index {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, indices)
    }

    pub fn from_mask(n: usize, mask: u64) -> Self {
        let full = Self::full(n).mask;
        assert_eq!(mask & !full, 0, "mask has bits outside 1..n-1");
        Self { n, mask }
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i < self.n && self.mask & (1 << (i - 1)) != 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i >= 1 && i < self.n, "index {i} out of range");
        self.mask |= 1 << (i - 1);
    }

    pub fn remove(&mut self, i: usize) {
        if i >= 1 && i < self.n {
            self.mask &= !(1 << (i - 1));
        }
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.n).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// `Δ ∖ self`.
    pub fn complement(&self) -> Self {
        Self {
            n: self.n,
            mask: Self::full(self.n).mask & !self.mask,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            mask: self.mask & other.mask,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            mask: self.mask | other.mask,
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.mask & !other.mask == 0
    }

    /// Maximal runs of consecutive positions `[lo, hi]` joined by the indices
    /// of this set; index `i` joins positions `i` and `i+1`. Singletons are
    /// included, so the runs partition `{1..n}`.
    pub fn position_blocks(&self) -> Vec<(usize, usize)> {
        let mut blocks = Vec::new();
        let mut lo = 1;
        for i in 1..=self.n {
            if i == self.n || !self.contains(i) {
                blocks.push((lo, i));
                lo = i + 1;
            }
        }
        blocks
    }

    /// Every subset of `Δ` for rank `n`, in increasing mask order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = Self> {
        let full = Self::full(n).mask;
        (0..=full).map(move |mask| Self { n, mask })
    }

    /// Every subset of `self`, in increasing mask order.
    pub fn subsets(&self) -> impl Iterator<Item = Self> {
        let n = self.n;
        let top = self.mask;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == top {
                None
            } else {
                Some((cur.wrapping_sub(top)) & top)
            };
            Some(Self { n, mask: cur })
        })
    }
}

impl fmt::Display for ParabolicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ParabolicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}/{}", self.n)
    }
}

impl Serialize for ParabolicSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let s = ParabolicSet::parse(8, "1,3,4,7").unwrap();
        assert_eq!(s.to_string(), "1,3,4,7");
        assert_eq!(s.complement().to_vec(), vec![2, 5, 6]);
        assert!(ParabolicSet::parse(4, "4").is_err());
        assert!(ParabolicSet::parse(4, "0").is_err());
        assert!(ParabolicSet::parse(4, "").unwrap().is_empty());
    }

    #[test]
    fn position_blocks_partition() {
        let s = ParabolicSet::parse(6, "1,3,4,5").unwrap();
        assert_eq!(s.position_blocks(), vec![(1, 2), (3, 6)]);
        assert_eq!(
            ParabolicSet::empty(3).position_blocks(),
            vec![(1, 1), (2, 2), (3, 3)]
        );
    }

    #[test]
    fn subset_enumeration() {
        let s = ParabolicSet::parse(6, "1,3,5").unwrap();
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(&s)));
        assert_eq!(ParabolicSet::all_subsets(4).count(), 8);
    }
}
