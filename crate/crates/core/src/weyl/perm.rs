use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::parabolic::ParabolicSet;
use super::MAX_RANK;
use crate::error::{Error, Result};

/// An element of the symmetric group `S_n` in one-line notation.
///
/// Entries are the values `w(1), ..., w(n)`, 1-indexed. Left multiplication by
/// a simple transposition swaps the *values* `i, i+1`; right multiplication
/// swaps the *positions* `i, i+1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<u8>,
}

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty".into()));
        }
        if n > MAX_RANK {
            return Err(Error::InvalidPermutation(format!(
                "rank {n} exceeds the supported maximum {MAX_RANK}"
            )));
        }
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "entry {v} is outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("entry {v} repeats")));
            }
        }
        Ok(Self {
            entries: entries.into_iter().map(|v| v as u8).collect(),
        })
    }

    pub(crate) fn from_raw(entries: Vec<u8>) -> Self {
        debug_assert!(Self::new(entries.iter().map(|&v| v as usize).collect()).is_ok());
        Self { entries }
    }

    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_RANK).contains(&n), "rank {n} out of range");
        Self::from_raw((1..=n as u8).collect())
    }

    /// The longest element `w0 = [n, n-1, ..., 1]`.
    pub fn longest(n: usize) -> Self {
        assert!((1..=MAX_RANK).contains(&n), "rank {n} out of range");
        Self::from_raw((1..=n as u8).rev().collect())
    }

    /// The simple transposition `s_i` (swapping `i` and `i+1`).
    pub fn simple(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let mut w = Self::identity(n);
        w.entries.swap(i - 1, i);
        Ok(w)
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// The value at 1-indexed position `pos`.
    #[inline]
    pub fn at(&self, pos: usize) -> usize {
        self.entries[pos - 1] as usize
    }

    pub fn entries(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.entries.iter().map(|&v| v as usize)
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.entries
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.entries().collect()
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(k, &v)| v as usize == k + 1)
    }

    /// Number of inversions, which equals the Coxeter length.
    pub fn length(&self) -> usize {
        let e = &self.entries;
        let mut inv = 0;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i] > e[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.rank()];
        for (pos, &v) in self.entries.iter().enumerate() {
            inv[v as usize - 1] = pos as u8 + 1;
        }
        Self::from_raw(inv)
    }

    /// Composition `self ∘ other`, i.e. `(self·other)(j) = self(other(j))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        Ok(Self::from_raw(
            other
                .entries
                .iter()
                .map(|&v| self.entries[v as usize - 1])
                .collect(),
        ))
    }

    /// `s_i · self`: swaps the values `i` and `i+1`.
    pub fn left_simple(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.rank(), "simple index {i} out of range");
        let (a, b) = (i as u8, i as u8 + 1);
        Self::from_raw(
            self.entries
                .iter()
                .map(|&v| if v == a { b } else if v == b { a } else { v })
                .collect(),
        )
    }

    /// `self · s_i`: swaps the positions `i` and `i+1`.
    pub fn right_simple(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.rank(), "simple index {i} out of range");
        let mut e = self.entries.clone();
        e.swap(i - 1, i);
        Self::from_raw(e)
    }

    /// `self · t_{ab}`: swaps the entries at positions `a` and `b`.
    pub fn swap_positions(&self, a: usize, b: usize) -> Self {
        let mut e = self.entries.clone();
        e.swap(a - 1, b - 1);
        Self::from_raw(e)
    }

    /// Right descents `{i : w_i > w_{i+1}}`.
    pub fn right_descents(&self) -> ParabolicSet {
        let n = self.rank();
        let mut set = ParabolicSet::empty(n);
        for i in 1..n {
            if self.at(i) > self.at(i + 1) {
                set.insert(i);
            }
        }
        set
    }

    /// Left descents `{i : i+1 appears before i}`.
    pub fn left_descents(&self) -> ParabolicSet {
        self.inverse().right_descents()
    }

    /// Simple reflections occurring in any reduced word: `{i : max(w_1..w_i) > i}`.
    pub fn support(&self) -> ParabolicSet {
        let n = self.rank();
        let mut set = ParabolicSet::empty(n);
        let mut running_max = 0;
        for i in 1..n {
            running_max = running_max.max(self.at(i));
            if running_max > i {
                set.insert(i);
            }
        }
        set
    }

    /// Bruhat order via the sorted-prefix (tableau) criterion.
    pub fn bruhat_leq(&self, other: &Self) -> Result<bool> {
        self.check_rank(other)?;
        Ok(bruhat_leq_raw(&self.entries, &other.entries))
    }

    pub(crate) fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(())
    }
}

/// `u ≤ w` iff for every `k` the sorted prefix `{u_1..u_k}` is componentwise
/// below the sorted prefix `{w_1..w_k}`. Equivalently, for every `k` and every
/// threshold `t`, `#{i ≤ k : u_i ≥ t} ≤ #{i ≤ k : w_i ≥ t}`.
pub(crate) fn bruhat_leq_raw(u: &[u8], w: &[u8]) -> bool {
    let n = u.len();
    // diff[t] = #{i ≤ k : w_i ≥ t} - #{i ≤ k : u_i ≥ t}
    let mut diff = [0i32; MAX_RANK + 2];
    for k in 0..n {
        let (a, b) = (u[k] as usize, w[k] as usize);
        if a == b {
            continue;
        }
        // adding w_k raises thresholds 1..=b, adding u_k lowers 1..=a
        if b > a {
            for c in &mut diff[a + 1..=b] {
                *c += 1;
            }
        } else {
            for c in &mut diff[b + 1..=a] {
                *c -= 1;
                if *c < 0 {
                    return false;
                }
            }
        }
    }
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses comma-separated one-line notation, e.g. `"3,4,1,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("cannot parse entry {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.entries.iter())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<usize>::deserialize(deserializer)?;
        Self::new(entries).map_err(serde::de::Error::custom)
    }
}
