//! Schubert varieties in the Grassmannian `Gr(d, n)`.
//!
//! They are indexed by Grassmann permutations `w ∈ S_n^d`, those with
//! `w_1 < ... < w_d` and `w_{d+1} < ... < w_n`. Such a `w` is determined by its
//! column set `{w_1, ..., w_d}`, which splits into maximal runs of consecutive
//! integers `a_ℓ, a_ℓ + 1, ..., a_ℓ + b_ℓ`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::weyl::{self, ParabolicSet, Permutation};

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GrassmannSchubert {
    n: usize,
    d: usize,
    w: Permutation,
}

/// One maximal run `a, a+1, ..., a+b` of the column set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Run {
    pub start: usize,
    pub extra: usize,
}

impl Run {
    pub fn end(&self) -> usize {
        self.start + self.extra
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.extra + 1
    }
}

/// The divisor obtained from run `run` (1-indexed) by lowering its first
/// value `start` to `start - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunDivisor {
    pub run: usize,
    pub start: usize,
    pub divisor: GrassmannSchubert,
}

/// Column set `{1..p} ∪ {m, ..., m + (d - p) - 1}` with `m > p + 1`.
///
/// `m` is `None` only for the identity, where `p = d` and the second run is
/// empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SmoothForm {
    pub p: usize,
    pub m: Option<usize>,
}

impl GrassmannSchubert {
    pub fn new(w: Permutation, d: usize) -> Result<Self> {
        let n = w.rank();
        if d == 0 || d >= n {
            return Err(Error::IndexOutOfRange { index: d, n });
        }
        let increasing = |lo: usize, hi: usize| (lo..hi).all(|i| w.at(i) < w.at(i + 1));
        if !increasing(1, d) || !increasing(d + 1, n) {
            return Err(Error::NotGrassmann {
                w: w.to_string(),
                d,
            });
        }
        Ok(Self { n, d, w })
    }

    /// Builds the Grassmann permutation whose first window is `columns`.
    pub fn from_columns(n: usize, d: usize, columns: &[usize]) -> Result<Self> {
        if columns.len() != d {
            return Err(Error::Precondition(format!(
                "column set {columns:?} must have exactly {d} elements"
            )));
        }
        let mut first: Vec<usize> = columns.to_vec();
        first.sort_unstable();
        let rest = (1..=n).filter(|v| first.binary_search(v).is_err());
        let entries: Vec<usize> = first.iter().copied().chain(rest).collect();
        Self::new(Permutation::new(entries)?, d)
    }

    pub fn identity(n: usize, d: usize) -> Result<Self> {
        Self::new(Permutation::identity(n), d)
    }

    /// Every element of `S_n^d`, lexicographically ordered.
    pub fn all(n: usize, d: usize) -> Result<Vec<Self>> {
        let j = ParabolicSet::maximal(n, d)?;
        Ok(weyl::quotient(&j)?
            .into_iter()
            .map(|w| Self { n, d, w })
            .collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn permutation(&self) -> &Permutation {
        &self.w
    }

    pub fn is_identity(&self) -> bool {
        self.w.is_identity()
    }

    /// `J = Δ ∖ {d}`.
    pub fn parabolic(&self) -> ParabolicSet {
        ParabolicSet::maximal(self.n, self.d).expect("d validated on construction")
    }

    /// `{w_1, ..., w_d}` in increasing order.
    pub fn column_set(&self) -> Vec<usize> {
        (1..=self.d).map(|i| self.w.at(i)).collect()
    }

    pub fn runs(&self) -> Vec<Run> {
        let mut runs: Vec<Run> = Vec::new();
        for v in self.column_set() {
            match runs.last_mut() {
                Some(r) if r.end() + 1 == v => r.extra += 1,
                _ => runs.push(Run { start: v, extra: 0 }),
            }
        }
        runs
    }

    /// `Σ_{i ≤ d} (w_i - i)`.
    pub fn dimension(&self) -> usize {
        (1..=self.d).map(|i| self.w.at(i) - i).sum()
    }

    pub fn divisors_by_run(&self) -> Result<Vec<RunDivisor>> {
        if self.is_identity() {
            return Err(Error::Identity);
        }
        let columns = self.column_set();
        Ok(self
            .runs()
            .into_iter()
            .enumerate()
            .filter(|(_, r)| r.start > 1)
            .map(|(k, r)| {
                let lowered: Vec<usize> = columns
                    .iter()
                    .map(|&v| if v == r.start { v - 1 } else { v })
                    .collect();
                RunDivisor {
                    run: k + 1,
                    start: r.start,
                    divisor: Self::from_columns(self.n, self.d, &lowered)
                        .expect("lowering a run start keeps the column set valid"),
                }
            })
            .collect())
    }

    /// The Schubert divisors, one per run whose first value exceeds 1.
    pub fn schubert_divisors(&self) -> Result<Vec<Self>> {
        Ok(self
            .divisors_by_run()?
            .into_iter()
            .map(|rd| rd.divisor)
            .collect())
    }

    pub fn smooth_form(&self) -> Option<SmoothForm> {
        let runs = self.runs();
        match runs.as_slice() {
            [only] if only.start == 1 => Some(SmoothForm { p: self.d, m: None }),
            [only] => Some(SmoothForm {
                p: 0,
                m: Some(only.start),
            }),
            [first, second] if first.start == 1 => Some(SmoothForm {
                p: first.len(),
                m: Some(second.start),
            }),
            _ => None,
        }
    }
}

impl fmt::Debug for GrassmannSchubert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({}, {})[{}]", self.d, self.n, self.w)
    }
}
