use std::fmt;
use std::ops::Mul;

use serde::Serialize;

use super::{lower_interval_with, ParabolicSet, Permutation};
use crate::error::Result;
use crate::par::Execution;

/// Polynomial in `q` with non-negative integer coefficients, indexed by degree.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct PoincarePolynomial {
    coefficients: Vec<u64>,
}

impl PoincarePolynomial {
    pub fn new(mut coefficients: Vec<u64>) -> Self {
        while coefficients.len() > 1 && coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        if coefficients.is_empty() {
            coefficients.push(0);
        }
        Self { coefficients }
    }

    pub fn one() -> Self {
        Self::new(vec![1])
    }

    /// `1 + q + ... + q^{k-1}`.
    pub fn q_integer(k: usize) -> Self {
        Self::new(vec![1; k.max(1)])
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn is_palindromic(&self) -> bool {
        let c = &self.coefficients;
        c.iter().eq(c.iter().rev())
    }

    /// Value at `q = 1`, i.e. the number of cells.
    pub fn total(&self) -> u64 {
        self.coefficients.iter().sum()
    }
}

impl Mul for &PoincarePolynomial {
    type Output = PoincarePolynomial;

    fn mul(self, rhs: Self) -> PoincarePolynomial {
        let (a, b) = (&self.coefficients, &rhs.coefficients);
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        PoincarePolynomial::new(out)
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("q")?,
                (1, c) => write!(f, "{c}q")?,
                (k, 1) => write!(f, "q^{k}")?,
                (k, c) => write!(f, "{c}q^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Rank generating function of `{x ∈ W^J : x ≤ w}` by length; this is the
/// Poincaré polynomial of `X_{wQ_J}`.
pub fn poincare_polynomial(w: &Permutation, j: &ParabolicSet) -> Result<PoincarePolynomial> {
    poincare_polynomial_with(w, j, Execution::Sequential)
}

pub(crate) fn poincare_polynomial_with(
    w: &Permutation,
    j: &ParabolicSet,
    mode: Execution,
) -> Result<PoincarePolynomial> {
    let below = lower_interval_with(w, j, mode)?;
    let mut coefficients = vec![0u64; w.length() + 1];
    for x in &below {
        coefficients[x.length()] += 1;
    }
    Ok(PoincarePolynomial::new(coefficients))
}
