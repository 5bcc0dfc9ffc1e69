//! Horospherical homogeneous spaces of Picard number one that are neither
//! projective spaces nor homogeneous under `G`, and the dimension bookkeeping
//! showing their closed orbits are never divisors.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseTag {
    A,
    B,
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DynkinType {
    A,
    D,
}

/// One member of the three families `(Γ, α, β)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PasquierCase {
    pub tag: CaseTag,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
}

/// A family as a template: parameter constraints and the homogeneous space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseTemplate {
    pub tag: CaseTag,
    pub dynkin_type: DynkinType,
    pub triple: &'static str,
    pub constraint: &'static str,
    pub homogeneous_space: &'static str,
}

pub fn pasquier_cases() -> Vec<CaseTemplate> {
    vec![
        CaseTemplate {
            tag: CaseTag::A,
            dynkin_type: DynkinType::A,
            triple: "(A_m, α_1, α_m)",
            constraint: "m ≥ 2",
            homogeneous_space: "SO_{2m+2}/P(ω_1)",
        },
        CaseTemplate {
            tag: CaseTag::B,
            dynkin_type: DynkinType::A,
            triple: "(A_m, α_i, α_{i+1})",
            constraint: "m ≥ 3, 1 ≤ i ≤ m-1",
            homogeneous_space: "Gr(i+1, m+2)",
        },
        CaseTemplate {
            tag: CaseTag::C,
            dynkin_type: DynkinType::D,
            triple: "(D_m, α_{m-1}, α_m)",
            constraint: "m ≥ 4",
            homogeneous_space: "Spin(2m+1)/P(ω_m)",
        },
    ]
}

/// `(dim X¹, dim of the closed orbit through v_α, dim of the one through v_β)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CaseDimensions {
    pub total: u64,
    pub orbit_alpha: u64,
    pub orbit_beta: u64,
}

fn binom2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

impl PasquierCase {
    pub fn new(tag: CaseTag, m: usize, i: Option<usize>) -> Result<Self> {
        let ok = match (tag, i) {
            (CaseTag::A, None) => m >= 2,
            (CaseTag::B, Some(i)) => m >= 3 && (1..m).contains(&i),
            (CaseTag::C, None) => m >= 4,
            _ => false,
        };
        if !ok {
            return Err(Error::InvalidCase(format!(
                "tag {tag:?} with m = {m}, i = {i:?}"
            )));
        }
        Ok(Self { tag, m, i })
    }

    pub fn a(m: usize) -> Result<Self> {
        Self::new(CaseTag::A, m, None)
    }

    pub fn b(m: usize, i: usize) -> Result<Self> {
        Self::new(CaseTag::B, m, Some(i))
    }

    pub fn c(m: usize) -> Result<Self> {
        Self::new(CaseTag::C, m, None)
    }

    pub fn dynkin_type(&self) -> DynkinType {
        match self.tag {
            CaseTag::A | CaseTag::B => DynkinType::A,
            CaseTag::C => DynkinType::D,
        }
    }

    pub fn homogeneous_space(&self) -> String {
        let m = self.m;
        match self.tag {
            CaseTag::A => format!("SO_{}/P(ω_1)", 2 * m + 2),
            CaseTag::B => format!("Gr({}, {})", self.i.unwrap_or(0) + 1, m + 2),
            CaseTag::C => format!("Spin({})/P(ω_{m})", 2 * m + 1),
        }
    }

    pub fn dimensions(&self) -> CaseDimensions {
        let m = self.m as u64;
        match self.tag {
            // quadric in P(C^{m+1} ⊕ (C^{m+1})*), closed orbits two copies of P^m
            CaseTag::A => CaseDimensions {
                total: 2 * m,
                orbit_alpha: m,
                orbit_beta: m,
            },
            // Gr(i+1, m+2) with closed orbits Gr(i, m+1) and Gr(i+1, m+1)
            CaseTag::B => {
                let i = self.i.unwrap_or(0) as u64;
                CaseDimensions {
                    total: (m - i + 1) * (i + 1),
                    orbit_alpha: (m - i + 1) * i,
                    orbit_beta: (m - i) * (i + 1),
                }
            }
            // odd orthogonal Grassmannian, closed orbits two even ones
            CaseTag::C => CaseDimensions {
                total: binom2(m + 1),
                orbit_alpha: binom2(m),
                orbit_beta: binom2(m),
            },
        }
    }

    /// Both closed orbits have codimension at least two, so no divisor is
    /// stable under the group.
    pub fn codim_at_least_two(&self) -> bool {
        let d = self.dimensions();
        d.orbit_alpha + 2 <= d.total && d.orbit_beta + 2 <= d.total
    }
}

impl fmt::Display for PasquierCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.tag, self.i) {
            (CaseTag::B, Some(i)) => write!(f, "(b) m={} i={i}", self.m),
            (CaseTag::A, _) => write!(f, "(a) m={}", self.m),
            _ => write!(f, "(c) m={}", self.m),
        }
    }
}

pub fn case_dimensions(case: &PasquierCase) -> CaseDimensions {
    case.dimensions()
}

pub fn codim_at_least_two(case: &PasquierCase) -> bool {
    case.codim_at_least_two()
}

/// Every valid parameterization with `m ≤ max_m`, in the order a, b, c.
pub fn all_cases(max_m: usize) -> Vec<PasquierCase> {
    let mut out = Vec::new();
    out.extend((2..=max_m).map(|m| PasquierCase { tag: CaseTag::A, m, i: None }));
    for m in 3..=max_m {
        out.extend((1..m).map(|i| PasquierCase { tag: CaseTag::B, m, i: Some(i) }));
    }
    out.extend((4..=max_m).map(|m| PasquierCase { tag: CaseTag::C, m, i: None }));
    out
}
