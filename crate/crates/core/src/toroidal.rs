//! Necessary conditions for a Grassmannian Schubert variety to be a toroidal
//! `L_I`-variety.
//!
//! Every Schubert divisor is stable under the Borel of `L_I`, so a divisor
//! that is not `L_I`-stable but contains an `L_I`-orbit is a color containing
//! an orbit. Such a divisor certifies that the variety is not toroidal. The
//! converse is not available, so a clean report only says the necessary
//! conditions pass.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grassmann::GrassmannSchubert;
use crate::levi::{self, LeviDescriptor};
use crate::par::Execution;
use crate::weyl::ParabolicSet;
use crate::Permutation;

/// Stability of a single Schubert divisor `X_{w_ℓ Q_d}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorStability {
    pub divisor: GrassmannSchubert,
    pub run: usize,
    pub run_start: usize,
    pub stable: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Criterion {
    /// `a_ℓ - 1 ∈ I^c`: the divisor is `L_I`-stable.
    #[serde(rename = "criterion-1")]
    Stable,
    /// Unstable, but no `L_I`-stable Schubert subvariety inside it.
    #[serde(rename = "criterion-2")]
    NoHead,
    #[serde(rename = "violated")]
    Violated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "passes-necessary")]
    PassesNecessary,
    #[serde(rename = "fails")]
    Fails,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorRecord {
    pub w: Permutation,
    pub run: usize,
    pub stable: bool,
    pub criterion: Criterion,
    pub witness: Option<Permutation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToroidalReport {
    pub subject: GrassmannSchubert,
    pub levi: LeviDescriptor,
    pub divisors: Vec<DivisorRecord>,
    pub verdict: Verdict,
}

impl ToroidalReport {
    /// A failing divisor is a color containing an `L_I`-orbit.
    pub fn certified_non_toroidal(&self) -> bool {
        self.verdict == Verdict::Fails
    }
}

fn require_stable(x: &GrassmannSchubert, levi: &ParabolicSet) -> Result<()> {
    if levi.rank() != x.n() {
        return Err(Error::RankMismatch {
            left: x.n(),
            right: levi.rank(),
        });
    }
    if !levi::top_of_every_block(&x.column_set(), levi) {
        return Err(Error::NotStable {
            w: x.permutation().to_string(),
            levi: levi.to_string(),
        });
    }
    Ok(())
}

/// Each divisor `w_ℓ` is `L_I`-stable iff `a_ℓ - 1 ∈ I^c`.
pub fn divisor_stability(x: &GrassmannSchubert, levi: &ParabolicSet) -> Result<Vec<DivisorStability>> {
    require_stable(x, levi)?;
    let complement = levi.complement();
    Ok(x.divisors_by_run()?
        .into_iter()
        .map(|rd| DivisorStability {
            stable: complement.contains(rd.start - 1),
            divisor: rd.divisor,
            run: rd.run,
            run_start: rd.start,
        })
        .collect())
}

pub fn toroidal_necessary(x: &GrassmannSchubert, levi: &ParabolicSet) -> Result<ToroidalReport> {
    toroidal_necessary_with(x, levi, Execution::default())
}

/// Checks every Schubert divisor against the two criteria. The identity has
/// no divisors and passes vacuously.
pub fn toroidal_necessary_with(
    x: &GrassmannSchubert,
    levi: &ParabolicSet,
    mode: Execution,
) -> Result<ToroidalReport> {
    require_stable(x, levi)?;
    let per_divisor = if x.is_identity() {
        Vec::new()
    } else {
        divisor_stability(x, levi)?
    };
    let j = x.parabolic();
    let mut divisors = Vec::with_capacity(per_divisor.len());
    for ds in per_divisor {
        let (criterion, witness) = if ds.stable {
            (Criterion::Stable, None)
        } else {
            let heads = levi::heads_below_with(ds.divisor.permutation(), &j, levi, mode)?;
            match heads.minimal_head {
                Some(h) => (Criterion::Violated, Some(h)),
                None if heads.is_empty() => (Criterion::NoHead, None),
                None => unreachable!("non-empty head set without a minimum"),
            }
        };
        divisors.push(DivisorRecord {
            w: ds.divisor.permutation().clone(),
            run: ds.run,
            stable: ds.stable,
            criterion,
            witness,
        });
    }
    let verdict = if divisors.iter().any(|d| d.criterion == Criterion::Violated) {
        Verdict::Fails
    } else {
        Verdict::PassesNecessary
    };
    Ok(ToroidalReport {
        subject: x.clone(),
        levi: levi::blocks(levi),
        divisors,
        verdict,
    })
}

/// For a smooth Schubert variety, `w` is its own unique `L_max`-head, so no
/// Schubert divisor contains an `L_max`-orbit.
pub fn lmax_unique_head_check(x: &GrassmannSchubert) -> Result<bool> {
    lmax_unique_head_check_with(x, Execution::default())
}

pub fn lmax_unique_head_check_with(x: &GrassmannSchubert, mode: Execution) -> Result<bool> {
    if x.smooth_form().is_none() {
        return Err(Error::Precondition(format!(
            "{} is not of smooth form",
            x.permutation()
        )));
    }
    let j = x.parabolic();
    let lmax = levi::l_max(x.permutation(), &j)?;
    let heads = levi::heads_below_with(x.permutation(), &j, &lmax, mode)?;
    Ok(heads.heads.as_slice() == std::slice::from_ref(x.permutation()))
}

/// For a singular Schubert variety: no Schubert divisor is `L_max`-stable and
/// every proper `L_max`-head has codimension at least two.
pub fn no_stable_divisor_check(x: &GrassmannSchubert) -> Result<bool> {
    no_stable_divisor_check_with(x, Execution::default())
}

pub fn no_stable_divisor_check_with(x: &GrassmannSchubert, mode: Execution) -> Result<bool> {
    if x.smooth_form().is_some() {
        return Err(Error::Precondition(format!(
            "{} is of smooth form",
            x.permutation()
        )));
    }
    let j = x.parabolic();
    let w = x.permutation();
    let lmax = levi::l_max(w, &j)?;
    let any_stable_divisor = divisor_stability(x, &lmax)?.iter().any(|d| d.stable);
    let dim = w.length();
    let heads = levi::heads_below_with(w, &j, &lmax, mode)?;
    let shallow_head = heads
        .heads
        .iter()
        .any(|h| h != w && dim - h.length() < 2);
    Ok(!any_stable_divisor && !shallow_head)
}
