//! Exhaustive verification sweeps.
//!
//! Each [`Check`] pairs a closed-form criterion with an independent route
//! (reflection oracle, head enumeration, Poincaré polynomial) and runs it over
//! every instance up to a rank bound. Work items are independent; they are
//! evaluated with [`par`](crate::par) and reported in a fixed order, so a
//! sweep is reproducible byte for byte.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::bp::{self, ImageKind};
use crate::classify::{self, CaseTag};
use crate::error::{Error, Result};
use crate::grassmann::GrassmannSchubert;
use crate::levi;
use crate::par::{self, Execution};
use crate::toroidal;
use crate::weyl::{self, check_rank_limit, ParabolicSet, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Block criterion for heads against the reflection oracle.
    HeadOracle,
    /// Divisor `w_ℓ` is stable iff `a_ℓ - 1 ∈ I^c`, against the oracle.
    DivisorStability,
    /// Smooth form: `w` is the only `L_max`-head and the boundary is empty.
    SmoothUnique,
    /// Singular: no `L_max`-stable divisor, proper heads of codimension ≥ 2.
    Singular,
    /// Smooth form iff the Poincaré polynomial is palindromic.
    Smoothness,
    /// Closed-form minimal head is the minimum of every stable head set.
    MinimalHead,
    /// Maximality, support and Poincaré characterizations of BP agree.
    BpEquivalence,
    /// Divisors of BP decompositions project onto `v` or onto a divisor of it.
    DivisorProjection,
    /// Closed orbits of every case have codimension at least two.
    Classification,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::HeadOracle,
        Check::DivisorStability,
        Check::SmoothUnique,
        Check::Singular,
        Check::Smoothness,
        Check::MinimalHead,
        Check::BpEquivalence,
        Check::DivisorProjection,
        Check::Classification,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::HeadOracle => "head-oracle",
            Check::DivisorStability => "divisor-stability",
            Check::SmoothUnique => "smooth-unique",
            Check::Singular => "singular",
            Check::Smoothness => "smoothness",
            Check::MinimalHead => "minimal-head",
            Check::BpEquivalence => "bp-equivalence",
            Check::DivisorProjection => "divisor-projection",
            Check::Classification => "classification",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown check {s:?}")))
    }
}

/// Bounds for a sweep. `max_m` only applies to [`Check::Classification`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_n: usize,
    pub max_m: usize,
}

pub const DEFAULT_MAX_N: usize = 6;
pub const DEFAULT_MAX_M: usize = 1000;

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_n: DEFAULT_MAX_N,
            max_m: DEFAULT_MAX_M,
        }
    }
}

/// One work item's outcome.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub check: Check,
    pub instance: Value,
    pub checked: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub check: Check,
    pub max_n: usize,
    pub instances: u64,
    pub checked: u64,
    pub failures: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepResult {
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl SweepResult {
    pub fn passed(&self) -> bool {
        self.summary.failures == 0
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failures: u64,
    counterexample: Option<Value>,
}

impl Tally {
    fn observe(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(witness());
            }
        }
    }

    fn into_record(self, check: Check, instance: Value) -> Record {
        Record {
            check,
            instance,
            checked: self.checked,
            failures: self.failures,
            counterexample: self.counterexample,
        }
    }
}

pub fn run(check: Check, bounds: Bounds) -> Result<SweepResult> {
    run_with(check, bounds, Execution::default())
}

pub fn run_with(check: Check, bounds: Bounds, mode: Execution) -> Result<SweepResult> {
    if check != Check::Classification {
        check_rank_limit(bounds.max_n)?;
    }
    let records = match check {
        Check::HeadOracle => {
            let items = grassmann_levi_items(bounds.max_n);
            par::try_map(mode, &items, |(n, d, levi)| head_oracle(*n, *d, levi))?
        }
        Check::DivisorStability => {
            let items = grassmann_levi_items(bounds.max_n);
            par::try_map(mode, &items, |(n, d, levi)| divisor_stability(*n, *d, levi))?
        }
        Check::SmoothUnique => {
            let items = grassmann_items(bounds.max_n, 2, |x| x.smooth_form().is_some())?;
            par::try_map(mode, &items, smooth_unique)?
        }
        Check::Singular => {
            let items = grassmann_items(bounds.max_n, 2, |x| x.smooth_form().is_none())?;
            par::try_map(mode, &items, singular)?
        }
        Check::Smoothness => {
            let items = grassmann_items(bounds.max_n, 2, |_| true)?;
            par::try_map(mode, &items, smoothness)?
        }
        Check::MinimalHead => {
            let items = parabolic_pairs(bounds.max_n, false);
            par::try_map(mode, &items, |(j, levi)| minimal_head(j, levi))?
        }
        Check::BpEquivalence => {
            let items = parabolic_pairs(bounds.max_n, true);
            par::try_map(mode, &items, |(jp, k)| bp_equivalence(jp, k))?
        }
        Check::DivisorProjection => {
            let items = parabolic_pairs(bounds.max_n, true);
            par::try_map(mode, &items, |(jp, k)| divisor_projection(jp, k))?
        }
        Check::Classification => {
            let items = classification_items(bounds.max_m);
            par::map(mode, &items, |(tag, m)| classification(*tag, *m))
        }
    };
    let summary = Summary {
        check,
        max_n: bounds.max_n,
        instances: records.len() as u64,
        checked: records.iter().map(|r| r.checked).sum(),
        failures: records.iter().map(|r| r.failures).sum(),
    };
    Ok(SweepResult { records, summary })
}

fn grassmann_levi_items(max_n: usize) -> Vec<(usize, usize, ParabolicSet)> {
    let mut items = Vec::new();
    for n in 2..=max_n {
        for d in 1..n {
            items.extend(ParabolicSet::all_subsets(n).map(|levi| (n, d, levi)));
        }
    }
    items
}

fn grassmann_items(
    max_n: usize,
    min_n: usize,
    keep: impl Fn(&GrassmannSchubert) -> bool,
) -> Result<Vec<GrassmannSchubert>> {
    let mut items = Vec::new();
    for n in min_n..=max_n {
        for d in 1..n {
            items.extend(GrassmannSchubert::all(n, d)?.into_iter().filter(|x| keep(x)));
        }
    }
    Ok(items)
}

/// All `(A, B)` with `A, B ⊆ Δ`, optionally restricted to `A ⊆ B`.
fn parabolic_pairs(max_n: usize, nested: bool) -> Vec<(ParabolicSet, ParabolicSet)> {
    let mut items = Vec::new();
    for n in 2..=max_n {
        for b in ParabolicSet::all_subsets(n) {
            if nested {
                items.extend(b.subsets().map(|a| (a, b)));
            } else {
                items.extend(ParabolicSet::all_subsets(n).map(|a| (a, b)));
            }
        }
    }
    items
}

fn grassmann_instance(x: &GrassmannSchubert) -> Value {
    json!({"n": x.n(), "d": x.d(), "w": x.permutation()})
}

fn head_oracle(n: usize, d: usize, levi: &ParabolicSet) -> Result<Record> {
    let j = ParabolicSet::maximal(n, d)?;
    let mut tally = Tally::default();
    for x in GrassmannSchubert::all(n, d)? {
        let theta = x.permutation();
        let block = levi::is_degree1_head(theta, d, levi)?;
        let oracle = levi::is_stable(theta, &j, levi)?;
        tally.observe(block == oracle, || {
            json!({"w": theta, "block": block, "oracle": oracle})
        });
    }
    Ok(tally.into_record(
        Check::HeadOracle,
        json!({"n": n, "d": d, "levi": levi}),
    ))
}

fn divisor_stability(n: usize, d: usize, levi: &ParabolicSet) -> Result<Record> {
    let j = ParabolicSet::maximal(n, d)?;
    let mut tally = Tally::default();
    for x in GrassmannSchubert::all(n, d)? {
        if x.is_identity() || !levi::is_stable(x.permutation(), &j, levi)? {
            continue;
        }
        for ds in toroidal::divisor_stability(&x, levi)? {
            let oracle = levi::is_stable(ds.divisor.permutation(), &j, levi)?;
            tally.observe(ds.stable == oracle, || {
                json!({"w": x.permutation(), "divisor": ds.divisor.permutation(),
                       "predicted": ds.stable, "oracle": oracle})
            });
        }
    }
    Ok(tally.into_record(
        Check::DivisorStability,
        json!({"n": n, "d": d, "levi": levi}),
    ))
}

fn smooth_unique(x: &GrassmannSchubert) -> Result<Record> {
    let mut tally = Tally::default();
    let unique = toroidal::lmax_unique_head_check_with(x, Execution::Sequential)?;
    let j = x.parabolic();
    let lmax = levi::l_max(x.permutation(), &j)?;
    let boundary = levi::boundary_with(x.permutation(), &j, &lmax, Execution::Sequential)?;
    tally.observe(unique && boundary.is_empty(), || {
        json!({"l_max": lmax, "unique_head": unique, "boundary": boundary})
    });
    Ok(tally.into_record(Check::SmoothUnique, grassmann_instance(x)))
}

fn singular(x: &GrassmannSchubert) -> Result<Record> {
    let mut tally = Tally::default();
    let ok = toroidal::no_stable_divisor_check_with(x, Execution::Sequential)?;
    tally.observe(ok, || {
        let lmax = levi::l_max(x.permutation(), &x.parabolic()).ok();
        json!({"l_max": lmax})
    });
    Ok(tally.into_record(Check::Singular, grassmann_instance(x)))
}

fn smoothness(x: &GrassmannSchubert) -> Result<Record> {
    let mut tally = Tally::default();
    let poly = weyl::poincare_polynomial(x.permutation(), &x.parabolic())?;
    let form = x.smooth_form();
    tally.observe(form.is_some() == poly.is_palindromic(), || {
        json!({"smooth_form": form, "poincare": poly})
    });
    Ok(tally.into_record(Check::Smoothness, grassmann_instance(x)))
}

fn minimal_head(j: &ParabolicSet, levi_set: &ParabolicSet) -> Result<Record> {
    let expected = levi::minimal_head(j, levi_set)?;
    let mut tally = Tally::default();
    for w in weyl::quotient(j)? {
        if !levi::is_stable(&w, j, levi_set)? {
            continue;
        }
        let heads = levi::heads_below_with(&w, j, levi_set, Execution::Sequential)?;
        let ok = heads.minimal_head.as_ref() == Some(&expected);
        tally.observe(ok, || json!({"w": w, "minimal_head": heads.minimal_head}));
    }
    Ok(tally.into_record(
        Check::MinimalHead,
        json!({"n": j.rank(), "parabolic": j, "levi": levi_set, "expected": expected}),
    ))
}

fn bp_equivalence(parabolic: &ParabolicSet, quotient: &ParabolicSet) -> Result<Record> {
    let mut tally = Tally::default();
    for w in weyl::quotient(parabolic)? {
        let a = bp::analyze(&w, parabolic, quotient)?;
        tally.observe(a.characterizations.agree(), || {
            json!({"w": w, "characterizations": a.characterizations})
        });
    }
    Ok(tally.into_record(
        Check::BpEquivalence,
        json!({"n": parabolic.rank(), "parabolic": parabolic, "quotient": quotient}),
    ))
}

fn divisor_projection(parabolic: &ParabolicSet, quotient: &ParabolicSet) -> Result<Record> {
    let mut tally = Tally::default();
    for w in weyl::quotient(parabolic)? {
        let is_bp = bp::poincare_factorizes(&w, parabolic, quotient)?;
        let (v, _) = bp::parabolic_decompose(&w, parabolic, quotient)?;
        for pr in bp::project_all_divisors(&w, parabolic, quotient)? {
            let dichotomy = !is_bp || projection_dichotomy(&pr, &v, quotient)?;
            let ok = dichotomy && pr.simple_clause_holds(quotient);
            tally.observe(ok, || json!({"w": w, "v": v, "bp": is_bp, "projection": pr}));
        }
    }
    Ok(tally.into_record(
        Check::DivisorProjection,
        json!({"n": parabolic.rank(), "parabolic": parabolic, "quotient": quotient}),
    ))
}

/// The image is `v` itself or one of its lower covers in `W^K`.
fn projection_dichotomy(
    pr: &bp::DivisorProjection,
    v: &Permutation,
    quotient: &ParabolicSet,
) -> Result<bool> {
    Ok(match pr.kind {
        ImageKind::Onto => &pr.image == v,
        ImageKind::Divisor => weyl::lower_covers(v, quotient)?.contains(&pr.image),
        ImageKind::Deeper => false,
    })
}

fn classification_items(max_m: usize) -> Vec<(CaseTag, usize)> {
    let mut items: Vec<(CaseTag, usize)> = (2..=max_m).map(|m| (CaseTag::A, m)).collect();
    items.extend((3..=max_m).map(|m| (CaseTag::B, m)));
    items.extend((4..=max_m).map(|m| (CaseTag::C, m)));
    items
}

fn classification(tag: CaseTag, m: usize) -> Record {
    let cases: Vec<classify::PasquierCase> = match tag {
        CaseTag::B => (1..m)
            .map(|i| classify::PasquierCase::b(m, i).expect("valid parameters"))
            .collect(),
        _ => vec![classify::PasquierCase::new(tag, m, None).expect("valid parameters")],
    };
    let mut tally = Tally::default();
    for c in &cases {
        tally.observe(c.codim_at_least_two(), || {
            json!({"case": c, "dimensions": c.dimensions()})
        });
    }
    tally.into_record(Check::Classification, json!({"tag": tag, "m": m}))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Bounds {
        Bounds { max_n: 4, max_m: 30 }
    }

    #[test]
    fn every_check_passes_at_small_rank() {
        for check in Check::ALL {
            let r = run(check, small()).unwrap();
            assert!(r.passed(), "{check}: {:?}", r.records.iter().find(|x| x.failures > 0));
            assert!(r.summary.checked > 0, "{check} checked nothing");
        }
    }

    #[test]
    fn modes_agree() {
        for check in [Check::HeadOracle, Check::BpEquivalence, Check::Classification] {
            let seq = run_with(check, small(), Execution::Sequential).unwrap();
            let par = run_with(check, small(), Execution::Parallel).unwrap();
            assert_eq!(seq, par);
        }
    }

    #[test]
    fn names_round_trip() {
        for check in Check::ALL {
            assert_eq!(check.name().parse::<Check>().unwrap(), check);
            assert_eq!(
                serde_json::to_value(check).unwrap(),
                Value::String(check.name().into())
            );
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn rank_limit_enforced() {
        let bounds = Bounds { max_n: weyl::rank_limit() + 1, max_m: 10 };
        assert!(matches!(run(Check::HeadOracle, bounds), Err(Error::RankLimit { .. })));
        assert!(run(Check::Classification, bounds).is_ok());
    }
}
