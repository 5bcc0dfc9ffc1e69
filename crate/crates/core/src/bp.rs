//! Parabolic and Billey–Postnikov decompositions.
//!
//! For `J_P ⊆ K` and `w ∈ W^{J_P}` there is a unique factorization `w = v·u`
//! with `v ∈ W^K` and `u ∈ W_K ∩ W^{J_P}`, and lengths add. The projection
//! `X_{wP} → X_{vQ}` has generic fibre `X_{uP}`. The factorization is a BP
//! decomposition when the Poincaré polynomials multiply; two combinatorial
//! characterizations of that are implemented alongside the definition.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grassmann::GrassmannSchubert;
use crate::levi;
use crate::par::Execution;
use crate::toroidal::{self, ToroidalReport};
use crate::weyl::{self, poincare_polynomial, ParabolicSet, Permutation};

fn check_inputs(w: &Permutation, parabolic: &ParabolicSet, quotient: &ParabolicSet) -> Result<()> {
    weyl::require_min_coset_rep(w, parabolic)?;
    if quotient.rank() != w.rank() {
        return Err(Error::RankMismatch {
            left: w.rank(),
            right: quotient.rank(),
        });
    }
    if !parabolic.is_subset(quotient) {
        return Err(Error::Precondition(format!(
            "J_P = {{{parabolic}}} is not contained in K = {{{quotient}}}"
        )));
    }
    Ok(())
}

/// `w = v·u` with `v = min_coset_rep(w, K)` and `u = v⁻¹w`.
pub fn parabolic_decompose(
    w: &Permutation,
    parabolic: &ParabolicSet,
    quotient: &ParabolicSet,
) -> Result<(Permutation, Permutation)> {
    check_inputs(w, parabolic, quotient)?;
    let v = weyl::min_coset_rep(w, quotient);
    let u = v.inverse().compose(w)?;
    debug_assert_eq!(v.length() + u.length(), w.length());
    debug_assert!(weyl::in_parabolic_subgroup(&u, quotient));
    debug_assert!(weyl::is_min_coset_rep(&u, parabolic));
    Ok((v, u))
}

/// `u` is Bruhat-maximal in `[id, w] ∩ W^{J_P} ∩ W_K`.
pub fn is_bp_maximality(w: &Permutation, parabolic: &ParabolicSet, quotient: &ParabolicSet) -> Result<bool> {
    let (_, u) = parabolic_decompose(w, parabolic, quotient)?;
    let below = weyl::lower_interval_with(w, parabolic, Execution::Sequential)?;
    let u_len = u.length();
    Ok(!below.iter().any(|x| {
        x.length() > u_len
            && weyl::in_parabolic_subgroup(x, quotient)
            && weyl::bruhat_leq_raw(u.raw(), x.raw())
    }))
}

/// `S(v) ∩ K ⊆ D_L(u')` where `u' = u·w_{0,J_P}` is the top of `u W_{J_P}`.
pub fn is_bp_support(w: &Permutation, parabolic: &ParabolicSet, quotient: &ParabolicSet) -> Result<bool> {
    let (v, u) = parabolic_decompose(w, parabolic, quotient)?;
    let u_top = u.compose(&weyl::longest_element(parabolic))?;
    Ok(v.support()
        .intersection(quotient)
        .is_subset(&u_top.left_descents()))
}

/// `P_{w,J_P} = P_{v,K} · P_{u,J_P}`.
pub fn poincare_factorizes(w: &Permutation, parabolic: &ParabolicSet, quotient: &ParabolicSet) -> Result<bool> {
    let (v, u) = parabolic_decompose(w, parabolic, quotient)?;
    let whole = poincare_polynomial(w, parabolic)?;
    let base = poincare_polynomial(&v, quotient)?;
    let fibre = poincare_polynomial(&u, parabolic)?;
    Ok(whole == &base * &fibre)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Characterizations {
    pub maximality: bool,
    pub support: bool,
    pub poincare: bool,
}

impl Characterizations {
    pub fn agree(&self) -> bool {
        self.maximality == self.support && self.support == self.poincare
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BPDecomposition {
    pub w: Permutation,
    pub parabolic: ParabolicSet,
    pub quotient: ParabolicSet,
    pub v: Permutation,
    pub u: Permutation,
    /// Whether the Poincaré polynomial factors, which defines a BP decomposition.
    pub bp: bool,
    pub characterizations: Characterizations,
}

/// Decomposes and evaluates all three characterizations.
pub fn analyze(w: &Permutation, parabolic: &ParabolicSet, quotient: &ParabolicSet) -> Result<BPDecomposition> {
    let (v, u) = parabolic_decompose(w, parabolic, quotient)?;
    let characterizations = Characterizations {
        maximality: is_bp_maximality(w, parabolic, quotient)?,
        support: is_bp_support(w, parabolic, quotient)?,
        poincare: poincare_factorizes(w, parabolic, quotient)?,
    };
    Ok(BPDecomposition {
        w: w.clone(),
        parabolic: *parabolic,
        quotient: *quotient,
        v,
        u,
        bp: characterizations.poincare,
        characterizations,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ImageKind {
    /// The divisor maps onto `X_{vQ}`.
    Onto,
    /// The divisor maps onto a Schubert divisor of `X_{vQ}`.
    Divisor,
    /// The image has codimension at least two in `X_{vQ}`.
    Deeper,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorProjection {
    pub divisor: Permutation,
    pub image: Permutation,
    pub kind: ImageKind,
    /// `i` with `τ = w·s_i`, when the divisor arises from a simple reflection
    /// acting on positions.
    pub simple_reflection: Option<usize>,
}

impl DivisorProjection {
    /// For `τ = w·s_i` with `i ∉ K`, the image must move off `v`.
    pub fn simple_clause_holds(&self, quotient: &ParabolicSet) -> bool {
        match self.simple_reflection {
            Some(s) if !quotient.contains(s) => self.kind != ImageKind::Onto,
            _ => true,
        }
    }
}

/// Image of the Schubert divisor `X_{τP}` of `X_{wP}` under `G/P → G/Q`.
pub fn project_divisor(
    tau: &Permutation,
    w: &Permutation,
    parabolic: &ParabolicSet,
    quotient: &ParabolicSet,
) -> Result<DivisorProjection> {
    let (v, _) = parabolic_decompose(w, parabolic, quotient)?;
    if !weyl::lower_covers(w, parabolic)?.contains(tau) {
        return Err(Error::Precondition(format!(
            "{tau} is not a Schubert divisor of {w}"
        )));
    }
    let image = weyl::min_coset_rep(tau, quotient);
    let drop = v.length() - image.length();
    let kind = match drop {
        0 => ImageKind::Onto,
        1 => ImageKind::Divisor,
        _ => ImageKind::Deeper,
    };
    debug_assert!(kind != ImageKind::Onto || image == v);
    let simple_reflection = (1..w.rank()).find(|&i| &w.right_simple(i) == tau);
    Ok(DivisorProjection {
        divisor: tau.clone(),
        image,
        kind,
        simple_reflection,
    })
}

/// Every divisor of `X_{wP}` projected to `X_{vQ}`.
pub fn project_all_divisors(
    w: &Permutation,
    parabolic: &ParabolicSet,
    quotient: &ParabolicSet,
) -> Result<Vec<DivisorProjection>> {
    weyl::lower_covers(w, parabolic)?
        .iter()
        .map(|tau| project_divisor(tau, w, parabolic, quotient))
        .collect()
}

/// Outcome of pushing the Grassmannian toroidal test through `X_{wP} → X_{vQ_d}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransportReport {
    pub decomposition: BPDecomposition,
    pub smooth: bool,
    pub base: ToroidalReport,
    /// Set only when the decomposition is BP, `X_{wP}` is smooth and the base
    /// fails the necessary conditions.
    pub certified_non_toroidal: bool,
}

/// If `X_{wP}` were a smooth toroidal `L_I`-variety with a BP decomposition
/// over the Grassmannian `G/Q_d`, the base `X_{vQ_d}` would be toroidal too.
/// So a failing base certifies that `X_{wP}` is not toroidal.
pub fn transport_toroidal(
    w: &Permutation,
    parabolic: &ParabolicSet,
    d: usize,
    levi: &ParabolicSet,
) -> Result<TransportReport> {
    let quotient = ParabolicSet::maximal(w.rank(), d)?;
    if !levi::is_stable(w, parabolic, levi)? {
        return Err(Error::NotStable {
            w: w.to_string(),
            levi: levi.to_string(),
        });
    }
    let decomposition = analyze(w, parabolic, &quotient)?;
    let smooth = poincare_polynomial(w, parabolic)?.is_palindromic();
    let base_schubert = GrassmannSchubert::new(decomposition.v.clone(), d)?;
    let base = toroidal::toroidal_necessary(&base_schubert, levi)?;
    let certified_non_toroidal = decomposition.bp && smooth && base.certified_non_toroidal();
    Ok(TransportReport {
        decomposition,
        smooth,
        base,
        certified_non_toroidal,
    })
}

/// Separate utility, not part of the single-step BP test: searches for a
/// chain of Grassmannian BP decompositions `w = v·u` with `v` of smooth form
/// over some maximal `Q_d ⊇ P`, recursing into `u`. In type A this decides
/// (rational) smoothness of `X_{wP}`.
pub fn smooth_by_bp_chain(w: &Permutation, parabolic: &ParabolicSet) -> Result<bool> {
    weyl::require_min_coset_rep(w, parabolic)?;
    if w.is_identity() {
        return Ok(true);
    }
    for d in parabolic.complement().iter() {
        let quotient = ParabolicSet::maximal(w.rank(), d)?;
        let (v, u) = parabolic_decompose(w, parabolic, &quotient)?;
        if v.is_identity() || !poincare_factorizes(w, parabolic, &quotient)? {
            continue;
        }
        let base_smooth = GrassmannSchubert::new(v, d)?.smooth_form().is_some();
        if base_smooth && smooth_by_bp_chain(&u, parabolic)? {
            return Ok(true);
        }
    }
    Ok(false)
}
