//! The Weyl group of `GL_n`: permutations, Bruhat order, parabolic quotients
//! and Poincaré polynomials.

mod coset;
mod parabolic;
mod perm;
mod poincare;

use std::sync::atomic::{AtomicUsize, Ordering};

pub use coset::{
    in_parabolic_subgroup, is_min_coset_rep, longest_element, lower_covers, lower_interval,
    lower_interval_with, min_coset_rep, quotient, require_min_coset_rep,
};
pub use parabolic::ParabolicSet;
pub use perm::Permutation;
pub use poincare::{poincare_polynomial, PoincarePolynomial};

pub(crate) use perm::bruhat_leq_raw;

/// Hard cap on the rank of any permutation this crate will represent.
pub const MAX_RANK: usize = 64;

/// Default bound on the rank of brute-force enumerations.
pub const DEFAULT_RANK_LIMIT: usize = 8;

static RANK_LIMIT: AtomicUsize = AtomicUsize::new(DEFAULT_RANK_LIMIT);

/// Current enumeration rank limit.
pub fn rank_limit() -> usize {
    RANK_LIMIT.load(Ordering::Relaxed)
}

/// Sets the enumeration rank limit for the whole process. Values above
/// [`MAX_RANK`] are clamped.
pub fn set_rank_limit(limit: usize) {
    RANK_LIMIT.store(limit.min(MAX_RANK), Ordering::Relaxed);
}

pub(crate) fn check_rank_limit(n: usize) -> crate::Result<()> {
    let limit = rank_limit();
    if n > limit {
        return Err(crate::Error::RankLimit { n, limit });
    }
    Ok(())
}
