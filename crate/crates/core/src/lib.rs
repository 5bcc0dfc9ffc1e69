//! Levi-subgroup actions on Schubert varieties in type-A flag varieties.
//!
//! The crate works entirely in the Weyl group `S_n` of `GL_n`: Schubert
//! varieties `X_{wQ}` are indexed by minimal coset representatives `w ∈ W^J`,
//! standard Levi subgroups by subsets `I` of the simple roots, and every
//! geometric question (Levi stability, orbit containment, divisors) is decided
//! by Bruhat-order combinatorics. Closed-form criteria are paired with
//! brute-force oracles so that [`sweep`] can cross-check them exhaustively at
//! small rank.
//!
//! Modules:
//! - [`weyl`]: permutations, Bruhat order, parabolic quotients, Poincaré polynomials.
//! - [`grassmann`]: Grassmann permutations, runs, divisors, smooth form.
//! - [`levi`]: Levi blocks, stability, degree-1 heads, boundary.
//! - [`toroidal`]: necessary conditions for toroidal Grassmannian Schubert varieties.
//! - [`bp`]: parabolic and BP decompositions.
//! - [`classify`]: the horospherical Picard-number-one case table.
//! - [`sweep`]: exhaustive verification sweeps.

pub mod bp;
pub mod classify;
mod error;
pub mod grassmann;
pub mod levi;
pub mod par;
pub mod sweep;
pub mod toroidal;
pub mod weyl;

pub use error::{Error, Result};
pub use grassmann::GrassmannSchubert;
pub use levi::{HeadReport, LeviDescriptor};
pub use par::Execution;
pub use weyl::{ParabolicSet, Permutation, PoincarePolynomial};
