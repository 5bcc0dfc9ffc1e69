use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid parabolic set: {0}")]
    InvalidParabolic(String),

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("index {index} out of range for rank {n} (expected 1..={max})", max = n.saturating_sub(1))]
    IndexOutOfRange { index: usize, n: usize },

    #[error("{w} is not a minimal coset representative for J = {{{j}}}")]
    NotMinimal { w: String, j: String },

    #[error("{w} is not a Grassmann permutation with descent at {d}")]
    NotGrassmann { w: String, d: usize },

    #[error("rank {n} exceeds the enumeration limit {limit}")]
    RankLimit { n: usize, limit: usize },

    #[error("the identity is excluded from this analysis")]
    Identity,

    #[error("Schubert variety of {w} is not stable under the Levi with simple roots {{{levi}}}")]
    NotStable { w: String, levi: String },

    #[error("{0}")]
    Precondition(String),

    #[error("invalid classification case: {0}")]
    InvalidCase(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
