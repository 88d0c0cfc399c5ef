use std::fmt;

use thiserror::Error;

/// A single broken Cartan matrix axiom, with 0-based position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CartanViolation {
    /// `a_ii != 2`.
    Diagonal { index: usize, value: String },
    /// `a_ij > 0` for `i != j`.
    PositiveOffDiagonal { row: usize, col: usize, value: String },
    /// `a_ij != 0` while `a_ji == 0`.
    AsymmetricZero { row: usize, col: usize },
}

impl CartanViolation {
    /// The offending entry, 0-based.
    pub fn position(&self) -> (usize, usize) {
        match *self {
            CartanViolation::Diagonal { index, .. } => (index, index),
            CartanViolation::PositiveOffDiagonal { row, col, .. } => (row, col),
            CartanViolation::AsymmetricZero { row, col } => (row, col),
        }
    }
}

impl fmt::Display for CartanViolation {
    // Positions are shown 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanViolation::Diagonal { index, value } => {
                write!(
                    f,
                    "({}, {}): diagonal entry is {value}, expected 2",
                    index + 1,
                    index + 1
                )
            }
            CartanViolation::PositiveOffDiagonal { row, col, value } => {
                write!(f, "({},{}): off-diagonal entry {value} is positive", row + 1, col + 1)
            }
            CartanViolation::AsymmetricZero { row, col } => write!(
                f,
                "({},{}): entry is nonzero but ({},{}) is zero",
                row + 1,
                col + 1,
                col + 1,
                row + 1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("sublattice is not contained in the ambient lattice")]
    NotContained,

    #[error("subspaces intersect nontrivially")]
    OverlappingSubspaces,

    #[error("not a generalized Cartan matrix: {}", join(.0))]
    InvalidCartan(Vec<CartanViolation>),

    #[error("index {index} out of range for a rank {n} matrix")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("the index subset must be a proper subset of S")]
    NotProper,

    #[error("det A_I = 0: the Levi covering does not split")]
    NotSplit,

    #[error("matrix is not of indecomposable affine type")]
    NotAffine,

    #[error("matrix is not of finite type")]
    NotFinite,

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("invalid rank {rank} for family `{family}`")]
    InvalidRank { family: String, rank: usize },

    #[error("coweight has non-integer coordinates")]
    NonInteger,

    #[error("rank {n} exceeds the enumeration limit {limit}")]
    LimitExceeded { n: usize, limit: usize },

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

fn join(violations: &[CartanViolation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
