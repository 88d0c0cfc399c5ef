//! Exact isomorphism data for Kac-Moody groups attached to generalized Cartan
//! matrices: the type of the matrix, the center of the simply connected group,
//! and the finite kernel `Γ_I` of the Levi covering `K(A_I) × T'_I → K_I(A)`.
//!
//! All objects are modeled through integer lattices in coroot coordinates.
//! `Γ_I` is computed by two independent routes (the unit-lattice quotient
//! `L(A)/L_I(A)` and the row-lattice quotient `E_I(A)/E(A_I)`) which are
//! cross-checked in [`GammaMode::Checked`].

pub mod cartan;
pub mod center;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod parabolic;
mod scalar;

pub use cartan::{CartanMatrix, CartanType, FiniteFamily, IndexSubset, MarksVector, Series, TypeKind};
pub use center::{CenterGenerators, CenterStructure};
pub use error::{CartanViolation, Error, Result};
pub use linalg::{HermiteBasis, SmithDecomposition};
pub use parabolic::{GammaMode, LeviComponent, ParabolicReport, Structure};
pub use scalar::{gcd_all, lcm_all, IntegerScalar};

/// Arbitrary-precision integer used by the domain modules.
pub type Int = num_bigint::BigInt;
/// Exact rational over [`Int`].
pub type Rational = num_rational::BigRational;
pub type IntMatrix = linalg::Matrix<Int>;
pub type RatMatrix = linalg::Matrix<Rational>;
pub type Lattice = lattice::Lattice<Int>;
pub type FiniteAbelianGroup = lattice::FiniteAbelianGroup<Int>;
pub type QuotientStructure = lattice::QuotientStructure<Int>;
pub type IndexValue = lattice::IndexValue<Int>;
