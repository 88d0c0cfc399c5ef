//! Exact integer and rational matrix kernels.
//!
//! Everything here is generic over [`IntegerScalar`](crate::IntegerScalar);
//! the rest of the crate instantiates it at [`BigInt`](num_bigint::BigInt).

mod elimination;
mod hermite;
mod matrix;
mod smith;

pub use elimination::{adjugate, denominator_lcm, determinant, is_integral, rank, rational_inverse};
pub use hermite::{hermite_row_basis, left_integer_kernel, saturate, HermiteBasis};
pub use matrix::Matrix;
pub use smith::{smith, SmithDecomposition};
