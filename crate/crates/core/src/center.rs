//! Center of the simply connected Kac-Moody group and of its parabolic
//! subgroups, as (finite abelian group) × (torus).
//!
//! Coweights `Λ` are row vectors in coroot coordinates and the exponential is
//! reduction modulo `L(A) = Z^n`, so `Z(K(A)) ≅ {Λ : ΛA ∈ Z^n} / Z^n`.

use std::fmt;

use num_rational::Ratio;

use crate::cartan::{CartanMatrix, IndexSubset};
use crate::error::{Error, Result};
use crate::linalg::{denominator_lcm, determinant, rational_inverse, smith, Matrix};
use crate::{FiniteAbelianGroup, Int, IntMatrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterStructure {
    pub finite_part: FiniteAbelianGroup,
    pub torus_rank: usize,
}

impl fmt::Display for CenterStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "finite part: {}; torus rank: {}", self.finite_part, self.torus_rank)
    }
}

/// Rows of `A⁻¹` with the order of their image in `Q^n / Z^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterGenerators {
    pub generators: Vec<(Vec<Rational>, Int)>,
}

/// Cokernel structure of an `n × k` integer matrix acting on row vectors:
/// invariant factors give the finite part, `n - rank` the torus.
fn cokernel_structure(m: &IntMatrix) -> CenterStructure {
    let snf = smith(m);
    CenterStructure {
        finite_part: FiniteAbelianGroup::from_smith_diagonal(&snf.invariant_factors),
        torus_rank: m.rows() - snf.rank(),
    }
}

pub fn center_structure(a: &CartanMatrix) -> CenterStructure {
    cokernel_structure(a.matrix())
}

/// Generators `v_i` (rows of `A⁻¹`); their images generate the center.
pub fn center_generators(a: &CartanMatrix) -> Result<CenterGenerators> {
    let inv = rational_inverse(a.matrix())?;
    let generators = (0..inv.rows())
        .map(|i| {
            let v = inv.row(i).to_vec();
            let order = denominator_lcm(&v);
            (v, order)
        })
        .collect();
    Ok(CenterGenerators { generators })
}

/// Center of `K_I(A)`: `{Λ : Λ Ã_I ∈ Z^|I|} / Z^n`.
pub fn parabolic_center(a: &CartanMatrix, subset: &IndexSubset) -> Result<CenterStructure> {
    Ok(cokernel_structure(&a.column_submatrix(subset)?))
}

impl CenterGenerators {
    /// Checks `v · A ∈ Z^n` and `order · v ∈ Z^n` for every generator.
    pub fn verify(&self, a: &CartanMatrix) -> Result<()> {
        let am: Matrix<Rational> = a.matrix().map(|x| Ratio::from_integer(x.clone()));
        for (v, order) in &self.generators {
            let image = am.left_apply(v)?;
            let scaled: Vec<Rational> = v.iter().map(|x| x * Ratio::from_integer(order.clone())).collect();
            if !image.iter().chain(&scaled).all(Ratio::is_integer) {
                return Err(Error::Consistency("center generator fails integrality".into()));
            }
        }
        Ok(())
    }
}

/// `|det A|` when nonsingular.
pub fn center_order(a: &CartanMatrix) -> Option<Int> {
    let d = determinant(a.matrix()).expect("square");
    (d != Int::from(0)).then(|| num_traits::Signed::abs(&d))
}
