//! The two independent computations of `Γ_I`.
//!
//! Row route: `Γ_I ≅ E_I(A) / E(A_I)`, where `E_I(A) ⊆ Z^|I|` is spanned by the
//! rows of `Ã_I` and `E(A_I)` by the rows of `A_I`.
//!
//! Lattice route: `Γ_I ≅ Z^n / L_I(A)`, where `L_I(A)` is the set of integer
//! `Λ` whose `t_I`-component `Λ Ã_I A_I⁻¹` is integral, i.e.
//! `Λ Ã_I adj(A_I) ≡ 0 (mod det A_I)`.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::cartan::{CartanMatrix, IndexSubset};
use crate::error::{Error, Result};
use crate::linalg::{adjugate, determinant, rational_inverse, smith, Matrix};
use crate::{FiniteAbelianGroup, Int, IntMatrix, Lattice, Rational};

/// `det A_I ≠ 0`, i.e. `K_I(A) = (K(A_I) × T'_I) / Γ_I`.
///
/// `I = ∅` is allowed (the 0x0 determinant is 1); `I = S` is rejected.
pub fn levi_splits(a: &CartanMatrix, subset: &IndexSubset) -> Result<bool> {
    a.check_subset(subset)?;
    if !subset.is_proper(a.n()) {
        return Err(Error::NotProper);
    }
    Ok(!levi_determinant(a, subset)?.is_zero())
}

pub(crate) fn levi_determinant(a: &CartanMatrix, subset: &IndexSubset) -> Result<Int> {
    determinant(a.principal_submatrix(subset)?.matrix())
}

fn require_split(a: &CartanMatrix, subset: &IndexSubset) -> Result<()> {
    if levi_splits(a, subset)? {
        Ok(())
    } else {
        Err(Error::NotSplit)
    }
}

/// `E_I(A) / E(A_I)`.
pub fn gamma_row_route(a: &CartanMatrix, subset: &IndexSubset) -> Result<FiniteAbelianGroup> {
    require_split(a, subset)?;
    let k = subset.len();
    let tilde = a.column_submatrix(subset)?;
    let levi = a.principal_submatrix(subset)?;
    let e_i = Lattice::new(tilde);
    let e_levi = Lattice::new(levi.matrix().clone());
    debug_assert_eq!(e_i.ambient_dim(), k);
    let q = e_i.quotient(&e_levi)?;
    if q.free_rank != 0 {
        return Err(Error::Consistency(format!(
            "E_I(A)/E(A_I) has free rank {}",
            q.free_rank
        )));
    }
    Ok(q.finite_part)
}

/// `L_I(A) ⊆ Z^n`, the unit lattice of `T_I × T'_I` in coroot coordinates.
///
/// With `M = Ã_I adj(A_I)`, `d = |det A_I|` and `P M Q = D` in Smith form,
/// `Λ M ≡ 0 (mod d)` iff the `t`-th coordinate of `Λ P⁻¹` is a multiple of
/// `d / gcd(d, D_tt)`; scaling the rows of `P` by those factors gives a basis.
pub fn product_unit_lattice(a: &CartanMatrix, subset: &IndexSubset) -> Result<Lattice> {
    require_split(a, subset)?;
    let n = a.n();
    let levi = a.principal_submatrix(subset)?;
    let d = levi_determinant(a, subset)?.abs();
    let m = a.column_submatrix(subset)?.mul(&adjugate(levi.matrix())?)?;
    let snf = smith(&m);
    let diagonal = snf.diagonal();
    let rows: Vec<Vec<Int>> = (0..n)
        .map(|t| {
            let s = diagonal.get(t).cloned().unwrap_or_else(Int::zero);
            let factor = &d / d.gcd(&s);
            snf.p.row(t).iter().map(|x| x * &factor).collect()
        })
        .collect();
    Ok(Lattice::new(Matrix::from_rows_with_cols(rows, n)?))
}

/// `L(A) / L_I(A) = Z^n / L_I(A)`.
pub fn gamma_lattice_route(a: &CartanMatrix, subset: &IndexSubset) -> Result<FiniteAbelianGroup> {
    let li = product_unit_lattice(a, subset)?;
    let q = Lattice::standard(a.n()).quotient(&li)?;
    if q.free_rank != 0 {
        return Err(Error::Consistency(format!("L(A)/L_I(A) has free rank {}", q.free_rank)));
    }
    Ok(q.finite_part)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum GammaMode {
    /// Row route only.
    Fast,
    /// Both routes; disagreement is a consistency error.
    #[default]
    Checked,
}

pub fn gamma(a: &CartanMatrix, subset: &IndexSubset, mode: GammaMode) -> Result<FiniteAbelianGroup> {
    let rows = gamma_row_route(a, subset)?;
    if mode == GammaMode::Checked {
        let lattice = gamma_lattice_route(a, subset)?;
        if lattice != rows {
            return Err(Error::Consistency(format!(
                "routes disagree on I = {:?}: row route {rows}, lattice route {lattice}",
                a.subset_labels(subset)
            )));
        }
    }
    Ok(rows)
}

/// Rational coweight in coroot coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coweight(pub Vec<Rational>);

impl Coweight {
    pub fn from_ints(v: &[i64]) -> Self {
        Self(v.iter().map(|&x| Ratio::from_integer(Int::from(x))).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![Rational::zero(); n])
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Ratio::is_integer)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }
}

fn to_rational(m: &IntMatrix) -> Matrix<Rational> {
    m.map(|x| Ratio::from_integer(x.clone()))
}

/// Membership of an integer coweight in `L_I(A)`: `(Λ Ã_I) A_I⁻¹ ∈ Z^|I|`.
pub fn in_product_unit_lattice(lambda: &Coweight, a: &CartanMatrix, subset: &IndexSubset) -> Result<bool> {
    require_split(a, subset)?;
    if lambda.0.len() != a.n() {
        return Err(Error::Dimension {
            expected: a.n(),
            found: lambda.0.len(),
        });
    }
    if !lambda.is_integral() {
        return Err(Error::NonInteger);
    }
    let k_i = to_rational(&a.column_submatrix(subset)?).left_apply(&lambda.0)?;
    let inv = rational_inverse(a.principal_submatrix(subset)?.matrix())?;
    Ok(inv.left_apply(&k_i)?.iter().all(Ratio::is_integer))
}

/// Splits `Λ = Λ₁ + Λ₂` along `t = t_I ⊕ t'_I`.
///
/// With `K_I = Λ Ã_I`, `Λ₁ = (K_I A_I⁻¹, 0)` and
/// `Λ₂ = (-Λ_J Ā_I A_I⁻¹, Λ_J)`, where `Λ_J` is the restriction of `Λ` to
/// `J = S - I` and `Ā_I` the `J`-rows of `Ã_I`.
pub fn decompose(lambda: &Coweight, a: &CartanMatrix, subset: &IndexSubset) -> Result<(Coweight, Coweight)> {
    require_split(a, subset)?;
    let n = a.n();
    if lambda.0.len() != n {
        return Err(Error::Dimension {
            expected: n,
            found: lambda.0.len(),
        });
    }
    let idx = subset.members();
    let rest = subset.complement(n);
    let jdx = rest.members();

    let tilde = a.column_submatrix(subset)?;
    let inv = rational_inverse(a.principal_submatrix(subset)?.matrix())?;
    let bar = to_rational(&tilde.select_rows(jdx));

    let k_i = to_rational(&tilde).left_apply(&lambda.0)?;
    let on_i = inv.left_apply(&k_i)?;
    let lambda_j: Vec<Rational> = jdx.iter().map(|&j| lambda.0[j].clone()).collect();
    let shifted = inv.left_apply(&bar.left_apply(&lambda_j)?)?;

    let mut first = Coweight::zero(n);
    let mut second = Coweight::zero(n);
    for (t, &i) in idx.iter().enumerate() {
        first.0[i] = on_i[t].clone();
        second.0[i] = -shifted[t].clone();
    }
    for (t, &j) in jdx.iter().enumerate() {
        second.0[j] = lambda_j[t].clone();
    }
    Ok((first, second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::builtin;

    fn factors(g: &FiniteAbelianGroup) -> Vec<i64> {
        g.invariant_factors()
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    fn subset(a: &CartanMatrix, labels: &[&str]) -> IndexSubset {
        a.subset_from_labels(labels).unwrap()
    }

    #[test]
    fn levi_splits_examples() {
        let a3 = builtin("finite-a", 3).unwrap();
        assert!(levi_splits(&a3, &subset(&a3, &["1", "2"])).unwrap());
        let b = CartanMatrix::from_rows(vec![vec![2, -2, 0], vec![-2, 2, 0], vec![0, 0, 2]]).unwrap();
        assert!(!levi_splits(&b, &subset(&b, &["1", "2"])).unwrap());
        assert!(levi_splits(&b, &IndexSubset::empty()).unwrap());
        assert_eq!(levi_splits(&b, &IndexSubset::full(3)), Err(Error::NotProper));
    }

    #[test]
    fn row_route_examples() {
        let a3 = builtin("finite-a", 3).unwrap();
        assert_eq!(
            factors(&gamma_row_route(&a3, &subset(&a3, &["1", "2"])).unwrap()),
            vec![3]
        );
        let a2 = builtin("affine-a", 2).unwrap();
        assert_eq!(factors(&gamma_row_route(&a2, &subset(&a2, &["1"])).unwrap()), vec![2]);
        let a4 = builtin("affine-a", 4).unwrap();
        // Z_3 x Z_2
        assert_eq!(
            factors(&gamma_row_route(&a4, &subset(&a4, &["1", "2", "4"])).unwrap()),
            vec![6]
        );
        assert!(gamma_row_route(&a3, &IndexSubset::empty()).unwrap().is_trivial());
    }

    #[test]
    fn lattice_route_examples() {
        let a3 = builtin("finite-a", 3).unwrap();
        assert_eq!(
            factors(&gamma_lattice_route(&a3, &subset(&a3, &["1", "2"])).unwrap()),
            vec![3]
        );
        let a2 = builtin("affine-a", 2).unwrap();
        assert_eq!(
            factors(&gamma_lattice_route(&a2, &subset(&a2, &["1"])).unwrap()),
            vec![2]
        );
        assert!(gamma_lattice_route(&a3, &IndexSubset::empty()).unwrap().is_trivial());
    }

    #[test]
    fn gamma_dispatch() {
        let a3 = builtin("finite-a", 3).unwrap();
        let g = gamma(&a3, &subset(&a3, &["1", "2"]), GammaMode::Checked).unwrap();
        assert_eq!(factors(&g), vec![3]);
        let a2 = builtin("affine-a", 2).unwrap();
        assert!(gamma(&a2, &subset(&a2, &["1", "2"]), GammaMode::Checked)
            .unwrap()
            .is_trivial());
        assert!(gamma(&a2, &IndexSubset::empty(), GammaMode::Fast).unwrap().is_trivial());
        let b = CartanMatrix::from_rows(vec![vec![2, -2, 0], vec![-2, 2, 0], vec![0, 0, 2]]).unwrap();
        assert_eq!(
            gamma(&b, &subset(&b, &["1", "2"]), GammaMode::Fast),
            Err(Error::NotSplit)
        );
    }

    #[test]
    fn membership_examples() {
        let a3 = builtin("finite-a", 3).unwrap();
        let i = subset(&a3, &["1", "2"]);
        assert!(!in_product_unit_lattice(&Coweight::from_ints(&[0, 0, 1]), &a3, &i).unwrap());
        assert!(in_product_unit_lattice(&Coweight::zero(3), &a3, &i).unwrap());
        assert!(in_product_unit_lattice(&Coweight::from_ints(&[0, 0, 3]), &a3, &i).unwrap());
        let half = Coweight(vec![
            Ratio::new(Int::from(1), Int::from(2)),
            Rational::zero(),
            Rational::zero(),
        ]);
        assert_eq!(in_product_unit_lattice(&half, &a3, &i), Err(Error::NonInteger));
        let li = product_unit_lattice(&a3, &i).unwrap();
        assert!(li.contains(&[Int::from(0), Int::from(0), Int::from(3)]).unwrap());
        assert!(!li.contains(&[Int::from(0), Int::from(0), Int::from(1)]).unwrap());
    }

    #[test]
    fn decompose_examples() {
        let a3 = builtin("finite-a", 3).unwrap();
        let i = subset(&a3, &["1", "2"]);
        let (l1, l2) = decompose(&Coweight::from_ints(&[0, 0, 1]), &a3, &i).unwrap();
        let q = |a: i64, b: i64| Ratio::new(Int::from(a), Int::from(b));
        assert_eq!(l1.0, vec![q(-1, 3), q(-2, 3), q(0, 1)]);
        assert_eq!(l2.0, vec![q(1, 3), q(2, 3), q(1, 1)]);

        let (l1, l2) = decompose(&Coweight::from_ints(&[4, -1, 0]), &a3, &i).unwrap();
        assert_eq!(l1, Coweight::from_ints(&[4, -1, 0]));
        assert_eq!(l2, Coweight::zero(3));

        let (l1, l2) = decompose(&Coweight::zero(3), &a3, &i).unwrap();
        assert_eq!((l1, l2), (Coweight::zero(3), Coweight::zero(3)));
    }
}
