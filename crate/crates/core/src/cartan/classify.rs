use std::fmt;

use num_traits::{Signed, Zero};

use super::{CartanMatrix, IndexSubset};
use crate::error::{Error, Result};
use crate::linalg::{determinant, left_integer_kernel, rational_inverse};
use crate::{Int, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TypeKind {
    Finite,
    Affine,
    Indefinite,
}

impl fmt::Display for TypeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TypeKind::Finite => "finite",
            TypeKind::Affine => "affine",
            TypeKind::Indefinite => "indefinite",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanType {
    pub overall: TypeKind,
    /// Dynkin components (0-based indices) with their types.
    pub per_component: Vec<(Vec<usize>, TypeKind)>,
}

/// Type of an indecomposable generalized Cartan matrix.
///
/// Finite iff nonsingular with entrywise nonnegative inverse; affine iff
/// singular with a one-dimensional right kernel spanned by a strictly
/// positive vector; indefinite otherwise.
pub fn classify_indecomposable(m: &IntMatrix) -> TypeKind {
    let det = determinant(m).expect("square");
    if !det.is_zero() {
        let inv = rational_inverse(m).expect("nonsingular");
        return if inv.entries().iter().all(|x| !x.is_negative()) {
            TypeKind::Finite
        } else {
            TypeKind::Indefinite
        };
    }
    let kernel = left_integer_kernel(&m.transpose());
    if kernel.rank() != 1 {
        return TypeKind::Indefinite;
    }
    let v = kernel.basis.row(0);
    if v.iter().all(Signed::is_positive) || v.iter().all(Signed::is_negative) {
        TypeKind::Affine
    } else {
        TypeKind::Indefinite
    }
}

/// Per-component classification; the whole matrix is affine when exactly one
/// component is affine and the others finite.
pub fn classify(a: &CartanMatrix) -> CartanType {
    let per_component: Vec<(Vec<usize>, TypeKind)> = a
        .dynkin_components()
        .into_iter()
        .map(|comp| {
            let kind = classify_indecomposable(&a.matrix().submatrix(&comp, &comp));
            (comp, kind)
        })
        .collect();
    let count = |k: TypeKind| per_component.iter().filter(|(_, t)| *t == k).count();
    let overall = match (count(TypeKind::Affine), count(TypeKind::Indefinite)) {
        (0, 0) => TypeKind::Finite,
        (1, 0) => TypeKind::Affine,
        _ => TypeKind::Indefinite,
    };
    CartanType { overall, per_component }
}

impl CartanMatrix {
    pub fn classify(&self) -> CartanType {
        classify(self)
    }

    pub fn classify_subset(&self, subset: &IndexSubset) -> Result<CartanType> {
        Ok(classify(&self.principal_submatrix(subset)?))
    }
}

/// Primitive positive vector `m` with `m · A = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarksVector {
    pub entries: Vec<Int>,
}

/// Dual marks of an indecomposable affine matrix: the primitive positive
/// left null vector (the marks of the transposed diagram).
pub fn affine_marks(a: &CartanMatrix) -> Result<MarksVector> {
    if !a.is_indecomposable() || classify(a).overall != TypeKind::Affine {
        return Err(Error::NotAffine);
    }
    let kernel = left_integer_kernel(a.matrix());
    debug_assert_eq!(kernel.rank(), 1);
    let mut entries = kernel.basis.row(0).to_vec();
    if entries[0].is_negative() {
        entries.iter_mut().for_each(|x| *x = -x.clone());
    }
    Ok(MarksVector { entries })
}
