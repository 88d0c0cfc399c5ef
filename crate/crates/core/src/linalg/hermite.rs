//! Row-style Hermite normal form and the kernels built on it.

use num_traits::Zero;

use super::Matrix;
use crate::scalar::IntegerScalar;

/// Canonical basis of an integer row lattice.
///
/// Rows are in echelon form with strictly increasing `pivot_cols`, each pivot
/// positive, and every entry above a pivot reduced into `[0, pivot)`. Two
/// generator sets span the same lattice exactly when their bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HermiteBasis<T> {
    pub basis: Matrix<T>,
    pub pivot_cols: Vec<usize>,
}

impl<T: IntegerScalar> HermiteBasis<T> {
    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    /// Coordinates of `v` in this basis, or `None` when `v` is not in the lattice.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        assert_eq!(v.len(), self.ambient_dim(), "vector length");
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (i, &c) in self.pivot_cols.iter().enumerate() {
            let (q, r) = rest[c].div_rem(&self.basis[(i, c)]);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (j, x) in rest.iter_mut().enumerate().skip(c) {
                    *x = x.clone() - q.clone() * self.basis[(i, j)].clone();
                }
            }
            coords.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }
}

pub(crate) fn add_row_multiple<T: IntegerScalar>(m: &mut Matrix<T>, target: usize, src: usize, factor: &T) {
    if factor.is_zero() {
        return;
    }
    for c in 0..m.cols() {
        let v = m[(target, c)].clone() + factor.clone() * m[(src, c)].clone();
        m[(target, c)] = v;
    }
}

pub(crate) fn add_col_multiple<T: IntegerScalar>(m: &mut Matrix<T>, target: usize, src: usize, factor: &T) {
    if factor.is_zero() {
        return;
    }
    for r in 0..m.rows() {
        let v = m[(r, target)].clone() + factor.clone() * m[(r, src)].clone();
        m[(r, target)] = v;
    }
}

pub(crate) fn negate_row<T: IntegerScalar>(m: &mut Matrix<T>, r: usize) {
    for c in 0..m.cols() {
        let v = -m[(r, c)].clone();
        m[(r, c)] = v;
    }
}

/// Full Hermite reduction `U * M = H`.
///
/// `H` keeps all input rows (zero rows at the bottom) and `U` is unimodular.
pub(crate) struct HermiteReduction<T> {
    pub h: Matrix<T>,
    pub u: Matrix<T>,
    pub pivot_cols: Vec<usize>,
}

pub(crate) fn hermite_reduce<T: IntegerScalar>(m: &Matrix<T>) -> HermiteReduction<T> {
    let rows = m.rows();
    let mut h = m.clone();
    let mut u = Matrix::identity(rows);
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        if r == rows {
            break;
        }
        loop {
            let pick = (r..rows)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&a, &b| h[(a, c)].abs().cmp(&h[(b, c)].abs()));
            let Some(p) = pick else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut clean = true;
            for i in r + 1..rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = -h[(i, c)].div_floor(&h[(r, c)]);
                add_row_multiple(&mut h, i, r, &q);
                add_row_multiple(&mut u, i, r, &q);
                if !h[(i, c)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            negate_row(&mut h, r);
            negate_row(&mut u, r);
        }
        for i in 0..r {
            let q = -h[(i, c)].div_floor(&h[(r, c)]);
            add_row_multiple(&mut h, i, r, &q);
            add_row_multiple(&mut u, i, r, &q);
        }
        pivot_cols.push(c);
        r += 1;
    }
    HermiteReduction { h, u, pivot_cols }
}

/// Unique Hermite basis of the row lattice of `m`.
pub fn hermite_row_basis<T: IntegerScalar>(m: &Matrix<T>) -> HermiteBasis<T> {
    let red = hermite_reduce(m);
    let k = red.pivot_cols.len();
    let basis = red.h.select_rows(&(0..k).collect::<Vec<_>>());
    HermiteBasis {
        basis,
        pivot_cols: red.pivot_cols,
    }
}

/// Saturated basis of `{x : x * M = 0}` over the integers.
pub fn left_integer_kernel<T: IntegerScalar>(m: &Matrix<T>) -> HermiteBasis<T> {
    let red = hermite_reduce(m);
    let k = red.pivot_cols.len();
    let kernel_rows: Vec<usize> = (k..m.rows()).collect();
    hermite_row_basis(&red.u.select_rows(&kernel_rows))
}

/// Basis of `span_Q(rows) ∩ Z^cols`.
pub fn saturate<T: IntegerScalar>(generators: &Matrix<T>) -> HermiteBasis<T> {
    // x lies in the rational row span iff it annihilates the right kernel.
    let right_kernel = left_integer_kernel(&generators.transpose()).basis.transpose();
    left_integer_kernel(&right_kernel)
}
