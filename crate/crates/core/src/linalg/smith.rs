use super::hermite::{add_col_multiple, add_row_multiple, negate_row};
use super::Matrix;
use crate::scalar::IntegerScalar;

/// `P * M * Q = S` with `S` diagonal, `P` and `Q` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition<T> {
    pub s: Matrix<T>,
    pub p: Matrix<T>,
    pub q: Matrix<T>,
    /// Nonzero diagonal entries of `S`, in order (ones included).
    pub invariant_factors: Vec<T>,
}

impl<T: IntegerScalar> SmithDecomposition<T> {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Full diagonal of `S`, trailing zeros included.
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s[(i, i)].clone())
            .collect()
    }
}

/// Smith normal form with transforms.
///
/// Pivot is the smallest nonzero absolute value in the remaining block, ties
/// broken by lowest (row, col). Diagonal entries come out nonnegative.
pub fn smith<T: IntegerScalar>(m: &Matrix<T>) -> SmithDecomposition<T> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut s = m.clone();
    let mut p = Matrix::identity(rows);
    let mut q = Matrix::identity(cols);
    let mut invariant_factors = Vec::new();

    for t in 0..rows.min(cols) {
        while let Some((pr, pc)) = smallest_entry(&s, t) {
            s.swap_rows(t, pr);
            p.swap_rows(t, pr);
            s.swap_cols(t, pc);
            q.swap_cols(t, pc);

            let mut clean = true;
            for i in t + 1..rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let f = -s[(i, t)].div_floor(&s[(t, t)]);
                add_row_multiple(&mut s, i, t, &f);
                add_row_multiple(&mut p, i, t, &f);
                clean &= s[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let f = -s[(t, j)].div_floor(&s[(t, t)]);
                add_col_multiple(&mut s, j, t, &f);
                add_col_multiple(&mut q, j, t, &f);
                clean &= s[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // Pivot must divide the rest of the block; otherwise pull an
            // offending row into row t and go again.
            let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !s[(i, j)].is_multiple_of(&s[(t, t)])));
            match offending {
                Some(i) => {
                    add_row_multiple(&mut s, t, i, &T::one());
                    add_row_multiple(&mut p, t, i, &T::one());
                }
                None => break,
            }
        }
        if s[(t, t)].is_zero() {
            break;
        }
        if s[(t, t)].is_negative() {
            negate_row(&mut s, t);
            negate_row(&mut p, t);
        }
        invariant_factors.push(s[(t, t)].clone());
    }

    SmithDecomposition {
        s,
        p,
        q,
        invariant_factors,
    }
}

fn smallest_entry<T: IntegerScalar>(s: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            if s[(i, j)].is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some((bi, bj)) => s[(i, j)].abs() < s[(bi, bj)].abs(),
            };
            if better {
                best = Some((i, j));
            }
        }
    }
    best
}
