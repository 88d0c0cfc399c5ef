//! Fraction-free elimination: determinant, rank, inverse and adjugate.

use num_rational::Ratio;
use num_traits::Zero;

use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::IntegerScalar;

/// Exact determinant by Bareiss elimination. The 0x0 determinant is 1.
pub fn determinant<T: IntegerScalar>(m: &Matrix<T>) -> Result<T> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(T::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(p) => {
                    a.swap_rows(k, p);
                    negate = !negate;
                }
                None => return Ok(T::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a[(i, j)].clone() * a[(k, k)].clone() - a[(i, k)].clone() * a[(k, j)].clone()) / prev.clone();
                a[(i, j)] = v;
            }
            a[(i, k)] = T::zero();
        }
        prev = a[(k, k)].clone();
    }
    let det = a[(n - 1, n - 1)].clone();
    Ok(if negate { -det } else { det })
}

/// Rank over the rationals; fraction-free echelon reduction.
pub fn rank<T: IntegerScalar>(m: &Matrix<T>) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut r = 0;
    let mut prev = T::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (a[(i, j)].clone() * a[(r, c)].clone() - a[(i, c)].clone() * a[(r, j)].clone()) / prev.clone();
                a[(i, j)] = v;
            }
            a[(i, c)] = T::zero();
        }
        prev = a[(r, c)].clone();
        r += 1;
    }
    r
}

/// Exact inverse over the rationals by Gauss-Jordan elimination.
pub fn rational_inverse<T: IntegerScalar>(m: &Matrix<T>) -> Result<Matrix<Ratio<T>>> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "inverse of a non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut a = m.map(|x| Ratio::from_integer(x.clone()));
    let mut inv: Matrix<Ratio<T>> = Matrix::identity(n);
    for c in 0..n {
        let p = (c..n).find(|&i| !a[(i, c)].is_zero()).ok_or(Error::Singular)?;
        a.swap_rows(c, p);
        inv.swap_rows(c, p);
        let pivot = a[(c, c)].clone();
        for j in 0..n {
            a[(c, j)] = a[(c, j)].clone() / pivot.clone();
            inv[(c, j)] = inv[(c, j)].clone() / pivot.clone();
        }
        for i in 0..n {
            if i == c || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in 0..n {
                let v = a[(i, j)].clone() - f.clone() * a[(c, j)].clone();
                a[(i, j)] = v;
                let w = inv[(i, j)].clone() - f.clone() * inv[(c, j)].clone();
                inv[(i, j)] = w;
            }
        }
    }
    Ok(inv)
}

/// Classical adjugate, `adj(M) * M = det(M) * I`.
pub fn adjugate<T: IntegerScalar>(m: &Matrix<T>) -> Result<Matrix<T>> {
    let det = determinant(m)?;
    let n = m.rows();
    if !det.is_zero() {
        let inv = rational_inverse(m)?;
        let scaled = inv.map(|x| x.clone() * Ratio::from_integer(det.clone()));
        debug_assert!(scaled.entries().iter().all(Ratio::is_integer));
        return Ok(scaled.map(|x| x.to_integer()));
    }
    if n == 1 {
        return Ok(Matrix::identity(1));
    }
    let mut adj = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let minor = determinant(&m.submatrix(&rows, &cols))?;
            adj[(i, j)] = if (i + j) % 2 == 0 { minor } else { -minor };
        }
    }
    Ok(adj)
}

/// Whether every entry of a rational vector is an integer.
pub fn is_integral<T: IntegerScalar>(v: &[Ratio<T>]) -> bool {
    v.iter().all(Ratio::is_integer)
}

/// Smallest positive `t` with `t * v` integral (lcm of denominators).
pub fn denominator_lcm<T: IntegerScalar>(v: &[Ratio<T>]) -> T {
    v.iter().fold(T::one(), |acc, x| acc.lcm_with(x.denom()))
}
