//! Subgroups of `Z^m`, their quotients, and the split quotient
//! `L / ((V1 ∩ L) ⊕ (V2 ∩ L))` of a lattice by a direct-sum decomposition.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::linalg::{hermite_row_basis, left_integer_kernel, rank, smith, HermiteBasis, Matrix};
use crate::scalar::{lcm_all, IntegerScalar};

/// Finite abelian group in invariant-factor form `Z_{d1} × … × Z_{dk}`,
/// every `d_i ≥ 2` and `d_i | d_{i+1}`. The empty list is the trivial group.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiniteAbelianGroup<T> {
    invariant_factors: Vec<T>,
}

impl<T: IntegerScalar> FiniteAbelianGroup<T> {
    pub fn trivial() -> Self {
        Self {
            invariant_factors: Vec::new(),
        }
    }

    pub fn cyclic(order: T) -> Self {
        Self::from_cyclic_orders(&[order])
    }

    /// Checked constructor for an already canonical factor list.
    pub fn from_invariant_factors(factors: Vec<T>) -> Result<Self> {
        let two = T::one() + T::one();
        for (i, d) in factors.iter().enumerate() {
            if *d < two {
                return Err(Error::Consistency(format!("invariant factor {d} is below 2")));
            }
            if i > 0 && !d.is_multiple_of(&factors[i - 1]) {
                return Err(Error::Consistency(format!(
                    "invariant factor {} does not divide {d}",
                    factors[i - 1]
                )));
            }
        }
        Ok(Self {
            invariant_factors: factors,
        })
    }

    /// Canonical form of `Z_{o1} × Z_{o2} × …` for arbitrary positive orders.
    pub fn from_cyclic_orders(orders: &[T]) -> Self {
        assert!(orders.iter().all(|o| *o > T::zero()), "cyclic orders must be positive");
        let diag = Matrix::diagonal(orders.len(), orders.len(), orders);
        Self::from_smith_diagonal(&smith(&diag).invariant_factors)
    }

    /// Keeps the factors `≥ 2` of an already divisibility-ordered diagonal.
    pub(crate) fn from_smith_diagonal(diagonal: &[T]) -> Self {
        Self {
            invariant_factors: diagonal
                .iter()
                .filter(|d| !d.is_zero() && !d.is_one())
                .cloned()
                .collect(),
        }
    }

    pub fn invariant_factors(&self) -> &[T] {
        &self.invariant_factors
    }

    pub fn order(&self) -> T {
        self.invariant_factors.iter().fold(T::one(), |acc, d| acc * d.clone())
    }

    pub fn exponent(&self) -> T {
        self.invariant_factors.last().cloned().unwrap_or_else(T::one)
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }

    /// Number of elements `x` with `m·x = 0`.
    pub fn count_killed_by(&self, m: &T) -> T {
        self.invariant_factors
            .iter()
            .fold(T::one(), |acc, d| acc * d.gcd_with(m))
    }
}

impl<T: IntegerScalar> fmt::Display for FiniteAbelianGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z_{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// `sup / sub` as finite part × `Z^free_rank`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientStructure<T> {
    pub finite_part: FiniteAbelianGroup<T>,
    pub free_rank: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IndexValue<T> {
    Finite(T),
    Infinite,
}

/// Subgroup of `Z^m` stored by its canonical Hermite basis.
#[derive(Clone, Debug)]
pub struct Lattice<T> {
    generators: Matrix<T>,
    basis: HermiteBasis<T>,
}

impl<T: IntegerScalar> PartialEq for Lattice<T> {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl<T: IntegerScalar> Eq for Lattice<T> {}

impl<T: IntegerScalar> Lattice<T> {
    /// Lattice generated by the rows of `generators`.
    pub fn new(generators: Matrix<T>) -> Self {
        let basis = hermite_row_basis(&generators);
        Self { generators, basis }
    }

    pub fn from_rows(rows: Vec<Vec<T>>, ambient_dim: usize) -> Result<Self> {
        Ok(Self::new(Matrix::from_rows_with_cols(rows, ambient_dim)?))
    }

    /// All of `Z^n`.
    pub fn standard(n: usize) -> Self {
        Self::new(Matrix::identity(n))
    }

    pub fn zero(n: usize) -> Self {
        Self::new(Matrix::zeros(0, n))
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.ambient_dim()
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn generators(&self) -> &Matrix<T> {
        &self.generators
    }

    pub fn basis(&self) -> &HermiteBasis<T> {
        &self.basis
    }

    pub fn contains(&self, v: &[T]) -> Result<bool> {
        self.check_dim(v.len())?;
        Ok(self.basis.coordinates(v).is_some())
    }

    pub fn is_sublattice_of(&self, sup: &Self) -> Result<bool> {
        sup.check_dim(self.ambient_dim())?;
        Ok((0..self.rank()).all(|r| sup.basis.coordinates(self.basis.basis.row(r)).is_some()))
    }

    /// `self + other`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        Ok(Self::new(self.basis.basis.vstack(&other.basis.basis)?))
    }

    /// Intersection with the rational span of the rows of `spanning`.
    pub fn intersect_span(&self, spanning: &Matrix<T>) -> Result<Self> {
        self.check_dim(spanning.cols())?;
        let b = &self.basis.basis;
        // columns of `normals` span the orthogonal complement of the subspace
        let normals = left_integer_kernel(&spanning.transpose()).basis.transpose();
        let coeffs = left_integer_kernel(&b.mul(&normals)?).basis;
        Ok(Self::new(coeffs.mul(b)?))
    }

    /// Structure of `self / sub`.
    pub fn quotient(&self, sub: &Self) -> Result<QuotientStructure<T>> {
        self.check_dim(sub.ambient_dim())?;
        let mut coords = Vec::with_capacity(sub.rank());
        for r in 0..sub.rank() {
            let c = self
                .basis
                .coordinates(sub.basis.basis.row(r))
                .ok_or(Error::NotContained)?;
            coords.push(c);
        }
        let c = Matrix::from_rows_with_cols(coords, self.rank())?;
        let snf = smith(&c);
        Ok(QuotientStructure {
            finite_part: FiniteAbelianGroup::from_smith_diagonal(&snf.invariant_factors),
            free_rank: self.rank() - sub.rank(),
        })
    }

    /// `[self : sub]`.
    pub fn index(&self, sub: &Self) -> Result<IndexValue<T>> {
        let q = self.quotient(sub)?;
        Ok(if q.free_rank == 0 {
            IndexValue::Finite(q.finite_part.order())
        } else {
            IndexValue::Infinite
        })
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.ambient_dim() {
            return Err(Error::Dimension {
                expected: self.ambient_dim(),
                found,
            });
        }
        Ok(())
    }
}

pub fn membership<T: IntegerScalar>(v: &[T], lattice: &Lattice<T>) -> Result<bool> {
    lattice.contains(v)
}

pub fn quotient<T: IntegerScalar>(sup: &Lattice<T>, sub: &Lattice<T>) -> Result<QuotientStructure<T>> {
    sup.quotient(sub)
}

pub fn index<T: IntegerScalar>(sup: &Lattice<T>, sub: &Lattice<T>) -> Result<IndexValue<T>> {
    sup.index(sub)
}

/// Scales each rational vector by the lcm of its denominators.
pub fn clear_denominators<T: IntegerScalar>(vectors: &[Vec<Ratio<T>>], dim: usize) -> Result<Matrix<T>> {
    let mut rows = Vec::with_capacity(vectors.len());
    for v in vectors {
        if v.len() != dim {
            return Err(Error::Dimension {
                expected: dim,
                found: v.len(),
            });
        }
        let l = lcm_all(v.iter().map(Ratio::denom));
        rows.push(
            v.iter()
                .map(|x| (x.clone() * Ratio::from_integer(l.clone())).to_integer())
                .collect(),
        );
    }
    Matrix::from_rows_with_cols(rows, dim)
}

/// `L / ((V1 ∩ L) + (V2 ∩ L))` for rational subspaces meeting only in zero.
pub fn split_quotient<T: IntegerScalar>(
    lattice: &Lattice<T>,
    v1: &[Vec<Ratio<T>>],
    v2: &[Vec<Ratio<T>>],
) -> Result<QuotientStructure<T>> {
    let dim = lattice.ambient_dim();
    let w1 = clear_denominators(v1, dim)?;
    let w2 = clear_denominators(v2, dim)?;
    if rank(&w1.vstack(&w2)?) != rank(&w1) + rank(&w2) {
        return Err(Error::OverlappingSubspaces);
    }
    let part1 = lattice.intersect_span(&w1)?;
    let part2 = lattice.intersect_span(&w2)?;
    lattice.quotient(&part1.sum(&part2)?)
}
