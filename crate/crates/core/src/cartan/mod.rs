//! Generalized Cartan matrices.
//!
//! Column `j` of the matrix is the simple root `α_j` in fundamental-weight
//! coordinates and the standard basis rows are the simple coroots, so
//! `a_ij = α_j(α_i^∨)`. Indices are stored 0-based; `labels` carry the
//! display names (`"1".."n"` by default, `"0".."n"` for affine builtins).

mod catalog;
mod classify;

use std::collections::VecDeque;

use num_traits::{Signed, Zero};

pub use catalog::{builtin, identify_finite_type, FiniteFamily, Series, BUILTIN_FAMILIES};
pub use classify::{affine_marks, classify, classify_indecomposable, CartanType, MarksVector, TypeKind};

use crate::error::{CartanViolation, Error, Result};
use crate::linalg::Matrix;
use crate::{Int, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    matrix: IntMatrix,
    labels: Vec<String>,
}

/// Checks `a_ii = 2`, `a_ij ≤ 0` off the diagonal and `a_ij = 0 ⇔ a_ji = 0`.
pub fn validate(m: IntMatrix) -> Result<CartanMatrix> {
    CartanMatrix::new(m)
}

pub fn violations(m: &IntMatrix) -> Vec<CartanViolation> {
    let n = m.rows();
    let two = Int::from(2);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = &m[(i, j)];
            if i == j {
                if *v != two {
                    out.push(CartanViolation::Diagonal {
                        index: i,
                        value: v.to_string(),
                    });
                }
            } else if v.is_positive() {
                out.push(CartanViolation::PositiveOffDiagonal {
                    row: i,
                    col: j,
                    value: v.to_string(),
                });
            } else if !v.is_zero() && m[(j, i)].is_zero() {
                out.push(CartanViolation::AsymmetricZero { row: i, col: j });
            }
        }
    }
    out
}

impl CartanMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        let labels = (1..=m.rows()).map(|i| i.to_string()).collect();
        Self::with_labels(m, labels)
    }

    pub fn with_labels(m: IntMatrix, labels: Vec<String>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Shape(format!(
                "Cartan matrix must be square, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        if labels.len() != m.rows() {
            return Err(Error::Dimension {
                expected: m.rows(),
                found: labels.len(),
            });
        }
        let bad = violations(&m);
        if !bad.is_empty() {
            return Err(Error::InvalidCartan(bad));
        }
        Ok(Self { matrix: m, labels })
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(Int::from).collect())
            .collect();
        Self::new(Matrix::from_rows(rows)?)
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &Int {
        &self.matrix[(i, j)]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn label_position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Connected components of the Dynkin graph (edge `i — j` iff `a_ij ≠ 0`),
    /// each sorted, ordered by smallest member.
    pub fn dynkin_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for (w, flag) in seen.iter_mut().enumerate() {
                    if w != v && !*flag && !self.matrix[(v, w)].is_zero() {
                        *flag = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub fn is_indecomposable(&self) -> bool {
        self.dynkin_components().len() == 1
    }

    /// `A_I = (a_ij)_{i,j ∈ I}`, labels carried over.
    pub fn principal_submatrix(&self, subset: &IndexSubset) -> Result<CartanMatrix> {
        self.check_subset(subset)?;
        let idx = subset.members();
        let labels = idx.iter().map(|&i| self.labels[i].clone()).collect();
        CartanMatrix::with_labels(self.matrix.submatrix(idx, idx), labels)
    }

    /// `Ã_I = (a_ij)_{i ∈ S, j ∈ I}`: all rows, the columns in `I`.
    pub fn column_submatrix(&self, subset: &IndexSubset) -> Result<IntMatrix> {
        self.check_subset(subset)?;
        Ok(self.matrix.select_cols(subset.members()))
    }

    /// Relabels by `perm`: the new index `i` is the old index `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<CartanMatrix> {
        let labels = perm.iter().map(|&p| self.labels[p].clone()).collect();
        CartanMatrix::with_labels(self.matrix.submatrix(perm, perm), labels)
    }

    pub(crate) fn check_subset(&self, subset: &IndexSubset) -> Result<()> {
        if let Some(&bad) = subset.members().iter().find(|&&i| i >= self.n()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                n: self.n(),
            });
        }
        Ok(())
    }

    /// Subset from display labels, e.g. `["0", "2"]`.
    pub fn subset_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<IndexSubset> {
        let mut members = Vec::with_capacity(labels.len());
        for l in labels {
            let l = l.as_ref().trim();
            let pos = self
                .label_position(l)
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
            members.push(pos);
        }
        IndexSubset::new(members, self.n())
    }

    pub fn subset_labels(&self, subset: &IndexSubset) -> Vec<String> {
        subset.members().iter().map(|&i| self.labels[i].clone()).collect()
    }
}

/// Sorted set of 0-based indices into `S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndexSubset {
    members: Vec<usize>,
}

impl IndexSubset {
    pub fn new(mut members: Vec<usize>, n: usize) -> Result<Self> {
        if let Some(&bad) = members.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad, n });
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self { members })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn full(n: usize) -> Self {
        Self {
            members: (0..n).collect(),
        }
    }

    /// Bit `i` of `mask` selects index `i`.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        Self {
            members: (0..n).filter(|&i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn mask(&self) -> u64 {
        self.members.iter().fold(0, |m, &i| m | 1 << i)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn complement(&self, n: usize) -> Self {
        Self {
            members: (0..n).filter(|&i| !self.contains(i)).collect(),
        }
    }

    pub fn is_proper(&self, n: usize) -> bool {
        self.members.len() < n
    }

    pub fn without(n: usize, i: usize) -> Self {
        Self {
            members: (0..n).filter(|&j| j != i).collect(),
        }
    }
}
