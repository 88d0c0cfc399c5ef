//! Closed-form values of `Γ_I` for rank-3 matrices, the `Ã_n` family and
//! maximal parabolics of affine matrices. These are oracles for the general
//! routes in [`super::routes`].

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::routes::levi_determinant;
use crate::cartan::{affine_marks, CartanMatrix, IndexSubset};
use crate::error::{Error, Result};
use crate::lattice::Lattice as GenericLattice;
use crate::linalg::Matrix;
use crate::{FiniteAbelianGroup, Int};

/// The 2x2 minors used for `I = {p, q}` in a 3x3 matrix, `r` the remaining index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank3Minors {
    /// `det A_I`.
    pub delta: Int,
    /// `| a_pp a_pq ; a_rp a_rq |`.
    pub delta1: Int,
    /// `| a_qp a_qq ; a_rp a_rq |`.
    pub delta2: Int,
}

pub fn rank3_minors(a: &CartanMatrix, subset: &IndexSubset) -> Result<Rank3Minors> {
    if a.n() != 3 || subset.len() != 2 {
        return Err(Error::Shape("rank-3 minors need n = 3 and |I| = 2".into()));
    }
    a.check_subset(subset)?;
    let (p, q) = (subset.members()[0], subset.members()[1]);
    let r = subset.complement(3).members()[0];
    let e = |i: usize, j: usize| a.entry(i, j).clone();
    let det2 = |w: Int, x: Int, y: Int, z: Int| w * z - x * y;
    Ok(Rank3Minors {
        delta: det2(e(p, p), e(p, q), e(q, p), e(q, q)),
        delta1: det2(e(p, p), e(p, q), e(r, p), e(r, q)),
        delta2: det2(e(q, p), e(q, q), e(r, p), e(r, q)),
    })
}

/// `Γ_I` for a 3x3 matrix and `|I| ∈ {1, 2}`.
///
/// `|I| = 1`: `Z_2` unless both entries of column `i` outside `A_I` are even.
/// `|I| = 2`: cyclic of order `|Δ| / gcd(Δ, Δ₁, Δ₂)`; `Γ_I` is generated by
/// the image of the one remaining row, whose coordinates in the basis of
/// `E(A_I)` are `(-Δ₂, Δ₁) / Δ`.
pub fn closed_form_rank3(a: &CartanMatrix, subset: &IndexSubset) -> Result<FiniteAbelianGroup> {
    if a.n() != 3 {
        return Err(Error::Shape(format!("expected a 3x3 matrix, got rank {}", a.n())));
    }
    a.check_subset(subset)?;
    if levi_determinant(a, subset)?.is_zero() {
        return Err(Error::NotSplit);
    }
    match subset.len() {
        1 => {
            let i = subset.members()[0];
            let two = Int::from(2);
            let all_even = (0..3).filter(|&j| j != i).all(|j| a.entry(j, i).is_multiple_of(&two));
            Ok(if all_even {
                FiniteAbelianGroup::trivial()
            } else {
                FiniteAbelianGroup::cyclic(two)
            })
        }
        2 => {
            let m = rank3_minors(a, subset)?;
            let g = m.delta.gcd(&m.delta1).gcd(&m.delta2);
            Ok(FiniteAbelianGroup::cyclic(m.delta.abs() / g))
        }
        k => Err(Error::Shape(format!("closed form covers |I| = 1 or 2, got {k}"))),
    }
}

/// Maximal runs of consecutive members after rotating labels so that `0 ∉ I`.
/// Returns the run lengths together with the lengths of the gaps between
/// them (cyclically, the gap after run `t`).
fn cyclic_runs(n: usize, subset: &IndexSubset) -> (Vec<usize>, Vec<usize>) {
    let size = n + 1;
    // start right after a member so the wrap-around gap is not split
    let start = (0..size)
        .find(|&k| !subset.contains(k) && subset.contains((k + size - 1) % size))
        .expect("nonempty proper subset");
    let mut runs = Vec::new();
    let mut gaps = Vec::new();
    let mut current: Option<(bool, usize)> = None;
    for t in 0..size {
        let member = subset.contains((start + t) % size);
        match current {
            Some((m, len)) if m == member => current = Some((m, len + 1)),
            Some((m, len)) => {
                if m {
                    runs.push(len)
                } else {
                    gaps.push(len)
                }
                current = Some((member, 1));
            }
            None => current = Some((member, 1)),
        }
    }
    if let Some((m, len)) = current {
        if m {
            runs.push(len)
        } else {
            gaps.push(len)
        }
    }
    // sequence starts with a gap: gaps[t] precedes runs[t]; shift so gaps[t] follows runs[t]
    gaps.rotate_left(1);
    (runs, gaps)
}

fn check_affine_subset(n: usize, subset: &IndexSubset) -> Result<()> {
    if let Some(&bad) = subset.members().iter().find(|&&i| i > n) {
        return Err(Error::IndexOutOfRange { index: bad, n: n + 1 });
    }
    if subset.is_empty() {
        return Err(Error::Shape("subset must be nonempty".into()));
    }
    if !subset.is_proper(n + 1) {
        return Err(Error::NotProper);
    }
    Ok(())
}

/// Interval product formula for `Ã_n` with labels `0..n`:
/// `I = [i₁, j₁] ⊔ … ⊔ [i_k, j_k]` after a cyclic rotation, and
/// `Γ_I ≅ Z_{j₁-i₁+2} × … × Z_{j_k-i_k+2}`, except `Γ_I` trivial when `I` is a
/// single interval of length `n`.
///
/// The product does not hold when every gap between consecutive intervals is
/// a single node and the factors share a common divisor (`n = 3`,
/// `I = {1, 3}` gives `Z_2`, not `Z_2 × Z_2`); see
/// [`closed_form_affine_intervals_exact`].
pub fn closed_form_affine_intervals(n: usize, subset: &IndexSubset) -> Result<FiniteAbelianGroup> {
    check_affine_subset(n, subset)?;
    let (runs, _) = cyclic_runs(n, subset);
    if runs.len() == 1 && runs[0] == n {
        return Ok(FiniteAbelianGroup::trivial());
    }
    let orders: Vec<Int> = runs.iter().map(|&len| Int::from(len + 1)).collect();
    Ok(FiniteAbelianGroup::from_cyclic_orders(&orders))
}

/// Exact closed form for `Ã_n`.
///
/// Each run of length `ℓ` is an `A_ℓ` block contributing `Z_{ℓ+1}`, in which
/// the end nodes map to `±1`. A gap of two or more nodes contributes a
/// generator of each neighbouring block separately, so the full product is
/// reached. If every gap is a single node, each gap node contributes
/// `f_t - f_{t+1}` and `Γ_I` is the kernel of
/// `⊕ Z_{c_t} → Z_g, (x_t) ↦ Σ x_t`, with `g = gcd(c_t)`.
pub fn closed_form_affine_intervals_exact(n: usize, subset: &IndexSubset) -> Result<FiniteAbelianGroup> {
    check_affine_subset(n, subset)?;
    let (runs, gaps) = cyclic_runs(n, subset);
    let orders: Vec<Int> = runs.iter().map(|&len| Int::from(len + 1)).collect();
    if gaps.iter().any(|&g| g > 1) {
        return Ok(FiniteAbelianGroup::from_cyclic_orders(&orders));
    }
    // subgroup of ⊕ Z_{c_t} generated by f_t - f_{t+1}, as a lattice quotient
    let k = orders.len();
    let relations = Matrix::diagonal(k, k, &orders);
    let mut generators = relations.clone();
    for t in 0..k {
        let mut row = vec![Int::zero(); k];
        row[t] += Int::one();
        row[(t + 1) % k] -= Int::one();
        generators = generators.vstack(&Matrix::from_rows_with_cols(vec![row], k)?)?;
    }
    let q = GenericLattice::new(generators).quotient(&GenericLattice::new(relations))?;
    Ok(q.finite_part)
}

/// `Γ` of the maximal parabolic `S - {i}` of an indecomposable affine matrix:
/// `Z_{m_i}` for the dual mark `m_i`.
pub fn affine_maximal_parabolic_gamma(a: &CartanMatrix, i: usize) -> Result<FiniteAbelianGroup> {
    if i >= a.n() {
        return Err(Error::IndexOutOfRange { index: i, n: a.n() });
    }
    let marks = affine_marks(a)?;
    Ok(FiniteAbelianGroup::cyclic(marks.entries[i].clone()))
}
