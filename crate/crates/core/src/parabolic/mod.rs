//! Parabolic subgroups `K_I(A)` and the kernel `Γ_I` of
//! `K(A_I) × T'_I → K_I(A)`.

mod closed_form;
mod routes;

use rayon::prelude::*;

pub use closed_form::{
    affine_maximal_parabolic_gamma, closed_form_affine_intervals, closed_form_affine_intervals_exact,
    closed_form_rank3, rank3_minors, Rank3Minors,
};
pub use routes::{
    decompose, gamma, gamma_lattice_route, gamma_row_route, in_product_unit_lattice, levi_splits, product_unit_lattice,
    Coweight, GammaMode,
};

use crate::cartan::{classify_indecomposable, identify_finite_type, CartanMatrix, FiniteFamily, IndexSubset, TypeKind};
use crate::center::{parabolic_center, CenterStructure};
use crate::error::{Error, Result};
use crate::{FiniteAbelianGroup, Int};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Structure {
    /// `det A_I ≠ 0`: `K_I(A) ≅ (K(A_I) × T'_I) / Γ_I`.
    Split,
    /// `det A_I = 0`: only a semidirect product of `K(A_I)` and `T_{S-I}`.
    Semidirect,
}

/// A Dynkin component of the Levi matrix `A_I`, indices into `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviComponent {
    pub members: Vec<usize>,
    pub kind: TypeKind,
    pub family: Option<FiniteFamily>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicReport {
    pub subset: IndexSubset,
    pub det_levi: Int,
    pub structure: Structure,
    /// Present iff `structure` is `Split`.
    pub gamma: Option<FiniteAbelianGroup>,
    pub levi_components: Vec<LeviComponent>,
    pub parabolic_center: CenterStructure,
    /// `n - |I|`.
    pub torus_factor_rank: usize,
}

fn levi_components(a: &CartanMatrix, subset: &IndexSubset) -> Result<Vec<LeviComponent>> {
    let levi = a.principal_submatrix(subset)?;
    let members = subset.members();
    levi.dynkin_components()
        .into_iter()
        .map(|comp| {
            let sub = levi.matrix().submatrix(&comp, &comp);
            let kind = classify_indecomposable(&sub);
            let family = match kind {
                TypeKind::Finite => {
                    let named = identify_finite_type(&CartanMatrix::new(sub)?)?;
                    Some(named[0].1)
                }
                _ => None,
            };
            Ok(LeviComponent {
                members: comp.iter().map(|&c| members[c]).collect(),
                kind,
                family,
            })
        })
        .collect()
}

/// Full record for one proper subset `I ⊊ S`.
pub fn report(a: &CartanMatrix, subset: &IndexSubset, mode: GammaMode) -> Result<ParabolicReport> {
    let split = levi_splits(a, subset)?;
    let det_levi = routes::levi_determinant(a, subset)?;
    let (structure, gamma) = if split {
        (Structure::Split, Some(gamma(a, subset, mode)?))
    } else {
        (Structure::Semidirect, None)
    };
    Ok(ParabolicReport {
        subset: subset.clone(),
        det_levi,
        structure,
        gamma,
        levi_components: levi_components(a, subset)?,
        parabolic_center: parabolic_center(a, subset)?,
        torus_factor_rank: a.n() - subset.len(),
    })
}

pub const DEFAULT_ENUMERATION_LIMIT: usize = 20;

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    pub mode: GammaMode,
    /// Largest `n` accepted without `force`.
    pub limit: usize,
    pub force: bool,
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
    /// Subsets computed per parallel batch.
    pub batch: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self {
            mode: GammaMode::Checked,
            limit: DEFAULT_ENUMERATION_LIMIT,
            force: false,
            jobs: 0,
            batch: 1024,
        }
    }
}

/// Proper subsets of `{0..n-1}` in ascending bitmask order, `∅` first.
pub fn proper_subsets(n: usize) -> impl Iterator<Item = IndexSubset> {
    assert!(n < 64, "bitmask enumeration supports n < 64");
    let full = (1u64 << n) - 1;
    (0..full).map(move |mask| IndexSubset::from_mask(mask, n))
}

/// Reports for every proper subset, in ascending bitmask order.
pub fn enumerate(a: &CartanMatrix, options: &EnumerateOptions) -> Result<Vec<ParabolicReport>> {
    let mut out = Vec::new();
    enumerate_each(
        a,
        options,
        |_| true,
        |r| {
            out.push(r);
            Ok(())
        },
    )?;
    Ok(out)
}

/// Streams reports to `emit` in ascending bitmask order. Subsets rejected by
/// `wanted` are skipped. Batches are computed in parallel; emission order does
/// not depend on the number of workers.
pub fn enumerate_each(
    a: &CartanMatrix,
    options: &EnumerateOptions,
    wanted: impl Fn(&IndexSubset) -> bool,
    mut emit: impl FnMut(ParabolicReport) -> Result<()>,
) -> Result<()> {
    let n = a.n();
    if n > options.limit && !options.force {
        return Err(Error::LimitExceeded {
            n,
            limit: options.limit,
        });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| Error::Consistency(format!("thread pool: {e}")))?;
    let batch = options.batch.max(1);
    let mut pending = Vec::with_capacity(batch);
    let mut flush = |pending: &mut Vec<IndexSubset>| -> Result<()> {
        let results: Vec<Result<ParabolicReport>> =
            pool.install(|| pending.par_iter().map(|s| report(a, s, options.mode)).collect());
        pending.clear();
        for r in results {
            emit(r?)?;
        }
        Ok(())
    };
    for subset in proper_subsets(n) {
        if !wanted(&subset) {
            continue;
        }
        pending.push(subset);
        if pending.len() == batch {
            flush(&mut pending)?;
        }
    }
    flush(&mut pending)
}
