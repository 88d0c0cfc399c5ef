//! Builtin families and recognition of finite-type components.
//!
//! Catalog matrices follow Kac's conventions (`a_ij = α_j(α_i^∨)`):
//!
//! * `B_n` (n ≥ 2) has `a_{n,n-1} = -2`, the short root is `α_n`;
//! * `C_n` (n ≥ 3) has `a_{n-1,n} = -2`, the long root is `α_n`;
//!   rank 2 is always reported as `B2`;
//! * `D_n` (n ≥ 4) branches at `α_{n-2}`;
//! * `E_n` uses Bourbaki numbering, `α_2` attached to `α_4`;
//! * `F4` has `a_23 = -2`, `G2` has `a_21 = -3`.

use std::collections::VecDeque;
use std::fmt;

use num_traits::Zero;

use super::classify::{classify, TypeKind};
use super::CartanMatrix;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::{Int, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiniteFamily {
    pub series: Series,
    pub rank: usize,
}

impl fmt::Display for FiniteFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.series, self.rank)
    }
}

fn path(n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        m[i][i] = 2;
        if i + 1 < n {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    m
}

fn to_matrix(rows: Vec<Vec<i64>>) -> IntMatrix {
    let n = rows.len();
    Matrix::from_fn(n, n, |r, c| Int::from(rows[r][c]))
}

impl FiniteFamily {
    pub fn new(series: Series, rank: usize) -> Option<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            Series::C => rank >= 3,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        ok.then_some(Self { series, rank })
    }

    /// All catalog entries of a given rank.
    pub fn of_rank(rank: usize) -> Vec<Self> {
        [
            Series::A,
            Series::B,
            Series::C,
            Series::D,
            Series::E,
            Series::F,
            Series::G,
        ]
        .into_iter()
        .filter_map(|s| Self::new(s, rank))
        .collect()
    }

    pub fn cartan_matrix(&self) -> IntMatrix {
        let n = self.rank;
        let mut m = path(n);
        match self.series {
            Series::A => {}
            Series::B => m[n - 1][n - 2] = -2,
            Series::C => m[n - 2][n - 1] = -2,
            Series::D => {
                m[n - 2][n - 1] = 0;
                m[n - 1][n - 2] = 0;
                m[n - 3][n - 1] = -1;
                m[n - 1][n - 3] = -1;
            }
            Series::E => {
                // chain 1-3-4-...-n with 2 attached to 4 (1-based)
                m = vec![vec![0; n]; n];
                let chain: Vec<usize> = std::iter::once(0).chain(2..n).collect();
                for (i, row) in m.iter_mut().enumerate() {
                    row[i] = 2;
                }
                for w in chain.windows(2) {
                    m[w[0]][w[1]] = -1;
                    m[w[1]][w[0]] = -1;
                }
                m[1][3] = -1;
                m[3][1] = -1;
            }
            Series::F => m[1][2] = -2,
            Series::G => m[1][0] = -3,
        }
        to_matrix(m)
    }
}

/// Names accepted by [`builtin`].
pub const BUILTIN_FAMILIES: [&str; 8] = [
    "finite-a", "finite-b", "finite-c", "finite-d", "finite-e", "finite-f", "finite-g", "affine-a",
];

/// A catalog matrix: `finite-<series>` (labels `1..n`) or `affine-a`
/// (`Ã_n`, an `(n+1)`-cycle with labels `0..n`).
pub fn builtin(family: &str, rank: usize) -> Result<CartanMatrix> {
    let invalid = || Error::InvalidRank {
        family: family.to_string(),
        rank,
    };
    let series = match family {
        "affine-a" => {
            if rank < 2 {
                return Err(invalid());
            }
            let mut m = path(rank + 1);
            m[0][rank] = -1;
            m[rank][0] = -1;
            let labels = (0..=rank).map(|i| i.to_string()).collect();
            return CartanMatrix::with_labels(to_matrix(m), labels);
        }
        "finite-a" => Series::A,
        "finite-b" => Series::B,
        "finite-c" => Series::C,
        "finite-d" => Series::D,
        "finite-e" => Series::E,
        "finite-f" => Series::F,
        "finite-g" => Series::G,
        other => return Err(Error::UnknownFamily(other.to_string())),
    };
    let family = FiniteFamily::new(series, rank).ok_or_else(invalid)?;
    CartanMatrix::new(family.cartan_matrix())
}

/// Names every component of a finite-type matrix.
pub fn identify_finite_type(a: &CartanMatrix) -> Result<Vec<(Vec<usize>, FiniteFamily)>> {
    let ty = classify(a);
    if ty.overall != TypeKind::Finite {
        return Err(Error::NotFinite);
    }
    ty.per_component
        .into_iter()
        .map(|(comp, _)| {
            let sub = a.matrix().submatrix(&comp, &comp);
            let family = FiniteFamily::of_rank(comp.len())
                .into_iter()
                .find(|f| find_isomorphism(&sub, &f.cartan_matrix()).is_some())
                .ok_or_else(|| Error::Consistency(format!("finite component {comp:?} matches no catalog entry")))?;
            Ok((comp, family))
        })
        .collect()
}

/// Bijection `p` with `a[p(i)][p(j)] = target[i][j]` for connected `target`.
pub(crate) fn find_isomorphism(a: &IntMatrix, target: &IntMatrix) -> Option<Vec<usize>> {
    let n = target.rows();
    if a.rows() != n {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let neighbors =
        |m: &IntMatrix, v: usize| -> Vec<usize> { (0..n).filter(|&w| w != v && !m[(v, w)].is_zero()).collect() };
    // BFS order of the target with the parent of each vertex
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for w in neighbors(target, v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    if order.len() != n {
        return None;
    }
    let a_degree: Vec<usize> = (0..n).map(|v| neighbors(a, v).len()).collect();
    let t_degree: Vec<usize> = (0..n).map(|v| neighbors(target, v).len()).collect();

    struct Search<'a> {
        a: &'a IntMatrix,
        target: &'a IntMatrix,
        order: Vec<usize>,
        parent: Vec<Option<usize>>,
        a_degree: Vec<usize>,
        t_degree: Vec<usize>,
        image: Vec<Option<usize>>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        fn place(&mut self, k: usize) -> bool {
            let n = self.order.len();
            if k == n {
                return true;
            }
            let v = self.order[k];
            let candidates: Vec<usize> = match self.parent[v] {
                Some(p) => {
                    let pw = self.image[p].expect("parent placed first");
                    (0..n).filter(|&w| w != pw && !self.a[(pw, w)].is_zero()).collect()
                }
                None => (0..n).collect(),
            };
            for w in candidates {
                if self.used[w] || self.a_degree[w] != self.t_degree[v] || !self.consistent(v, w, k) {
                    continue;
                }
                self.image[v] = Some(w);
                self.used[w] = true;
                if self.place(k + 1) {
                    return true;
                }
                self.image[v] = None;
                self.used[w] = false;
            }
            false
        }

        fn consistent(&self, v: usize, w: usize, k: usize) -> bool {
            self.order[..k].iter().all(|&u| {
                let wu = self.image[u].expect("placed");
                self.a[(w, wu)] == self.target[(v, u)] && self.a[(wu, w)] == self.target[(u, v)]
            })
        }
    }

    let mut search = Search {
        a,
        target,
        order,
        parent,
        a_degree,
        t_degree,
        image: vec![None; n],
        used: vec![false; n],
    };
    search
        .place(0)
        .then(|| search.image.into_iter().map(|x| x.expect("complete")).collect())
}
