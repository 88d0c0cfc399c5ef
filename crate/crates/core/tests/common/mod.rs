//! Reference implementations used as oracles by the integration tests.
//!
//! Everything here is deliberately naive (cofactor expansion, prime
//! factorization, coset closure over small finite groups) and shares no code
//! with the library's elimination, Hermite or Smith routines.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeMap, HashSet, VecDeque};

use kmcover::linalg::Matrix;
use kmcover::{CartanMatrix, FiniteAbelianGroup, IndexSubset, Int};
use rand::Rng;

pub fn to_i64(x: &Int) -> i64 {
    i64::try_from(x).expect("fits in i64")
}

pub fn int_matrix(rows: &[Vec<i64>]) -> Matrix<Int> {
    let cols = rows.first().map_or(0, Vec::len);
    Matrix::from_rows_with_cols(
        rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect(),
        cols,
    )
    .unwrap()
}

pub fn i64_rows(m: &Matrix<Int>) -> Vec<Vec<i64>> {
    m.row_vecs().iter().map(|r| r.iter().map(to_i64).collect()).collect()
}

/// Cofactor expansion along the first row.
pub fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => (0..n)
            .filter(|&c| m[0][c] != 0)
            .map(|c| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != c)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * m[0][c] * det(&minor)
            })
            .sum(),
    }
}

pub fn submatrix(m: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> Vec<Vec<i64>> {
    rows.iter().map(|&r| cols.iter().map(|&c| m[r][c]).collect()).collect()
}

/// `adj(M)` with `M adj(M) = adj(M) M = det(M) I`.
pub fn adjugate(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![1]];
    }
    let mut adj = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[i][j] = sign * det(&submatrix(m, &rows, &cols));
        }
    }
    adj
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Gcd of all `k x k` minors (the `k`-th determinantal divisor).
pub fn determinantal_divisor(m: &[Vec<i64>], k: usize) -> i64 {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut g = 0;
    for r in combinations(rows, k) {
        for c in combinations(cols, k) {
            g = gcd(g, det(&submatrix(m, &r, &c)));
        }
    }
    g
}

fn prime_powers(mut n: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut q = 1;
            while n % p == 0 {
                n /= p;
                q *= p;
            }
            out.push((p, q));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, n));
    }
    out
}

/// Invariant factors of `Z_{o1} x ... x Z_{ok}` via primary decomposition.
pub fn invariant_factors_of_product(orders: &[i64]) -> Vec<i64> {
    let mut by_prime: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for &o in orders {
        assert!(o > 0);
        for (p, q) in prime_powers(o) {
            by_prime.entry(p).or_default().push(q);
        }
    }
    let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![1i64; len];
    for powers in by_prime.values_mut() {
        powers.sort_unstable_by(|a, b| b.cmp(a));
        for (slot, q) in powers.iter().enumerate() {
            factors[len - 1 - slot] *= q;
        }
    }
    factors
}

pub fn factors(g: &FiniteAbelianGroup) -> Vec<i64> {
    g.invariant_factors().iter().map(to_i64).collect()
}

/// Number of elements of each order in `Z_{d1} x ... x Z_{dk}`.
pub fn order_census_of_product(orders: &[i64]) -> BTreeMap<i64, usize> {
    let mut census = BTreeMap::new();
    let total: i64 = orders.iter().product();
    for mut idx in 0..total {
        let mut order = 1;
        for &d in orders {
            let x = idx % d;
            idx /= d;
            let o = d / gcd(d, x);
            order = order / gcd(order, o) * o;
        }
        *census.entry(order).or_insert(0) += 1;
    }
    census
}

pub fn census(g: &FiniteAbelianGroup) -> BTreeMap<i64, usize> {
    order_census_of_product(&factors(g))
}

/// A finite subgroup of `(Z/d)^k` given by an explicit element list.
pub struct ExplicitGroup {
    pub modulus: i64,
    pub elements: Vec<Vec<i64>>,
}

impl ExplicitGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn census(&self) -> BTreeMap<i64, usize> {
        let mut census = BTreeMap::new();
        for e in &self.elements {
            let o = e.iter().fold(1, |acc, &x| {
                let o = self.modulus / gcd(self.modulus, x);
                acc / gcd(acc, o) * o
            });
            *census.entry(o).or_insert(0) += 1;
        }
        census
    }
}

/// Subgroup of `(Z/d)^k` generated by `gens`, by breadth-first closure.
pub fn closure(gens: &[Vec<i64>], modulus: i64) -> ExplicitGroup {
    let k = gens.first().map_or(0, Vec::len);
    let reduce = |v: Vec<i64>| v.into_iter().map(|x| x.rem_euclid(modulus)).collect::<Vec<_>>();
    let zero = vec![0; k];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    let gens: Vec<Vec<i64>> = gens.iter().cloned().map(reduce).collect();
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = reduce(x.iter().zip(g).map(|(a, b)| a + b).collect());
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<Vec<i64>> = seen.into_iter().collect();
    elements.sort();
    ExplicitGroup { modulus, elements }
}

/// `E_I(A) / E(A_I)` by coset enumeration.
///
/// `x ∈ Z^|I|` lies in the row lattice of `A_I` iff `x adj(A_I) ≡ 0 (mod d)`,
/// `d = |det A_I|`, so `x ↦ x adj(A_I) mod d` embeds `Z^|I| / E(A_I)` into
/// `(Z/d)^|I|`. The images of the rows of `Ã_I` generate the quotient.
pub fn brute_force_gamma(a: &[Vec<i64>], subset: &[usize]) -> ExplicitGroup {
    let n = a.len();
    let levi = submatrix(a, subset, subset);
    let d = det(&levi).abs();
    assert!(d != 0, "singular Levi matrix");
    let adj = adjugate(&levi);
    let k = subset.len();
    let all: Vec<usize> = (0..n).collect();
    let tilde = submatrix(a, &all, subset);
    let images: Vec<Vec<i64>> = tilde
        .iter()
        .map(|row| (0..k).map(|c| (0..k).map(|t| row[t] * adj[t][c]).sum()).collect())
        .collect();
    if k == 0 {
        return ExplicitGroup {
            modulus: 1,
            elements: vec![vec![]],
        };
    }
    closure(&images, d)
}

/// Uniformly random generalized Cartan matrix: each off-diagonal pair is
/// either `(0, 0)` or a pair of negatives in `[min, -1]`.
pub fn random_cartan(rng: &mut impl Rng, n: usize, min: i64, zero_prob: f64) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; n]; n];
    for i in 0..n {
        m[i][i] = 2;
        for j in i + 1..n {
            if !rng.gen_bool(zero_prob) {
                m[i][j] = rng.gen_range(min..=-1);
                m[j][i] = rng.gen_range(min..=-1);
            }
        }
    }
    m
}

/// Every generalized Cartan matrix of size `n` with off-diagonal entries in
/// `[min, 0]`.
pub fn all_cartan(n: usize, min: i64) -> Vec<Vec<Vec<i64>>> {
    let pairs: Vec<(i64, i64)> = std::iter::once((0, 0))
        .chain((min..=-1).flat_map(|a| (min..=-1).map(move |b| (a, b))))
        .collect();
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; slots.len()];
    loop {
        let mut m = vec![vec![0; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (&(i, j), &c) in slots.iter().zip(&choice) {
            m[i][j] = pairs[c].0;
            m[j][i] = pairs[c].1;
        }
        out.push(m);
        let mut t = 0;
        loop {
            if t == choice.len() {
                return out;
            }
            choice[t] += 1;
            if choice[t] < pairs.len() {
                break;
            }
            choice[t] = 0;
            t += 1;
        }
    }
}

pub fn cartan(rows: &[Vec<i64>]) -> CartanMatrix {
    CartanMatrix::from_rows(rows.to_vec()).unwrap()
}

pub fn subset(members: &[usize], n: usize) -> IndexSubset {
    IndexSubset::new(members.to_vec(), n).unwrap()
}

/// All proper subsets of `{0..n-1}` as sorted member lists, by bitmask.
pub fn proper_subsets(n: usize) -> Vec<Vec<usize>> {
    (0..(1u32 << n) - 1)
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
        .collect()
}

/// Affine matrices shipped with the test corpus, as `(file name, rows)`.
pub fn affine_corpus() -> Vec<(String, Vec<Vec<i64>>)> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/affine");
    let mut paths: Vec<_> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "txt"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            let rows = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|l| l.split_whitespace().map(|x| x.parse().unwrap()).collect())
                .collect();
            (p.file_name().unwrap().to_string_lossy().into_owned(), rows)
        })
        .collect()
}
