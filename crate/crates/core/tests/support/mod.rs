//! Independent oracles shared by the integration and acceptance tests. None
//! of this calls into the code paths it is used to check.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn det(m: &[Vec<Q>]) -> Q {
    // permutation expansion; fine for n <= 5
    let n = m.len();
    let mut total = Q::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut sign = 1i64;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    sign = -sign;
                }
            }
        }
        let mut prod = q(sign);
        for (i, &p) in perm.iter().enumerate() {
            prod *= &m[i][p];
        }
        total += prod;
        // next permutation
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| perm[i] < perm[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    total
}

fn dot(a: &[u32], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(&x, y)| y * q(i64::from(x))).sum()
}

/// Compact facets of `conv(support) + R_{>=0}^n` by brute force: every
/// `n`-subset of the raw support, solved by Cramer's rule, kept when the
/// covector is strictly positive and supports every point.
pub fn brute_force_facets(n: usize, support: &[Vec<u32>]) -> BTreeMap<Vec<Q>, BTreeSet<Vec<u32>>> {
    let mut out = BTreeMap::new();
    let idx: Vec<usize> = (0..support.len()).collect();
    for subset in subsets(&idx, n) {
        let m: Vec<Vec<Q>> = subset
            .iter()
            .map(|&i| support[i].iter().map(|&e| q(i64::from(e))).collect())
            .collect();
        let d = det(&m);
        if d.is_zero() {
            continue;
        }
        let b: Vec<Q> = (0..n)
            .map(|col| {
                let mut mi = m.clone();
                for row in mi.iter_mut() {
                    row[col] = Q::one();
                }
                det(&mi) / &d
            })
            .collect();
        if !b.iter().all(|x| x.is_positive()) {
            continue;
        }
        if support.iter().any(|a| dot(a, &b) < Q::one()) {
            continue;
        }
        let incident = support
            .iter()
            .filter(|a| dot(a, &b).is_one())
            .cloned()
            .collect();
        out.insert(b, incident);
    }
    out
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut with: Vec<Vec<usize>> = subsets(&items[1..], k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, items[0]);
            s
        })
        .collect();
    with.extend(subsets(&items[1..], k));
    with
}

/// `a` is a vertex of `conv(points) + R_{>=0}^n` iff some strictly positive
/// weight makes it the unique minimizer; weights are searched in `1..=k`.
pub fn vertex_by_weight_search(points: &[Vec<u32>], a: &[u32], k: u32) -> bool {
    let n = a.len();
    let mut w = vec![1u32; n];
    loop {
        let value = |p: &[u32]| -> u64 {
            p.iter()
                .zip(&w)
                .map(|(&x, &y)| u64::from(x) * u64::from(y))
                .sum()
        };
        let va = value(a);
        if points.iter().all(|p| p.as_slice() == a || value(p) > va) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            if w[i] < k {
                w[i] += 1;
                break;
            }
            w[i] = 1;
            i += 1;
        }
    }
}

/// A sparse polynomial for the linear-algebra oracle: exponent -> coefficient.
pub type SparsePoly = BTreeMap<Vec<u32>, Q>;

fn monomials_up_to(nvars: usize, degree: u32) -> Vec<Vec<u32>> {
    fn go(nvars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == nvars {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            go(nvars, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(nvars, degree, &mut Vec::new(), &mut out);
    out
}

fn degree(p: &SparsePoly) -> u32 {
    p.keys().map(|e| e.iter().sum::<u32>()).max().unwrap_or(0)
}

/// Decides whether `g = Σ h_i g_i` has a solution with `deg h_i <= bound`, by
/// exact Gaussian elimination on the coefficient system.
pub fn truncated_membership(nvars: usize, g: &SparsePoly, gens: &[SparsePoly], bound: u32) -> bool {
    if g.is_empty() {
        return true;
    }
    let multipliers = monomials_up_to(nvars, bound);
    // one column per (generator, multiplier monomial); rows keyed by monomial
    let mut rows: BTreeMap<Vec<u32>, BTreeMap<usize, Q>> = BTreeMap::new();
    let mut col = 0;
    for gen in gens {
        for m in &multipliers {
            for (e, c) in gen {
                let key: Vec<u32> = e.iter().zip(m).map(|(a, b)| a + b).collect();
                *rows
                    .entry(key)
                    .or_default()
                    .entry(col)
                    .or_insert_with(Q::zero) += c;
            }
            col += 1;
        }
    }
    for key in g.keys() {
        rows.entry(key.clone()).or_default();
    }
    let ncols = col;
    let mut matrix: Vec<(BTreeMap<usize, Q>, Q)> = rows
        .into_iter()
        .map(|(key, mut row)| {
            row.retain(|_, v| !v.is_zero());
            let rhs = g.get(&key).cloned().unwrap_or_else(Q::zero);
            (row, rhs)
        })
        .collect();
    // sparse elimination
    let mut pivot_row = 0;
    for c in 0..ncols {
        let Some(found) = (pivot_row..matrix.len()).find(|&i| matrix[i].0.contains_key(&c)) else {
            continue;
        };
        matrix.swap(pivot_row, found);
        let (prow, prhs) = matrix[pivot_row].clone();
        let pv = prow[&c].clone();
        for (i, (row, rhs)) in matrix.iter_mut().enumerate() {
            if i == pivot_row {
                continue;
            }
            let Some(f) = row.get(&c).cloned() else {
                continue;
            };
            let f = f / &pv;
            for (k, v) in &prow {
                let entry = row.entry(*k).or_insert_with(Q::zero);
                *entry -= &f * v;
                if entry.is_zero() {
                    row.remove(k);
                }
            }
            *rhs -= &f * &prhs;
        }
        pivot_row += 1;
    }
    matrix
        .iter()
        .all(|(row, rhs)| !row.is_empty() || rhs.is_zero())
}

/// Degree bound used by the membership oracle: `deg g + max deg G + 2`.
pub fn oracle_bound(g: &SparsePoly, gens: &[SparsePoly]) -> u32 {
    degree(g) + gens.iter().map(degree).max().unwrap_or(0) + 2
}

pub fn sparse_mul(a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
    let mut out = SparsePoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(Q::zero) += ca * cb;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

pub fn sparse_add(a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
    let mut out = a.clone();
    for (e, c) in b {
        *out.entry(e.clone()).or_insert_with(Q::zero) += c;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Random polynomial with up to `terms` terms of total degree <= `max_deg`
/// and coefficients in -3..=3.
pub fn random_sparse<R: Rng>(rng: &mut R, nvars: usize, max_deg: u32, terms: usize) -> SparsePoly {
    let mut out = SparsePoly::new();
    for _ in 0..terms {
        let mut e = vec![0u32; nvars];
        let mut left = rng.gen_range(0..=max_deg);
        for slot in e.iter_mut() {
            let x = rng.gen_range(0..=left);
            *slot = x;
            left -= x;
        }
        let c = rng.gen_range(-3i64..=3);
        if c != 0 {
            *out.entry(e).or_insert_with(Q::zero) += q(c);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Renders a sparse polynomial in the text grammar over `x0..`.
pub fn render(p: &SparsePoly, names: &[String]) -> String {
    if p.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (e, c)) in p.iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        s.push_str(&c.abs().to_string());
        for (k, &x) in e.iter().enumerate() {
            if x > 0 {
                s.push_str(&format!("*{}^{}", names[k], x));
            }
        }
    }
    s
}

/// A random convenient support: a pure power of every variable plus extra
/// points, all exponents <= `max_exp`, at most `max_points` points.
pub fn random_convenient_support<R: Rng>(
    rng: &mut R,
    n: usize,
    max_points: usize,
    max_exp: u32,
) -> Vec<Vec<u32>> {
    let mut set = BTreeSet::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = rng.gen_range(1..=max_exp);
        set.insert(e);
    }
    let extra = rng.gen_range(0..=max_points.saturating_sub(n));
    for _ in 0..extra {
        let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
        if e.iter().any(|&x| x > 0) {
            set.insert(e);
        }
    }
    set.into_iter().collect()
}

pub fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}
