//! Newton polyhedra of polynomials with a singular point at the origin.
//!
//! `Γ_+(f)` is the convex hull of `support(f) + R_{>=0}^n`. Only its compact
//! facets matter for the invariants in this crate. Each compact facet `F`
//! has a unique covector `B_F` with strictly positive entries such that
//! `⟨A, B_F⟩ = 1` on `F` and `⟨A, B_F⟩ >= 1` on all of `Γ_+(f)`.
//!
//! Facets are enumerated exactly: every `n`-subset of non-dominated support
//! points spanning a hyperplane `⟨·, B⟩ = 1` with `B > 0` that supports the
//! whole support set yields a compact facet; subsets spanning the same
//! hyperplane are merged.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lp;
use crate::monomial::ExponentVector;
use crate::poly::Polynomial;
use crate::rational::{to_pq, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactFacet {
    covector: Vec<Rational>,
    incident_points: Vec<ExponentVector>,
}

impl CompactFacet {
    /// The weight covector `B_F`.
    pub fn covector(&self) -> &[Rational] {
        &self.covector
    }

    /// Support points on the facet, sorted.
    pub fn incident_points(&self) -> &[ExponentVector] {
        &self.incident_points
    }

    /// `⟨A, B_F⟩`.
    pub fn pairing(&self, a: &ExponentVector) -> Rational {
        pairing(a, &self.covector)
    }

    /// `⟨𝟏, B_F⟩`, i.e. `ρ̃_F(1)`.
    pub fn weight_sum(&self) -> Rational {
        self.covector.iter().sum()
    }
}

impl Serialize for CompactFacet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let covector: Vec<String> = self.covector.iter().map(to_pq).collect();
        let mut s = serializer.serialize_struct("CompactFacet", 2)?;
        s.serialize_field("covector", &covector)?;
        s.serialize_field("incident_points", &self.incident_points)?;
        s.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonPolyhedron {
    n: usize,
    support: Vec<ExponentVector>,
    facets: Vec<CompactFacet>,
    vertices: Vec<ExponentVector>,
}

fn pairing(a: &ExponentVector, b: &[Rational]) -> Rational {
    a.entries()
        .iter()
        .zip(b)
        .filter(|(&e, _)| e != 0)
        .map(|(&e, w)| w * Rational::from_integer(e.into()))
        .sum()
}

/// Solves `M x = 1` for square `M`; `None` when singular.
fn solve_unit_rhs(rows: &[&ExponentVector]) -> Option<Vec<Rational>> {
    let n = rows.len();
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            let mut row: Vec<Rational> = r
                .entries()
                .iter()
                .map(|&e| Rational::from_integer(e.into()))
                .collect();
            row.push(Rational::one());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for v in m[col].iter_mut() {
            *v /= &p;
        }
        let pivot_row = m[col].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Rank of a list of integer vectors over `Q`.
pub(crate) fn rank(vectors: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = vectors.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if !row[col].is_zero() {
                let f = &row[col] / &pivot_row[col];
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Affine dimension of a nonempty point set.
pub(crate) fn affine_dimension(points: &[ExponentVector]) -> usize {
    let Some(base) = points.first() else { return 0 };
    let diffs: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| {
            p.entries()
                .iter()
                .zip(base.entries())
                .map(|(&a, &b)| Rational::from_integer((i64::from(a) - i64::from(b)).into()))
                .collect()
        })
        .collect();
    rank(&diffs)
}

impl NewtonPolyhedron {
    /// The Newton polyhedron of the given support set (coefficients never
    /// matter). Fails on an empty support or one containing the origin.
    pub fn from_support(n: usize, support: &BTreeSet<ExponentVector>) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        for a in support {
            a.check_len(n)?;
        }
        if support.iter().any(ExponentVector::is_zero) {
            return Err(Error::OriginInSupport);
        }
        let support: Vec<ExponentVector> = support.iter().cloned().collect();
        // a point dominated by another support point lies strictly inside
        // every positive half-space and cannot touch a compact face
        let minimal: Vec<&ExponentVector> = support
            .iter()
            .filter(|a| !support.iter().any(|b| b != *a && b.divides(a)))
            .collect();

        let subsets: Vec<Vec<usize>> = (0..minimal.len()).combinations(n).collect();
        let covectors: BTreeSet<Vec<Rational>> = subsets
            .par_iter()
            .filter_map(|subset| {
                let rows: Vec<&ExponentVector> = subset.iter().map(|&i| minimal[i]).collect();
                let b = solve_unit_rhs(&rows)?;
                if !b.iter().all(Signed::is_positive) {
                    return None;
                }
                let supporting = minimal.iter().all(|a| pairing(a, &b) >= Rational::one());
                supporting.then_some(b)
            })
            .collect();

        let mut by_covector: BTreeMap<Vec<Rational>, Vec<ExponentVector>> = BTreeMap::new();
        for b in covectors {
            let incident = support
                .iter()
                .filter(|a| pairing(a, &b).is_one())
                .cloned()
                .collect();
            by_covector.insert(b, incident);
        }
        let facets = by_covector
            .into_iter()
            .map(|(covector, incident_points)| CompactFacet {
                covector,
                incident_points,
            })
            .collect();

        let vertices = minimal
            .iter()
            .filter(|a| is_vertex(a, &minimal))
            .map(|a| (*a).clone())
            .collect();

        Ok(NewtonPolyhedron {
            n,
            support,
            facets,
            vertices,
        })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> &[ExponentVector] {
        &self.support
    }

    /// Compact facets sorted by covector.
    pub fn facets(&self) -> &[CompactFacet] {
        &self.facets
    }

    /// Vertices of `Γ_+(f)`, sorted.
    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    /// `ρ̃(1) = min_F ⟨𝟏, B_F⟩`.
    pub fn rho_tilde_one(&self) -> Result<Rational> {
        self.facets
            .iter()
            .map(CompactFacet::weight_sum)
            .min()
            .ok_or(Error::NoCompactFacets)
    }

    /// The facets attaining `ρ̃(1)`; their number is the multiplicity `r`.
    pub fn minimizing_facets(&self) -> Result<Vec<&CompactFacet>> {
        let min = self.rho_tilde_one()?;
        Ok(self
            .facets
            .iter()
            .filter(|f| f.weight_sum() == min)
            .collect())
    }

    /// True iff every compact facet carries exactly `n` vertices.
    pub fn is_simplicial(&self) -> bool {
        self.facets.iter().all(|f| {
            f.incident_points
                .iter()
                .filter(|a| self.vertices.binary_search(a).is_ok())
                .count()
                == self.n
        })
    }

    /// True iff a single compact facet contains the whole support, i.e. `f`
    /// is quasi-homogeneous for the weights `B_F`.
    pub fn is_weighted_homogeneous(&self) -> bool {
        self.facets
            .iter()
            .any(|f| f.incident_points.len() == self.support.len())
    }
}

/// `a` is a vertex of `conv(points) + R_{>=0}^n` iff it is not a convex
/// combination of the other points plus a nonnegative shift.
fn is_vertex(a: &ExponentVector, points: &[&ExponentVector]) -> bool {
    let others: Vec<&&ExponentVector> = points.iter().filter(|p| **p != a).collect();
    if others.is_empty() {
        return true;
    }
    let n = a.len();
    let k = others.len();
    // variables: λ_1..λ_k, s_1..s_n
    let mut rows = Vec::with_capacity(n + 1);
    let mut rhs = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut row = vec![Rational::zero(); k + n];
        for (j, p) in others.iter().enumerate() {
            row[j] = Rational::from_integer(p.entries()[i].into());
        }
        row[k + i] = Rational::one();
        rows.push(row);
        rhs.push(Rational::from_integer(a.entries()[i].into()));
    }
    let mut sum = vec![Rational::zero(); k + n];
    for v in sum.iter_mut().take(k) {
        *v = Rational::one();
    }
    rows.push(sum);
    rhs.push(Rational::one());
    !lp::feasible(&rows, &rhs)
}

/// `Γ_+(f)`; see [`NewtonPolyhedron::from_support`].
pub fn compute_polyhedron(f: &Polynomial) -> Result<NewtonPolyhedron> {
    NewtonPolyhedron::from_support(f.nvars(), &f.support())
}

/// True iff a pure power of every variable occurs in `f`; returns the index
/// of the first variable lacking one otherwise.
pub fn first_missing_pure_power(f: &Polynomial) -> Option<usize> {
    let mut seen = vec![false; f.nvars()];
    for (e, _) in f.terms() {
        if let Some(i) = e.pure_power_index() {
            seen[i] = true;
        }
    }
    seen.iter().position(|s| !s)
}

/// `ρ̃_F(x^ν) = ⟨ν + 𝟏, B_F⟩`.
pub fn rho_f(facet: &CompactFacet, nu: &ExponentVector) -> Result<Rational> {
    nu.check_len(facet.covector.len())?;
    Ok(pairing(nu, &facet.covector) + facet.weight_sum())
}

/// `ρ̃(g) = min_F min_{A ∈ supp g} ρ̃_F(x^A)`.
pub fn rho_tilde(g: &Polynomial, np: &NewtonPolyhedron) -> Result<Rational> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if g.nvars() != np.n {
        return Err(Error::LengthMismatch {
            expected: np.n,
            found: g.nvars(),
        });
    }
    if np.facets.is_empty() {
        return Err(Error::NoCompactFacets);
    }
    let mut best: Option<Rational> = None;
    for facet in &np.facets {
        for (nu, _) in g.terms() {
            let v = rho_f(facet, nu)?;
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
    }
    Ok(best.expect("nonempty facets and support"))
}

/// The smallest compact face `Δ_0` containing `𝟏/(p+1)`, with its affine
/// dimension `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Delta0 {
    pub face: Vec<ExponentVector>,
    pub dimension: usize,
}

/// Computes `Δ_0` as the intersection of the compact facets through
/// `𝟏/(p+1)`. Requires `ρ̃(1) = p+1`. For a convenient polynomial the
/// non-compact facets lie in coordinate hyperplanes and never contain that
/// point, so the compact facets determine the face.
pub fn delta0(np: &NewtonPolyhedron, p: u32) -> Result<Delta0> {
    let level = Rational::from_integer((u64::from(p) + 1).into());
    if np.rho_tilde_one()? != level {
        return Err(Error::NotOnBoundary { level: p + 1 });
    }
    let mut through = np.facets.iter().filter(|f| f.weight_sum() == level);
    let first = through.next().expect("ρ̃(1) is attained");
    let mut face: BTreeSet<ExponentVector> = first.incident_points.iter().cloned().collect();
    for f in through {
        let other: BTreeSet<ExponentVector> = f.incident_points.iter().cloned().collect();
        face = face.intersection(&other).cloned().collect();
    }
    if face.is_empty() {
        return Err(Error::NotOnBoundary { level: p + 1 });
    }
    let face: Vec<ExponentVector> = face.into_iter().collect();
    let dimension = affine_dimension(&face);
    Ok(Delta0 { face, dimension })
}
