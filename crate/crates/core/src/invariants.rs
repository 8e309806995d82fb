//! Invariants of an isolated singularity at the origin with nondegenerate
//! Newton boundary: minimal exponent, triviality of `I_p` and `I_p^{W_1}`,
//! the nilpotency bound `r + 1`, and the type `(p, n-l-p)` when the minimal
//! exponent is an integer `p + 1`.
//!
//! The minimal exponent is read off the Newton polyhedron as `ρ̃(1)`. That
//! identity needs an isolated singularity and a nondegenerate boundary;
//! convenience is checked, nondegeneracy is assumed and every report says so.

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groebner::{ideal_membership, GroebnerLimits};
use crate::monomial::ExponentVector;
use crate::newton::{
    compute_polyhedron, delta0, first_missing_pure_power, CompactFacet, NewtonPolyhedron,
};
use crate::poly::Polynomial;
use crate::rational::{as_small_nonneg_integer, to_pq, Rational};

pub const REPORT_SCHEMA: &str = "whideal-report/1";

pub const NONDEGENERACY_NOTE: &str =
    "nondegeneracy assumed: the Newton boundary is not checked for nondegeneracy";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AnalysisOptions {
    /// Accept polynomials lacking a pure power of some variable. Only `ρ̃(1)`
    /// is reported for those, without the minimal-exponent interpretation.
    pub allow_nonconvenient: bool,
    pub groebner_limits: GroebnerLimits,
}

/// `∂_t^j δ ∈ V^α` query with `α ∈ (0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VDegreeQuery {
    j: u32,
    alpha: Rational,
}

impl VDegreeQuery {
    pub fn new(j: u32, alpha: Rational) -> Result<Self> {
        if !alpha.is_positive() || alpha > Rational::one() {
            return Err(Error::InvalidParameter(format!(
                "alpha must lie in (0, 1], got {}",
                to_pq(&alpha)
            )));
        }
        Ok(VDegreeQuery { j, alpha })
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }
}

fn level(p: u32) -> Rational {
    Rational::from_integer((u64::from(p) + 1).into())
}

fn polyhedron(f: &Polynomial, opts: &AnalysisOptions) -> Result<(NewtonPolyhedron, bool)> {
    let missing = first_missing_pure_power(f);
    if let Some(i) = missing {
        if !opts.allow_nonconvenient {
            return Err(Error::NotConvenient(f.variables()[i].clone()));
        }
    }
    Ok((compute_polyhedron(f)?, missing.is_none()))
}

/// Checked entry point: the polyhedron of a convenient `f`.
fn convenient_polyhedron(f: &Polynomial) -> Result<NewtonPolyhedron> {
    if let Some(i) = first_missing_pure_power(f) {
        return Err(Error::NotConvenient(f.variables()[i].clone()));
    }
    compute_polyhedron(f)
}

/// `α̃_f = ρ̃(1)`. Refuses non-convenient input regardless of options, since
/// the value would not be a minimal exponent.
pub fn minimal_exponent(f: &Polynomial) -> Result<Rational> {
    convenient_polyhedron(f)?.rho_tilde_one()
}

/// `∂_t^j δ ∈ V^α i_+O_X  ⇔  α̃_f >= j + α`.
pub fn delta_membership(f: &Polynomial, q: &VDegreeQuery) -> Result<bool> {
    let alpha = minimal_exponent(f)?;
    Ok(alpha >= Rational::from_integer(q.j.into()) + &q.alpha)
}

/// `I_p(D) = O_X  ⇔  α̃_f >= p + 1`.
pub fn hodge_trivial(f: &Polynomial, p: u32) -> Result<bool> {
    Ok(minimal_exponent(f)? >= level(p))
}

/// `I_p^{W_1}(D) = O_X  ⇔  α̃_f > p + 1`.
pub fn w1_trivial(f: &Polynomial, p: u32) -> Result<bool> {
    Ok(minimal_exponent(f)? > level(p))
}

/// When `α̃_f = p + 1`, returns `(p, r)` with `r` the number of compact
/// facets attaining `ρ̃(1)`.
fn integral_level(np: &NewtonPolyhedron) -> Result<(u32, usize)> {
    let alpha = np.rho_tilde_one()?;
    let p = as_small_nonneg_integer(&(&alpha - Rational::one()))
        .ok_or_else(|| Error::NotIntegralMinimalExponent(to_pq(&alpha)))?;
    Ok((p, np.minimizing_facets()?.len()))
}

/// `r + 1`, where `r = #{F : ρ̃_F(1) = ρ̃(1)}`; `I_p^{W_{r+1}}(D)` is trivial.
/// Requires `α̃_f = p + 1`.
pub fn nilpotency_upper(f: &Polynomial) -> Result<u32> {
    let (_, r) = integral_level(&convenient_polyhedron(f)?)?;
    Ok(r as u32 + 1)
}

/// A candidate type `(p, n - l - p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SingularityType {
    pub p: u32,
    pub s: u32,
}

impl Serialize for SingularityType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(2))?;
        seq.serialize_element(&self.p)?;
        seq.serialize_element(&self.s)?;
        seq.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TrivialityEntry {
    pub p: u32,
    pub trivial: bool,
}

/// Outcome of [`jacobian_witness`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobianWitness {
    pub monomial: ExponentVector,
    pub outside_jacobian: bool,
    pub annotation: Option<String>,
}

fn serialize_pq<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&to_pq(q))
}

fn serialize_opt_pq<S: Serializer>(
    q: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_str(&to_pq(q)),
        None => s.serialize_none(),
    }
}

/// Everything [`classify`] computes about the singularity at the origin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularityReport {
    pub schema: &'static str,
    pub polynomial: String,
    pub variables: Vec<String>,
    pub n: usize,
    pub convenient: bool,
    #[serde(serialize_with = "serialize_pq")]
    pub rho_tilde_one: Rational,
    /// `α̃_f`; unset when `f` is not convenient.
    #[serde(serialize_with = "serialize_opt_pq")]
    pub minimal_exponent: Option<Rational>,
    /// `p` with `α̃_f = p + 1`, when that is a nonnegative integer.
    pub p_level: Option<u32>,
    /// Number of compact facets attaining `ρ̃(1)`.
    pub r: usize,
    /// `dim Δ_0`, when `p_level` is set.
    pub s: Option<usize>,
    pub simplicial: bool,
    pub weighted_homogeneous: bool,
    pub hodge_triviality: Vec<TrivialityEntry>,
    pub w1_triviality: Vec<TrivialityEntry>,
    /// `I_p^{W_1}(D) = m_x` holds whenever `p_level` is set.
    pub w1_is_maximal_ideal: bool,
    pub nilpotency_upper: Option<u32>,
    pub type_range: Option<Vec<SingularityType>>,
    pub exact_type: Option<SingularityType>,
    pub facets: Vec<CompactFacet>,
    pub witness: Option<JacobianWitness>,
    pub notes: Vec<String>,
}

/// Candidate types `(p, s')` with `p <= s' <= n-2-p` (Briançon-Skoda) and
/// `l = n - s' - p <= l_max`.
fn type_range(n: usize, p: u32, l_max: usize) -> Vec<SingularityType> {
    let n = n as i64;
    let p64 = i64::from(p);
    let lo = p64.max(n - l_max as i64 - p64);
    let hi = n - 2 - p64;
    (lo..=hi)
        .map(|s| SingularityType { p, s: s as u32 })
        .collect()
}

/// Computes the full [`SingularityReport`] for `f`.
pub fn classify(f: &Polynomial, opts: &AnalysisOptions) -> Result<SingularityReport> {
    let (np, convenient) = polyhedron(f, opts)?;
    let n = f.nvars();
    let rho = np.rho_tilde_one()?;
    let r = np.minimizing_facets()?.len();
    let mut notes = Vec::new();
    let mut report = SingularityReport {
        schema: REPORT_SCHEMA,
        polynomial: f.to_string(),
        variables: f.variables().to_vec(),
        n,
        convenient,
        rho_tilde_one: rho.clone(),
        minimal_exponent: None,
        p_level: None,
        r,
        s: None,
        simplicial: np.is_simplicial(),
        weighted_homogeneous: np.is_weighted_homogeneous(),
        hodge_triviality: Vec::new(),
        w1_triviality: Vec::new(),
        w1_is_maximal_ideal: false,
        nilpotency_upper: None,
        type_range: None,
        exact_type: None,
        facets: np.facets().to_vec(),
        witness: None,
        notes: Vec::new(),
    };
    if !convenient {
        notes.push(
            "not convenient: rho~(1) is reported without the minimal-exponent interpretation"
                .to_string(),
        );
        report.notes = notes;
        return Ok(report);
    }
    notes.push("convenient: a pure power of every variable occurs".to_string());
    notes.push(NONDEGENERACY_NOTE.to_string());

    let floor = rho.floor().to_integer();
    let top = u32::try_from(floor).unwrap_or(0);
    for p in 0..=top {
        report.hodge_triviality.push(TrivialityEntry {
            p,
            trivial: rho >= level(p),
        });
        report.w1_triviality.push(TrivialityEntry {
            p,
            trivial: rho > level(p),
        });
    }
    report.minimal_exponent = Some(rho.clone());

    let Ok((p, _)) = integral_level(&np) else {
        report.notes = notes;
        return Ok(report);
    };
    report.p_level = Some(p);
    report.w1_is_maximal_ideal = true;
    report.nilpotency_upper = Some(r as u32 + 1);
    let s = delta0(&np, p)?.dimension;
    report.s = Some(s);

    let mut l_max = r + 1;
    if report.simplicial {
        l_max = l_max.min(if s > 0 { n - s + 1 } else { n });
    } else {
        notes.push("not simplicial: the bound l <= n-s+1 is not applied".to_string());
    }
    let range = type_range(n, p, l_max);
    if range.is_empty() {
        notes.push(format!(
            "empty type range: n = {n} < 2p+2 = {} contradicts the Briançon-Skoda bound",
            2 * p + 2
        ));
    }

    let mut candidates = Vec::new();
    if report.weighted_homogeneous && n >= 2 + 2 * p as usize {
        candidates.push(SingularityType {
            p,
            s: (n - 2 - p as usize) as u32,
        });
    }
    if p == 0 {
        candidates.push(SingularityType {
            p: 0,
            s: s.saturating_sub(1) as u32,
        });
    }
    candidates.dedup();
    match candidates.as_slice() {
        [] => {}
        [t] if range.contains(t) => report.exact_type = Some(*t),
        [t] => notes.push(format!(
            "derived type ({}, {}) falls outside the type range; left unset",
            t.p, t.s
        )),
        _ => notes.push("weighted-homogeneous and p = 0 types disagree; left unset".to_string()),
    }
    report.type_range = Some(range);
    report.notes = notes;
    Ok(report)
}

fn superscript(k: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    k.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).expect("decimal digit") as usize])
        .collect()
}

fn power(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}{}", superscript(k)),
    }
}

/// Tests whether the monomial `m` lies outside the Jacobian ideal of `f`.
///
/// When it does and `α̃_f = p + 1`, the result carries the inference pattern
/// `(t∂_t)^r ∂_t^p δ ∉ V^{>1}` together with the type it would point to; the
/// general criterion turning non-membership into that statement is not
/// encoded, so this is an annotation and never an exact type.
pub fn jacobian_witness(
    f: &Polynomial,
    m: &ExponentVector,
    p: u32,
    limits: &GroebnerLimits,
) -> Result<JacobianWitness> {
    m.check_len(f.nvars())?;
    let g = Polynomial::monomial(f.variables().to_vec(), m.clone())?;
    let outside = !ideal_membership(&g, &f.jacobian_ideal(), limits)?;
    let mut annotation = None;
    if outside {
        let integral = convenient_polyhedron(f).and_then(|np| integral_level(&np));
        if let Ok((level_p, r)) = integral {
            if level_p == p {
                let n = f.nvars() as i64;
                let s = n - r as i64 - 1 - i64::from(p);
                annotation = Some(format!(
                    "{}{}δ ∉ V^{{>1}} pattern; supports type ({p},{s})",
                    power("(t∂_t)", r),
                    power("∂_t", p as usize)
                ));
            }
        }
    }
    Ok(JacobianWitness {
        monomial: m.clone(),
        outside_jacobian: outside,
        annotation,
    })
}

impl SingularityReport {
    /// `true` iff `I_p(D)` is trivial, from the stored table.
    pub fn hodge_trivial(&self, p: u32) -> Option<bool> {
        let alpha = self.minimal_exponent.as_ref()?;
        Some(*alpha >= level(p))
    }

    pub fn w1_trivial(&self, p: u32) -> Option<bool> {
        let alpha = self.minimal_exponent.as_ref()?;
        Some(*alpha > level(p))
    }

    pub fn is_integral(&self) -> bool {
        self.minimal_exponent
            .as_ref()
            .is_some_and(|a| a.is_integer() && !a.is_zero())
    }
}
