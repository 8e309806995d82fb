//! Hodge and weighted Hodge ideals of a simple normal crossings divisor
//! `D = (x_1 ⋯ x_r = 0)` in the local model with coordinates `x_1..x_n`.
//!
//! Everything here is closed form: the ideals are monomial and their
//! generators are indexed by bounded compositions.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::ExponentVector;
use crate::monomial_ideal::MonomialIdeal;

/// `D = (x_1 ⋯ x_r = 0)` inside an `n`-dimensional chart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SncModel {
    n: usize,
    r: usize,
}

impl SncModel {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r == 0 || r > n {
            return Err(Error::InvalidParameter(format!(
                "SNC model needs 1 <= r <= n, got n = {n}, r = {r}"
            )));
        }
        Ok(SncModel { n, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }
}

/// All `(a_1..a_k)` with `0 <= a_i <= max` and `Σ a_i = total`, in
/// lexicographic order.
pub fn bounded_compositions(k: usize, max: u32, total: u64) -> Vec<Vec<u32>> {
    fn go(k: usize, max: u32, total: u64, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        // remaining k-1 slots can absorb at most (k-1)*max
        let rest_cap = (k as u64 - 1) * u64::from(max);
        let lo = total.saturating_sub(rest_cap);
        let hi = total.min(u64::from(max));
        for a in lo..=hi {
            prefix.push(a as u32);
            go(k - 1, max, total - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k as u64 * u64::from(max) >= total {
        go(k, max, total, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// `I_p(D)`: generated by `x_1^{a_1} ⋯ x_r^{a_r}` with `0 <= a_i <= p` and
/// `Σ a_i = p(r-1)`.
pub fn hodge_ideal_snc(model: SncModel, p: u32) -> MonomialIdeal {
    let total = u64::from(p) * (model.r as u64 - 1);
    let gens = bounded_compositions(model.r, p, total)
        .into_iter()
        .map(|a| {
            let mut e = a;
            e.resize(model.n, 0);
            ExponentVector::new(e)
        });
    MonomialIdeal::from_generators(model.n, gens).expect("sized to n")
}

/// The generators of `I_p^{W_l}(D)` for `1 <= l < r` before minimalization:
/// one per pair `(J, a)` with `J ⊆ {1..r}`, `|J| = l`, and `a` a composition
/// of `p(l-1)` into `l` parts bounded by `p`. Coordinates in `{1..r} \ J` carry
/// exponent `p+1`.
pub fn weighted_generators_raw(model: SncModel, p: u32, l: usize) -> Vec<ExponentVector> {
    assert!(
        l >= 1 && l < model.r,
        "raw generator set is defined for 1 <= l < r"
    );
    let compositions = bounded_compositions(l, p, u64::from(p) * (l as u64 - 1));
    let mut out = Vec::new();
    for subset in (0..model.r).combinations(l) {
        for a in &compositions {
            let mut e = vec![0u32; model.n];
            e[..model.r].fill(p + 1);
            for (&j, &aj) in subset.iter().zip(a) {
                e[j] = aj;
            }
            out.push(ExponentVector::new(e));
        }
    }
    out
}

/// `I_p^{W_l}(D)`.
///
/// `l = 0` gives the principal ideal `((x_1 ⋯ x_r)^{p+1})`; `l >= r` gives
/// `I_p(D)`; in between the generators are those of
/// [`weighted_generators_raw`].
pub fn weighted_hodge_ideal_snc(model: SncModel, p: u32, l: usize) -> MonomialIdeal {
    if l == 0 {
        let mut e = vec![p + 1; model.r];
        e.resize(model.n, 0);
        MonomialIdeal::principal(ExponentVector::new(e))
    } else if l >= model.r {
        hodge_ideal_snc(model, p)
    } else {
        MonomialIdeal::from_generators(model.n, weighted_generators_raw(model, p, l))
            .expect("sized to n")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SncCheckKind {
    /// `I_p^{W_l} ⊆ I_p^{W_{l+1}}`
    Chain,
    /// `I_p^{W_l} = I_p` for `l >= r`
    Stabilization,
    /// `I_p^{W_0} = ((x_1 ⋯ x_r)^{p+1})`, checked against `(1)` shifted by
    /// the product monomial
    PrincipalW0,
    /// `I_p ⊆ I_0^{W_1} = adj(D)` for `p >= 1`
    AdjointContainment,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SncCheck {
    pub kind: SncCheckKind,
    pub p: u32,
    pub l: Option<usize>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SncVerification {
    pub n: usize,
    pub r: usize,
    pub p_max: u32,
    pub checks: Vec<SncCheck>,
}

impl SncVerification {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs the inclusion chain, stabilization, `W_0` and adjoint containment
/// checks for every `0 <= p <= p_max` and `0 <= l <= n`.
pub fn verify_snc_theorems(model: SncModel, p_max: u32) -> SncVerification {
    let n = model.n;
    let adjoint = weighted_hodge_ideal_snc(model, 0, 1);
    let mut checks = Vec::new();
    for p in 0..=p_max {
        let hodge = hodge_ideal_snc(model, p);
        let chain: Vec<MonomialIdeal> = (0..=n + 1)
            .map(|l| weighted_hodge_ideal_snc(model, p, l))
            .collect();
        for l in 0..=n {
            checks.push(SncCheck {
                kind: SncCheckKind::Chain,
                p,
                l: Some(l),
                passed: chain[l].is_subideal(&chain[l + 1]).expect("same ring"),
            });
        }
        for (l, ideal) in chain.iter().enumerate().take(n + 1).skip(model.r) {
            checks.push(SncCheck {
                kind: SncCheckKind::Stabilization,
                p,
                l: Some(l),
                passed: *ideal == hodge,
            });
        }
        let mut product = vec![p + 1; model.r];
        product.resize(n, 0);
        let expected_w0 = MonomialIdeal::unit(n)
            .multiply(&ExponentVector::new(product))
            .expect("sized to n");
        checks.push(SncCheck {
            kind: SncCheckKind::PrincipalW0,
            p,
            l: Some(0),
            passed: chain[0] == expected_w0,
        });
        if p >= 1 {
            checks.push(SncCheck {
                kind: SncCheckKind::AdjointContainment,
                p,
                l: None,
                passed: hodge.is_subideal(&adjoint).expect("same ring"),
            });
        }
    }
    SncVerification {
        n,
        r: model.r,
        p_max,
        checks,
    }
}
