//! Desk-scale ideal membership over `Q[x_1..x_n]`: Buchberger's algorithm in
//! graded reverse lexicographic order with both of Buchberger's criteria, then
//! reduction against the reduced basis.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{grevlex_cmp, ExponentVector};
use crate::poly::Polynomial;
use crate::rational::Rational;

/// Size guard for the Groebner engine. Plain Buchberger blows up quickly, so
/// instances above these limits are refused rather than attempted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerLimits {
    pub max_vars: usize,
    /// Upper bound on the total number of terms across all generators.
    pub max_terms: usize,
}

impl Default for GroebnerLimits {
    fn default() -> Self {
        GroebnerLimits {
            max_vars: 8,
            max_terms: 40,
        }
    }
}

impl GroebnerLimits {
    pub fn with_max_terms(max_terms: usize) -> Self {
        GroebnerLimits {
            max_terms,
            ..Self::default()
        }
    }

    fn check(&self, nvars: usize, generators: &[Polynomial]) -> Result<()> {
        let terms: usize = generators.iter().map(Polynomial::num_terms).sum();
        if nvars > self.max_vars || terms > self.max_terms {
            return Err(Error::GroebnerGuard {
                vars: nvars,
                terms,
                max_vars: self.max_vars,
                max_terms: self.max_terms,
            });
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
struct Key(ExponentVector);

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Working representation: terms keyed in grevlex order, leading term last.
#[derive(Clone, Debug, Default)]
struct Poly(BTreeMap<Key, Rational>);

impl Poly {
    fn from_polynomial(p: &Polynomial) -> Self {
        Poly(
            p.terms()
                .map(|(e, c)| (Key(e.clone()), c.clone()))
                .collect(),
        )
    }

    fn to_polynomial(&self, variables: &[String]) -> Polynomial {
        Polynomial::from_terms(
            variables.to_vec(),
            self.0.iter().map(|(k, c)| (k.0.clone(), c.clone())),
        )
        .expect("same ring")
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn leading(&self) -> Option<(&ExponentVector, &Rational)> {
        self.0.last_key_value().map(|(k, c)| (&k.0, c))
    }

    fn lm(&self) -> &ExponentVector {
        self.leading().expect("nonzero polynomial").0
    }

    fn make_monic(&mut self) {
        let lc = match self.leading() {
            Some((_, c)) => c.clone(),
            None => return,
        };
        if lc.is_one() {
            return;
        }
        for c in self.0.values_mut() {
            *c /= &lc;
        }
    }

    /// `self -= coeff * x^shift * other`.
    fn sub_scaled(&mut self, coeff: &Rational, shift: &ExponentVector, other: &Poly) {
        for (k, c) in &other.0 {
            let key = Key(k.0.add(shift));
            let delta = coeff * c;
            match self.0.entry(key) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(-delta);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    *o.get_mut() -= delta;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
    }

    /// Full reduction of `self` modulo `basis` (each element monic).
    fn reduce(mut self, basis: &[Poly]) -> Poly {
        let mut remainder = BTreeMap::new();
        while let Some((key, c)) = self.0.pop_last() {
            match basis.iter().find(|g| g.lm().divides(&key.0)) {
                Some(g) => {
                    let shift = key.0.sub(g.lm());
                    // the leading term cancels exactly; drop it and subtract the tail
                    let mut tail = g.clone();
                    tail.0.pop_last();
                    self.sub_scaled(&c, &shift, &tail);
                }
                None => {
                    remainder.insert(key, c);
                }
            }
        }
        Poly(remainder)
    }

    fn s_polynomial(&self, other: &Poly) -> Poly {
        let lcm = self.lm().lcm(other.lm());
        let mut s = Poly::default();
        s.sub_scaled(&-Rational::one(), &lcm.sub(self.lm()), self);
        s.sub_scaled(&Rational::one(), &lcm.sub(other.lm()), other);
        s
    }
}

fn check_ring(generators: &[Polynomial], g: Option<&Polynomial>) -> Result<Vec<String>> {
    let first = match g.or(generators.first()) {
        Some(p) => p,
        None => return Ok(Vec::new()),
    };
    for p in generators {
        first.check_same_ring(p)?;
    }
    Ok(first.variables().to_vec())
}

fn buchberger(generators: &[Polynomial]) -> Vec<Poly> {
    let mut basis: Vec<Poly> = Vec::new();
    for p in generators {
        let mut q = Poly::from_polynomial(p);
        if q.is_zero() {
            continue;
        }
        q.make_monic();
        basis.push(q);
    }
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    loop {
        // normal selection strategy: smallest lcm first
        let next = pending.iter().copied().min_by(|a, b| {
            let la = basis[a.0].lm().lcm(basis[a.1].lm());
            let lb = basis[b.0].lm().lcm(basis[b.1].lm());
            grevlex_cmp(&la, &lb).then(a.cmp(b))
        });
        let Some((i, j)) = next else { break };
        pending.remove(&(i, j));
        let (li, lj) = (basis[i].lm(), basis[j].lm());
        if li.is_coprime(lj) {
            continue;
        }
        let lcm = li.lcm(lj);
        let pair = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&lcm)
                && !pending.contains(&pair(i, k))
                && !pending.contains(&pair(j, k))
        });
        if chain {
            continue;
        }
        let mut r = basis[i].s_polynomial(&basis[j]).reduce(&basis);
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        let new = basis.len();
        basis.push(r);
        for k in 0..new {
            pending.insert((k, new));
        }
    }
    reduce_basis(basis)
}

fn reduce_basis(basis: Vec<Poly>) -> Vec<Poly> {
    let mut minimal: Vec<Poly> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(other, h)| {
            other != idx && h.lm().divides(g.lm()) && (h.lm() != g.lm() || other < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let (lead_key, lead_c) = minimal[idx].0.last_key_value().expect("nonzero");
        let (lead_key, lead_c) = (lead_key.clone(), lead_c.clone());
        let mut tail = minimal[idx].clone();
        tail.0.pop_last();
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, p)| p.clone())
            .collect();
        let mut g = tail.reduce(&others);
        g.0.insert(lead_key, lead_c);
        reduced.push(g);
    }
    reduced.sort_by(|a, b| grevlex_cmp(a.lm(), b.lm()));
    reduced
}

/// The reduced Groebner basis (grevlex) of the ideal generated by
/// `generators`, sorted by increasing leading monomial. The zero ideal has the
/// empty basis.
pub fn groebner_basis(
    generators: &[Polynomial],
    limits: &GroebnerLimits,
) -> Result<Vec<Polynomial>> {
    let vars = check_ring(generators, None)?;
    limits.check(vars.len(), generators)?;
    Ok(buchberger(generators)
        .iter()
        .map(|g| g.to_polynomial(&vars))
        .collect())
}

/// Decides `g ∈ (generators)` over `Q[x_1..x_n]`.
pub fn ideal_membership(
    g: &Polynomial,
    generators: &[Polynomial],
    limits: &GroebnerLimits,
) -> Result<bool> {
    let vars = check_ring(generators, Some(g))?;
    limits.check(vars.len(), generators)?;
    if g.is_zero() {
        return Ok(true);
    }
    let basis = buchberger(generators);
    Ok(Poly::from_polynomial(g).reduce(&basis).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ring(vars: &[&str]) -> Vec<String> {
        vars.iter().map(|s| s.to_string()).collect()
    }

    fn p(s: &str, vars: &[String]) -> Polynomial {
        parse_polynomial(s, Some(vars)).unwrap()
    }

    #[test]
    fn generator_is_member() {
        let v = ring(&["x"]);
        assert!(ideal_membership(&p("x", &v), &[p("x", &v)], &GroebnerLimits::default()).unwrap());
    }

    #[test]
    fn linear_combination_is_member() {
        let v = ring(&["x", "y"]);
        let gens = [p("x+y", &v), p("x-y", &v)];
        assert!(ideal_membership(&p("y", &v), &gens, &GroebnerLimits::default()).unwrap());
    }

    #[test]
    fn worked_example_w5_not_in_jacobian() {
        let f = parse_polynomial("x^2+y^2+z^2+u^2w^2+u^4+w^5", None).unwrap();
        let v = f.variables().to_vec();
        let member = ideal_membership(
            &p("w^5", &v),
            &f.jacobian_ideal(),
            &GroebnerLimits::default(),
        )
        .unwrap();
        assert!(!member);
        let inside = ideal_membership(
            &p("x*w^5 + u^3 w", &v),
            &f.jacobian_ideal(),
            &GroebnerLimits::default(),
        );
        assert!(!inside.unwrap());
        let inside = ideal_membership(
            &p("x*w^5 + 2u^3 + u*w^2", &v),
            &f.jacobian_ideal(),
            &GroebnerLimits::default(),
        );
        assert!(inside.unwrap());
    }

    #[test]
    fn reduced_basis_of_twisted_cubic_style_ideal() {
        let v = ring(&["x", "y"]);
        let basis = groebner_basis(
            &[p("x^2 - y", &v), p("x*y - 1", &v)],
            &GroebnerLimits::default(),
        )
        .unwrap();
        // grevlex: x^2 - y, x*y - 1, y^2 - x
        let expected = [p("y^2 - x", &v), p("x*y - 1", &v), p("x^2 - y", &v)];
        assert_eq!(basis.len(), 3);
        for e in &expected {
            assert!(basis.contains(e), "missing {e} in {basis:?}");
        }
    }

    #[test]
    fn zero_and_unit_ideals() {
        let v = ring(&["x", "y"]);
        let limits = GroebnerLimits::default();
        assert!(ideal_membership(&p("0", &v), &[p("x^2", &v)], &limits).unwrap());
        assert!(ideal_membership(&p("x^3 y + 7", &v), &[p("1", &v)], &limits).unwrap());
        assert!(!ideal_membership(&p("x", &v), &[], &limits).unwrap());
        assert!(groebner_basis(&[p("0", &v)], &limits).unwrap().is_empty());
    }

    #[test]
    fn size_guard() {
        let v = ring(&["a", "b", "c", "d", "e", "f", "g", "h", "i"]);
        let err =
            ideal_membership(&p("a", &v), &[p("a", &v)], &GroebnerLimits::default()).unwrap_err();
        assert!(matches!(err, Error::GroebnerGuard { vars: 9, .. }));

        let v = ring(&["x"]);
        let big = p(
            &(0..41)
                .map(|k| format!("x^{k}"))
                .collect::<Vec<_>>()
                .join("+"),
            &v,
        );
        assert!(ideal_membership(
            &p("x", &v),
            std::slice::from_ref(&big),
            &GroebnerLimits::default()
        )
        .is_err());
        assert!(ideal_membership(&p("x", &v), &[big], &GroebnerLimits::with_max_terms(41)).is_ok());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = parse_polynomial("x", None).unwrap();
        let b = parse_polynomial("y", None).unwrap();
        assert!(matches!(
            ideal_membership(&a, &[b], &GroebnerLimits::default()),
            Err(Error::VariableMismatch { .. })
        ));
    }
}
