//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{grevlex_cmp, ExponentVector};
use crate::rational::{to_coefficient, Rational};

/// A polynomial over `Q` in an ordered list of named variables.
///
/// Zero coefficients are never stored, so two polynomials over the same
/// variables are equal iff their term maps are equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    variables: Vec<String>,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl Polynomial {
    pub fn zero(variables: Vec<String>) -> Self {
        Polynomial {
            variables,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a polynomial, summing repeated exponents and dropping zeros.
    pub fn from_terms<I>(variables: Vec<String>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        let n = variables.len();
        let mut p = Polynomial::zero(variables);
        for (e, c) in terms {
            e.check_len(n)?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn constant(variables: Vec<String>, c: Rational) -> Self {
        let n = variables.len();
        let mut p = Polynomial::zero(variables);
        p.add_term(ExponentVector::zero(n), c);
        p
    }

    pub fn monomial(variables: Vec<String>, e: ExponentVector) -> Result<Self> {
        Polynomial::from_terms(variables, [(e, Rational::one())])
    }

    pub(crate) fn add_term(&mut self, e: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// The exponent vectors carrying a nonzero coefficient.
    pub fn support(&self) -> BTreeSet<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(ExponentVector::degree).max()
    }

    /// Terms sorted in decreasing graded reverse lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&ExponentVector, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grevlex_cmp(b.0, a.0));
        v
    }

    pub(crate) fn check_same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.variables == other.variables {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.variables.clone(),
                right: other.variables.clone(),
            })
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.variables.clone());
        }
        Polynomial {
            variables: self.variables.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.variables.clone());
        for (e, c) in &self.terms {
            let k = e.entries()[i];
            if k == 0 {
                continue;
            }
            let mut d = e.entries().to_vec();
            d[i] -= 1;
            out.add_term(
                ExponentVector::new(d),
                c * Rational::from_integer(BigInt::from(k)),
            );
        }
        out
    }

    /// All first partial derivatives, in variable order. These generate the
    /// Jacobian ideal of `self`.
    pub fn jacobian_ideal(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.derivative(i)).collect()
    }

    /// Renames variables by permutation: variable `i` becomes variable
    /// `perm[i]`, keeping the name list unchanged.
    pub fn permuted(&self, perm: &[usize]) -> Polynomial {
        Polynomial {
            variables: self.variables.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.permuted(perm), c.clone()))
                .collect(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// Panics if the operands live in different rings.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.variables, rhs.variables, "variable lists differ");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.variables, rhs.variables, "variable lists differ");
        let mut out = Polynomial::zero(self.variables.clone());
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.add(b), x * y);
            }
        }
        out
    }
}

/// Canonical text form: terms in decreasing grevlex order, coefficients as
/// reduced fractions, factors joined by `*`. The output is accepted by
/// [`crate::parse_polynomial`].
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if e.is_zero() {
                write!(f, "{}", to_coefficient(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", e.render(&self.variables, "*"))?;
            } else {
                write!(
                    f,
                    "{}*{}",
                    to_coefficient(&abs),
                    e.render(&self.variables, "*")
                )?;
            }
        }
        Ok(())
    }
}
