//! Monomial ideals stored by their minimal generators.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::{grevlex_cmp, ExponentVector};

/// An ideal of `k[x_1..x_n]` generated by monomials.
///
/// The generator list is always the divisibility-minimal antichain, sorted in
/// decreasing grevlex order, so structural equality is ideal equality. The
/// zero ideal has no generators; the unit ideal is generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    pub fn from_generators<I>(n: usize, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        let raw: BTreeSet<ExponentVector> = raw.into_iter().collect();
        for m in &raw {
            m.check_len(n)?;
        }
        let mut generators: Vec<ExponentVector> = raw
            .iter()
            .filter(|m| !raw.iter().any(|g| g != *m && g.divides(m)))
            .cloned()
            .collect();
        generators.sort_by(|a, b| grevlex_cmp(b, a));
        Ok(MonomialIdeal { n, generators })
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: vec![ExponentVector::zero(n)],
        }
    }

    /// The maximal ideal `(x_1, ..., x_n)` of the origin.
    pub fn maximal(n: usize) -> Self {
        Self::from_generators(n, (0..n).map(|i| ExponentVector::pure_power(n, i, 1)))
            .expect("sized to n")
    }

    pub fn principal(m: ExponentVector) -> Self {
        MonomialIdeal {
            n: m.len(),
            generators: vec![m],
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(ExponentVector::is_zero)
    }

    fn check_same_n(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.n,
                found: other.n,
            })
        }
    }

    pub fn contains_monomial(&self, m: &ExponentVector) -> Result<bool> {
        m.check_len(self.n)?;
        Ok(self.generators.iter().any(|g| g.divides(m)))
    }

    /// `self ⊆ other`. For monomial ideals it suffices that every generator of
    /// `self` lies in `other`.
    pub fn is_subideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same_n(other)?;
        Ok(self
            .generators
            .iter()
            .all(|g| other.generators.iter().any(|h| h.divides(g))))
    }

    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same_n(other)?;
        Ok(self == other)
    }

    /// The ideal `self · x^m`.
    pub fn multiply(&self, m: &ExponentVector) -> Result<MonomialIdeal> {
        m.check_len(self.n)?;
        // shifting by a monomial preserves the antichain and the grevlex order
        Ok(MonomialIdeal {
            n: self.n,
            generators: self.generators.iter().map(|g| g.add(m)).collect(),
        })
    }

    /// The sum `self + other`, generated by the union of the generators.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_n(other)?;
        Self::from_generators(
            self.n,
            self.generators.iter().chain(&other.generators).cloned(),
        )
    }

    /// Text form `(m1, m2, ...)` over the given variable names, factors
    /// juxtaposed (`x1^2x2`). The zero ideal renders as `(0)`.
    pub fn render(&self, names: &[String]) -> String {
        if self.generators.is_empty() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self
            .generators
            .iter()
            .map(|g| g.render(names, ""))
            .collect();
        format!("({})", parts.join(", "))
    }

    /// [`render`](Self::render) with variables named `x1..xn`.
    pub fn render_indexed(&self) -> String {
        self.render(&indexed_names(self.n))
    }

    /// Orders ideals by inclusion when comparable.
    pub fn inclusion_cmp(&self, other: &MonomialIdeal) -> Option<Ordering> {
        let le = self.is_subideal(other).ok()?;
        let ge = other.is_subideal(self).ok()?;
        match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

/// `x1, ..., xn`.
pub fn indexed_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// JSON form: the list of generator exponent arrays.
impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.generators.serialize(serializer)
    }
}
