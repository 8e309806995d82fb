//! Exponent vectors: lattice points of `Z_{>=0}^n`, the index object for
//! monomials, Newton polyhedra and monomial ideals.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `x_1^{e_1} ... x_n^{e_n}`, stored by its exponents.
///
/// The derived `Ord` is lexicographic on the entries; use [`grevlex_cmp`] for
/// the monomial order used by the Groebner engine.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The monomial `x_i^e` in `n` variables.
    pub fn pure_power(n: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; n];
        v[i] = e;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Index of the variable when this is a pure power `x_i^e` with `e > 0`.
    pub fn pure_power_index(&self) -> Option<usize> {
        let mut nonzero = self.0.iter().enumerate().filter(|(_, &e)| e > 0);
        let (i, _) = nonzero.next()?;
        nonzero.next().is_none().then_some(i)
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: n,
                found: self.len(),
            })
        }
    }

    /// Componentwise `self <= other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`; caller guarantees `other` divides `self`.
    pub(crate) fn sub(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Self) -> Self {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Applies a permutation of the variables: entry `i` moves to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = vec![0; self.len()];
        for (i, &e) in self.0.iter().enumerate() {
            out[perm[i]] = e;
        }
        ExponentVector(out)
    }

    /// Renders the monomial over the given names, e.g. `x1^2*x3`; the zero
    /// vector renders as `1`.
    pub fn render(&self, names: &[String], separator: &str) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, name)| match e {
                1 => name.clone(),
                _ => format!("{name}^{e}"),
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join(separator)
        }
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Graded reverse lexicographic comparison: higher total degree wins; on a tie
/// the vector whose last nonzero entry of `a - b` is negative is larger.
pub fn grevlex_cmp(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        other => return other,
    }
    for (x, y) in a.0.iter().zip(&b.0).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // smaller exponent in the last differing variable means larger
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        // x > y > z, and x*z < y^2 in grevlex
        assert_eq!(
            grevlex_cmp(&ev(&[1, 0, 0]), &ev(&[0, 1, 0])),
            Ordering::Greater
        );
        assert_eq!(
            grevlex_cmp(&ev(&[1, 0, 1]), &ev(&[0, 2, 0])),
            Ordering::Less
        );
        assert_eq!(
            grevlex_cmp(&ev(&[0, 0, 3]), &ev(&[2, 0, 0])),
            Ordering::Greater
        );
        assert_eq!(grevlex_cmp(&ev(&[1, 1]), &ev(&[1, 1])), Ordering::Equal);
    }

    #[test]
    fn divisibility_and_lcm() {
        assert!(ev(&[1, 0]).divides(&ev(&[1, 1])));
        assert!(!ev(&[2, 0]).divides(&ev(&[1, 1])));
        assert_eq!(ev(&[2, 0, 1]).lcm(&ev(&[1, 3, 0])), ev(&[2, 3, 1]));
        assert!(ev(&[2, 0]).is_coprime(&ev(&[0, 5])));
    }

    #[test]
    fn pure_powers() {
        assert_eq!(ev(&[0, 4, 0]).pure_power_index(), Some(1));
        assert_eq!(ev(&[1, 4, 0]).pure_power_index(), None);
        assert_eq!(ev(&[0, 0]).pure_power_index(), None);
    }

    #[test]
    fn rendering() {
        let names: Vec<String> = ["x1", "x2", "x3"].iter().map(|s| s.to_string()).collect();
        assert_eq!(ev(&[2, 0, 1]).render(&names, ""), "x1^2x3");
        assert_eq!(ev(&[0, 0, 0]).render(&names, "*"), "1");
    }
}
