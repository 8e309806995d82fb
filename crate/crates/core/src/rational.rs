//! Exact rationals and their canonical `p/q` rendering.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational as `p/q`, always with an explicit denominator.
pub fn to_pq(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p/q` or a bare integer.
pub fn from_pq(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

/// Renders a coefficient the way the polynomial grammar writes it: integers
/// bare, everything else as a reduced fraction.
pub(crate) fn to_coefficient(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        to_pq(q)
    }
}

/// Returns `Some(k)` when `q` is a nonnegative integer that fits in `u32`.
pub fn as_small_nonneg_integer(q: &Rational) -> Option<u32> {
    if !q.is_integer() || q.numer() < &BigInt::zero() {
        return None;
    }
    u32::try_from(q.numer()).ok()
}
