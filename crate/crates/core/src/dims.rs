//! Exact combinatorics around isolated singularities: the dimension of
//! `F_p` of a point pushforward, the Hodge-number description of
//! `Gr_F^{n-p} H_l` via a resolution, and point-count bounds for projective
//! hypersurfaces.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact `C(n, k)`; zero outside `0 <= k <= n`. Negative `n` is rejected.
pub fn binomial(n: i64, k: i64) -> Result<BigUint> {
    if n < 0 {
        return Err(Error::InvalidParameter(format!(
            "binomial needs n >= 0, got {n}"
        )));
    }
    if k < 0 || k > n {
        return Ok(BigUint::zero());
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc = C(n, i+1) after this step; the division is exact
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    Ok(acc)
}

fn binom(n: u64, k: u64) -> BigUint {
    binomial(n as i64, k as i64).expect("nonnegative n")
}

/// `dim Gr_F^{n-r} H_l` for `0 <= r <= p`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrFDims {
    pub values: BTreeMap<u32, u64>,
}

impl GrFDims {
    pub fn from_slice(values: &[u64]) -> Self {
        GrFDims {
            values: values
                .iter()
                .enumerate()
                .map(|(r, &v)| (r as u32, v))
                .collect(),
        }
    }

    fn get(&self, r: u32) -> Result<u64> {
        self.values.get(&r).copied().ok_or(Error::MissingEntry(r))
    }
}

fn check_ambient(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "ambient dimension n must be >= 1".into(),
        ));
    }
    Ok(())
}

/// `dim F_p (i_x)_+ H_l = Σ_{r=0}^{p} C(n+p-r, p-r) · dim Gr_F^{n-r} H_l`.
pub fn dim_fp_pushforward(d: &GrFDims, p: u32, n: u32) -> Result<BigUint> {
    check_ambient(n)?;
    let mut total = BigUint::zero();
    for r in 0..=p {
        let c = binom(u64::from(n + p - r), u64::from(p - r));
        total += c * BigUint::from(d.get(r)?);
    }
    Ok(total)
}

/// The same dimension before the hockey-stick collapse:
/// `Σ_{k=0}^{p} C(n-1+k, k) · dim F^{n-p+k} H_l`, where
/// `dim F^{n-j} H_l = Σ_{r=0}^{j} dim Gr_F^{n-r} H_l` because `F^{n+1} H_l = 0`.
pub fn dim_fp_pushforward_by_filtration(d: &GrFDims, p: u32, n: u32) -> Result<BigUint> {
    check_ambient(n)?;
    let mut total = BigUint::zero();
    for k in 0..=p {
        let mut filtration_dim = 0u128;
        for r in 0..=(p - k) {
            filtration_dim += u128::from(d.get(r)?);
        }
        total += binom(u64::from(n - 1 + k), u64::from(k)) * BigUint::from(filtration_dim);
    }
    Ok(total)
}

/// Checks `Σ_{k=0}^{m} C(n-1+k, k) = C(n+m, m)`.
pub fn hockey_stick(n: u32, m: u32) -> bool {
    if n == 0 {
        return false;
    }
    let lhs: BigUint = (0..=m)
        .map(|k| binom(u64::from(n - 1 + k), u64::from(k)))
        .sum();
    lhs == binom(u64::from(n + m), u64::from(m))
}

/// Hodge numbers `h^{a,b}` of `H^{n-2}(G)` (`middle`) and `H^n(G)` (`top`) for
/// the exceptional divisor `G` of a resolution of an isolated singularity in
/// an `n`-dimensional ambient space. Absent entries are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HodgeNumberTable {
    n: u32,
    middle: BTreeMap<(u32, u32), u64>,
    top: BTreeMap<(u32, u32), u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTable {
    n: i64,
    #[serde(default)]
    middle: Vec<[i64; 3]>,
    #[serde(default)]
    top: Vec<[i64; 3]>,
}

impl HodgeNumberTable {
    /// Builds and validates a table. Every entry must satisfy
    /// `a, b <= n - 2` since `G` has dimension `n - 2`.
    pub fn new(
        n: u32,
        middle: impl IntoIterator<Item = ((u32, u32), u64)>,
        top: impl IntoIterator<Item = ((u32, u32), u64)>,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::DimensionInvariant(format!(
                "ambient dimension must be at least 2, got {n}"
            )));
        }
        let collect = |label: &str,
                       entries: &mut dyn Iterator<Item = ((u32, u32), u64)>|
         -> Result<BTreeMap<(u32, u32), u64>> {
            let mut map = BTreeMap::new();
            for ((a, b), h) in entries {
                if a > n - 2 || b > n - 2 {
                    return Err(Error::DimensionInvariant(format!(
                        "{label} entry h^{{{a},{b}}} has a type index above n-2 = {}",
                        n - 2
                    )));
                }
                if map.insert((a, b), h).is_some() {
                    return Err(Error::InconsistentHodgeTable(format!(
                        "duplicate {label} entry h^{{{a},{b}}}"
                    )));
                }
            }
            Ok(map)
        };
        let middle = collect("middle", &mut middle.into_iter())?;
        let top = collect("top", &mut top.into_iter())?;
        Ok(HodgeNumberTable { n, middle, top })
    }

    /// Parses the JSON form `{"n": 5, "middle": [[a, b, h], ...], "top": [...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawTable = serde_json::from_str(text)
            .map_err(|e| Error::InconsistentHodgeTable(format!("malformed table: {e}")))?;
        let n = u32::try_from(raw.n).map_err(|_| {
            Error::DimensionInvariant(format!(
                "ambient dimension must be at least 2, got {}",
                raw.n
            ))
        })?;
        let convert = |label: &str, rows: &[[i64; 3]]| -> Result<Vec<((u32, u32), u64)>> {
            rows.iter()
                .map(|&[a, b, h]| {
                    if a < 0 || b < 0 {
                        return Err(Error::DimensionInvariant(format!(
                            "{label} entry ({a}, {b}) has a negative type index"
                        )));
                    }
                    if h < 0 {
                        return Err(Error::InconsistentHodgeTable(format!(
                            "{label} entry h^{{{a},{b}}} = {h} is negative"
                        )));
                    }
                    let a = u32::try_from(a).unwrap_or(u32::MAX);
                    let b = u32::try_from(b).unwrap_or(u32::MAX);
                    Ok(((a, b), h as u64))
                })
                .collect()
        };
        let middle = convert("middle", &raw.middle)?;
        let top = convert("top", &raw.top)?;
        Self::new(n, middle, top)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `h^{a,b}(H^{n-2}(G))`, zero when absent or when an index is negative.
    pub fn middle(&self, a: i64, b: i64) -> u64 {
        lookup(&self.middle, a, b)
    }

    /// `h^{a,b}(H^n(G))`.
    pub fn top(&self, a: i64, b: i64) -> u64 {
        lookup(&self.top, a, b)
    }
}

fn lookup(map: &BTreeMap<(u32, u32), u64>, a: i64, b: i64) -> u64 {
    match (u32::try_from(a), u32::try_from(b)) {
        (Ok(a), Ok(b)) => map.get(&(a, b)).copied().unwrap_or(0),
        _ => 0,
    }
}

/// `dim Gr_F^{n-p} H_l` from the Hodge numbers of the exceptional divisor:
/// `h^{p,n-l-p}(H^{n-2}(G))` for `l >= 3`, and
/// `h^{p,n-p-2}(H^{n-2}(G)) - h^{n-p-1,p+1}(H^n(G))` for `l = 2`.
pub fn grf_from_resolution(t: &HodgeNumberTable, l: u32, p: u32) -> Result<u64> {
    let n = i64::from(t.n);
    let (l64, p64) = (i64::from(l), i64::from(p));
    if l < 2 {
        return Err(Error::InvalidParameter(format!(
            "weight degree l must be >= 2, got {l}"
        )));
    }
    if p64 > n - 2 {
        return Err(Error::InvalidParameter(format!(
            "p must satisfy 0 <= p <= n-2 = {}, got {p}",
            n - 2
        )));
    }
    if l >= 3 {
        return Ok(t.middle(p64, n - l64 - p64));
    }
    let main = t.middle(p64, n - p64 - 2);
    let correction = t.top(n - p64 - 1, p64 + 1);
    main.checked_sub(correction).ok_or_else(|| {
        Error::InconsistentHodgeTable(format!(
            "h^{{{p},{}}}(H^{{n-2}}) = {main} is smaller than h^{{{},{}}}(H^n) = {correction}",
            n - p64 - 2,
            n - p64 - 1,
            p64 + 1
        ))
    })
}

/// `(C((p+1)d - 1, n), C((p+1)d, n))`: bounds on the number of strictly
/// `p`-log-canonical singular points of a degree `d` hypersurface of `P^n`
/// (first: those of type `(p,p)..(p,n-3-p)`; second: all of them).
pub fn projective_bounds(n: u32, d: u32, p: u32) -> Result<(BigUint, BigUint)> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidParameter(format!(
            "projective bounds need n >= 1 and d >= 1, got n = {n}, d = {d}"
        )));
    }
    let top = i64::from(p + 1) * i64::from(d);
    Ok((
        binomial(top - 1, i64::from(n))?,
        binomial(top, i64::from(n))?,
    ))
}

/// Smallest twist `k` for which the surjectivity statement holds:
/// `(p+1)d - n - 1` when `l >= 2`, `(p+1)d - n` when `l = 1`.
pub fn surjectivity_threshold(n: u32, d: u32, p: u32, l: u32) -> Result<i64> {
    if l < 1 {
        return Err(Error::InvalidParameter(
            "weight degree l must be >= 1".into(),
        ));
    }
    let base = i64::from(p + 1) * i64::from(d) - i64::from(n);
    Ok(if l >= 2 { base - 1 } else { base })
}
