//! Exact phase-one simplex: decides whether `{x >= 0 : A x = b}` is nonempty.

use num_traits::{Signed, Zero};

use crate::rational::Rational;

/// `rows[i]` holds row `i` of `A`; Bland's rule guarantees termination.
pub(crate) fn feasible(rows: &[Vec<Rational>], rhs: &[Rational]) -> bool {
    let m = rows.len();
    if m == 0 {
        return true;
    }
    let k = rows[0].len();
    let width = k + m + 1;
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (i, (row, b)) in rows.iter().zip(rhs).enumerate() {
        let flip = b.is_negative();
        let mut t = vec![Rational::zero(); width];
        for (j, a) in row.iter().enumerate() {
            t[j] = if flip { -a } else { a.clone() };
        }
        t[k + i] = Rational::from_integer(1.into());
        t[width - 1] = if flip { -b } else { b.clone() };
        tab.push(t);
    }
    let mut basis: Vec<usize> = (k..k + m).collect();
    let mut obj = vec![Rational::zero(); width];
    for (j, o) in obj.iter_mut().enumerate() {
        if j < k || j == width - 1 {
            *o = -tab.iter().map(|t| &t[j]).sum::<Rational>();
        }
    }
    while let Some(col) = (0..width - 1).find(|&j| obj[j].is_negative()) {
        let mut pivot: Option<(usize, Rational)> = None;
        for (i, t) in tab.iter().enumerate() {
            if !t[col].is_positive() {
                continue;
            }
            let ratio = &t[width - 1] / &t[col];
            let better = match &pivot {
                None => true,
                Some((pi, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*pi]),
            };
            if better {
                pivot = Some((i, ratio));
            }
        }
        // unbounded direction cannot occur in phase one (objective >= 0)
        let (row, _) = pivot.expect("phase-one objective is bounded below");
        let p = tab[row][col].clone();
        for v in tab[row].iter_mut() {
            *v /= &p;
        }
        let pivot_row = tab[row].clone();
        for (i, t) in tab.iter_mut().enumerate() {
            if i == row || t[col].is_zero() {
                continue;
            }
            let f = t[col].clone();
            for (v, pv) in t.iter_mut().zip(&pivot_row) {
                *v -= &f * pv;
            }
        }
        let f = obj[col].clone();
        for (v, pv) in obj.iter_mut().zip(&pivot_row) {
            *v -= &f * pv;
        }
        basis[row] = col;
    }
    obj[width - 1].is_zero()
}
