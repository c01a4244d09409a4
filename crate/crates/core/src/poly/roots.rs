use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::UniPoly;
use crate::{Error, Result};

/// Integer `R` such that every complex root `z` of `f` has `|z| <= R`.
///
/// Fujiwara's bound `2 * max_i |a_{n-i} / a_n|^(1/i)`, with each root
/// rounded up to an integer. Constants (no roots) give zero.
pub fn root_radius(f: &UniPoly) -> BigInt {
    let Some(n) = f.degree() else {
        return BigInt::zero();
    };
    let lead = f.coeffs()[n].abs();
    let mut t_max = BigInt::zero();
    for i in 1..=n {
        let a = f.coeffs()[n - i].abs();
        if a.is_zero() {
            continue;
        }
        let t = ceil_root_of_ratio(&a, &lead, i as u32);
        if t > t_max {
            t_max = t;
        }
    }
    t_max * 2
}

/// Smallest integer `t >= 0` with `t^k * den >= num`.
fn ceil_root_of_ratio(num: &BigInt, den: &BigInt, k: u32) -> BigInt {
    let ratio = (num + den - 1u32) / den;
    let mut t = ratio.nth_root(k);
    while &(t.pow(k) * den) < num {
        t += 1u32;
    }
    t
}

/// All integers `r` with `f(r) = target`, ascending and without repeats.
///
/// Every root lies in `[-R, R]` with `R` the root radius of `f - target`.
/// That range is cut into pieces on which `f` is strictly monotone (see
/// [`monotone_breaks`]) and each piece is bisected, so the cost is
/// logarithmic in `R` for any fixed degree.
pub fn integer_roots(f: &UniPoly, target: &BigInt) -> Result<Vec<BigInt>> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let shifted = f - &UniPoly::constant(target.clone());
    let radius = root_radius(&shifted);
    let lo = -&radius;
    let breaks = monotone_breaks(&shifted, &lo, &radius);

    let mut roots = Vec::new();
    for (s, e) in segments(&breaks, &lo, &radius) {
        if let Some(r) = bisect(&shifted, s, e) {
            roots.push(r);
        }
    }
    Ok(roots)
}

/// Sorted integers `b_0 < b_1 < ...` in `[lo, hi]` such that `f` is strictly
/// monotone on each real interval `[lo, b_0]`, `[b_0 + 1, b_1]`, ...,
/// `[b_last + 1, hi]`.
///
/// Every real root of `f'` in range lies in some `[b_i, b_i + 1)`. The breaks
/// of `f'` are found recursively; on each of its pieces `f'` is monotone and
/// has at most one root, whose floor is bisected.
pub fn monotone_breaks(f: &UniPoly, lo: &BigInt, hi: &BigInt) -> Vec<BigInt> {
    if f.degree().unwrap_or(0) <= 1 {
        return Vec::new();
    }
    let df = f.derivative();
    let inner = monotone_breaks(&df, lo, hi);
    let mut breaks = inner.clone();
    for (s, e) in segments(&inner, lo, hi) {
        if let Some(k) = floor_of_root(&df, &s, &e) {
            breaks.push(k);
        }
    }
    breaks.sort();
    breaks.dedup();
    breaks
}

fn segments(breaks: &[BigInt], lo: &BigInt, hi: &BigInt) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::with_capacity(breaks.len() + 1);
    let mut start = lo.clone();
    for b in breaks.iter().chain(std::iter::once(hi)) {
        if &start <= b {
            out.push((start, b.clone()));
        }
        start = b + 1u32;
    }
    out
}

/// Floor of the root of `g` in `[s, e]`, `g` strictly monotone there.
fn floor_of_root(g: &UniPoly, s: &BigInt, e: &BigInt) -> Option<BigInt> {
    let sign_s = g.eval(s).signum();
    if sign_s.is_zero() {
        return Some(s.clone());
    }
    let sign_e = g.eval(e).signum();
    if sign_e.is_zero() {
        return Some(e.clone());
    }
    if sign_s == sign_e {
        return None;
    }
    let (mut lo, mut hi) = (s.clone(), e.clone());
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1u32;
        let sign = g.eval(&mid).signum();
        if sign.is_zero() {
            return Some(mid);
        }
        if sign == sign_s {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(lo)
}

/// Finds the zero of a polynomial strictly monotone on `[lo, hi]`, if any.
fn bisect(g: &UniPoly, mut lo: BigInt, mut hi: BigInt) -> Option<BigInt> {
    let increasing = g.eval(&hi) > g.eval(&lo);
    while lo <= hi {
        let mid: BigInt = (&lo + &hi) >> 1u32;
        let v = g.eval(&mid);
        let ord = if increasing {
            v.cmp(&BigInt::zero())
        } else {
            BigInt::zero().cmp(&v)
        };
        match ord {
            Ordering::Equal => return Some(mid),
            Ordering::Less => lo = mid + BigInt::one(),
            Ordering::Greater => hi = mid - BigInt::one(),
        }
    }
    None
}
