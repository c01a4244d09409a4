use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::uni::forward_owned;
use super::UniPoly;

/// Dense bivariate integer polynomial in `p` and `q`.
///
/// `coeffs[i][j]` is the coefficient of `p^i q^j`. The matrix is rectangular
/// and trimmed: it has no all-zero trailing row or column, so the zero
/// polynomial is the empty matrix and equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    coeffs: Vec<Vec<BigInt>>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_rows(vec![vec![c.into()]])
    }

    pub fn p() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `c * p^i * q^j`.
    pub fn monomial(c: impl Into<BigInt>, i: usize, j: usize) -> Self {
        let mut rows = vec![vec![BigInt::zero(); j + 1]; i + 1];
        rows[i][j] = c.into();
        Self::from_rows(rows)
    }

    /// Builds from a possibly ragged, untrimmed coefficient matrix.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let width = rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut coeffs: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|mut r| {
                r.resize(width, BigInt::zero());
                r
            })
            .collect();
        while coeffs.last().is_some_and(|r| r.iter().all(Zero::is_zero)) {
            coeffs.pop();
        }
        let used = (0..width)
            .rev()
            .find(|&j| coeffs.iter().any(|r| !r[j].is_zero()))
            .map_or(0, |j| j + 1);
        for row in &mut coeffs {
            row.truncate(used);
        }
        if used == 0 {
            coeffs.clear();
        }
        Self { coeffs }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.coeffs
    }

    /// Coefficient of `p^i q^j`, zero outside the stored matrix.
    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.coeffs
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest power of `p`; `None` for zero.
    pub fn degree_p(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Highest power of `q`; `None` for zero.
    pub fn degree_q(&self) -> Option<usize> {
        self.coeffs.first().and_then(|r| r.len().checked_sub(1))
    }

    /// Largest `i + j` over nonzero terms; `None` for zero.
    pub fn total_degree(&self) -> Option<usize> {
        self.terms().map(|(i, j, _)| i + j).max()
    }

    /// Nonzero terms as `(p-degree, q-degree, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> + '_ {
        self.coeffs.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }

    pub fn eval(&self, p: &BigInt, q: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, row| {
            let inner = row.iter().rev().fold(BigInt::zero(), |a, c| a * q + c);
            acc * p + inner
        })
    }

    pub fn eval_i64(&self, p: i64, q: i64) -> BigInt {
        self.eval(&BigInt::from(p), &BigInt::from(q))
    }

    /// Substitutes a value for `q`, leaving a polynomial in `p`.
    pub fn substitute_q(&self, q: &BigInt) -> UniPoly {
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|row| row.iter().rev().fold(BigInt::zero(), |a, c| a * q + c))
                .collect(),
        )
    }

    /// The same polynomial viewed in `p` alone, if it has no `q` dependence.
    pub fn to_univariate(&self) -> Option<UniPoly> {
        if self.degree_q().unwrap_or(0) > 0 {
            return None;
        }
        Some(UniPoly::from_coeffs(
            self.coeffs.iter().map(|r| r[0].clone()).collect(),
        ))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::constant(1);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    fn width(&self) -> usize {
        self.coeffs.first().map_or(0, Vec::len)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let rows = self.coeffs.len().max(rhs.coeffs.len());
        let cols = self.width().max(rhs.width());
        BiPoly::from_rows(
            (0..rows)
                .map(|i| {
                    (0..cols)
                        .map(|j| self.coeff(i, j) + rhs.coeff(i, j))
                        .collect()
                })
                .collect(),
        )
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        BiPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|r| r.iter().map(|c| -c).collect())
                .collect(),
        }
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let rows = self.coeffs.len() + rhs.coeffs.len() - 1;
        let cols = self.width() + rhs.width() - 1;
        let mut out = vec![vec![BigInt::zero(); cols]; rows];
        for (i1, r1) in self.coeffs.iter().enumerate() {
            for (j1, a) in r1.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                for (i2, r2) in rhs.coeffs.iter().enumerate() {
                    for (j2, b) in r2.iter().enumerate() {
                        out[i1 + i2][j1 + j2] += a * b;
                    }
                }
            }
        }
        BiPoly::from_rows(out)
    }
}

forward_owned!(BiPoly, Add::add, Sub::sub, Mul::mul);

impl Neg for BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        -&self
    }
}

/// Sum of monomials ordered by descending total degree, then descending
/// `p`-degree, e.g. `p^2*q^2 + 2*q^4`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms().collect();
        if terms.is_empty() {
            return f.write_str("0");
        }
        terms.sort_by_key(|t| std::cmp::Reverse((t.0 + t.1, t.0)));
        for (k, (i, j, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let mut factors = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                factors.push(mag.to_string());
            }
            for (var, e) in [("p", i), ("q", j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}
