//! Parametric solution families of `A^4 + h*B^4 = C^4 + h*D^4`.
//!
//! A [`Family`] is five polynomials `(h, A, B, C, D)` in `p` (and possibly
//! `q`) for which the equation holds identically. [`builtin_families`]
//! returns the fifteen known ones:
//!
//! | id | h | source |
//! |----|---|--------|
//! | F1..F6 | `p^2+2`, `p(p^2+4)`, `8p(p^2+1)`, `p^4-1`, `2p^4-2`, `p^4+3p^2+1` | tabulated one-parameter families |
//! | FG | `2p^3(p^2-1)` | Gerardin |
//! | FP | `p^2-3` | Piezas |
//! | FT | `p^4+q^4` | Tomita |
//! | H1..H6 | `q^4 h(p/q)` for F1..F6 | homogenization |

mod matching;
mod solution;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::One;

use crate::poly::{homogenize, BiPoly, UniPoly};
use crate::{Error, Result};

pub use matching::{match_h, match_h_in, FamilyMatch};
pub(crate) use solution::canonical_quad;
pub use solution::{Solution, Source};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Arity {
    One,
    Two,
}

impl Arity {
    pub fn as_u8(self) -> u8 {
        match self {
            Arity::One => 1,
            Arity::Two => 2,
        }
    }
}

/// Ceiling on `q` when inverting a two-parameter family:
/// `q <= floor((h / divisor)^(1 / index)) + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QBound {
    pub index: u32,
    pub divisor: u32,
}

impl QBound {
    pub const fn new(index: u32, divisor: u32) -> Self {
        Self { index, divisor }
    }

    pub fn max_q(&self, h: &BigInt) -> BigInt {
        (h / self.divisor).nth_root(self.index) + 1u32
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub id: String,
    pub arity: Arity,
    pub h: BiPoly,
    pub a: BiPoly,
    pub b: BiPoly,
    pub c: BiPoly,
    pub d: BiPoly,
    pub provenance: String,
    /// Needed by [`match_h`] for two-parameter families.
    pub q_bound: Option<QBound>,
}

impl Family {
    /// One-parameter family from polynomials in `p`.
    pub fn univariate(id: &str, [h, a, b, c, d]: [UniPoly; 5], provenance: &str) -> Self {
        Self {
            id: id.to_string(),
            arity: Arity::One,
            h: h.into(),
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
            provenance: provenance.to_string(),
            q_bound: None,
        }
    }

    pub fn polys(&self) -> [&BiPoly; 5] {
        [&self.h, &self.a, &self.b, &self.c, &self.d]
    }

    /// `A^4 + h*B^4 - C^4 - h*D^4`, fully expanded.
    pub fn residual(&self) -> BiPoly {
        let lhs = &self.a.pow(4) + &(&self.h * &self.b.pow(4));
        let rhs = &self.c.pow(4) + &(&self.h * &self.d.pow(4));
        &lhs - &rhs
    }

    /// Evaluates the family at `(p, q)`. One-parameter families require `q = 1`.
    ///
    /// Degenerate parameters (h <= 0, trivial quadruples) are allowed; the
    /// identity holds regardless.
    pub fn instantiate(&self, p: &BigInt, q: &BigInt) -> Result<Solution> {
        let q_tag = match self.arity {
            Arity::One if !q.is_one() => {
                return Err(Error::ArityMismatch {
                    family: self.id.clone(),
                    arity: 1,
                    reason: "q must be 1",
                })
            }
            Arity::One => None,
            Arity::Two => Some(q.clone()),
        };
        let [h, a, b, c, d] = self.polys().map(|f| f.eval(p, q));
        Ok(Solution::new(
            h,
            [a, b, c, d],
            Source::Family {
                id: self.id.clone(),
                p: p.clone(),
                q: q_tag,
            },
        ))
    }

    pub fn instantiate_i64(&self, p: i64, q: i64) -> Result<Solution> {
        self.instantiate(&BigInt::from(p), &BigInt::from(q))
    }
}

/// Residual of the family; the family is valid iff this is zero.
pub fn verify_family(f: &Family) -> BiPoly {
    f.residual()
}

/// Two-parameter family with `h' = q^4 h(p/q)`, `A' = q^(k+1) A(p/q)`,
/// `B' = q^k B(p/q)`, `C' = q^(k+1) C(p/q)`, `D' = q^k D(p/q)`, where
/// `k = max(deg A - 1, deg B, deg C - 1, deg D)` is the least exponent that
/// clears every denominator.
pub fn homogenize_family(f: &Family) -> Result<Family> {
    if f.arity != Arity::One {
        return Err(Error::ArityMismatch {
            family: f.id.clone(),
            arity: f.arity.as_u8(),
            reason: "only one-parameter families can be homogenized",
        });
    }
    let uni = |g: &BiPoly| {
        g.to_univariate()
            .expect("one-parameter family depends on q")
    };
    let [h, a, b, c, d] = f.polys().map(uni);
    let h_degree = h.degree().unwrap_or(0);
    if h_degree > 4 {
        return Err(Error::DegreeTooLarge {
            family: f.id.clone(),
            degree: h_degree,
        });
    }
    let deg = |g: &UniPoly, shift: i64| g.degree().map(|n| n as i64 - shift);
    let k = [deg(&a, 1), deg(&b, 0), deg(&c, 1), deg(&d, 0)]
        .into_iter()
        .flatten()
        .max()
        .unwrap_or(0)
        .max(0) as usize;

    let id = match f.id.strip_prefix('F') {
        Some(rest) if rest.chars().all(|ch| ch.is_ascii_digit()) => format!("H{rest}"),
        _ => format!("H{}", f.id),
    };
    Ok(Family {
        id,
        arity: Arity::Two,
        h: homogenize(&h, 4)?,
        a: homogenize(&a, k + 1)?,
        b: homogenize(&b, k)?,
        c: homogenize(&c, k + 1)?,
        d: homogenize(&d, k)?,
        provenance: format!("homogenization of {}", f.id),
        q_bound: None,
    })
}

/// The fifteen known families, in id order F1..F6, FG, FP, FT, H1..H6.
pub fn builtin_families() -> &'static [Family] {
    static FAMILIES: OnceLock<Vec<Family>> = OnceLock::new();
    FAMILIES.get_or_init(build_builtins)
}

fn u(coeffs: &[i64]) -> UniPoly {
    UniPoly::from_i64s(coeffs)
}

fn build_builtins() -> Vec<Family> {
    let tabulated = [
        // h, A, B, C, D as coefficient lists, lowest degree first
        [
            u(&[2, 0, 1]),
            u(&[1, 2, 0, 1]),
            u(&[1, -1, 1]),
            u(&[-1, 2, 0, 1]),
            u(&[1, 1, 1]),
        ],
        [u(&[0, 4, 0, 1]), u(&[-2, 1]), u(&[2]), u(&[2, 1]), u(&[])],
        [u(&[0, 8, 0, 8]), u(&[-1, 1]), u(&[1]), u(&[1, 1]), u(&[])],
        [u(&[-1, 0, 0, 0, 1]), u(&[0, 1]), u(&[]), u(&[1]), u(&[1])],
        [
            u(&[-2, 0, 0, 0, 2]),
            u(&[-1, 2, 1]),
            u(&[-1, 1]),
            u(&[-1, -2, 1]),
            u(&[1, 1]),
        ],
        [
            u(&[1, 0, 3, 0, 1]),
            u(&[1, 1, 1]),
            u(&[-1, 1]),
            u(&[1, -1, 1]),
            u(&[1, 1]),
        ],
    ];
    let mut out: Vec<Family> = tabulated
        .into_iter()
        .enumerate()
        .map(|(i, polys)| {
            Family::univariate(
                &format!("F{}", i + 1),
                polys,
                &format!("tabulated one-parameter family, row {}", i + 1),
            )
        })
        .collect();

    out.push(Family::univariate(
        "FG",
        [
            u(&[0, 0, 0, -2, 0, 2]),
            u(&[0, 0, 2]),
            u(&[-1, 1]),
            u(&[0, 2]),
            u(&[1, 1]),
        ],
        "Gerardin",
    ));
    out.push(Family::univariate(
        "FP",
        [
            u(&[-3, 0, 1]),
            u(&[-2, -3, 2, 1]),
            u(&[-2, -1, 0, 1]),
            u(&[2, -3, -2, 1]),
            u(&[2, -1, 0, 1]),
        ],
        "Piezas",
    ));

    let (p, q) = (BiPoly::p(), BiPoly::q());
    out.push(Family {
        id: "FT".to_string(),
        arity: Arity::Two,
        h: &p.pow(4) + &q.pow(4),
        a: p.pow(2),
        b: q.clone(),
        c: q.pow(2),
        d: p,
        provenance: "Tomita".to_string(),
        q_bound: Some(QBound::new(4, 1)),
    });

    // h >= 2q^4; pq(p^2+4q^2), 8pq(p^2+q^2), p^4-q^4 all >= 4q^3; h >= q^4
    let bounds = [
        QBound::new(4, 2),
        QBound::new(3, 1),
        QBound::new(3, 1),
        QBound::new(3, 1),
        QBound::new(3, 1),
        QBound::new(4, 1),
    ];
    let homogenized: Vec<Family> = out[..6]
        .iter()
        .zip(bounds)
        .map(|(f, bound)| {
            let mut h = homogenize_family(f).expect("tabulated families have deg h <= 4");
            h.q_bound = Some(bound);
            h
        })
        .collect();
    out.extend(homogenized);
    out
}

/// Looks up a builtin family by id.
pub fn builtin(id: &str) -> Option<&'static Family> {
    builtin_families().iter().find(|f| f.id == id)
}
