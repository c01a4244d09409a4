use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::{Error, Result};

/// Where a solution came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    /// Instance of a parametric family. `q` is `None` for one-parameter families.
    Family {
        id: String,
        p: BigInt,
        q: Option<BigInt>,
    },
    Search,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Family { id, p, q: None } => write!(f, "{id}(p={p})"),
            Source::Family { id, p, q: Some(q) } => write!(f, "{id}(p={p},q={q})"),
            Source::Search => f.write_str("search"),
        }
    }
}

/// An integer quadruple `(A, B, C, D)` for a given `h`.
///
/// Constructing one does not check the equation; see [`Solution::satisfies`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Solution {
    pub h: BigInt,
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
    pub source: Source,
}

impl Solution {
    pub fn new(h: BigInt, [a, b, c, d]: [BigInt; 4], source: Source) -> Self {
        Self {
            h,
            a,
            b,
            c,
            d,
            source,
        }
    }

    pub fn from_i64s(h: i64, abcd: [i64; 4], source: Source) -> Self {
        Self::new(BigInt::from(h), abcd.map(BigInt::from), source)
    }

    pub fn quad(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Left and right sides `A^4 + h*B^4` and `C^4 + h*D^4`.
    pub fn sides(&self) -> (BigInt, BigInt) {
        (
            self.a.pow(4) + &self.h * self.b.pow(4),
            self.c.pow(4) + &self.h * self.d.pow(4),
        )
    }

    pub fn satisfies(&self) -> bool {
        let (l, r) = self.sides();
        l == r
    }

    /// False when both sides are rearrangements of each other: `|A| = |C|`
    /// or, at `h = 1`, `(|A|, |B|) = (|D|, |C|)`.
    ///
    /// For `h >= 1` the equation forces `|A| = |C|` exactly when `|B| = |D|`.
    pub fn is_nontrivial(&self) -> bool {
        let [a, b, c, d] = self.quad().map(BigInt::abs);
        if a == c {
            return false;
        }
        !(self.h.is_one() && a == d && b == c)
    }

    /// Representative with nonnegative entries, `A > C` and `D > B`; at
    /// `h = 1` the lexicographically largest such form over the symmetries
    /// of `A^4 + B^4 = C^4 + D^4`.
    pub fn canonicalize(&self) -> Result<Solution> {
        if self.h < BigInt::one() {
            return Err(Error::NonPositiveH(self.h.to_string()));
        }
        if !self.satisfies() {
            return Err(Error::NotASolution);
        }
        let abs = self.quad().map(BigInt::abs);
        let quad = canonical_quad(self.h.is_one(), abs).ok_or(Error::TrivialSolution)?;
        Ok(Solution::new(self.h.clone(), quad, self.source.clone()))
    }

    /// Ascending `(max component, A, D, C, B)`.
    pub fn cmp_by_size(&self, other: &Self) -> Ordering {
        let key = |s: &Solution| {
            let max = s.quad().into_iter().max().cloned();
            (max, s.a.clone(), s.d.clone(), s.c.clone(), s.b.clone())
        };
        key(self).cmp(&key(other))
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "h={} (A,B,C,D)=({},{},{},{}) [{}]",
            self.h, self.a, self.b, self.c, self.d, self.source
        )
    }
}

/// Canonical orientation of a nonnegative quadruple; `None` if trivial.
///
/// Assumes the quadruple solves the equation for some `h >= 1`, so that after
/// orienting `A > C` the relation `D > B` follows.
pub(crate) fn canonical_quad<T: Ord + Clone>(h_is_one: bool, q: [T; 4]) -> Option<[T; 4]> {
    let [a, b, c, d] = q;
    let [a, b, c, d] = match a.cmp(&c) {
        Ordering::Equal => return None,
        Ordering::Less => [c, d, a, b],
        Ordering::Greater => [a, b, c, d],
    };
    if !h_is_one {
        return Some([a, b, c, d]);
    }
    if a == d && b == c {
        return None;
    }
    let sides = [(a.clone(), b.clone()), (c, d)];
    let mut best: Option<[T; 4]> = None;
    for (first, second) in [(0, 1), (1, 0)] {
        let (s1, s2) = (&sides[first], &sides[second]);
        for (x, y) in [(&s1.0, &s1.1), (&s1.1, &s1.0)] {
            for (z, w) in [(&s2.0, &s2.1), (&s2.1, &s2.0)] {
                if x > z && w > y {
                    let form = [x.clone(), y.clone(), z.clone(), w.clone()];
                    if best.as_ref().is_none_or(|b| &form > b) {
                        best = Some(form);
                    }
                }
            }
        }
    }
    best
}
