use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{builtin_families, Arity, Family, Solution};
use crate::poly::integer_roots;

/// Parameters of a family that produce a given `h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyMatch {
    pub family: String,
    pub p: BigInt,
    /// Always 1 for one-parameter families.
    pub q: BigInt,
}

impl FamilyMatch {
    fn new(family: &Family, p: BigInt, q: BigInt) -> Self {
        Self {
            family: family.id.clone(),
            p,
            q,
        }
    }

    /// Instantiates against the builtin registry.
    pub fn instantiate(&self) -> Option<Solution> {
        let f = super::builtin(&self.family)?;
        f.instantiate(&self.p, &self.q).ok()
    }

    /// Simplicity order on parameters: smallest `q`, then smallest `|p|`,
    /// then `p >= 0` before `p < 0`.
    pub(crate) fn param_key(&self) -> (BigInt, BigInt, bool) {
        (self.q.clone(), self.p.abs(), self.p.is_negative())
    }
}

/// All `(family, p, q)` over the builtin families with `h(p, q) = h`.
pub fn match_h(h: &BigInt) -> Vec<FamilyMatch> {
    match_h_in(builtin_families(), h)
}

/// [`match_h`] over an arbitrary family list, in list order, then by `p`,
/// then by `q`. `q` ranges over `1..=max_q` from the family's [`QBound`];
/// two-parameter families without one are skipped.
///
/// [`QBound`]: super::QBound
pub fn match_h_in(families: &[Family], h: &BigInt) -> Vec<FamilyMatch> {
    let mut out = Vec::new();
    if !h.is_positive() {
        return out;
    }
    for f in families {
        let mut found = Vec::new();
        match f.arity {
            Arity::One => {
                let Some(poly) = f.h.to_univariate() else {
                    continue;
                };
                // a constant h polynomial cannot be inverted
                if let Ok(roots) = integer_roots(&poly, h) {
                    found.extend(
                        roots
                            .into_iter()
                            .map(|p| FamilyMatch::new(f, p, BigInt::one())),
                    );
                }
            }
            Arity::Two => {
                let Some(bound) = f.q_bound else {
                    continue;
                };
                let max_q = bound.max_q(h);
                let mut q = BigInt::one();
                while q <= max_q {
                    let poly = f.h.substitute_q(&q);
                    if let Ok(roots) = integer_roots(&poly, h) {
                        found.extend(roots.into_iter().map(|p| FamilyMatch::new(f, p, q.clone())));
                    }
                    q += 1u32;
                }
            }
        }
        found.sort_by(|x, y| (&x.p, &x.q).cmp(&(&y.p, &y.q)));
        out.extend(found);
    }
    out
}
