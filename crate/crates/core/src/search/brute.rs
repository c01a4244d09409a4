use super::index::fourth;
use super::{canonical, Quad};

/// Every nontrivial match with `0 <= C < A <= N`, `0 <= B < D <= N`, oriented
/// but unsorted. With `h < 2^64` and `N^4 < 2^64` both sides stay below
/// `(h + 1) N^4 < 2^128`.
pub(super) fn search(h: u64, bound: u32) -> Vec<Quad> {
    let h = u128::from(h);
    let pow: Vec<u128> = (0..=bound).map(|x| u128::from(fourth(x))).collect();
    let mut out = Vec::new();
    for a in 1..=bound {
        for c in 0..a {
            for d in 1..=bound {
                let rhs = pow[c as usize] + h * pow[d as usize];
                for b in 0..d {
                    let lhs = pow[a as usize] + h * pow[b as usize];
                    if lhs > rhs {
                        break;
                    }
                    if lhs == rhs {
                        if let Some(q) = canonical(h as u64, [a, b, c, d]) {
                            out.push(q);
                        }
                    }
                }
            }
        }
    }
    out
}
