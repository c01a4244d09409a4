//! Exact dense polynomial arithmetic over the integers.

mod bi;
mod roots;
mod uni;

pub use bi::BiPoly;
pub use roots::{integer_roots, root_radius};
pub use uni::UniPoly;

use num_bigint::BigInt;

use crate::{Error, Result};

/// `q^d * f(p/q)`: every monomial of the result has total degree exactly `d`,
/// and substituting `q = 1` gives back `f`.
pub fn homogenize(f: &UniPoly, d: usize) -> Result<BiPoly> {
    let Some(degree) = f.degree() else {
        return Ok(BiPoly::zero());
    };
    if d < degree {
        return Err(Error::DegreeTooSmall {
            degree,
            requested: d,
        });
    }
    let rows = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut row = vec![BigInt::default(); d - i + 1];
            row[d - i] = c.clone();
            row
        })
        .collect();
    Ok(BiPoly::from_rows(rows))
}
