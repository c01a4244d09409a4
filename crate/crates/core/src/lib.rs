//! Exact tools for the quartic equation `A^4 + h*B^4 = C^4 + h*D^4`.
//!
//! The crate is split in three layers:
//!
//! - [`poly`]: dense integer polynomials in one (`p`) and two (`p`, `q`)
//!   variables, homogenization and exact integer root finding.
//! - [`families`]: the registry of known parametric solution families,
//!   symbolic verification, instantiation, and inversion from a target `h`
//!   back to family parameters.
//! - [`search`]: brute-force and meet-in-the-middle searches for arbitrary
//!   `h`, plus the family-first solver and table builder.
//!
//! All integer quantities that leave the crate are [`ExactInt`]s, so nothing
//! here can silently wrap.

pub mod error;
pub mod families;
pub mod poly;
pub mod search;

pub use error::{Error, Result};
pub use families::builtin;
pub use families::{
    builtin_families, homogenize_family, match_h, match_h_in, verify_family, Arity, Family,
    FamilyMatch, QBound, Solution, Source,
};
pub use poly::{homogenize, integer_roots, BiPoly, UniPoly};
pub use search::{
    brute_force_search, find_solution, mitm_search, table_run, Engine, Method, SearchOptions,
    SearchReport,
};

/// Unbounded signed integer used for every exposed quantity.
pub type ExactInt = num_bigint::BigInt;
