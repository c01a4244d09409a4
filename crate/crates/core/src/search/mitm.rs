use rayon::prelude::*;

use super::index::{fourth, DiffIndex};
use super::{canonical, Quad};

/// Probes `A^4 - C^4` for every `0 <= C < A <= bound` against
/// `h (D^4 - B^4)` in the shared index. Rows of `A` are spread over the
/// current rayon pool; the output order follows `A` and is then sorted by
/// the caller, so it does not depend on the worker count.
pub(super) fn probe(h: u64, bound: u32, index: &DiffIndex) -> Vec<Quad> {
    debug_assert!(index.bound() >= bound);
    (1..=bound)
        .into_par_iter()
        .flat_map_iter(|a| probe_row(h, bound, index, a))
        .collect()
}

fn probe_row(h: u64, bound: u32, index: &DiffIndex, a: u32) -> Vec<Quad> {
    let a4 = fourth(a);
    let mut out = Vec::new();
    for c in 0..a {
        let diff = a4 - fourth(c);
        if !diff.is_multiple_of(h) {
            continue;
        }
        for &(d, b) in index.lookup(diff / h) {
            if d > bound {
                continue;
            }
            if let Some(q) = canonical(h, [a, b, c, d]) {
                out.push(q);
            }
        }
    }
    out
}
