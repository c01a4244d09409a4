//! Exhaustive searches for nontrivial solutions at a fixed `h`.
//!
//! Both searches return the canonical nontrivial solutions with
//! `0 <= C < A <= N` and `0 <= B < D <= N`, sorted ascending by
//! `(max component, A, D, C, B)`:
//!
//! - [`brute_force_search`] runs four nested loops and is the oracle.
//! - [`mitm_search`] rewrites the equation as `A^4 - C^4 = h (D^4 - B^4)` and
//!   joins the two sides through a sorted [`DiffIndex`], about `N^2` work.
//!
//! [`Engine`] owns the worker pool and caches the index so that table runs
//! and bound doubling do not rebuild it for every `h`.

mod brute;
mod index;
mod mitm;

use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::families::{builtin_families, canonical_quad, match_h, FamilyMatch, Solution, Source};
use crate::{Error, Result};

pub use index::{DiffIndex, MAX_INDEX_BOUND};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Method {
    /// Brute force for tiny bounds, meet-in-the-middle otherwise.
    #[default]
    Auto,
    Brute,
    Mitm,
}

/// Bounds below this are searched by brute force under [`Method::Auto`].
pub const AUTO_BRUTE_LIMIT: u32 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Worker threads; 0 lets rayon decide.
    pub threads: usize,
    /// Cap on difference-index entries, `N (N + 1) / 2`.
    pub max_entries: u64,
    /// Largest bound accepted by the brute-force search.
    pub brute_ceiling: u32,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            threads: 0,
            max_entries: 200_000_000,
            brute_ceiling: 200,
        }
    }
}

/// Outcome of searching one `h`.
#[derive(Clone, Debug)]
pub struct SearchReport {
    pub h: u64,
    pub bound: u32,
    pub solutions: Vec<Solution>,
    pub family_matches: Vec<FamilyMatch>,
    pub elapsed: Duration,
}

/// Canonical quadruple `[A, B, C, D]` as found by the searches.
pub(crate) type Quad = [u32; 4];

fn size_key(q: &Quad) -> (u32, u32, u32, u32, u32) {
    let [a, b, c, d] = *q;
    (a.max(b).max(c).max(d), a, d, c, b)
}

/// Sorts, dedups and re-verifies raw matches.
fn finish(h: u64, mut quads: Vec<Quad>) -> Vec<Solution> {
    quads.sort_unstable_by_key(size_key);
    quads.dedup();
    let h = BigInt::from(h);
    quads
        .into_iter()
        .map(|q| {
            let s = Solution::new(h.clone(), q.map(BigInt::from), Source::Search);
            assert!(s.satisfies(), "search emitted a non-solution: {s}");
            s
        })
        .collect()
}

/// Orients a raw match `A^4 - C^4 = h (D^4 - B^4)` with `C < A`, `B < D`.
fn canonical(h: u64, q: Quad) -> Option<Quad> {
    canonical_quad(h == 1, q)
}

fn check_h(h: u64) -> Result<()> {
    if h == 0 {
        return Err(Error::NonPositiveH(h.to_string()));
    }
    Ok(())
}

fn check_bound(bound: u32) -> Result<()> {
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    Ok(())
}

pub struct Engine {
    opts: SearchOptions,
    pool: rayon::ThreadPool,
    index: Option<Arc<DiffIndex>>,
}

impl Engine {
    pub fn new(opts: SearchOptions) -> Result<Self> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        Ok(Self {
            opts,
            pool,
            index: None,
        })
    }

    pub fn options(&self) -> &SearchOptions {
        &self.opts
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }

    pub fn search(&mut self, h: u64, bound: u32, method: Method) -> Result<Vec<Solution>> {
        match method {
            Method::Brute => self.brute(h, bound),
            Method::Mitm => self.mitm(h, bound),
            Method::Auto if bound <= AUTO_BRUTE_LIMIT => self.brute(h, bound),
            Method::Auto => self.mitm(h, bound),
        }
    }

    pub fn brute(&self, h: u64, bound: u32) -> Result<Vec<Solution>> {
        check_h(h)?;
        check_bound(bound)?;
        if bound > self.opts.brute_ceiling {
            return Err(Error::BoundTooLarge {
                bound: bound.into(),
                ceiling: self.opts.brute_ceiling.into(),
                what: "brute-force",
            });
        }
        Ok(finish(h, brute::search(h, bound)))
    }

    pub fn mitm(&mut self, h: u64, bound: u32) -> Result<Vec<Solution>> {
        check_h(h)?;
        check_bound(bound)?;
        self.check_index_bound(bound)?;
        let index = self.index_for(bound);
        let quads = self.pool.install(|| mitm::probe(h, bound, &index));
        Ok(finish(h, quads))
    }

    fn check_index_bound(&self, bound: u32) -> Result<()> {
        if bound > MAX_INDEX_BOUND {
            return Err(Error::BoundTooLarge {
                bound: bound.into(),
                ceiling: MAX_INDEX_BOUND.into(),
                what: "64-bit difference key",
            });
        }
        let entries = index::entry_count(bound);
        if entries > self.opts.max_entries {
            return Err(Error::BoundTooLarge {
                bound: bound.into(),
                ceiling: max_bound_for_entries(self.opts.max_entries).into(),
                what: "index memory",
            });
        }
        Ok(())
    }

    /// Reuses the cached index when it covers `bound`.
    fn index_for(&mut self, bound: u32) -> Arc<DiffIndex> {
        match &self.index {
            Some(idx) if idx.bound() >= bound => Arc::clone(idx),
            _ => {
                let idx = Arc::new(self.pool.install(|| DiffIndex::build(bound)));
                self.index = Some(Arc::clone(&idx));
                idx
            }
        }
    }

    /// Family-first solver.
    ///
    /// If some builtin family yields a nontrivial instance for `h`, returns the
    /// smallest one (ties go to family order, then smallest `q`, smallest
    /// `|p|`, positive `p` first). Otherwise runs [`Engine::mitm`] at
    /// `initial_bound`, doubling up to `max_bound`, and returns the first
    /// solution of the first bound that has any.
    pub fn find_solution(
        &mut self,
        h: u64,
        initial_bound: u32,
        max_bound: u32,
    ) -> Result<Option<Solution>> {
        check_h(h)?;
        let matches = match_h(&BigInt::from(h));
        self.find_with_matches(h, &matches, initial_bound, max_bound)
    }

    fn find_with_matches(
        &mut self,
        h: u64,
        matches: &[FamilyMatch],
        initial_bound: u32,
        max_bound: u32,
    ) -> Result<Option<Solution>> {
        check_bound(initial_bound)?;
        if initial_bound > max_bound {
            return Err(Error::InvalidArgument(format!(
                "initial bound {initial_bound} exceeds max bound {max_bound}"
            )));
        }
        if let Some(s) = best_family_instance(matches) {
            return Ok(Some(s));
        }
        self.check_index_bound(max_bound)?;
        let mut bound = initial_bound;
        loop {
            if let Some(s) = self.mitm(h, bound)?.into_iter().next() {
                return Ok(Some(s));
            }
            if bound >= max_bound {
                return Ok(None);
            }
            bound = bound.saturating_mul(2).min(max_bound);
        }
    }

    /// One report per `h` in `h_lo..=h_hi`, each from
    /// `find_solution(h, bound, bound)`.
    pub fn table(&mut self, h_lo: u64, h_hi: u64, bound: u32) -> Result<Vec<SearchReport>> {
        check_h(h_lo)?;
        if h_lo > h_hi {
            return Err(Error::InvalidArgument(format!(
                "empty range {h_lo}..={h_hi}"
            )));
        }
        (h_lo..=h_hi).map(|h| self.report(h, bound)).collect()
    }

    pub fn report(&mut self, h: u64, bound: u32) -> Result<SearchReport> {
        check_h(h)?;
        let start = Instant::now();
        let family_matches = match_h(&BigInt::from(h));
        let found = self.find_with_matches(h, &family_matches, bound, bound)?;
        Ok(SearchReport {
            h,
            bound,
            solutions: found.into_iter().collect(),
            family_matches,
            elapsed: start.elapsed(),
        })
    }
}

fn max_bound_for_entries(max_entries: u64) -> u32 {
    let mut n = ((2 * max_entries) as f64).sqrt() as u64;
    while n > 0 && n * (n + 1) / 2 > max_entries {
        n -= 1;
    }
    u32::try_from(n).unwrap_or(u32::MAX)
}

fn best_family_instance(matches: &[FamilyMatch]) -> Option<Solution> {
    let order = |id: &str| builtin_families().iter().position(|f| f.id == id);
    matches
        .iter()
        .filter_map(|m| {
            let s = m.instantiate()?;
            if !s.is_nontrivial() {
                return None;
            }
            Some((s.canonicalize().ok()?, m))
        })
        .min_by(|(s1, m1), (s2, m2)| {
            s1.cmp_by_size(s2)
                .then_with(|| order(&m1.family).cmp(&order(&m2.family)))
                .then_with(|| m1.param_key().cmp(&m2.param_key()))
        })
        .map(|(s, _)| s)
}

fn default_engine() -> Result<Engine> {
    Engine::new(SearchOptions::default())
}

/// Four nested loops; bounds above 200 are rejected.
pub fn brute_force_search(h: u64, bound: u32) -> Result<Vec<Solution>> {
    default_engine()?.brute(h, bound)
}

pub fn mitm_search(h: u64, bound: u32) -> Result<Vec<Solution>> {
    default_engine()?.mitm(h, bound)
}

pub fn find_solution(h: u64, initial_bound: u32, max_bound: u32) -> Result<Option<Solution>> {
    default_engine()?.find_solution(h, initial_bound, max_bound)
}

pub fn table_run(h_lo: u64, h_hi: u64, bound: u32) -> Result<Vec<SearchReport>> {
    default_engine()?.table(h_lo, h_hi, bound)
}
