use rayon::prelude::*;

/// Sorted table of every difference `x^4 - y^4` with `0 <= y < x <= bound`.
///
/// Both sides of `A^4 - C^4 = h (D^4 - B^4)` range over this same set, so a
/// single table serves as the key side for every `h` and every bound up to
/// its own. Stored as parallel arrays, sorted by `(value, x, y)`.
#[derive(Clone, Debug)]
pub struct DiffIndex {
    bound: u32,
    values: Vec<u64>,
    pairs: Vec<(u32, u32)>,
}

/// Largest bound whose fourth powers fit in `u64`.
pub const MAX_INDEX_BOUND: u32 = 65_535;

pub(crate) fn fourth(x: u32) -> u64 {
    let x = u64::from(x);
    x * x * x * x
}

pub(crate) fn entry_count(bound: u32) -> u64 {
    let n = u64::from(bound);
    n * (n + 1) / 2
}

impl DiffIndex {
    /// Builds the table. Runs on the current rayon pool; the result is
    /// independent of the number of workers.
    ///
    /// Panics if `bound > MAX_INDEX_BOUND`; callers validate first.
    pub fn build(bound: u32) -> Self {
        assert!(bound <= MAX_INDEX_BOUND, "bound {bound} overflows u64 keys");
        let mut entries: Vec<(u64, u32, u32)> = (1..=bound)
            .into_par_iter()
            .flat_map_iter(|x| {
                let x4 = fourth(x);
                (0..x).map(move |y| (x4 - fourth(y), x, y))
            })
            .collect();
        entries.par_sort_unstable();
        let (values, pairs) = entries.into_iter().map(|(v, x, y)| (v, (x, y))).unzip();
        Self {
            bound,
            values,
            pairs,
        }
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// All `(x, y)` with `x^4 - y^4 = value`, ascending.
    pub fn lookup(&self, value: u64) -> &[(u32, u32)] {
        let start = self.values.partition_point(|&v| v < value);
        let len = self.values[start..].partition_point(|&v| v == value);
        &self.pairs[start..start + len]
    }
}
