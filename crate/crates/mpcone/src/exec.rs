//! Rayon-backed parallelism for quadrature grids and Monte Carlo chunks.
//! Results are gathered in index order, so output never depends on the
//! thread count.

use mpcone_core::gue::{chunk_plan, finish, gue_chunk, GueEstimate, MomentSums};
use mpcone_core::quadrature::Executor;
use num_complex::Complex64;
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default)]
pub struct Rayon;

impl Executor for Rayon {
    fn map_indices(&self, len: usize, f: &(dyn Fn(usize) -> Vec<Complex64> + Sync)) -> Vec<Vec<Complex64>> {
        (0..len).into_par_iter().map(f).collect()
    }
}

/// Parallel GUE estimate; identical to the sequential one for the same seed.
pub fn gue_moment_parallel(nmat: usize, m: usize, samples: usize, seed: u64) -> GueEstimate {
    let plan = chunk_plan(samples);
    let chunks: Vec<MomentSums> = plan
        .par_iter()
        .enumerate()
        .map(|(i, &len)| gue_chunk(nmat, m, seed, i as u64, len))
        .collect();
    finish(&chunks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mpcone_core::gue::gue_moment_mc;

    #[test]
    fn parallel_matches_sequential() {
        let a = gue_moment_parallel(2, 2, 10_000, 3);
        let b = gue_moment_mc(2, 2, 10_000, 3);
        assert_eq!(a, b);
    }
}
