//! Monte Carlo trace moments of Gaussian Hermitian matrices.
//!
//! Diagonal entries are `N(0, 1)`; off-diagonal entries are complex with real
//! and imaginary parts `N(0, 1/2)`, so the density is `∝ e^{-tr X²/2}`.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

/// Samples per chunk; each chunk gets its own stream derived from the seed.
pub const CHUNK: usize = 4096;

/// Running sums for one chunk.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct MomentSums {
    pub count: u64,
    pub sum: f64,
    pub sum_sq: f64,
}

impl MomentSums {
    pub fn merge(self, other: MomentSums) -> MomentSums {
        MomentSums {
            count: self.count + other.count,
            sum: self.sum + other.sum,
            sum_sq: self.sum_sq + other.sum_sq,
        }
    }

    pub fn mean(&self) -> f64 {
        self.sum / self.count as f64
    }

    /// Standard error of the mean.
    pub fn std_error(&self) -> f64 {
        if self.count < 2 {
            return 0.0;
        }
        let n = self.count as f64;
        let var = (self.sum_sq - self.sum * self.sum / n) / (n - 1.0);
        libm::sqrt(var.max(0.0) / n)
    }
}

/// Result of a Monte Carlo run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GueEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: u64,
}

fn sample_matrix(n: usize, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    let mut x = vec![Complex64::new(0.0, 0.0); n * n];
    let half = libm::sqrt(0.5);
    for i in 0..n {
        let d: f64 = StandardNormal.sample(rng);
        x[i * n + i] = Complex64::new(d, 0.0);
        for j in i + 1..n {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            let z = Complex64::new(re * half, im * half);
            x[i * n + j] = z;
            x[j * n + i] = z.conj();
        }
    }
    x
}

fn matmul(a: &[Complex64], b: &[Complex64], n: usize) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            for j in 0..n {
                c[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    c
}

/// `(1/n) tr X^{2m}` for one matrix.
pub fn normalized_trace_power(x: &[Complex64], n: usize, m: usize) -> f64 {
    if m == 0 {
        return 1.0;
    }
    let sq = matmul(x, x, n);
    let mut acc = sq.clone();
    for _ in 1..m {
        acc = matmul(&acc, &sq, n);
    }
    (0..n).map(|i| acc[i * n + i].re).sum::<f64>() / n as f64
}

/// Sums for chunk `index` containing `len` samples.
pub fn gue_chunk(nmat: usize, m: usize, seed: u64, index: u64, len: usize) -> MomentSums {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut sums = MomentSums::default();
    for _ in 0..len {
        let x = sample_matrix(nmat, &mut rng);
        let v = normalized_trace_power(&x, nmat, m);
        sums.count += 1;
        sums.sum += v;
        sums.sum_sq += v * v;
    }
    sums
}

/// Chunk lengths covering `samples`.
pub fn chunk_plan(samples: usize) -> Vec<usize> {
    let mut out = vec![CHUNK; samples / CHUNK];
    if samples % CHUNK != 0 {
        out.push(samples % CHUNK);
    }
    out
}

/// Merges chunk sums in index order.
pub fn finish(chunks: &[MomentSums]) -> GueEstimate {
    let total = chunks.iter().copied().fold(MomentSums::default(), MomentSums::merge);
    GueEstimate { mean: total.mean(), std_error: total.std_error(), samples: total.count }
}

/// Sequential estimate of `(1/n) E tr X^{2m}`; deterministic in `seed`.
pub fn gue_moment_mc(nmat: usize, m: usize, samples: usize, seed: u64) -> GueEstimate {
    let chunks: Vec<MomentSums> = chunk_plan(samples)
        .into_iter()
        .enumerate()
        .map(|(i, len)| gue_chunk(nmat, m, seed, i as u64, len))
        .collect();
    finish(&chunks)
}

/// `(1/n) (2m)!/(2^m m!) c(m, n)`.
pub fn gue_moment_exact(nmat: usize, m: usize) -> f64 {
    if m == 0 {
        return 1.0;
    }
    let double_fact: f64 = (1..=m).map(|k| (2 * k - 1) as f64).product();
    let c = crate::univariate::cmn_series(m, nmat as i64);
    double_fact * crate::rational::to_f64(&crate::rational::Rational::from_integer(c)) / nmat as f64
}
