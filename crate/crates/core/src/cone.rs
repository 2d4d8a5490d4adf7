//! Cone parameters, generalised Pochhammer symbols and the Gindikin gamma function.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::gamma::{is_gamma_pole, ln_gamma};
use crate::partition::Partition;
use crate::rational::{int, rising_factorial, to_f64, Rational};

/// Rank `n` and multiplicity `d` of a symmetric cone, with derived constants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConeParams {
    rank: usize,
    mult: Rational,
    theta: Rational,
    dim_n: Rational,
    rho: Vec<Rational>,
}

impl ConeParams {
    /// `d` may be any positive rational; classical cones use 1, 2, 4, 8.
    pub fn new(rank: usize, mult: Rational) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidInput("rank must be positive".into()));
        }
        if !mult.is_positive() {
            return Err(Error::InvalidInput("multiplicity d must be positive".into()));
        }
        let n = int(rank as i64);
        let theta = &mult / int(2);
        let dim_n = &n + &theta * &n * (&n - int(1));
        let rho = (1..=rank)
            .map(|j| &mult / int(4) * (int(2 * j as i64) - &n - int(1)))
            .collect();
        Ok(ConeParams { rank, mult, theta, dim_n, rho })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Multiplicity `d`.
    pub fn mult(&self) -> &Rational {
        &self.mult
    }

    /// Jack parameter `θ = d/2`.
    pub fn theta(&self) -> &Rational {
        &self.theta
    }

    /// `N = n + (d/2) n (n-1)`.
    pub fn dim_n(&self) -> &Rational {
        &self.dim_n
    }

    /// `N / n`.
    pub fn n_over_rank(&self) -> Rational {
        &self.dim_n / int(self.rank as i64)
    }

    /// `ρ_j = (d/4)(2j - n - 1)`, `j = 1..n`.
    pub fn rho(&self) -> &[Rational] {
        &self.rho
    }

    /// `δ = (n-1, n-2, ..., 0)`.
    pub fn delta(&self) -> Vec<usize> {
        (0..self.rank).rev().collect()
    }

    /// `(d/4)(n-1)`, the recurring shift in the difference operators.
    pub fn quarter_shift(&self) -> Rational {
        &self.mult / int(4) * int(self.rank as i64 - 1)
    }

    /// `m - ρ` as a spectral point.
    pub fn spectral_point(&self, m: &Partition) -> Vec<Rational> {
        (0..self.rank)
            .map(|j| int(m.part(j) as i64) - &self.rho[j])
            .collect()
    }

    /// Same cone with a different rank (used where a rank-K companion is needed).
    pub fn with_rank(&self, rank: usize) -> Result<Self> {
        Self::new(rank, self.mult.clone())
    }
}

/// `(α)_m = Π_j (α - (d/2)(j-1))_{m_j}`.
pub fn pochhammer_generalized(alpha: &Rational, m: &Partition, p: &ConeParams) -> Result<Rational> {
    m.check_rank(p.rank())?;
    let mut acc = Rational::one();
    for (j, &mj) in m.parts().iter().enumerate() {
        let base = alpha - p.theta() * int(j as i64);
        acc *= rising_factorial(&base, mj);
    }
    Ok(acc)
}

/// `log Γ_Ω(s) = ((N-n)/2) log 2π + Σ_j log Γ(s_j - (d/2)(j-1))`.
pub fn gamma_omega_log(s: &[Complex64], p: &ConeParams) -> Result<Complex64> {
    if s.len() != p.rank() {
        return Err(Error::InvalidInput(alloc::format!(
            "expected {} coordinates, got {}",
            p.rank(),
            s.len()
        )));
    }
    let theta = to_f64(p.theta());
    let excess = to_f64(&(p.dim_n() - int(p.rank() as i64)));
    let mut acc = Complex64::new(0.5 * excess * libm::log(2.0 * core::f64::consts::PI), 0.0);
    for (j, &sj) in s.iter().enumerate() {
        let z = sj - theta * j as f64;
        if is_gamma_pole(z) {
            return Err(Error::GammaPole { index: j + 1 });
        }
        acc += ln_gamma(z);
    }
    Ok(acc)
}

/// Exact `Γ_Ω(s + m) / Γ_Ω(s)` for a rational base point, i.e. `Π_j (s_j - (d/2)(j-1))_{m_j}`.
pub fn gamma_omega_ratio(s: &[Rational], m: &Partition, p: &ConeParams) -> Result<Rational> {
    m.check_rank(p.rank())?;
    let mut acc = Rational::one();
    for (j, sj) in s.iter().enumerate() {
        acc *= rising_factorial(&(sj - p.theta() * int(j as i64)), m.part(j));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::rational::ratio;
    use core::f64::consts::PI;

    fn cone(n: usize, d: Rational) -> ConeParams {
        ConeParams::new(n, d).unwrap()
    }

    #[test]
    fn derived_constants() {
        let p = cone(3, int(2));
        assert_eq!(p.dim_n(), &int(9));
        assert_eq!(p.rho(), &[int(-1), int(0), int(1)]);
        assert_eq!(p.delta(), alloc::vec![2, 1, 0]);
        let q = cone(4, ratio(3, 2));
        let total: Rational = q.rho().iter().sum();
        assert!(num_traits::Zero::is_zero(&total));
        assert_eq!(cone(1, int(5)).dim_n(), &int(1));
        assert!(ConeParams::new(2, int(0)).is_err());
        assert!(ConeParams::new(0, int(1)).is_err());
    }

    #[test]
    fn pochhammer_examples() {
        let p1 = cone(1, int(2));
        assert_eq!(pochhammer_generalized(&ratio(7, 3), &part![], &p1).unwrap(), int(1));
        assert_eq!(pochhammer_generalized(&int(2), &part![3], &p1).unwrap(), int(24));
        let p2 = cone(2, int(2));
        assert_eq!(pochhammer_generalized(&int(3), &part![1, 1], &p2).unwrap(), int(6));
        assert!(matches!(
            pochhammer_generalized(&int(3), &part![1, 1, 1], &p2),
            Err(Error::PartitionTooLong { .. })
        ));
    }

    #[test]
    fn pochhammer_box_ratio() {
        let p = cone(3, ratio(3, 2));
        let alpha = ratio(5, 7);
        let m = part![3, 1];
        for j in 0..3 {
            if let Some(mj) = m.add_box(j) {
                let lhs = pochhammer_generalized(&alpha, &mj, &p).unwrap()
                    / pochhammer_generalized(&alpha, &m, &p).unwrap();
                let rhs = &alpha + int(m.part(j) as i64) - p.theta() * int(j as i64);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn gindikin_gamma_values() {
        let p1 = cone(1, int(2));
        let v = gamma_omega_log(&[Complex64::new(1.0, 0.0)], &p1).unwrap();
        assert!(v.norm() < 1e-14);
        let v = gamma_omega_log(&[Complex64::new(0.5, 1.0)], &p1).unwrap();
        assert!((libm::exp(2.0 * v.re) - PI / libm::cosh(PI)).abs() < 1e-10);
        let p2 = cone(2, int(2));
        let v = gamma_omega_log(&[Complex64::new(3.0, 0.0), Complex64::new(2.0, 0.0)], &p2).unwrap();
        assert!((v.re - libm::log(2.0 * PI * 2.0)).abs() < 1e-13);
        let err = gamma_omega_log(&[Complex64::new(3.0, 0.0), Complex64::new(1.0, 0.0)], &p2);
        assert_eq!(err, Err(Error::GammaPole { index: 2 }));
    }

    #[test]
    fn gindikin_recurrence() {
        let p = cone(3, int(1));
        let s = [Complex64::new(2.3, 0.4), Complex64::new(1.9, -3.0), Complex64::new(4.1, 7.5)];
        for j in 0..3 {
            let mut t = s;
            t[j] += 1.0;
            let lhs = gamma_omega_log(&t, &p).unwrap() - gamma_omega_log(&s, &p).unwrap();
            let rhs = (s[j] - 0.5 * j as f64).ln();
            assert!((lhs - rhs).norm() < 1e-10);
        }
    }
}
