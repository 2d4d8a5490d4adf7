//! Rank-one families: Laguerre polynomials, Meixner–Pollaczek polynomials
//! `q_m^{(ν)}`, the difference operator and the `c(m, n)` series.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::quadrature::{integrate_adaptive, pairwise_sum, QuadratureDiagnostics, QuadratureSpec};
use crate::rational::{binomial, factorial, int, is_nonpositive_integer, rising_factorial, to_f64, Rational};

/// Dense polynomial in one variable, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly1 {
    coeffs: Vec<Rational>,
}

impl Poly1 {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly1 { coeffs }
    }

    pub fn zero() -> Self {
        Poly1 { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `c + x`.
    pub fn linear(c: Rational) -> Self {
        Self::new(vec![c, Rational::one()])
    }

    pub fn monomial(k: usize, c: Rational) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + to_f64(c);
        }
        acc
    }

    /// `f(ax + b)`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        let lin = Self::new(vec![b.clone(), a.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }

    /// `f(x + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        self.compose_affine(&Rational::one(), c)
    }

    /// `f(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    /// Multiplies by `x`.
    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rational::zero()];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }
}

impl Add for &Poly1 {
    type Output = Poly1;
    fn add(self, rhs: &Poly1) -> Poly1 {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly1::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly1 {
    type Output = Poly1;
    fn sub(self, rhs: &Poly1) -> Poly1 {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly1::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &Poly1 {
    type Output = Poly1;
    fn neg(self) -> Poly1 {
        self.scale(&int(-1))
    }
}

impl Mul for &Poly1 {
    type Output = Poly1;
    fn mul(self, rhs: &Poly1) -> Poly1 {
        if self.is_zero() || rhs.is_zero() {
            return Poly1::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly1::new(v)
    }
}

/// `(x + c)(x + c + 1)…(x + c + k - 1)` as a polynomial in `x`.
pub fn rising_poly(c: &Rational, k: usize) -> Poly1 {
    let mut acc = Poly1::one();
    for t in 0..k {
        acc = &acc * &Poly1::linear(c + int(t as i64));
    }
    acc
}

/// `C(x + c, k)` as a polynomial in `x`.
fn binomial_poly(scale: &Rational, c: &Rational, k: usize) -> Poly1 {
    // C(a x + c, k) = Π_{t<k} (a x + c - t) / k!
    let mut acc = Poly1::one();
    for t in 0..k {
        acc = &acc * &Poly1::new(vec![c - int(t as i64), scale.clone()]);
    }
    acc.scale(&factorial(k).recip())
}

/// Laguerre polynomial `L_m^{(α)}(x) = Σ_k (α+k+1)_{m-k}/(m-k)! · (-x)^k/k!`.
pub fn laguerre(m: usize, alpha: &Rational) -> Poly1 {
    let mut coeffs = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let c = rising_factorial(&(alpha + int(k as i64 + 1)), m - k) / factorial(m - k) / factorial(k);
        coeffs.push(if k % 2 == 1 { -c } else { c });
    }
    Poly1::new(coeffs)
}

/// Construction route for `q_m^{(ν)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MpRoute {
    /// Terminating `₂F₁(-m, s + ν/2; ν; 2)`.
    Hypergeometric,
    /// Three-term recurrence from `q_{-1} = 0`, `q_0 = 1`.
    Recurrence,
    /// Coefficients of `(1-w)^{s-ν/2} (1+w)^{-s-ν/2}` with `s` formal.
    Series,
}

impl MpRoute {
    pub const ALL: [MpRoute; 3] = [MpRoute::Hypergeometric, MpRoute::Recurrence, MpRoute::Series];
}

/// Meixner–Pollaczek polynomial `q_m^{(ν)}(s)`.
pub fn mp_q(m: usize, nu: &Rational, route: MpRoute) -> Result<Poly1> {
    match route {
        MpRoute::Hypergeometric => mp_q_hypergeometric(m, nu),
        MpRoute::Recurrence => Ok(mp_q_family(m, nu).pop().unwrap()),
        MpRoute::Series => Ok(mp_q_series(m, nu)),
    }
}

fn mp_q_hypergeometric(m: usize, nu: &Rational) -> Result<Poly1> {
    if is_nonpositive_integer(nu) && -nu.clone() < int(m as i64) {
        return Err(Error::RouteUnavailable { degree: m });
    }
    let half = nu / int(2);
    let mut acc = Poly1::zero();
    for k in 0..=m {
        // (-m)_k 2^k / ((ν)_k k!)
        let c = rising_factorial(&-int(m as i64), k) * num_traits::pow(int(2), k)
            / (rising_factorial(nu, k) * factorial(k));
        acc = &acc + &rising_poly(&half, k).scale(&c);
    }
    Ok(acc.scale(&(rising_factorial(nu, m) / factorial(m))))
}

/// `q_0, …, q_m` by the recurrence `q_{m+1} = ((m+ν-1) q_{m-1} - 2s q_m)/(m+1)`.
pub fn mp_q_family(m: usize, nu: &Rational) -> Vec<Poly1> {
    let mut out = vec![Poly1::one()];
    let mut prev = Poly1::zero();
    for k in 0..m {
        let cur = out[k].clone();
        let next = (&prev.scale(&(int(k as i64) + nu - int(1))) - &cur.mul_x().scale(&int(2)))
            .scale(&int(k as i64 + 1).recip());
        prev = cur;
        out.push(next);
    }
    out
}

fn mp_q_series(m: usize, nu: &Rational) -> Poly1 {
    let half = nu / int(2);
    let mut acc = Poly1::zero();
    for i in 0..=m {
        let a = binomial_poly(&Rational::one(), &-half.clone(), i);
        let b = binomial_poly(&-Rational::one(), &-half.clone(), m - i);
        let term = &a * &b;
        acc = if i % 2 == 1 { &acc - &term } else { &acc + &term };
    }
    acc
}

/// Generating series `Σ_m c_m(s) w^m` of `(1-w)^{s-ν/2}(1+w)^{-s-ν/2}` to order `maxdeg`.
pub fn mp_generating_series(nu: &Rational, maxdeg: usize) -> Vec<Poly1> {
    (0..=maxdeg).map(|m| mp_q_series(m, nu)).collect()
}

/// `(D_ν f)(s) = (s + ν/2) f(s+1) - (s - ν/2) f(s-1)`.
pub fn mp_difference_apply(f: &Poly1, nu: &Rational) -> Poly1 {
    let half = nu / int(2);
    let up = &Poly1::linear(half.clone()) * &f.shift(&Rational::one());
    let down = &Poly1::linear(-half) * &f.shift(&-Rational::one());
    &up - &down
}

/// Image of `e^{-u} u^k` under the modified Mellin transform: `(s + ν/2)_k`.
pub fn mellin_monomial(k: usize, nu: &Rational) -> Poly1 {
    rising_poly(&(nu / int(2)), k)
}

/// Mellin image of `e^{-u} P(u)`, term by term.
pub fn mellin_transform(f: &LaguerreFunction, nu: &Rational) -> Poly1 {
    let mut acc = Poly1::zero();
    for (k, c) in f.poly.coeffs().iter().enumerate() {
        acc = &acc + &mellin_monomial(k, nu).scale(c);
    }
    acc
}

/// `ψ(u) = e^{-u} P(u)`; the exponential is never materialised.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaguerreFunction {
    pub poly: Poly1,
}

impl LaguerreFunction {
    /// `ψ_m^{(ν)}(u) = e^{-u} L_m^{(ν-1)}(2u)`.
    pub fn psi(m: usize, nu: &Rational) -> Self {
        let l = laguerre(m, &(nu - int(1)));
        LaguerreFunction { poly: l.compose_affine(&int(2), &Rational::zero()) }
    }

    /// `-u ψ'' - ν ψ' + u ψ`, returned as `e^{-u} (-uP'' + 2uP' - νP' + νP)`.
    pub fn apply_d3(&self, nu: &Rational) -> Self {
        let p = &self.poly;
        let d1 = p.derivative();
        let d2 = d1.derivative();
        let mut acc = -&d2.mul_x();
        acc = &acc + &d1.mul_x().scale(&int(2));
        acc = &acc - &d1.scale(nu);
        acc = &acc + &p.scale(nu);
        LaguerreFunction { poly: acc }
    }
}

/// Checks `D^{(3)}_ν ψ_m = (2m + ν) ψ_m` exactly.
pub fn laguerre_eigencheck(m: usize, nu: &Rational) -> bool {
    let psi = LaguerreFunction::psi(m, nu);
    psi.apply_d3(nu).poly == psi.poly.scale(&(int(2 * m as i64) + nu))
}

/// `⟨q_a, q_b⟩ = ∫ q_a(iλ) conj(q_b(iλ)) a_ν |Γ(iλ + ν/2)|² dλ` with
/// `a_ν = 2^ν / (2π Γ(ν))`, so that the total mass is 1.
pub fn mp_orthogonality_quadrature(
    a: usize,
    b: usize,
    nu: &Rational,
    quad: &QuadratureSpec,
) -> Result<(f64, QuadratureDiagnostics)> {
    if !nu.is_positive() {
        return Err(Error::InvalidInput("orthogonality weight needs ν > 0".into()));
    }
    let fam = mp_q_family(a.max(b), nu);
    let (qa, qb) = (&fam[a], &fam[b]);
    let nuf = to_f64(nu);
    let log_norm = nuf * core::f64::consts::LN_2
        - libm::log(2.0 * core::f64::consts::PI)
        - crate::gamma::ln_gamma_real(nuf);
    let growth = nuf - 1.0 + (a + b) as f64;
    let (v, diag) = integrate_adaptive(quad, growth, |xs, ws| {
        let terms: Vec<Complex64> = xs
            .iter()
            .zip(ws)
            .map(|(&l, &w)| {
                let z = Complex64::new(0.0, l);
                let wt = libm::exp(log_norm + crate::gamma::ln_abs_gamma_sq(nuf / 2.0, l));
                qa.eval_complex(z) * qb.eval_complex(z).conj() * (w * wt)
            })
            .collect();
        Ok(pairwise_sum(&terms))
    })?;
    Ok((v.re, diag))
}

/// `c(m, n)` read off the series `((1+x)/(1-x))^n = 1 + 2 Σ c(m,n) x^{m+1}`.
pub fn cmn_series(m: usize, n: i64) -> BigInt {
    let order = m + 1;
    let nn = int(n);
    let mut total = Rational::zero();
    for i in 0..=order {
        let j = order - i;
        // (1+x)^n (1-x)^{-n}
        let a = binomial(&nn, i);
        let b = binomial(&-nn.clone(), j);
        let t = a * b;
        total += if j % 2 == 1 { -t } else { t };
    }
    (total / int(2)).to_integer()
}

/// `Σ_k 2^k C(m,k) C(n,k+1)`.
pub fn cmn_closed(m: usize, n: usize) -> BigInt {
    (0..=m)
        .map(|k| {
            BigInt::from(2).pow(k as u32)
                * crate::rational::binomial_int(m as i64, k as i64)
                * crate::rational::binomial_int(n as i64, k as i64 + 1)
        })
        .sum()
}

/// The same sum without the `2^k` weights.
pub fn cmn_closed_unweighted(m: usize, n: usize) -> BigInt {
    (0..=m)
        .map(|k| {
            crate::rational::binomial_int(m as i64, k as i64)
                * crate::rational::binomial_int(n as i64, k as i64 + 1)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn laguerre_examples() {
        let a = ratio(2, 3);
        assert_eq!(laguerre(0, &a), Poly1::one());
        assert_eq!(laguerre(1, &a), Poly1::new(vec![&a + int(1), int(-1)]));
        assert_eq!(laguerre(2, &int(0)), Poly1::new(vec![int(1), int(-2), ratio(1, 2)]));
    }

    #[test]
    fn mp_examples() {
        let nu = ratio(7, 3);
        for route in MpRoute::ALL {
            assert_eq!(mp_q(0, &nu, route).unwrap(), Poly1::one());
            assert_eq!(mp_q(1, &nu, route).unwrap(), Poly1::new(vec![int(0), int(-2)]));
            assert_eq!(mp_q(2, &nu, route).unwrap(), Poly1::new(vec![&nu / int(2), int(0), int(2)]));
        }
        assert_eq!(mp_q(3, &int(-1), MpRoute::Hypergeometric), Err(Error::RouteUnavailable { degree: 3 }));
        assert!(mp_q(3, &int(-1), MpRoute::Recurrence).is_ok());
        assert!(mp_q(1, &int(-1), MpRoute::Hypergeometric).is_ok());
    }

    #[test]
    fn difference_examples() {
        let nu = int(5);
        assert_eq!(mp_difference_apply(&Poly1::one(), &nu), Poly1::constant(nu.clone()));
        let q1 = mp_q(1, &nu, MpRoute::Recurrence).unwrap();
        assert_eq!(mp_difference_apply(&q1, &nu), q1.scale(&(int(2) + &nu)));
        assert_eq!(mellin_monomial(1, &nu), Poly1::linear(&nu / int(2)));
        for m in 0..6 {
            let psi = LaguerreFunction::psi(m, &nu);
            assert_eq!(mellin_transform(&psi, &nu), mp_q(m, &nu, MpRoute::Recurrence).unwrap());
        }
    }

    #[test]
    fn eigencheck_small() {
        for m in 0..5 {
            assert!(laguerre_eigencheck(m, &ratio(5, 2)));
        }
        let psi = LaguerreFunction::psi(2, &int(3));
        assert_ne!(psi.apply_d3(&int(3)).poly, psi.poly.scale(&int(6)));
    }

    #[test]
    fn orthogonality_small() {
        let q = QuadratureSpec::default();
        let nu = int(3);
        let (v, _) = mp_orthogonality_quadrature(0, 0, &nu, &q).unwrap();
        assert!((v - 1.0).abs() < 1e-8, "{v}");
        let (v, _) = mp_orthogonality_quadrature(0, 1, &nu, &q).unwrap();
        assert!(v.abs() < 1e-8);
        let (v, _) = mp_orthogonality_quadrature(1, 1, &nu, &q).unwrap();
        assert!((v - 3.0).abs() < 1e-6);
    }

    #[test]
    fn cmn_values() {
        for m in 0..6 {
            assert_eq!(cmn_series(m, 1), BigInt::from(1));
            assert_eq!(cmn_series(m, 0), BigInt::from(0));
            assert_eq!(cmn_closed(0, m + 1), BigInt::from(m as i64 + 1));
        }
        assert_eq!(cmn_series(1, 2), BigInt::from(4));
        assert_eq!(cmn_closed(1, 2), BigInt::from(4));
        assert_eq!(cmn_closed_unweighted(1, 2), BigInt::from(3));
    }
}
