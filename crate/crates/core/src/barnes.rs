//! Barnes-type spectral weight, its moments, and the `d = 2` orthogonal
//! polynomial apparatus.
//!
//! The weight on `R^n` is
//! `Π_j |Γ(iλ_j + κ/2)|² · Π_{j<k} |Γ(it + d/2)|² t sinh(πt)/π`, `t = λ_j - λ_k`,
//! with `κ = ν - (d/2)(n-1)`. Normalising constants are never computed; every
//! moment is divided by the integral of 1 on the same grid.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{Signed, Zero};

use crate::cone::{pochhammer_generalized, ConeParams};
use crate::error::{Error, Result};
use crate::gamma::{ln_abs_gamma_sq, ln_gamma};
use crate::interp::gamma_k;
use crate::linalg::determinant_complex;
use crate::multivariate::{mp_q_det, MPPoly};
use crate::partition::Partition;
use crate::quadrature::{
    composite_rule, integrate_adaptive_with, pairwise_sum, Executor, QuadratureDiagnostics, QuadratureSpec,
};
use crate::rational::{binomial_int, factorial, falling_factorial, int, pow, to_f64, Rational};
use crate::shift::alpha_fn;
use crate::univariate::mp_q_family;

/// Integrand returning several values at one point `λ`.
pub type Integrand<'a> = &'a (dyn Fn(&[f64]) -> Vec<Complex64> + Sync);

/// The spectral weight for given cone parameters and `ν`.
#[derive(Clone, Debug, PartialEq)]
pub struct BarnesWeight {
    pub p: ConeParams,
    pub nu: Rational,
    pub kappa: Rational,
}

fn ln_sinh(x: f64) -> f64 {
    // x > 0
    x + libm::log((1.0 - libm::exp(-2.0 * x)) / 2.0)
}

impl BarnesWeight {
    pub fn new(p: ConeParams, nu: Rational) -> Result<Self> {
        let kappa = &nu - p.theta() * int(p.rank() as i64 - 1);
        if !kappa.is_positive() {
            return Err(Error::InvalidInput(format!("κ = {kappa} must be positive")));
        }
        Ok(BarnesWeight { p, nu, kappa })
    }

    pub fn from_kappa(p: ConeParams, kappa: Rational) -> Result<Self> {
        let nu = &kappa + p.theta() * int(p.rank() as i64 - 1);
        BarnesWeight::new(p, nu)
    }

    fn single_log(&self, x: f64) -> f64 {
        ln_abs_gamma_sq(to_f64(&self.kappa) / 2.0, x)
    }

    fn pair_log(&self, t: f64) -> f64 {
        if t == 0.0 {
            return f64::NEG_INFINITY;
        }
        let a = t.abs();
        ln_abs_gamma_sq(to_f64(self.p.theta()), t) + libm::log(a) + ln_sinh(PI * a) - libm::log(PI)
    }

    /// Log-density up to an additive constant; `-∞` at coincident coordinates.
    pub fn logdensity(&self, lambda: &[f64]) -> f64 {
        let mut acc: f64 = lambda.iter().map(|&x| self.single_log(x)).sum();
        for j in 0..lambda.len() {
            for k in j + 1..lambda.len() {
                acc += self.pair_log(lambda[j] - lambda[k]);
            }
        }
        acc
    }

    /// Polynomial growth exponent per axis for an integrand of degree `deg`.
    pub fn growth(&self, deg: usize) -> f64 {
        to_f64(&self.kappa) - 1.0 + deg as f64 + to_f64(self.p.mult()) * (self.p.rank() as f64 - 1.0)
    }

    fn adjusted(&self, q: &QuadratureSpec) -> QuadratureSpec {
        let mut out = q.clone();
        out.panel_width = q.panel_width.min(to_f64(&self.kappa)).min(to_f64(self.p.mult()));
        out
    }

    /// Tensor-grid integrals `[∫1, ∫f_1, …]` of the unnormalised weight.
    fn tensor(&self, nodes: &[f64], weights: &[f64], exec: &dyn Executor, f: Integrand) -> Vec<Complex64> {
        let n = self.p.rank();
        let single: Vec<f64> = nodes.iter().zip(weights).map(|(&x, &w)| self.single_log(x) + libm::log(w)).collect();
        let len = nodes.len();
        let pair: Vec<f64> = if n > 1 {
            (0..len * len).map(|ij| self.pair_log(nodes[ij / len] - nodes[ij % len])).collect()
        } else {
            Vec::new()
        };
        let per_point = |idx: &[usize], lambda: &mut [f64]| -> Option<f64> {
            let mut logd = 0.0;
            for (a, &i) in idx.iter().enumerate() {
                lambda[a] = nodes[i];
                logd += single[i];
                for &k in &idx[..a] {
                    logd += pair[k * len + i];
                }
            }
            logd.is_finite().then_some(logd)
        };
        let column = |i0: usize| -> Vec<Complex64> {
            let mut idx = vec![0usize; n];
            idx[0] = i0;
            let mut lambda = vec![0.0; n];
            let mut acc: Vec<Complex64> = Vec::new();
            loop {
                if let Some(logd) = per_point(&idx, &mut lambda) {
                    let dens = libm::exp(logd);
                    let vals = f(&lambda);
                    if acc.is_empty() {
                        acc = vec![Complex64::zero(); vals.len() + 1];
                    }
                    acc[0] += dens;
                    for (a, v) in acc[1..].iter_mut().zip(vals) {
                        *a += v * dens;
                    }
                }
                // odometer over idx[1..]
                let mut pos = n;
                loop {
                    if pos == 1 {
                        return acc;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < len {
                        break;
                    }
                    idx[pos] = 0;
                }
            }
        };
        let columns = if n == 0 { Vec::new() } else { exec.map_indices(len, &column) };
        let width = columns.iter().map(Vec::len).max().unwrap_or(0);
        (0..width)
            .map(|c| {
                let xs: Vec<Complex64> = columns.iter().map(|col| col.get(c).copied().unwrap_or_default()).collect();
                pairwise_sum(&xs)
            })
            .collect()
    }

    /// Raw integrals `[Z, ∫f_1, …]` with panel doubling; convergence is judged
    /// on `Z` relatively and on the normalised moments.
    pub fn integrate(
        &self,
        f: Integrand,
        degree: usize,
        q: &QuadratureSpec,
        exec: &dyn Executor,
    ) -> Result<(Vec<Complex64>, QuadratureDiagnostics)> {
        let spec = self.adjusted(q);
        let change = |cur: &Vec<Complex64>, prev: &Vec<Complex64>| -> f64 {
            let z = cur[0].norm();
            let mut worst = (cur[0] - prev[0]).norm() / z;
            for (a, b) in cur.iter().zip(prev).skip(1) {
                let (ra, rb) = (a / cur[0], b / prev[0]);
                worst = worst.max((ra - rb).norm() / ra.norm().max(1.0));
            }
            worst
        };
        integrate_adaptive_with(&spec, self.growth(degree), |x, w| Ok(self.tensor(x, w, exec, f)), change)
    }

    /// Normalised moments `M(f_i) = ∫ f_i / ∫ 1`.
    pub fn moments(
        &self,
        f: Integrand,
        degree: usize,
        q: &QuadratureSpec,
        exec: &dyn Executor,
    ) -> Result<(Vec<Complex64>, QuadratureDiagnostics)> {
        let (raw, diag) = self.integrate(f, degree, q, exec)?;
        let z = raw[0];
        Ok((raw[1..].iter().map(|v| v / z).collect(), diag))
    }

    /// `Z_n`, the integral of the unnormalised weight.
    pub fn partition_function(&self, q: &QuadratureSpec, exec: &dyn Executor) -> Result<(f64, QuadratureDiagnostics)> {
        let (raw, diag) = self.integrate(&|_| Vec::new(), 0, q, exec)?;
        Ok((raw[0].re, diag))
    }
}

/// Normalised moment of a symmetric polynomial `χ(λ)` with real coefficients.
pub fn moment_quadrature(
    chi: &crate::sympoly::SymPoly,
    w: &BarnesWeight,
    q: &QuadratureSpec,
    exec: &dyn Executor,
) -> Result<(Complex64, QuadratureDiagnostics)> {
    let poly = chi.to_poly();
    let f = move |l: &[f64]| {
        let z: Vec<Complex64> = l.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        vec![poly.eval_complex(&z)]
    };
    let (m, d) = w.moments(&f, chi.degree().unwrap_or(0), q, exec)?;
    Ok((m[0], d))
}

/// Quadrature value of `M(γ_m(-iλ - ν/2))`.
pub fn moment_gamma_quadrature(
    m: &Partition,
    w: &BarnesWeight,
    q: &QuadratureSpec,
    exec: &dyn Executor,
) -> Result<(Complex64, QuadratureDiagnostics)> {
    let g = gamma_k(m, &w.p)?.to_poly();
    let half = to_f64(&w.nu) / 2.0;
    let f = move |l: &[f64]| {
        let z: Vec<Complex64> = l.iter().map(|&x| Complex64::new(-half, -x)).collect();
        vec![g.eval_complex(&z)]
    };
    let (v, d) = w.moments(&f, m.weight(), q, exec)?;
    Ok((v[0], d))
}

/// `M(γ_m(-iλ - ν/2)) = (-1)^{|m|} 2^{-|m|} (ν)_m`.
pub fn moment_exact_gamma(m: &Partition, nu: &Rational, p: &ConeParams) -> Result<Rational> {
    let sign = if m.weight() % 2 == 1 { int(-1) } else { int(1) };
    Ok(sign * pochhammer_generalized(nu, m, p)? / pow(&int(2), m.weight()))
}

/// `M(Π_j(-iλ_j - ν/2 - α + (d/4)(n-1))) = (-1)^n (d/4)^n Σ_k C(n,k) [2α/d]_k [2ν/d]_{n-k} 2^k`.
pub fn moment_exact_dalpha(alpha: &Rational, nu: &Rational, p: &ConeParams) -> Rational {
    let n = p.rank();
    let d = p.mult();
    let a = int(2) * alpha / d;
    let v = int(2) * nu / d;
    let mut sum = Rational::zero();
    for k in 0..=n {
        sum += Rational::from_integer(binomial_int(n as i64, k as i64))
            * falling_factorial(&a, k)
            * falling_factorial(&v, n - k)
            * pow(&int(2), k);
    }
    let sign = if n % 2 == 1 { int(-1) } else { int(1) };
    sign * pow(&(d / int(4)), n) * sum
}

/// Quadrature value of the product moment in [`moment_exact_dalpha`].
pub fn moment_dalpha_quadrature(
    alpha: &Rational,
    w: &BarnesWeight,
    q: &QuadratureSpec,
    exec: &dyn Executor,
) -> Result<(Complex64, QuadratureDiagnostics)> {
    let shift = to_f64(&(-&w.nu / int(2) - alpha + w.p.quarter_shift()));
    let f = move |l: &[f64]| vec![l.iter().map(|&x| Complex64::new(shift, -x)).product()];
    let (v, d) = w.moments(&f, w.p.rank(), q, exec)?;
    Ok((v[0], d))
}

/// `Σ_k C(n,k) [u]_k [v]_{n-k} 2^k == n! q_n^{(v-n+1)}(-u - (v-n+1)/2)`.
pub fn combinatorial_identity_check(u: &Rational, v: &Rational, n: usize) -> bool {
    let mut lhs = Rational::zero();
    for k in 0..=n {
        lhs += Rational::from_integer(binomial_int(n as i64, k as i64))
            * falling_factorial(u, k)
            * falling_factorial(v, n - k)
            * pow(&int(2), k);
    }
    let nu = v - int(n as i64) + int(1);
    let q = mp_q_family(n, &nu).pop().unwrap_or_default();
    lhs == factorial(n) * q.eval(&(-u - &nu / int(2)))
}

/// `F_1(z) = i^n n! (d/4)^n q_n^{(2κ/d)}((2/d) i z)`.
pub fn barnes_f1(z: Complex64, kappa: &Rational, p: &ConeParams) -> Complex64 {
    let n = p.rank();
    let d = p.mult();
    let q = mp_q_family(n, &(int(2) * kappa / d)).pop().unwrap_or_default();
    let scale = to_f64(&(factorial(n) * pow(&(d / int(4)), n)));
    let arg = Complex64::new(0.0, 2.0 / to_f64(d)) * z;
    Complex64::i().powu(n as u32) * scale * q.eval_complex(arg)
}

/// `F_1(z) = M(Π_j (z - λ_j))` by quadrature.
pub fn barnes_f1_quadrature(
    z: Complex64,
    w: &BarnesWeight,
    q: &QuadratureSpec,
    exec: &dyn Executor,
) -> Result<(Complex64, QuadratureDiagnostics)> {
    let f = move |l: &[f64]| vec![l.iter().map(|&x| z - x).product()];
    let (v, d) = w.moments(&f, w.p.rank(), q, exec)?;
    Ok((v[0], d))
}

/// `log c(s) = Σ_{j<k} log B(s_j - s_k, d/2)` on the principal branch; `c_0` omitted.
pub fn c_function_log(s: &[Complex64], p: &ConeParams) -> Complex64 {
    let half = Complex64::new(to_f64(p.theta()), 0.0);
    let mut acc = Complex64::zero();
    for j in 0..s.len() {
        for k in j + 1..s.len() {
            let x = s[j] - s[k];
            acc += ln_gamma(x) + ln_gamma(half) - ln_gamma(x + half);
        }
    }
    acc
}

/// Relative gap between `c(s)/c(s+ε_j)` and the exact `α_j(s)`, per `j`.
///
/// The two agree for `j = 1` at every `d`, and for every `j` only at `d = 2`.
pub fn alpha_c_link_deviation(s: &[Rational], p: &ConeParams) -> Result<Vec<f64>> {
    let sf: Vec<Complex64> = s.iter().map(|x| Complex64::new(to_f64(x), 0.0)).collect();
    let base = c_function_log(&sf, p);
    let mut out = Vec::with_capacity(p.rank());
    for j in 0..p.rank() {
        let exact = to_f64(&alpha_fn(j, p).eval(s)?);
        let mut up = sf.clone();
        up[j] += 1.0;
        let ratio = (base - c_function_log(&up, p)).exp();
        out.push((ratio - exact).norm() / exact.abs().max(1e-300));
    }
    Ok(out)
}

/// Raw moments `∫ t^a w(t) dt`, `a = 0, 1, …`, of a one-dimensional weight.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentTable {
    pub moments: Vec<f64>,
}

impl MomentTable {
    /// Moments of `|Γ(it + κ/2)|²` by quadrature.
    pub fn meixner_pollaczek(kappa: &Rational, count: usize, q: &QuadratureSpec) -> Result<(Self, QuadratureDiagnostics)> {
        let w = BarnesWeight::from_kappa(ConeParams::new(1, int(2))?, kappa.clone())?;
        let powers = move |l: &[f64]| {
            let mut out = Vec::with_capacity(count);
            let mut t = 1.0;
            for _ in 0..count {
                out.push(Complex64::new(t, 0.0));
                t *= l[0];
            }
            out
        };
        let (raw, diag) = w.integrate(&powers, count.saturating_sub(1), q, &crate::quadrature::Sequential)?;
        Ok((MomentTable { moments: raw[1..].iter().map(|c| c.re).collect() }, diag))
    }

    /// Moments of `e^{-t²/2}`: `√(2π) (a-1)!!` for even `a`.
    pub fn gaussian(count: usize) -> Self {
        let mut moments = Vec::with_capacity(count);
        let mut even = libm::sqrt(2.0 * PI);
        for a in 0..count {
            if a % 2 == 1 {
                moments.push(0.0);
            } else {
                moments.push(even);
                even *= (a + 1) as f64;
            }
        }
        MomentTable { moments }
    }

    fn functional(&self, p: &[f64], r: &[f64]) -> Result<f64> {
        let mut acc = 0.0;
        for (i, a) in p.iter().enumerate() {
            for (j, b) in r.iter().enumerate() {
                let mu = self
                    .moments
                    .get(i + j)
                    .ok_or(Error::Truncation { have: self.moments.len().saturating_sub(1), need: i + j })?;
                acc += a * b * mu;
            }
        }
        Ok(acc)
    }
}

/// Monic orthogonal polynomials (coefficients in increasing degree) and norms `h_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthoFamily {
    pub polys: Vec<Vec<f64>>,
    pub norms: Vec<f64>,
}

impl OrthoFamily {
    pub fn eval(&self, m: usize, z: Complex64) -> Complex64 {
        self.polys[m].iter().rev().fold(Complex64::zero(), |acc, &c| acc * z + c)
    }
}

/// Stieltjes procedure on the moment functional: `p_{k+1} = (t - a_k) p_k - b_k p_{k-1}`.
pub fn orthopoly_from_moments(mt: &MomentTable, upto: usize) -> Result<OrthoFamily> {
    let mut polys: Vec<Vec<f64>> = vec![vec![1.0]];
    let mut norms = Vec::with_capacity(upto + 1);
    for k in 0..=upto {
        let pk = polys[k].clone();
        let h = mt.functional(&pk, &pk)?;
        if !(h > 0.0) {
            return Err(Error::SingularHankel(k));
        }
        norms.push(h);
        if k == upto {
            break;
        }
        let mut tp = vec![0.0];
        tp.extend_from_slice(&pk);
        let a = mt.functional(&tp, &pk)? / h;
        let mut next: Vec<f64> = tp.clone();
        for (i, c) in pk.iter().enumerate() {
            next[i] -= a * c;
        }
        if k > 0 {
            let b = h / norms[k - 1];
            for (i, c) in polys[k - 1].iter().enumerate() {
                next[i] -= b * c;
            }
        }
        polys.push(next);
    }
    Ok(OrthoFamily { polys, norms })
}

/// `⟨Q_a, Q_b⟩ = M(Q_a(iλ) Q_b(-iλ))` for each requested pair, plus the norms.
pub fn mv_inner_products(
    family: &[MPPoly],
    pairs: &[(usize, usize)],
    w: &BarnesWeight,
    q: &QuadratureSpec,
    exec: &dyn Executor,
) -> Result<(Vec<Complex64>, QuadratureDiagnostics)> {
    let polys: Vec<_> = family.iter().map(|f| f.poly.to_poly()).collect();
    let pairs = pairs.to_vec();
    let f = move |l: &[f64]| {
        let plus: Vec<Complex64> = l.iter().map(|&x| Complex64::new(0.0, x)).collect();
        let minus: Vec<Complex64> = l.iter().map(|&x| Complex64::new(0.0, -x)).collect();
        let vp: Vec<Complex64> = polys.iter().map(|p| p.eval_complex(&plus)).collect();
        let vm: Vec<Complex64> = polys.iter().map(|p| p.eval_complex(&minus)).collect();
        pairs.iter().map(|&(a, b)| vp[a] * vm[b]).collect()
    };
    let degree = 2 * family.iter().map(|f| f.m.weight()).max().unwrap_or(0);
    w.moments(&f, degree, q, exec)
}

/// Proportionality report for `F_K(z) = C Q_{(n^K)}(iz)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FkReport {
    /// `C` fitted at the first point, with `ν = κ + K - 1` in rank `K`.
    pub constant: Complex64,
    /// Worst relative deviation from proportionality at the other points.
    pub deviation: f64,
    /// The same deviation when `Q` is taken with `ν = κ`.
    pub literal_deviation: f64,
    pub diagnostics: QuadratureDiagnostics,
}

fn vandermonde_c(z: &[Complex64]) -> Complex64 {
    let mut v = Complex64::new(1.0, 0.0);
    for j in 0..z.len() {
        for k in j + 1..z.len() {
            v *= z[k] - z[j];
        }
    }
    v
}

/// `F_K(z) = det(p_{n+j-1}(z_k)) / V(z)` from the moments of `|Γ(it+κ/2)|²`.
pub fn fk_value(family: &OrthoFamily, n: usize, z: &[Complex64]) -> Complex64 {
    let k = z.len();
    let mat: Vec<Vec<Complex64>> = (0..k).map(|j| z.iter().map(|&zk| family.eval(n + j, zk)).collect()).collect();
    determinant_complex(&mat) / vandermonde_c(z)
}

/// Compares `F_K` in rank `n` (orthogonal-polynomial determinant) with
/// `Q_{(n^K)}` in rank `K` at `d = 2`, across the given points.
pub fn fk_check_d2(
    big_k: usize,
    points: &[Vec<Complex64>],
    kappa: &Rational,
    n: usize,
    q: &QuadratureSpec,
) -> Result<FkReport> {
    if points.len() < 2 {
        return Err(Error::InvalidInput("need at least two evaluation points".into()));
    }
    for z in points {
        if z.len() != big_k {
            return Err(Error::InvalidInput(format!("each point needs {big_k} coordinates")));
        }
        for i in 0..z.len() {
            for j in i + 1..z.len() {
                if z[i] == z[j] {
                    return Err(Error::SingularPoint { i: i + 1, j: j + 1 });
                }
            }
        }
    }
    let top = n + big_k - 1;
    let (mt, diagnostics) = MomentTable::meixner_pollaczek(kappa, 2 * top + 2, q)?;
    let family = orthopoly_from_moments(&mt, top)?;
    let pk = ConeParams::new(big_k, int(2))?;
    let rect = Partition::rectangle(n, big_k);
    let deviation_for = |nu: &Rational| -> Result<(Complex64, f64)> {
        let (qpoly, _) = mp_q_det(&rect, nu, &pk)?;
        let ratio_at = |z: &[Complex64]| {
            let iz: Vec<Complex64> = z.iter().map(|&x| Complex64::i() * x).collect();
            fk_value(&family, n, z) / qpoly.poly.eval_complex(&iz)
        };
        let c = ratio_at(&points[0]);
        let mut worst: f64 = 0.0;
        for z in &points[1..] {
            worst = worst.max((ratio_at(z) - c).norm() / c.norm());
        }
        Ok((c, worst))
    };
    let (constant, deviation) = deviation_for(&(kappa + int(big_k as i64 - 1)))?;
    let (_, literal_deviation) = deviation_for(kappa)?;
    Ok(FkReport { constant, deviation, literal_deviation, diagnostics })
}

/// Direct `n`-fold quadrature of `Z_n` next to `n! h_0 ⋯ h_{n-1}` (`d = 2`).
pub fn partition_function_check(
    kappa: &Rational,
    n: usize,
    q: &QuadratureSpec,
    exec: &dyn Executor,
) -> Result<(f64, f64)> {
    let w = BarnesWeight::from_kappa(ConeParams::new(n, int(2))?, kappa.clone())?;
    let (direct, _) = w.partition_function(q, exec)?;
    let (mt, _) = MomentTable::meixner_pollaczek(kappa, 2 * n + 1, q)?;
    let family = orthopoly_from_moments(&mt, n.saturating_sub(1).max(0))?;
    let product: f64 = family.norms.iter().take(n).product();
    Ok((direct, to_f64(&factorial(n)) * product))
}

/// A one-axis composite rule, exposed for reports.
pub fn grid_for(w: &BarnesWeight, degree: usize, q: &QuadratureSpec) -> (Vec<f64>, Vec<f64>) {
    let spec = w.adjusted(q);
    let radius = spec.radius.unwrap_or_else(|| crate::quadrature::truncation_radius(w.growth(degree), spec.tail_tolerance));
    let panels = libm::ceil(2.0 * radius / spec.panel_width).max(1.0) as usize;
    composite_rule(radius, panels, spec.order)
}

/// Boxed integrand helper for callers assembling several moments at once.
pub fn boxed<F: Fn(&[f64]) -> Vec<Complex64> + Sync + 'static>(f: F) -> Box<dyn Fn(&[f64]) -> Vec<Complex64> + Sync> {
    Box::new(f)
}
