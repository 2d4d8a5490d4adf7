//! Multivariate Laguerre and Meixner–Pollaczek polynomials, the `d = 2`
//! determinantal routes, the difference operator, the Pieri rule and the
//! generating-function checks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::cone::{pochhammer_generalized, ConeParams};
use crate::error::{Error, Result};
use crate::interp::{gamma_k, InterpolationGrid};
use crate::jack::{binomial_row_of, dim_dk, expand_in_phi, jack_p, spherical_phi};
use crate::partition::Partition;
use crate::poly::Poly;
use crate::rational::{binomial, factorial, int, pow, ratio, to_f64, Rational};
use crate::shift::{alpha_fn, generic_points, shift_operator, ShiftKind};
use crate::sympoly::{SpectralPoly, SymPoly};
use crate::univariate::{laguerre, mp_q_family};

/// `L_m^{(ν-1)}` as a symmetric polynomial in `x`; the Laguerre function is
/// `Ψ(u) = e^{-tr u} L(2u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvLaguerre {
    pub poly: SymPoly,
    pub nu: Rational,
    pub m: Partition,
}

impl MvLaguerre {
    /// `Ψ_m^{(ν)}(u)`.
    pub fn psi(&self, u: &[f64]) -> f64 {
        let doubled: Vec<f64> = u.iter().map(|x| 2.0 * x).collect();
        libm::exp(-u.iter().sum::<f64>()) * self.poly.eval_f64(&doubled)
    }
}

/// `Q_m^{(ν)}` with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPPoly {
    pub poly: SpectralPoly,
    pub nu: Rational,
    pub m: Partition,
    pub rank: usize,
    pub mult: Rational,
}

impl MPPoly {
    /// Only monomials of weight `≡ |m| (mod 2)` occur.
    pub fn has_expected_parity(&self) -> bool {
        self.poly.has_parity(self.m.weight() % 2 == 1)
    }
}

fn check_d2(p: &ConeParams) -> Result<()> {
    if *p.mult() != int(2) {
        return Err(Error::Unsupported(format!("determinantal route needs d = 2, got d = {}", p.mult())));
    }
    Ok(())
}

fn pochhammer_nonzero(nu: &Rational, k: &Partition, p: &ConeParams) -> Result<Rational> {
    let v = pochhammer_generalized(nu, k, p)?;
    if v.is_zero() {
        return Err(Error::PochhammerPole { what: format!("({nu})_k"), partition: k.clone() });
    }
    Ok(v)
}

/// `L_m^{(ν-1)}(x) = (ν)_m/(N/n)_m Σ_{k⊆m} (m choose k) Φ_k(-x) / (ν)_k`.
pub fn laguerre_mv(m: &Partition, nu: &Rational, p: &ConeParams) -> Result<MvLaguerre> {
    m.check_rank(p.rank())?;
    let pref = pochhammer_generalized(nu, m, p)? / pochhammer_generalized(&p.n_over_rank(), m, p)?;
    let mut acc = SymPoly::zero(p.rank());
    for (k, b) in binomial_row_of(m, p)?.iter() {
        let mut c = b / pochhammer_nonzero(nu, k, p)?;
        if k.weight() % 2 == 1 {
            c = -c;
        }
        acc = &acc + &spherical_phi(k, p)?.scale(&c);
    }
    Ok(MvLaguerre { poly: acc.scale(&pref), nu: nu.clone(), m: m.clone() })
}

/// `Q_m^{(ν)}(s) = (ν)_m/(N/n)_m Σ_{k⊆m} 2^{|k|} (m choose k) γ_k(-s-ν/2) / (ν)_k`.
pub fn mp_q_mv(m: &Partition, nu: &Rational, p: &ConeParams) -> Result<MPPoly> {
    m.check_rank(p.rank())?;
    let pref = pochhammer_generalized(nu, m, p)? / pochhammer_generalized(&p.n_over_rank(), m, p)?;
    let mut acc = SymPoly::zero(p.rank());
    let shift = -(nu / int(2));
    for (k, b) in binomial_row_of(m, p)?.iter() {
        let c = b * pow(&int(2), k.weight()) / pochhammer_nonzero(nu, k, p)?;
        let g = gamma_k(k, p)?.affine_substitute(&-Rational::one(), &shift);
        acc = &acc + &g.scale(&c);
    }
    Ok(MPPoly { poly: acc.scale(&pref), nu: nu.clone(), m: m.clone(), rank: p.rank(), mult: p.mult().clone() })
}

/// Schur polynomial `s_m` in `n` variables.
pub fn schur(m: &Partition, n: usize) -> Result<SymPoly> {
    jack_p(m, &Rational::one(), n)
}

/// `s_m(1,…,1)`.
pub fn schur_dim(m: &Partition, n: usize) -> Result<Rational> {
    Ok(schur(m, n)?.eval_ones())
}

/// `δ! = Π_j (n-j)!`.
pub fn delta_factorial(n: usize) -> Rational {
    (0..n).map(factorial).product()
}

fn hua_sign(n: usize) -> i64 {
    if (n * (n.saturating_sub(1)) / 2) % 2 == 1 {
        -1
    } else {
        1
    }
}

fn hua_need(maxdeg: usize, n: usize) -> usize {
    maxdeg + n.saturating_sub(1)
}

/// Schur coefficients of `det(f_i(w_j)) / V(w)` with `V(w) = Π_{i<j}(w_j - w_i)`:
/// `a_m = (-1)^{n(n-1)/2} det(c^{(i)}_{m_j+δ_j})` for `|m| ≤ maxdeg`.
pub fn hua_expand(series: &[Vec<Rational>], maxdeg: usize) -> Result<BTreeMap<Partition, Rational>> {
    let n = series.len();
    let need = hua_need(maxdeg, n);
    if let Some(have) = series.iter().map(|s| s.len()).min() {
        if have <= need {
            return Err(Error::Truncation { have: have.saturating_sub(1), need });
        }
    }
    let sign = int(hua_sign(n));
    let mut out = BTreeMap::new();
    for m in Partition::all_up_to(maxdeg, n) {
        let idx: Vec<usize> = m.padded(n).iter().enumerate().map(|(j, x)| x + n - 1 - j).collect();
        let mat: Vec<Vec<Rational>> = series.iter().map(|c| idx.iter().map(|&k| c[k].clone()).collect()).collect();
        let det = crate::linalg::determinant(&mat);
        if !det.is_zero() {
            out.insert(m, det * &sign);
        }
    }
    Ok(out)
}

/// Complex-coefficient version of [`hua_expand`]; every `|m| ≤ maxdeg` is present.
pub fn hua_expand_complex(series: &[Vec<Complex64>], maxdeg: usize) -> Result<BTreeMap<Partition, Complex64>> {
    let n = series.len();
    let need = hua_need(maxdeg, n);
    if let Some(have) = series.iter().map(|s| s.len()).min() {
        if have <= need {
            return Err(Error::Truncation { have: have.saturating_sub(1), need });
        }
    }
    let sign = hua_sign(n) as f64;
    let mut out = BTreeMap::new();
    for m in Partition::all_up_to(maxdeg, n) {
        let idx: Vec<usize> = m.padded(n).iter().enumerate().map(|(j, x)| x + n - 1 - j).collect();
        let mat: Vec<Vec<Complex64>> = series.iter().map(|c| idx.iter().map(|&k| c[k]).collect()).collect();
        out.insert(m, crate::linalg::determinant_complex(&mat) * sign);
    }
    Ok(out)
}

/// `det(P_{k_j}(x_i)) / V(x)` as a symmetric polynomial, through [`hua_expand`].
fn alternant_over_vandermonde(polys: &[Vec<Rational>], n: usize) -> Result<SymPoly> {
    let total: usize = polys.iter().map(|c| c.len().saturating_sub(1)).sum();
    let maxdeg = total.saturating_sub(n * n.saturating_sub(1) / 2);
    let padded: Vec<Vec<Rational>> = polys
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.resize(maxdeg + n, Rational::zero());
            c
        })
        .collect();
    let mut acc = SymPoly::zero(n);
    for (lambda, a) in hua_expand(&padded, maxdeg)? {
        acc = &acc + &schur(&lambda, n)?.scale(&a);
    }
    Ok(acc)
}

/// Determinantal Laguerre polynomial at `d = 2`:
/// `L_m^{(ν-1)}(x) = δ! det(L^{(ν-n)}_{m_j+δ_j}(x_i)) / (V(x) s_m(1^n))`.
pub fn laguerre_mv_det(m: &Partition, nu: &Rational, p: &ConeParams) -> Result<MvLaguerre> {
    check_d2(p)?;
    m.check_rank(p.rank())?;
    let n = p.rank();
    let alpha = nu - int(n as i64);
    let polys: Vec<Vec<Rational>> = m
        .padded(n)
        .iter()
        .enumerate()
        .map(|(j, x)| laguerre(x + n - 1 - j, &alpha).coeffs().to_vec())
        .collect();
    let alt = alternant_over_vandermonde(&polys, n)?;
    let c = delta_factorial(n) / schur_dim(m, n)?;
    Ok(MvLaguerre { poly: alt.scale(&c), nu: nu.clone(), m: m.clone() })
}

/// `δ! (-2)^{-n(n-1)/2} det(q^{(ν-n+1)}_{m_j+δ_j}(s_i)) / V(s)`, as printed.
fn mp_q_det_raw(m: &Partition, nu: &Rational, n: usize) -> Result<SymPoly> {
    let shifted = nu - int(n as i64) + int(1);
    let padded = m.padded(n);
    let top = padded.first().copied().unwrap_or(0) + n - 1;
    let family = mp_q_family(top, &shifted);
    let polys: Vec<Vec<Rational>> =
        padded.iter().enumerate().map(|(j, x)| family[x + n - 1 - j].coeffs().to_vec()).collect();
    let alt = alternant_over_vandermonde(&polys, n)?;
    let pairs = (n * n.saturating_sub(1) / 2) as i32;
    let c = delta_factorial(n) * num_traits::pow::Pow::pow(&int(-2), -pairs);
    Ok(alt.scale(&c))
}

/// Orientation constant of the printed determinantal formula: its value at `m = ∅`.
pub fn mp_q_det_orientation(nu: &Rational, n: usize) -> Result<Rational> {
    Ok(mp_q_det_raw(&Partition::empty(), nu, n)?.coeff(&Partition::empty()))
}

/// Determinantal `Q_m` at `d = 2`, divided by `s_m(1^n)` and by the orientation
/// constant; returns the polynomial and that constant.
pub fn mp_q_det(m: &Partition, nu: &Rational, p: &ConeParams) -> Result<(MPPoly, Rational)> {
    check_d2(p)?;
    m.check_rank(p.rank())?;
    let n = p.rank();
    let orient = mp_q_det_orientation(nu, n)?;
    let raw = mp_q_det_raw(m, nu, n)?;
    let poly = raw.scale(&(schur_dim(m, n)? * &orient).recip());
    Ok((MPPoly { poly, nu: nu.clone(), m: m.clone(), rank: n, mult: p.mult().clone() }, orient))
}

/// `α_j(s) = Π_{k≠j} (s_j - s_k + d/2)/(s_j - s_k)` for every `j`.
pub fn alpha_pieri(s: &[Rational], p: &ConeParams) -> Result<Vec<Rational>> {
    let n = p.rank();
    if s.len() != n {
        return Err(Error::InvalidInput(format!("expected {n} coordinates, got {}", s.len())));
    }
    for i in 0..n {
        for j in i + 1..n {
            if s[i] == s[j] {
                return Err(Error::SingularPoint { i: i + 1, j: j + 1 });
            }
        }
    }
    (0..n).map(|j| alpha_fn(j, p).eval(s)).collect()
}

/// `D_ν f` as a symmetric polynomial: evaluate on `m - ρ + t(1,…,1)` with
/// `|m| ≤ deg f + 1`, interpolate, then confirm at extra generic points.
pub fn mp_difference_apply(f: &SpectralPoly, nu: &Rational, p: &ConeParams) -> Result<SpectralPoly> {
    let n = p.rank();
    let op = shift_operator(ShiftKind::D4, nu, p);
    let eval_f = |x: &[Rational]| Ok(f.eval(x));
    let bound = f.degree().unwrap_or(0) + 1;
    let grid = InterpolationGrid::lattice(bound, p, &ratio(1, 7));
    let mut values = Vec::with_capacity(grid.nodes.len());
    for s in &grid.nodes {
        values.push(vec![op.apply_to_function(eval_f, s)?]);
    }
    let out = grid
        .interpolate(&values, n)
        .and_then(|mut v| v.pop())
        .ok_or_else(|| Error::Internal("difference interpolation grid is singular".into()))?;
    for s in generic_points(n, 5, 0x5eed) {
        match op.apply_to_function(eval_f, &s) {
            Ok(v) if v != out.eval(&s) => {
                return Err(Error::Internal("difference operator result is not polynomial".into()));
            }
            Ok(_) | Err(Error::ZeroDenominator(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Eigenvalue of `D_ν` on `Q_m`: `2|m| + nν`.
pub fn difference_eigenvalue(m: &Partition, nu: &Rational, p: &ConeParams) -> Rational {
    int(2 * m.weight() as i64) + int(p.rank() as i64) * nu
}

fn shifted_partition(m: &Partition, j: usize, delta: i64, n: usize) -> Option<Partition> {
    if delta > 0 {
        m.add_box(j).filter(|t| t.len() <= n)
    } else {
        m.remove_box(j)
    }
}

/// Checks
/// `2Σs_j · d_m Q_m = Σ_j (m_j+ν-1-θ(j-1)) α_j(m-ε_j-ρ) d_{m-ε_j} Q_{m-ε_j}
///                   - Σ_j (m_j+1+θ(n-j)) α_j(-m-ε_j+ρ) d_{m+ε_j} Q_{m+ε_j}`
/// exactly (1-based `j`; terms off the partition lattice are dropped).
pub fn mp_pieri_check(m: &Partition, nu: &Rational, p: &ConeParams) -> Result<bool> {
    let n = p.rank();
    let theta = p.theta();
    let trace = SymPoly::monomial(Partition::column(1), n)?.scale(&int(2));
    let lhs = (&trace * &mp_q_mv(m, nu, p)?.poly).scale(&dim_dk(m, p)?);
    let mut rhs = SymPoly::zero(n);
    let parts = m.padded(n);
    for j in 0..n {
        let mj = int(parts[j] as i64);
        if let Some(lower) = shifted_partition(m, j, -1, n) {
            let c = &mj + nu - int(1) - theta * int(j as i64);
            let a = alpha_pieri(&p.spectral_point(&lower), p)?[j].clone();
            let q = mp_q_mv(&lower, nu, p)?.poly.scale(&(c * a * dim_dk(&lower, p)?));
            rhs = &rhs + &q;
        }
        if let Some(upper) = shifted_partition(m, j, 1, n) {
            let c = &mj + int(1) + theta * int((n - 1 - j) as i64);
            let point: Vec<Rational> = p.spectral_point(&upper).into_iter().map(|x| -x).collect();
            let a = alpha_pieri(&point, p)?[j].clone();
            let q = mp_q_mv(&upper, nu, p)?.poly.scale(&(c * a * dim_dk(&upper, p)?));
            rhs = &rhs - &q;
        }
    }
    Ok(lhs == rhs)
}

/// Coefficients of `(1 + w)^a` up to `w^maxdeg`.
fn binomial_series(a: &Rational, maxdeg: usize) -> Vec<Rational> {
    (0..=maxdeg).map(|k| binomial(a, k)).collect()
}

/// Lattice form of the generating identity at `s = m + ν/2 - ρ`: the
/// `Φ_k`-coefficients of `Π(1+w_j)^{-ν} Φ_m((1-w)/(1+w))` equal
/// `d_k Q_k(m + ν/2 - ρ)` for `|k| ≤ maxdeg`.
pub fn generating_check_lattice(m: &Partition, nu: &Rational, maxdeg: usize, p: &ConeParams) -> Result<bool> {
    let n = p.rank();
    // (1-w)/(1+w) = 1 + Σ_{k≥1} 2(-1)^k w^k
    let mut cayley = vec![Rational::one()];
    for k in 1..=maxdeg {
        cayley.push(int(if k % 2 == 1 { -2 } else { 2 }));
    }
    let phi = spherical_phi(m, p)?.to_poly().compose_univariate(&cayley, maxdeg);
    let weight = Poly::product_of_univariate(n, &binomial_series(&-nu.clone(), maxdeg), maxdeg);
    let series = SymPoly::from_poly(&phi.mul_truncated(&weight, maxdeg));
    let coeffs = expand_in_phi(&series, p)?;
    let point: Vec<Rational> = p.spectral_point(m).into_iter().map(|x| x + nu / int(2)).collect();
    for k in Partition::all_up_to(maxdeg, n) {
        let expected = dim_dk(&k, p)? * mp_q_mv(&k, nu, p)?.poly.eval(&point);
        if coeffs.get(&k).cloned().unwrap_or_else(Rational::zero) != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Worst residuals of the two `d = 2` generating checks.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneratingResidual {
    /// Laguerre side against the Itzykson–Zuber closed form.
    pub laguerre: f64,
    /// Meixner–Pollaczek side against the Schur form of `φ_s`.
    pub meixner_pollaczek: f64,
}

impl GeneratingResidual {
    pub fn max(&self) -> f64 {
        self.laguerre.max(self.meixner_pollaczek)
    }
}

fn complex_binomial_series(a: Complex64, sign: f64, len: usize) -> Vec<Complex64> {
    // (1 + sign·w)^a
    let mut out = Vec::with_capacity(len);
    let mut c = Complex64::new(1.0, 0.0);
    for k in 0..len {
        out.push(c);
        c = c * (a - k as f64) / (k as f64 + 1.0) * sign;
    }
    out
}

fn series_mul(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let len = a.len().min(b.len());
    (0..len).map(|k| (0..=k).map(|i| a[i] * b[k - i]).sum()).collect()
}

fn check_distinct<T: PartialEq>(xs: &[T]) -> Result<()> {
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if xs[i] == xs[j] {
                return Err(Error::SingularPoint { i: i + 1, j: j + 1 });
            }
        }
    }
    Ok(())
}

fn vandermonde<T: Copy + core::ops::Sub<Output = T> + core::ops::Mul<Output = T>>(xs: &[T], one: T) -> T {
    let mut v = one;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            v = v * (xs[j] - xs[i]);
        }
    }
    v
}

/// Numeric `d = 2` generating checks, coefficientwise in the Schur basis of `w`.
///
/// Laguerre side: with `f_i(w) = (1-w)^{-(ν-n+1)} exp(-u_i(1+w)/(1-w))`, the
/// Hua coefficients times `δ! 2^{-n(n-1)/2} / V(-u)` must equal
/// `s_m(1^n) Ψ_m(u)`. Meixner–Pollaczek side: with
/// `g_i(w) = (1-w)^{s_i-ν/2+(n-1)/2} (1+w)^{-s_i-ν/2+(n-1)/2}`, the Hua
/// coefficients times `δ! (-2)^{-n(n-1)/2} / V(s)` must equal `s_m(1^n) Q_m(s)`.
pub fn generating_check_d2(
    nu: &Rational,
    maxdeg: usize,
    n: usize,
    s: &[Complex64],
    u: &[f64],
) -> Result<GeneratingResidual> {
    if s.len() != n || u.len() != n {
        return Err(Error::InvalidInput(format!("need {n} spectral and {n} cone coordinates")));
    }
    check_distinct(s)?;
    check_distinct(u)?;
    let p = ConeParams::new(n, int(2))?;
    let len = hua_need(maxdeg, n) + 1;
    let nuf = to_f64(nu);
    let pairs = (n * n.saturating_sub(1) / 2) as i32;
    let dfact = to_f64(&delta_factorial(n));

    let f_series: Vec<Vec<Complex64>> = u
        .iter()
        .map(|&ui| {
            // exp(h) with h = -u(1+w)/(1-w) = -u - 2u Σ_{k≥1} w^k
            let mut g = vec![Complex64::new(libm::exp(-ui), 0.0)];
            for k in 1..len {
                let acc: Complex64 = (1..=k).map(|j| g[k - j] * (j as f64 * -2.0 * ui)).sum();
                g.push(acc / k as f64);
            }
            let pre = complex_binomial_series(Complex64::new(-(nuf - n as f64 + 1.0), 0.0), -1.0, len);
            series_mul(&pre, &g)
        })
        .collect();
    let lag = hua_expand_complex(&f_series, maxdeg)?;
    let neg_u: Vec<f64> = u.iter().map(|x| -x).collect();
    let lag_scale = dfact * libm::pow(2.0, -(pairs as f64)) / vandermonde(&neg_u, 1.0);
    let mut lag_res: f64 = 0.0;
    for (m, b) in &lag {
        let expect = to_f64(&schur_dim(m, n)?) * laguerre_mv(m, nu, &p)?.psi(u);
        let got = b * lag_scale;
        lag_res = lag_res.max((got - expect).norm() / expect.abs().max(1.0));
    }

    let half = Complex64::new(nuf / 2.0 - (n as f64 - 1.0) / 2.0, 0.0);
    let g_series: Vec<Vec<Complex64>> = s
        .iter()
        .map(|&si| {
            let a = complex_binomial_series(si - half, -1.0, len);
            let b = complex_binomial_series(-si - half, 1.0, len);
            series_mul(&a, &b)
        })
        .collect();
    let mp = hua_expand_complex(&g_series, maxdeg)?;
    let mp_scale = Complex64::new(dfact * libm::pow(-2.0, -(pairs as f64)), 0.0)
        / vandermonde(s, Complex64::new(1.0, 0.0));
    let mut mp_res: f64 = 0.0;
    for (m, b) in &mp {
        let expect = mp_q_mv(m, nu, &p)?.poly.eval_complex(s) * to_f64(&schur_dim(m, n)?);
        let got = b * mp_scale;
        mp_res = mp_res.max((got - expect).norm() / expect.norm().max(1.0));
    }
    Ok(GeneratingResidual { laguerre: lag_res, meixner_pollaczek: mp_res })
}
