//! Formal shift operators `T φ_s = Σ_μ c_μ(s) φ_{s+μ}` with rational-function
//! coefficients, and their action on spherical polynomials.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cone::ConeParams;
use crate::error::{Error, Result};
use crate::jack::spherical_phi;
use crate::partition::Partition;
use crate::poly::Poly;
use crate::rational::{int, ratio, Rational};
use crate::sympoly::SymPoly;

/// `c_0 + Σ c_i s_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub constant: Rational,
    pub coeffs: Vec<Rational>,
}

impl LinearForm {
    pub fn constant(nvars: usize, c: Rational) -> Self {
        LinearForm { constant: c, coeffs: vec![Rational::zero(); nvars] }
    }

    /// `c_0 + s_i`.
    pub fn var_plus(nvars: usize, i: usize, c: Rational) -> Self {
        let mut f = LinearForm::constant(nvars, c);
        f.coeffs[i] = Rational::one();
        f
    }

    /// `s_i - s_j + c`.
    pub fn difference(nvars: usize, i: usize, j: usize, c: Rational) -> Self {
        let mut f = LinearForm::constant(nvars, c);
        f.coeffs[i] += Rational::one();
        f.coeffs[j] -= Rational::one();
        f
    }

    pub fn eval(&self, s: &[Rational]) -> Rational {
        let mut acc = self.constant.clone();
        for (c, x) in self.coeffs.iter().zip(s) {
            if !c.is_zero() {
                acc += c * x;
            }
        }
        acc
    }

    /// The form of `s ↦ f(s + t)`.
    pub fn translate(&self, t: &[Rational]) -> Self {
        LinearForm { constant: self.eval(t), coeffs: self.coeffs.clone() }
    }

    /// The form of `s ↦ f(-s)`.
    pub fn reflect(&self) -> Self {
        LinearForm { constant: self.constant.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn negate(&self) -> Self {
        LinearForm { constant: -&self.constant, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// `coeff · Π f_i^{e_i}` with integer exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatTerm {
    pub coeff: Rational,
    pub factors: Vec<(LinearForm, i32)>,
}

impl RatTerm {
    fn eval(&self, s: &[Rational]) -> Result<Rational> {
        let mut acc = self.coeff.clone();
        for (f, e) in &self.factors {
            let v = f.eval(s);
            if *e < 0 && v.is_zero() {
                return Err(Error::ZeroDenominator(format!("factor vanishes at {s:?}")));
            }
            acc *= num_traits::pow::Pow::pow(&v, *e);
        }
        Ok(acc)
    }

    fn map_forms(&self, g: impl Fn(&LinearForm) -> LinearForm) -> Self {
        RatTerm { coeff: self.coeff.clone(), factors: self.factors.iter().map(|(f, e)| (g(f), *e)).collect() }
    }
}

/// Finite sum of [`RatTerm`]s; no normal form is maintained.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RatFn {
    pub terms: Vec<RatTerm>,
}

impl RatFn {
    pub fn constant(c: Rational) -> Self {
        RatFn { terms: vec![RatTerm { coeff: c, factors: Vec::new() }] }
    }

    pub fn product(coeff: Rational, factors: Vec<(LinearForm, i32)>) -> Self {
        RatFn { terms: vec![RatTerm { coeff, factors }] }
    }

    pub fn linear(f: LinearForm) -> Self {
        RatFn::product(Rational::one(), vec![(f, 1)])
    }

    pub fn eval(&self, s: &[Rational]) -> Result<Rational> {
        let mut acc = Rational::zero();
        for t in &self.terms {
            acc += t.eval(s)?;
        }
        Ok(acc)
    }

    /// `s ↦ f(s + t)`.
    pub fn translate(&self, t: &[Rational]) -> Self {
        RatFn { terms: self.terms.iter().map(|x| x.map_forms(|f| f.translate(t))).collect() }
    }

    /// `s ↦ f(-s)`.
    pub fn reflect(&self) -> Self {
        RatFn { terms: self.terms.iter().map(|x| x.map_forms(LinearForm::reflect)).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RatFn {
            terms: self
                .terms
                .iter()
                .map(|t| RatTerm { coeff: &t.coeff * c, factors: t.factors.clone() })
                .collect(),
        }
    }

    pub fn add(&self, other: &RatFn) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        RatFn { terms }
    }

    pub fn mul(&self, other: &RatFn) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let mut factors = a.factors.clone();
                factors.extend(b.factors.iter().cloned());
                terms.push(RatTerm { coeff: &a.coeff * &b.coeff, factors });
            }
        }
        RatFn { terms }
    }
}

/// `α_j(s) = Π_{k≠j} (s_j - s_k + d/2)/(s_j - s_k)` (0-based `j`).
pub fn alpha_fn(j: usize, p: &ConeParams) -> RatFn {
    let n = p.rank();
    let half_d = p.theta().clone();
    let mut factors = Vec::with_capacity(2 * n);
    for k in (0..n).filter(|&k| k != j) {
        factors.push((LinearForm::difference(n, j, k, half_d.clone()), 1));
        factors.push((LinearForm::difference(n, j, k, Rational::zero()), -1));
    }
    RatFn::product(Rational::one(), factors)
}

fn unit(n: usize, j: usize, sign: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[j] = sign;
    v
}

fn as_rational(mu: &[i64]) -> Vec<Rational> {
    mu.iter().map(|&x| int(x)).collect()
}

/// `T φ_s = Σ_μ c_μ(s) φ_{s+μ}`; read as a difference operator it is
/// `(T f)(s) = Σ_μ c_μ(s) f(s+μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalShiftOperator {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, RatFn>,
}

impl FormalShiftOperator {
    pub fn zero(nvars: usize) -> Self {
        FormalShiftOperator { nvars, terms: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, RatFn> {
        &self.terms
    }

    pub fn add_term(&mut self, mu: Vec<i64>, c: RatFn) {
        match self.terms.get_mut(&mu) {
            Some(old) => *old = old.add(&c),
            None => {
                self.terms.insert(mu, c);
            }
        }
    }

    pub fn add(&self, other: &FormalShiftOperator) -> Self {
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        FormalShiftOperator {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(mu, f)| (mu.clone(), f.scale(c))).collect(),
        }
    }

    /// `self ∘ inner` on the family `φ_s`: coefficient `b_μ(s) a_ν(s+μ)` at `μ+ν`.
    pub fn compose(&self, inner: &FormalShiftOperator) -> Self {
        let mut out = FormalShiftOperator::zero(self.nvars);
        for (mu, b) in &inner.terms {
            let t = as_rational(mu);
            for (nu, a) in &self.terms {
                let shift: Vec<i64> = mu.iter().zip(nu).map(|(x, y)| x + y).collect();
                out.add_term(shift, b.mul(&a.translate(&t)));
            }
        }
        out
    }

    /// Coefficients `c_μ(s)` at an exact point.
    pub fn eval_coefficients(&self, s: &[Rational]) -> Result<BTreeMap<Vec<i64>, Rational>> {
        let mut out = BTreeMap::new();
        for (mu, c) in &self.terms {
            out.insert(mu.clone(), c.eval(s)?);
        }
        Ok(out)
    }

    /// `(T f)(s) = Σ_μ c_μ(s) f(s + μ)`.
    pub fn apply_to_function(&self, f: impl Fn(&[Rational]) -> Result<Rational>, s: &[Rational]) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (mu, c) in &self.terms {
            let cv = c.eval(s)?;
            if cv.is_zero() {
                continue;
            }
            let shifted: Vec<Rational> = s.iter().zip(mu).map(|(x, &m)| x + int(m)).collect();
            acc += cv * f(&shifted)?;
        }
        Ok(acc)
    }

    /// Whether two operators have equal coefficients at every given point.
    pub fn agrees_at(&self, other: &FormalShiftOperator, points: &[Vec<Rational>]) -> Result<bool> {
        let keys: alloc::collections::BTreeSet<&Vec<i64>> = self.terms.keys().chain(other.terms.keys()).collect();
        for s in points {
            for mu in &keys {
                let a = self.terms.get(*mu).map_or(Ok(Rational::zero()), |c| c.eval(s))?;
                let b = other.terms.get(*mu).map_or(Ok(Rational::zero()), |c| c.eval(s))?;
                if a != b {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Operators with explicit shift-calculus images.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftKind {
    /// Multiplication by `tr x`.
    MultTrace,
    /// `tr ∇`.
    TraceGrad,
    /// `⟨∇ ·, x²⟩`.
    GradXsq,
    /// `⟨z² - e, ∇⟩ + ν tr z`.
    D2,
    /// `-(u∇² + ν∇) + tr u` on the cone, acting on `φ_s(u)`.
    D3,
    /// The difference operator `D_ν` in the spectral variable.
    D4,
}

impl ShiftKind {
    pub const ALL: [ShiftKind; 6] =
        [ShiftKind::MultTrace, ShiftKind::TraceGrad, ShiftKind::GradXsq, ShiftKind::D2, ShiftKind::D3, ShiftKind::D4];

    pub fn name(self) -> &'static str {
        match self {
            ShiftKind::MultTrace => "mult_trace",
            ShiftKind::TraceGrad => "trace_grad",
            ShiftKind::GradXsq => "grad_xsq",
            ShiftKind::D2 => "D2",
            ShiftKind::D3 => "D3",
            ShiftKind::D4 => "D4",
        }
    }
}

/// Shift-calculus image of `kind`. Writing `q = (d/4)(n-1)`:
///
/// ```text
/// mult_trace  +ε_j: α_j(s)
/// trace_grad  -ε_j: (s_j + q) α_j(-s)
/// grad_xsq    +ε_j: (s_j - q) α_j(s)
/// D2          +ε_j: (s_j + ν - q) α_j(s)       -ε_j: -(s_j + q) α_j(-s)
/// D3          +ε_j: α_j(s)                     -ε_j: -(s_j + q)(s_j + ν - 1 - q) α_j(-s)
/// D4          +ε_j: (s_j + ν/2 - q) α_j(s)     -ε_j: (-s_j + ν/2 - q) α_j(-s)
/// ```
pub fn shift_operator(kind: ShiftKind, nu: &Rational, p: &ConeParams) -> FormalShiftOperator {
    let n = p.rank();
    let q = p.quarter_shift();
    let half_nu = nu / int(2);
    let mut op = FormalShiftOperator::zero(n);
    for j in 0..n {
        let up_alpha = alpha_fn(j, p);
        let down_alpha = up_alpha.reflect();
        let lin = |c: Rational| RatFn::linear(LinearForm::var_plus(n, j, c));
        let (up, down) = match kind {
            ShiftKind::MultTrace => (Some(up_alpha), None),
            ShiftKind::TraceGrad => (None, Some(lin(q.clone()).mul(&down_alpha))),
            ShiftKind::GradXsq => (Some(lin(-q.clone()).mul(&up_alpha)), None),
            ShiftKind::D2 => (
                Some(lin(nu - &q).mul(&up_alpha)),
                Some(lin(q.clone()).mul(&down_alpha).scale(&-Rational::one())),
            ),
            ShiftKind::D3 => (
                Some(up_alpha),
                Some(
                    lin(q.clone())
                        .mul(&lin(nu - int(1) - &q))
                        .mul(&down_alpha)
                        .scale(&-Rational::one()),
                ),
            ),
            ShiftKind::D4 => (
                Some(lin(&half_nu - &q).mul(&up_alpha)),
                Some(RatFn::linear(LinearForm::var_plus(n, j, &q - &half_nu).negate()).mul(&down_alpha)),
            ),
        };
        if let Some(c) = up {
            op.add_term(unit(n, j, 1), c);
        }
        if let Some(c) = down {
            op.add_term(unit(n, j, -1), c);
        }
    }
    op
}

/// Applies the differential operator behind `kind` to `Φ_m` on the diagonal,
/// where `∇f = diag(∂_j f)` for invariant `f`.
pub fn apply_differential(kind: ShiftKind, f: &SymPoly, nu: &Rational) -> Result<SymPoly> {
    let n = f.nvars();
    let poly = f.to_poly();
    let trace = {
        let mut t = Poly::zero(n);
        for i in 0..n {
            t = &t + &Poly::var(n, i);
        }
        t
    };
    let mut out = Poly::zero(n);
    match kind {
        ShiftKind::MultTrace => out = &trace * &poly,
        ShiftKind::TraceGrad => {
            for i in 0..n {
                out = &out + &poly.partial(i);
            }
        }
        ShiftKind::GradXsq => {
            for i in 0..n {
                out = &out + &poly.partial(i).mul_var(i, 2);
            }
        }
        ShiftKind::D2 => {
            for i in 0..n {
                let d = poly.partial(i);
                out = &out + &(&d.mul_var(i, 2) - &d);
            }
            out = &out + &(&trace * &poly).scale(nu);
        }
        ShiftKind::D3 | ShiftKind::D4 => {
            return Err(Error::Unsupported(format!("{} has no polynomial-side form", kind.name())));
        }
    }
    Ok(SymPoly::from_poly(&out))
}

/// Checks `(kind) Φ_m = Σ_μ c_μ(m - ρ) Φ_{m+μ}` exactly; shifts leaving the set
/// of partitions must carry a zero coefficient.
pub fn check_on_phi(kind: ShiftKind, m: &Partition, nu: &Rational, p: &ConeParams) -> Result<bool> {
    let lhs = apply_differential(kind, &spherical_phi(m, p)?, nu)?;
    let s = p.spectral_point(m);
    let coeffs = shift_operator(kind, nu, p).eval_coefficients(&s)?;
    let mut rhs = SymPoly::zero(p.rank());
    let padded = m.padded(p.rank());
    for (mu, c) in coeffs {
        if c.is_zero() {
            continue;
        }
        let target: Option<Vec<usize>> =
            padded.iter().zip(&mu).map(|(&x, &d)| usize::try_from(x as i64 + d).ok()).collect();
        let target = match target.and_then(|t| Partition::new(&t).ok()) {
            Some(t) => t,
            None => return Ok(false),
        };
        rhs = &rhs + &spherical_phi(&target, p)?.scale(&c);
    }
    Ok(lhs == rhs)
}

/// `Γ_Ω(s + ν/2 + ρ + μ) / Γ_Ω(s + ν/2 + ρ)` for `μ = ±ε_j`.
fn gamma_shift_ratio(s: &[Rational], j: usize, up: bool, nu: &Rational, p: &ConeParams) -> Result<Rational> {
    // the j-th gamma argument is s_j + ν/2 - q
    let base = &s[j] + nu / int(2) - p.quarter_shift();
    if up {
        Ok(base)
    } else {
        let b = base - int(1);
        if b.is_zero() {
            return Err(Error::ZeroDenominator("gamma ratio".into()));
        }
        Ok(b.recip())
    }
}

/// Conjugating the transpose of `D3` by the modified Fourier transform gives
/// `D4`: `c^{(4)}_μ(s) = c^{(3)}_μ(s - ν/2) · Γ_Ω(s+ν/2+ρ+μ)/Γ_Ω(s+ν/2+ρ)`.
/// Checked at the given points.
pub fn d3_to_d4_check(nu: &Rational, p: &ConeParams, points: &[Vec<Rational>]) -> Result<bool> {
    let n = p.rank();
    let d3 = shift_operator(ShiftKind::D3, nu, p);
    let d4 = shift_operator(ShiftKind::D4, nu, p);
    for s in points {
        let moved: Vec<Rational> = s.iter().map(|x| x - nu / int(2)).collect();
        let c3 = d3.eval_coefficients(&moved)?;
        let c4 = d4.eval_coefficients(s)?;
        for j in 0..n {
            for (up, sign) in [(true, 1), (false, -1)] {
                let mu = unit(n, j, sign);
                let lhs = &c3[&mu] * gamma_shift_ratio(s, j, up, nu, p)?;
                if lhs != c4[&mu] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Deterministic pseudo-random rational points with denominators in `1..=12`.
pub fn generic_points(nvars: usize, count: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..nvars)
                .map(|_| {
                    let num = (rng.next_u32() % 201) as i64 - 100;
                    let den = (rng.next_u32() % 12) as i64 + 1;
                    ratio(num, den)
                })
                .collect()
        })
        .collect()
}
