//! Composite Gauss–Legendre rules on `[-Λ, Λ]` with tail-based truncation and
//! panel doubling.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Quadrature controls; every field can be overridden from the CLI.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureSpec {
    /// Truncation radius; derived from the tail bound when `None`.
    pub radius: Option<f64>,
    /// Gauss–Legendre points per panel.
    pub order: usize,
    /// Initial panel width.
    pub panel_width: f64,
    /// Relative agreement required between successive refinements.
    pub tolerance: f64,
    /// Target for the analytic tail estimate `Λ^p e^{-πΛ}`.
    pub tail_tolerance: f64,
    pub max_doublings: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            radius: None,
            order: 16,
            panel_width: 1.0,
            tolerance: 1e-10,
            tail_tolerance: 1e-15,
            max_doublings: 4,
        }
    }
}

/// What the integrator actually did.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureDiagnostics {
    pub radius: f64,
    pub growth_exponent: f64,
    pub tail_estimate: f64,
    pub panels: usize,
    pub order: usize,
    pub nodes_per_axis: usize,
    pub doublings: usize,
    pub last_change: f64,
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`, Newton iteration on `P_order`.
pub fn gauss_legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = Vec::with_capacity(order);
    let mut weights = Vec::with_capacity(order);
    for i in 0..order {
        let mut x = libm::cos(PI * (i as f64 + 0.75) / (order as f64 + 0.5));
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=order {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            if order == 1 {
                p0 = 1.0;
                p1 = x;
            }
            dp = order as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes.push(x);
        weights.push(2.0 / ((1.0 - x * x) * dp * dp));
    }
    (nodes, weights)
}

/// Composite rule with `panels` equal panels on `[-radius, radius]`.
pub fn composite_rule(radius: f64, panels: usize, order: usize) -> (Vec<f64>, Vec<f64>) {
    let (gx, gw) = gauss_legendre(order);
    let h = 2.0 * radius / panels as f64;
    let mut nodes = Vec::with_capacity(panels * order);
    let mut weights = Vec::with_capacity(panels * order);
    for p in 0..panels {
        let mid = -radius + h * (p as f64 + 0.5);
        for (x, w) in gx.iter().zip(&gw) {
            nodes.push(mid + 0.5 * h * x);
            weights.push(0.5 * h * w);
        }
    }
    (nodes, weights)
}

/// `Λ^p e^{-πΛ}`.
pub fn tail_estimate(radius: f64, growth: f64) -> f64 {
    libm::exp(growth.max(0.0) * libm::log(radius) - PI * radius)
}

/// Smallest convenient `Λ ≥ 1` with `Λ^p e^{-πΛ} ≤ tol`.
pub fn truncation_radius(growth: f64, tol: f64) -> f64 {
    let p = growth.max(0.0);
    let mut r: f64 = (-libm::log(tol) / PI).max(1.0);
    for _ in 0..60 {
        let next = ((p * libm::log(r) - libm::log(tol)) / PI).max(1.0);
        if (next - r).abs() < 1e-9 {
            r = next;
            break;
        }
        r = next;
    }
    libm::ceil(r)
}

/// Runs `eval(nodes, weights)` on successively doubled panel counts until two
/// results agree to `spec.tolerance` (relative to `max(1, |I|)`).
pub fn integrate_adaptive<F>(
    spec: &QuadratureSpec,
    growth: f64,
    eval: F,
) -> Result<(Complex64, QuadratureDiagnostics)>
where
    F: FnMut(&[f64], &[f64]) -> Result<Complex64>,
{
    integrate_adaptive_with(spec, growth, eval, |a, b| (a - b).norm() / a.norm().max(1.0))
}

/// Generalised driver: `change(current, previous)` decides convergence.
pub fn integrate_adaptive_with<T, F, C>(
    spec: &QuadratureSpec,
    growth: f64,
    mut eval: F,
    change: C,
) -> Result<(T, QuadratureDiagnostics)>
where
    F: FnMut(&[f64], &[f64]) -> Result<T>,
    C: Fn(&T, &T) -> f64,
{
    if spec.order == 0 || spec.panel_width <= 0.0 || spec.tolerance <= 0.0 {
        return Err(Error::InvalidInput("quadrature order, panel width and tolerance must be positive".into()));
    }
    let radius = match spec.radius {
        Some(r) if r > 0.0 => r,
        Some(_) => return Err(Error::InvalidInput("quadrature radius must be positive".into())),
        None => truncation_radius(growth, spec.tail_tolerance),
    };
    let tail = tail_estimate(radius, growth);
    if tail > spec.tail_tolerance.max(spec.tolerance) {
        return Err(Error::Quadrature(format!(
            "tail estimate {tail:.3e} at radius {radius} exceeds tolerance"
        )));
    }
    let mut panels = libm::ceil(2.0 * radius / spec.panel_width).max(1.0) as usize;
    let (n0, w0) = composite_rule(radius, panels, spec.order);
    let mut prev = eval(&n0, &w0)?;
    let mut last = f64::INFINITY;
    for doubling in 1..=spec.max_doublings {
        panels *= 2;
        let (n1, w1) = composite_rule(radius, panels, spec.order);
        let cur = eval(&n1, &w1)?;
        last = change(&cur, &prev);
        if last <= spec.tolerance {
            return Ok((
                cur,
                QuadratureDiagnostics {
                    radius,
                    growth_exponent: growth,
                    tail_estimate: tail,
                    panels,
                    order: spec.order,
                    nodes_per_axis: panels * spec.order,
                    doublings: doubling,
                    last_change: last,
                },
            ));
        }
        prev = cur;
    }
    Err(Error::Quadrature(format!(
        "no agreement after {} doublings (last relative change {last:.3e})",
        spec.max_doublings
    )))
}

/// Evaluates `f` over `0..len`, possibly in parallel; results come back in index order.
pub trait Executor: Sync {
    fn map_indices(&self, len: usize, f: &(dyn Fn(usize) -> Vec<Complex64> + Sync)) -> Vec<Vec<Complex64>>;
}

/// Runs everything on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn map_indices(&self, len: usize, f: &(dyn Fn(usize) -> Vec<Complex64> + Sync)) -> Vec<Vec<Complex64>> {
        (0..len).map(f).collect()
    }
}

/// Pairwise summation in a fixed tree order, independent of how the terms were produced.
pub fn pairwise_sum(xs: &[Complex64]) -> Complex64 {
    match xs.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => xs[0],
        n => pairwise_sum(&xs[..n / 2]) + pairwise_sum(&xs[n / 2..]),
    }
}
