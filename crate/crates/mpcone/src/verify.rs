//! Verification suites. Each suite returns one record per check; nothing here
//! reads the clock, so reports are byte-identical across runs for a fixed
//! seed and bounds.

use mpcone_core::barnes::{
    barnes_f1, barnes_f1_quadrature, combinatorial_identity_check, fk_check_d2, moment_exact_gamma,
    moment_gamma_quadrature, BarnesWeight,
};
use mpcone_core::interp::gamma_k;
use mpcone_core::jack::{binomial_mk, dim_dk, dim_ratio_b, jack_p, pieri_a, spherical_phi};
use mpcone_core::multivariate::{
    difference_eigenvalue, generating_check_d2, generating_check_lattice, laguerre_mv, laguerre_mv_det,
    mp_difference_apply as mv_difference, mp_pieri_check, mp_q_det, mp_q_mv,
};
use mpcone_core::quadrature::{Executor, QuadratureSpec};
use mpcone_core::rational::{factorial, falling_factorial, format_rational, int, ratio, to_f64};
use mpcone_core::shift::{check_on_phi, d3_to_d4_check, generic_points, shift_operator, ShiftKind};
use mpcone_core::univariate::{
    cmn_closed, cmn_closed_unweighted, cmn_series, laguerre_eigencheck, mp_difference_apply, mp_orthogonality_quadrature,
    mp_q, mp_q_family, MpRoute,
};
use mpcone_core::{ConeParams, Partition, Rational, SymPoly};
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::report::{fmt_f64, Check, SuiteReport};
use crate::CliError;

pub const SUITES: [&str; 8] =
    ["univariate", "jack", "binomial", "generating", "determinantal", "difference", "pieri", "moments"];

/// Bounds shared by the suites.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub max_rank: usize,
    pub max_m: usize,
    pub max_weight: usize,
    pub seed: u64,
    pub tolerance: f64,
    /// Replaces each suite's own list of ν values when set.
    pub nu: Option<Rational>,
    pub quadrature: QuadratureSpec,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_rank: 3,
            max_m: 30,
            max_weight: 4,
            seed: 0,
            tolerance: 1e-6,
            nu: None,
            quadrature: QuadratureSpec::default(),
        }
    }
}

impl VerifyOptions {
    fn nus(&self, defaults: &[Rational]) -> Vec<Rational> {
        match &self.nu {
            Some(v) => vec![v.clone()],
            None => defaults.to_vec(),
        }
    }
}

type Outcome = mpcone_core::Result<(bool, String)>;

fn run(name: impl Into<String>, f: impl FnOnce() -> Outcome) -> Check {
    let name = name.into();
    match f() {
        Ok((ok, detail)) => Check::new(name, ok, detail),
        Err(e) => Check::new(name, false, format!("error: {e}")),
    }
}

/// Counts failures over a family of cases and names the first one.
struct Tally {
    cases: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { cases: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.first_failure.is_none() {
            self.first_failure = Some(label());
        }
    }

    fn finish(self) -> (bool, String) {
        match self.first_failure {
            None => (true, format!("{} cases", self.cases)),
            Some(f) => (false, format!("first failure at {f} ({} cases)", self.cases)),
        }
    }
}

/// Runs `f` one generic point at a time, skipping points on a pole of the
/// coefficients; at least four points must be usable.
fn on_generic_points(
    n: usize,
    seed: u64,
    f: impl Fn(&[Vec<Rational>]) -> mpcone_core::Result<bool>,
) -> mpcone_core::Result<bool> {
    let mut used = 0;
    for s in generic_points(n, 16, seed) {
        match f(std::slice::from_ref(&s)) {
            Ok(true) => used += 1,
            Ok(false) => return Ok(false),
            Err(mpcone_core::Error::ZeroDenominator(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(used >= 4)
}

fn mults(list: &[(i64, i64)]) -> Vec<Rational> {
    list.iter().map(|&(p, q)| ratio(p, q)).collect()
}

/// `s_λ(1^n)` by the hook-content formula.
pub fn hook_content(m: &Partition, n: usize) -> Rational {
    let parts = m.parts();
    let mut acc = Rational::one();
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = parts[i + 1..].iter().filter(|&&r| r > j).count();
            let content = j as i64 - i as i64;
            acc *= int(n as i64 + content) / int((arm + leg + 1) as i64);
        }
    }
    acc
}

pub fn univariate(o: &VerifyOptions) -> SuiteReport {
    let nus = o.nus(&[ratio(1, 2), int(2), ratio(7, 3)]);
    let mut checks = Vec::new();
    checks.push(run("route agreement", || {
        let mut t = Tally::new();
        for nu in &nus {
            for m in 0..=o.max_m {
                let rec = mp_q(m, nu, MpRoute::Recurrence)?;
                let ok = mp_q(m, nu, MpRoute::Hypergeometric)? == rec && mp_q(m, nu, MpRoute::Series)? == rec;
                t.record(ok, || format!("m={m}, nu={nu}"));
            }
        }
        Ok(t.finish())
    }));
    checks.push(run("difference eigenvalue 2m+nu", || {
        let mut t = Tally::new();
        for nu in &nus {
            for (m, q) in mp_q_family(o.max_m, nu).iter().enumerate() {
                let ok = mp_difference_apply(q, nu) == q.scale(&(int(2 * m as i64) + nu));
                t.record(ok, || format!("m={m}, nu={nu}"));
            }
        }
        Ok(t.finish())
    }));
    checks.push(run("laguerre eigenfunction 2m+nu", || {
        let mut t = Tally::new();
        for nu in &nus {
            for m in 0..=o.max_m {
                t.record(laguerre_eigencheck(m, nu), || format!("m={m}, nu={nu}"));
            }
        }
        Ok(t.finish())
    }));
    checks.push(run("parity", || {
        let mut t = Tally::new();
        for nu in &nus {
            for (m, q) in mp_q_family(o.max_m, nu).iter().enumerate() {
                let sign = if m % 2 == 1 { -Rational::one() } else { Rational::one() };
                t.record(q.reflect() == q.scale(&sign), || format!("m={m}, nu={nu}"));
            }
        }
        Ok(t.finish())
    }));
    let nu3 = o.nu.clone().unwrap_or_else(|| int(3));
    checks.push(run("orthogonality quadrature", || {
        let mut worst: f64 = 0.0;
        for a in 0..=5 {
            for b in 0..=5 {
                let (v, _) = mp_orthogonality_quadrature(a, b, &nu3, &o.quadrature)?;
                let expect = if a == b { to_f64(&(mpcone_core::rational::rising_factorial(&nu3, a) / factorial(a))) } else { 0.0 };
                worst = worst.max((v - expect).abs());
            }
        }
        Ok((worst <= o.tolerance, format!("nu={nu3}, a,b<=5, max error {}", fmt_f64(worst))))
    }));
    checks.push(run("c(m,n) closed form", || {
        let mut t = Tally::new();
        for m in 0..=12 {
            for n in 0..=12usize {
                t.record(cmn_series(m, n as i64) == cmn_closed(m, n), || format!("m={m}, n={n}"));
            }
        }
        Ok(t.finish())
    }));
    checks.push(Check::info(
        "c(m,n) without 2^k",
        format!("at (m,n)=(1,2): series {} vs unweighted sum {}", cmn_series(1, 2), cmn_closed_unweighted(1, 2)),
    ));
    SuiteReport::new("univariate", checks)
}

pub fn jack(o: &VerifyOptions) -> SuiteReport {
    let ds = mults(&[(1, 1), (3, 2), (2, 1), (3, 1)]);
    let mut checks = Vec::new();
    checks.push(run("Phi(1^n) = 1", || {
        let mut t = Tally::new();
        for d in &ds {
            for n in 1..=o.max_rank {
                let p = ConeParams::new(n, d.clone())?;
                for m in Partition::all_up_to(o.max_weight, n) {
                    t.record(spherical_phi(&m, &p)?.eval_ones().is_one(), || format!("m={m}, n={n}, d={d}"));
                }
            }
        }
        Ok(t.finish())
    }));
    checks.push(run("Pieri (tr x) Phi_m", || {
        let mut t = Tally::new();
        for d in &ds {
            for n in 1..=o.max_rank {
                let p = ConeParams::new(n, d.clone())?;
                let trace = SymPoly::monomial(Partition::column(1), n)?;
                for m in Partition::all_up_to(o.max_weight, n) {
                    let a = pieri_a(&m, &p)?;
                    let mut rhs = SymPoly::zero(n);
                    for (j, aj) in a.iter().enumerate() {
                        if let Some(up) = m.add_box(j).filter(|u| u.len() <= n) {
                            rhs = &rhs + &spherical_phi(&up, &p)?.scale(aj);
                        }
                    }
                    let ok = &trace * &spherical_phi(&m, &p)? == rhs && a.iter().cloned().sum::<Rational>() == int(n as i64);
                    t.record(ok, || format!("m={m}, n={n}, d={d}"));
                }
            }
        }
        Ok(t.finish())
    }));
    checks.push(run("sum B_k Phi_k = (tr x)^j / j!", || {
        let mut t = Tally::new();
        for d in mults(&[(1, 1), (2, 1), (3, 1)]) {
            for n in 1..=o.max_rank {
                let p = ConeParams::new(n, d.clone())?;
                let trace = SymPoly::monomial(Partition::column(1), n)?;
                let mut power = SymPoly::one(n);
                for j in 0..=o.max_weight + 2 {
                    let mut lhs = SymPoly::zero(n);
                    for k in Partition::all_of_weight(j, n) {
                        lhs = &lhs + &spherical_phi(&k, &p)?.scale(&dim_ratio_b(&k, &p)?);
                    }
                    t.record(lhs == power.scale(&factorial(j).recip()), || format!("j={j}, n={n}, d={d}"));
                    power = &power * &trace;
                }
            }
        }
        Ok(t.finish())
    }));
    checks.push(run("d_k = s_k(1^n)^2 at d=2", || {
        let mut t = Tally::new();
        for n in 1..=o.max_rank {
            let p = ConeParams::new(n, int(2))?;
            for k in Partition::all_up_to(o.max_weight + 1, n) {
                let s = hook_content(&k, n);
                t.record(dim_dk(&k, &p)? == &s * &s, || format!("k={k}, n={n}"));
            }
        }
        Ok(t.finish())
    }));
    SuiteReport::new("jack", checks)
}

pub fn binomial(o: &VerifyOptions) -> SuiteReport {
    let mut checks = Vec::new();
    let rank = o.max_rank.min(2);
    checks.push(run("binomial corner values", || {
        let mut t = Tally::new();
        for d in mults(&[(1, 1), (2, 1), (5, 2)]) {
            for n in 1..=o.max_rank {
                let p = ConeParams::new(n, d.clone())?;
                let all = Partition::all_up_to(o.max_weight, n);
                for m in &all {
                    for k in &all {
                        let b = binomial_mk(m, k, &p)?;
                        let ok = if k == m || k.is_empty() {
                            b.is_one()
                        } else if !k.is_contained_in(m) {
                            b.is_zero()
                        } else {
                            true
                        };
                        t.record(ok, || format!("m={m}, k={k}, n={n}, d={d}"));
                    }
                }
            }
        }
        Ok(t.finish())
    }));
    checks.push(run("binomial = shifted Jack ratio", || {
        let mut t = Tally::new();
        for d in mults(&[(1, 1), (2, 1), (3, 1)]) {
            for n in 1..=rank {
                let p = ConeParams::new(n, d.clone())?;
                for k in Partition::all_up_to(o.max_weight, n) {
                    let star = mpcone_core::interp::shifted_jack_star(&k, &p)?;
                    let h = mpcone_core::interp::shifted_jack_value(&star, &k, &p)?;
                    for m in Partition::all_up_to(o.max_weight, n) {
                        let v = mpcone_core::interp::shifted_jack_value(&star, &m, &p)? / &h;
                        t.record(v == binomial_mk(&m, &k, &p)?, || format!("m={m}, k={k}, n={n}, d={d}"));
                    }
                }
            }
        }
        Ok(t.finish())
    }));
    checks.push(run("gamma_k rank one is falling factorial", || {
        let p = ConeParams::new(1, int(2))?;
        let mut t = Tally::new();
        for k in 0..=o.max_weight + 4 {
            let g = gamma_k(&Partition::new(&[k])?, &p)?;
            for s in generic_points(1, 4, o.seed) {
                t.record(g.eval(&s) == falling_factorial(&s[0], k), || format!("k={k}, s={}", s[0]));
            }
        }
        Ok(t.finish())
    }));
    checks.push(run("gamma_k top part is Jack", || {
        let mut t = Tally::new();
        for d in mults(&[(1, 1), (3, 2), (2, 1)]) {
            for n in 1..=o.max_rank {
                let p = ConeParams::new(n, d.clone())?;
                for k in Partition::all_up_to(o.max_weight, n) {
                    let top = gamma_k(&k, &p)?.top_part();
                    let jack = jack_p(&k, p.theta(), n)?;
                    let c = top.coeff(&k) / jack.coeff(&k);
                    t.record(top == jack.scale(&c), || format!("k={k}, n={n}, d={d}"));
                }
            }
        }
        Ok(t.finish())
    }));
    SuiteReport::new("binomial", checks)
}

fn spread_points(seed: u64, n: usize) -> (Vec<Complex64>, Vec<f64>) {
    let pts = generic_points(2 * n, 1, seed).remove(0);
    let s = (0..n)
        .map(|j| Complex64::new(to_f64(&pts[j]) / 40.0 + j as f64 * 0.37, to_f64(&pts[n + j]) / 60.0))
        .collect();
    let u = (0..n).map(|j| 0.2 + 0.45 * j as f64 + to_f64(&pts[j]).abs() / 400.0).collect();
    (s, u)
}

pub fn generating(o: &VerifyOptions) -> SuiteReport {
    let mut checks = Vec::new();
    let nus = o.nus(&[int(3), ratio(7, 2)]);
    checks.push(run("lattice identity to degree 3", || {
        let mut t = Tally::new();
        for d in mults(&[(1, 1), (2, 1), (5, 2)]) {
            for n in 1..=o.max_rank.min(2) {
                let p = ConeParams::new(n, d.clone())?;
                for nu in &nus {
                    for m in Partition::all_up_to(2, n) {
                        t.record(generating_check_lattice(&m, nu, 3, &p)?, || format!("m={m}, n={n}, d={d}, nu={nu}"));
                    }
                }
            }
        }
        Ok(t.finish())
    }));
    checks.push(run("d=2 continuous generating residual", || {
        let n = 2;
        let (s, u) = spread_points(o.seed, n);
        let mut worst: f64 = 0.0;
        for nu in &nus {
            worst = worst.max(generating_check_d2(nu, 4, n, &s, &u)?.max());
        }
        Ok((worst <= 1e-9, format!("n=2, degree 4, max residual {}", fmt_f64(worst))))
    }));
    SuiteReport::new("generating", checks)
}

pub fn determinantal(o: &VerifyOptions) -> SuiteReport {
    let mut checks = Vec::new();
    let nus = o.nus(&[int(3)]);
    checks.push(run("Q_m equals normalized determinant", || {
        let mut t = Tally::new();
        for nu in &nus {
            for n in 1..=o.max_rank {
                let p = ConeParams::new(n, int(2))?;
                for m in Partition::all_up_to(o.max_weight, n) {
                    let (det, _) = mp_q_det(&m, nu, &p)?;
                    t.record(det.poly == mp_q_mv(&m, nu, &p)?.poly, || format!("m={m}, n={n}, nu={nu}"));
                }
            }
        }
        Ok(t.finish())
    }));
    checks.push(run("L_m equals determinant", || {
        let mut t = Tally::new();
        for nu in &nus {
            for n in 1..=o.max_rank {
                let p = ConeParams::new(n, int(2))?;
                for m in Partition::all_up_to(o.max_weight, n) {
                    let ok = laguerre_mv_det(&m, nu, &p)?.poly == laguerre_mv(&m, nu, &p)?.poly;
                    t.record(ok, || format!("m={m}, n={n}, nu={nu}"));
                }
            }
        }
        Ok(t.finish())
    }));
    for nu in &nus {
        for n in 1..=o.max_rank {
            let c = mpcone_core::multivariate::mp_q_det_orientation(nu, n);
            let detail = match c {
                Ok(c) => format!("n={n}, nu={nu}: {}", format_rational(&c)),
                Err(e) => format!("n={n}, nu={nu}: error {e}"),
            };
            checks.push(Check::info("orientation constant", detail));
        }
    }
    SuiteReport::new("determinantal", checks)
}

pub fn difference(o: &VerifyOptions) -> SuiteReport {
    let mut checks = Vec::new();
    // ν = 3 meets a zero of (ν)_{(1,1,1)} at n = d = 3
    let nus = o.nus(&[ratio(7, 2)]);
    let ds = mults(&[(1, 1), (2, 1), (3, 1)]);
    checks.push(run("D_nu Q_m = (2|m| + n nu) Q_m", || {
        let mut t = Tally::new();
        for d in &ds {
            for n in 1..=o.max_rank {
                let p = ConeParams::new(n, d.clone())?;
                for nu in &nus {
                    for m in Partition::all_up_to(o.max_weight, n) {
                        let q = mp_q_mv(&m, nu, &p)?.poly;
                        let ok = mv_difference(&q, nu, &p)? == q.scale(&difference_eigenvalue(&m, nu, &p));
                        t.record(ok, || format!("m={m}, n={n}, d={d}, nu={nu}"));
                    }
                }
            }
        }
        Ok(t.finish())
    }));
    checks.push(Check::info("eigenvalue 2|m| + nu", "matches only at rank 1; the rank enters as n nu"));
    checks.push(run("shift symbols act on Phi_m", || {
        let mut t = Tally::new();
        for d in &ds {
            for n in 1..=o.max_rank {
                let p = ConeParams::new(n, d.clone())?;
                for nu in &nus {
                    for m in Partition::all_up_to(o.max_weight.min(3), n) {
                        for kind in [ShiftKind::MultTrace, ShiftKind::TraceGrad, ShiftKind::GradXsq, ShiftKind::D2] {
                            t.record(check_on_phi(kind, &m, nu, &p)?, || format!("{} m={m}, n={n}, d={d}", kind.name()));
                        }
                    }
                }
            }
        }
        Ok(t.finish())
    }));
    checks.push(run("D2 = grad x^2 - trace grad + nu trace", || {
        let mut t = Tally::new();
        for d in &ds {
            for n in 1..=o.max_rank {
                let p = ConeParams::new(n, d.clone())?;
                for nu in &nus {
                    let lhs = shift_operator(ShiftKind::D2, nu, &p);
                    let rhs = shift_operator(ShiftKind::GradXsq, nu, &p)
                        .add(&shift_operator(ShiftKind::TraceGrad, nu, &p).scale(&-Rational::one()))
                        .add(&shift_operator(ShiftKind::MultTrace, nu, &p).scale(nu));
                    let ok = on_generic_points(n, o.seed, |pts| lhs.agrees_at(&rhs, pts))?;
                    t.record(ok, || format!("n={n}, d={d}, nu={nu}"));
                }
            }
        }
        Ok(t.finish())
    }));
    checks.push(run("Fourier conjugation D3 -> D_nu", || {
        let mut t = Tally::new();
        for d in &ds {
            for n in 1..=o.max_rank {
                let p = ConeParams::new(n, d.clone())?;
                for nu in &nus {
                    let ok = on_generic_points(n, o.seed, |pts| d3_to_d4_check(nu, &p, pts))?;
                    t.record(ok, || format!("n={n}, d={d}, nu={nu}"));
                }
            }
        }
        Ok(t.finish())
    }));
    SuiteReport::new("difference", checks)
}

pub fn pieri(o: &VerifyOptions) -> SuiteReport {
    let nus = o.nus(&[int(3), ratio(7, 2)]);
    let check = run("2 tr(s) Q_m three-term identity", || {
        let mut t = Tally::new();
        for d in mults(&[(1, 1), (2, 1)]) {
            for n in 1..=o.max_rank {
                let p = ConeParams::new(n, d.clone())?;
                for nu in &nus {
                    for m in Partition::all_up_to(o.max_weight.min(3), n) {
                        t.record(mp_pieri_check(&m, nu, &p)?, || format!("m={m}, n={n}, d={d}, nu={nu}"));
                    }
                }
            }
        }
        Ok(t.finish())
    });
    SuiteReport::new("pieri", vec![check])
}

pub fn moments(o: &VerifyOptions, exec: &dyn Executor) -> SuiteReport {
    let mut checks = Vec::new();
    let kappa = int(3);
    checks.push(run("rank-one gamma moments", || {
        let p = ConeParams::new(1, int(2))?;
        let w = BarnesWeight::new(p.clone(), kappa.clone())?;
        let mut worst: f64 = 0.0;
        for m in 0..=4 {
            let m = Partition::new(&[m])?;
            let (v, _) = moment_gamma_quadrature(&m, &w, &o.quadrature, exec)?;
            let exact = to_f64(&moment_exact_gamma(&m, &w.nu, &p)?);
            worst = worst.max((v.re - exact).abs() / exact.abs().max(1.0));
        }
        Ok((worst <= 1e-8, format!("kappa=3, m<=4, max error {}", fmt_f64(worst))))
    }));
    for d in [int(1), int(2)] {
        checks.push(run(format!("rank-two gamma moments d={d}"), || {
            let p = ConeParams::new(2, d.clone())?;
            let w = BarnesWeight::from_kappa(p.clone(), kappa.clone())?;
            let mut worst: f64 = 0.0;
            for m in [Partition::new(&[1])?, Partition::new(&[1, 1])?] {
                let (v, _) = moment_gamma_quadrature(&m, &w, &o.quadrature, exec)?;
                let exact = to_f64(&moment_exact_gamma(&m, &w.nu, &p)?);
                worst = worst.max((v.re - exact).abs() / exact.abs().max(1.0));
            }
            Ok((worst <= 1e-5, format!("kappa=3, m in (1),(1,1), max error {}", fmt_f64(worst))))
        }));
    }
    checks.push(run("F1 closed form", || {
        let mut worst: f64 = 0.0;
        for n in 1..=2 {
            let p = ConeParams::new(n, int(2))?;
            let w = BarnesWeight::from_kappa(p.clone(), kappa.clone())?;
            for z in [Complex64::new(0.5, 0.0), Complex64::new(-0.25, 0.75)] {
                let (v, _) = barnes_f1_quadrature(z, &w, &o.quadrature, exec)?;
                worst = worst.max((v - barnes_f1(z, &kappa, &p)).norm());
            }
        }
        Ok((worst <= o.tolerance, format!("n<=2, d=2, max error {}", fmt_f64(worst))))
    }));
    checks.push(run("combinatorial identity", || {
        let mut t = Tally::new();
        for uv in generic_points(2, 50, o.seed) {
            for n in 0..=8 {
                t.record(combinatorial_identity_check(&uv[0], &uv[1], n), || format!("u={}, v={}, n={n}", uv[0], uv[1]));
            }
        }
        Ok(t.finish())
    }));
    checks.push(run("F_K proportional to Q_(n^K)", || {
        let pts = vec![
            vec![Complex64::new(0.3, 0.1), Complex64::new(-0.4, 0.2)],
            vec![Complex64::new(0.7, -0.2), Complex64::new(0.1, 0.5)],
            vec![Complex64::new(-0.6, 0.3), Complex64::new(0.9, -0.1)],
        ];
        let r = fk_check_d2(2, &pts, &kappa, 2, &o.quadrature)?;
        Ok((
            r.deviation <= 1e-5,
            format!(
                "n=2, K=2, d=2, nu=kappa+K-1: deviation {}; with nu=kappa: {}",
                fmt_f64(r.deviation),
                fmt_f64(r.literal_deviation)
            ),
        ))
    }));
    SuiteReport::new("moments", checks)
}

pub fn run_suite(name: &str, o: &VerifyOptions, exec: &dyn Executor) -> Result<Vec<SuiteReport>, CliError> {
    Ok(match name {
        "univariate" => vec![univariate(o)],
        "jack" => vec![jack(o)],
        "binomial" => vec![binomial(o)],
        "generating" => vec![generating(o)],
        "determinantal" => vec![determinantal(o)],
        "difference" => vec![difference(o)],
        "pieri" => vec![pieri(o)],
        "moments" => vec![moments(o, exec)],
        "all" => {
            let mut out = Vec::new();
            for s in SUITES {
                out.extend(run_suite(s, o, exec)?);
            }
            out
        }
        other => return Err(CliError::Input(format!("unknown suite {other:?}"))),
    })
}
