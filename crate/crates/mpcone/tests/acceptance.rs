//! Acceptance criteria 1–11, one line each.
//!
//! A criterion line reads PASS or FAIL for the statement as posed. The exit
//! status is driven by the gate of each criterion, which equals the line
//! except where the posed statement is known to be false (criterion 8) or is
//! statistical (criterion 11); there the gate asserts the corrected or
//! deterministic part.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use common::*;
use mpcone::exec::{gue_moment_parallel, Rayon};
use mpcone::report::fmt_f64;
use mpcone_core::barnes::{
    barnes_f1, barnes_f1_quadrature, fk_check_d2, moment_exact_gamma, moment_gamma_quadrature, BarnesWeight,
};
use mpcone_core::gue::gue_moment_exact;
use mpcone_core::jack::{dim_dk, dim_ratio_b, jack_p, pieri_a, spherical_phi};
use mpcone_core::multivariate::{
    generating_check_d2, generating_check_lattice, mp_difference_apply as mv_difference, mp_pieri_check, mp_q_det,
    mp_q_mv,
};
use mpcone_core::quadrature::QuadratureSpec;
use mpcone_core::rational::{int, ratio, to_f64, Rational};
use mpcone_core::shift::generic_points;
use mpcone_core::univariate::{
    cmn_closed, cmn_closed_unweighted, cmn_series, laguerre_eigencheck, mp_difference_apply, mp_orthogonality_quadrature,
    mp_q, MpRoute,
};
use mpcone_core::{ConeParams, Partition, SymPoly};
use num_complex::Complex64;
use num_traits::{One, Zero};

struct Verdict {
    /// The statement as posed.
    holds: bool,
    /// What the exit status depends on.
    gate: bool,
    detail: String,
}

impl Verdict {
    fn plain(holds: bool, detail: String) -> Self {
        Verdict { holds, gate: holds, detail }
    }
}

fn mults(list: &[(i64, i64)]) -> Vec<Rational> {
    list.iter().map(|&(p, q)| ratio(p, q)).collect()
}

fn sample_points() -> Vec<Rational> {
    vec![ratio(1, 3), ratio(-5, 2), int(7), ratio(11, 13)]
}

fn univariate_routes() -> Verdict {
    let mut cases = 0;
    let mut ok = true;
    for nu in [ratio(1, 2), int(2), ratio(7, 3)] {
        for m in 0..=30 {
            let rec = mp_q(m, &nu, MpRoute::Recurrence).unwrap();
            ok &= mp_q(m, &nu, MpRoute::Hypergeometric).unwrap() == rec;
            ok &= mp_q(m, &nu, MpRoute::Series).unwrap() == rec;
            for s in sample_points() {
                ok &= rec.eval(&s) == mp_q_value(m, &nu, &s);
            }
            cases += 1;
        }
    }
    Verdict::plain(ok, format!("three routes and a direct hypergeometric sum agree on {cases} (m, nu) pairs"))
}

/// Coefficients of `L_m^{(α)}(x) = Σ_k (-1)^k (α+k+1)_{m-k}/((m-k)! k!) x^k`.
fn laguerre_coeffs(m: usize, alpha: &Rational) -> Vec<Rational> {
    (0..=m)
        .map(|k| {
            let sign = if k % 2 == 1 { -Rational::one() } else { Rational::one() };
            sign * rising(&(alpha + int(k as i64 + 1)), m - k) / (fact(m - k) * fact(k))
        })
        .collect()
}

fn deriv(p: &[Rational]) -> Vec<Rational> {
    p.iter().enumerate().skip(1).map(|(k, c)| c * int(k as i64)).collect()
}

fn times_u(p: &[Rational]) -> Vec<Rational> {
    std::iter::once(Rational::zero()).chain(p.iter().cloned()).collect()
}

fn add_scaled(acc: &mut Vec<Rational>, p: &[Rational], c: &Rational) {
    if acc.len() < p.len() {
        acc.resize(p.len(), Rational::zero());
    }
    for (a, x) in acc.iter_mut().zip(p) {
        *a += x * c;
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn univariate_spectral() -> Verdict {
    let mut ok = true;
    let mut cases = 0;
    for nu in [ratio(1, 2), int(2), ratio(7, 3)] {
        for m in 0..=30 {
            let q = mp_q(m, &nu, MpRoute::Recurrence).unwrap();
            let lambda = int(2 * m as i64) + &nu;
            ok &= mp_difference_apply(&q, &nu) == q.scale(&lambda);
            let half = &nu / int(2);
            for s in sample_points() {
                let lhs = (&s + &half) * mp_q_value(m, &nu, &(&s + int(1)))
                    - (&s - &half) * mp_q_value(m, &nu, &(&s - int(1)));
                ok &= lhs == &lambda * mp_q_value(m, &nu, &s);
            }
            // P(u) = L_m^{(ν-1)}(2u); ψ = e^{-u} P; the operator acts on P as
            // -uP'' + 2uP' - νP' + νP
            let p: Vec<Rational> = laguerre_coeffs(m, &(&nu - int(1)))
                .into_iter()
                .enumerate()
                .map(|(k, c)| c * int(2).pow(k as i32))
                .collect();
            let (d1, d2) = (deriv(&p), deriv(&deriv(&p)));
            let mut out = Vec::new();
            add_scaled(&mut out, &times_u(&d2), &-Rational::one());
            add_scaled(&mut out, &times_u(&d1), &int(2));
            add_scaled(&mut out, &d1, &-nu.clone());
            add_scaled(&mut out, &p, &nu);
            let mut expect = Vec::new();
            add_scaled(&mut expect, &p, &lambda);
            ok &= trim(out) == trim(expect);
            ok &= laguerre_eigencheck(m, &nu);
            cases += 1;
        }
    }
    Verdict::plain(ok, format!("D_nu q_m = (2m+nu) q_m and the Laguerre eigen-equation hold on {cases} (m, nu) pairs"))
}

fn orthogonality() -> Verdict {
    let nu = int(3);
    let mut worst: f64 = 0.0;
    for a in 0..=5 {
        for b in 0..=5 {
            let (v, _) = mp_orthogonality_quadrature(a, b, &nu, &QuadratureSpec::default()).unwrap();
            let expect = if a == b { to_f64(&(rising(&nu, a) / fact(a))) } else { 0.0 };
            worst = worst.max((v - expect).abs());
        }
    }
    Verdict::plain(worst <= 1e-6, format!("<q_a, q_b> = delta_ab (3)_a/a! for a, b <= 5, max error {}", fmt_f64(worst)))
}

fn intro_identity() -> Verdict {
    let mut ok = true;
    for m in 0..=12 {
        for n in 0..=12usize {
            let oracle = cmn_by_series(m, n);
            ok &= cmn_closed(m, n) == oracle.into();
            ok &= cmn_series(m, n as i64) == oracle.into();
        }
    }
    let series = cmn_by_series(1, 2);
    let printed = cmn_closed_unweighted(1, 2);
    let printed_fails = printed != series.into();
    Verdict::plain(
        ok && printed_fails,
        format!(
            "sum 2^k C(m,k) C(n,k+1) matches the series for m, n <= 12; form without 2^k gives {printed} at (1,2) against series {series}"
        ),
    )
}

fn jack_layer() -> Verdict {
    let mut ok = true;
    let mut schur_cases = 0;
    for n in 1..=3 {
        for j in 0..=6 {
            for k in Partition::all_of_weight(j, n) {
                let jack = jack_p(&k, &Rational::one(), n).unwrap();
                ok &= jack.coeffs() == &schur_kostka(&k, n);
                schur_cases += 1;
            }
        }
    }
    let mut pieri_cases = 0;
    for d in mults(&[(1, 1), (3, 2), (2, 1), (3, 1)]) {
        for n in 1..=3 {
            let p = ConeParams::new(n, d.clone()).unwrap();
            let theta = p.theta().clone();
            let trace = SymPoly::monomial(Partition::column(1), n).unwrap();
            for m in Partition::all_up_to(5, n) {
                let a = pieri_a(&m, &p).unwrap();
                let mut rhs = SymPoly::zero(n);
                for (j, aj) in a.iter().enumerate() {
                    if let Some(up) = m.add_box(j).filter(|u| u.len() <= n) {
                        rhs = &rhs + &spherical_phi(&up, &p).unwrap().scale(aj);
                    }
                }
                ok &= &trace * &spherical_phi(&m, &p).unwrap() == rhs;
                ok &= a.iter().cloned().sum::<Rational>() == int(n as i64);
                pieri_cases += 1;
            }
            if n >= 2 {
                // P_(2) = m_(2) + 2θ/(1+θ) m_(1,1)
                let p2 = jack_p(&Partition::new(&[2]).unwrap(), &theta, n).unwrap();
                ok &= p2.coeff(&Partition::new(&[2]).unwrap()).is_one();
                ok &= p2.coeff(&Partition::new(&[1, 1]).unwrap()) == int(2) * &theta / (int(1) + &theta);
            }
        }
    }
    Verdict::plain(
        ok,
        format!("theta=1 Jack = Schur (Kostka) on {schur_cases} shapes; Pieri rule and sum a_j = n on {pieri_cases} cases"),
    )
}

fn dimensions() -> Verdict {
    let mut ok = true;
    let mut cases = 0;
    for d in mults(&[(1, 1), (2, 1), (3, 1)]) {
        for n in 1..=3 {
            let p = ConeParams::new(n, d.clone()).unwrap();
            for j in 0..=6 {
                let mut lhs = SymPoly::zero(n);
                for k in Partition::all_of_weight(j, n) {
                    lhs = &lhs + &spherical_phi(&k, &p).unwrap().scale(&dim_ratio_b(&k, &p).unwrap());
                }
                ok &= lhs.coeffs() == &trace_power_over_factorial(j, n);
                cases += 1;
            }
        }
    }
    let mut dim_cases = 0;
    for n in 1..=3 {
        let p = ConeParams::new(n, int(2)).unwrap();
        for k in Partition::all_up_to(5, n) {
            let s = hook_content(&k, n);
            ok &= dim_dk(&k, &p).unwrap() == &s * &s;
            dim_cases += 1;
        }
    }
    Verdict::plain(ok, format!("sum B_k Phi_k = (tr x)^j/j! on {cases} cases; d_k = s_k(1^n)^2 at d=2 on {dim_cases} shapes"))
}

/// The printed determinant `δ!(-2)^{-n(n-1)/2} det(q^{(ν-n+1)}_{m_j+n-j}(s_i)) / V(s)`.
fn printed_determinant(m: &Partition, nu: &Rational, s: &[Rational]) -> Rational {
    let n = s.len();
    let shifted = nu - int(n as i64) + int(1);
    let parts = m.padded(n);
    let mat: Vec<Vec<Rational>> = s
        .iter()
        .map(|si| (0..n).map(|j| mp_q_value(parts[j] + n - 1 - j, &shifted, si)).collect())
        .collect();
    let pairs = (n * (n - 1) / 2) as u32;
    let delta_fact = (0..n).fold(Rational::one(), |acc, j| acc * fact(j));
    delta_fact * det(&mat) / (int(-2).pow(pairs as i32) * vandermonde(s))
}

fn determinantal() -> Verdict {
    let nu = int(3);
    let mut ok = true;
    let mut cases = 0;
    let mut orientation = Vec::new();
    for n in 1..=3 {
        let p = ConeParams::new(n, int(2)).unwrap();
        let points: Vec<Vec<Rational>> = generic_points(n, 3, 7 + n as u64);
        let oracle_orient = printed_determinant(&Partition::empty(), &nu, &points[0]);
        for m in Partition::all_up_to(4, n) {
            let q = mp_q_mv(&m, &nu, &p).unwrap();
            let (det_q, orient) = mp_q_det(&m, &nu, &p).unwrap();
            ok &= det_q.poly == q.poly;
            ok &= orient == oracle_orient;
            for s in &points {
                let v = printed_determinant(&m, &nu, s) / (hook_content(&m, n) * &oracle_orient);
                ok &= v == q.poly.eval(s);
            }
            cases += 1;
        }
        orientation.push(format!("n={n}: {oracle_orient}"));
    }
    Verdict::plain(
        ok,
        format!("Q_m = normalized determinant on {cases} cases (nu=3, d=2); orientation {}", orientation.join(", ")),
    )
}

/// `(D_ν f)(s)` straight from the shift coefficients.
fn d_nu_pointwise(f: &SymPoly, nu: &Rational, p: &ConeParams, s: &[Rational]) -> Rational {
    let n = s.len();
    let q = p.quarter_shift();
    let half_d = p.mult() / int(2);
    let half_nu = nu / int(2);
    let alpha = |x: &[Rational], j: usize| -> Rational {
        (0..n)
            .filter(|&k| k != j)
            .fold(Rational::one(), |acc, k| acc * (&x[j] - &x[k] + &half_d) / (&x[j] - &x[k]))
    };
    let neg: Vec<Rational> = s.iter().map(|x| -x).collect();
    let mut acc = Rational::zero();
    for j in 0..n {
        let mut up = s.to_vec();
        up[j] += int(1);
        let mut down = s.to_vec();
        down[j] -= int(1);
        acc += (&s[j] + &half_nu - &q) * alpha(s, j) * f.eval(&up);
        acc += (-&s[j] + &half_nu - &q) * alpha(&neg, j) * f.eval(&down);
    }
    acc
}

fn difference_and_pieri() -> Verdict {
    let nu = ratio(7, 2);
    let mut literal_failures = 0;
    let mut literal_fail_rank_one = false;
    let mut corrected = true;
    let mut cases = 0;
    for d in mults(&[(1, 1), (2, 1), (3, 1)]) {
        for n in 1..=3 {
            let p = ConeParams::new(n, d.clone()).unwrap();
            let points: Vec<Vec<Rational>> = generic_points(n, 6, 11)
                .into_iter()
                .filter(|s| (0..n).all(|i| (i + 1..n).all(|j| s[i] != s[j])))
                .collect();
            for m in Partition::all_up_to(4, n) {
                let q = mp_q_mv(&m, &nu, &p).unwrap().poly;
                let image = mv_difference(&q, &nu, &p).unwrap();
                let literal = int(2 * m.weight() as i64) + &nu;
                let fixed = int(2 * m.weight() as i64) + int(n as i64) * &nu;
                if image != q.scale(&literal) {
                    literal_failures += 1;
                    literal_fail_rank_one |= n == 1;
                }
                corrected &= image == q.scale(&fixed);
                for s in &points {
                    corrected &= d_nu_pointwise(&q, &nu, &p, s) == &fixed * q.eval(s);
                }
                cases += 1;
            }
        }
    }
    let mut pieri = true;
    let mut pieri_cases = 0;
    for d in mults(&[(1, 1), (2, 1)]) {
        for n in 1..=3 {
            let p = ConeParams::new(n, d.clone()).unwrap();
            for m in Partition::all_up_to(3, n) {
                pieri &= mp_pieri_check(&m, &int(3), &p).unwrap();
                pieri_cases += 1;
            }
        }
    }
    Verdict {
        holds: literal_failures == 0 && pieri,
        gate: corrected && pieri && !literal_fail_rank_one && literal_failures > 0,
        detail: format!(
            "eigenvalue 2|m|+nu fails on {literal_failures} of {cases} cases (all rank >= 2); \
             2|m|+n*nu holds on all {cases} (nu=7/2){}; Pieri identity holds on {pieri_cases} cases",
            if corrected { "" } else { " -- corrected form FAILED" }
        ),
    }
}

fn generating() -> Verdict {
    let mut ok = true;
    let mut cases = 0;
    for d in mults(&[(1, 1), (2, 1), (5, 2)]) {
        for n in 1..=2 {
            let p = ConeParams::new(n, d.clone()).unwrap();
            for nu in [int(3), ratio(7, 2)] {
                for m in Partition::all_up_to(2, n) {
                    ok &= generating_check_lattice(&m, &nu, 3, &p).unwrap();
                    cases += 1;
                }
            }
        }
    }
    let s = [Complex64::new(0.13, 0.21), Complex64::new(-0.41, 0.05)];
    let u = [0.35, 0.9];
    let mut worst: f64 = 0.0;
    for nu in [int(3), ratio(7, 2)] {
        worst = worst.max(generating_check_d2(&nu, 4, 2, &s, &u).unwrap().max());
    }
    Verdict::plain(
        ok && worst <= 1e-9,
        format!("lattice identity to degree 3 on {cases} cases; d=2 continuous residual {}", fmt_f64(worst)),
    )
}

fn generalized_pochhammer(nu: &Rational, m: &Partition, d: &Rational) -> Rational {
    m.parts().iter().enumerate().fold(Rational::one(), |acc, (j, &mj)| {
        acc * rising(&(nu - d / int(2) * int(j as i64)), mj)
    })
}

fn moments() -> Verdict {
    let q = QuadratureSpec::default();
    let kappa = int(3);
    let mut detail = Vec::new();
    let mut ok = true;

    let oracle = |m: &Partition, nu: &Rational, d: &Rational| {
        let sign = if m.weight() % 2 == 1 { -1.0 } else { 1.0 };
        sign * to_f64(&generalized_pochhammer(nu, m, d)) / 2f64.powi(m.weight() as i32)
    };
    let p1 = ConeParams::new(1, int(2)).unwrap();
    let w1 = BarnesWeight::from_kappa(p1.clone(), kappa.clone()).unwrap();
    let mut worst1: f64 = 0.0;
    for k in 0..=4 {
        let m = Partition::new(&[k]).unwrap();
        let (v, _) = moment_gamma_quadrature(&m, &w1, &q, &Rayon).unwrap();
        let exact = oracle(&m, &w1.nu, p1.mult());
        ok &= (to_f64(&moment_exact_gamma(&m, &w1.nu, &p1).unwrap()) - exact).abs() == 0.0;
        worst1 = worst1.max((v.re - exact).abs() / exact.abs().max(1.0));
    }
    ok &= worst1 <= 1e-8;
    detail.push(format!("n=1 moments err {}", fmt_f64(worst1)));

    for d in [int(1), int(2)] {
        let p2 = ConeParams::new(2, d.clone()).unwrap();
        let w2 = BarnesWeight::from_kappa(p2.clone(), kappa.clone()).unwrap();
        let mut worst2: f64 = 0.0;
        for parts in [&[1][..], &[2], &[1, 1]] {
            let m = Partition::new(parts).unwrap();
            let (v, _) = moment_gamma_quadrature(&m, &w2, &q, &Rayon).unwrap();
            let exact = oracle(&m, &w2.nu, &d);
            worst2 = worst2.max((v.re - exact).abs() / exact.abs().max(1.0));
        }
        ok &= worst2 <= 1e-5;
        detail.push(format!("n=2 d={d} err {}", fmt_f64(worst2)));
    }

    let mut worst_f1: f64 = 0.0;
    for n in 1..=2 {
        let p = ConeParams::new(n, int(2)).unwrap();
        let w = BarnesWeight::from_kappa(p.clone(), kappa.clone()).unwrap();
        for z in [Complex64::new(0.5, 0.0), Complex64::new(-0.3, 0.8)] {
            let closed = barnes_f1(z, &kappa, &p);
            if n == 1 {
                // M(z - λ) = z since the weight is even
                ok &= (closed - z).norm() < 1e-14;
            }
            let (v, _) = barnes_f1_quadrature(z, &w, &q, &Rayon).unwrap();
            worst_f1 = worst_f1.max((v - closed).norm());
        }
    }
    ok &= worst_f1 <= 1e-6;
    detail.push(format!("F1 err {}", fmt_f64(worst_f1)));

    let mut comb = true;
    for uv in generic_points(2, 50, 2024) {
        let (u, v) = (&uv[0], &uv[1]);
        for n in 0..=8 {
            let lhs: Rational = (0..=n)
                .map(|k| choose(n, k) * falling(u, k) * falling(v, n - k) * int(1 << k))
                .sum();
            let nu = v - int(n as i64) + int(1);
            comb &= lhs == fact(n) * mp_q_rec_value(n, &nu, &(-u - &nu / int(2)));
        }
    }
    ok &= comb;
    detail.push(format!("combinatorial identity {}", if comb { "exact" } else { "FAILED" }));

    let pts = vec![
        vec![Complex64::new(0.3, 0.1), Complex64::new(-0.4, 0.2)],
        vec![Complex64::new(0.7, -0.2), Complex64::new(0.1, 0.5)],
        vec![Complex64::new(-0.6, 0.3), Complex64::new(0.9, -0.1)],
    ];
    let fk = fk_check_d2(2, &pts, &kappa, 2, &q).unwrap();
    ok &= fk.deviation <= 1e-5;
    detail.push(format!(
        "F_K deviation {} with nu = kappa+K-1 (nu = kappa gives {})",
        fmt_f64(fk.deviation),
        fmt_f64(fk.literal_deviation)
    ));
    Verdict::plain(ok, detail.join("; "))
}

/// `q_m^{(ν)}(s)` by the three-term recurrence, valid at every `ν`.
fn mp_q_rec_value(m: usize, nu: &Rational, s: &Rational) -> Rational {
    let (mut prev, mut cur) = (Rational::zero(), Rational::one());
    for k in 0..m {
        let next = ((int(k as i64) + nu - int(1)) * &prev - int(2) * s * &cur) / int(k as i64 + 1);
        prev = cur;
        cur = next;
    }
    cur
}

fn gue() -> Verdict {
    let mut within = true;
    let mut exact_ok = true;
    let mut parts = Vec::new();
    for (n, m) in [(1, 1), (2, 1), (2, 2), (4, 3)] {
        let exact = gue_exact(n, m);
        exact_ok &= (gue_moment_exact(n, m) - exact).abs() <= 1e-12 * exact;
        let est = gue_moment_parallel(n, m, 200_000, 20 + n as u64 * 10 + m as u64);
        let z = (est.mean - exact) / est.std_error;
        within &= z.abs() <= 3.0;
        parts.push(format!("({n},{m}) z={:.2}", z));
    }
    Verdict {
        holds: within && exact_ok,
        gate: exact_ok,
        detail: format!("{} against (1/n)(2m-1)!! c(m,n) [statistical, not gating]", parts.join(", ")),
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 11] = [
        ("univariate route agreement", univariate_routes),
        ("univariate spectral theory", univariate_spectral),
        ("orthogonality quadrature", orthogonality),
        ("c(m,n) identity", intro_identity),
        ("Jack layer", jack_layer),
        ("dimensions", dimensions),
        ("multivariate cross-routes", determinantal),
        ("difference equation and Pieri", difference_and_pieri),
        ("generating identities", generating),
        ("moments", moments),
        ("GUE demo", gue),
    ];
    let mut gate_ok = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let v = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Verdict { holds: false, gate: false, detail: format!("panicked: {msg}") }
        });
        let status = if v.holds { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status}  {name}: {}", i + 1, v.detail);
        gate_ok &= v.gate;
    }
    if gate_ok {
        ExitCode::SUCCESS
    } else {
        println!("acceptance gate failed");
        ExitCode::FAILURE
    }
}

