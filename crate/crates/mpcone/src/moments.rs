//! The `moments` command: exact moment formulas next to their quadrature values.

use std::collections::BTreeMap;

use mpcone_core::barnes::{
    barnes_f1, barnes_f1_quadrature, moment_exact_gamma, moment_gamma_quadrature, moment_quadrature, BarnesWeight,
};
use mpcone_core::quadrature::{Executor, QuadratureDiagnostics};
use mpcone_core::rational::{format_rational, parse_rational, to_f64};
use mpcone_core::{Partition, Rational, SymPoly};
use num_complex::Complex64;
use serde::Serialize;

use crate::config::RunConfig;
use crate::report::{fmt_complex, sig15};
use crate::{CliError, CliResult};

/// Parses `"c"`, `"c*m(2,1)"`, `"m(1)"` terms joined by `;` into a symmetric
/// polynomial in the monomial-symmetric basis.
pub fn parse_chi(text: &str, n: usize) -> CliResult<SymPoly> {
    let mut coeffs: BTreeMap<Partition, Rational> = BTreeMap::new();
    for term in text.split(';').map(str::trim).filter(|t| !t.is_empty()) {
        let (c, key) = match term.find("m(") {
            Some(pos) => {
                let c = term[..pos].trim().trim_end_matches('*').trim();
                let key = term[pos + 1..].trim();
                let c = match c {
                    "" | "+" => Rational::from_integer(1.into()),
                    "-" => Rational::from_integer((-1).into()),
                    c => parse_rational(c)?,
                };
                (c, key.parse::<Partition>()?)
            }
            None => (parse_rational(term)?, Partition::empty()),
        };
        *coeffs.entry(key).or_default() += c;
    }
    Ok(SymPoly::from_coeffs(n, coeffs)?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Diagnostics {
    pub radius: f64,
    pub growth_exponent: f64,
    pub tail_estimate: f64,
    pub panels: usize,
    pub order: usize,
    pub nodes_per_axis: usize,
    pub doublings: usize,
    pub last_change: f64,
}

impl From<QuadratureDiagnostics> for Diagnostics {
    fn from(d: QuadratureDiagnostics) -> Self {
        Diagnostics {
            radius: sig15(d.radius),
            growth_exponent: sig15(d.growth_exponent),
            tail_estimate: sig15(d.tail_estimate),
            panels: d.panels,
            order: d.order,
            nodes_per_axis: d.nodes_per_axis,
            doublings: d.doublings,
            last_change: sig15(d.last_change),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MomentEntry {
    pub quantity: String,
    /// Closed form, when one exists.
    pub formula: Option<String>,
    pub exact: Option<String>,
    pub closed_form: Option<[f64; 2]>,
    pub quadrature: [f64; 2],
    pub error: Option<f64>,
    pub passed: bool,
    pub diagnostics: Diagnostics,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MomentsReport {
    pub rank: usize,
    pub d: String,
    pub nu: String,
    pub kappa: String,
    pub tolerance: f64,
    pub passed: bool,
    pub entries: Vec<MomentEntry>,
}

/// What to compute; at least one field should be set.
#[derive(Clone, Debug, Default)]
pub struct MomentsRequest {
    pub kappa: Option<Rational>,
    pub m: Option<Partition>,
    pub chi: Option<String>,
    pub f1: Option<Complex64>,
}

fn pair(z: Complex64) -> [f64; 2] {
    [sig15(z.re), sig15(z.im)]
}

fn compare(quantity: String, formula: Option<String>, exact: Option<Rational>, closed: Option<Complex64>,
           got: Complex64, diag: QuadratureDiagnostics, tol: f64) -> MomentEntry {
    let closed = closed.or_else(|| exact.as_ref().map(|e| Complex64::new(to_f64(e), 0.0)));
    let error = closed.map(|c| (got - c).norm() / c.norm().max(1.0));
    MomentEntry {
        quantity,
        formula,
        exact: exact.as_ref().map(format_rational),
        closed_form: closed.map(pair),
        quadrature: pair(got),
        error: error.map(sig15),
        passed: error.is_none_or(|e| e <= tol),
        diagnostics: diag.into(),
    }
}

pub fn run_moments(cfg: &RunConfig, req: &MomentsRequest, exec: &dyn Executor) -> CliResult<MomentsReport> {
    let p = cfg.cone()?;
    let w = match &req.kappa {
        Some(k) => BarnesWeight::from_kappa(p.clone(), k.clone())?,
        None => BarnesWeight::new(p.clone(), cfg.nu.clone())?,
    };
    let q = cfg.quadrature_spec();
    let tol = cfg.tolerance;
    let mut entries = Vec::new();
    if let Some(m) = &req.m {
        let exact = moment_exact_gamma(m, &w.nu, &p)?;
        let (v, diag) = moment_gamma_quadrature(m, &w, &q, exec)?;
        entries.push(compare(
            format!("M(gamma_{m}(-i lambda - nu/2))"),
            Some("(-1)^|m| 2^-|m| (nu)_m".into()),
            Some(exact),
            None,
            v,
            diag,
            tol,
        ));
    }
    if let Some(text) = &req.chi {
        let chi = parse_chi(text, p.rank())?;
        if chi.coeffs().keys().any(|k| k.len() > p.rank()) {
            return Err(CliError::Input("chi has more parts than the rank".into()));
        }
        let (v, diag) = moment_quadrature(&chi, &w, &q, exec)?;
        entries.push(compare(format!("M(chi), chi = {text}"), None, None, None, v, diag, tol));
    }
    if let Some(z) = req.f1 {
        let closed = barnes_f1(z, &w.kappa, &p);
        let (v, diag) = barnes_f1_quadrature(z, &w, &q, exec)?;
        entries.push(compare(
            format!("F1({})", fmt_complex(z.re, z.im)),
            Some("i^n n! (d/4)^n q_n^(2 kappa/d)((2/d) i z)".into()),
            None,
            Some(closed),
            v,
            diag,
            tol,
        ));
    }
    if entries.is_empty() {
        return Err(CliError::Input("nothing to compute: pass --m, --chi or --f1".into()));
    }
    Ok(MomentsReport {
        rank: p.rank(),
        d: format_rational(p.mult()),
        nu: format_rational(&w.nu),
        kappa: format_rational(&w.kappa),
        tolerance: tol,
        passed: entries.iter().all(|e| e.passed),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use mpcone_core::rational::ratio;

    #[test]
    fn chi_grammar() {
        let f = parse_chi("1/2; 3*m(1); -m(1,1); m(1)", 2).unwrap();
        assert_eq!(f.coeff(&Partition::empty()), ratio(1, 2));
        assert_eq!(f.coeff(&"1".parse().unwrap()), ratio(4, 1));
        assert_eq!(f.coeff(&"1,1".parse().unwrap()), ratio(-1, 1));
        assert!(parse_chi("m(1,1,1)", 2).is_err());
        assert!(parse_chi("x", 1).is_err());
    }
}
