//! Polynomial families addressable from the command line.

use std::collections::BTreeMap;

use mpcone_core::jack::{expand_in_phi, spherical_phi};
use mpcone_core::multivariate::{laguerre_mv, mp_q_mv};
use mpcone_core::rational::{format_rational, parse_rational};
use mpcone_core::univariate::{mp_q, MpRoute};
use mpcone_core::{ConeParams, Partition, Rational, SymPoly};
use serde::Serialize;

use crate::cache::{Cache, Lookup};
use crate::config::RunConfig;
use crate::polyjson::{Basis, PolyJson, Provenance};
use crate::report::fmt_f64;
use crate::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    /// Rank-one Meixner–Pollaczek `q_m^{(ν)}(s)`.
    #[value(name = "q")]
    Q1,
    /// Multivariate Meixner–Pollaczek `Q_m^{(ν)}(s)`.
    #[value(name = "Q")]
    Q,
    /// Multivariate Laguerre `L_m^{(ν-1)}(x)`.
    #[value(name = "L")]
    L,
    /// Spherical polynomial `Φ_m(x)`.
    #[value(name = "Phi")]
    Phi,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Q1 => "q",
            Family::Q => "Q",
            Family::L => "L",
            Family::Phi => "Phi",
        }
    }

    fn uses_nu(self) -> bool {
        !matches!(self, Family::Phi)
    }
}

fn provenance(family: Family, cfg: &RunConfig) -> Provenance {
    Provenance {
        family: family.tag().into(),
        m: cfg.partition.parts().to_vec(),
        nu: family.uses_nu().then(|| format_rational(&cfg.nu)),
        n: if family == Family::Q1 { 1 } else { cfg.rank },
        d: format_rational(&cfg.mult),
    }
}

fn compute(family: Family, cfg: &RunConfig, prov: Provenance) -> CliResult<PolyJson> {
    let m = &cfg.partition;
    match family {
        Family::Q1 => {
            if m.len() > 1 {
                return Err(CliError::Input(format!("family q takes a single degree, got {m}")));
            }
            Ok(PolyJson::from_poly1(&mp_q(m.part(0), &cfg.nu, MpRoute::Recurrence)?, prov))
        }
        Family::Q => Ok(PolyJson::from_sympoly(&mp_q_mv(m, &cfg.nu, &cfg.cone()?)?.poly, prov)),
        Family::L => Ok(PolyJson::from_sympoly(&laguerre_mv(m, &cfg.nu, &cfg.cone()?)?.poly, prov)),
        Family::Phi => Ok(PolyJson::from_sympoly(&spherical_phi(m, &cfg.cone()?)?, prov)),
    }
}

/// The polynomial in its native basis, through the cache.
pub fn family_poly(family: Family, cfg: &RunConfig, cache: &Cache) -> CliResult<(PolyJson, Lookup)> {
    let prov = provenance(family, cfg);
    cache.get_or_compute(&prov, || compute(family, cfg, prov.clone()))
}

fn as_sympoly(j: &PolyJson) -> CliResult<SymPoly> {
    match j.basis {
        Basis::PowerOfS => {
            let coeffs: BTreeMap<Partition, Rational> = j.to_poly1()?.coeffs().iter().enumerate()
                .map(|(k, c)| (Partition::from_unsorted(&[k]), c.clone()))
                .collect();
            Ok(SymPoly::from_coeffs(1, coeffs)?)
        }
        _ => j.to_sympoly(),
    }
}

/// Re-expresses a family polynomial in the requested basis.
pub fn expand(family: Family, basis: Basis, cfg: &RunConfig, cache: &Cache) -> CliResult<PolyJson> {
    let (j, _) = family_poly(family, cfg, cache)?;
    if j.basis == basis {
        return Ok(j);
    }
    let f = as_sympoly(&j)?;
    match basis {
        Basis::MonomialSymmetric => Ok(PolyJson::from_sympoly(&f, j.provenance)),
        Basis::PowerOfS => {
            if f.nvars() != 1 {
                return Err(CliError::Input("power-of-s basis needs rank 1".into()));
            }
            Ok(PolyJson::from_coeffs(Basis::PowerOfS, f.coeffs(), j.provenance))
        }
        Basis::Phi => {
            let p = ConeParams::new(f.nvars(), cfg.mult.clone())?;
            Ok(PolyJson::from_coeffs(Basis::Phi, &expand_in_phi(&f, &p)?, j.provenance))
        }
    }
}

/// A point is floating when any coordinate has a decimal point or exponent.
#[derive(Clone, Debug, PartialEq)]
pub enum Point {
    Exact(Vec<Rational>),
    Float(Vec<f64>),
}

pub fn parse_point(text: &str) -> CliResult<Point> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.iter().any(|p| p.contains(['.', 'e', 'E'])) {
        let xs = parts
            .iter()
            .map(|p| p.parse::<f64>().map_err(|_| CliError::Input(format!("bad coordinate {p:?}"))))
            .collect::<CliResult<Vec<f64>>>()?;
        return Ok(Point::Float(xs));
    }
    Ok(Point::Exact(parts.iter().map(|p| parse_rational(p)).collect::<Result<Vec<_>, _>>()?))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EvalReport {
    pub family: String,
    pub m: Vec<usize>,
    pub nu: Option<String>,
    pub n: usize,
    pub d: String,
    pub point: Vec<String>,
    pub exact: bool,
    pub value: String,
}

pub fn evaluate(family: Family, point: &Point, cfg: &RunConfig, cache: &Cache) -> CliResult<EvalReport> {
    let (j, _) = family_poly(family, cfg, cache)?;
    let f = as_sympoly(&j)?;
    let (len, point_text) = match point {
        Point::Exact(xs) => (xs.len(), xs.iter().map(format_rational).collect::<Vec<_>>()),
        Point::Float(xs) => (xs.len(), xs.iter().map(|x| fmt_f64(*x)).collect()),
    };
    if len != f.nvars() {
        return Err(CliError::Input(format!("point has {len} coordinates, rank is {}", f.nvars())));
    }
    let (exact, value) = match point {
        Point::Exact(xs) => (true, format_rational(&f.eval(xs))),
        Point::Float(xs) => (false, fmt_f64(f.eval_f64(xs))),
    };
    let p = j.provenance;
    Ok(EvalReport { family: p.family, m: p.m, nu: p.nu, n: p.n, d: p.d, point: point_text, exact, value })
}
