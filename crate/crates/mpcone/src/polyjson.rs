//! `PolyJSON`: exact polynomials on disk and on stdout.
//!
//! ```json
//! {
//!   "schema": 1,
//!   "basis": "monomial-symmetric",
//!   "terms": [{"partition": [1], "coeff": "-1/2"}],
//!   "provenance": {"family": "Q", "m": [1], "nu": "3", "n": 2, "d": "2"}
//! }
//! ```
//!
//! `basis` is one of `monomial-symmetric` (keys are monomial symmetric
//! functions `m_λ`), `phi` (keys index spherical polynomials `Φ_k`) or
//! `power-of-s` (rank one; key `[k]` is `s^k`). Terms are sorted by partition
//! and zero coefficients are omitted, so equal polynomials serialize to equal
//! bytes.

use std::collections::BTreeMap;

use mpcone_core::rational::{format_rational, parse_rational};
use mpcone_core::univariate::Poly1;
use mpcone_core::{Partition, Rational, SymPoly};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::{CliError, CliResult};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum)]
pub enum Basis {
    #[serde(rename = "monomial-symmetric")]
    #[value(name = "monomial-symmetric")]
    MonomialSymmetric,
    #[serde(rename = "phi")]
    #[value(name = "phi")]
    Phi,
    #[serde(rename = "power-of-s")]
    #[value(name = "power-of-s")]
    PowerOfS,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub partition: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    pub family: String,
    pub m: Vec<usize>,
    pub nu: Option<String>,
    pub n: usize,
    pub d: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub schema: u32,
    pub basis: Basis,
    pub terms: Vec<Term>,
    pub provenance: Provenance,
}

impl PolyJson {
    pub fn from_coeffs(basis: Basis, coeffs: &BTreeMap<Partition, Rational>, provenance: Provenance) -> Self {
        let terms = coeffs
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| Term { partition: k.parts().to_vec(), coeff: format_rational(c) })
            .collect();
        PolyJson { schema: SCHEMA_VERSION, basis, terms, provenance }
    }

    pub fn from_sympoly(f: &SymPoly, provenance: Provenance) -> Self {
        Self::from_coeffs(Basis::MonomialSymmetric, f.coeffs(), provenance)
    }

    pub fn from_poly1(f: &Poly1, provenance: Provenance) -> Self {
        let coeffs = f.coeffs().iter().enumerate().map(|(k, c)| (Partition::from_unsorted(&[k]), c.clone())).collect();
        Self::from_coeffs(Basis::PowerOfS, &coeffs, provenance)
    }

    /// Coefficients keyed by partition, in whatever basis the file declares.
    pub fn coeffs(&self) -> CliResult<BTreeMap<Partition, Rational>> {
        let mut out = BTreeMap::new();
        for t in &self.terms {
            let k = Partition::new(&t.partition).map_err(|e| CliError::Input(e.to_string()))?;
            let c = parse_rational(&t.coeff).map_err(|e| CliError::Input(e.to_string()))?;
            if out.insert(k, c).is_some() {
                return Err(CliError::Input(format!("duplicate term {:?}", t.partition)));
            }
        }
        Ok(out)
    }

    pub fn to_sympoly(&self) -> CliResult<SymPoly> {
        if self.basis != Basis::MonomialSymmetric {
            return Err(CliError::Input(format!("expected monomial-symmetric basis, found {:?}", self.basis)));
        }
        SymPoly::from_coeffs(self.provenance.n, self.coeffs()?).map_err(|e| CliError::Input(e.to_string()))
    }

    pub fn to_poly1(&self) -> CliResult<Poly1> {
        if self.basis != Basis::PowerOfS {
            return Err(CliError::Input(format!("expected power-of-s basis, found {:?}", self.basis)));
        }
        let mut v: Vec<Rational> = Vec::new();
        for (k, c) in self.coeffs()? {
            if k.len() > 1 {
                return Err(CliError::Input(format!("power-of-s key {k} has more than one part")));
            }
            let e = k.part(0);
            if v.len() <= e {
                v.resize(e + 1, Rational::zero());
            }
            v[e] = c;
        }
        Ok(Poly1::new(v))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("PolyJSON serializes")
    }

    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("PolyJSON: {e}")))
    }
}
