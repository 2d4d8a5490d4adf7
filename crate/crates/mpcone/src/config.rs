//! `RunConfig`: every knob a command can read, with serde round trip.
//!
//! Defaults: rank 1, d = 2, ν = 2, m = (), max_m = 30, max_weight = 4,
//! seed = 0, tolerance = 1e-6, quadrature from [`QuadratureSpec::default`],
//! table output.

use std::path::Path;

use mpcone_core::quadrature::QuadratureSpec;
use mpcone_core::rational::{format_rational, parse_rational};
use mpcone_core::{ConeParams, Partition, Rational};
use serde::{Deserialize, Serialize};

use crate::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
}

/// Optional overrides of the quadrature controls.
#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct QuadratureOverrides {
    pub radius: Option<f64>,
    pub order: Option<usize>,
    pub panel_width: Option<f64>,
    pub tolerance: Option<f64>,
    pub max_doublings: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub rank: usize,
    #[serde(with = "rational_text")]
    pub mult: Rational,
    #[serde(with = "rational_text")]
    pub nu: Rational,
    #[serde(with = "partition_list")]
    pub partition: Partition,
    /// Degree bound for rank-one suites.
    pub max_m: usize,
    /// Weight bound `|m|` for multivariate suites.
    pub max_weight: usize,
    pub seed: u64,
    /// Acceptance threshold for numeric comparisons.
    pub tolerance: f64,
    pub quadrature: QuadratureOverrides,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            rank: 1,
            mult: Rational::from_integer(2.into()),
            nu: Rational::from_integer(2.into()),
            partition: Partition::empty(),
            max_m: 30,
            max_weight: 4,
            seed: 0,
            tolerance: 1e-6,
            quadrature: QuadratureOverrides::default(),
            format: OutputFormat::Table,
        }
    }
}

impl RunConfig {
    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("config: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn cone(&self) -> CliResult<ConeParams> {
        Ok(ConeParams::new(self.rank, self.mult.clone())?)
    }

    pub fn quadrature_spec(&self) -> QuadratureSpec {
        let mut q = QuadratureSpec::default();
        let o = &self.quadrature;
        if o.radius.is_some() {
            q.radius = o.radius;
        }
        if let Some(v) = o.order {
            q.order = v;
        }
        if let Some(v) = o.panel_width {
            q.panel_width = v;
        }
        if let Some(v) = o.tolerance {
            q.tolerance = v;
        }
        if let Some(v) = o.max_doublings {
            q.max_doublings = v;
        }
        q
    }
}

pub fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

pub fn parse_partition_arg(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

mod rational_text {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

pub(crate) mod partition_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &Partition, s: S) -> Result<S::Ok, S::Error> {
        m.parts().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Partition, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(&parts).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mpcone_core::rational::ratio;

    #[test]
    fn json_round_trip() {
        let mut c = RunConfig::default();
        c.rank = 3;
        c.mult = ratio(5, 2);
        c.nu = ratio(-7, 3);
        c.partition = "3,1".parse().unwrap();
        c.quadrature.radius = Some(12.5);
        c.format = OutputFormat::Json;
        let back = RunConfig::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.to_json(), c.to_json());
    }

    #[test]
    fn missing_fields_take_defaults() {
        let c = RunConfig::from_json(r#"{"rank": 2, "nu": "1/2"}"#).unwrap();
        assert_eq!(c.rank, 2);
        assert_eq!(c.nu, ratio(1, 2));
        assert_eq!(c.max_m, 30);
    }

    #[test]
    fn unknown_field_rejected() {
        assert!(RunConfig::from_json(r#"{"rnak": 2}"#).is_err());
    }
}
