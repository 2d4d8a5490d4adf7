use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mpcone::cache::Cache;
use mpcone::config::{parse_partition_arg, parse_rational_arg, OutputFormat, RunConfig};
use mpcone::eval::{evaluate, expand, parse_point, Family};
use mpcone::exec::{gue_moment_parallel, Rayon};
use mpcone::moments::{run_moments, MomentsRequest};
use mpcone::polyjson::Basis;
use mpcone::report::{fmt_complex, fmt_f64, render_pairs, render_table, sig15, VerifyReport};
use mpcone::verify::{run_suite, VerifyOptions};
use mpcone::{CliError, CliResult};
use mpcone_core::gue::gue_moment_exact;
use mpcone_core::{Partition, Rational};
use num_complex::Complex64;
use serde::Serialize;

/// Exact and numeric checks for multivariate Meixner–Pollaczek and Laguerre
/// polynomials on symmetric cones.
///
/// Exit codes: 0 success, 1 verification or tolerance failure, 2 invalid input.
#[derive(Parser, Debug)]
#[command(name = "mpcone", version)]
struct Cli {
    /// JSON run configuration; flags given on the command line take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,

    #[command(subcommand)]
    command: Command,
}

/// Flags that map onto `RunConfig`.
#[derive(Args, Debug, Clone, Default)]
struct Common {
    /// Rank n of the cone.
    #[arg(long)]
    rank: Option<usize>,
    /// Multiplicity d, as "p/q".
    #[arg(long = "d", value_parser = parse_rational_arg)]
    mult: Option<Rational>,
    /// ν, as "p/q".
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    nu: Option<Rational>,
    /// Partition, e.g. "2,1".
    #[arg(long, value_parser = parse_partition_arg)]
    m: Option<Partition>,
    /// Degree bound for rank-one suites.
    #[arg(long)]
    max_m: Option<usize>,
    /// Bound on |m| for multivariate suites.
    #[arg(long)]
    max_weight: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Acceptance threshold for numeric comparisons.
    #[arg(long)]
    tolerance: Option<f64>,
    /// Quadrature truncation radius.
    #[arg(long)]
    radius: Option<f64>,
    /// Gauss–Legendre points per panel.
    #[arg(long)]
    order: Option<usize>,
    #[arg(long)]
    panel_width: Option<f64>,
    /// Relative agreement between quadrature refinements.
    #[arg(long)]
    quad_tolerance: Option<f64>,
    #[arg(long)]
    max_doublings: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate q_m, Q_m, L_m or Phi_m at a point.
    Eval {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated coordinates; a decimal point or exponent switches to floating point.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[command(flatten)]
        common: Common,
    },
    /// Print a family polynomial as PolyJSON in the requested basis.
    Expand {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, value_enum, default_value = "monomial-symmetric")]
        basis: Basis,
        #[command(flatten)]
        common: Common,
    },
    /// Run verification suites.
    Verify {
        /// univariate, jack, binomial, generating, determinantal, difference, pieri, moments or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        common: Common,
    },
    /// Compare exact moment formulas with quadrature.
    Moments {
        /// κ = ν - (d/2)(n-1); overrides --nu.
        #[arg(long, value_parser = parse_rational_arg)]
        kappa: Option<Rational>,
        /// Moment of a polynomial, e.g. "1", "2*m(2); -1/3*m(1,1)".
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<String>,
        /// Compare F1 with its closed form.
        #[arg(long)]
        f1: bool,
        /// Real part of the F1 argument.
        #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
        z: f64,
        /// Imaginary part of the F1 argument.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        z_im: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Monte Carlo estimate of (1/n) E tr X^{2m} for GUE matrices.
    Gue {
        /// Matrix size.
        #[arg(long)]
        n: usize,
        /// Half the trace power.
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the resolved run configuration as JSON.
    Config {
        #[command(flatten)]
        common: Common,
    },
}

fn resolve(file: Option<&PathBuf>, format: Option<OutputFormat>, c: &Common) -> CliResult<RunConfig> {
    let mut cfg = match file {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(v) = c.rank {
        cfg.rank = v;
    }
    if let Some(v) = &c.mult {
        cfg.mult = v.clone();
    }
    if let Some(v) = &c.nu {
        cfg.nu = v.clone();
    }
    if let Some(v) = &c.m {
        cfg.partition = v.clone();
    }
    if let Some(v) = c.max_m {
        cfg.max_m = v;
    }
    if let Some(v) = c.max_weight {
        cfg.max_weight = v;
    }
    if let Some(v) = c.seed {
        cfg.seed = v;
    }
    if let Some(v) = c.tolerance {
        cfg.tolerance = v;
    }
    let q = &mut cfg.quadrature;
    q.radius = c.radius.or(q.radius);
    q.order = c.order.or(q.order);
    q.panel_width = c.panel_width.or(q.panel_width);
    q.tolerance = c.quad_tolerance.or(q.tolerance);
    q.max_doublings = c.max_doublings.or(q.max_doublings);
    if let Some(f) = format {
        cfg.format = f;
    }
    Ok(cfg)
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serializes") + "\n"
}

#[derive(Serialize)]
struct GueReport {
    n: usize,
    m: usize,
    samples: u64,
    seed: u64,
    estimate: f64,
    std_error: f64,
    exact: f64,
    z_score: f64,
    within_3_se: bool,
}

fn run(cli: Cli) -> CliResult<String> {
    let file = cli.config.as_ref();
    match cli.command {
        Command::Eval { family, point, common } => {
            let cfg = resolve(file, cli.format, &common)?;
            let r = evaluate(family, &parse_point(&point)?, &cfg, &Cache::from_env())?;
            Ok(match cfg.format {
                OutputFormat::Table => format!("{}\n", r.value),
                OutputFormat::Json => json(&r),
            })
        }
        Command::Expand { family, basis, common } => {
            let cfg = resolve(file, cli.format, &common)?;
            let j = expand(family, basis, &cfg, &Cache::from_env())?;
            Ok(j.to_json() + "\n")
        }
        Command::Verify { suite, common } => {
            let mut cfg = resolve(file, cli.format, &common)?;
            // the rank is a bound here; without a flag or config file it is 3
            if common.rank.is_none() && file.is_none() {
                cfg.rank = 3;
            }
            let opts = VerifyOptions {
                max_rank: cfg.rank,
                max_m: cfg.max_m,
                max_weight: cfg.max_weight,
                seed: cfg.seed,
                tolerance: cfg.tolerance,
                nu: common.nu.clone(),
                quadrature: cfg.quadrature_spec(),
            };
            let report = VerifyReport::new(cfg.seed, run_suite(&suite, &opts, &Rayon)?);
            let text = match cfg.format {
                OutputFormat::Table => report.table(),
                OutputFormat::Json => json(&report),
            };
            if report.passed {
                Ok(text)
            } else {
                print!("{text}");
                Err(CliError::Failure("verification failed".into()))
            }
        }
        Command::Moments { kappa, chi, f1, z, z_im, common } => {
            let cfg = resolve(file, cli.format, &common)?;
            let req = MomentsRequest {
                kappa,
                m: common.m.clone(),
                chi,
                f1: f1.then_some(Complex64::new(z, z_im)),
            };
            let r = run_moments(&cfg, &req, &Rayon)?;
            let text = match cfg.format {
                OutputFormat::Json => json(&r),
                OutputFormat::Table => {
                    let rows: Vec<[String; 5]> = r
                        .entries
                        .iter()
                        .map(|e| {
                            let closed = match (&e.exact, &e.closed_form) {
                                (Some(x), Some(c)) => format!("{x} = {}", fmt_f64(c[0])),
                                (None, Some(c)) => fmt_complex(c[0], c[1]),
                                _ => "-".into(),
                            };
                            let got = fmt_complex(e.quadrature[0], e.quadrature[1]);
                            let label = match &e.formula {
                                Some(f) => format!("{}  [{f}]", e.quantity),
                                None => e.quantity.clone(),
                            };
                            [label, closed, got, e.error.map(fmt_f64).unwrap_or("-".into()),
                             if e.passed { "PASS".into() } else { "FAIL".into() }]
                        })
                        .collect();
                    let head = format!("rank {}  d {}  nu {}  kappa {}\n", r.rank, r.d, r.nu, r.kappa);
                    head + &render_table(&["quantity", "exact", "quadrature", "error", "status"], &rows)
                }
            };
            if r.passed {
                Ok(text)
            } else {
                print!("{text}");
                Err(CliError::Failure("moment outside tolerance".into()))
            }
        }
        Command::Gue { n, m, samples, seed } => {
            if n == 0 {
                return Err(CliError::Input("matrix size must be positive".into()));
            }
            let format = match file {
                Some(path) => cli.format.unwrap_or(RunConfig::load(path)?.format),
                None => cli.format.unwrap_or_default(),
            };
            let est = gue_moment_parallel(n, m, if m == 0 { samples.min(1) } else { samples }, seed);
            let exact = gue_moment_exact(n, m);
            let (mean, z) = if m == 0 {
                (1.0, 0.0)
            } else if est.std_error > 0.0 {
                (est.mean, (est.mean - exact) / est.std_error)
            } else {
                (est.mean, f64::INFINITY)
            };
            let r = GueReport {
                n,
                m,
                samples: est.samples,
                seed,
                estimate: sig15(mean),
                std_error: sig15(est.std_error),
                exact: sig15(exact),
                z_score: sig15(z),
                within_3_se: z.abs() <= 3.0,
            };
            let text = match format {
                OutputFormat::Json => json(&r),
                OutputFormat::Table => render_pairs(&[
                    ("n".into(), n.to_string()),
                    ("m".into(), m.to_string()),
                    ("samples".into(), r.samples.to_string()),
                    ("estimate".into(), fmt_f64(r.estimate)),
                    ("std_error".into(), fmt_f64(r.std_error)),
                    ("exact".into(), fmt_f64(r.exact)),
                    ("z_score".into(), fmt_f64(r.z_score)),
                ]),
            };
            if r.within_3_se {
                Ok(text)
            } else {
                print!("{text}");
                Err(CliError::Failure("estimate more than 3 standard errors from the exact value".into()))
            }
        }
        Command::Config { common } => Ok(resolve(file, cli.format, &common)?.to_json() + "\n"),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("mpcone: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
