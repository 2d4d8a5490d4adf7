//! Report records shared by the commands, and their table rendering.

use serde::Serialize;

/// Rounds to 15 significant digits, the precision every report carries.
pub fn sig15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

/// Decimal text of a float at 15 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{:?}", sig15(x))
}

/// `a+bi` text; the imaginary part is dropped when it is zero.
pub fn fmt_complex(re: f64, im: f64) -> String {
    if im == 0.0 {
        return fmt_f64(re);
    }
    let sign = if im < 0.0 { '-' } else { '+' };
    format!("{}{sign}{}i", fmt_f64(re), fmt_f64(im.abs()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Reported for information; never affects the exit code.
    Info,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: if passed { Status::Pass } else { Status::Fail }, detail: detail.into() }
    }

    pub fn info(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Info, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: &str, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.status != Status::Fail);
        SuiteReport { suite: suite.into(), passed, checks }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn new(seed: u64, suites: Vec<SuiteReport>) -> Self {
        VerifyReport { seed, passed: suites.iter().all(|s| s.passed), suites }
    }

    pub fn table(&self) -> String {
        let rows: Vec<[String; 4]> = self
            .suites
            .iter()
            .flat_map(|s| {
                s.checks.iter().map(move |c| {
                    let st = match c.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::Info => "info",
                    };
                    [s.suite.clone(), c.name.clone(), st.to_string(), c.detail.clone()]
                })
            })
            .collect();
        let mut out = render_table(&["suite", "check", "status", "detail"], &rows);
        out.push_str(if self.passed { "overall: PASS\n" } else { "overall: FAIL\n" });
        out
    }
}

/// Left-aligned columns separated by two spaces.
pub fn render_table<const N: usize>(header: &[&str; N], rows: &[[String; N]]) -> String {
    let mut width = header.map(|h| h.chars().count());
    for r in rows {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&width).enumerate() {
            if i + 1 == N {
                s.push_str(cell);
            } else {
                s.push_str(&format!("{cell:<w$}  "));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

/// Key/value lines for single-record reports.
pub fn render_pairs(pairs: &[(String, String)]) -> String {
    let w = pairs.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    pairs.iter().map(|(k, v)| format!("{k:<w$}  {v}\n")).collect()
}
