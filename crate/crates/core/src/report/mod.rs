//! The verification harness: configurable check groups, the resulting
//! matrix, and its JSON and Markdown renderings.

mod checks;
pub mod config;

use std::collections::HashSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use checks::log_log_slope;
pub use config::{Budget, VerifyConfig, GROUPS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

/// One row of the matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    /// `group/name`, unique within a matrix.
    pub id: String,
    /// Topic tag of the claim being checked.
    pub anchor: String,
    pub group: String,
    pub parameters: serde_json::Value,
    pub expected: String,
    pub observed: String,
    pub tolerance: Option<f64>,
    /// Distance from the expected value or bound; signed where a direction
    /// matters.
    pub discrepancy: Option<f64>,
    pub status: Status,
    pub runtime_ms: u64,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationMatrix {
    pub budget: Budget,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl VerificationMatrix {
    /// Fails on duplicate ids.
    pub fn new(budget: Budget, seed: u64, checks: Vec<Check>) -> Result<Self> {
        let mut seen = HashSet::new();
        if let Some(dup) = checks.iter().find(|c| !seen.insert(c.id.as_str())) {
            return Err(Error::Config(format!("duplicate check id `{}`", dup.id)));
        }
        Ok(Self { budget, seed, checks })
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// No check failed; skipped checks do not count against a run.
    pub fn succeeded(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let m: Self = serde_json::from_str(text).map_err(|e| Error::Config(format!("matrix: {e}")))?;
        Self::new(m.budget, m.seed, m.checks)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "markdown" | "md" => Ok(Format::Markdown),
            other => Err(Error::Config(format!("unknown format `{other}`; expected json or markdown"))),
        }
    }
}

/// Runs the selected check groups in parallel. Rows come out in group
/// order, then in the order each group lists them. When `output` is set,
/// `matrix.json` and `matrix.md` are written there.
pub fn verify_paper(config: &VerifyConfig) -> Result<VerificationMatrix> {
    config.validate()?;
    let groups: Vec<&str> = GROUPS.iter().copied().filter(|g| config.selects(g)).collect();
    let checks: Vec<Check> = groups.par_iter().flat_map_iter(|g| checks::run_group(g, config)).collect();
    let matrix = VerificationMatrix::new(config.budget, config.seed, checks)?;
    if let Some(dir) = &config.output {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("matrix.json"), report_render(&matrix, Format::Json))?;
        std::fs::write(dir.join("matrix.md"), report_render(&matrix, Format::Markdown))?;
    }
    Ok(matrix)
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}

fn number(x: Option<f64>) -> String {
    x.map_or_else(String::new, |v| format!("{v:.3e}"))
}

pub fn report_render(matrix: &VerificationMatrix, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(matrix).expect("matrix serializes") + "\n",
        Format::Markdown => markdown(matrix),
    }
}

fn markdown(m: &VerificationMatrix) -> String {
    let mut out = String::from("# Verification matrix\n\n");
    let _ = writeln!(
        out,
        "Budget `{}`, seed {}: {} checks, {} PASS, {} FAIL, {} SKIPPED.",
        m.budget,
        m.seed,
        m.checks.len(),
        m.count(Status::Pass),
        m.count(Status::Fail),
        m.count(Status::Skipped)
    );
    let mut order: Vec<&str> = GROUPS.iter().copied().filter(|g| m.checks.iter().any(|c| c.group == *g)).collect();
    for c in &m.checks {
        if !order.contains(&c.group.as_str()) {
            order.push(&c.group);
        }
    }
    for group in order {
        let _ = write!(
            out,
            "\n## {group}\n\n| id | anchor | expected | observed | tolerance | discrepancy | status | ms | note |\n|---|---|---|---|---|---|---|---|---|\n"
        );
        for c in m.checks.iter().filter(|c| c.group == group) {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                cell(&c.id),
                cell(&c.anchor),
                cell(&c.expected),
                cell(&c.observed),
                number(c.tolerance),
                number(c.discrepancy),
                c.status,
                c.runtime_ms,
                cell(c.note.as_deref().unwrap_or(""))
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(id: &str, status: Status) -> Check {
        Check {
            id: id.into(),
            anchor: "fan-series".into(),
            group: id.split('/').next().unwrap().into(),
            parameters: serde_json::json!({ "n": 100 }),
            expected: "a | b".into(),
            observed: "x".into(),
            tolerance: Some(1e-9),
            discrepancy: Some(2e-10),
            status,
            runtime_ms: 3,
            note: None,
        }
    }

    #[test]
    fn empty_matrix_renders() {
        let m = VerificationMatrix::new(Budget::Small, 0, Vec::new()).unwrap();
        let md = report_render(&m, Format::Markdown);
        assert!(md.starts_with("# Verification matrix"));
        assert!(md.contains("0 checks"));
        assert_eq!(VerificationMatrix::from_json(&report_render(&m, Format::Json)).unwrap(), m);
    }

    #[test]
    fn rows_render_with_anchor_and_round_trip() {
        let m = VerificationMatrix::new(Budget::Large, 7, vec![row("fan-series/size=100", Status::Pass)]).unwrap();
        let md = report_render(&m, Format::Markdown);
        assert!(md.contains("## fan-series"));
        assert!(md.contains("| fan-series/size=100 | fan-series | a \\| b |"));
        assert!(md.contains("PASS"));
        let json = report_render(&m, Format::Json);
        assert_eq!(VerificationMatrix::from_json(&json).unwrap(), m);
        assert!(json.find("\"id\"").unwrap() < json.find("\"anchor\"").unwrap());
    }

    #[test]
    fn duplicate_ids_rejected() {
        let rows = vec![row("a/x", Status::Pass), row("a/x", Status::Fail)];
        assert!(VerificationMatrix::new(Budget::Small, 0, rows).is_err());
    }

    #[test]
    fn quick_groups_pass() {
        let config = VerifyConfig {
            groups: vec!["fan-vs-bridged".into(), "split-tables".into(), "expansion".into(), "fig3".into()],
            ..Default::default()
        };
        let m = verify_paper(&config).unwrap();
        assert!(m.succeeded(), "{:#?}", m.failures().collect::<Vec<_>>());
        assert_eq!(m.get("fig3/exhaustive").unwrap().status, Status::Skipped);
        assert_eq!(m.get("fig3/comparison").unwrap().status, Status::Pass);
        assert_eq!(m.checks.first().unwrap().group, "fan-vs-bridged");
    }

    #[test]
    fn default_walk_moments_fail_only_below_six() {
        let config = VerifyConfig { groups: vec!["walk-moments".into()], ..Default::default() };
        let m = verify_paper(&config).unwrap();
        let failed: Vec<&str> = m.failures().map(|c| c.id.as_str()).collect();
        assert_eq!(failed, vec!["walk-moments/q=5"]);
        assert_eq!(m.get("walk-moments/q=5").unwrap().discrepancy, Some(8.0));
    }
}
