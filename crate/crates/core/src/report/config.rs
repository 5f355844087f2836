use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Size budget of a verification run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Budget {
    /// Everything except the exhaustive `n = 12` searches.
    #[default]
    Small,
    /// Adds the exhaustive `n = 12` searches (minutes per core).
    Large,
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Budget::Small => "small",
            Budget::Large => "large",
        })
    }
}

impl FromStr for Budget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "small" => Ok(Budget::Small),
            "large" => Ok(Budget::Large),
            other => Err(Error::Config(format!("unknown budget `{other}`; expected small or large"))),
        }
    }
}

/// Check groups, in report order.
pub const GROUPS: [&str; 13] = [
    "walk-moments",
    "fan-series",
    "bridged-series",
    "fan-vs-bridged",
    "cut-vertex",
    "fig3",
    "split-tables",
    "runner-up",
    "expansion",
    "structure",
    "path-counts",
    "oracles",
    "two-connected",
];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct WalkMoments {
    pub qs: Vec<usize>,
}

impl Default for WalkMoments {
    fn default() -> Self {
        Self { qs: vec![5, 10, 25, 50] }
    }
}

/// An error-decay experiment: `|error| ≤ constant / m^power` at every size
/// and a log–log slope at most `max_slope`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Decay {
    pub sizes: Vec<usize>,
    pub constant: f64,
    pub power: f64,
    pub max_slope: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FanVsBridged {
    pub qs: Vec<usize>,
}

impl Default for FanVsBridged {
    fn default() -> Self {
        Self { qs: vec![20, 50, 100] }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CutVertex {
    pub q_min: usize,
    pub q_max: usize,
    pub min_attachments: usize,
    pub tolerance: f64,
}

impl Default for CutVertex {
    fn default() -> Self {
        Self { q_min: 6, q_max: 20, min_attachments: 5, tolerance: 1e-9 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Fig3 {
    pub tolerance: f64,
    /// Checkpoint file for the exhaustive search; resumed when present.
    pub checkpoint: Option<PathBuf>,
}

impl Default for Fig3 {
    fn default() -> Self {
        Self { tolerance: 1e-10, checkpoint: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SplitTables {
    pub qs: Vec<usize>,
    pub tolerance: f64,
}

impl Default for SplitTables {
    fn default() -> Self {
        Self { qs: vec![10, 30], tolerance: 1e-9 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunnerUp {
    pub ns: Vec<usize>,
    pub order: usize,
}

impl Default for RunnerUp {
    fn default() -> Self {
        Self { ns: vec![21, 41], order: 10 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Expansion {
    pub a0: Vec<f64>,
    /// `a_i / a_0` for `i = 0..`.
    pub ratios: Vec<f64>,
    pub max_slope: f64,
}

impl Default for Expansion {
    fn default() -> Self {
        Self { a0: vec![1e2, 1e3, 1e4, 1e5], ratios: vec![1.0, 2.0, 4.0, 8.0, 16.0], max_slope: -1.9 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Structure {
    pub ks: Vec<usize>,
    pub ns: Vec<usize>,
    /// `c` in the thresholds `n/k − c√n` and `c√n`.
    pub degree_constant: f64,
    pub window_ns: Vec<usize>,
    /// `c` in the window `√(n/k) + 1 ± c/√n`.
    pub window_constant: f64,
}

impl Default for Structure {
    fn default() -> Self {
        Self {
            ks: vec![2, 3],
            ns: vec![9, 10, 12, 20, 30],
            degree_constant: 3.0,
            window_ns: vec![100, 200, 400],
            window_constant: 5.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PathCounts {
    pub max_n: usize,
    /// Bounds on `h2, h3, h4`.
    pub bounds: [u64; 3],
}

impl Default for PathCounts {
    fn default() -> Self {
        Self { max_n: 9, bounds: [2, 8, 98] }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Oracles {
    pub brute_force_max_n: usize,
    pub minor_max_n: usize,
    pub interlacing_pairs: usize,
    pub interlacing_max_n: usize,
    pub tolerance: f64,
}

impl Default for Oracles {
    fn default() -> Self {
        Self { brute_force_max_n: 6, minor_max_n: 8, interlacing_pairs: 500, interlacing_max_n: 24, tolerance: 1e-9 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TwoConnected {
    pub n_min: usize,
    pub n_max: usize,
}

impl Default for TwoConnected {
    fn default() -> Self {
        Self { n_min: 14, n_max: 30 }
    }
}

/// A verification run. Every field has a default, so an empty file is a
/// valid configuration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VerifyConfig {
    pub budget: Budget,
    pub seed: u64,
    /// Groups to run; empty means all.
    pub groups: Vec<String>,
    /// Directory for `matrix.json` and `matrix.md`.
    pub output: Option<PathBuf>,
    pub walk_moments: WalkMoments,
    pub fan_series: Decay,
    pub bridged_series: Decay,
    pub fan_vs_bridged: FanVsBridged,
    pub cut_vertex: CutVertex,
    pub fig3: Fig3,
    pub split_tables: SplitTables,
    pub runner_up: RunnerUp,
    pub expansion: Expansion,
    pub structure: Structure,
    pub path_counts: PathCounts,
    pub oracles: Oracles,
    pub two_connected: TwoConnected,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            budget: Budget::Small,
            seed: 0,
            groups: Vec::new(),
            output: None,
            walk_moments: WalkMoments::default(),
            fan_series: Decay { sizes: vec![100, 200, 400, 800, 1600], constant: 5.0, power: 3.0, max_slope: -2.7 },
            bridged_series: Decay { sizes: vec![100, 200, 400, 800], constant: 3.0, power: 2.5, max_slope: -2.2 },
            fan_vs_bridged: FanVsBridged::default(),
            cut_vertex: CutVertex::default(),
            fig3: Fig3::default(),
            split_tables: SplitTables::default(),
            runner_up: RunnerUp::default(),
            expansion: Expansion::default(),
            structure: Structure::default(),
            path_counts: PathCounts::default(),
            oracles: Oracles::default(),
            two_connected: TwoConnected::default(),
        }
    }
}

impl VerifyConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let config: Self = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_toml(&std::fs::read_to_string(path)?)
    }

    /// The configuration as a run file.
    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("configuration serializes")
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(g) = self.groups.iter().find(|g| !GROUPS.contains(&g.as_str())) {
            return Err(Error::Config(format!("unknown check group `{g}`; known: {}", GROUPS.join(", "))));
        }
        Ok(())
    }

    pub fn selects(&self, group: &str) -> bool {
        self.groups.is_empty() || self.groups.iter().any(|g| g == group)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_file_is_default() {
        assert_eq!(VerifyConfig::from_toml("").unwrap(), VerifyConfig::default());
    }

    #[test]
    fn round_trip_and_overrides() {
        let d = VerifyConfig::default();
        assert_eq!(VerifyConfig::from_toml(&d.to_toml()).unwrap(), d);
        let c = VerifyConfig::from_toml("budget = \"large\"\ngroups = [\"fig3\"]\n[walk_moments]\nqs = [7]\n").unwrap();
        assert_eq!(c.budget, Budget::Large);
        assert_eq!(c.walk_moments.qs, vec![7]);
        assert!(c.selects("fig3") && !c.selects("oracles"));
    }

    #[test]
    fn bad_files_are_rejected() {
        assert!(VerifyConfig::from_toml("groups = [\"nope\"]").is_err());
        assert!(VerifyConfig::from_toml("unknown_key = 1").is_err());
        assert!(VerifyConfig::from_toml("budget = 3").is_err());
    }
}
