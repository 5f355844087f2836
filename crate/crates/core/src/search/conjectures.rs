use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::enumerate::MAX_EXHAUSTIVE;
use super::extremal::{extremal_with, lambda_k, lowest_degree_deletions, Candidate, SearchFamily, SearchOptions};
use super::structured::MAX_STRUCTURED_N;
use crate::constructions::{bridged_double_fan, fan_star, triple_fan_chain, ChainVariant};
use crate::error::{Error, Result};
use crate::graph::canon::are_isomorphic;
use crate::graph::{graph6, Graph};

/// Which conjectured extremal family to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ConjectureKind {
    /// `n = kq + 1`: `k` copies of `fan(q)` on a centre vertex.
    KqPlusOne { k: usize },
    /// `n = 3q`: three copies of `fan(q)` glued in a chain.
    ThreeQ,
    /// `n = 3q + 2`: a `3(q + 1)` chain less a vertex of least degree.
    ThreeQPlusTwo,
    /// Even `n ≥ 14`: the bridged double fan is the unique maximizer of `λ2`.
    EvenFrom14,
}

impl ConjectureKind {
    pub fn k(&self) -> usize {
        match self {
            ConjectureKind::KqPlusOne { k } => *k,
            ConjectureKind::ThreeQ | ConjectureKind::ThreeQPlusTwo => 3,
            ConjectureKind::EvenFrom14 => 2,
        }
    }

    /// Orders the conjecture speaks about, up to `max_n`.
    pub fn orders(&self, max_n: usize) -> Vec<usize> {
        let k = self.k();
        let first = match self {
            ConjectureKind::KqPlusOne { .. } => 3 * k + 1,
            ConjectureKind::ThreeQ => 9,
            ConjectureKind::ThreeQPlusTwo => 11,
            ConjectureKind::EvenFrom14 => 14,
        };
        let step = if matches!(self, ConjectureKind::EvenFrom14) { 2 } else { k };
        (first..=max_n).step_by(step).collect()
    }

    /// The conjectured maximizers on `n` vertices.
    pub fn conjectured(&self, n: usize) -> Vec<(String, Graph)> {
        let named = |name: String, g: Result<Graph>| g.ok().map(|g| (name, g));
        match self {
            ConjectureKind::KqPlusOne { k } => {
                named(format!("fan_star({k},{n})"), fan_star(*k, n)).into_iter().collect()
            }
            ConjectureKind::ThreeQ => ChainVariant::ALL
                .iter()
                .filter_map(|v| named(format!("triple_fan_chain({},{v:?})", n / 3), triple_fan_chain(n / 3, *v)))
                .collect(),
            ConjectureKind::ThreeQPlusTwo => lowest_degree_deletions(n),
            ConjectureKind::EvenFrom14 => {
                named(format!("bridged_double_fan({})", n / 2), bridged_double_fan(n / 2)).into_iter().collect()
            }
        }
    }
}

impl fmt::Display for ConjectureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConjectureKind::KqPlusOne { k } => write!(f, "{k}q+1"),
            ConjectureKind::ThreeQ => f.write_str("3q"),
            ConjectureKind::ThreeQPlusTwo => f.write_str("3q+2"),
            ConjectureKind::EvenFrom14 => f.write_str("even"),
        }
    }
}

impl FromStr for ConjectureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Ok(match s {
            "3q" => ConjectureKind::ThreeQ,
            "3q+2" => ConjectureKind::ThreeQPlusTwo,
            "even" | "even>=14" | "even≥14" => ConjectureKind::EvenFrom14,
            "kq+1" => ConjectureKind::KqPlusOne { k: 3 },
            _ => match s.strip_suffix("q+1").and_then(|k| k.parse::<usize>().ok()) {
                Some(k) if k >= 2 => ConjectureKind::KqPlusOne { k },
                _ => {
                    return Err(Error::Config(format!(
                        "unknown conjecture kind {s:?}; expected kq+1, <k>q+1, 3q, 3q+2 or even"
                    )))
                }
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ConjectureStatus {
    /// A conjectured graph attains the searched maximum.
    Consistent,
    /// The search found a strictly better graph.
    Counterexample { graph6: String },
}

impl fmt::Display for ConjectureStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConjectureStatus::Consistent => f.write_str("CONSISTENT"),
            ConjectureStatus::Counterexample { graph6 } => write!(f, "COUNTEREXAMPLE({graph6})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub k: usize,
    pub family: SearchFamily,
    pub conjectured: Vec<Candidate>,
    pub search_best: f64,
    pub argmax: Vec<String>,
    /// The maximizer is unique and is a conjectured graph.
    pub unique_and_conjectured: bool,
    pub status: ConjectureStatus,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub kind: ConjectureKind,
    pub rows: Vec<ConjectureRow>,
}

impl ConjectureReport {
    pub fn consistent(&self) -> bool {
        self.rows.iter().all(|r| r.status == ConjectureStatus::Consistent)
    }
}

/// Family searched at `n`: exhaustive where affordable, else the structured
/// family matching the conjecture.
pub fn family_for(kind: ConjectureKind, n: usize, opts: &SearchOptions) -> Option<SearchFamily> {
    let exhaustive_cap = if opts.allow_twelve { MAX_EXHAUSTIVE + 1 } else { MAX_EXHAUSTIVE };
    if n <= exhaustive_cap {
        Some(SearchFamily::Exhaustive)
    } else if matches!(kind, ConjectureKind::EvenFrom14) {
        (n <= MAX_STRUCTURED_N).then_some(SearchFamily::TwoHubStructured { two_connected: false })
    } else {
        Some(SearchFamily::FanAssembly)
    }
}

/// Compares the conjectured graphs with the search maximum at every
/// feasible order up to `max_n`.
pub fn conjecture_suite(kind: ConjectureKind, max_n: usize) -> Result<ConjectureReport> {
    conjecture_suite_with(kind, max_n, &SearchOptions::default())
}

pub fn conjecture_suite_with(kind: ConjectureKind, max_n: usize, opts: &SearchOptions) -> Result<ConjectureReport> {
    let k = kind.k();
    let mut rows = Vec::new();
    for n in kind.orders(max_n) {
        let Some(family) = family_for(kind, n, opts) else { continue };
        let result = extremal_with(n, k, family, opts)?;
        let conj = kind.conjectured(n);
        let conjectured: Vec<Candidate> = conj
            .iter()
            .map(|(name, g)| Candidate {
                name: name.clone(),
                graph6: graph6::encode(g),
                value: lambda_k(g, k).unwrap_or(f64::NAN),
            })
            .collect();
        let conj_best = conjectured.iter().map(|c| c.value).fold(f64::NEG_INFINITY, f64::max);
        let status = if conj_best >= result.best - result.tie_tolerance {
            ConjectureStatus::Consistent
        } else {
            ConjectureStatus::Counterexample { graph6: result.argmax[0].clone() }
        };
        let unique_and_conjectured = result.unique() && {
            let g = result.argmax_graphs()?.remove(0);
            conj.iter().any(|(_, c)| are_isomorphic(c, &g))
        };
        rows.push(ConjectureRow {
            n,
            k,
            family,
            conjectured,
            search_best: result.best,
            argmax: result.argmax,
            unique_and_conjectured,
            status,
        });
    }
    Ok(ConjectureReport { kind, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_parse_and_print() {
        for s in ["3q+1", "2q+1", "3q", "3q+2", "even"] {
            assert_eq!(s.parse::<ConjectureKind>().unwrap().to_string(), s);
        }
        assert_eq!("kq+1".parse::<ConjectureKind>().unwrap(), ConjectureKind::KqPlusOne { k: 3 });
        assert!("1q+1".parse::<ConjectureKind>().is_err());
        assert_eq!(ConjectureKind::ThreeQPlusTwo.orders(20), vec![11, 14, 17, 20]);
        assert_eq!(ConjectureKind::EvenFrom14.orders(19), vec![14, 16, 18]);
    }

    #[test]
    fn bridged_is_family_best_at_14() {
        let r = conjecture_suite(ConjectureKind::EvenFrom14, 14).unwrap();
        assert_eq!(r.rows.len(), 1);
        assert!(r.consistent());
        assert!(r.rows[0].unique_and_conjectured);
    }

    #[test]
    fn three_q_plus_one_at_ten() {
        let r = conjecture_suite(ConjectureKind::KqPlusOne { k: 3 }, 10).unwrap();
        assert_eq!(r.rows[0].family, SearchFamily::Exhaustive);
        assert!(r.consistent());
    }
}
