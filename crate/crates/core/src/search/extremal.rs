use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::enumerate::{enumerate_outerplanar, guard_exhaustive, ExtensionPass, MAX_EXHAUSTIVE};
use super::structured::{cut_vertex_members, fan_assemblies, for_each_two_hub, TwoHubOptions};
use crate::constructions::{
    bridged_double_fan, cut_vertex_family, diamond_double_fan, fan_star, figure3_graph, g0_prime, triple_fan_chain,
    ChainVariant, Parity,
};
use crate::eigen::{eigenpair, graph_spectrum};
use crate::error::{Error, Result};
use crate::graph::canon::canonical_form;
use crate::graph::{graph6, Graph};
use crate::outerplanar::{is_outerplanar, validate_certificate};

/// Values this close to the best count as ties.
pub const TIE_TOLERANCE: f64 = 1e-10;

/// Set of graphs searched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SearchFamily {
    /// Every connected outerplanar graph on `n` vertices.
    Exhaustive,
    /// Two hubs over a path; see [`for_each_two_hub`].
    TwoHubStructured { two_connected: bool },
    /// Two copies of `fan(q)` and a cut vertex, `n = 2q + 1`.
    CutVertexFamily,
    /// `k` near-equal fans in a chain or on a centre vertex.
    FanAssembly,
}

impl fmt::Display for SearchFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchFamily::Exhaustive => "exhaustive",
            SearchFamily::TwoHubStructured { two_connected: false } => "two-hub",
            SearchFamily::TwoHubStructured { two_connected: true } => "two-hub-2c",
            SearchFamily::CutVertexFamily => "cut-vertex",
            SearchFamily::FanAssembly => "fan-assembly",
        })
    }
}

impl FromStr for SearchFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "exhaustive" => SearchFamily::Exhaustive,
            "two-hub" | "two-hub-structured" => SearchFamily::TwoHubStructured { two_connected: false },
            "two-hub-2c" | "two-connected" => SearchFamily::TwoHubStructured { two_connected: true },
            "cut-vertex" | "cut-vertex-family" => SearchFamily::CutVertexFamily,
            "fan-assembly" | "conjecture" => SearchFamily::FanAssembly,
            _ => {
                return Err(Error::Config(format!(
                    "unknown family {s:?}; expected exhaustive, two-hub, two-hub-2c, cut-vertex or fan-assembly"
                )))
            }
        })
    }
}

/// Knobs for [`extremal_with`].
#[derive(Clone, Debug, PartialEq)]
pub struct SearchOptions {
    /// Permit the exhaustive search at `n = 12`.
    pub allow_twelve: bool,
    /// Append progress lines here during exhaustive passes.
    pub checkpoint: Option<PathBuf>,
    /// Continue from the last line of `checkpoint`.
    pub resume: bool,
    /// Stop an exhaustive pass after this many parent graphs.
    pub max_parents: Option<usize>,
    pub tie_tolerance: f64,
    pub two_hub: TwoHubOptions,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            allow_twelve: false,
            checkpoint: None,
            resume: false,
            max_parents: None,
            tie_tolerance: TIE_TOLERANCE,
            two_hub: TwoHubOptions::default(),
        }
    }
}

/// A named graph and its `λ_k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub name: String,
    pub graph6: String,
    pub value: f64,
}

/// Outcome of an extremal search.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub n: usize,
    pub k: usize,
    pub family: SearchFamily,
    pub best: f64,
    /// Canonical graph6 of every maximizer, one per isomorphism class.
    pub argmax: Vec<String>,
    /// Best value outside the tie set.
    pub runner_up: Option<f64>,
    pub gap: Option<f64>,
    /// `‖Ax − λx‖` for each maximizer, when `λ_k` is simple.
    pub residuals: Vec<Option<f64>>,
    /// Graphs evaluated, duplicates included.
    pub examined: u64,
    pub tie_tolerance: f64,
    /// Named constructions on `n` vertices and their values.
    pub candidates: Vec<Candidate>,
}

impl SearchResult {
    /// Whether the best value is at least every candidate value.
    pub fn dominates_candidates(&self) -> bool {
        self.candidates.iter().all(|c| self.best >= c.value - self.tie_tolerance)
    }

    /// Whether the maximizer is unique up to isomorphism with a positive gap.
    pub fn unique(&self) -> bool {
        self.argmax.len() == 1
    }

    pub fn argmax_graphs(&self) -> Result<Vec<Graph>> {
        self.argmax.iter().map(|s| graph6::decode(s)).collect()
    }
}

/// Running maximum with a tie set, mergeable across workers.
#[derive(Clone, Debug)]
pub struct Leaderboard {
    tolerance: f64,
    pub best: f64,
    pub runner_up: f64,
    /// Maximizers keyed by canonical form.
    pub ties: Vec<(Vec<u64>, f64, Graph)>,
    pub examined: u64,
}

impl Leaderboard {
    pub fn new(tolerance: f64) -> Self {
        Self { tolerance, best: f64::NEG_INFINITY, runner_up: f64::NEG_INFINITY, ties: Vec::new(), examined: 0 }
    }

    pub fn push(&mut self, value: f64, g: &Graph) {
        self.examined += 1;
        self.offer(value, g, None);
    }

    fn offer(&mut self, value: f64, g: &Graph, key: Option<Vec<u64>>) {
        if value < self.best - self.tolerance {
            self.runner_up = self.runner_up.max(value);
            return;
        }
        if value > self.best {
            self.best = value;
            let floor = value - self.tolerance;
            let mut dropped = f64::NEG_INFINITY;
            self.ties.retain(|t| {
                let keep = t.1 >= floor;
                if !keep {
                    dropped = dropped.max(t.1);
                }
                keep
            });
            self.runner_up = self.runner_up.max(dropped);
        }
        let key = key.unwrap_or_else(|| canonical_form(g, None).form);
        match self.ties.iter_mut().find(|t| t.0 == key) {
            Some(t) => t.1 = t.1.max(value),
            None => {
                let c = canonical_form(g, None).graph(g);
                self.ties.push((key, value, c));
            }
        }
    }

    pub fn merge(mut self, other: Leaderboard) -> Leaderboard {
        self.examined += other.examined;
        self.runner_up = self.runner_up.max(other.runner_up);
        for (key, value, g) in other.ties {
            self.offer(value, &g, Some(key));
        }
        self
    }

    fn state(&self) -> serde_json::Value {
        let finite = |x: f64| if x.is_finite() { Some(x) } else { None };
        serde_json::json!({
            "best": finite(self.best),
            "runner_up": finite(self.runner_up),
            "examined": self.examined,
            "argmax": self.ties.iter().map(|t| (graph6::encode(&t.2), t.1)).collect::<Vec<_>>(),
        })
    }

    fn restore(state: &serde_json::Value, tolerance: f64) -> Result<Self> {
        let bad = || Error::Config("malformed checkpoint state".into());
        let mut board = Leaderboard::new(tolerance);
        board.examined = state["examined"].as_u64().ok_or_else(bad)?;
        if let Some(r) = state["runner_up"].as_f64() {
            board.runner_up = r;
        }
        for entry in state["argmax"].as_array().ok_or_else(bad)? {
            let g = graph6::decode(entry[0].as_str().ok_or_else(bad)?)?;
            board.offer(entry[1].as_f64().ok_or_else(bad)?, &g, None);
        }
        Ok(board)
    }
}

/// `λ_k` of `g`, 1-based.
pub fn lambda_k(g: &Graph, k: usize) -> Result<f64> {
    if k == 0 || k > g.n() {
        return Err(Error::VertexOutOfRange { vertex: k, n: g.n() });
    }
    Ok(graph_spectrum::<f64>(g)?.lambda(k))
}

fn score(board: &Mutex<Leaderboard>, g: &Graph, k: usize) {
    let value = lambda_k(g, k).expect("k checked before the search");
    board.lock().expect("no panics while locked").push(value, g);
}

/// Named constructions on `n` vertices relevant to `λ_k`.
pub fn named_candidates(n: usize, k: usize) -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut add = |name: String, g: Result<Graph>| {
        if let Ok(g) = g {
            out.push((name, g));
        }
    };
    if n > 2 * k {
        add(format!("fan_star({k},{n})"), fan_star(k, n));
    }
    if k == 2 {
        if n.is_multiple_of(2) {
            add(format!("bridged_double_fan({})", n / 2), bridged_double_fan(n / 2));
        } else if n >= 7 {
            let q = (n - 1) / 2;
            add(format!("cut_vertex_family({q},[[{}],[1]])", q - 1), cut_vertex_family(q, &[vec![q - 1], vec![1]]));
        }
        add(format!("diamond_double_fan({n})"), diamond_double_fan(n));
        add(format!("g0_prime({n})"), g0_prime(Parity::of(n), n));
        if n == 12 {
            add("figure3_graph()".into(), Ok(figure3_graph()));
        }
    }
    if k == 3 && n.is_multiple_of(3) {
        for v in ChainVariant::ALL {
            add(format!("triple_fan_chain({},{v:?})", n / 3), triple_fan_chain(n / 3, v));
        }
    }
    if k == 3 && n % 3 == 2 {
        for (name, g) in lowest_degree_deletions(n) {
            add(name, Ok(g));
        }
    }
    out
}

/// The 3q+2 candidates: a chain on `n + 1` vertices less a vertex of least
/// degree, for each chain variant and each such vertex.
pub fn lowest_degree_deletions(n: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for v in ChainVariant::ALL {
        let Ok(g) = triple_fan_chain((n + 1) / 3, v) else { continue };
        let min = (0..g.n()).map(|u| g.degree(u)).min().unwrap_or(0);
        for u in (0..g.n()).filter(|&u| g.degree(u) == min) {
            let keep: Vec<usize> = (0..g.n()).filter(|&w| w != u).collect();
            let h = g.induced(&keep).expect("valid subset");
            if h.is_connected() {
                out.push((format!("triple_fan_chain({},{v:?}) - v{u}", (n + 1) / 3), h));
            }
        }
    }
    out
}

/// Maximizers of `λ_k` over the family.
pub fn extremal_lambda_k(n: usize, k: usize, family: SearchFamily) -> Result<SearchResult> {
    extremal_with(n, k, family, &SearchOptions::default())
}

/// [`extremal_lambda_k`] restricted to the two-hub family.
pub fn structured_search_two_hub(n: usize, k: usize) -> Result<SearchResult> {
    extremal_lambda_k(n, k, SearchFamily::TwoHubStructured { two_connected: false })
}

pub fn extremal_with(n: usize, k: usize, family: SearchFamily, opts: &SearchOptions) -> Result<SearchResult> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameters { family: "extremal", reason: format!("need 1 <= k <= n, got k = {k}") });
    }
    let board = Mutex::new(Leaderboard::new(opts.tie_tolerance));
    match family {
        SearchFamily::Exhaustive => exhaustive(n, k, opts, &board)?,
        SearchFamily::TwoHubStructured { two_connected } => {
            let o = TwoHubOptions { two_connected, ..opts.two_hub };
            for_each_two_hub(n, &o, |g| score(&board, g, k))?;
        }
        SearchFamily::CutVertexFamily => {
            cut_vertex_members(n)?.par_iter().for_each(|(_, g)| score(&board, g, k));
        }
        SearchFamily::FanAssembly => {
            let members: Vec<Graph> = fan_assemblies(n, k).iter().filter_map(|a| a.build().ok()).collect();
            members.par_iter().for_each(|g| score(&board, g, k));
        }
    }
    let board = board.into_inner().expect("no panics while locked");
    finish(n, k, family, board)
}

fn exhaustive(n: usize, k: usize, opts: &SearchOptions, board: &Mutex<Leaderboard>) -> Result<()> {
    guard_exhaustive(n, opts.allow_twelve)?;
    if n <= MAX_EXHAUSTIVE && opts.checkpoint.is_none() && opts.max_parents.is_none() {
        // one evaluation per class beats one per extension below n = 12
        enumerate_outerplanar(n, true)?.par_iter().for_each(|g| score(board, g, k));
        return Ok(());
    }
    let mut pass = ExtensionPass::new(n, true, opts.allow_twelve)?;
    let mut start = 0;
    if let Some(path) = &opts.checkpoint {
        pass = pass.with_checkpoint(path.clone());
        if opts.resume {
            if let Some(cp) = ExtensionPass::last_checkpoint(path)? {
                if cp.level != n || cp.parents != pass.parents.len() {
                    return Err(Error::Config(format!("checkpoint is for level {}, not {n}", cp.level)));
                }
                *board.lock().expect("unpoisoned") = Leaderboard::restore(&cp.state, opts.tie_tolerance)?;
                start = cp.next_parent;
            }
        }
    }
    pass.run(
        start,
        opts.max_parents,
        |kids| {
            let scored: Vec<(f64, &Graph)> =
                kids.iter().map(|g| (lambda_k(g, k).expect("k checked before the search"), g)).collect();
            let mut b = board.lock().expect("unpoisoned");
            for (v, g) in scored {
                b.push(v, g);
            }
        },
        || board.lock().expect("unpoisoned").state(),
    )
}

fn finish(n: usize, k: usize, family: SearchFamily, board: Leaderboard) -> Result<SearchResult> {
    if board.ties.is_empty() {
        return Err(Error::EmptyFamily(format!("{family} has no members with n = {n}")));
    }
    let mut ties = board.ties;
    ties.sort_by_key(|a| graph6::encode(&a.2));
    let mut argmax = Vec::with_capacity(ties.len());
    let mut residuals = Vec::with_capacity(ties.len());
    for (_, _, g) in &ties {
        debug_assert!(g.n() == n && g.is_connected());
        let cert = is_outerplanar(g);
        if !validate_certificate(g, &cert) || !cert.is_outerplanar() {
            return Err(Error::NotOuterplanar(graph6::encode(g)));
        }
        argmax.push(graph6::encode(g));
        residuals.push(eigenpair::<f64>(g, k).ok().map(|p| p.residual));
    }
    let runner_up = board.runner_up.is_finite().then_some(board.runner_up);
    let candidates = named_candidates(n, k)
        .into_iter()
        .map(|(name, g)| Candidate { graph6: graph6::encode(&g), value: lambda_k(&g, k).unwrap_or(f64::NAN), name })
        .collect();
    Ok(SearchResult {
        n,
        k,
        family,
        best: board.best,
        argmax,
        runner_up,
        gap: runner_up.map(|r| board.best - r),
        residuals,
        examined: board.examined,
        tie_tolerance: board.tolerance,
        candidates,
    })
}
