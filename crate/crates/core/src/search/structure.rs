use serde::{Deserialize, Serialize};

use crate::eigen::{eigenpair, graph_spectrum};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Entries of a unit eigenvector below this magnitude count as zero.
pub const SIGN_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HubPair {
    pub a: usize,
    pub b: usize,
    pub common_neighbours: usize,
    pub adjacent: bool,
}

/// Degree and eigenvector profile of a graph around its `k` hubs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureReport {
    pub n: usize,
    pub k: usize,
    pub lambda: f64,
    /// Whether `λ_k` is simple; the eigenvector fields are empty otherwise.
    pub simple: bool,
    /// All degrees, largest first.
    pub degrees: Vec<usize>,
    /// The `k` vertices of largest degree, ties broken by label.
    pub hubs: Vec<usize>,
    pub hub_degrees: Vec<usize>,
    pub pairs: Vec<HubPair>,
    /// Vertices where the `λ_k` eigenvector attains its maximum.
    pub argmax_entry: Vec<usize>,
    /// Vertices where it attains its minimum.
    pub argmin_entry: Vec<usize>,
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
    pub cut_vertices: Vec<usize>,
    /// Block sizes, largest first.
    pub blocks: Vec<usize>,
    /// Component sizes after deleting the hubs, largest first.
    pub components_without_hubs: Vec<usize>,
}

impl StructureReport {
    /// Whether an eigenvector extreme is attained at a hub.
    pub fn extremes_at_hubs(&self) -> bool {
        self.simple
            && self.argmax_entry.iter().any(|v| self.hubs.contains(v))
            && self.argmin_entry.iter().any(|v| self.hubs.contains(v))
    }

    /// Vertices with degree at least `n/k − c√n`, and whether every other
    /// vertex has degree at most `c√n`.
    pub fn degree_split(&self, c: f64) -> (usize, bool) {
        let n = self.n as f64;
        let big = n / self.k as f64 - c * n.sqrt();
        let large = self.degrees.iter().filter(|&&d| d as f64 >= big).count();
        let rest_small = self.degrees.iter().skip(large).all(|&d| d as f64 <= c * n.sqrt());
        (large, rest_small)
    }
}

/// Structure of `g` relative to `λ_k`. A repeated `λ_k` has no
/// well-defined eigenvector, so only the degree and block data are filled.
pub fn verify_structure(g: &Graph, k: usize) -> Result<StructureReport> {
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::VertexOutOfRange { vertex: k, n });
    }
    let (lambda, x) = match eigenpair::<f64>(g, k) {
        Ok(pair) => (pair.value, Some(pair.vector)),
        Err(Error::NotSimple { .. }) => (graph_spectrum::<f64>(g)?.values[k - 1], None),
        Err(e) => return Err(e),
    };
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let hubs: Vec<usize> = by_degree[..k].to_vec();
    let mut pairs = Vec::new();
    for (i, &a) in hubs.iter().enumerate() {
        for &b in &hubs[i + 1..] {
            pairs.push(HubPair { a, b, common_neighbours: g.common_neighbors(a, b), adjacent: g.has_edge(a, b) });
        }
    }
    let x = x.as_deref().unwrap_or(&[]);
    let max = x.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min = x.iter().cloned().fold(f64::INFINITY, f64::min);
    let near = |target: f64| (0..x.len()).filter(|&v| (x[v] - target).abs() <= SIGN_TOLERANCE).collect::<Vec<_>>();
    let positive = x.iter().filter(|&&v| v > SIGN_TOLERANCE).count();
    let negative = x.iter().filter(|&&v| v < -SIGN_TOLERANCE).count();
    let (blocks, cut_vertices) = g.blocks();
    let mut blocks: Vec<usize> = blocks.iter().map(Vec::len).collect();
    blocks.sort_unstable_by(|a, b| b.cmp(a));
    let removed = VertexSet::from_vertices(n, hubs.iter().copied())?;
    let mut components: Vec<usize> =
        if k < n { g.delete_vertices(&removed)?.0.components().iter().map(Vec::len).collect() } else { Vec::new() };
    components.sort_unstable_by(|a, b| b.cmp(a));
    Ok(StructureReport {
        n,
        k,
        lambda,
        simple: !x.is_empty(),
        degrees: by_degree.iter().map(|&v| g.degree(v)).collect(),
        hub_degrees: hubs.iter().map(|&v| g.degree(v)).collect(),
        hubs,
        pairs,
        argmax_entry: near(max),
        argmin_entry: near(min),
        positive,
        zero: x.len() - positive - negative,
        negative,
        cut_vertices,
        blocks,
        components_without_hubs: components,
    })
}
