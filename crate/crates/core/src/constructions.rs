//! Named graph families.
//!
//! Labeling: hubs come first (`0..k`), then the path vertices of each fan in
//! path order, component after component, then any extra vertices (centres,
//! apexes). Fan `i` has hub `i`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::outerplanar::is_outerplanar;

fn invalid(family: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameters { family, reason: reason.into() }
}

/// Vertex layout of a graph made of fans: hub of fan `i` and its path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanLayout {
    pub hubs: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
    pub extra: Vec<usize>,
    pub n: usize,
}

impl FanLayout {
    /// Fans with `path_lens[i]` path vertices each, plus `extra` vertices.
    pub fn new(path_lens: &[usize], extra: usize) -> Self {
        let k = path_lens.len();
        let mut next = k;
        let mut paths = Vec::with_capacity(k);
        for &len in path_lens {
            paths.push((next..next + len).collect());
            next += len;
        }
        let extra: Vec<usize> = (next..next + extra).collect();
        let n = next + extra.len();
        Self { hubs: (0..k).collect(), paths, extra, n }
    }

    /// Graph with every fan's hub and path edges.
    pub fn fans(&self) -> Result<Graph> {
        let mut g = Graph::empty(self.n)?;
        for (hub, path) in self.hubs.iter().zip(&self.paths) {
            for (i, &v) in path.iter().enumerate() {
                g.add_edge(*hub, v)?;
                if i + 1 < path.len() {
                    g.add_edge(v, path[i + 1])?;
                }
            }
        }
        Ok(g)
    }
}

/// The fan `K1 ∨ P_{n-1}`: hub 0, path `1..n`.
pub fn fan(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid("fan", format!("need n >= 2, got {n}")));
    }
    FanLayout::new(&[n - 1], 0).fans()
}

/// Two copies of `fan(q)` joined by an edge between path endpoints.
///
/// Hubs 0 and 1; the bridge joins the last path vertex of the first fan to
/// the first path vertex of the second, so vertices `2..2q` induce a path.
pub fn bridged_double_fan(q: usize) -> Result<Graph> {
    if q < 3 {
        return Err(invalid("bridged-double-fan", format!("need q >= 3, got {q}")));
    }
    let layout = FanLayout::new(&[q - 1, q - 1], 0);
    let mut g = layout.fans()?;
    g.add_edge(*layout.paths[0].last().expect("path"), layout.paths[1][0])?;
    Ok(g)
}

/// Fans on `⌊n/2⌋` and `⌈n/2⌉` vertices with crossing edges
/// first↔second and second↔first between their path starts.
pub fn diamond_double_fan(n: usize) -> Result<Graph> {
    if n < 8 {
        return Err(invalid("diamond-double-fan", format!("need n >= 8, got {n}")));
    }
    let (a, b) = (n / 2, n - n / 2);
    let layout = FanLayout::new(&[a - 1, b - 1], 0);
    let mut g = layout.fans()?;
    let (pa, pb) = (&layout.paths[0], &layout.paths[1]);
    g.add_edge(pa[0], pb[1])?;
    g.add_edge(pa[1], pb[0])?;
    Ok(g)
}

/// Fans attached to a new centre vertex (the last label) through one path
/// endpoint each.
///
/// With `n = kq + r`, `1 <= r <= k`, there are `r - 1` copies of
/// `fan(q + 1)` followed by `k - r + 1` copies of `fan(q)`.
pub fn fan_star(k: usize, n: usize) -> Result<Graph> {
    let (sizes, _) = fan_star_sizes(k, n)?;
    let layout = FanLayout::new(&sizes.iter().map(|s| s - 1).collect::<Vec<_>>(), 1);
    let mut g = layout.fans()?;
    let centre = layout.extra[0];
    for path in &layout.paths {
        g.add_edge(centre, path[0])?;
    }
    Ok(g)
}

/// Fan sizes of `fan_star(k, n)` and the quotient `q`.
pub fn fan_star_sizes(k: usize, n: usize) -> Result<(Vec<usize>, usize)> {
    if k < 2 {
        return Err(invalid("fan-star", format!("need k >= 2, got {k}")));
    }
    if n < 2 * k + 1 {
        return Err(invalid("fan-star", format!("need n >= 2k + 1 = {}, got {n}", 2 * k + 1)));
    }
    let q = (n - 1) / k;
    let r = n - k * q;
    let mut sizes = vec![q + 1; r - 1];
    sizes.extend(std::iter::repeat_n(q, k - r + 1));
    Ok((sizes, q))
}

/// Two copies of `fan(q)` and a centre vertex `2q` adjacent to one or two
/// vertices of each copy. `attach[s]` lists vertices of copy `s` in fan
/// labels (0 is the hub, `1..q` the path).
pub fn cut_vertex_family(q: usize, attach: &[Vec<usize>]) -> Result<Graph> {
    if q < 3 {
        return Err(invalid("cut-vertex-family", format!("need q >= 3, got {q}")));
    }
    if attach.len() != 2 {
        return Err(invalid("cut-vertex-family", "need one attachment list per side"));
    }
    let layout = FanLayout::new(&[q - 1, q - 1], 1);
    let mut g = layout.fans()?;
    let centre = layout.extra[0];
    for (side, list) in attach.iter().enumerate() {
        if list.is_empty() || list.len() > 2 {
            return Err(invalid("cut-vertex-family", format!("side {side}: 1 or 2 attachments, got {}", list.len())));
        }
        for &local in list {
            let v = match local {
                0 => layout.hubs[side],
                i if i < q => layout.paths[side][i - 1],
                _ => return Err(invalid("cut-vertex-family", format!("side {side}: vertex {local} not in fan({q})"))),
            };
            if g.has_edge(centre, v) {
                return Err(invalid("cut-vertex-family", format!("side {side}: repeated vertex {local}")));
            }
            g.add_edge(centre, v)?;
        }
    }
    let cert = is_outerplanar(&g);
    if let Some(w) = cert.witness() {
        return Err(Error::NotOuterplanar(format!("{:?} minor with branch sets {:?}", w.kind, w.branch_sets)));
    }
    Ok(g)
}

/// The 12-vertex graph: fans `u0; u1..u4` and `v0; v1..v4`, apex `c0` on
/// `u2, u3`, apex `c2` on `v2, v3`, and the bridge `c0 c2`.
///
/// Labels: `u0 = 0`, `v0 = 1`, `u1..u4 = 2..=5`, `v1..v4 = 6..=9`,
/// `c0 = 10`, `c2 = 11`.
pub fn figure3_graph() -> Graph {
    let layout = FanLayout::new(&[4, 4], 2);
    let mut g = layout.fans().expect("fixed size");
    let (c0, c2) = (layout.extra[0], layout.extra[1]);
    for (apex, path) in [(c0, &layout.paths[0]), (c2, &layout.paths[1])] {
        g.add_edge(apex, path[1]).expect("fixed size");
        g.add_edge(apex, path[2]).expect("fixed size");
    }
    g.add_edge(c0, c2).expect("fixed size");
    g
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// The runner-up 2-connected graph: the two fans of `diamond_double_fan(n)`
/// joined by parallel edges first↔first and second↔second instead.
///
/// For odd `n` the hub of the larger fan is vertex 1, as in the diamond.
pub fn g0_prime(parity: Parity, n: usize) -> Result<Graph> {
    if n < 10 {
        return Err(invalid("g0-prime", format!("need n >= 10, got {n}")));
    }
    if Parity::of(n) != parity {
        return Err(invalid("g0-prime", format!("n = {n} does not have parity {parity:?}")));
    }
    let (a, b) = (n / 2, n - n / 2);
    let layout = FanLayout::new(&[a - 1, b - 1], 0);
    let mut g = layout.fans()?;
    let (pa, pb) = (&layout.paths[0], &layout.paths[1]);
    g.add_edge(pa[0], pb[0])?;
    g.add_edge(pa[1], pb[1])?;
    Ok(g)
}

/// How consecutive fans are glued in [`triple_fan_chain`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainVariant {
    /// Last path vertex of fan `i` to the hub of fan `i + 1`.
    #[default]
    EndpointToHub,
    /// Last path vertex of fan `i` to the first path vertex of fan `i + 1`.
    EndpointToEndpoint,
    /// A path endpoint of each outer fan to the hub of the middle fan.
    OuterEndpointsToMiddleHub,
}

impl ChainVariant {
    pub const ALL: [ChainVariant; 3] =
        [ChainVariant::EndpointToHub, ChainVariant::EndpointToEndpoint, ChainVariant::OuterEndpointsToMiddleHub];
}

/// Three copies of `fan(q)` glued by two edges.
pub fn triple_fan_chain(q: usize, variant: ChainVariant) -> Result<Graph> {
    if q < 3 {
        return Err(invalid("triple-fan-chain", format!("need q >= 3, got {q}")));
    }
    let layout = FanLayout::new(&[q - 1; 3], 0);
    let mut g = layout.fans()?;
    let first = |i: usize| layout.paths[i][0];
    let last = |i: usize| *layout.paths[i].last().expect("path");
    match variant {
        ChainVariant::EndpointToHub => {
            g.add_edge(last(0), layout.hubs[1])?;
            g.add_edge(last(1), layout.hubs[2])?;
        }
        ChainVariant::EndpointToEndpoint => {
            g.add_edge(last(0), first(1))?;
            g.add_edge(last(1), first(2))?;
        }
        ChainVariant::OuterEndpointsToMiddleHub => {
            g.add_edge(last(0), layout.hubs[1])?;
            g.add_edge(first(2), layout.hubs[1])?;
        }
    }
    Ok(g)
}

/// `fan_star(3, 3q + 1)`: three copies of `fan(q)` on a centre vertex.
pub fn triple_fan_star(q: usize) -> Result<Graph> {
    if q < 3 {
        return Err(invalid("triple-fan-star", format!("need q >= 3, got {q}")));
    }
    fan_star(3, 3 * q + 1)
}

/// Any family member, as named on the command line and in run files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    Fan {
        n: usize,
    },
    BridgedDoubleFan {
        q: usize,
    },
    DiamondDoubleFan {
        n: usize,
    },
    FanStar {
        k: usize,
        n: usize,
    },
    CutVertexFamily {
        q: usize,
        attach: Vec<Vec<usize>>,
    },
    Figure3,
    G0PrimeEven {
        n: usize,
    },
    G0PrimeOdd {
        n: usize,
    },
    TripleFanChain {
        q: usize,
        #[serde(default)]
        variant: ChainVariant,
    },
    TripleFanStar {
        q: usize,
    },
}

impl FamilySpec {
    pub fn tag(&self) -> &'static str {
        match self {
            Self::Fan { .. } => "fan",
            Self::BridgedDoubleFan { .. } => "bridged-double-fan",
            Self::DiamondDoubleFan { .. } => "diamond-double-fan",
            Self::FanStar { .. } => "fan-star",
            Self::CutVertexFamily { .. } => "cut-vertex-family",
            Self::Figure3 => "figure3",
            Self::G0PrimeEven { .. } => "g0-prime-even",
            Self::G0PrimeOdd { .. } => "g0-prime-odd",
            Self::TripleFanChain { .. } => "triple-fan-chain",
            Self::TripleFanStar { .. } => "triple-fan-star",
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            Self::Fan { n } => fan(*n),
            Self::BridgedDoubleFan { q } => bridged_double_fan(*q),
            Self::DiamondDoubleFan { n } => diamond_double_fan(*n),
            Self::FanStar { k, n } => fan_star(*k, *n),
            Self::CutVertexFamily { q, attach } => cut_vertex_family(*q, attach),
            Self::Figure3 => Ok(figure3_graph()),
            Self::G0PrimeEven { n } => g0_prime(Parity::Even, *n),
            Self::G0PrimeOdd { n } => g0_prime(Parity::Odd, *n),
            Self::TripleFanChain { q, variant } => triple_fan_chain(*q, *variant),
            Self::TripleFanStar { q } => triple_fan_star(*q),
        }
    }

    /// Hub labels under the labeling convention.
    pub fn hubs(&self) -> Vec<usize> {
        match self {
            Self::Fan { .. } => vec![0],
            Self::FanStar { k, .. } => (0..*k).collect(),
            Self::TripleFanChain { .. } | Self::TripleFanStar { .. } => vec![0, 1, 2],
            _ => vec![0, 1],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outerplanar::is_outerplanar_fast;

    #[test]
    fn fan_small_cases() {
        assert_eq!(fan(2).unwrap(), Graph::complete(2).unwrap());
        let f4 = fan(4).unwrap();
        let edges: Vec<_> = f4.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(fan(3).unwrap(), Graph::complete(3).unwrap());
        assert!(fan(1).is_err());
    }

    #[test]
    fn bridged_counts_and_degrees() {
        let g = bridged_double_fan(3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 7));
        for q in 3..12 {
            let g = bridged_double_fan(q).unwrap();
            assert_eq!(g.edge_count(), 2 * (2 * q - 3) + 1);
            if q >= 5 {
                assert_eq!(g.degrees().iter().filter(|&&d| d == q - 1).count(), 2, "q = {q}");
            }
            assert!(is_outerplanar_fast(&g));
        }
        let mut g = bridged_double_fan(5).unwrap();
        g.remove_edge(5, 6);
        let two = fan(5).unwrap().disjoint_union(&fan(5).unwrap()).unwrap();
        let perm: Vec<usize> = vec![0, 2, 3, 4, 5, 1, 6, 7, 8, 9];
        assert_eq!(two.permuted(&perm), g);
        assert!(bridged_double_fan(2).is_err());
    }

    #[test]
    fn diamond_structure() {
        let g = diamond_double_fan(9).unwrap();
        assert_eq!((g.degree(0), g.degree(1)), (3, 4));
        for n in 8..30 {
            let g = diamond_double_fan(n).unwrap();
            assert!(g.is_biconnected(), "n = {n}");
            assert!(is_outerplanar_fast(&g), "n = {n}");
            assert_eq!(g.edge_count(), 2 * n - 6 + 2);
        }
        assert!(diamond_double_fan(7).is_err());
    }

    #[test]
    fn fan_star_vertex_count() {
        for k in 2..5 {
            for n in 2 * k + 1..40 {
                let (sizes, q) = fan_star_sizes(k, n).unwrap();
                let r = n - k * q;
                assert_eq!((r - 1) * (q + 1) + (k - r + 1) * q + 1, n);
                assert_eq!(sizes.iter().sum::<usize>() + 1, n);
                let g = fan_star(k, n).unwrap();
                assert_eq!(g.n(), n);
                assert!(g.is_connected());
                assert!(is_outerplanar_fast(&g));
            }
        }
    }

    #[test]
    fn cut_vertex_family_attachments() {
        assert_eq!(cut_vertex_family(6, &[vec![1], vec![1]]).unwrap(), fan_star(2, 13).unwrap());
        assert!(cut_vertex_family(6, &[vec![2, 3], vec![4, 5]]).is_ok());
        assert!(cut_vertex_family(6, &[vec![0, 1], vec![0]]).is_ok());
        let err = cut_vertex_family(6, &[vec![1, 3], vec![1]]).unwrap_err();
        assert!(matches!(err, Error::NotOuterplanar(ref s) if s.contains("K23")), "{err}");
        assert!(cut_vertex_family(6, &[vec![], vec![1]]).is_err());
        assert!(cut_vertex_family(6, &[vec![1, 2, 3], vec![1]]).is_err());
        assert!(cut_vertex_family(6, &[vec![6], vec![1]]).is_err());
    }

    #[test]
    fn figure3_counts() {
        let g = figure3_graph();
        assert_eq!((g.n(), g.edge_count()), (12, 19));
        assert!(g.is_connected());
        assert!(is_outerplanar_fast(&g));
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.degree(3), 4);
    }

    #[test]
    fn g0_prime_is_two_connected_outerplanar() {
        for n in 10..30 {
            let g = g0_prime(Parity::of(n), n).unwrap();
            assert!(g.is_biconnected());
            assert!(is_outerplanar_fast(&g), "n = {n}");
        }
        assert!(g0_prime(Parity::Odd, 12).is_err());
        assert!(g0_prime(Parity::Even, 8).is_err());
    }

    #[test]
    fn chain_variants() {
        for q in 3..10 {
            for v in ChainVariant::ALL {
                let g = triple_fan_chain(q, v).unwrap();
                assert_eq!(g.edge_count(), 3 * (2 * q - 3) + 2);
                assert!(g.is_connected());
                assert!(is_outerplanar_fast(&g));
            }
            let s = triple_fan_star(q).unwrap();
            let centre = s.n() - 1;
            let (rest, _) =
                s.delete_vertices(&crate::graph::VertexSet::from_vertices(s.n(), [centre]).unwrap()).unwrap();
            assert_eq!(rest.components().len(), 3);
            assert_eq!(rest.edge_count(), 3 * (2 * q - 3));
        }
    }

    #[test]
    fn spec_round_trip_and_determinism() {
        let specs = vec![
            FamilySpec::Fan { n: 7 },
            FamilySpec::CutVertexFamily { q: 5, attach: vec![vec![1], vec![2, 3]] },
            FamilySpec::TripleFanChain { q: 4, variant: ChainVariant::EndpointToEndpoint },
            FamilySpec::Figure3,
        ];
        for s in specs {
            let text = serde_json::to_string(&s).unwrap();
            let back: FamilySpec = serde_json::from_str(&text).unwrap();
            assert_eq!(back, s);
            assert_eq!(s.build().unwrap(), back.build().unwrap());
        }
        let chain: FamilySpec = serde_json::from_str(r#"{"family":"triple-fan-chain","q":4}"#).unwrap();
        assert_eq!(chain.build().unwrap(), triple_fan_chain(4, ChainVariant::EndpointToHub).unwrap());
    }
}
