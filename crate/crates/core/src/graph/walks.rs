//! Exact walk, path and short-cycle counts.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::{Graph, VertexSet};

/// Longest walk length accepted by the exact counters.
pub const MAX_WALK_LENGTH: usize = 12;

/// Walk moments `M_i = 1_S^T A^i 1_T` for `i = 0..=order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkTable {
    pub source: VertexSet,
    pub target: VertexSet,
    pub order: usize,
    pub moments: Vec<i64>,
}

impl WalkTable {
    pub fn get(&self, i: usize) -> i64 {
        self.moments[i]
    }
}

fn check_order(m: usize) -> Result<()> {
    if m > MAX_WALK_LENGTH {
        Err(Error::OrderTooLarge { got: m, max: MAX_WALK_LENGTH })
    } else {
        Ok(())
    }
}

fn check_set(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.universe() != g.n() {
        return Err(Error::VertexOutOfRange { vertex: s.universe(), n: g.n() });
    }
    Ok(())
}

/// One checked integer step `y = A x`.
fn apply(g: &Graph, x: &[i64], length: usize) -> Result<Vec<i64>> {
    let mut y = vec![0i64; g.n()];
    for (u, slot) in y.iter_mut().enumerate() {
        let mut acc = 0i64;
        for v in g.neighbors(u) {
            acc = acc.checked_add(x[v]).ok_or(Error::Overflow { length })?;
        }
        *slot = acc;
    }
    Ok(y)
}

/// Counts walks from `source` to `target` of every length up to `order`.
pub fn walk_moments(g: &Graph, source: &VertexSet, target: &VertexSet, order: usize) -> Result<WalkTable> {
    check_order(order)?;
    check_set(g, source)?;
    check_set(g, target)?;
    let mut x: Vec<i64> = (0..g.n()).map(|v| target.contains(v) as i64).collect();
    let mut moments = Vec::with_capacity(order + 1);
    for i in 0..=order {
        let mut acc = 0i64;
        for u in source.iter() {
            acc = acc.checked_add(x[u]).ok_or(Error::Overflow { length: i })?;
        }
        moments.push(acc);
        if i < order {
            x = apply(g, &x, i + 1)?;
        }
    }
    Ok(WalkTable { source: source.clone(), target: target.clone(), order, moments })
}

/// Row `u` of `A^length`: the number of walks of that length from `u` to
/// every vertex.
pub fn walk_counts_from(g: &Graph, u: usize, length: usize) -> Result<Vec<i64>> {
    check_order(length)?;
    if u >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: u, n: g.n() });
    }
    let mut x = vec![0i64; g.n()];
    x[u] = 1;
    for i in 0..length {
        x = apply(g, &x, i + 1)?;
    }
    Ok(x)
}

/// `l^T A^i r` computed in the scalar type of the weights.
pub fn bilinear_walk_moment<T: Scalar>(g: &Graph, left: &[T], right: &[T], i: usize) -> Result<T> {
    check_order(i)?;
    for w in [left, right] {
        if w.len() != g.n() {
            return Err(Error::VertexOutOfRange { vertex: w.len(), n: g.n() });
        }
    }
    let mut x = right.to_vec();
    for _ in 0..i {
        x = (0..g.n()).map(|u| g.neighbors(u).fold(T::zero(), |acc, v| acc + x[v].clone())).collect();
    }
    Ok(left.iter().zip(&x).fold(T::zero(), |acc, (w, y)| acc + w.clone() * y.clone()))
}

/// `w^T A^i w` computed in the scalar type of the weights.
pub fn signed_walk_moment<T: Scalar>(g: &Graph, weights: &[T], i: usize) -> Result<T> {
    bilinear_walk_moment(g, weights, weights, i)
}

/// Path counts `h_2, h_3, h_4` between two distinct vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathCounts {
    pub u: usize,
    pub v: usize,
    pub h2: u64,
    pub h3: u64,
    pub h4: u64,
}

impl PathCounts {
    pub fn compute(g: &Graph, u: usize, v: usize) -> Result<Self> {
        let mut counts = [0u64; 5];
        validate_pair(g, u, v)?;
        let mut visited = vec![false; g.n()];
        visited[u] = true;
        paths_dfs(g, u, v, 0, 4, &mut visited, &mut counts);
        Ok(Self { u, v, h2: counts[2], h3: counts[3], h4: counts[4] })
    }
}

fn validate_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    for x in [u, v] {
        if x >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
        }
    }
    if u == v {
        return Err(Error::InvalidEdge(u, v));
    }
    Ok(())
}

fn paths_dfs(
    g: &Graph,
    at: usize,
    target: usize,
    depth: usize,
    max_depth: usize,
    visited: &mut [bool],
    counts: &mut [u64],
) {
    for w in g.neighbors(at) {
        if w == target {
            counts[depth + 1] += 1;
        } else if !visited[w] && depth + 1 < max_depth {
            visited[w] = true;
            paths_dfs(g, w, target, depth + 1, max_depth, visited, counts);
            visited[w] = false;
        }
    }
}

/// Number of `u`-`v` paths with exactly `length` edges (2, 3 or 4).
pub fn count_paths(g: &Graph, u: usize, v: usize, length: usize) -> Result<u64> {
    if !(2..=4).contains(&length) {
        return Err(Error::OrderTooLarge { got: length, max: 4 });
    }
    validate_pair(g, u, v)?;
    let mut counts = [0u64; 5];
    let mut visited = vec![false; g.n()];
    visited[u] = true;
    paths_dfs(g, u, v, 0, length, &mut visited, &mut counts);
    Ok(counts[length])
}

/// Triangles through `u`: edges inside `N(u)`.
pub fn triangles_at(g: &Graph, u: usize) -> usize {
    let nb: Vec<usize> = g.neighbors(u).collect();
    nb.iter().map(|&a| nb.iter().filter(|&&b| b > a && g.has_edge(a, b)).count()).sum()
}

/// 4-cycles through `u`: each is fixed by its opposite vertex `w` and a
/// pair of common neighbours of `u` and `w`.
pub fn four_cycles_at(g: &Graph, u: usize) -> usize {
    (0..g.n())
        .filter(|&w| w != u)
        .map(|w| {
            let c = g.common_neighbors(u, w);
            c * c.saturating_sub(1) / 2
        })
        .sum()
}
