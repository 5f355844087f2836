//! Exhaustive search for `K4` and `K2,3` minors.
//!
//! Both targets have maximum degree 3, so a graph has one as a minor exactly
//! when it contains a subdivision of it. `K2,3` is found by counting
//! internally disjoint paths between every vertex pair (three paths of
//! length at least two). `K4` is found by choosing four branch vertices and
//! routing the six connecting paths by backtracking, after a series-parallel
//! reduction has ruled out graphs with no `K4` minor at all.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph accepted by [`find_minor`].
pub const MAX_MINOR_VERTICES: usize = 24;

/// Default node budget for [`find_minor`].
pub const DEFAULT_MINOR_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MinorKind {
    K4,
    K23,
}

/// Branch sets of a minor. For `K2,3` the first two sets form the side of
/// size two.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub kind: MinorKind,
    pub branch_sets: Vec<Vec<usize>>,
}

impl MinorWitness {
    /// Pairs of branch sets that must be joined by an edge.
    pub fn required_pairs(&self) -> Vec<(usize, usize)> {
        match self.kind {
            MinorKind::K4 => vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            MinorKind::K23 => vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        }
    }
}

/// Checks disjointness, connectivity and the required super-edges.
pub fn validate_witness(g: &Graph, w: &MinorWitness) -> bool {
    let expected = match w.kind {
        MinorKind::K4 => 4,
        MinorKind::K23 => 5,
    };
    if w.branch_sets.len() != expected {
        return false;
    }
    let mut owner = vec![usize::MAX; g.n()];
    for (i, set) in w.branch_sets.iter().enumerate() {
        if set.is_empty() {
            return false;
        }
        for &v in set {
            if v >= g.n() || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = i;
        }
    }
    for (i, set) in w.branch_sets.iter().enumerate() {
        let mut seen = vec![set[0]];
        let mut queue = vec![set[0]];
        while let Some(u) = queue.pop() {
            for x in g.neighbors(u) {
                if owner[x] == i && !seen.contains(&x) {
                    seen.push(x);
                    queue.push(x);
                }
            }
        }
        if seen.len() != set.len() {
            return false;
        }
    }
    w.required_pairs().into_iter().all(|(i, j)| w.branch_sets[i].iter().any(|&u| g.neighbors(u).any(|x| owner[x] == j)))
}

/// Searches for `h` as a minor of `g`; `None` means there is none.
pub fn find_minor(g: &Graph, h: MinorKind, budget: u64) -> Result<Option<MinorWitness>> {
    if g.n() > MAX_MINOR_VERTICES {
        return Err(Error::InvalidParameters {
            family: "find_minor",
            reason: format!("n = {} exceeds {MAX_MINOR_VERTICES}", g.n()),
        });
    }
    search(g, h, budget)
}

pub(crate) fn search(g: &Graph, h: MinorKind, budget: u64) -> Result<Option<MinorWitness>> {
    let mut nodes = 0u64;
    let (blocks, _) = g.blocks();
    for block in blocks.iter().filter(|b| b.len() >= 4) {
        let local = g.induced(block)?;
        let found = match h {
            MinorKind::K23 => k23_in_block(&local, &mut nodes, budget)?,
            MinorKind::K4 => {
                if series_parallel(&local) {
                    None
                } else {
                    k4_in_block(&local, &mut nodes, budget)?
                }
            }
        };
        if let Some(mut w) = found {
            for set in &mut w.branch_sets {
                for v in set.iter_mut() {
                    *v = block[*v];
                }
                set.sort_unstable();
            }
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn tick(nodes: &mut u64, budget: u64) -> Result<()> {
    *nodes += 1;
    if *nodes > budget {
        Err(Error::BudgetExceeded { nodes: *nodes })
    } else {
        Ok(())
    }
}

/// Whether repeated removal of vertices of degree at most one and
/// suppression of degree-2 vertices (merging parallel edges) empties the
/// edge set; true exactly for graphs with no `K4` minor.
fn series_parallel(g: &Graph) -> bool {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|u| g.neighbors(u).collect()).collect();
    let mut queue: VecDeque<usize> = (0..n).collect();
    while let Some(v) = queue.pop_front() {
        match adj[v].len() {
            0 => {}
            1 => {
                let a = *adj[v].iter().next().expect("one neighbour");
                adj[v].clear();
                adj[a].remove(&v);
                queue.push_back(a);
            }
            2 => {
                let mut it = adj[v].iter();
                let (a, b) = (*it.next().expect("two"), *it.next().expect("two"));
                adj[v].clear();
                adj[a].remove(&v);
                adj[b].remove(&v);
                adj[a].insert(b);
                adj[b].insert(a);
                queue.push_back(a);
                queue.push_back(b);
            }
            _ => {}
        }
    }
    adj.iter().all(|s| s.is_empty())
}

/// Up to `want` internally disjoint `a`-`b` paths that avoid the edge `ab`,
/// by augmenting paths in the vertex-split network (`2v` in, `2v+1` out).
fn disjoint_paths(g: &Graph, a: usize, b: usize, want: usize, nodes: &mut u64, budget: u64) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    let mut res: HashMap<(usize, usize), i32> = HashMap::new();
    for v in 0..n {
        res.insert((2 * v, 2 * v + 1), if v == a || v == b { want as i32 } else { 1 });
    }
    let skip = |u: usize, v: usize| (u == a && v == b) || (u == b && v == a);
    for (u, v) in g.edges() {
        if !skip(u, v) {
            res.insert((2 * u + 1, 2 * v), 1);
            res.insert((2 * v + 1, 2 * u), 1);
        }
    }
    let arcs = |x: usize| -> Vec<usize> {
        let v = x / 2;
        let mut out = vec![x ^ 1];
        out.extend(g.neighbors(v).map(|w| if x % 2 == 1 { 2 * w } else { 2 * w + 1 }));
        out
    };
    let (source, sink) = (2 * a + 1, 2 * b);
    let mut found = 0;
    while found < want {
        tick(nodes, budget)?;
        let mut pred = vec![usize::MAX; 2 * n];
        pred[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in arcs(x) {
                if pred[y] == usize::MAX && res.get(&(x, y)).copied().unwrap_or(0) > 0 {
                    pred[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if pred[sink] == usize::MAX {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = pred[y];
            *res.entry((x, y)).or_insert(0) -= 1;
            *res.entry((y, x)).or_insert(0) += 1;
            y = x;
        }
        found += 1;
    }
    // a saturated vertex-to-vertex arc carries one unit of flow
    let mut carried: HashSet<(usize, usize)> = HashSet::new();
    for (u, v) in g.edges() {
        if skip(u, v) {
            continue;
        }
        if res.get(&(2 * u + 1, 2 * v)) == Some(&0) {
            carried.insert((u, v));
        }
        if res.get(&(2 * v + 1, 2 * u)) == Some(&0) {
            carried.insert((v, u));
        }
    }
    let mut paths = Vec::with_capacity(found);
    for _ in 0..found {
        let mut path = vec![a];
        let mut cur = a;
        while cur != b {
            let next = g.neighbors(cur).find(|&w| carried.contains(&(cur, w)));
            let Some(w) = next else { break };
            carried.remove(&(cur, w));
            path.push(w);
            cur = w;
        }
        paths.push(path);
    }
    Ok(paths)
}

fn k23_in_block(g: &Graph, nodes: &mut u64, budget: u64) -> Result<Option<MinorWitness>> {
    let n = g.n();
    for a in 0..n {
        if g.degree(a) < 3 {
            continue;
        }
        for b in a + 1..n {
            if g.degree(b) < 3 {
                continue;
            }
            let paths = disjoint_paths(g, a, b, 3, nodes, budget)?;
            if paths.len() < 3 {
                continue;
            }
            let mut b_set = vec![b];
            let mut singles = Vec::new();
            for p in &paths {
                // p = a, x1, .., xk, b with k >= 1
                singles.push(vec![p[1]]);
                b_set.extend_from_slice(&p[2..p.len() - 1]);
            }
            let mut sets = vec![vec![a], b_set];
            sets.extend(singles);
            return Ok(Some(MinorWitness { kind: MinorKind::K23, branch_sets: sets }));
        }
    }
    Ok(None)
}

const K4_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

struct K4Search<'a> {
    g: &'a Graph,
    branch: [usize; 4],
    used: Vec<bool>,
    paths: Vec<Vec<usize>>,
    nodes: &'a mut u64,
    budget: u64,
}

impl K4Search<'_> {
    fn reachable(&self, from: usize, to: usize) -> bool {
        if self.g.has_edge(from, to) {
            return true;
        }
        let mut seen = vec![false; self.g.n()];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(u) = stack.pop() {
            for w in self.g.neighbors(u) {
                if w == to {
                    return true;
                }
                if !seen[w] && !self.used[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }

    fn remaining_feasible(&self, next_pair: usize) -> bool {
        K4_PAIRS[next_pair..].iter().all(|&(i, j)| self.reachable(self.branch[i], self.branch[j]))
    }

    fn route(&mut self, pair: usize) -> Result<bool> {
        if pair == K4_PAIRS.len() {
            return Ok(true);
        }
        if !self.remaining_feasible(pair) {
            return Ok(false);
        }
        let (i, j) = K4_PAIRS[pair];
        let (s, t) = (self.branch[i], self.branch[j]);
        let mut path = Vec::new();
        self.extend(pair, s, t, &mut path)
    }

    fn extend(&mut self, pair: usize, at: usize, t: usize, path: &mut Vec<usize>) -> Result<bool> {
        tick(self.nodes, self.budget)?;
        if self.g.has_edge(at, t) {
            self.paths.push(path.clone());
            if self.route(pair + 1)? {
                return Ok(true);
            }
            self.paths.pop();
        }
        if !self.reachable(at, t) {
            return Ok(false);
        }
        let next: Vec<usize> = self.g.neighbors(at).filter(|&w| !self.used[w]).collect();
        for w in next {
            self.used[w] = true;
            path.push(w);
            let done = self.extend(pair, w, t, path)?;
            if done {
                return Ok(true);
            }
            path.pop();
            self.used[w] = false;
        }
        Ok(false)
    }
}

fn k4_in_block(g: &Graph, nodes: &mut u64, budget: u64) -> Result<Option<MinorWitness>> {
    let cand: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
    let c = cand.len();
    for i0 in 0..c {
        for i1 in i0 + 1..c {
            for i2 in i1 + 1..c {
                for i3 in i2 + 1..c {
                    let branch = [cand[i0], cand[i1], cand[i2], cand[i3]];
                    let mut used = vec![false; g.n()];
                    for &b in &branch {
                        used[b] = true;
                    }
                    let mut s = K4Search { g, branch, used, paths: Vec::new(), nodes, budget };
                    if s.route(0)? {
                        let mut sets: Vec<Vec<usize>> = branch.iter().map(|&b| vec![b]).collect();
                        for (p, &(i, _)) in s.paths.iter().zip(K4_PAIRS.iter()) {
                            sets[i].extend_from_slice(p);
                        }
                        return Ok(Some(MinorWitness { kind: MinorKind::K4, branch_sets: sets }));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fan(n: usize) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for v in 1..n {
            g.add_edge(0, v).unwrap();
            if v + 1 < n {
                g.add_edge(v, v + 1).unwrap();
            }
        }
        g
    }

    fn wheel5() -> Graph {
        let mut w = Graph::cycle(5).unwrap().with_extra_vertices(1).unwrap();
        for v in 0..5 {
            w.add_edge(5, v).unwrap();
        }
        w
    }

    #[test]
    fn fan_has_neither_minor() {
        let g = fan(10);
        assert_eq!(find_minor(&g, MinorKind::K4, DEFAULT_MINOR_BUDGET).unwrap(), None);
        assert_eq!(find_minor(&g, MinorKind::K23, DEFAULT_MINOR_BUDGET).unwrap(), None);
    }

    #[test]
    fn wheel_has_k4() {
        let g = wheel5();
        let w = find_minor(&g, MinorKind::K4, DEFAULT_MINOR_BUDGET).unwrap().unwrap();
        assert!(validate_witness(&g, &w));
    }

    #[test]
    fn fan_with_closing_edge_has_k23() {
        let mut g = fan(6);
        g.add_edge(1, 5).unwrap();
        let w = find_minor(&g, MinorKind::K23, DEFAULT_MINOR_BUDGET).unwrap().unwrap();
        assert!(validate_witness(&g, &w));
    }

    #[test]
    fn k23_itself_and_k4_itself() {
        let g = Graph::complete_bipartite(2, 3).unwrap();
        assert!(find_minor(&g, MinorKind::K4, 1000).unwrap().is_none());
        let w = find_minor(&g, MinorKind::K23, 1000).unwrap().unwrap();
        assert!(validate_witness(&g, &w));
        let k4 = Graph::complete(4).unwrap();
        assert!(find_minor(&k4, MinorKind::K23, 1000).unwrap().is_none());
        let w = find_minor(&k4, MinorKind::K4, 1000).unwrap().unwrap();
        assert_eq!(w.branch_sets, vec![vec![0], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn budget_and_size_limits() {
        let big = Graph::complete(25).unwrap();
        assert!(find_minor(&big, MinorKind::K4, 10).is_err());
        let g = wheel5();
        assert!(matches!(find_minor(&g, MinorKind::K4, 1), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn witness_validation_rejects_bad_sets() {
        let k4 = Graph::complete(4).unwrap();
        let bad = MinorWitness { kind: MinorKind::K4, branch_sets: vec![vec![0], vec![1], vec![2], vec![2]] };
        assert!(!validate_witness(&k4, &bad));
        let c4 = Graph::cycle(4).unwrap();
        let not_minor = MinorWitness { kind: MinorKind::K4, branch_sets: vec![vec![0], vec![1], vec![2], vec![3]] };
        assert!(!validate_witness(&c4, &not_minor));
        let disconnected =
            MinorWitness { kind: MinorKind::K4, branch_sets: vec![vec![0, 2], vec![1], vec![3], vec![]] };
        assert!(!validate_witness(&c4, &disconnected));
    }
}
