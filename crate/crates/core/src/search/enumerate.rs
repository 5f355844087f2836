//! Exhaustive generation of outerplanar graphs by vertex augmentation.
//!
//! Level `n` is built from level `n − 1`: every representative gets a new
//! vertex joined to each admissible neighbour set, and children are
//! deduplicated by canonical form. Neighbour sets are grown one vertex at a
//! time and abandoned as soon as the child stops being outerplanar, since
//! adding edges never restores outerplanarity. Every connected outerplanar
//! graph has a vertex whose deletion leaves it connected (any non-cut
//! vertex), so the connected classes are reached from connected parents.

use std::collections::HashSet;
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::canon::canonical_form;
use crate::graph::{graph6, Graph};
use crate::outerplanar::is_outerplanar_fast;

/// Largest order enumerated without opting in.
pub const MAX_EXHAUSTIVE: usize = 11;

/// Largest order enumerated at all.
pub const MAX_OPT_IN: usize = 12;

/// Connected outerplanar graphs on `n = 1..=12` vertices, up to isomorphism.
pub const CONNECTED_COUNTS: [u64; 12] = [1, 1, 2, 5, 13, 46, 172, 777, 3783, 20074, 111604, 646409];

/// Upper-triangle adjacency bits of the canonical relabelling (`n ≤ 16`).
pub fn canonical_key(g: &Graph) -> u128 {
    let c = canonical_form(g, None).graph(g);
    triangle_bits(&c)
}

fn triangle_bits(g: &Graph) -> u128 {
    assert!(g.n() <= 16, "keys cover at most 16 vertices");
    let mut key = 0u128;
    let mut bit = 0;
    for j in 1..g.n() {
        for i in 0..j {
            if g.has_edge(i, j) {
                key |= 1 << bit;
            }
            bit += 1;
        }
    }
    key
}

fn from_key(n: usize, key: u128) -> Graph {
    let mut g = Graph::empty(n).expect("n in range");
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if key >> bit & 1 == 1 {
                g.add_edge(i, j).expect("valid edge");
            }
            bit += 1;
        }
    }
    g
}

/// Calls `visit` with every outerplanar one-vertex extension of `parent`.
/// Connected extensions only when `connected_only`.
pub fn for_each_extension(parent: &Graph, connected_only: bool, mut visit: impl FnMut(&Graph)) {
    let n = parent.n();
    let mut child = parent.with_extra_vertices(1).expect("below the vertex cap");
    let v = n;
    let max_edges = if n + 1 >= 3 { 2 * (n + 1) - 3 } else { usize::MAX };
    if !connected_only {
        visit(&child);
    }
    fn grow(child: &mut Graph, v: usize, from: usize, edges: usize, max_edges: usize, visit: &mut dyn FnMut(&Graph)) {
        for w in from..v {
            if edges + 1 > max_edges {
                return;
            }
            child.add_edge(v, w).expect("valid edge");
            if is_outerplanar_fast(child) {
                visit(child);
                grow(child, v, w + 1, edges + 1, max_edges, visit);
            }
            child.remove_edge(v, w);
        }
    }
    let edges = parent.edge_count();
    grow(&mut child, v, 0, edges, max_edges, &mut visit);
}

fn next_level(parents: &[Graph], connected_only: bool) -> Vec<Graph> {
    let keys: HashSet<u128> = parents
        .par_iter()
        .fold(HashSet::new, |mut set, p| {
            for_each_extension(p, connected_only, |c| {
                set.insert(canonical_key(c));
            });
            set
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return b.into_iter().chain(a).collect();
            }
            a.extend(b);
            a
        });
    let n = parents.first().map_or(1, |p| p.n() + 1);
    let mut keys: Vec<u128> = keys.into_iter().collect();
    keys.sort_unstable();
    keys.into_iter().map(|k| from_key(n, k)).collect()
}

pub(crate) fn guard_exhaustive(n: usize, allow_twelve: bool) -> Result<()> {
    let cap = if allow_twelve { MAX_OPT_IN } else { MAX_EXHAUSTIVE };
    if n == 0 || n > cap {
        let hint = if n == MAX_OPT_IN { " (n = 12 needs the opt-in flag)" } else { "" };
        return Err(Error::InvalidParameters {
            family: "exhaustive",
            reason: format!("n = {n} outside 1..={cap}{hint}"),
        });
    }
    Ok(())
}

/// Representatives of the outerplanar graphs on `n ≤ 11` vertices, one per
/// isomorphism class, in canonical labelling and sorted by canonical key.
pub fn enumerate_outerplanar(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    enumerate_outerplanar_with(n, connected_only, false)
}

/// [`enumerate_outerplanar`], optionally allowing `n = 12`.
pub fn enumerate_outerplanar_with(n: usize, connected_only: bool, allow_twelve: bool) -> Result<Vec<Graph>> {
    guard_exhaustive(n, allow_twelve)?;
    Ok(levels(n, connected_only).pop().expect("at least one level"))
}

/// All levels `1..=n`.
pub fn levels(n: usize, connected_only: bool) -> Vec<Vec<Graph>> {
    let mut out = vec![vec![Graph::empty(1).expect("one vertex")]];
    for _ in 2..=n {
        let next = next_level(out.last().expect("non-empty"), connected_only);
        out.push(next);
    }
    out
}

/// One line of a checkpoint file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub level: usize,
    /// Index of the first parent not yet processed.
    pub next_parent: usize,
    pub parents: usize,
    /// Caller state, e.g. the best graph so far.
    pub state: serde_json::Value,
}

/// Resumable pass over every one-vertex extension of the level below `n`.
///
/// Parents are processed in chunks; after each chunk a checkpoint line is
/// appended to `checkpoint`. A pass that runs out of its parent budget
/// stops with [`Error::Partial`], whose `next_parent` resumes it.
pub struct ExtensionPass {
    pub n: usize,
    pub connected_only: bool,
    pub parents: Vec<Graph>,
    pub checkpoint: Option<PathBuf>,
    pub chunk: usize,
}

impl ExtensionPass {
    pub fn new(n: usize, connected_only: bool, allow_twelve: bool) -> Result<Self> {
        guard_exhaustive(n, allow_twelve)?;
        if n < 2 {
            return Err(Error::InvalidParameters {
                family: "exhaustive",
                reason: "extension passes start at n = 2".into(),
            });
        }
        let parents = levels(n - 1, connected_only).pop().expect("level");
        Ok(Self { n, connected_only, parents, checkpoint: None, chunk: 2048 })
    }

    pub fn with_checkpoint(mut self, path: impl Into<PathBuf>) -> Self {
        self.checkpoint = Some(path.into());
        self
    }

    /// Last checkpoint line in `path`, if any.
    pub fn last_checkpoint(path: &Path) -> Result<Option<Checkpoint>> {
        if !path.exists() {
            return Ok(None);
        }
        let file = std::fs::File::open(path)?;
        let mut last = None;
        for line in BufReader::new(file).lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            last = Some(serde_json::from_str(&line).map_err(|e| Error::Config(format!("checkpoint: {e}")))?);
        }
        Ok(last)
    }

    /// Runs parents `start..` through `visit`, processing at most
    /// `max_parents` of them. `state` renders the caller state for the
    /// checkpoint after each chunk.
    pub fn run<V, S>(&self, start: usize, max_parents: Option<usize>, visit: V, state: S) -> Result<()>
    where
        V: Fn(&[Graph]) + Sync,
        S: Fn() -> serde_json::Value,
    {
        let total = self.parents.len();
        let stop = max_parents.map_or(total, |m| total.min(start.saturating_add(m)));
        let mut i = start;
        while i < stop {
            let end = stop.min(i + self.chunk);
            self.parents[i..end].par_iter().for_each(|p| {
                let mut kids = Vec::new();
                for_each_extension(p, self.connected_only, |c| kids.push(c.clone()));
                visit(&kids);
            });
            i = end;
            if let Some(path) = &self.checkpoint {
                let line = Checkpoint { level: self.n, next_parent: i, parents: total, state: state() };
                let mut f = OpenOptions::new().create(true).append(true).open(path)?;
                writeln!(f, "{}", serde_json::to_string(&line).map_err(|e| Error::Io(e.to_string()))?)?;
            }
        }
        if stop < total {
            return Err(Error::Partial { level: self.n, next_parent: stop });
        }
        Ok(())
    }
}

/// graph6 lines of a graph list.
pub fn to_graph6_lines(graphs: &[Graph]) -> String {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&graph6::encode(g));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let lv = levels(7, true);
        for (i, level) in lv.iter().enumerate() {
            assert_eq!(level.len() as u64, CONNECTED_COUNTS[i], "n = {}", i + 1);
        }
        let n3: Vec<usize> = lv[2].iter().map(|g| g.edge_count()).collect();
        assert_eq!(n3, vec![2, 3]);
    }

    #[test]
    fn disconnected_included_on_request() {
        // all outerplanar graphs on 4 vertices: all 11 graphs except K4
        assert_eq!(enumerate_outerplanar(4, false).unwrap().len(), 10);
    }

    #[test]
    fn caps() {
        assert!(enumerate_outerplanar(12, true).is_err());
        assert!(ExtensionPass::new(13, true, true).is_err());
    }

    #[test]
    fn keys_round_trip() {
        for g in enumerate_outerplanar(6, true).unwrap() {
            assert_eq!(from_key(6, triangle_bits(&g)), g);
            assert_eq!(canonical_key(&g), triangle_bits(&g));
        }
    }
}
