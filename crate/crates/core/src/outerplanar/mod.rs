//! Outerplanarity testing with checkable certificates.
//!
//! A yes-answer comes with a cyclic vertex order in which every edge, drawn
//! as a chord of a circle, crosses no other edge. A no-answer comes with
//! branch sets of a `K4` or `K2,3` minor.
//!
//! The order is built block by block. Inside a 2-connected block the outer
//! face is a Hamiltonian cycle; a degree-2 vertex always lies on it between
//! its two neighbours, so it is removed, its neighbours are joined (this is
//! the contraction of one of its edges and keeps the block outerplanar) and
//! it is reinserted between them once the rest of the cycle is known. Blocks
//! are spliced at cut vertices. The final order is always re-checked for
//! crossings, so a wrong reduction can only produce a "no", which is then
//! backed by an explicit minor.

pub mod minor;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

pub use minor::{find_minor, validate_witness, MinorKind, MinorWitness, DEFAULT_MINOR_BUDGET, MAX_MINOR_VERTICES};

/// Result of an outerplanarity test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum OuterplanarityCertificate {
    Outerplanar { order: Vec<usize> },
    NotOuterplanar { witness: MinorWitness },
}

impl OuterplanarityCertificate {
    pub fn is_outerplanar(&self) -> bool {
        matches!(self, Self::Outerplanar { .. })
    }

    pub fn order(&self) -> Option<&[usize]> {
        match self {
            Self::Outerplanar { order } => Some(order),
            Self::NotOuterplanar { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&MinorWitness> {
        match self {
            Self::NotOuterplanar { witness } => Some(witness),
            Self::Outerplanar { .. } => None,
        }
    }
}

/// Decides outerplanarity and returns a certificate either way.
pub fn is_outerplanar(g: &Graph) -> OuterplanarityCertificate {
    match outer_order(g) {
        Some(order) => OuterplanarityCertificate::Outerplanar { order },
        None => OuterplanarityCertificate::NotOuterplanar { witness: extract_witness(g) },
    }
}

/// Verdict only; the fast path used for pruning during enumeration.
pub fn is_outerplanar_fast(g: &Graph) -> bool {
    outer_order(g).is_some()
}

/// A cyclic order with no crossing chords, if one exists.
pub fn outer_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n >= 3 && g.edge_count() > 2 * n - 3 {
        return None;
    }
    let (blocks, _) = g.blocks();
    let mut block_orders = Vec::with_capacity(blocks.len());
    for block in &blocks {
        block_orders.push(block_cycle(g, block)?);
    }
    let order = splice_blocks(n, &block_orders);
    if chords_cross(g, &order) {
        None
    } else {
        Some(order)
    }
}

/// Hamiltonian outer cycle of a 2-connected block (or the trivial order of
/// a bridge or isolated vertex).
fn block_cycle(g: &Graph, block: &[usize]) -> Option<Vec<usize>> {
    let k = block.len();
    if k <= 2 {
        return Some(block.to_vec());
    }
    let h = g.induced(block).ok()?;
    if h.edge_count() > 2 * k - 3 {
        return None;
    }
    let mut h = h;
    let mut deg = h.degrees();
    let mut alive = vec![true; k];
    let mut remaining = k;
    let mut work: Vec<usize> = (0..k).filter(|&v| deg[v] == 2).collect();
    let mut removed: Vec<(usize, usize, usize)> = Vec::with_capacity(k);

    while remaining > 3 {
        let v = loop {
            let v = work.pop()?;
            if alive[v] && deg[v] == 2 {
                break v;
            }
        };
        let mut nb = h.neighbors(v);
        let a = nb.next()?;
        let b = nb.next()?;
        drop(nb);
        h.remove_edge(v, a);
        h.remove_edge(v, b);
        alive[v] = false;
        remaining -= 1;
        deg[a] -= 1;
        deg[b] -= 1;
        if !h.has_edge(a, b) {
            h.add_edge(a, b).ok()?;
            deg[a] += 1;
            deg[b] += 1;
        }
        for x in [a, b] {
            if deg[x] == 2 {
                work.push(x);
            }
        }
        removed.push((v, a, b));
    }

    let rest: Vec<usize> = (0..k).filter(|&v| alive[v]).collect();
    if rest.len() != 3 || rest.iter().any(|&v| deg[v] != 2) {
        return None;
    }
    // circular doubly linked list over local indices
    let mut next = vec![usize::MAX; k];
    let mut prev = vec![usize::MAX; k];
    for i in 0..3 {
        next[rest[i]] = rest[(i + 1) % 3];
        prev[rest[(i + 1) % 3]] = rest[i];
    }
    for &(v, a, b) in removed.iter().rev() {
        let (x, y) = if next[a] == b {
            (a, b)
        } else if next[b] == a {
            (b, a)
        } else {
            return None;
        };
        next[x] = v;
        prev[v] = x;
        next[v] = y;
        prev[y] = v;
    }
    let mut order = Vec::with_capacity(k);
    let mut cur = 0;
    for _ in 0..k {
        order.push(block[cur]);
        cur = next[cur];
    }
    if cur != 0 {
        return None;
    }
    Some(order)
}

/// Joins block cycles at cut vertices: each child block is inserted as a
/// contiguous arc right after the cut vertex it hangs from.
fn splice_blocks(n: usize, block_orders: &[Vec<usize>]) -> Vec<usize> {
    let mut blocks_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (b, order) in block_orders.iter().enumerate() {
        for &v in order {
            blocks_at[v].push(b);
        }
    }
    let mut used = vec![false; block_orders.len()];
    let mut placed = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for b in 0..block_orders.len() {
        if used[b] {
            continue;
        }
        let entry = block_orders[b][0];
        if placed[entry] {
            continue;
        }
        used[b] = true;
        emit_block(b, entry, block_orders, &blocks_at, &mut used, &mut placed, &mut out, true);
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn emit_block(
    b: usize,
    entry: usize,
    block_orders: &[Vec<usize>],
    blocks_at: &[Vec<usize>],
    used: &mut [bool],
    placed: &mut [bool],
    out: &mut Vec<usize>,
    include_entry: bool,
) {
    let order = &block_orders[b];
    let start = order.iter().position(|&v| v == entry).unwrap_or(0);
    for i in 0..order.len() {
        let v = order[(start + i) % order.len()];
        if i == 0 && !include_entry {
            // the entry vertex is already placed by the parent block
        } else {
            placed[v] = true;
            out.push(v);
        }
        for &child in &blocks_at[v] {
            if !used[child] {
                used[child] = true;
                emit_block(child, v, block_orders, blocks_at, used, placed, out, false);
            }
        }
    }
}

/// Whether any two edges cross when vertices sit on a circle in `order`.
fn chords_cross(g: &Graph, order: &[usize]) -> bool {
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut chords: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| {
            let (a, b) = (pos[u], pos[v]);
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    chords.sort_unstable_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
    // non-crossing chords form a laminar family of intervals
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for c in chords {
        while let Some(&top) = stack.last() {
            if top.1 <= c.0 {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&top) = stack.last() {
            if c.1 > top.1 {
                return true;
            }
        }
        stack.push(c);
    }
    false
}

/// Shrinks `g` to an edge-minimal non-outerplanar subgraph (a subdivision
/// of `K4` or `K2,3`) and reads the branch sets off it.
fn extract_witness(g: &Graph) -> MinorWitness {
    let mut h = g.clone();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for (u, v) in edges {
        h.remove_edge(u, v);
        if is_outerplanar_fast(&h) {
            h.add_edge(u, v).expect("edge of g");
        }
    }
    subdivision_witness(&h)
        .or_else(|| find_minor(g, MinorKind::K4, u64::MAX).ok().flatten())
        .or_else(|| find_minor(g, MinorKind::K23, u64::MAX).ok().flatten())
        .expect("a non-outerplanar graph has a K4 or K2,3 minor")
}

/// Follows the degree-2 chain leaving `start` through `first`; returns the
/// internal vertices and the branch vertex reached.
fn trace(h: &Graph, start: usize, first: usize) -> (Vec<usize>, usize) {
    let mut internal = Vec::new();
    let (mut prev, mut cur) = (start, first);
    while h.degree(cur) == 2 {
        internal.push(cur);
        let next = h.neighbors(cur).find(|&w| w != prev).expect("degree two");
        prev = cur;
        cur = next;
    }
    (internal, cur)
}

fn subdivision_witness(h: &Graph) -> Option<MinorWitness> {
    let branch: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) >= 3).collect();
    if branch.iter().any(|&v| h.degree(v) != 3) {
        return None;
    }
    match branch.len() {
        4 => {
            let mut sets: Vec<Vec<usize>> = branch.iter().map(|&b| vec![b]).collect();
            for (i, &b) in branch.iter().enumerate() {
                for first in h.neighbors(b) {
                    let (internal, end) = trace(h, b, first);
                    let j = branch.iter().position(|&x| x == end)?;
                    if i < j {
                        sets[i].extend(internal);
                    }
                }
            }
            let w = MinorWitness { kind: MinorKind::K4, branch_sets: sets };
            validate_witness(h, &w).then_some(w)
        }
        2 => {
            let (a, b) = (branch[0], branch[1]);
            let mut b_set = vec![b];
            let mut singles = Vec::new();
            for first in h.neighbors(a) {
                let (internal, end) = trace(h, a, first);
                if end != b || internal.is_empty() {
                    return None;
                }
                singles.push(vec![internal[0]]);
                b_set.extend_from_slice(&internal[1..]);
            }
            let mut sets = vec![vec![a], b_set];
            sets.extend(singles);
            let w = MinorWitness { kind: MinorKind::K23, branch_sets: sets };
            validate_witness(h, &w).then_some(w)
        }
        _ => None,
    }
}

/// Independent re-check of a certificate against `g`.
pub fn validate_certificate(g: &Graph, cert: &OuterplanarityCertificate) -> bool {
    match cert {
        OuterplanarityCertificate::Outerplanar { order } => validate_order(g, order),
        OuterplanarityCertificate::NotOuterplanar { witness } => validate_witness(g, witness),
    }
}

/// Checks that `order` is a permutation and that no two edges cross as
/// chords; a quadratic pairwise test, deliberately unlike the interval
/// sweep used by the recogniser.
pub fn validate_order(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    let chords: Vec<(usize, usize)> = g.edges().map(|(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v]))).collect();
    for (i, &(a, b)) in chords.iter().enumerate() {
        for &(c, d) in &chords[i + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                return false;
            }
        }
    }
    true
}
