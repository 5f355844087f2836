//! Canonical labelling by colour refinement and individualisation.
//!
//! The search tree is the usual one: refine to an equitable ordered
//! partition, individualise each vertex of the first non-singleton cell,
//! recurse. Leaves are compared by their relabelled adjacency rows.
//! Automorphisms discovered at equal leaves prune sibling branches that lie
//! in the same orbit of the pointwise stabiliser of the current prefix.

use super::Graph;

/// Canonical labelling of a (vertex-coloured) graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
    /// Relabelled adjacency rows followed by the colour sequence.
    pub form: Vec<u64>,
    /// Automorphism generators found during the search.
    pub generators: Vec<Vec<usize>>,
}

impl Canonical {
    pub fn graph(&self, g: &Graph) -> Graph {
        g.permuted(&self.labeling)
    }
}

/// Ordered partition stored as a permutation with cell boundaries.
#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    pos: Vec<usize>,
    /// `start[i]` is the first position of the cell containing position `i`.
    start: Vec<usize>,
    /// Cell length, valid at cell starts.
    len: Vec<usize>,
    cells: usize,
}

impl Partition {
    fn from_colours(colours: &[u64]) -> Self {
        let n = colours.len();
        let mut lab: Vec<usize> = (0..n).collect();
        lab.sort_by_key(|&v| (colours[v], v));
        let mut pos = vec![0; n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let mut start = vec![0; n];
        let mut len = vec![0; n];
        let mut cells = 0;
        let mut i = 0;
        while i < n {
            let mut j = i;
            while j < n && colours[lab[j]] == colours[lab[i]] {
                start[j] = i;
                j += 1;
            }
            len[i] = j - i;
            cells += 1;
            i = j;
        }
        Self { lab, pos, start, len, cells }
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    fn cell(&self, s: usize) -> &[usize] {
        &self.lab[s..s + self.len[s]]
    }

    /// Moves `v` into a singleton cell at the front of its cell and returns
    /// that cell's start.
    fn individualise(&mut self, v: usize) -> usize {
        let s = self.start[self.pos[v]];
        let p = self.pos[v];
        let w = self.lab[s];
        self.lab.swap(s, p);
        self.pos[v] = s;
        self.pos[w] = p;
        let l = self.len[s];
        self.len[s] = 1;
        self.len[s + 1] = l - 1;
        for i in s + 1..s + l {
            self.start[i] = s + 1;
        }
        self.cells += 1;
        s
    }

    /// Refines to the coarsest equitable partition below the current one,
    /// splitting against the cells queued in `queue`.
    fn refine(&mut self, g: &Graph, mut queue: Vec<usize>, count: &mut [usize]) {
        let n = self.lab.len();
        let mut queued = vec![false; n];
        for &s in &queue {
            queued[s] = true;
        }
        let mut head = 0;
        let mut touched: Vec<usize> = Vec::new();
        let mut cells_hit: Vec<usize> = Vec::new();
        while head < queue.len() && !self.is_discrete() {
            let w = queue[head];
            head += 1;
            queued[w] = false;
            let splitter: Vec<usize> = self.cell(w).to_vec();
            for &x in &splitter {
                for y in g.neighbors(x) {
                    if count[y] == 0 {
                        touched.push(y);
                    }
                    count[y] += 1;
                }
            }
            for &y in &touched {
                let s = self.start[self.pos[y]];
                if self.len[s] > 1 && !cells_hit.contains(&s) {
                    cells_hit.push(s);
                }
            }
            cells_hit.sort_unstable();
            for &s in &cells_hit {
                let l = self.len[s];
                let mut members: Vec<usize> = self.lab[s..s + l].to_vec();
                members.sort_by_key(|&v| count[v]);
                if count[members[0]] == count[members[l - 1]] {
                    continue;
                }
                let mut pieces = Vec::new();
                let mut i = 0;
                while i < l {
                    let mut j = i;
                    while j < l && count[members[j]] == count[members[i]] {
                        j += 1;
                    }
                    pieces.push((s + i, j - i));
                    i = j;
                }
                for (k, &v) in members.iter().enumerate() {
                    self.lab[s + k] = v;
                    self.pos[v] = s + k;
                }
                for &(ps, pl) in &pieces {
                    self.len[ps] = pl;
                    for p in ps..ps + pl {
                        self.start[p] = ps;
                    }
                }
                self.cells += pieces.len() - 1;
                let largest = pieces
                    .iter()
                    .enumerate()
                    .max_by_key(|(idx, p)| (p.1, usize::MAX - idx))
                    .map(|(idx, _)| idx)
                    .expect("non-empty");
                let keep_all = queued[s];
                for (idx, &(ps, _)) in pieces.iter().enumerate() {
                    if !queued[ps] && (keep_all || idx != largest) {
                        queued[ps] = true;
                        queue.push(ps);
                    }
                }
            }
            for &y in &touched {
                count[y] = 0;
            }
            touched.clear();
            cells_hit.clear();
        }
    }

    fn first_nontrivial(&self) -> Option<usize> {
        let mut i = 0;
        while i < self.lab.len() {
            if self.len[i] > 1 {
                return Some(i);
            }
            i += self.len[i];
        }
        None
    }

    fn all_cells(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.cells);
        let mut i = 0;
        while i < self.lab.len() {
            out.push(i);
            i += self.len[i];
        }
        out
    }
}

/// A leaf of the search tree: its form, its labelling and the vertices
/// individualised on the way down.
type Leaf = (Vec<u64>, Vec<usize>, Vec<usize>);

struct Search<'a> {
    g: &'a Graph,
    colours: &'a [u64],
    words: usize,
    count: Vec<usize>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    fn leaf_form(&self, p: &Partition) -> Vec<u64> {
        let n = p.lab.len();
        let mut form = vec![0u64; n * self.words + n];
        for (i, &v) in p.lab.iter().enumerate() {
            for u in self.g.neighbors(v) {
                let j = p.pos[u];
                form[i * self.words + j / 64] |= 1 << (j % 64);
            }
            form[n * self.words + i] = self.colours[v];
        }
        form
    }

    /// Records an automorphism if `form` equals a stored leaf and returns
    /// the depth to backtrack to.
    fn automorphism(&mut self, form: &[u64], lab: &[usize], prefix: &[usize]) -> Option<usize> {
        for leaf in [&self.first, &self.best].into_iter().flatten() {
            if leaf.0.as_slice() == form {
                let mut gamma = vec![0; lab.len()];
                for (i, &v) in leaf.1.iter().enumerate() {
                    gamma[v] = lab[i];
                }
                let depth = common_prefix(&leaf.2, prefix);
                self.generators.push(gamma);
                return Some(depth);
            }
        }
        None
    }

    /// Explores the subtree at `p`; a returned depth asks every node below
    /// that depth to stop.
    fn visit(&mut self, p: Partition, prefix: &mut Vec<usize>) -> Option<usize> {
        let Some(target) = p.first_nontrivial() else {
            let form = self.leaf_form(&p);
            if self.first.is_none() {
                self.first = Some((form.clone(), p.lab.clone(), prefix.clone()));
                self.best = Some((form, p.lab, prefix.clone()));
                return None;
            }
            if let Some(depth) = self.automorphism(&form, &p.lab, prefix) {
                return Some(depth);
            }
            if form < self.best.as_ref().expect("set with first").0 {
                self.best = Some((form, p.lab, prefix.clone()));
            }
            return None;
        };
        let depth = prefix.len();
        let cell: Vec<usize> = p.cell(target).to_vec();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            let mut child = p.clone();
            let single = child.individualise(v);
            child.refine(self.g, vec![single], &mut self.count);
            prefix.push(v);
            let jump = self.visit(child, prefix);
            prefix.pop();
            explored.push(v);
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    /// Whether `v` shares an orbit with an explored vertex under the known
    /// generators that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.g.n();
        let stabilising: Vec<&Vec<usize>> =
            self.generators.iter().filter(|gen| prefix.iter().all(|&x| gen[x] == x)).collect();
        if stabilising.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gen in stabilising {
            for (x, &y) in gen.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == rv)
    }
}

/// Canonical labelling of `g` with vertex colours (all zero when `None`).
pub fn canonical_form(g: &Graph, colours: Option<&[u64]>) -> Canonical {
    let n = g.n();
    let zeros = vec![0u64; n];
    let colours = colours.unwrap_or(&zeros);
    assert_eq!(colours.len(), n, "one colour per vertex");
    let mut p = Partition::from_colours(colours);
    let mut count = vec![0; n];
    let cells = p.all_cells();
    p.refine(g, cells, &mut count);
    let mut search =
        Search { g, colours, words: n.div_ceil(64), count, first: None, best: None, generators: Vec::new() };
    search.visit(p, &mut Vec::new());
    let (form, lab, _) = search.best.expect("search reaches a leaf");
    let mut labeling = vec![0; n];
    for (i, &v) in lab.iter().enumerate() {
        labeling[v] = i;
    }
    Canonical { labeling, form, generators: search.generators }
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && {
            let mut a = g.degrees();
            let mut b = h.degrees();
            a.sort_unstable();
            b.sort_unstable();
            a == b
        }
        && canonical_form(g, None).form == canonical_form(h, None).form
}

/// Whether some automorphism maps `u1` to `u2` and `u2` to `u1`.
pub fn swaps_vertices(g: &Graph, u1: usize, u2: usize) -> bool {
    let mut a = vec![0u64; g.n()];
    a[u1] = 1;
    a[u2] = 2;
    let mut b = vec![0u64; g.n()];
    b[u2] = 1;
    b[u1] = 2;
    canonical_form(g, Some(&a)).form == canonical_form(g, Some(&b)).form
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_graphs_share_a_form() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap();
        let perm = [3, 5, 0, 1, 4, 2];
        let h = g.permuted(&perm);
        assert_eq!(canonical_form(&g, None).form, canonical_form(&h, None).form);
        assert!(are_isomorphic(&g, &h));
        let other = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5)]).unwrap();
        assert!(!are_isomorphic(&g, &other));
    }

    #[test]
    fn canonical_graph_is_fixed() {
        let g = Graph::cycle(7).unwrap();
        let c = canonical_form(&g, None);
        let h = c.graph(&g);
        assert_eq!(canonical_form(&h, None).graph(&h), h);
    }

    #[test]
    fn symmetric_graphs_finish_quickly() {
        let star = Graph::complete_bipartite(1, 40).unwrap();
        let c = canonical_form(&star, None);
        assert!(!c.generators.is_empty());
        let k = Graph::complete(12).unwrap();
        canonical_form(&k, None);
        canonical_form(&Graph::empty(12).unwrap(), None);
    }

    #[test]
    fn swap_detection() {
        let p = Graph::path(5).unwrap();
        assert!(swaps_vertices(&p, 0, 4));
        assert!(swaps_vertices(&p, 1, 3));
        assert!(!swaps_vertices(&p, 0, 3));
    }
}
