//! Parameterized candidate families for searches beyond exhaustive range.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::constructions::{cut_vertex_family, FanLayout};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::outerplanar::is_outerplanar_fast;

/// Largest order for the two-hub family.
pub const MAX_STRUCTURED_N: usize = 60;

/// Smallest order for the two-hub family.
pub const MIN_STRUCTURED_N: usize = 6;

/// Options for [`for_each_two_hub`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoHubOptions {
    /// Keep 2-connected members only.
    pub two_connected: bool,
    /// Largest difference between the two hub segment lengths.
    pub max_imbalance: usize,
    /// Largest number of extra chords without an extra vertex.
    pub max_chords: usize,
}

impl Default for TwoHubOptions {
    fn default() -> Self {
        Self { two_connected: false, max_imbalance: 2, max_chords: 3 }
    }
}

/// Skeleton shared by a batch of two-hub members.
///
/// Hubs are 0 and 1 and the path is `v_i = 2 + i`, `i < len`. Hub 0 sees
/// `v_0..=v_e1` and hub 1 sees `v_s2..`, so the segments overlap in up to
/// two vertices, meet, or leave one gap vertex. One path edge next to the
/// split may be dropped, the hubs may be joined, and an extra vertex
/// (label `n − 1`) may be present.
#[derive(Clone, Copy, Debug)]
struct Frame {
    n: usize,
    len: usize,
    extra: bool,
    e1: usize,
    s2: usize,
    cut: Option<usize>,
    hub_edge: bool,
}

impl Frame {
    fn v(&self, i: usize) -> usize {
        2 + i
    }

    fn skeleton(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("n checked by caller");
        for i in 0..self.len - 1 {
            if self.cut != Some(i) {
                g.add_edge(self.v(i), self.v(i + 1)).expect("path edge");
            }
        }
        for i in 0..=self.e1 {
            g.add_edge(0, self.v(i)).expect("hub edge");
        }
        for i in self.s2..self.len {
            g.add_edge(1, self.v(i)).expect("hub edge");
        }
        if self.hub_edge {
            g.add_edge(0, 1).expect("hub pair");
        }
        g
    }

    /// Path indices within distance two of the split.
    fn window(&self) -> Vec<usize> {
        let lo = self.e1.saturating_sub(2);
        let hi = (self.e1 + 3).min(self.len - 1);
        (lo..=hi).collect()
    }

    fn chords(&self) -> Vec<(usize, usize)> {
        let w = self.window();
        w.iter().tuple_combinations().filter(|&(a, b)| b - a >= 2).map(|(&a, &b)| (self.v(a), self.v(b))).collect()
    }
}

fn frames(n: usize, opts: &TwoHubOptions) -> Vec<Frame> {
    let mut out = Vec::new();
    for extra in [false, true] {
        let len = n - 2 - usize::from(extra);
        for e1 in 0..len {
            for s2 in e1.saturating_sub(1)..=(e1 + 2).min(len - 1) {
                if s2 == 0 {
                    continue;
                }
                let (a, b) = (e1 + 1, len - s2);
                if a.abs_diff(b) > opts.max_imbalance {
                    continue;
                }
                let cuts =
                    std::iter::once(None).chain((e1.saturating_sub(1)..=e1 + 1).filter(|&i| i + 1 < len).map(Some));
                for cut in cuts {
                    for hub_edge in [false, true] {
                        out.push(Frame { n, len, extra, e1, s2, cut, hub_edge });
                    }
                }
            }
        }
    }
    out
}

fn admissible(g: &Graph, two_connected: bool) -> bool {
    g.is_connected() && (!two_connected || g.is_biconnected()) && is_outerplanar_fast(g)
}

fn check_order(n: usize) -> Result<()> {
    if !(MIN_STRUCTURED_N..=MAX_STRUCTURED_N).contains(&n) {
        return Err(Error::InvalidParameters {
            family: "two-hub-structured",
            reason: format!("n = {n} outside {MIN_STRUCTURED_N}..={MAX_STRUCTURED_N}"),
        });
    }
    Ok(())
}

/// Calls `visit` on every member of the two-hub family on `n` vertices.
///
/// Members: the skeletons of all frames, plus up to `max_chords` chords
/// between path vertices near the split, or, when the extra vertex is
/// present, at most one chord and one to three edges from the extra vertex
/// to the hubs and the vertices near the split. Members that are not
/// connected outerplanar graphs are skipped. Members are not deduplicated.
pub fn for_each_two_hub<F>(n: usize, opts: &TwoHubOptions, visit: F) -> Result<()>
where
    F: Fn(&Graph) + Sync,
{
    use rayon::prelude::*;
    check_order(n)?;
    frames(n, opts).par_iter().for_each(|f| {
        let base = f.skeleton();
        let chords = f.chords();
        let max_chords = if f.extra { 1 } else { opts.max_chords };
        let mut targets = vec![0, 1];
        targets.extend(f.window().into_iter().map(|i| f.v(i)));
        for c in 0..=max_chords.min(chords.len()) {
            for set in chords.iter().combinations(c) {
                let mut g = base.clone();
                for &&(a, b) in &set {
                    g.add_edge(a, b).expect("chord");
                }
                if !f.extra {
                    if admissible(&g, opts.two_connected) {
                        visit(&g);
                    }
                    continue;
                }
                if !is_outerplanar_fast(&g) {
                    continue;
                }
                let x = n - 1;
                for r in 1..=3 {
                    for ts in targets.iter().combinations(r) {
                        let mut h = g.clone();
                        for &&t in &ts {
                            h.add_edge(x, t).expect("extra edge");
                        }
                        if admissible(&h, opts.two_connected) {
                            visit(&h);
                        }
                    }
                }
            }
        }
    });
    Ok(())
}

/// Attachment lists for [`cut_vertex_family`]: one vertex of the fan, or
/// the two ends of one of its edges.
pub fn fan_attachments(q: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..q).map(|v| vec![v]).collect();
    out.extend((1..q).map(|i| vec![0, i]));
    out.extend((1..q - 1).map(|i| vec![i, i + 1]));
    out
}

/// All outerplanar members of the cut-vertex family on `n = 2q + 1`
/// vertices, with their attachment descriptors.
pub fn cut_vertex_members(n: usize) -> Result<Vec<(Vec<Vec<usize>>, Graph)>> {
    if n.is_multiple_of(2) || n < 7 {
        return Err(Error::EmptyFamily(format!("cut-vertex family needs odd n >= 7, got {n}")));
    }
    let q = (n - 1) / 2;
    let sides = fan_attachments(q);
    let mut out = Vec::new();
    for a in &sides {
        for b in &sides {
            let attach = vec![a.clone(), b.clone()];
            match cut_vertex_family(q, &attach) {
                Ok(g) => out.push((attach, g)),
                Err(Error::NotOuterplanar(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(out)
}

/// How consecutive fans of a chain are joined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Glue {
    EndToEnd,
    EndToHub,
    HubToEnd,
}

/// How a fan meets the centre of a star.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Attach {
    End,
    Hub,
    EndAndHub,
}

/// `k` fans joined in a chain, or hung from a centre vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "kebab-case")]
pub enum Assembly {
    Chain { sizes: Vec<usize>, glue: Vec<Glue> },
    Star { sizes: Vec<usize>, attach: Vec<Attach> },
}

impl Assembly {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Assembly::Chain { sizes, glue } => {
                let layout = FanLayout::new(&sizes.iter().map(|s| s - 1).collect::<Vec<_>>(), 0);
                let mut g = layout.fans()?;
                for (i, joint) in glue.iter().enumerate() {
                    let last = *layout.paths[i].last().expect("non-empty path");
                    let (a, b) = match joint {
                        Glue::EndToEnd => (last, layout.paths[i + 1][0]),
                        Glue::EndToHub => (last, layout.hubs[i + 1]),
                        Glue::HubToEnd => (layout.hubs[i], layout.paths[i + 1][0]),
                    };
                    g.add_edge(a, b)?;
                }
                Ok(g)
            }
            Assembly::Star { sizes, attach } => {
                let layout = FanLayout::new(&sizes.iter().map(|s| s - 1).collect::<Vec<_>>(), 1);
                let mut g = layout.fans()?;
                let c = layout.extra[0];
                for (i, a) in attach.iter().enumerate() {
                    if matches!(a, Attach::End | Attach::EndAndHub) {
                        g.add_edge(c, layout.paths[i][0])?;
                    }
                    if matches!(a, Attach::Hub | Attach::EndAndHub) {
                        g.add_edge(c, layout.hubs[i])?;
                    }
                }
                Ok(g)
            }
        }
    }

    pub fn describe(&self) -> String {
        let names = |v: &[usize]| v.iter().map(|s| s.to_string()).join("+");
        match self {
            Assembly::Chain { sizes, glue } => format!("chain[{}; {:?}]", names(sizes), glue),
            Assembly::Star { sizes, attach } => format!("star[{}; {:?}]", names(sizes), attach),
        }
    }
}

/// Size vectors of length `k` with entries within one of `total / k`,
/// each at least 3, summing to `total`.
fn balanced_sizes(total: usize, k: usize) -> Vec<Vec<usize>> {
    let lo = (total / k).saturating_sub(1).max(3);
    let hi = total.div_ceil(k) + 1;
    if lo > hi {
        return Vec::new();
    }
    (0..k).map(|_| lo..=hi).multi_cartesian_product().filter(|s| s.iter().sum::<usize>() == total).collect()
}

/// Chains of `k` fans on `n` vertices and stars of `k` fans on `n − 1`
/// vertices plus a centre, with near-equal fan sizes.
pub fn fan_assemblies(n: usize, k: usize) -> Vec<Assembly> {
    let mut out = Vec::new();
    if k < 2 {
        return out;
    }
    for sizes in balanced_sizes(n, k) {
        for glue in (0..k - 1).map(|_| [Glue::EndToEnd, Glue::EndToHub, Glue::HubToEnd]).multi_cartesian_product() {
            out.push(Assembly::Chain { sizes: sizes.clone(), glue });
        }
    }
    for sizes in balanced_sizes(n.saturating_sub(1), k) {
        if sizes.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        for attach in (0..k).map(|_| [Attach::End, Attach::Hub, Attach::EndAndHub]).multi_cartesian_product() {
            out.push(Assembly::Star { sizes: sizes.clone(), attach });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        bridged_double_fan, diamond_double_fan, fan_star, g0_prime, triple_fan_chain, ChainVariant, Parity,
    };
    use crate::graph::canon::are_isomorphic;
    use std::sync::Mutex;

    fn members(n: usize, opts: TwoHubOptions) -> Vec<Graph> {
        let out = Mutex::new(Vec::new());
        for_each_two_hub(n, &opts, |g| out.lock().unwrap().push(g.clone())).unwrap();
        out.into_inner().unwrap()
    }

    #[test]
    fn two_hub_family_contains_the_named_graphs() {
        let all = members(16, TwoHubOptions::default());
        assert!(all.iter().all(|g| g.n() == 16 && g.is_connected() && is_outerplanar_fast(g)));
        for named in
            [bridged_double_fan(8).unwrap(), diamond_double_fan(16).unwrap(), g0_prime(Parity::Even, 16).unwrap()]
        {
            assert!(all.iter().any(|g| are_isomorphic(g, &named)));
        }
        let twoc = members(17, TwoHubOptions { two_connected: true, ..Default::default() });
        assert!(twoc.iter().all(|g| g.is_biconnected()));
        assert!(twoc.iter().any(|g| are_isomorphic(g, &diamond_double_fan(17).unwrap())));
        assert!(twoc.iter().any(|g| are_isomorphic(g, &g0_prime(Parity::Odd, 17).unwrap())));
    }

    #[test]
    fn two_hub_order_is_capped() {
        assert!(for_each_two_hub(61, &TwoHubOptions::default(), |_| {}).is_err());
    }

    #[test]
    fn cut_vertex_members_are_outerplanar() {
        let m = cut_vertex_members(13).unwrap();
        assert!(m.len() > 20);
        assert!(m.iter().all(|(_, g)| g.n() == 13 && is_outerplanar_fast(g)));
        assert!(cut_vertex_members(12).is_err());
    }

    #[test]
    fn assemblies_cover_the_conjectured_graphs() {
        let built: Vec<Graph> = fan_assemblies(12, 3).iter().map(|a| a.build().unwrap()).collect();
        for v in ChainVariant::ALL {
            let t = triple_fan_chain(4, v).unwrap();
            assert!(built.iter().any(|g| are_isomorphic(g, &t)), "{v:?}");
        }
        let built: Vec<Graph> = fan_assemblies(13, 3).iter().map(|a| a.build().unwrap()).collect();
        assert!(built.iter().any(|g| are_isomorphic(g, &fan_star(3, 13).unwrap())));
        let pairs: Vec<Graph> = fan_assemblies(20, 2).iter().map(|a| a.build().unwrap()).collect();
        assert!(pairs.iter().any(|g| are_isomorphic(g, &bridged_double_fan(10).unwrap())));
        assert!(pairs.iter().all(|g| g.n() == 20 && is_outerplanar_fast(g)));
    }
}
