//! Packings of vertex-disjoint `T`-paths through matchings.
//!
//! Both packings use an auxiliary graph `H` holding `G` plus one copy `v'`
//! for every `v` outside `T`, joined by the edge `vv'`. A matching of `H` of
//! size `|V \ T| + k` is normalized until every non-terminal is either
//! matched to its own copy or has both `v` and `v'` matched elsewhere. The
//! matched edges then project onto a subgraph of `G` where terminals have
//! degree at most one and everything else degree zero or two, so its
//! path components are `k` disjoint `T`-paths.
//!
//! * Any parity: `H` joins `out(u)` to `in(v)` and `out(v)` to `in(u)` for
//!   every edge `uv`, where `in(x) = x`, `out(x) = x'` off `T` and
//!   `out(t) = t` on `T`. Terminals are thereby joined to both copies of
//!   each non-terminal neighbour.
//! * Odd: `H` is `G` plus a copy of `G - T`. Interior path vertices then
//!   alternate between original and copy edges, forcing odd length.

use alloc::vec;
use alloc::vec::Vec;

use crate::flow::PathPacking;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::matching::{konig_cover, max_matching, Matching};
use crate::recognize::{is_bipartite, Membership};
use crate::error::KernelError;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Parity {
    Any,
    Odd,
}

struct Auxiliary {
    h: Graph,
    n: usize,
    /// `copy[v]` is the id of `v'` in `H` for `v` outside `T`.
    copy: Vec<Option<Vertex>>,
    /// Projection of `H` vertices onto `G`.
    proj: Vec<Vertex>,
}

impl Auxiliary {
    fn build(g: &Graph, terminals: &VertexSet, parity: Parity) -> Self {
        let n = g.n();
        assert!(terminals.max().is_none_or(|t| t < n), "terminal out of range");
        let mut copy = vec![None; n];
        let mut proj: Vec<Vertex> = (0..n).collect();
        for v in (0..n).filter(|&v| !terminals.contains(v)) {
            copy[v] = Some(proj.len());
            proj.push(v);
        }
        let mut h = Graph::new(proj.len());
        for v in 0..n {
            if let Some(c) = copy[v] {
                h.add_edge_lenient(v, c);
            }
        }
        for (u, v) in g.edges() {
            match parity {
                Parity::Odd => {
                    h.add_edge_lenient(u, v);
                    if let (Some(cu), Some(cv)) = (copy[u], copy[v]) {
                        h.add_edge_lenient(cu, cv);
                    }
                }
                Parity::Any => {
                    let out = |x: Vertex| copy[x].unwrap_or(x);
                    h.add_edge_lenient(out(u), v);
                    h.add_edge_lenient(out(v), u);
                }
            }
        }
        Auxiliary { h, n, copy, proj }
    }

    fn non_terminals(&self) -> usize {
        self.copy.iter().filter(|c| c.is_some()).count()
    }

    /// The doubled-pair partner `(a, b)` matched "crosswise" with `u`, if any:
    /// odd parity `uv, u'v'`; any parity `u'v, v'u`.
    fn doubled_partner(&self, m: &Matching, u: Vertex, parity: Parity) -> Option<Vertex> {
        let cu = self.copy[u]?;
        let (mu, mcu) = (m.mate(u)?, m.mate(cu)?);
        let (a, b) = (self.proj[mu], self.proj[mcu]);
        if a != b || a == u {
            return None;
        }
        let cv = self.copy[a]?;
        let crosswise = match parity {
            Parity::Odd => mu == a && mcu == cv,
            Parity::Any => mu == cv && mcu == a,
        };
        crosswise.then_some(a)
    }

    /// Rewrites `m` without shrinking it until every non-terminal `v` is
    /// matched to `v'` or has both `v` and `v'` matched to distinct neighbours.
    fn normalize(&self, m: &mut Matching, parity: Parity) {
        for u in 0..self.n {
            if let Some(v) = self.doubled_partner(m, u, parity) {
                let (cu, cv) = (self.copy[u].unwrap(), self.copy[v].unwrap());
                for x in [u, v, cu, cv] {
                    m.unpair(x);
                }
                m.pair(u, cu);
                m.pair(v, cv);
            }
        }
        // Moving a vertex onto its copy may free a neighbour, so iterate.
        let mut changed = true;
        while changed {
            changed = false;
            for v in 0..self.n {
                let Some(cv) = self.copy[v] else { continue };
                if m.contains(v, cv) {
                    continue;
                }
                match (m.is_matched(v), m.is_matched(cv)) {
                    (true, true) => {}
                    (true, false) => {
                        m.unpair(v);
                        m.pair(v, cv);
                        changed = true;
                    }
                    (false, true) => {
                        m.unpair(cv);
                        m.pair(v, cv);
                        changed = true;
                    }
                    (false, false) => {
                        m.pair(v, cv);
                        changed = true;
                    }
                }
            }
        }
    }

    /// Path components of the projected matching, each running between two terminals.
    fn extract_paths(&self, m: &Matching) -> Vec<Vec<Vertex>> {
        let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); self.n];
        for (a, b) in m.edges() {
            let (u, v) = (self.proj[a], self.proj[b]);
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut used = vec![false; self.n];
        let mut paths = Vec::new();
        for t in 0..self.n {
            if self.copy[t].is_some() || adj[t].len() != 1 || used[t] {
                continue;
            }
            let mut path = vec![t];
            used[t] = true;
            let (mut prev, mut cur) = (t, adj[t][0]);
            loop {
                path.push(cur);
                used[cur] = true;
                if self.copy[cur].is_none() {
                    break;
                }
                let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                prev = cur;
                cur = next;
            }
            paths.push(path);
        }
        paths
    }

    fn packing(&self, matching: &Matching, parity: Parity) -> Vec<Vec<Vertex>> {
        let expected = matching.len() - self.non_terminals();
        let mut m = matching.clone();
        self.normalize(&mut m, parity);
        debug_assert!(m.len() >= matching.len());
        let paths = self.extract_paths(&m);
        debug_assert_eq!(paths.len(), expected);
        paths
    }
}

/// Maximum number of pairwise vertex-disjoint `T`-paths, with the paths.
pub fn max_t_path_packing(g: &Graph, terminals: &VertexSet) -> PathPacking {
    let aux = Auxiliary::build(g, terminals, Parity::Any);
    let matching = max_matching(&aux.h);
    PathPacking {
        paths: aux.packing(&matching, Parity::Any),
        odd: false,
    }
}

/// Maximum number of pairwise vertex-disjoint odd `T`-paths, with the paths.
pub fn max_odd_t_path_packing(g: &Graph, terminals: &VertexSet) -> PathPacking {
    let aux = Auxiliary::build(g, terminals, Parity::Odd);
    let matching = max_matching(&aux.h);
    PathPacking {
        paths: aux.packing(&matching, Parity::Odd),
        odd: true,
    }
}

/// On a bipartite graph, a minimum vertex set meeting every odd `T`-path.
/// Its size equals the maximum odd `T`-path packing.
pub fn min_odd_t_path_cover_bipartite(g: &Graph, terminals: &VertexSet) -> Result<VertexSet, KernelError> {
    let Membership::Yes(color) = is_bipartite(g) else {
        return Err(KernelError::NotBipartite);
    };
    let aux = Auxiliary::build(g, terminals, Parity::Odd);
    let side: Vec<bool> = aux.proj.iter().enumerate().map(|(x, &v)| if x < aux.n { color[v] } else { !color[v] }).collect();
    let matching = max_matching(&aux.h);
    let cover = konig_cover(&aux.h, &side, &matching);
    let hitting: VertexSet = (0..aux.n)
        .filter(|&u| match aux.copy[u] {
            None => cover.contains(u),
            Some(cu) => cover.contains(u) && cover.contains(cu),
        })
        .collect();
    debug_assert!(!has_odd_t_path_bipartite(g, terminals, &hitting, &color));
    Ok(hitting)
}

/// In a bipartite graph an odd `T`-path survives deletion of `removed`
/// exactly when some component keeps terminals of both colours.
fn has_odd_t_path_bipartite(g: &Graph, terminals: &VertexSet, removed: &VertexSet, color: &[bool]) -> bool {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut seen_color: Vec<[bool; 2]> = Vec::new();
    for root in (0..n).filter(|&v| !removed.contains(v)) {
        if comp[root] != usize::MAX {
            continue;
        }
        let id = seen_color.len();
        seen_color.push([false; 2]);
        comp[root] = id;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            if terminals.contains(u) {
                seen_color[id][color[u] as usize] = true;
            }
            for &w in g.neighbors(u) {
                if comp[w] == usize::MAX && !removed.contains(w) {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
    }
    seen_color.iter().any(|c| c[0] && c[1])
}

/// Checks that `paths` are pairwise vertex-disjoint `T`-paths of `g`
/// (odd length when `odd`).
pub fn is_t_path_packing(g: &Graph, terminals: &VertexSet, packing: &PathPacking) -> bool {
    let mut used = vec![false; g.n()];
    for path in &packing.paths {
        let (Some(&first), Some(&last)) = (path.first(), path.last()) else {
            return false;
        };
        if path.len() < 2 || !terminals.contains(first) || !terminals.contains(last) {
            return false;
        }
        if packing.odd && path.len() % 2 != 0 {
            return false;
        }
        if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
            return false;
        }
        for &v in path {
            if core::mem::replace(&mut used[v], true) {
                return false;
            }
        }
    }
    true
}
