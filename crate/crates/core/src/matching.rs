//! Maximum matching in general graphs (Edmonds' blossom algorithm) and
//! minimum vertex covers of bipartite graphs via König's theorem.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::KernelError;
use crate::graph::{Graph, Vertex, VertexSet};

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges, stored as a mate array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<Vertex>>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching { mate: vec![None; n] }
    }

    pub fn mate(&self, v: Vertex) -> Option<Vertex> {
        self.mate[v]
    }

    pub fn is_matched(&self, v: Vertex) -> bool {
        self.mate[v].is_some()
    }

    pub fn len(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Matched pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
    }

    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        self.mate[u] == Some(v)
    }

    pub fn pair(&mut self, u: Vertex, v: Vertex) {
        self.mate[u] = Some(v);
        self.mate[v] = Some(u);
    }

    pub fn unpair(&mut self, u: Vertex) {
        if let Some(v) = self.mate[u].take() {
            self.mate[v] = None;
        }
    }

    /// `true` if every pair is an edge of `g` and the mate relation is symmetric.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.mate.len() == g.n()
            && self.mate.iter().enumerate().all(|(u, m)| match *m {
                None => true,
                Some(v) => self.mate[v] == Some(u) && g.has_edge(u, v),
            })
    }
}

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<Vertex>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: Vertex, mut b: Vertex) -> Vertex {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: Vertex, b: Vertex, mut child: Vertex) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the exposed endpoint of
    /// an augmenting path, or `NONE` if the tree is Hungarian.
    fn find_path(&mut self, root: Vertex) -> Vertex {
        let n = self.g.n();
        self.in_tree.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.in_tree[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: contract the blossom
                    let cur_base = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur_base, to);
                    self.mark_path(to, cur_base, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur_base;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let next = self.mate[to];
                    self.in_tree[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        NONE
    }

    fn augment(&mut self, mut v: Vertex) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn run(mut self, initial: Option<&Matching>) -> Matching {
        let n = self.g.n();
        if let Some(m) = initial {
            for (u, v) in m.edges() {
                self.mate[u] = v;
                self.mate[v] = u;
            }
        } else {
            // greedy start
            for u in 0..n {
                if self.mate[u] == NONE {
                    if let Some(&v) = self.g.neighbors(u).iter().find(|&&v| self.mate[v] == NONE) {
                        self.mate[u] = v;
                        self.mate[v] = u;
                    }
                }
            }
        }
        for root in 0..n {
            if self.mate[root] == NONE {
                let end = self.find_path(root);
                if end != NONE {
                    self.augment(end);
                }
            }
        }
        Matching {
            mate: self.mate.into_iter().map(|m| (m != NONE).then_some(m)).collect(),
        }
    }
}

/// Maximum-cardinality matching.
///
/// After the search phase every exposed vertex has been the root of a
/// failed alternating-tree search, so no augmenting path remains and the
/// matching is maximum by Berge's theorem.
pub fn max_matching(g: &Graph) -> Matching {
    Blossom::new(g).run(None)
}

/// Maximum matching obtained by augmenting a given valid matching of `g`.
pub fn max_matching_from(g: &Graph, start: &Matching) -> Matching {
    debug_assert!(start.is_valid_in(g));
    Blossom::new(g).run(Some(start))
}

/// Minimum vertex cover of a bipartite graph from a maximum matching (König).
///
/// `side[v]` is the color of `v` in a proper 2-coloring.
pub fn min_vertex_cover_bipartite(g: &Graph, side: &[bool]) -> Result<VertexSet, KernelError> {
    if side.len() != g.n() {
        return Err(KernelError::NotBipartite);
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| side[u] == side[v]) {
        return Err(KernelError::ImproperColoring { u, v });
    }
    let matching = max_matching(g);
    Ok(konig_cover(g, side, &matching))
}

/// Given a maximum matching of a bipartite graph, the König cover
/// `(L \ Z) ∪ (R ∩ Z)` where `Z` is everything reachable from exposed
/// left vertices by alternating paths.
pub(crate) fn konig_cover(g: &Graph, side: &[bool], matching: &Matching) -> VertexSet {
    let n = g.n();
    let mut reached = vec![false; n];
    let mut queue: VecDeque<Vertex> = (0..n)
        .filter(|&v| !side[v] && !matching.is_matched(v))
        .collect();
    for &v in &queue {
        reached[v] = true;
    }
    while let Some(u) = queue.pop_front() {
        // u is a left vertex; leave by non-matching edges, return by matching edges
        for &w in g.neighbors(u) {
            if reached[w] || matching.contains(u, w) {
                continue;
            }
            reached[w] = true;
            if let Some(x) = matching.mate(w) {
                if !reached[x] {
                    reached[x] = true;
                    queue.push_back(x);
                }
            }
        }
    }
    (0..n)
        .filter(|&v| if side[v] { reached[v] } else { !reached[v] })
        .collect()
}
