//! Minimum vertex separators and internally vertex-disjoint paths (Menger)
//! via unit vertex capacities on the split digraph.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{GraphError, KernelError};
use crate::graph::{Digraph, Graph, Vertex, VertexSet};

/// A family of vertex sequences, each a path of the graph it was computed on.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathPacking {
    pub paths: Vec<Vec<Vertex>>,
    pub odd: bool,
}

impl PathPacking {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorResult {
    pub separator: VertexSet,
    /// Internally vertex-disjoint source-to-sink paths, endpoints included.
    pub paths: PathPacking,
}

impl SeparatorResult {
    pub fn size(&self) -> usize {
        self.separator.len()
    }
}

#[derive(Clone, Copy, Debug)]
struct Edge {
    to: usize,
    cap: u32,
}

/// Residual network with paired forward/backward edges (`e ^ 1`).
struct Network {
    head: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            head: vec![Vec::new(); nodes],
            edges: Vec::new(),
        }
    }

    fn add(&mut self, from: usize, to: usize, cap: u32) {
        self.head[from].push(self.edges.len());
        self.edges.push(Edge { to, cap });
        self.head[to].push(self.edges.len());
        self.edges.push(Edge { to: from, cap: 0 });
    }

    /// One BFS augmentation of one unit; returns `false` when saturated.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut via = vec![usize::MAX; self.head.len()];
        let mut seen = vec![false; self.head.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for &e in &self.head[x] {
                let Edge { to, cap } = self.edges[e];
                if cap > 0 && !seen[to] {
                    seen[to] = true;
                    via[to] = e;
                    queue.push_back(to);
                }
            }
        }
        if !seen[sink] {
            return false;
        }
        let mut x = sink;
        while x != source {
            let e = via[x];
            self.edges[e].cap -= 1;
            self.edges[e ^ 1].cap += 1;
            x = self.edges[e ^ 1].to;
        }
        true
    }

    fn reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &e in &self.head[x] {
                let Edge { to, cap } = self.edges[e];
                if cap > 0 && !seen[to] {
                    seen[to] = true;
                    queue.push_back(to);
                }
            }
        }
        seen
    }
}

/// Minimum set of vertices other than `s`, `t` meeting every `s -> t` path,
/// together with as many internally vertex-disjoint `s -> t` paths.
pub fn min_vertex_separator(d: &Digraph, s: Vertex, t: Vertex) -> Result<SeparatorResult, KernelError> {
    let n = d.n();
    for v in [s, t] {
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n }.into());
        }
    }
    if s == t || d.has_arc(s, t) {
        return Err(KernelError::SeparatorUndefined { source: s, sink: t });
    }
    // vertex x becomes x_in = 2x and x_out = 2x + 1
    let big = n as u32 + 1;
    let mut net = Network::new(2 * n);
    for x in 0..n {
        let cap = if x == s || x == t { big } else { 1 };
        net.add(2 * x, 2 * x + 1, cap);
    }
    let mut arc_edge = Vec::with_capacity(d.m());
    // arcs into s or out of t lie on no s -> t path
    for (u, v) in d.arcs().filter(|&(u, v)| v != s && u != t) {
        arc_edge.push((net.edges.len(), u, v));
        net.add(2 * u + 1, 2 * v, big);
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while net.augment(source, sink) {
        flow += 1;
    }

    let reach = net.reachable(source);
    let separator: VertexSet = (0..n)
        .filter(|&x| x != s && x != t && reach[2 * x] && !reach[2 * x + 1])
        .collect();
    debug_assert_eq!(separator.len(), flow);

    // decompose the flow along arcs carrying one unit
    let mut next: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for &(e, u, v) in &arc_edge {
        let used = big - net.edges[e].cap;
        for _ in 0..used {
            next[u].push(v);
        }
    }
    let mut paths = Vec::with_capacity(flow);
    for _ in 0..flow {
        let mut path = vec![s];
        let mut cur = s;
        while cur != t {
            cur = next[cur].pop().expect("flow conservation");
            path.push(cur);
        }
        paths.push(path);
    }
    Ok(SeparatorResult {
        separator,
        paths: PathPacking { paths, odd: false },
    })
}

/// Undirected variant: each edge acts as two antiparallel arcs.
pub fn min_vertex_separator_undirected(g: &Graph, s: Vertex, t: Vertex) -> Result<SeparatorResult, KernelError> {
    min_vertex_separator(&g.to_digraph(), s, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn directed_path() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        let r = min_vertex_separator(&d, 0, 2).unwrap();
        assert_eq!(r.separator, VertexSet::from([1]));
        assert_eq!(r.paths.paths, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn two_disjoint_routes() {
        let d = Digraph::from_arcs(4, [(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        let r = min_vertex_separator(&d, 0, 3).unwrap();
        assert_eq!(r.size(), 2);
        assert_eq!(r.paths.len(), 2);
    }

    #[test]
    fn adjacent_terminals_rejected() {
        let d = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(
            min_vertex_separator(&d, 0, 1),
            Err(KernelError::SeparatorUndefined { source: 0, sink: 1 })
        );
        // the reverse direction has no arc and nothing to separate
        assert_eq!(min_vertex_separator(&d, 1, 0).unwrap().size(), 0);
    }

    #[test]
    fn undirected_cycle() {
        let r = min_vertex_separator_undirected(&Graph::cycle(6), 0, 3).unwrap();
        assert_eq!(r.size(), 2);
    }
}
