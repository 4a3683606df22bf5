//! Simple undirected graphs, digraphs and vertex sets over dense 0-based ids.

use alloc::vec::Vec;
use core::fmt;

use crate::error::GraphError;

pub type Vertex = usize;

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(alloc::vec![v])
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Returns `true` if `v` was not present.
    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn max(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| other.contains(v)).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    /// Membership mask of length `n`; ids `>= n` are ignored.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = alloc::vec![false; n];
        for v in self.iter().filter(|&v| v < n) {
            mask[v] = true;
        }
        mask
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub(crate) fn check_range(&self, n: usize) -> Result<(), GraphError> {
        match self.max() {
            Some(v) if v >= n => Err(GraphError::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut members: Vec<Vertex> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(members: Vec<Vertex>) -> Self {
        members.into_iter().collect()
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(members: [Vertex; N]) -> Self {
        members.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Id translation produced by vertex deletion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Remap {
    old_to_new: Vec<Option<Vertex>>,
    new_to_old: Vec<Vertex>,
}

impl Remap {
    pub fn identity(n: usize) -> Self {
        Remap {
            old_to_new: (0..n).map(Some).collect(),
            new_to_old: (0..n).collect(),
        }
    }

    /// Keeps the vertices `v < n` with `keep[v]`, in increasing order.
    pub fn keeping(keep: &[bool]) -> Self {
        let mut old_to_new = alloc::vec![None; keep.len()];
        let mut new_to_old = Vec::new();
        for (v, _) in keep.iter().enumerate().filter(|(_, &k)| k) {
            old_to_new[v] = Some(new_to_old.len());
            new_to_old.push(v);
        }
        Remap {
            old_to_new,
            new_to_old,
        }
    }

    pub fn new_id(&self, old: Vertex) -> Option<Vertex> {
        self.old_to_new.get(old).copied().flatten()
    }

    pub fn old_id(&self, new: Vertex) -> Vertex {
        self.new_to_old[new]
    }

    pub fn old_len(&self) -> usize {
        self.old_to_new.len()
    }

    pub fn new_len(&self) -> usize {
        self.new_to_old.len()
    }

    pub fn to_old(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.old_id(v)).collect()
    }

    pub fn to_new(&self, set: &VertexSet) -> VertexSet {
        set.iter().filter_map(|v| self.new_id(v)).collect()
    }

    /// `self` followed by `next`, where `next` acts on the ids produced by `self`.
    pub fn then(&self, next: &Remap) -> Remap {
        Remap {
            old_to_new: self
                .old_to_new
                .iter()
                .map(|id| id.and_then(|mid| next.new_id(mid)))
                .collect(),
            new_to_old: next.new_to_old.iter().map(|&mid| self.old_id(mid)).collect(),
        }
    }
}

fn insert_sorted(list: &mut Vec<Vertex>, v: Vertex) -> bool {
    match list.binary_search(&v) {
        Ok(_) => false,
        Err(pos) => {
            list.insert(pos, v);
            true
        }
    }
}

/// A finite simple undirected graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: alloc::vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !insert_sorted(&mut self.adj[u], v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        insert_sorted(&mut self.adj[v], u);
        self.m += 1;
        Ok(())
    }

    /// Adds `uv` unless it is already present or a loop.
    pub fn add_edge_lenient(&mut self, u: Vertex, v: Vertex) {
        if u != v && insert_sorted(&mut self.adj[u], v) {
            insert_sorted(&mut self.adj[v], u);
            self.m += 1;
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nb)| {
            nb.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn delete_vertices(&self, x: &VertexSet) -> Result<(Graph, Remap), GraphError> {
        x.check_range(self.n())?;
        let keep: Vec<bool> = (0..self.n()).map(|v| !x.contains(v)).collect();
        let remap = Remap::keeping(&keep);
        Ok((self.apply_remap(&remap), remap))
    }

    pub fn induced(&self, keep: &VertexSet) -> Result<(Graph, Remap), GraphError> {
        keep.check_range(self.n())?;
        let remap = Remap::keeping(&keep.mask(self.n()));
        Ok((self.apply_remap(&remap), remap))
    }

    fn apply_remap(&self, remap: &Remap) -> Graph {
        let mut g = Graph::new(remap.new_len());
        for (u, v) in self.edges() {
            if let (Some(a), Some(b)) = (remap.new_id(u), remap.new_id(v)) {
                g.add_edge_lenient(a, b);
            }
        }
        g
    }

    /// Every edge replaced by a pair of antiparallel arcs.
    pub fn to_digraph(&self) -> Digraph {
        let mut d = Digraph::new(self.n());
        for (u, v) in self.edges() {
            d.add_arc_lenient(u, v);
            d.add_arc_lenient(v, u);
        }
        d
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_lenient(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge_lenient(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge_lenient(i - 1, i);
        }
        g
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::new(leaves + 1);
        for leaf in 1..=leaves {
            g.add_edge_lenient(0, leaf);
        }
        g
    }

    /// `q` triangles sharing vertex 0.
    pub fn friendship(q: usize) -> Graph {
        let mut g = Graph::new(2 * q + 1);
        for i in 0..q {
            let (a, b) = (2 * i + 1, 2 * i + 2);
            g.add_edge_lenient(0, a);
            g.add_edge_lenient(0, b);
            g.add_edge_lenient(a, b);
        }
        g
    }

    pub fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge_lenient(i, (i + 1) % 5);
            g.add_edge_lenient(i, i + 5);
            g.add_edge_lenient(5 + i, 5 + (i + 2) % 5);
        }
        g
    }
}

/// A finite digraph without loops or parallel arcs; antiparallel pairs are allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Digraph {
    out: Vec<Vec<Vertex>>,
    inc: Vec<Vec<Vertex>>,
    m: usize,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph {
            out: alloc::vec![Vec::new(); n],
            inc: alloc::vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut d = Digraph::new(n);
        for (u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !insert_sorted(&mut self.out[u], v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        insert_sorted(&mut self.inc[v], u);
        self.m += 1;
        Ok(())
    }

    pub fn add_arc_lenient(&mut self, u: Vertex, v: Vertex) {
        if u != v && insert_sorted(&mut self.out[u], v) {
            insert_sorted(&mut self.inc[v], u);
            self.m += 1;
        }
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn successors(&self, v: Vertex) -> &[Vertex] {
        &self.out[v]
    }

    pub fn predecessors(&self, v: Vertex) -> &[Vertex] {
        &self.inc[v]
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.out[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, succ)| succ.iter().map(move |&v| (u, v)))
    }

    pub fn delete_vertices(&self, x: &VertexSet) -> Result<(Digraph, Remap), GraphError> {
        x.check_range(self.n())?;
        let keep: Vec<bool> = (0..self.n()).map(|v| !x.contains(v)).collect();
        let remap = Remap::keeping(&keep);
        Ok((self.apply_remap(&remap), remap))
    }

    pub fn induced(&self, keep: &VertexSet) -> Result<(Digraph, Remap), GraphError> {
        keep.check_range(self.n())?;
        let remap = Remap::keeping(&keep.mask(self.n()));
        Ok((self.apply_remap(&remap), remap))
    }

    fn apply_remap(&self, remap: &Remap) -> Digraph {
        let mut d = Digraph::new(remap.new_len());
        for (u, v) in self.arcs() {
            if let (Some(a), Some(b)) = (remap.new_id(u), remap.new_id(v)) {
                d.add_arc_lenient(a, b);
            }
        }
        d
    }

    /// The directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn cycle(n: usize) -> Digraph {
        let mut d = Digraph::new(n);
        for i in 0..n {
            d.add_arc_lenient(i, (i + 1) % n);
        }
        d
    }

    /// `q` directed triangles through vertex 0.
    pub fn friendship(q: usize) -> Digraph {
        let mut d = Digraph::new(2 * q + 1);
        for i in 0..q {
            let (a, b) = (2 * i + 1, 2 * i + 2);
            d.add_arc_lenient(0, a);
            d.add_arc_lenient(a, b);
            d.add_arc_lenient(b, 0);
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delete_from_triangle_leaves_an_edge() {
        let (g, remap) = Graph::complete(3).delete_vertices(&VertexSet::from([0])).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), [(0, 1)]);
        assert_eq!(remap.old_id(0), 1);
        assert_eq!(remap.new_id(0), None);
    }

    #[test]
    fn delete_nothing_is_identity() {
        let g = Graph::petersen();
        let (h, remap) = g.delete_vertices(&VertexSet::new()).unwrap();
        assert_eq!(g, h);
        assert_eq!(remap, Remap::identity(10));
    }

    #[test]
    fn delete_two_from_c5_leaves_p3() {
        let (g, remap) = Graph::cycle(5).delete_vertices(&VertexSet::from([0, 2])).unwrap();
        // survivors 1, 3, 4; only 3-4 remains adjacent
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), [(1, 2)]);
        assert_eq!((0..3).map(|v| remap.old_id(v)).collect::<Vec<_>>(), [1, 3, 4]);
    }

    #[test]
    fn delete_rejects_out_of_range() {
        assert_eq!(
            Graph::cycle(4).delete_vertices(&VertexSet::from([7])),
            Err(GraphError::VertexOutOfRange { vertex: 7, n: 4 })
        );
    }

    #[test]
    fn simple_graph_errors() {
        let mut g = Graph::new(3);
        assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.add_edge(1, 0), Err(GraphError::DuplicateEdge(1, 0)));
        let mut d = Digraph::new(2);
        d.add_arc(0, 1).unwrap();
        d.add_arc(1, 0).unwrap();
        assert_eq!(d.add_arc(0, 1), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(d.m(), 2);
    }

    #[test]
    fn vertex_set_ops() {
        let a = VertexSet::from([3, 1, 1, 2]);
        assert_eq!(a.as_slice(), &[1, 2, 3]);
        let b = VertexSet::from([2, 5]);
        assert_eq!(a.union(&b).as_slice(), &[1, 2, 3, 5]);
        assert_eq!(a.intersection(&b).as_slice(), &[2]);
        assert_eq!(a.difference(&b).as_slice(), &[1, 3]);
        assert!(VertexSet::from([1, 3]).is_subset(&a));
    }
}
