//! The six vertex-deletion problems and the instances they act on.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::GraphError;
use crate::graph::{Digraph, Graph, Remap, Vertex, VertexSet};
use crate::recognize::{
    is_acyclic_directed, is_acyclic_undirected, is_bipartite, is_chordal, shortest_cycle,
    shortest_directed_cycle, shortest_hole, shortest_odd_cycle, shortest_odd_directed_cycle,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProblemId {
    /// Vertex Cover: delete until edgeless.
    Vc,
    /// Feedback Vertex Set: delete until acyclic.
    Fvs,
    /// Directed Feedback Vertex Set: delete until the digraph is acyclic.
    Dfvs,
    /// Odd Cycle Transversal: delete until bipartite.
    Oct,
    /// Directed Odd Cycle Transversal: delete until no odd directed cycle remains.
    Doct,
    /// Chordal Vertex Deletion: delete until no hole remains.
    Cvd,
}

impl ProblemId {
    pub const ALL: [ProblemId; 6] = [
        ProblemId::Vc,
        ProblemId::Fvs,
        ProblemId::Dfvs,
        ProblemId::Oct,
        ProblemId::Doct,
        ProblemId::Cvd,
    ];

    /// Approximation factor up to which essential vertices are detected.
    pub const fn coefficient(self) -> u32 {
        match self {
            ProblemId::Vc | ProblemId::Fvs | ProblemId::Dfvs | ProblemId::Oct => 2,
            ProblemId::Doct => 3,
            ProblemId::Cvd => 13,
        }
    }

    pub const fn is_directed(self) -> bool {
        matches!(self, ProblemId::Dfvs | ProblemId::Doct)
    }

    pub const fn name(self) -> &'static str {
        match self {
            ProblemId::Vc => "vc",
            ProblemId::Fvs => "fvs",
            ProblemId::Dfvs => "dfvs",
            ProblemId::Oct => "oct",
            ProblemId::Doct => "doct",
            ProblemId::Cvd => "cvd",
        }
    }
}

impl fmt::Display for ProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownProblem;

impl fmt::Display for UnknownProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown problem (expected vc, fvs, dfvs, oct, doct or cvd)")
    }
}

impl FromStr for ProblemId {
    type Err = UnknownProblem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ProblemId::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or(UnknownProblem)
    }
}

/// A graph or digraph, whichever the problem at hand expects.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Instance {
    Undirected(Graph),
    Directed(Digraph),
}

impl Instance {
    pub fn n(&self) -> usize {
        match self {
            Instance::Undirected(g) => g.n(),
            Instance::Directed(d) => d.n(),
        }
    }

    pub fn m(&self) -> usize {
        match self {
            Instance::Undirected(g) => g.m(),
            Instance::Directed(d) => d.m(),
        }
    }

    pub fn is_directed(&self) -> bool {
        matches!(self, Instance::Directed(_))
    }

    pub fn fits(&self, problem: ProblemId) -> bool {
        self.is_directed() == problem.is_directed()
    }

    pub fn delete_vertices(&self, x: &VertexSet) -> Result<(Instance, Remap), GraphError> {
        Ok(match self {
            Instance::Undirected(g) => {
                let (h, r) = g.delete_vertices(x)?;
                (Instance::Undirected(h), r)
            }
            Instance::Directed(d) => {
                let (h, r) = d.delete_vertices(x)?;
                (Instance::Directed(h), r)
            }
        })
    }

    pub fn induced(&self, keep: &VertexSet) -> Result<(Instance, Remap), GraphError> {
        Ok(match self {
            Instance::Undirected(g) => {
                let (h, r) = g.induced(keep)?;
                (Instance::Undirected(h), r)
            }
            Instance::Directed(d) => {
                let (h, r) = d.induced(keep)?;
                (Instance::Directed(h), r)
            }
        })
    }

    /// Weakly connected components, each sorted.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut comp = alloc::vec![usize::MAX; n];
        let mut out = Vec::new();
        for root in 0..n {
            if comp[root] != usize::MAX {
                continue;
            }
            comp[root] = out.len();
            let mut members = alloc::vec![root];
            let mut stack = alloc::vec![root];
            while let Some(u) = stack.pop() {
                let nbrs: &mut dyn Iterator<Item = &Vertex> = match self {
                    Instance::Undirected(g) => &mut g.neighbors(u).iter(),
                    Instance::Directed(d) => &mut d.successors(u).iter().chain(d.predecessors(u)),
                };
                for &w in nbrs {
                    if comp[w] == usize::MAX {
                        comp[w] = out.len();
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            out.push(members.into_iter().collect());
        }
        out
    }
}

impl From<Graph> for Instance {
    fn from(g: Graph) -> Self {
        Instance::Undirected(g)
    }
}

impl From<Digraph> for Instance {
    fn from(d: Digraph) -> Self {
        Instance::Directed(d)
    }
}

/// `true` if the instance already lies in the problem's target class.
///
/// # Panics
/// If the instance kind does not match the problem.
pub fn in_class(problem: ProblemId, instance: &Instance) -> bool {
    match (problem, instance) {
        (ProblemId::Vc, Instance::Undirected(g)) => g.m() == 0,
        (ProblemId::Fvs, Instance::Undirected(g)) => is_acyclic_undirected(g).is_yes(),
        (ProblemId::Oct, Instance::Undirected(g)) => is_bipartite(g).is_yes(),
        (ProblemId::Cvd, Instance::Undirected(g)) => is_chordal(g).is_yes(),
        (ProblemId::Dfvs, Instance::Directed(d)) => is_acyclic_directed(d).is_yes(),
        (ProblemId::Doct, Instance::Directed(d)) => shortest_odd_directed_cycle(d).is_none(),
        _ => panic!("{problem} does not apply to this kind of graph"),
    }
}

/// A shortest forbidden structure of the problem, or `None` if in class.
/// For vertex cover the structure is an edge.
pub fn shortest_obstruction(problem: ProblemId, instance: &Instance) -> Option<Vec<Vertex>> {
    match (problem, instance) {
        (ProblemId::Vc, Instance::Undirected(g)) => {
            // edge at a vertex of maximum degree
            let u = g.vertices().max_by_key(|&v| (g.degree(v), core::cmp::Reverse(v)))?;
            let &v = g.neighbors(u).first()?;
            Some(alloc::vec![u, v])
        }
        (ProblemId::Fvs, Instance::Undirected(g)) => shortest_cycle(g),
        (ProblemId::Oct, Instance::Undirected(g)) => shortest_odd_cycle(g),
        (ProblemId::Cvd, Instance::Undirected(g)) => shortest_hole(g),
        (ProblemId::Dfvs, Instance::Directed(d)) => shortest_directed_cycle(d),
        (ProblemId::Doct, Instance::Directed(d)) => shortest_odd_directed_cycle(d),
        _ => panic!("{problem} does not apply to this kind of graph"),
    }
}

/// `true` if deleting `solution` puts the instance into the problem's class.
pub fn is_solution(problem: ProblemId, instance: &Instance, solution: &VertexSet) -> bool {
    match instance.delete_vertices(solution) {
        Ok((rest, _)) => in_class(problem, &rest),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients() {
        let cs: Vec<u32> = ProblemId::ALL.iter().map(|p| p.coefficient()).collect();
        assert_eq!(cs, [2, 2, 2, 2, 3, 13]);
    }

    #[test]
    fn parse_names() {
        assert_eq!("OCT".parse::<ProblemId>(), Ok(ProblemId::Oct));
        assert_eq!("dfvs".parse::<ProblemId>(), Ok(ProblemId::Dfvs));
        assert!("ds".parse::<ProblemId>().is_err());
    }

    #[test]
    fn doct_class_allows_even_cycles() {
        let two = Instance::from(Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap());
        assert!(in_class(ProblemId::Doct, &two));
        assert!(!in_class(ProblemId::Dfvs, &two));
    }

    #[test]
    fn components_of_directed_instance() {
        let d = Digraph::from_arcs(5, [(1, 0), (2, 3)]).unwrap();
        let comps = Instance::from(d).components();
        assert_eq!(comps, [VertexSet::from([0, 1]), VertexSet::from([2, 3]), VertexSet::from([4])]);
    }
}
