//! Exact budgeted solvers: bounded-depth branching on a shortest forbidden
//! structure, one branch per deletable vertex of it.

use alloc::vec::Vec;

use crate::graph::{Vertex, VertexSet};
use crate::problem::{is_solution, shortest_obstruction, Instance, ProblemId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub problem: ProblemId,
    pub vertices: VertexSet,
}

impl Solution {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Re-checks the solution with the class recognizer.
    pub fn verify(&self, instance: &Instance) -> bool {
        is_solution(self.problem, instance, &self.vertices)
    }
}

/// Search-tree accounting shared across solver calls.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Branching nodes visited, summed over all deepening rounds.
    pub nodes: u64,
    pub calls: u64,
    /// Largest budget any call was started with.
    pub max_budget: Option<usize>,
}

/// A minimum solution if one of size at most `budget` exists.
pub fn exact_budgeted_solve(problem: ProblemId, instance: &Instance, budget: usize) -> Option<Solution> {
    exact_budgeted_solve_with_stats(problem, instance, budget, &mut SolveStats::default())
}

pub fn exact_budgeted_solve_with_stats(
    problem: ProblemId,
    instance: &Instance,
    budget: usize,
    stats: &mut SolveStats,
) -> Option<Solution> {
    min_solution_avoiding(problem, instance, &VertexSet::new(), budget, stats)
        .map(|vertices| Solution { problem, vertices })
}

/// A minimum solution among those of size at most `budget` that contain no
/// vertex of `undeletable`. Iterative deepening over the budget makes the
/// first success minimum.
pub fn min_solution_avoiding(
    problem: ProblemId,
    instance: &Instance,
    undeletable: &VertexSet,
    budget: usize,
    stats: &mut SolveStats,
) -> Option<VertexSet> {
    assert!(instance.fits(problem), "{problem} does not apply to this kind of graph");
    stats.calls += 1;
    stats.max_budget = Some(stats.max_budget.map_or(budget, |b| b.max(budget)));
    let frozen = undeletable.mask(instance.n());
    let ids: Vec<Vertex> = (0..instance.n()).collect();
    (0..=budget).find_map(|b| branch(problem, instance, &ids, &frozen, b, stats).map(VertexSet::from))
}

fn branch(
    problem: ProblemId,
    instance: &Instance,
    ids: &[Vertex],
    frozen: &[bool],
    budget: usize,
    stats: &mut SolveStats,
) -> Option<Vec<Vertex>> {
    stats.nodes += 1;
    let Some(obstruction) = shortest_obstruction(problem, instance) else {
        return Some(Vec::new());
    };
    if budget == 0 || packing_exceeds(problem, instance, ids, frozen, &obstruction, budget) {
        return None;
    }
    for x in obstruction.into_iter().filter(|&x| !frozen[ids[x]]) {
        let (rest, remap) = instance
            .delete_vertices(&VertexSet::singleton(x))
            .expect("vertex in range");
        let rest_ids: Vec<Vertex> = (0..rest.n()).map(|y| ids[remap.old_id(y)]).collect();
        if let Some(mut found) = branch(problem, &rest, &rest_ids, frozen, budget - 1, stats) {
            found.push(ids[x]);
            return Some(found);
        }
    }
    None
}

/// `true` if more than `budget` obstructions pairwise share no deletable
/// vertex (or one has no deletable vertex at all); any solution then
/// exceeds the budget. The packing is greedy, starting from `first`.
fn packing_exceeds(
    problem: ProblemId,
    instance: &Instance,
    ids: &[Vertex],
    frozen: &[bool],
    first: &[Vertex],
    budget: usize,
) -> bool {
    let mut rest = instance.clone();
    let mut rest_ids = ids.to_vec();
    let mut obstruction = first.to_vec();
    for _ in 0..budget {
        let hit: VertexSet = obstruction.iter().copied().filter(|&x| !frozen[rest_ids[x]]).collect();
        if hit.is_empty() {
            return true;
        }
        let (next, remap) = rest.delete_vertices(&hit).expect("vertices in range");
        rest_ids = (0..next.n()).map(|y| rest_ids[remap.old_id(y)]).collect();
        rest = next;
        match shortest_obstruction(problem, &rest) {
            Some(o) => obstruction = o,
            None => return false,
        }
    }
    // `budget` disjoint obstructions are deleted and one more remains
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Digraph, Graph};

    #[test]
    fn examples() {
        let c5 = Instance::from(Graph::cycle(5));
        assert_eq!(exact_budgeted_solve(ProblemId::Fvs, &c5, 1).unwrap().len(), 1);
        assert_eq!(exact_budgeted_solve(ProblemId::Oct, &c5, 0), None);
        let petersen = Instance::from(Graph::petersen());
        let vc = exact_budgeted_solve(ProblemId::Vc, &petersen, 6).unwrap();
        assert_eq!(vc.len(), 6);
        assert!(vc.verify(&petersen));
        assert_eq!(exact_budgeted_solve(ProblemId::Vc, &petersen, 5), None);
    }

    #[test]
    fn minimum_even_with_slack() {
        let fr = Instance::from(Graph::friendship(3));
        let s = exact_budgeted_solve(ProblemId::Fvs, &fr, 5).unwrap();
        assert_eq!(s.vertices, VertexSet::from([0]));
    }

    #[test]
    fn undeletable_vertices_are_respected() {
        let fr = Instance::from(Graph::friendship(3));
        let mut stats = SolveStats::default();
        let s = min_solution_avoiding(ProblemId::Fvs, &fr, &VertexSet::from([0]), 5, &mut stats).unwrap();
        assert_eq!(s.len(), 3);
        assert!(!s.contains(0));
        assert_eq!(stats.max_budget, Some(5));
    }

    #[test]
    fn directed_problems() {
        let two = Instance::from(Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap());
        assert_eq!(exact_budgeted_solve(ProblemId::Doct, &two, 0).unwrap().len(), 0);
        assert_eq!(exact_budgeted_solve(ProblemId::Dfvs, &two, 1).unwrap().len(), 1);
        let dfr = Instance::from(Digraph::friendship(3));
        assert_eq!(exact_budgeted_solve(ProblemId::Doct, &dfr, 3).unwrap().vertices, VertexSet::from([0]));
    }

    #[test]
    fn chordal_deletion() {
        let c6 = Instance::from(Graph::cycle(6));
        assert_eq!(exact_budgeted_solve(ProblemId::Cvd, &c6, 2).unwrap().len(), 1);
        let k4 = Instance::from(Graph::complete(4));
        assert!(exact_budgeted_solve(ProblemId::Cvd, &k4, 0).unwrap().is_empty());
    }
}
