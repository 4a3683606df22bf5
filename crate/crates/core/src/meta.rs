//! Exact solving with search space bounded by the non-essentiality.
//!
//! For every budget `k` the detector yields `S_k`; the remainder
//! `G_k = G - S_k` still needs `b_k = k - |S_k|` vertices. Trying the
//! triples in increasing order of `b_k` and stopping at the first solver
//! answer of size exactly `b_k` returns a minimum solution. At `k = opt` the
//! detected set contains every essential vertex, so `b_opt` is at most
//! `opt - |E_c|` and no larger budget is ever handed to the solver.

use alloc::vec::Vec;

use crate::detect::Detector;
use crate::graph::{Remap, VertexSet};
use crate::problem::{Instance, ProblemId};
use crate::solver::{min_solution_avoiding, Solution, SolveStats};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetaTriple {
    pub k: usize,
    /// `G - S_k` together with the id translation back to `G`.
    pub remainder: Instance,
    pub remap: Remap,
    /// Detected set, in original ids.
    pub detected: VertexSet,
    /// `k - |S_k|`.
    pub budget: usize,
}

/// One solver call made by the loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub k: usize,
    pub detected: usize,
    pub budget: usize,
    pub nodes: u64,
    /// Size of the minimum solution of `G_k` if it was within budget.
    pub found: Option<usize>,
    pub accepted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetaOutcome {
    pub solution: Solution,
    /// Schedule in processing order; only attempted triples carry nodes.
    pub schedule: Vec<(usize, usize)>,
    pub trace: Vec<TraceStep>,
    /// Largest budget handed to the solver.
    pub max_budget: usize,
    /// Solver branching nodes summed over all calls.
    pub nodes: u64,
}

/// Triples `(G_k, S_k, b_k)` for `k = 0..=n`, keeping only `b_k >= 0`,
/// sorted by `b_k` and then by `k`.
pub fn schedule(problem: ProblemId, instance: &Instance, detector: &Detector) -> Vec<MetaTriple> {
    let mut triples: Vec<MetaTriple> = (0..=instance.n())
        .filter_map(|k| {
            let detected = detector.detect(k).detected;
            let budget = k.checked_sub(detected.len())?;
            let (remainder, remap) = instance.delete_vertices(&detected).expect("detected ids in range");
            Some(MetaTriple {
                k,
                remainder,
                remap,
                detected,
                budget,
            })
        })
        .collect();
    triples.sort_by_key(|t| (t.budget, t.k));
    debug_assert!(triples.iter().all(|t| t.remainder.fits(problem)));
    triples
}

/// A minimum solution, found by running the exact solver only on the
/// remainders left after removing detected vertices.
pub fn meta_solve(problem: ProblemId, instance: &Instance) -> MetaOutcome {
    let detector = Detector::new(problem, instance);
    meta_solve_with(problem, instance, &detector)
}

pub fn meta_solve_with(problem: ProblemId, instance: &Instance, detector: &Detector) -> MetaOutcome {
    let triples = schedule(problem, instance, detector);
    let schedule_list = triples.iter().map(|t| (t.k, t.budget)).collect();
    let mut trace = Vec::new();
    let mut total = SolveStats::default();
    for t in &triples {
        let mut stats = SolveStats::default();
        let found = min_solution_avoiding(problem, &t.remainder, &VertexSet::new(), t.budget, &mut stats);
        total.nodes += stats.nodes;
        total.max_budget = Some(total.max_budget.map_or(t.budget, |b| b.max(t.budget)));
        let accepted = found.as_ref().is_some_and(|s| s.len() == t.budget);
        trace.push(TraceStep {
            k: t.k,
            detected: t.detected.len(),
            budget: t.budget,
            nodes: stats.nodes,
            found: found.as_ref().map(VertexSet::len),
            accepted,
        });
        if accepted {
            let vertices = t.remap.to_old(&found.unwrap()).union(&t.detected);
            return MetaOutcome {
                solution: Solution { problem, vertices },
                schedule: schedule_list,
                trace,
                max_budget: total.max_budget.unwrap_or(0),
                nodes: total.nodes,
            };
        }
    }
    unreachable!("the triple at k = opt always succeeds")
}
