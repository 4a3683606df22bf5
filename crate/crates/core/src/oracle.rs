//! Brute-force ground truth: exact optima, exact c-essential sets, flower
//! numbers, and checking of detector outputs against both guarantees.
//!
//! Everything here enumerates vertex subsets or cycles and is exponential.
//! Caps are configuration; exceeding one is an error, never a truncation.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::OracleError;
use crate::graph::{Vertex, VertexSet};
use crate::problem::{in_class, Instance, ProblemId};
use crate::solver::{min_solution_avoiding, SolveStats};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCaps {
    /// Largest instance for [`brute_opt`].
    pub opt: usize,
    /// Largest instance for [`brute_essential`] and [`verify_detection`].
    pub essential: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps { opt: 12, essential: 9 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptReport {
    pub opt: usize,
    /// Every optimal solution, in increasing bitmask order.
    pub optimal_solutions: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub opt: usize,
    pub optimal_solutions: Vec<VertexSet>,
    /// The c-essential vertices.
    pub essential: VertexSet,
    pub c: u32,
    /// Non-essentiality `opt - |essential|`.
    pub ell: usize,
}

fn check_cap(instance: &Instance, cap: usize) -> Result<(), OracleError> {
    let n = instance.n();
    // subsets are u32 masks
    if n > cap || n > 31 {
        return Err(OracleError::CapExceeded { n, cap });
    }
    Ok(())
}

fn check_kind(problem: ProblemId, instance: &Instance) -> Result<(), OracleError> {
    if instance.fits(problem) {
        Ok(())
    } else {
        Err(OracleError::WrongInstanceKind)
    }
}

fn mask_to_set(mask: u32) -> VertexSet {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Feasibility of every subset of the vertex set, indexed by bitmask.
fn feasible_table(problem: ProblemId, instance: &Instance) -> Vec<bool> {
    let n = instance.n();
    let mut table = vec![false; 1 << n];
    for mask in 0..(1u32 << n) {
        // supersets of feasible sets are feasible (hereditary classes)
        if (0..n).any(|v| mask >> v & 1 == 1 && table[(mask & !(1 << v)) as usize]) {
            table[mask as usize] = true;
            continue;
        }
        let (rest, _) = instance.delete_vertices(&mask_to_set(mask)).expect("mask in range");
        table[mask as usize] = in_class(problem, &rest);
    }
    table
}

/// Minimum solution size and all minimum solutions, by subset enumeration.
pub fn brute_opt(problem: ProblemId, instance: &Instance, caps: OracleCaps) -> Result<OptReport, OracleError> {
    check_kind(problem, instance)?;
    check_cap(instance, caps.opt)?;
    let table = feasible_table(problem, instance);
    Ok(opt_from_table(&table))
}

fn opt_from_table(table: &[bool]) -> OptReport {
    let opt = (0..table.len())
        .filter(|&m| table[m])
        .map(|m| (m as u32).count_ones() as usize)
        .min()
        .expect("deleting everything is always feasible");
    let optimal_solutions = (0..table.len() as u32)
        .filter(|&m| table[m as usize] && m.count_ones() as usize == opt)
        .map(mask_to_set)
        .collect();
    OptReport { opt, optimal_solutions }
}

fn essential_from_table(table: &[bool], n: usize, bound: usize) -> VertexSet {
    let mut common: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    for m in 0..table.len() as u32 {
        if table[m as usize] && m.count_ones() as usize <= bound {
            common &= m;
        }
    }
    mask_to_set(common)
}

/// Vertices contained in every solution of size at most `floor(c * opt)`.
pub fn brute_essential(problem: ProblemId, instance: &Instance, c: u32, caps: OracleCaps) -> Result<VertexSet, OracleError> {
    Ok(brute_report(problem, instance, c, caps)?.essential)
}

/// Optimum, optimal solutions and the c-essential set in one enumeration.
pub fn brute_report(problem: ProblemId, instance: &Instance, c: u32, caps: OracleCaps) -> Result<OracleReport, OracleError> {
    check_kind(problem, instance)?;
    check_cap(instance, caps.essential)?;
    let table = feasible_table(problem, instance);
    let OptReport { opt, optimal_solutions } = opt_from_table(&table);
    let essential = essential_from_table(&table, instance.n(), c as usize * opt);
    let ell = opt - essential.len();
    Ok(OracleReport {
        opt,
        optimal_solutions,
        essential,
        c,
        ell,
    })
}

/// Minimum size of a solution not containing `v`.
pub fn brute_avoiding_opt(problem: ProblemId, instance: &Instance, v: Vertex, caps: OracleCaps) -> Result<usize, OracleError> {
    check_kind(problem, instance)?;
    check_cap(instance, caps.opt)?;
    let table = feasible_table(problem, instance);
    Ok((0..table.len() as u32)
        .filter(|&m| table[m as usize] && m >> v & 1 == 0)
        .map(|m| m.count_ones() as usize)
        .min()
        .expect("all other vertices form a solution"))
}

/// Optimum and c-essential set by exact search instead of enumeration.
///
/// Works component by component: the optimum is additive over components,
/// and `v` is c-essential exactly when the best solution avoiding `v` is
/// larger than `c * opt`. Suitable for large instances with small
/// components or small solutions, where subset enumeration is out of reach.
pub fn search_report(problem: ProblemId, instance: &Instance, c: u32) -> Result<OracleReport, OracleError> {
    check_kind(problem, instance)?;
    let mut stats = SolveStats::default();
    let comps = instance.components();
    let mut parts = Vec::with_capacity(comps.len());
    let mut opt = 0;
    for comp in &comps {
        let (sub, remap) = instance.induced(comp).expect("component in range");
        let best = min_solution_avoiding(problem, &sub, &VertexSet::new(), sub.n(), &mut stats)
            .expect("deleting everything is feasible");
        opt += best.len();
        parts.push((sub, remap, best));
    }
    let bound = c as usize * opt;
    let mut essential = VertexSet::new();
    let mut solution = VertexSet::new();
    for (sub, remap, best) in &parts {
        solution = solution.union(&remap.to_old(best));
        let others = opt - best.len();
        for v in best.iter() {
            let budget = bound - others;
            let avoiding = min_solution_avoiding(problem, sub, &VertexSet::singleton(v), budget, &mut stats);
            if avoiding.is_none() {
                essential.insert(remap.old_id(v));
            }
        }
    }
    let ell = opt - essential.len();
    Ok(OracleReport {
        opt,
        optimal_solutions: vec![solution],
        essential,
        c,
        ell,
    })
}

/// Families of forbidden structures a flower may be built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Cycles,
    DirectedCycles,
    OddCycles,
}

/// Vertex sets (as masks) of all cycles of the family through `v`,
/// reduced to the inclusion-minimal ones.
fn minimal_cycle_masks(instance: &Instance, v: Vertex, family: Family) -> Vec<u32> {
    let mut found: BTreeSet<u32> = BTreeSet::new();
    let succ = |u: Vertex| -> &[Vertex] {
        match instance {
            Instance::Undirected(g) => g.neighbors(u),
            Instance::Directed(d) => d.successors(u),
        }
    };
    let min_len = if matches!(family, Family::DirectedCycles) { 2 } else { 3 };
    // DFS over simple paths starting at v; a path closes when its end sees v.
    let mut stack: Vec<(Vertex, u32, usize, usize)> = vec![(v, 1 << v, 1, 0)];
    while let Some((u, mask, len, next)) = stack.pop() {
        let nb = succ(u);
        if next >= nb.len() {
            continue;
        }
        stack.push((u, mask, len, next + 1));
        let w = nb[next];
        if w == v {
            let ok = len >= min_len && (family != Family::OddCycles || len % 2 == 1);
            if ok {
                found.insert(mask);
            }
        } else if mask >> w & 1 == 0 {
            stack.push((w, mask | 1 << w, len + 1, 0));
        }
    }
    let all: Vec<u32> = found.into_iter().collect();
    all.iter()
        .copied()
        .filter(|&m| !all.iter().any(|&o| o != m && o & m == o))
        .collect()
}

/// Largest number of family cycles through `v` pairwise meeting only in `v`.
pub fn brute_flower(instance: &Instance, v: Vertex, family: Family, caps: OracleCaps) -> Result<usize, OracleError> {
    check_cap(instance, caps.opt)?;
    let petals: Vec<u32> = minimal_cycle_masks(instance, v, family)
        .into_iter()
        .map(|m| m & !(1 << v))
        .collect();
    let n = instance.n();
    let full: u32 = ((1u64 << n) - 1) as u32 & !(1 << v);
    let mut memo = vec![usize::MAX; 1 << n];
    Ok(max_disjoint(full, &petals, &mut memo))
}

/// Maximum number of pairwise disjoint masks inside `avail`.
fn max_disjoint(avail: u32, sets: &[u32], memo: &mut [usize]) -> usize {
    if avail == 0 {
        return 0;
    }
    if memo[avail as usize] != usize::MAX {
        return memo[avail as usize];
    }
    let low = avail & avail.wrapping_neg();
    // either the lowest available vertex stays unused, or some set uses it
    let mut best = max_disjoint(avail & !low, sets, memo);
    for &s in sets {
        if s & low != 0 && s & avail == s {
            best = best.max(1 + max_disjoint(avail & !s, sets, memo));
        }
    }
    memo[avail as usize] = best;
    best
}

/// Minimum number of vertices other than `v` meeting every family cycle through `v`.
pub fn brute_flower_cover(instance: &Instance, v: Vertex, family: Family, caps: OracleCaps) -> Result<usize, OracleError> {
    check_cap(instance, caps.opt)?;
    let petals = minimal_cycle_masks(instance, v, family);
    let n = instance.n();
    Ok((0..(1u32 << n))
        .filter(|&m| m >> v & 1 == 0 && petals.iter().all(|&p| p & m != 0))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap_or(0))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// `opt <= k` but no optimal solution contains the detected set.
    FailG1 { detected: VertexSet, opt: usize },
    /// `opt == k` but these c-essential vertices were missed.
    FailG2 { missing: VertexSet },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn reason(&self) -> String {
        use alloc::format;
        match self {
            Verdict::Pass => String::from("pass"),
            Verdict::FailG1 { detected, opt } => {
                format!("G1 violated: no optimal solution (opt {opt}) contains {detected}")
            }
            Verdict::FailG2 { missing } => format!("G2 violated: essential vertices {missing} not detected"),
        }
    }
}

/// Checks a detector output: with `opt <= k` the set must lie in some
/// optimal solution; with `opt == k` it must contain every c-essential vertex.
pub fn verify_detection(
    problem: ProblemId,
    instance: &Instance,
    k: usize,
    detected: &VertexSet,
    c: u32,
    caps: OracleCaps,
) -> Result<Verdict, OracleError> {
    let report = brute_report(problem, instance, c, caps)?;
    Ok(verdict_from_report(&report, k, detected))
}

/// Same check against a report computed once for many budgets.
pub fn verdict_from_report(report: &OracleReport, k: usize, detected: &VertexSet) -> Verdict {
    if report.opt <= k {
        let inside = report.optimal_solutions.iter().any(|x| detected.is_subset(x));
        if !inside {
            return Verdict::FailG1 {
                detected: detected.clone(),
                opt: report.opt,
            };
        }
    }
    if report.opt == k {
        let missing = report.essential.difference(detected);
        if !missing.is_empty() {
            return Verdict::FailG2 { missing };
        }
    }
    Verdict::Pass
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Digraph, Graph};

    const CAPS: OracleCaps = OracleCaps { opt: 12, essential: 12 };

    #[test]
    fn opt_examples() {
        let c5 = Instance::from(Graph::cycle(5));
        let r = brute_opt(ProblemId::Oct, &c5, CAPS).unwrap();
        assert_eq!((r.opt, r.optimal_solutions.len()), (1, 5));
        assert_eq!(brute_opt(ProblemId::Fvs, &Graph::complete(4).into(), CAPS).unwrap().opt, 2);
        assert_eq!(brute_opt(ProblemId::Vc, &Graph::new(4).into(), CAPS).unwrap().opt, 0);
        assert_eq!(brute_opt(ProblemId::Vc, &Graph::petersen().into(), CAPS).unwrap().opt, 6);
    }

    #[test]
    fn essential_examples() {
        let star = Instance::from(Graph::star(3));
        assert_eq!(brute_essential(ProblemId::Vc, &star, 2, CAPS).unwrap(), VertexSet::from([0]));
        let c5 = Instance::from(Graph::cycle(5));
        assert!(brute_essential(ProblemId::Oct, &c5, 2, CAPS).unwrap().is_empty());
        let fr = Instance::from(Graph::friendship(3));
        let r = brute_report(ProblemId::Fvs, &fr, 2, CAPS).unwrap();
        assert_eq!((r.opt, r.essential.clone(), r.ell), (1, VertexSet::from([0]), 0));
    }

    #[test]
    fn cap_is_an_error() {
        let big = Instance::from(Graph::cycle(13));
        assert_eq!(
            brute_opt(ProblemId::Fvs, &big, OracleCaps::default()),
            Err(OracleError::CapExceeded { n: 13, cap: 12 })
        );
        assert_eq!(
            brute_opt(ProblemId::Dfvs, &Graph::cycle(3).into(), CAPS),
            Err(OracleError::WrongInstanceKind)
        );
    }

    #[test]
    fn flower_examples() {
        let c5 = Instance::from(Graph::cycle(5));
        assert_eq!(brute_flower(&c5, 0, Family::OddCycles, CAPS).unwrap(), 1);
        let fr = Instance::from(Graph::friendship(3));
        assert_eq!(brute_flower(&fr, 0, Family::Cycles, CAPS).unwrap(), 3);
        assert_eq!(brute_flower(&Graph::star(4).into(), 0, Family::Cycles, CAPS).unwrap(), 0);
        let dfr = Instance::from(Digraph::friendship(2));
        assert_eq!(brute_flower(&dfr, 0, Family::DirectedCycles, CAPS).unwrap(), 2);
        assert_eq!(brute_flower_cover(&fr, 0, Family::Cycles, CAPS).unwrap(), 3);
    }

    #[test]
    fn verdicts() {
        // two disjoint optimal vertex covers of C4: {0,2} and {1,3}
        let c4 = Instance::from(Graph::cycle(4));
        let all = VertexSet::full(4);
        assert!(matches!(
            verify_detection(ProblemId::Vc, &c4, 2, &all, 2, CAPS).unwrap(),
            Verdict::FailG1 { .. }
        ));
        let fr = Instance::from(Graph::friendship(3));
        assert_eq!(
            verify_detection(ProblemId::Fvs, &fr, 1, &VertexSet::new(), 2, CAPS).unwrap(),
            Verdict::FailG2 { missing: VertexSet::from([0]) }
        );
        assert!(verify_detection(ProblemId::Fvs, &fr, 1, &VertexSet::from([0]), 2, CAPS)
            .unwrap()
            .is_pass());
        // below the optimum nothing is asserted
        assert!(verify_detection(ProblemId::Fvs, &fr, 0, &all, 2, CAPS).unwrap().is_pass());
    }
}
