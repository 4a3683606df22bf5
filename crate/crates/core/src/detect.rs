//! Detectors for essential vertices.
//!
//! Given an instance and a budget `k`, a detector returns a set `S` such that
//!
//! * if `opt <= k`, some optimal solution contains `S`, and
//! * if `opt == k`, `S` contains every c-essential vertex,
//!
//! where `c` is [`ProblemId::coefficient`]. Every detector here compares a
//! per-vertex quantity that does not depend on `k` against a threshold in
//! `k`, so [`Detector`] computes those quantities once and answers any
//! number of budgets.

use alloc::vec::Vec;

use num_traits::One;

use crate::flow::min_vertex_separator;
use crate::flower::{flower_number, FlowerCertificate};
use crate::graph::{Digraph, Graph, Vertex, VertexSet};
use crate::lp::{rational, solve_v_avoiding_lp, Rational};
use crate::matching::{konig_cover, max_matching};
use crate::oracle::Family;
use crate::problem::{Instance, ProblemId};

/// Why a vertex was (or would be) selected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// Cycles through the vertex pairwise meeting only there.
    Flower(FlowerCertificate),
    /// Minimum separator between the two parity copies of the vertex in the
    /// label-extended digraph (copy `v'` is `2v`, `v''` is `2v + 1`), and the
    /// matching number of internally disjoint paths.
    ParitySeparator {
        separator: VertexSet,
        paths: Vec<Vec<Vertex>>,
    },
    /// Value of the vertex in the half-integral vertex cover LP optimum.
    LpValue(Rational),
    /// Optimal cost of the LP that pins this vertex to zero.
    AvoidingLpCost { cost: Rational, holes: usize },
}

impl Evidence {
    /// `true` if the evidence puts the vertex in `S` for budget `k`.
    pub fn selects(&self, k: usize) -> bool {
        match self {
            Evidence::Flower(cert) => cert.len() > k,
            Evidence::ParitySeparator { separator, .. } => separator.len() > 2 * k,
            Evidence::LpValue(x) => x.is_one(),
            Evidence::AvoidingLpCost { cost, .. } => *cost > rational(k as i64, 1),
        }
    }

    /// The integer or rational score this evidence is compared on.
    pub fn score(&self) -> Rational {
        match self {
            Evidence::Flower(cert) => rational(cert.len() as i64, 1),
            Evidence::ParitySeparator { separator, .. } => rational(separator.len() as i64, 1),
            Evidence::LpValue(x) => x.clone(),
            Evidence::AvoidingLpCost { cost, .. } => cost.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetectionResult {
    pub problem: ProblemId,
    pub k: usize,
    pub c: u32,
    pub detected: VertexSet,
    /// Evidence for each detected vertex, in vertex order.
    pub certificates: Vec<(Vertex, Evidence)>,
}

/// Per-vertex evidence for one instance, reusable across budgets.
#[derive(Clone, Debug)]
pub struct Detector {
    problem: ProblemId,
    n: usize,
    evidence: Vec<Evidence>,
}

impl Detector {
    /// # Panics
    /// If the instance kind does not fit the problem.
    pub fn new(problem: ProblemId, instance: &Instance) -> Self {
        assert!(instance.fits(problem), "{problem} does not apply to this kind of graph");
        let n = instance.n();
        let evidence = match (problem, instance) {
            (ProblemId::Vc, Instance::Undirected(g)) => vc_lp_values(g).into_iter().map(Evidence::LpValue).collect(),
            (ProblemId::Fvs, _) => flowers(instance, Family::Cycles),
            (ProblemId::Oct, _) => flowers(instance, Family::OddCycles),
            (ProblemId::Dfvs, _) => flowers(instance, Family::DirectedCycles),
            (ProblemId::Doct, Instance::Directed(d)) => parity_separators(d),
            (ProblemId::Cvd, Instance::Undirected(g)) => (0..n)
                .map(|v| {
                    let lp = solve_v_avoiding_lp(g, v);
                    Evidence::AvoidingLpCost {
                        cost: lp.cost,
                        holes: lp.pool.len(),
                    }
                })
                .collect(),
            _ => unreachable!(),
        };
        Detector { problem, n, evidence }
    }

    pub fn problem(&self) -> ProblemId {
        self.problem
    }

    pub fn evidence(&self, v: Vertex) -> &Evidence {
        &self.evidence[v]
    }

    pub fn detect(&self, k: usize) -> DetectionResult {
        let mut result = DetectionResult {
            problem: self.problem,
            k,
            c: self.problem.coefficient(),
            detected: VertexSet::new(),
            certificates: Vec::new(),
        };
        // every score is below n, so nothing clears a budget of n or more
        if k >= self.n {
            return result;
        }
        for (v, ev) in self.evidence.iter().enumerate() {
            if ev.selects(k) {
                result.detected.insert(v);
                result.certificates.push((v, ev.clone()));
            }
        }
        result
    }
}

/// One-shot detection for a single budget.
pub fn detect(problem: ProblemId, instance: &Instance, k: usize) -> DetectionResult {
    if k >= instance.n() {
        return DetectionResult {
            problem,
            k,
            c: problem.coefficient(),
            detected: VertexSet::new(),
            certificates: Vec::new(),
        };
    }
    Detector::new(problem, instance).detect(k)
}

/// Flower-based detection for feedback vertex set, its directed version and
/// odd cycle transversal: `S = { v : flower number at v > k }`.
pub fn detect_by_flower(problem: ProblemId, instance: &Instance, k: usize) -> DetectionResult {
    assert!(matches!(problem, ProblemId::Fvs | ProblemId::Dfvs | ProblemId::Oct));
    detect(problem, instance, k)
}

pub fn detect_doct(d: &Digraph, k: usize) -> DetectionResult {
    detect(ProblemId::Doct, &Instance::Directed(d.clone()), k)
}

pub fn detect_vc(g: &Graph, k: usize) -> DetectionResult {
    detect(ProblemId::Vc, &Instance::Undirected(g.clone()), k)
}

pub fn detect_cvd(g: &Graph, k: usize) -> DetectionResult {
    detect(ProblemId::Cvd, &Instance::Undirected(g.clone()), k)
}

fn flowers(instance: &Instance, family: Family) -> Vec<Evidence> {
    (0..instance.n())
        .map(|v| Evidence::Flower(flower_number(instance, v, family)))
        .collect()
}

/// Optimal half-integral vertex cover LP values from a König cover of the
/// bipartite double cover (`u - v'` and `v - u'` for each edge `uv`):
/// `x_v` is half the number of copies of `v` in the cover.
pub fn vc_lp_values(g: &Graph) -> Vec<Rational> {
    let n = g.n();
    let mut double = Graph::new(2 * n);
    for (u, v) in g.edges() {
        double.add_edge_lenient(u, n + v);
        double.add_edge_lenient(v, n + u);
    }
    let side: Vec<bool> = (0..2 * n).map(|x| x >= n).collect();
    let cover = konig_cover(&double, &side, &max_matching(&double));
    (0..n)
        .map(|v| rational(cover.contains(v) as i64 + cover.contains(n + v) as i64, 2))
        .collect()
}

/// Minimum `v' -> v''` separators in the label-extended digraph, which has
/// arcs `u' -> w''` and `u'' -> w'` for every arc `u -> w`. A `v' -> v''`
/// path there is an odd closed walk through `v`.
fn parity_separators(d: &Digraph) -> Vec<Evidence> {
    let n = d.n();
    let mut ext = Digraph::new(2 * n);
    for (u, w) in d.arcs() {
        ext.add_arc_lenient(2 * u, 2 * w + 1);
        ext.add_arc_lenient(2 * u + 1, 2 * w);
    }
    (0..n)
        .map(|v| {
            let r = min_vertex_separator(&ext, 2 * v, 2 * v + 1).expect("no loops, so no arc v' -> v''");
            Evidence::ParitySeparator {
                separator: r.separator,
                paths: r.paths.paths,
            }
        })
        .collect()
}

/// Checks a parity separator: it avoids both copies of `v`, disconnects
/// `v'` from `v''` in the label-extended digraph, and the recorded paths
/// are internally disjoint `v' -> v''` paths, as many as its size.
pub fn verify_parity_separator(d: &Digraph, v: Vertex, separator: &VertexSet, paths: &[Vec<Vertex>]) -> bool {
    let n = d.n();
    let (s, t) = (2 * v, 2 * v + 1);
    if separator.contains(s) || separator.contains(t) || paths.len() != separator.len() {
        return false;
    }
    let arc = |a: Vertex, b: Vertex| a < 2 * n && b < 2 * n && a % 2 != b % 2 && d.has_arc(a / 2, b / 2);
    let mut used = alloc::vec![false; 2 * n];
    for path in paths {
        if path.first() != Some(&s) || path.last() != Some(&t) || path.windows(2).any(|w| !arc(w[0], w[1])) {
            return false;
        }
        for &x in &path[1..path.len() - 1] {
            if core::mem::replace(&mut used[x], true) {
                return false;
            }
        }
    }
    // reachability from v' avoiding the separator
    let mut seen = alloc::vec![false; 2 * n];
    seen[s] = true;
    let mut stack = alloc::vec![s];
    while let Some(a) = stack.pop() {
        for &w in d.successors(a / 2) {
            let b = 2 * w + (1 - a % 2);
            if !seen[b] && !separator.contains(b) {
                seen[b] = true;
                stack.push(b);
            }
        }
    }
    !seen[t]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flower_detection_examples() {
        let fr = Instance::from(Graph::friendship(3));
        assert_eq!(detect(ProblemId::Fvs, &fr, 2).detected, VertexSet::from([0]));
        let c5 = Instance::from(Graph::cycle(5));
        assert!(detect(ProblemId::Oct, &c5, 1).detected.is_empty());
        let forest = Instance::from(Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap());
        for k in 0..6 {
            assert!(detect(ProblemId::Fvs, &forest, k).detected.is_empty());
        }
    }

    #[test]
    fn vc_examples() {
        assert!(detect_vc(&Graph::path(2), 1).detected.is_empty());
        let star = detect_vc(&Graph::star(3), 1);
        assert_eq!(star.detected, VertexSet::from([0]));
        assert_eq!(star.certificates, [(0, Evidence::LpValue(Rational::one()))]);
        assert!(detect_vc(&Graph::new(4), 0).detected.is_empty());
        let half = vc_lp_values(&Graph::cycle(5));
        assert!(half.iter().all(|x| *x == rational(1, 2)));
    }

    #[test]
    fn doct_examples() {
        assert!(detect_doct(&Digraph::cycle(3), 1).detected.is_empty());
        let two = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        for k in 0..3 {
            assert!(detect_doct(&two, k).detected.is_empty());
        }
        // five odd directed triangles through 0: separator 5 >= 2*2 + 1
        let planted = Digraph::friendship(5);
        let r = detect_doct(&planted, 2);
        assert_eq!(r.detected, VertexSet::from([0]));
        let Evidence::ParitySeparator { separator, paths } = &r.certificates[0].1 else { panic!() };
        assert!(verify_parity_separator(&planted, 0, separator, paths));
    }

    #[test]
    fn cvd_examples() {
        assert!(detect_cvd(&Graph::cycle(4), 1).detected.is_empty());
        assert!(detect_cvd(&Graph::complete(4), 0).detected.is_empty());
        // two C4s sharing only vertex 0: every 0-avoiding fractional cover costs 2
        let mut g = Graph::new(7);
        for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)] {
            g.add_edge(a, b).unwrap();
        }
        assert_eq!(detect_cvd(&g, 1).detected, VertexSet::from([0]));
    }

    #[test]
    fn large_budget_short_circuits() {
        let fr = Instance::from(Graph::friendship(2));
        assert!(detect(ProblemId::Fvs, &fr, 5).detected.is_empty());
    }
}
