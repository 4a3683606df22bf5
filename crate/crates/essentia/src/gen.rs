//! Seeded instance generators. The same parameters and seed always give the
//! same instance.

use essentia_core::{Digraph, Graph, Instance, ProblemId};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("edge probability {0} is not in [0, 1]")]
    Probability(f64),
    #[error("petal length {len} is too short (minimum {min})")]
    PetalLength { len: usize, min: usize },
    #[error("a flower needs at least one petal")]
    NoPetals,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph; for digraphs every ordered pair is an independent trial.
pub fn gnp(n: usize, p: f64, directed: bool, seed: u64) -> Result<Instance, GenError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::Probability(p));
    }
    let mut r = rng(seed);
    Ok(if directed {
        let mut d = Digraph::new(n);
        for u in 0..n {
            for v in 0..n {
                if u != v && r.gen_bool(p) {
                    d.add_arc_lenient(u, v);
                }
            }
        }
        Instance::Directed(d)
    } else {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if r.gen_bool(p) {
                    g.add_edge_lenient(u, v);
                }
            }
        }
        Instance::Undirected(g)
    })
}

/// `q` cycles of `len` vertices sharing vertex 0 and nothing else. With
/// `len = 3` this is the friendship graph (or its directed analogue).
pub fn planted_flower(q: usize, len: usize, directed: bool) -> Result<Instance, GenError> {
    let min = if directed { 2 } else { 3 };
    if len < min {
        return Err(GenError::PetalLength { len, min });
    }
    if q == 0 {
        return Err(GenError::NoPetals);
    }
    let mut b = Builder::new(directed);
    let center = b.vertex();
    for _ in 0..q {
        b.petal(center, len);
    }
    Ok(b.finish())
}

/// Parameters for [`planted_ess`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlantedEss {
    /// Number of flower centres, each of which ends up essential.
    pub centers: usize,
    /// Number of background obstructions, each with several optimal choices.
    pub background: usize,
    /// Pendant tree vertices hung on each component.
    pub pendants: usize,
}

impl Default for PlantedEss {
    fn default() -> Self {
        PlantedEss {
            centers: 6,
            background: 2,
            pendants: 3,
        }
    }
}

/// A large optimum with few non-essential solution vertices.
///
/// Each centre gets enough disjoint petals that avoiding it costs more than
/// `c * opt`; each background obstruction costs exactly one vertex and has
/// no essential vertex. Components are disjoint, pendant trees add no
/// obstruction, and ids are shuffled. For vertex cover the petals are
/// leaves of a star and the background is a matching.
///
/// # Panics
/// For chordal vertex deletion, whose coefficient makes such instances far
/// too large to be useful.
pub fn planted_ess(problem: ProblemId, params: PlantedEss, seed: u64) -> Instance {
    assert!(problem != ProblemId::Cvd, "no planted-ess construction for cvd");
    let mut r = rng(seed);
    let directed = problem.is_directed();
    let opt = params.centers + params.background;
    let c = problem.coefficient() as usize;
    // avoiding one centre costs (opt - 1) + petals, which must exceed c * opt
    let petals = (c - 1) * opt + 2;
    let mut b = Builder::new(directed);
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for _ in 0..params.centers {
        let center = b.vertex();
        let mut members = vec![center];
        for _ in 0..petals {
            let len = petal_length(problem, &mut r);
            members.extend(b.petal(center, len));
        }
        comps.push(members);
    }
    for _ in 0..params.background {
        let first = b.vertex();
        let len = match problem {
            ProblemId::Vc => 2,
            _ => petal_length(problem, &mut r),
        };
        let mut members = vec![first];
        if len == 2 && !directed {
            let other = b.vertex();
            b.link(first, other);
            members.push(other);
        } else {
            members.extend(b.petal(first, len));
        }
        comps.push(members);
    }
    if problem != ProblemId::Vc {
        for members in &mut comps {
            for _ in 0..params.pendants {
                let anchor = *members.choose(&mut r).unwrap();
                let leaf = b.vertex();
                if r.gen_bool(0.5) {
                    b.link(anchor, leaf);
                } else {
                    b.link(leaf, anchor);
                }
                members.push(leaf);
            }
        }
    }
    b.shuffled(&mut r)
}

fn petal_length(problem: ProblemId, r: &mut ChaCha8Rng) -> usize {
    match problem {
        ProblemId::Vc => 2,
        ProblemId::Fvs => *[3, 3, 4].choose(r).unwrap(),
        ProblemId::Oct | ProblemId::Doct => *[3, 3, 5].choose(r).unwrap(),
        ProblemId::Dfvs => *[2, 3, 3].choose(r).unwrap(),
        ProblemId::Cvd => 4,
    }
}

/// Edge list under construction.
struct Builder {
    directed: bool,
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl Builder {
    fn new(directed: bool) -> Self {
        Builder {
            directed,
            n: 0,
            pairs: Vec::new(),
        }
    }

    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn link(&mut self, u: usize, v: usize) {
        self.pairs.push((u, v));
    }

    /// A cycle `center -> new_1 -> ... -> new_{len-1} -> center`; a petal of
    /// length 2 in an undirected graph is a pendant edge.
    fn petal(&mut self, center: usize, len: usize) -> Vec<usize> {
        let fresh: Vec<usize> = (1..len).map(|_| self.vertex()).collect();
        let mut prev = center;
        for &x in &fresh {
            self.link(prev, x);
            prev = x;
        }
        if len > 2 || self.directed {
            self.link(prev, center);
        }
        fresh
    }

    fn finish(self) -> Instance {
        let perm: Vec<usize> = (0..self.n).collect();
        self.build(&perm)
    }

    fn shuffled(self, r: &mut ChaCha8Rng) -> Instance {
        let mut perm: Vec<usize> = (0..self.n).collect();
        perm.shuffle(r);
        self.build(&perm)
    }

    fn build(self, perm: &[usize]) -> Instance {
        if self.directed {
            let mut d = Digraph::new(self.n);
            for (u, v) in self.pairs {
                d.add_arc_lenient(perm[u], perm[v]);
            }
            Instance::Directed(d)
        } else {
            let mut g = Graph::new(self.n);
            for (u, v) in self.pairs {
                g.add_edge_lenient(perm[u], perm[v]);
            }
            Instance::Undirected(g)
        }
    }
}
