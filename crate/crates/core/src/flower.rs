//! Flower numbers: the largest number of forbidden cycles through a vertex
//! that pairwise share only that vertex.
//!
//! Cycles through `v` correspond to `N(v)`-paths in `G - v` (feedback
//! vertex set, any parity; odd cycle transversal, odd paths) and to
//! `v_out -> v_in` paths after splitting `v` in a digraph.

use alloc::vec;
use alloc::vec::Vec;

use crate::flow::min_vertex_separator;
use crate::graph::{Digraph, Graph, Vertex, VertexSet};
use crate::oracle::Family;
use crate::problem::Instance;
use crate::recognize::{is_cycle, is_directed_cycle};
use crate::tpaths::{max_odd_t_path_packing, max_t_path_packing};

/// Petals are cycles listed in cycle order, each starting at the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowerCertificate {
    pub center: Vertex,
    pub family: Family,
    pub petals: Vec<Vec<Vertex>>,
}

impl FlowerCertificate {
    pub fn len(&self) -> usize {
        self.petals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.petals.is_empty()
    }

    /// Each petal is a family member through the center and petals meet only there.
    pub fn verify(&self, instance: &Instance) -> bool {
        let mut used = vec![false; instance.n()];
        self.petals.iter().all(|petal| {
            let shape_ok = petal.first() == Some(&self.center)
                && match (self.family, instance) {
                    (Family::Cycles, Instance::Undirected(g)) => is_cycle(g, petal),
                    (Family::OddCycles, Instance::Undirected(g)) => is_cycle(g, petal) && petal.len() % 2 == 1,
                    (Family::DirectedCycles, Instance::Directed(d)) => is_directed_cycle(d, petal),
                    _ => false,
                };
            shape_ok
                && petal[1..]
                    .iter()
                    .all(|&u| u < used.len() && !core::mem::replace(&mut used[u], true))
        })
    }
}

/// Cuts chords off a cycle through `cycle[0]` while the part through
/// `cycle[0]` stays a cycle (of odd length if `odd`). Without a parity
/// constraint the result is chordless; with it, the result is chordless
/// whenever the graph minus the center is bipartite.
pub fn shorten_cycle(g: &Graph, mut cycle: Vec<Vertex>, odd: bool) -> Vec<Vertex> {
    'outer: loop {
        let k = cycle.len();
        for i in 0..k {
            for j in i + 2..k {
                if (i == 0 && j == k - 1) || !g.has_edge(cycle[i], cycle[j]) {
                    continue;
                }
                // inner arc i..=j and outer arc j..k, 0..=i
                let inner_len = j - i + 1;
                let outer_len = k - (j - i) + 1;
                let inner_ok = i == 0 && (!odd || inner_len % 2 == 1);
                let outer_ok = !odd || outer_len % 2 == 1;
                if outer_ok {
                    cycle.drain(i + 1..j);
                    continue 'outer;
                }
                if inner_ok {
                    cycle.truncate(j + 1);
                    continue 'outer;
                }
            }
        }
        return cycle;
    }
}

/// Skips ahead along arcs `c_i -> c_j` that keep `cycle[0]` on the cycle.
pub fn shorten_directed_cycle(d: &Digraph, mut cycle: Vec<Vertex>) -> Vec<Vertex> {
    'outer: loop {
        let k = cycle.len();
        for i in 0..k {
            for j in (i + 2..k).chain(core::iter::once(0).filter(|_| i + 1 < k && i > 0)) {
                if !d.has_arc(cycle[i], cycle[j]) {
                    continue;
                }
                if j == 0 {
                    cycle.truncate(i + 1);
                } else {
                    cycle.drain(i + 1..j);
                }
                continue 'outer;
            }
        }
        return cycle;
    }
}

fn neighbors_without(g: &Graph, v: Vertex) -> (Graph, Vec<Vertex>, VertexSet) {
    let (rest, remap) = g.delete_vertices(&VertexSet::singleton(v)).expect("vertex in range");
    let ids: Vec<Vertex> = (0..rest.n()).map(|x| remap.old_id(x)).collect();
    let terminals: VertexSet = g.neighbors(v).iter().filter_map(|&u| remap.new_id(u)).collect();
    (rest, ids, terminals)
}

/// Cycle flower number at `v` in an undirected graph, with petals.
pub fn flower_number_fvs(g: &Graph, v: Vertex) -> FlowerCertificate {
    let (rest, ids, terminals) = neighbors_without(g, v);
    let packing = max_t_path_packing(&rest, &terminals);
    let petals = packing
        .paths
        .into_iter()
        .map(|path| {
            let mut cycle = vec![v];
            cycle.extend(path.into_iter().map(|x| ids[x]));
            shorten_cycle(g, cycle, false)
        })
        .collect();
    FlowerCertificate {
        center: v,
        family: Family::Cycles,
        petals,
    }
}

/// Odd-cycle flower number at `v`, with petals.
pub fn flower_number_oct(g: &Graph, v: Vertex) -> FlowerCertificate {
    let (rest, ids, terminals) = neighbors_without(g, v);
    let packing = max_odd_t_path_packing(&rest, &terminals);
    let petals = packing
        .paths
        .into_iter()
        .map(|path| {
            let mut cycle = vec![v];
            cycle.extend(path.into_iter().map(|x| ids[x]));
            shorten_cycle(g, cycle, true)
        })
        .collect();
    FlowerCertificate {
        center: v,
        family: Family::OddCycles,
        petals,
    }
}

/// Directed-cycle flower number at `v`, with petals.
///
/// `v` keeps its outgoing arcs; a new vertex `v_in` takes over the incoming
/// ones, and the petals are internally disjoint `v -> v_in` paths.
pub fn flower_number_dfvs(d: &Digraph, v: Vertex) -> FlowerCertificate {
    let n = d.n();
    let v_in = n;
    let mut split = Digraph::new(n + 1);
    for (a, b) in d.arcs() {
        if b == v {
            split.add_arc_lenient(a, v_in);
        } else {
            split.add_arc_lenient(a, b);
        }
    }
    let result = min_vertex_separator(&split, v, v_in).expect("no arc from v to its own copy");
    let petals = result
        .paths
        .paths
        .into_iter()
        .map(|mut path| {
            path.pop();
            shorten_directed_cycle(d, path)
        })
        .collect();
    FlowerCertificate {
        center: v,
        family: Family::DirectedCycles,
        petals,
    }
}

/// Flower number for whichever family fits the instance.
pub fn flower_number(instance: &Instance, v: Vertex, family: Family) -> FlowerCertificate {
    match (family, instance) {
        (Family::Cycles, Instance::Undirected(g)) => flower_number_fvs(g, v),
        (Family::OddCycles, Instance::Undirected(g)) => flower_number_oct(g, v),
        (Family::DirectedCycles, Instance::Directed(d)) => flower_number_dfvs(d, v),
        _ => panic!("flower family does not fit the instance kind"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognize::is_chordless_cycle;

    #[test]
    fn fvs_examples() {
        let fr = Graph::friendship(4);
        let cert = flower_number_fvs(&fr, 0);
        assert_eq!(cert.len(), 4);
        assert!(cert.verify(&fr.clone().into()));
        let tree = Graph::path(5);
        assert_eq!(flower_number_fvs(&tree, 2).len(), 0);
        for v in 0..5 {
            assert_eq!(flower_number_fvs(&Graph::cycle(5), v).len(), 1);
        }
    }

    #[test]
    fn oct_examples() {
        for v in 0..5 {
            assert_eq!(flower_number_oct(&Graph::cycle(5), v).len(), 1);
        }
        let k4 = Graph::complete(4);
        assert_eq!(flower_number_oct(&k4, 0).len(), 1);
        let bowtie = Graph::friendship(2);
        let cert = flower_number_oct(&bowtie, 0);
        assert_eq!(cert.len(), 2);
        assert!(cert.verify(&bowtie.into()));
    }

    #[test]
    fn dfvs_examples() {
        let dfr = Digraph::friendship(3);
        let cert = flower_number_dfvs(&dfr, 0);
        assert_eq!(cert.len(), 3);
        assert!(cert.verify(&dfr.into()));
        let dag = Digraph::from_arcs(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(flower_number_dfvs(&dag, 0).len(), 0);
        for v in 0..3 {
            assert_eq!(flower_number_dfvs(&Digraph::cycle(3), v).len(), 1);
        }
    }

    #[test]
    fn petals_are_chordless() {
        // wheel: hub 0 with rim 1..=6; every cycle through a rim vertex
        // found by the kernel must be cut down to a triangle or C4
        let mut g = Graph::new(7);
        for i in 1..=6 {
            g.add_edge(0, i).unwrap();
            g.add_edge(i, i % 6 + 1).unwrap();
        }
        for v in 0..7 {
            for petal in flower_number_fvs(&g, v).petals {
                assert!(is_chordless_cycle(&g, &petal));
            }
        }
    }

    #[test]
    fn shortening_keeps_parity() {
        // C5 0-1-2-3-4 with chord 2-4: no shorter odd cycle through 0
        let mut g = Graph::cycle(5);
        g.add_edge(2, 4).unwrap();
        assert_eq!(shorten_cycle(&g, vec![0, 1, 2, 3, 4], true), [0, 1, 2, 3, 4]);
        assert_eq!(shorten_cycle(&g, vec![0, 1, 2, 3, 4], false), [0, 1, 2, 4]);
    }
}
