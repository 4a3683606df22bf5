mod common;

use common::*;
use essentia_core::problem::{in_class, shortest_obstruction};
use essentia_core::recognize::*;
use essentia_core::{Graph, Instance, ProblemId, VertexSet};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn chordal_matches_hole_enumeration() {
    let mut r = rng(11);
    let mut chordal = 0;
    for trial in 0..500 {
        let n = r.gen_range(0..=7);
        let g = gnp(&mut r, n, DENSITIES[trial % 3]);
        let expected = brute_is_chordal(&g);
        match is_chordal(&g) {
            Membership::Yes(peo) => {
                assert!(expected, "trial {trial}: {g:?}");
                assert_eq!(peo.len(), n);
                chordal += 1;
            }
            Membership::No(hole) => {
                assert!(!expected, "trial {trial}");
                assert!(hole.len() >= 4 && is_chordless_cycle(&g, &hole), "trial {trial}: {hole:?}");
            }
        }
        let shortest = shortest_hole(&g);
        assert_eq!(shortest.is_none(), expected);
        if let Some(h) = shortest {
            let min = brute_holes(&g).iter().map(Vec::len).min().unwrap();
            assert_eq!(h.len(), min);
        }
    }
    assert!(chordal > 30 && chordal < 470, "{chordal}");
}

#[test]
fn bipartite_witness_is_an_odd_cycle() {
    let mut r = rng(12);
    for trial in 0..400 {
        let n = r.gen_range(0..=9);
        let g = gnp(&mut r, n, DENSITIES[trial % 3]);
        match is_bipartite(&g) {
            Membership::Yes(side) => assert!(g.edges().all(|(u, v)| side[u] != side[v])),
            Membership::No(cycle) => {
                assert!(is_cycle(&g, &cycle) && cycle.len() % 2 == 1, "{cycle:?}");
                let odd = shortest_odd_cycle(&g).unwrap();
                assert!(is_cycle(&g, &odd) && odd.len() % 2 == 1 && odd.len() <= cycle.len());
            }
        }
    }
}

#[test]
fn forests_and_dags() {
    let mut r = rng(13);
    for trial in 0..400 {
        let n = r.gen_range(0..=9);
        let g = gnp(&mut r, n, DENSITIES[trial % 3]);
        let comps = Instance::from(g.clone()).components().len();
        match is_acyclic_undirected(&g) {
            Membership::Yes(()) => assert!(shortest_cycle(&g).is_none() && g.m() + comps == n),
            Membership::No(c) => {
                assert!(is_cycle(&g, &c));
                assert!(shortest_cycle(&g).unwrap().len() <= c.len());
            }
        }
        let d = dnp(&mut r, n, DENSITIES[trial % 3] / 2.0);
        match is_acyclic_directed(&d) {
            Membership::Yes(order) => {
                let mut pos = vec![0; n];
                for (i, &v) in order.iter().enumerate() {
                    pos[v] = i;
                }
                assert!(d.arcs().all(|(u, w)| pos[u] < pos[w]));
                assert!(shortest_directed_cycle(&d).is_none());
            }
            Membership::No(c) => {
                assert!(is_directed_cycle(&d, &c));
                assert!(shortest_directed_cycle(&d).unwrap().len() <= c.len());
            }
        }
    }
}

#[test]
fn girth_is_exact() {
    let mut r = rng(14);
    for trial in 0..300 {
        let n = r.gen_range(3..=8);
        let g = gnp(&mut r, n, DENSITIES[trial % 3]);
        // a shortest cycle is induced, so it is a triangle or a hole
        let triangle = (0..n).any(|a| (a + 1..n).any(|b| (b + 1..n).any(|c| g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))));
        let expected = if triangle { Some(3) } else { brute_holes(&g).iter().map(Vec::len).min() };
        assert_eq!(shortest_cycle(&g).map(|c| c.len()), expected, "trial {trial}");
    }
    assert_eq!(shortest_cycle(&Graph::petersen()).unwrap().len(), 5);
}

#[test]
fn odd_directed_cycles() {
    let mut r = rng(15);
    for trial in 0..300 {
        let n = r.gen_range(1..=7);
        let d = dnp(&mut r, n, DENSITIES[trial % 3]);
        let inst = Instance::from(d.clone());
        let found = shortest_odd_directed_cycle(&d);
        assert_eq!(found.is_none(), in_class(ProblemId::Doct, &inst));
        if let Some(c) = found {
            assert!(is_directed_cycle(&d, &c) && c.len() % 2 == 1);
        }
    }
}

#[test]
fn obstructions_certify_non_membership() {
    let mut r = rng(16);
    for trial in 0..300 {
        let n = r.gen_range(0..=8);
        let p = DENSITIES[trial % 3];
        let g = Instance::from(gnp(&mut r, n, p));
        let d = Instance::from(dnp(&mut r, n, p / 2.0));
        for problem in ProblemId::ALL {
            let inst = if problem.is_directed() { &d } else { &g };
            match shortest_obstruction(problem, inst) {
                None => assert!(in_class(problem, inst)),
                Some(obs) => {
                    assert!(!in_class(problem, inst));
                    // any solution must hit the obstruction
                    let all_but: VertexSet = (0..n).filter(|v| !obs.contains(v)).collect();
                    let (rest, _) = inst.delete_vertices(&all_but).unwrap();
                    assert!(!in_class(problem, &rest), "{problem}: {obs:?}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn deletion_composes(edges in prop::collection::vec((0usize..10, 0usize..10), 0..30),
                         a in prop::collection::btree_set(0usize..10, 0..5),
                         b in prop::collection::btree_set(0usize..10, 0..5)) {
        let mut g = Graph::new(10);
        for (u, v) in edges {
            g.add_edge_lenient(u, v);
        }
        let a: VertexSet = a.into_iter().collect();
        let b: VertexSet = b.difference(&a.as_slice().iter().copied().collect()).copied().collect();
        let (ga, ra) = g.delete_vertices(&a).unwrap();
        let (gab, rb) = ga.delete_vertices(&ra.to_new(&b)).unwrap();
        let (direct, rd) = g.delete_vertices(&a.union(&b)).unwrap();
        prop_assert_eq!(&gab, &direct);
        let composed = ra.then(&rb);
        for x in 0..direct.n() {
            prop_assert_eq!(composed.old_id(x), rd.old_id(x));
        }
        prop_assert_eq!(direct.m(), g.edges().filter(|&(u, v)| !a.contains(u) && !a.contains(v) && !b.contains(u) && !b.contains(v)).count());
    }
}
