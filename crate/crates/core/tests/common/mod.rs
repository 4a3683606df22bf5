//! Independent brute-force references and random instances for the
//! integration tests. Nothing here calls into the kernels it is used to check.
#![allow(dead_code)]

use std::collections::HashMap;

use essentia_core::{Digraph, Graph, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DENSITIES: [f64; 3] = [0.2, 0.4, 0.6];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn dnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Digraph {
    let mut d = Digraph::new(n);
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                d.add_arc(u, v).unwrap();
            }
        }
    }
    d
}

/// Random bipartite graph on `left + right` vertices; left side first.
pub fn bipartite(rng: &mut ChaCha8Rng, left: usize, right: usize, p: f64) -> Graph {
    let mut g = Graph::new(left + right);
    for u in 0..left {
        for v in left..left + right {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn mask_of(vs: impl IntoIterator<Item = Vertex>) -> u32 {
    vs.into_iter().fold(0, |m, v| m | 1 << v)
}

/// Maximum matching size by memoized recursion on the set of free vertices.
pub fn brute_matching(g: &Graph) -> usize {
    fn go(g: &Graph, mask: u32, memo: &mut HashMap<u32, usize>) -> usize {
        if mask == 0 {
            return 0;
        }
        if let Some(&r) = memo.get(&mask) {
            return r;
        }
        let u = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << u);
        let mut best = go(g, rest, memo);
        for &w in g.neighbors(u) {
            if rest >> w & 1 == 1 {
                best = best.max(1 + go(g, rest & !(1 << w), memo));
            }
        }
        memo.insert(mask, best);
        best
    }
    go(g, (1u32 << g.n()) - 1, &mut HashMap::new())
}

pub fn brute_vertex_cover(g: &Graph) -> usize {
    (0u32..1 << g.n())
        .filter(|&m| g.edges().all(|(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}

fn reaches(d: &Digraph, s: Vertex, t: Vertex, removed: u32) -> bool {
    let mut seen = 1u32 << s;
    let mut stack = vec![s];
    while let Some(u) = stack.pop() {
        if u == t {
            return true;
        }
        for &w in d.successors(u) {
            if removed >> w & 1 == 0 && seen >> w & 1 == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    false
}

/// Smallest vertex set (excluding `s`, `t`) cutting all `s -> t` paths.
pub fn brute_separator(d: &Digraph, s: Vertex, t: Vertex) -> usize {
    let terminals = (1u32 << s) | (1 << t);
    (0u32..1 << d.n())
        .filter(|&m| m & terminals == 0 && !reaches(d, s, t, m))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}

/// Vertex masks of all `T`-paths (odd ones only if `odd`), minimal under inclusion.
pub fn t_path_masks(g: &Graph, terminals: &[Vertex], odd: bool) -> Vec<u32> {
    let tmask = mask_of(terminals.iter().copied());
    let mut found = std::collections::BTreeSet::new();
    fn dfs(g: &Graph, tmask: u32, odd: bool, start: Vertex, u: Vertex, mask: u32, edges: usize, found: &mut std::collections::BTreeSet<u32>) {
        if u != start && tmask >> u & 1 == 1 && (!odd || edges % 2 == 1) {
            found.insert(mask);
        }
        for &w in g.neighbors(u) {
            if mask >> w & 1 == 0 {
                dfs(g, tmask, odd, start, w, mask | 1 << w, edges + 1, found);
            }
        }
    }
    for &t in terminals {
        dfs(g, tmask, odd, t, t, 1 << t, 0, &mut found);
    }
    let all: Vec<u32> = found.into_iter().collect();
    all.iter().copied().filter(|&m| !all.iter().any(|&o| o != m && o & m == o)).collect()
}

/// Largest number of pairwise disjoint masks.
pub fn max_disjoint(sets: &[u32], universe: u32) -> usize {
    fn go(avail: u32, sets: &[u32], memo: &mut HashMap<u32, usize>) -> usize {
        if avail == 0 {
            return 0;
        }
        if let Some(&r) = memo.get(&avail) {
            return r;
        }
        let low = avail & avail.wrapping_neg();
        let mut best = go(avail & !low, sets, memo);
        for &s in sets {
            if s & low != 0 && s & avail == s {
                best = best.max(1 + go(avail & !s, sets, memo));
            }
        }
        memo.insert(avail, best);
        best
    }
    go(universe, sets, &mut HashMap::new())
}

pub fn brute_t_packing(g: &Graph, terminals: &[Vertex], odd: bool) -> usize {
    max_disjoint(&t_path_masks(g, terminals, odd), (1u32 << g.n()) - 1)
}

/// Smallest vertex set meeting every odd `T`-path.
pub fn brute_odd_t_cover(g: &Graph, terminals: &[Vertex]) -> usize {
    let paths = t_path_masks(g, terminals, true);
    (0u32..1 << g.n())
        .filter(|&m| paths.iter().all(|&p| p & m != 0))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}

/// Vertex sets of all induced cycles on at least four vertices.
pub fn brute_holes(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut holes = Vec::new();
    for m in 0u32..1 << n {
        if m.count_ones() < 4 {
            continue;
        }
        let members: Vec<Vertex> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
        let degree_two = members
            .iter()
            .all(|&v| g.neighbors(v).iter().filter(|&&w| m >> w & 1 == 1).count() == 2);
        if !degree_two {
            continue;
        }
        // connected 2-regular induced subgraph = one chordless cycle
        let mut seen = 1u32 << members[0];
        let mut stack = vec![members[0]];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if m >> w & 1 == 1 && seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        if seen == m {
            holes.push(members);
        }
    }
    holes
}

pub fn brute_is_chordal(g: &Graph) -> bool {
    brute_holes(g).is_empty()
}
