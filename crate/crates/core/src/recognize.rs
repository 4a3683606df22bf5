//! Class recognition with certificates, plus shortest forbidden structures.
//!
//! Every recognizer answers with a [`Membership`]: either a certificate of
//! membership (coloring, topological order, elimination order) or a witness
//! vertex sequence describing a forbidden structure in cyclic order.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Digraph, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership<C> {
    Yes(C),
    /// Vertices of a forbidden cycle, listed in cycle order.
    No(Vec<Vertex>),
}

impl<C> Membership<C> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Membership::Yes(_))
    }

    pub fn witness(&self) -> Option<&[Vertex]> {
        match self {
            Membership::Yes(_) => None,
            Membership::No(w) => Some(w),
        }
    }
}

const NONE: usize = usize::MAX;

/// Walks both BFS-tree paths up to their meeting point; returns `a .. lca .. b`.
fn tree_cycle(parent: &[usize], depth: &[usize], a: Vertex, b: Vertex) -> Vec<Vertex> {
    let (mut x, mut y) = (a, b);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Proper 2-coloring (`false`/`true`), or an odd cycle.
pub fn is_bipartite(g: &Graph) -> Membership<Vec<bool>> {
    let n = g.n();
    let mut color = vec![false; n];
    let mut depth = vec![NONE; n];
    let mut parent = vec![NONE; n];
    for root in g.vertices() {
        if depth[root] != NONE {
            continue;
        }
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if depth[w] == NONE {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    color[w] = !color[u];
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return Membership::No(tree_cycle(&parent, &depth, u, w));
                }
            }
        }
    }
    Membership::Yes(color)
}

/// Forest check; the witness is a cycle.
pub fn is_acyclic_undirected(g: &Graph) -> Membership<()> {
    let n = g.n();
    let mut depth = vec![NONE; n];
    let mut parent = vec![NONE; n];
    for root in g.vertices() {
        if depth[root] != NONE {
            continue;
        }
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if depth[w] == NONE {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if w != parent[u] {
                    return Membership::No(tree_cycle(&parent, &depth, u, w));
                }
            }
        }
    }
    Membership::Yes(())
}

/// Topological order (Kahn), or a directed cycle in arc order.
pub fn is_acyclic_directed(d: &Digraph) -> Membership<Vec<Vertex>> {
    let n = d.n();
    let mut indeg: Vec<usize> = d.vertices().map(|v| d.predecessors(v).len()).collect();
    let mut queue: VecDeque<Vertex> = d.vertices().filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in d.successors(u) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    if order.len() == n {
        return Membership::Yes(order);
    }
    // Every leftover vertex keeps a leftover predecessor; walk back until a repeat.
    let mut placed = vec![false; n];
    for &v in &order {
        placed[v] = true;
    }
    let start = (0..n).find(|&v| !placed[v]).unwrap();
    let mut seen_at = vec![NONE; n];
    let mut walk = Vec::new();
    let mut cur = start;
    while seen_at[cur] == NONE {
        seen_at[cur] = walk.len();
        walk.push(cur);
        cur = *d
            .predecessors(cur)
            .iter()
            .find(|&&p| !placed[p])
            .expect("leftover vertex without leftover predecessor");
    }
    let mut cycle = walk.split_off(seen_at[cur]);
    cycle.reverse();
    Membership::No(cycle)
}

/// Lexicographic breadth-first search by partition refinement; returns the visit order.
pub fn lex_bfs(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut classes: VecDeque<Vec<Vertex>> = VecDeque::new();
    if n > 0 {
        classes.push_back(g.vertices().collect());
    }
    let mut order = Vec::with_capacity(n);
    while let Some(mut first) = classes.pop_front() {
        let v = first.remove(0);
        if !first.is_empty() {
            classes.push_front(first);
        }
        order.push(v);
        let mut refined = VecDeque::with_capacity(classes.len() * 2);
        for class in classes.drain(..) {
            let (hit, miss): (Vec<_>, Vec<_>) = class.into_iter().partition(|&w| g.has_edge(v, w));
            if !hit.is_empty() {
                refined.push_back(hit);
            }
            if !miss.is_empty() {
                refined.push_back(miss);
            }
        }
        classes = refined;
    }
    order
}

/// Perfect elimination order, or a hole (chordless cycle on at least four vertices).
pub fn is_chordal(g: &Graph) -> Membership<Vec<Vertex>> {
    let n = g.n();
    let mut peo = lex_bfs(g);
    peo.reverse();
    let mut pos = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &peo {
        let later: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if let Some(&w) = later.iter().find(|&&w| w != parent && !g.has_edge(parent, w)) {
            let hole = hole_through(g, parent, v, w)
                .or_else(|| shortest_hole(g))
                .expect("elimination order violated on a graph without holes");
            return Membership::No(hole);
        }
    }
    Membership::Yes(peo)
}

/// Shortest path from `from` to `to` using only vertices with `allowed[x]`.
/// BFS paths are induced in the allowed subgraph.
pub(crate) fn bfs_path(g: &Graph, allowed: &[bool], from: Vertex, to: Vertex) -> Option<Vec<Vertex>> {
    let n = g.n();
    let mut parent = vec![NONE; n];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(u) {
            if allowed[w] && parent[w] == NONE {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// A shortest hole containing the induced path `p - center - q`, if any.
pub fn hole_through(g: &Graph, p: Vertex, center: Vertex, q: Vertex) -> Option<Vec<Vertex>> {
    if g.has_edge(p, q) {
        return None;
    }
    let mut allowed = vec![true; g.n()];
    allowed[center] = false;
    for &x in g.neighbors(center) {
        allowed[x] = x == p || x == q;
    }
    let mut hole = bfs_path(g, &allowed, p, q)?;
    hole.push(center);
    Some(hole)
}

/// A hole of minimum length, or `None` if the graph is chordal.
pub fn shortest_hole(g: &Graph) -> Option<Vec<Vertex>> {
    let mut best: Option<Vec<Vertex>> = None;
    for center in g.vertices() {
        let nb = g.neighbors(center);
        for (i, &p) in nb.iter().enumerate() {
            for &q in &nb[i + 1..] {
                if let Some(hole) = hole_through(g, p, center, q) {
                    if best.as_ref().is_none_or(|b| hole.len() < b.len()) {
                        best = Some(hole);
                    }
                }
            }
        }
        if best.as_ref().is_some_and(|b| b.len() == 4) {
            break;
        }
    }
    best
}

/// A cycle of minimum length (girth), or `None` for forests.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.n();
    let mut best: Option<Vec<Vertex>> = None;
    let mut depth = vec![NONE; n];
    let mut parent = vec![NONE; n];
    for root in g.vertices() {
        depth.fill(NONE);
        parent.fill(NONE);
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.as_ref().is_some_and(|b| 2 * depth[u] + 1 >= b.len()) {
                break;
            }
            for &w in g.neighbors(u) {
                if depth[w] == NONE {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if w != parent[u] {
                    let len = depth[u] + depth[w] + 1;
                    if best.as_ref().is_none_or(|b| len < b.len()) {
                        let cycle = tree_cycle(&parent, &depth, u, w);
                        if cycle.len() == len {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        if best.as_ref().is_some_and(|b| b.len() == 3) {
            break;
        }
    }
    best
}

/// An odd cycle of minimum length, or `None` for bipartite graphs.
pub fn shortest_odd_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    // BFS over (vertex, parity); the shortest odd closed walk is a simple cycle.
    let n = g.n();
    let mut best: Option<Vec<Vertex>> = None;
    let mut dist = vec![NONE; 2 * n];
    let mut parent = vec![NONE; 2 * n];
    for root in g.vertices() {
        dist.fill(NONE);
        dist[2 * root] = 0;
        let target = 2 * root + 1;
        let mut queue = VecDeque::from([2 * root]);
        while let Some(state) = queue.pop_front() {
            if state == target || best.as_ref().is_some_and(|b| dist[state] + 1 >= b.len()) {
                break;
            }
            let (u, par) = (state / 2, state % 2);
            for &w in g.neighbors(u) {
                let next = 2 * w + (1 - par);
                if dist[next] == NONE {
                    dist[next] = dist[state] + 1;
                    parent[next] = state;
                    queue.push_back(next);
                }
            }
        }
        if dist[target] != NONE && best.as_ref().is_none_or(|b| dist[target] < b.len()) {
            let mut cycle = Vec::new();
            let mut cur = target;
            while cur != 2 * root {
                cycle.push(cur / 2);
                cur = parent[cur];
            }
            cycle.reverse();
            best = Some(cycle);
            if best.as_ref().is_some_and(|b| b.len() == 3) {
                break;
            }
        }
    }
    best
}

/// A directed cycle of minimum length, in arc order.
pub fn shortest_directed_cycle(d: &Digraph) -> Option<Vec<Vertex>> {
    let n = d.n();
    let mut best: Option<Vec<Vertex>> = None;
    let mut dist = vec![NONE; n];
    let mut parent = vec![NONE; n];
    for root in d.vertices() {
        dist.fill(NONE);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        let mut closing = None;
        'bfs: while let Some(u) = queue.pop_front() {
            if best.as_ref().is_some_and(|b| dist[u] + 1 >= b.len()) {
                break;
            }
            for &w in d.successors(u) {
                if w == root {
                    closing = Some(u);
                    break 'bfs;
                }
                if dist[w] == NONE {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if let Some(last) = closing {
            let mut cycle = vec![last];
            let mut cur = last;
            while cur != root {
                cur = parent[cur];
                cycle.push(cur);
            }
            cycle.reverse();
            if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                best = Some(cycle);
            }
            if best.as_ref().is_some_and(|b| b.len() == 2) {
                break;
            }
        }
    }
    best
}

/// A directed cycle of odd length with minimum length, in arc order.
pub fn shortest_odd_directed_cycle(d: &Digraph) -> Option<Vec<Vertex>> {
    // BFS in the label-extended digraph from v' to v''; a shortest odd closed
    // walk cannot repeat a vertex, so it is a simple odd cycle.
    let n = d.n();
    let mut best: Option<Vec<Vertex>> = None;
    let mut dist = vec![NONE; 2 * n];
    let mut parent = vec![NONE; 2 * n];
    for root in d.vertices() {
        dist.fill(NONE);
        dist[2 * root] = 0;
        let target = 2 * root + 1;
        let mut queue = VecDeque::from([2 * root]);
        while let Some(state) = queue.pop_front() {
            if state == target || best.as_ref().is_some_and(|b| dist[state] + 1 >= b.len()) {
                break;
            }
            let (u, par) = (state / 2, state % 2);
            for &w in d.successors(u) {
                let next = 2 * w + (1 - par);
                if dist[next] == NONE {
                    dist[next] = dist[state] + 1;
                    parent[next] = state;
                    queue.push_back(next);
                }
            }
        }
        if dist[target] != NONE && best.as_ref().is_none_or(|b| dist[target] < b.len()) {
            let mut cycle = Vec::new();
            let mut cur = target;
            while cur != 2 * root {
                cur = parent[cur];
                cycle.push(cur / 2);
            }
            cycle.reverse();
            best = Some(cycle);
            if best.as_ref().is_some_and(|b| b.len() == 3) {
                break;
            }
        }
    }
    best
}

/// `true` if `cycle` lists distinct vertices forming a cycle of `g` (length >= 3).
pub fn is_cycle(g: &Graph, cycle: &[Vertex]) -> bool {
    let k = cycle.len();
    k >= 3 && all_distinct(cycle) && (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]))
}

/// `true` if `cycle` is a cycle of `g` with no chords.
pub fn is_chordless_cycle(g: &Graph, cycle: &[Vertex]) -> bool {
    is_cycle(g, cycle) && {
        let k = cycle.len();
        (0..k).all(|i| {
            (i + 2..k).all(|j| (i == 0 && j == k - 1) || !g.has_edge(cycle[i], cycle[j]))
        })
    }
}

/// `true` if `cycle` lists distinct vertices forming a directed cycle of `d` (length >= 2).
pub fn is_directed_cycle(d: &Digraph, cycle: &[Vertex]) -> bool {
    let k = cycle.len();
    k >= 2 && all_distinct(cycle) && (0..k).all(|i| d.has_arc(cycle[i], cycle[(i + 1) % k]))
}

fn all_distinct(seq: &[Vertex]) -> bool {
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree() -> Graph {
        Graph::from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap()
    }

    #[test]
    fn bipartite_examples() {
        let Membership::Yes(color) = is_bipartite(&Graph::cycle(4)) else { panic!() };
        assert!(Graph::cycle(4).edges().all(|(u, v)| color[u] != color[v]));
        let w = is_bipartite(&Graph::cycle(5));
        assert_eq!(w.witness().map(<[_]>::len), Some(5));
        assert!(is_cycle(&Graph::cycle(5), w.witness().unwrap()));
        assert!(is_bipartite(&Graph::new(0)).is_yes());
    }

    #[test]
    fn directed_acyclicity_examples() {
        let path = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(is_acyclic_directed(&path), Membership::Yes(vec![0, 1, 2]));
        let tri = Digraph::cycle(3);
        let w = is_acyclic_directed(&tri);
        assert!(is_directed_cycle(&tri, w.witness().unwrap()));
        assert!(is_acyclic_directed(&Digraph::new(1)).is_yes());
        let two = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(is_acyclic_directed(&two).witness().map(<[_]>::len), Some(2));
    }

    #[test]
    fn undirected_acyclicity_examples() {
        assert!(is_acyclic_undirected(&tree()).is_yes());
        let w = is_acyclic_undirected(&Graph::complete(3));
        assert!(is_cycle(&Graph::complete(3), w.witness().unwrap()));
        let forest = Graph::from_edges(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        assert!(is_acyclic_undirected(&forest).is_yes());
    }

    #[test]
    fn chordal_examples() {
        let c4 = Graph::cycle(4);
        let hole = is_chordal(&c4).witness().unwrap().to_vec();
        assert_eq!(hole.len(), 4);
        assert!(is_chordless_cycle(&c4, &hole));
        assert!(is_chordal(&tree()).is_yes());

        // C5 plus chord 0-2: the only induced cycle of length >= 4 is 0-2-3-4.
        let mut g = Graph::cycle(5);
        g.add_edge(0, 2).unwrap();
        let mut hole = is_chordal(&g).witness().unwrap().to_vec();
        assert!(is_chordless_cycle(&g, &hole));
        hole.sort_unstable();
        assert_eq!(hole, [0, 2, 3, 4]);
    }

    #[test]
    fn shortest_structures() {
        assert_eq!(shortest_cycle(&Graph::petersen()).map(|c| c.len()), Some(5));
        assert_eq!(shortest_cycle(&tree()), None);
        assert_eq!(shortest_odd_cycle(&Graph::cycle(6)), None);
        let c7 = Graph::cycle(7);
        assert!(is_cycle(&c7, &shortest_odd_cycle(&c7).unwrap()));
        assert_eq!(shortest_hole(&Graph::complete(5)), None);
        assert_eq!(shortest_hole(&Graph::cycle(6)).map(|h| h.len()), Some(6));

        let two = Digraph::from_arcs(3, [(0, 1), (1, 0), (1, 2), (2, 0)]).unwrap();
        assert_eq!(shortest_directed_cycle(&two).map(|c| c.len()), Some(2));
        let odd = shortest_odd_directed_cycle(&two).unwrap();
        assert_eq!(odd.len(), 3);
        assert!(is_directed_cycle(&two, &odd));
        assert_eq!(shortest_odd_directed_cycle(&Digraph::cycle(4)), None);
    }
}
