//! The vertex-avoiding chordal deletion LP, solved exactly by lazy
//! constraint generation.
//!
//! For a pinned vertex `v` the LP is
//!
//! ```text
//! minimize   sum_u x_u
//! subject to sum_{u in H} x_u >= 1   for every hole H
//!            x_u >= 0,  x_v = 0
//! ```
//!
//! Upper bounds `x_u <= 1` never bind at an optimum, so they are left out.
//! Each round solves the LP restricted to a pool of holes through its dual,
//! a packing LP whose all-slack basis is feasible, with a rational simplex
//! under Bland's rule. The separation oracle then either certifies every
//! hole constraint or returns a violated hole for the pool.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::graph::{Graph, Vertex};
use crate::recognize::bfs_path;

pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Optimum of `max sum y` subject to `A y <= 1`, `y >= 0` for a 0/1 matrix,
/// together with optimal dual prices of the rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingOptimum {
    pub value: Rational,
    /// One entry per column.
    pub primal: Vec<Rational>,
    /// One entry per row; these price the covering LP `min sum x, A^T x >= 1`.
    pub dual: Vec<Rational>,
    pub pivots: usize,
}

/// Solves `max 1^T y, A y <= 1, y >= 0` exactly; `columns[j]` lists the
/// rows where column `j` has a one.
pub fn solve_packing_lp(rows: usize, columns: &[Vec<usize>]) -> PackingOptimum {
    let cols = columns.len();
    let width = cols + rows + 1;
    let rhs = width - 1;
    let mut tab: Vec<Vec<Rational>> = vec![vec![Rational::zero(); width]; rows + 1];
    for (j, col) in columns.iter().enumerate() {
        for &i in col {
            tab[i][j] = Rational::one();
        }
        tab[rows][j] = -Rational::one();
    }
    for i in 0..rows {
        tab[i][cols + i] = Rational::one();
        tab[i][rhs] = Rational::one();
    }
    let mut basis: Vec<usize> = (cols..cols + rows).collect();
    let mut pivots = 0;
    // Bland: lowest entering index with negative reduced cost, lowest basic
    // index among tied ratios.
    while let Some(enter) = (0..cols + rows).find(|&j| tab[rows][j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..rows {
            if !tab[i][enter].is_positive() {
                continue;
            }
            let ratio = &tab[i][rhs] / &tab[i][enter];
            let better = match &leave {
                None => true,
                Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let (row, _) = leave.expect("packing LP is bounded");
        let pivot = tab[row][enter].clone();
        for x in tab[row].iter_mut() {
            *x /= &pivot;
        }
        let pivot_row = tab[row].clone();
        for (i, line) in tab.iter_mut().enumerate() {
            if i == row || line[enter].is_zero() {
                continue;
            }
            let factor = line[enter].clone();
            for (x, p) in line.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        basis[row] = enter;
        pivots += 1;
    }
    let mut primal = vec![Rational::zero(); cols];
    for (i, &b) in basis.iter().enumerate() {
        if b < cols {
            primal[b] = tab[i][rhs].clone();
        }
    }
    let dual = (0..rows).map(|i| tab[rows][cols + i].clone()).collect();
    PackingOptimum {
        value: tab[rows][rhs].clone(),
        primal,
        dual,
        pivots,
    }
}

/// Outcome of one separation round.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Separation {
    Feasible,
    /// A hole whose weight is below one, in cycle order.
    Violated(Vec<Vertex>),
}

/// Looks for a hole of weight below one under vertex weights `x`.
///
/// For each `u` and non-adjacent `p, q` in `N(u)` a vertex-weighted
/// shortest `p`-`q` path is computed in `G - (N[u] \ {p, q})`, with both
/// endpoint weights counted. The path is then replaced by a hop-shortest
/// path inside its own vertex set, which is induced and no heavier, so
/// closing it through `u` gives a hole.
pub fn separation_oracle_holes(g: &Graph, x: &[Rational]) -> Separation {
    let one = Rational::one();
    for u in g.vertices() {
        let nb = g.neighbors(u);
        for (i, &p) in nb.iter().enumerate() {
            for &q in &nb[i + 1..] {
                if g.has_edge(p, q) {
                    continue;
                }
                let mut allowed = vec![true; g.n()];
                allowed[u] = false;
                for &w in nb {
                    allowed[w] = w == p || w == q;
                }
                let Some((weight, path)) = lightest_path(g, x, &allowed, p, q) else {
                    continue;
                };
                if weight + &x[u] < one {
                    let mut keep = vec![false; g.n()];
                    for &w in &path {
                        keep[w] = true;
                    }
                    let mut hole = bfs_path(g, &keep, p, q).expect("path vertices stay connected");
                    hole.insert(0, u);
                    return Separation::Violated(hole);
                }
            }
        }
    }
    Separation::Feasible
}

/// Dijkstra with weights on vertices: a path weighs the sum over all its
/// vertices, endpoints included.
fn lightest_path(g: &Graph, x: &[Rational], allowed: &[bool], from: Vertex, to: Vertex) -> Option<(Rational, Vec<Vertex>)> {
    let n = g.n();
    let mut dist: Vec<Option<Rational>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[from] = Some(x[from].clone());
    heap.push(Reverse((x[from].clone(), from)));
    while let Some(Reverse((d, a))) = heap.pop() {
        if done[a] {
            continue;
        }
        done[a] = true;
        if a == to {
            break;
        }
        for &b in g.neighbors(a) {
            if !allowed[b] || done[b] {
                continue;
            }
            let cand = &d + &x[b];
            if dist[b].as_ref().is_none_or(|cur| cand < *cur) {
                dist[b] = Some(cand.clone());
                parent[b] = a;
                heap.push(Reverse((cand, b)));
            }
        }
    }
    let weight = dist[to].clone()?;
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    Some((weight, path))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvoidingLp {
    pub pinned: Vertex,
    pub cost: Rational,
    /// `x_u` for every vertex; `x_pinned` is zero.
    pub assignment: Vec<Rational>,
    /// Holes generated so far, in generation order.
    pub pool: Vec<Vec<Vertex>>,
    /// Optimal dual multipliers of the pooled holes.
    pub hole_multipliers: Vec<Rational>,
    /// LP solves performed; one more than the number of cuts added.
    pub rounds: usize,
}

/// Solves the LP restricted to `pool` with `x_pinned = 0`.
pub fn solve_pooled_lp(n: usize, pinned: Vertex, pool: &[Vec<Vertex>]) -> (Rational, Vec<Rational>, Vec<Rational>) {
    // rows are the unpinned vertices; column j is hole j minus the pinned vertex
    let row_of = |u: Vertex| if u < pinned { u } else { u - 1 };
    let columns: Vec<Vec<usize>> = pool
        .iter()
        .map(|hole| hole.iter().filter(|&&u| u != pinned).map(|&u| row_of(u)).collect())
        .collect();
    let opt = solve_packing_lp(n - 1, &columns);
    let mut x = vec![Rational::zero(); n];
    for u in (0..n).filter(|&u| u != pinned) {
        x[u] = opt.dual[row_of(u)].clone();
    }
    (opt.value, x, opt.primal)
}

/// Cutting-plane loop: start from `x = 0` with no hole constraints, add
/// violated holes until the separation oracle certifies feasibility.
/// Every cut is new because the current point satisfies the pool.
pub fn solve_v_avoiding_lp(g: &Graph, v: Vertex) -> AvoidingLp {
    assert!(v < g.n(), "vertex out of range");
    let n = g.n();
    let mut pool: Vec<Vec<Vertex>> = Vec::new();
    let mut cost = Rational::zero();
    let mut x = vec![Rational::zero(); n];
    let mut multipliers = Vec::new();
    let mut rounds = 1;
    while let Separation::Violated(hole) = separation_oracle_holes(g, &x) {
        debug_assert!(!pool.contains(&hole));
        pool.push(hole);
        (cost, x, multipliers) = solve_pooled_lp(n, v, &pool);
        rounds += 1;
    }
    AvoidingLp {
        pinned: v,
        cost,
        assignment: x,
        pool,
        hole_multipliers: multipliers,
        rounds,
    }
}
