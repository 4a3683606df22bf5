//! Detection of essential vertices for vertex-deletion problems.
//!
//! A vertex is *c-essential* when every solution of size at most `c` times
//! the optimum contains it. For vertex cover, feedback vertex set (undirected
//! and directed), odd cycle transversal (undirected and directed) and chordal
//! vertex deletion this crate finds, in polynomial time, a set of vertices
//! that lies inside some optimal solution and contains every c-essential
//! vertex whenever the budget equals the optimum. The [`meta`] solver
//! removes these vertices up front so exact branching only has to search
//! over the non-essential part of a solution.
//!
//! The crate is `no_std` (with `alloc`) when built without the `std` feature.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod detect;
pub mod error;
pub mod flow;
pub mod flower;
pub mod graph;
pub mod lp;
pub mod matching;
pub mod meta;
pub mod oracle;
pub mod problem;
pub mod recognize;
pub mod solver;
pub mod tpaths;

pub use detect::{detect, DetectionResult, Detector};
pub use error::{GraphError, KernelError, OracleError};
pub use graph::{Digraph, Graph, Remap, Vertex, VertexSet};
pub use meta::{meta_solve, MetaOutcome};
pub use problem::{Instance, ProblemId};
pub use solver::{exact_budgeted_solve, Solution};
