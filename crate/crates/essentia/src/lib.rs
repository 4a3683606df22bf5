//! File formats, instance generators, corpus verification and benchmarking
//! around [`essentia_core`].

pub mod bench;
pub mod format;
pub mod gen;
pub mod report;
pub mod verify;

pub use format::{parse_graph, serialize_graph, ParseError};
