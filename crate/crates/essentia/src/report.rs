//! JSON run reports.

use std::time::Instant;

use essentia_core::{Instance, ProblemId, VertexSet};
use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use crate::format::serialize_graph;

pub const SCHEMA: &str = "essentia/1";

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    pub command: String,
    pub problem: String,
    pub c: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// SHA-256 of the canonical serialization of the input graph.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    pub result: Value,
    /// Wall-clock milliseconds per phase, in phase order.
    pub timings: Map<String, Value>,
    pub seed: Option<u64>,
}

impl RunReport {
    pub fn new(command: &str, problem: ProblemId) -> Self {
        RunReport {
            schema: SCHEMA,
            command: command.to_owned(),
            problem: problem.name().to_owned(),
            c: problem.coefficient(),
            k: None,
            input_digest: None,
            result: Value::Null,
            timings: Map::new(),
            seed: None,
        }
    }

    /// Runs `f`, recording its wall time under `phase`.
    pub fn time<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        let ms = start.elapsed().as_secs_f64() * 1e3;
        self.timings.insert(phase.to_owned(), Value::from(ms));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn digest(instance: &Instance) -> String {
    hex::encode(Sha256::digest(serialize_graph(instance).as_bytes()))
}

/// 1-based ids, as in graph files.
pub fn one_based(set: &VertexSet) -> Vec<usize> {
    set.iter().map(|v| v + 1).collect()
}
