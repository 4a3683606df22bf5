//! Meta-solver versus plain branching on a suite of instances.
//!
//! A suite file lists one graph file per line, relative to the suite file's
//! directory; blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use essentia_core::meta::meta_solve;
use essentia_core::solver::{exact_budgeted_solve_with_stats, SolveStats};
use essentia_core::{Instance, ProblemId};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::format::{parse_graph, ParseError};

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{path}: {problem} expects {expected} graph")]
    Mismatch {
        path: PathBuf,
        problem: ProblemId,
        expected: &'static str,
    },
}

pub fn read_suite(problem: ProblemId, suite: &Path) -> Result<Vec<(String, Instance)>, SuiteError> {
    fn io(path: &Path) -> impl FnOnce(std::io::Error) -> SuiteError + '_ {
        move |source| SuiteError::Io {
            path: path.to_owned(),
            source,
        }
    }
    let text = std::fs::read_to_string(suite).map_err(io(suite))?;
    let dir = suite.parent().unwrap_or(Path::new("."));
    let mut out = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let path = dir.join(line);
        let body = std::fs::read_to_string(&path).map_err(io(&path))?;
        let inst = parse_graph(&body).map_err(|source| SuiteError::Parse {
            path: path.clone(),
            source,
        })?;
        if !inst.fits(problem) {
            return Err(SuiteError::Mismatch {
                path,
                problem,
                expected: if problem.is_directed() { "a directed" } else { "an undirected" },
            });
        }
        out.push((line.to_owned(), inst));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub opt: Option<usize>,
    pub meta_nodes: Option<u64>,
    pub meta_max_budget: Option<usize>,
    pub plain_nodes: Option<u64>,
    pub meta_ms: Option<f64>,
    pub plain_ms: Option<f64>,
    pub timed_out: bool,
}

fn with_timeout<T: Send + 'static>(timeout: Duration, f: impl FnOnce() -> T + Send + 'static) -> Option<(T, f64)> {
    let (tx, rx) = mpsc::channel();
    thread::spawn(move || {
        let start = Instant::now();
        let out = f();
        let _ = tx.send((out, start.elapsed().as_secs_f64() * 1e3));
    });
    // a timed-out worker is left to finish on its own
    rx.recv_timeout(timeout).ok()
}

/// Meta-solver first; plain branching then gets budget `opt` from its answer.
pub fn bench_instance(problem: ProblemId, name: &str, instance: &Instance, timeout: Duration) -> BenchRow {
    let mut row = BenchRow {
        name: name.to_owned(),
        n: instance.n(),
        m: instance.m(),
        opt: None,
        meta_nodes: None,
        meta_max_budget: None,
        plain_nodes: None,
        meta_ms: None,
        plain_ms: None,
        timed_out: false,
    };
    let inst = instance.clone();
    let Some((meta, ms)) = with_timeout(timeout, move || meta_solve(problem, &inst)) else {
        row.timed_out = true;
        return row;
    };
    let opt = meta.solution.len();
    row.opt = Some(opt);
    row.meta_nodes = Some(meta.nodes);
    row.meta_max_budget = Some(meta.max_budget);
    row.meta_ms = Some(ms);
    let inst = instance.clone();
    let plain = with_timeout(timeout, move || {
        let mut stats = SolveStats::default();
        let sol = exact_budgeted_solve_with_stats(problem, &inst, opt, &mut stats);
        (sol.map(|s| s.len()), stats.nodes)
    });
    match plain {
        Some(((size, nodes), ms)) => {
            debug_assert_eq!(size, Some(opt));
            row.plain_nodes = Some(nodes);
            row.plain_ms = Some(ms);
        }
        None => row.timed_out = true,
    }
    row
}

/// Rows come back in suite order.
pub fn bench_suite(problem: ProblemId, suite: &[(String, Instance)], timeout: Duration) -> Vec<BenchRow> {
    suite
        .par_iter()
        .map(|(name, inst)| bench_instance(problem, name, inst, timeout))
        .collect()
}

pub fn table(rows: &[BenchRow]) -> String {
    fn cell<T: ToString>(x: Option<T>) -> String {
        x.map_or_else(|| "-".to_owned(), |v| v.to_string())
    }
    fn ms(x: Option<f64>) -> String {
        x.map_or_else(|| "-".to_owned(), |v| format!("{v:.1}"))
    }
    let mut out = String::new();
    writeln!(
        out,
        "{:<24} {:>6} {:>6} {:>4} {:>10} {:>6} {:>12} {:>10} {:>10}",
        "instance", "n", "m", "opt", "meta_nodes", "budget", "plain_nodes", "meta_ms", "plain_ms"
    )
    .unwrap();
    for r in rows {
        writeln!(
            out,
            "{:<24} {:>6} {:>6} {:>4} {:>10} {:>6} {:>12} {:>10} {:>10}{}",
            r.name,
            r.n,
            r.m,
            cell(r.opt),
            cell(r.meta_nodes),
            cell(r.meta_max_budget),
            cell(r.plain_nodes),
            ms(r.meta_ms),
            ms(r.plain_ms),
            if r.timed_out { "  timeout" } else { "" }
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use essentia_core::Graph;

    #[test]
    fn friendship_row() {
        let inst = Instance::from(Graph::friendship(4));
        let row = bench_instance(ProblemId::Fvs, "f4", &inst, Duration::from_secs(60));
        assert_eq!(row.opt, Some(1));
        assert_eq!(row.meta_max_budget, Some(0));
        assert!(row.meta_nodes.unwrap() <= row.plain_nodes.unwrap());
        assert!(!row.timed_out);
        assert_eq!(table(&[]).lines().count(), 1);
    }
}
