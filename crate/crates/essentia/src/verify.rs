//! Random-corpus verification of a detector against the brute-force oracle.

use essentia_core::oracle::{brute_report, verdict_from_report, OracleCaps, Verdict};
use essentia_core::{Detector, Instance, ProblemId, VertexSet};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::format::serialize_graph;
use crate::gen::{gnp, rng};

pub const DENSITIES: [f64; 3] = [0.2, 0.4, 0.6];

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub problem: ProblemId,
    pub c: u32,
    pub max_n: usize,
    /// Instances per density.
    pub trials: usize,
    pub seed: u64,
    pub caps: OracleCaps,
    pub densities: Vec<f64>,
}

impl VerifyConfig {
    pub fn new(problem: ProblemId) -> Self {
        VerifyConfig {
            problem,
            c: problem.coefficient(),
            max_n: if problem == ProblemId::Cvd { 7 } else { 8 },
            trials: 200,
            seed: 0,
            caps: OracleCaps::default(),
            densities: DENSITIES.to_vec(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub density: f64,
    pub trial: usize,
    pub k: usize,
    pub reason: String,
    pub graph: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifySummary {
    pub instances: usize,
    pub checks: usize,
    pub passed: usize,
    /// Instances over the oracle cap.
    pub skipped: usize,
    pub failures: Vec<Failure>,
}

impl VerifySummary {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The `i`-th random instance at a density; `n` is uniform in `1..=max_n`.
pub fn corpus_instance(problem: ProblemId, max_n: usize, density: f64, seed: u64, trial: usize) -> Instance {
    let mut r = rng(seed ^ (trial as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ density.to_bits());
    let n = r.gen_range(1..=max_n.max(1));
    let directed = problem.is_directed();
    // digraphs have twice the pairs, so halve p to keep the arc density comparable
    let p = if directed { density / 2.0 } else { density };
    gnp(n, p, directed, r.gen()).expect("density in range")
}

/// Budgets `opt - 1`, `opt` and `opt + 1`, clamped at zero.
pub fn budgets_around(opt: usize) -> Vec<usize> {
    let mut ks = vec![opt.saturating_sub(1), opt, opt + 1];
    ks.dedup();
    ks
}

/// Runs `detect` on the corpus. Results are merged in corpus order.
pub fn verify_with<F>(cfg: &VerifyConfig, detect: F) -> VerifySummary
where
    F: Fn(&Instance, usize) -> VertexSet + Sync,
{
    let jobs: Vec<(f64, usize)> = cfg
        .densities
        .iter()
        .flat_map(|&d| (0..cfg.trials).map(move |t| (d, t)))
        .collect();
    let outcomes: Vec<Option<Vec<(usize, Verdict)>>> = jobs
        .par_iter()
        .map(|&(density, trial)| {
            let inst = corpus_instance(cfg.problem, cfg.max_n, density, cfg.seed, trial);
            let report = brute_report(cfg.problem, &inst, cfg.c, cfg.caps).ok()?;
            Some(
                budgets_around(report.opt)
                    .into_iter()
                    .map(|k| (k, verdict_from_report(&report, k, &detect(&inst, k))))
                    .collect(),
            )
        })
        .collect();
    let mut summary = VerifySummary::default();
    for (&(density, trial), outcome) in jobs.iter().zip(outcomes) {
        let Some(verdicts) = outcome else {
            summary.skipped += 1;
            continue;
        };
        summary.instances += 1;
        for (k, verdict) in verdicts {
            summary.checks += 1;
            if verdict.is_pass() {
                summary.passed += 1;
            } else {
                let inst = corpus_instance(cfg.problem, cfg.max_n, density, cfg.seed, trial);
                summary.failures.push(Failure {
                    density,
                    trial,
                    k,
                    reason: verdict.reason(),
                    graph: serialize_graph(&inst),
                });
            }
        }
    }
    summary
}

/// Verifies the library detector.
pub fn verify(cfg: &VerifyConfig) -> VerifySummary {
    let problem = cfg.problem;
    verify_with(cfg, |inst, k| Detector::new(problem, inst).detect(k).detected)
}
