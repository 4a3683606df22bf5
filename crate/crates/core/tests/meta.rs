mod common;

use common::*;
use essentia_core::oracle::{brute_opt, brute_report, search_report, OracleCaps};
use essentia_core::solver::{exact_budgeted_solve_with_stats, SolveStats};
use essentia_core::{exact_budgeted_solve, meta_solve, Instance, ProblemId};
use rand::Rng;

fn random_instance(r: &mut rand_chacha::ChaCha8Rng, problem: ProblemId, n: usize, p: f64) -> Instance {
    if problem.is_directed() {
        Instance::from(dnp(r, n, p / 2.0))
    } else {
        Instance::from(gnp(r, n, p))
    }
}

#[test]
fn meta_solver_is_exact() {
    let mut r = rng(41);
    for problem in ProblemId::ALL {
        let max_n = if problem == ProblemId::Cvd { 7 } else { 9 };
        for trial in 0..100 {
            let n = r.gen_range(0..=max_n);
            let inst = random_instance(&mut r, problem, n, DENSITIES[trial % 3]);
            let opt = brute_opt(problem, &inst, OracleCaps::default()).unwrap().opt;
            let out = meta_solve(problem, &inst);
            assert!(out.solution.verify(&inst), "{problem} trial {trial}");
            assert_eq!(out.solution.len(), opt, "{problem} trial {trial}");
            assert!(out.max_budget <= opt);
            let steps: Vec<_> = out.trace.iter().map(|s| s.budget).collect();
            assert!(steps.windows(2).all(|w| w[0] <= w[1]));
            assert_eq!(out.trace.iter().filter(|s| s.accepted).count(), 1);
            assert!(out.trace.last().unwrap().accepted);
        }
    }
}

#[test]
fn meta_budget_stays_below_non_essentiality() {
    let mut r = rng(42);
    for problem in ProblemId::ALL {
        let max_n = if problem == ProblemId::Cvd { 7 } else { 8 };
        for trial in 0..80 {
            let n = r.gen_range(1..=max_n);
            let inst = random_instance(&mut r, problem, n, DENSITIES[trial % 3]);
            let report = brute_report(problem, &inst, problem.coefficient(), OracleCaps::default()).unwrap();
            let out = meta_solve(problem, &inst);
            assert!(out.max_budget <= report.ell, "{problem} trial {trial}: {} > {}", out.max_budget, report.ell);
        }
    }
}

#[test]
fn budgeted_solver_answers_exactly_when_possible() {
    let mut r = rng(43);
    for problem in ProblemId::ALL {
        for trial in 0..60 {
            let n = r.gen_range(0..=8);
            let inst = random_instance(&mut r, problem, n, DENSITIES[trial % 3]);
            let opt = brute_opt(problem, &inst, OracleCaps::default()).unwrap().opt;
            for b in 0..=n {
                let mut stats = SolveStats::default();
                let got = exact_budgeted_solve_with_stats(problem, &inst, b, &mut stats);
                assert_eq!(got.is_some(), opt <= b, "{problem} trial {trial} b={b}");
                if let Some(s) = got {
                    assert!(s.verify(&inst));
                    assert_eq!(s.len(), opt);
                }
                assert_eq!(stats.max_budget, Some(b));
            }
            assert!(exact_budgeted_solve(problem, &inst, n).is_some());
        }
    }
}

#[test]
fn search_oracle_agrees_with_enumeration() {
    let mut r = rng(44);
    for problem in ProblemId::ALL {
        let max_n = if problem == ProblemId::Cvd { 7 } else { 9 };
        for trial in 0..60 {
            let n = r.gen_range(0..=max_n);
            let inst = random_instance(&mut r, problem, n, DENSITIES[trial % 3] / 1.5);
            let c = problem.coefficient();
            let brute = brute_report(problem, &inst, c, OracleCaps::default()).unwrap();
            let search = search_report(problem, &inst, c).unwrap();
            assert_eq!(search.opt, brute.opt, "{problem} trial {trial}");
            assert_eq!(search.essential, brute.essential, "{problem} trial {trial}");
            assert_eq!(search.ell, brute.ell);
            assert!(brute.optimal_solutions.contains(&search.optimal_solutions[0]));
        }
    }
}
