use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use essentia_core::detect::Evidence;
use essentia_core::lp::solve_v_avoiding_lp;
use essentia_core::oracle::OracleCaps;
use essentia_core::{meta_solve, Detector, Instance, ProblemId, Vertex};
use serde_json::{json, Value};

use essentia::bench::{bench_suite, read_suite, table};
use essentia::format::{parse_graph, serialize_graph};
use essentia::gen::{gnp, planted_ess, planted_flower, PlantedEss};
use essentia::report::{digest, one_based, RunReport};
use essentia::verify::{verify, VerifyConfig};

#[derive(Parser)]
#[command(name = "essentia", version, about = "Essential-vertex detection for vertex-deletion problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a set of vertices that belongs to some optimal solution and
    /// contains every essential vertex when K equals the optimum.
    Detect {
        #[arg(long, value_parser = parse_problem)]
        problem: ProblemId,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
        /// cvd only: write each vertex's final hole pool to FILE.
        #[arg(long, value_name = "FILE")]
        dump_lp: Option<PathBuf>,
    },
    /// Find a minimum solution.
    Solve {
        #[arg(long, value_parser = parse_problem)]
        problem: ProblemId,
        #[arg(long)]
        input: PathBuf,
        /// Emit the budget schedule and per-call solver statistics as JSON lines.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check the detector against brute force on random graphs.
    Verify {
        #[arg(long, value_parser = parse_problem)]
        problem: ProblemId,
        /// Essentiality coefficient; defaults to the problem's own.
        #[arg(long)]
        c: Option<u32>,
        #[arg(long)]
        max_n: Option<usize>,
        /// Instances per density.
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest instance the oracle enumerates.
        #[arg(long, default_value_t = OracleCaps::default().essential)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Write a generated graph.
    Gen {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        directed: bool,
        /// planted-flower: number of petals.
        #[arg(long, default_value_t = 3)]
        q: usize,
        /// planted-flower: vertices per petal, centre included.
        #[arg(long, default_value_t = 3)]
        len: usize,
        /// planted-ess: target problem.
        #[arg(long, value_parser = parse_problem)]
        problem: Option<ProblemId>,
        /// planted-ess: number of essential flower centres.
        #[arg(long, default_value_t = PlantedEss::default().centers)]
        centers: usize,
        /// planted-ess: number of background obstructions.
        #[arg(long, default_value_t = PlantedEss::default().background)]
        background: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare node counts of the meta-solver and plain branching.
    Bench {
        #[arg(long, value_parser = parse_problem)]
        problem: ProblemId,
        #[arg(long)]
        suite: PathBuf,
        /// Seconds per instance and solver.
        #[arg(long, default_value_t = 60)]
        timeout: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Gnp,
    PlantedFlower,
    PlantedEss,
}

fn parse_problem(s: &str) -> Result<ProblemId, String> {
    s.parse().map_err(|e: essentia_core::problem::UnknownProblem| e.to_string())
}

enum Failure {
    Verification,
    Usage(String),
    Input(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Detect {
            problem,
            k,
            input,
            json,
            dump_lp,
        } => cmd_detect(problem, k, &input, json, dump_lp.as_deref()),
        Command::Solve {
            problem,
            input,
            trace,
            json,
        } => cmd_solve(problem, &input, trace, json),
        Command::Verify {
            problem,
            c,
            max_n,
            trials,
            seed,
            cap,
            json,
        } => {
            let mut cfg = VerifyConfig::new(problem);
            cfg.c = c.unwrap_or(cfg.c);
            cfg.max_n = max_n.unwrap_or(cfg.max_n);
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.caps.essential = cap;
            cmd_verify(&cfg, json)
        }
        Command::Gen {
            model,
            n,
            p,
            seed,
            directed,
            q,
            len,
            problem,
            centers,
            background,
            out,
        } => {
            let made = match model {
                Model::Gnp => gnp(n, p, directed, seed).map_err(|e| e.to_string()),
                Model::PlantedFlower => planted_flower(q, len, directed).map_err(|e| e.to_string()),
                Model::PlantedEss => match problem {
                    None => Err("planted-ess needs --problem".to_owned()),
                    Some(ProblemId::Cvd) => Err("planted-ess does not support cvd".to_owned()),
                    Some(pr) => {
                        let params = PlantedEss {
                            centers,
                            background,
                            ..PlantedEss::default()
                        };
                        Ok(planted_ess(pr, params, seed))
                    }
                },
            };
            match made {
                Ok(inst) => write_output(out.as_deref(), &serialize_graph(&inst)),
                Err(e) => Err(Failure::Usage(e)),
            }
        }
        Command::Bench {
            problem,
            suite,
            timeout,
            json,
        } => cmd_bench(problem, &suite, Duration::from_secs(timeout), json),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(problem: ProblemId, path: &Path) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let inst = parse_graph(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    if !inst.fits(problem) {
        let want = if problem.is_directed() { "directed" } else { "undirected" };
        return Err(Failure::Input(format!("{problem}: expected {want} graph")));
    }
    Ok(inst)
}

fn ids(vs: &[Vertex]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

fn evidence_json(v: Vertex, ev: &Evidence) -> Value {
    match ev {
        Evidence::Flower(cert) => json!({
            "vertex": v + 1,
            "kind": "flower",
            "petals": cert.petals.iter().map(|p| ids(p)).collect::<Vec<_>>(),
        }),
        Evidence::ParitySeparator { separator, paths } => {
            // copy 2u is u at even parity, 2u + 1 at odd parity
            let copy = |x: &Vertex| json!([x / 2 + 1, x % 2]);
            json!({
                "vertex": v + 1,
                "kind": "parity-separator",
                "separator": separator.iter().map(|x| copy(&x)).collect::<Vec<_>>(),
                "paths": paths.iter().map(|p| p.iter().map(copy).collect::<Vec<_>>()).collect::<Vec<_>>(),
            })
        }
        Evidence::LpValue(x) => json!({ "vertex": v + 1, "kind": "lp-value", "value": x.to_string() }),
        Evidence::AvoidingLpCost { cost, holes } => json!({
            "vertex": v + 1,
            "kind": "avoiding-lp",
            "cost": cost.to_string(),
            "holes": holes,
        }),
    }
}

fn dump_lp(path: &Path, inst: &Instance) -> Result<(), Failure> {
    let Instance::Undirected(g) = inst else {
        unreachable!("cvd instances are undirected")
    };
    let mut text = String::new();
    for v in g.vertices() {
        let lp = solve_v_avoiding_lp(g, v);
        text.push_str(&format!("c pinned {} cost {}\n", v + 1, lp.cost));
        for hole in &lp.pool {
            let members: Vec<String> = hole.iter().map(|u| (u + 1).to_string()).collect();
            text.push_str(&format!("hole {} >= 1\n", members.join(" ")));
        }
    }
    write_output(Some(path), &text)
}

fn cmd_detect(problem: ProblemId, k: usize, input: &Path, json: bool, dump: Option<&Path>) -> Result<(), Failure> {
    if dump.is_some() && problem != ProblemId::Cvd {
        return Err(Failure::Usage("--dump-lp applies to cvd only".to_owned()));
    }
    let inst = load(problem, input)?;
    let mut report = RunReport::new("detect", problem);
    report.k = Some(k);
    report.input_digest = Some(digest(&inst));
    let result = report.time("detect", || {
        if k >= inst.n() {
            essentia_core::detect(problem, &inst, k)
        } else {
            Detector::new(problem, &inst).detect(k)
        }
    });
    let certs: Vec<Value> = result.certificates.iter().map(|(v, ev)| evidence_json(*v, ev)).collect();
    report.result = json!({ "detected": one_based(&result.detected), "certificates": certs });
    if let Some(path) = dump {
        report.time("dump_lp", || dump_lp(path, &inst))?;
    }
    if json {
        println!("{}", report.to_json());
    } else {
        println!("problem {problem}  c = {}  k = {k}", problem.coefficient());
        println!("S = {:?}", one_based(&result.detected));
        for cert in &certs {
            println!("certificate {cert}");
        }
    }
    Ok(())
}

fn cmd_solve(problem: ProblemId, input: &Path, trace: bool, json: bool) -> Result<(), Failure> {
    let inst = load(problem, input)?;
    let mut report = RunReport::new("solve", problem);
    report.input_digest = Some(digest(&inst));
    let out = report.time("solve", || meta_solve(problem, &inst));
    if trace {
        for step in &out.trace {
            let line = json!({
                "k": step.k,
                "detected": step.detected,
                "budget": step.budget,
                "nodes": step.nodes,
                "found": step.found,
                "accepted": step.accepted,
            });
            println!("{line}");
        }
        let schedule: Vec<Value> = out.schedule.iter().map(|(k, b)| json!({ "k": k, "budget": b })).collect();
        println!("{}", json!({ "schedule": schedule, "max_budget": out.max_budget, "nodes": out.nodes }));
    }
    report.result = json!({
        "size": out.solution.len(),
        "solution": one_based(&out.solution.vertices),
        "max_budget": out.max_budget,
        "nodes": out.nodes,
    });
    if json {
        println!("{}", report.to_json());
    } else if !trace {
        println!("size {}", out.solution.len());
        println!("solution {:?}", one_based(&out.solution.vertices));
        println!("max_budget {}", out.max_budget);
        println!("nodes {}", out.nodes);
    }
    Ok(())
}

fn cmd_verify(cfg: &VerifyConfig, json: bool) -> Result<(), Failure> {
    let mut report = RunReport::new("verify", cfg.problem);
    report.c = cfg.c;
    report.seed = Some(cfg.seed);
    let summary = report.time("verify", || verify(cfg));
    if summary.instances == 0 {
        eprintln!("warning: no instances were checked");
    }
    if summary.skipped > 0 {
        eprintln!("warning: {} instances exceeded the oracle cap and were skipped", summary.skipped);
    }
    report.result = serde_json::to_value(&summary).expect("summary serializes");
    if json {
        println!("{}", report.to_json());
    } else {
        println!(
            "{}: {} instances, {} checks, {} passed, {} failed, {} skipped",
            cfg.problem,
            summary.instances,
            summary.checks,
            summary.passed,
            summary.failures.len(),
            summary.skipped
        );
        for f in &summary.failures {
            println!("FAIL density {} trial {} k {}: {}", f.density, f.trial, f.k, f.reason);
            print!("{}", f.graph);
        }
    }
    if summary.ok() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_bench(problem: ProblemId, suite: &Path, timeout: Duration, json: bool) -> Result<(), Failure> {
    let instances = read_suite(problem, suite).map_err(|e| Failure::Input(e.to_string()))?;
    let mut report = RunReport::new("bench", problem);
    let rows = report.time("bench", || bench_suite(problem, &instances, timeout));
    let compared = rows.iter().filter(|r| r.plain_nodes.is_some()).count();
    let fewer = rows
        .iter()
        .filter(|r| matches!((r.meta_nodes, r.plain_nodes), (Some(a), Some(b)) if a <= b))
        .count();
    report.result = json!({ "rows": rows, "compared": compared, "meta_not_worse": fewer });
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", table(&rows));
        println!("meta nodes <= plain nodes on {fewer} of {compared} instances");
    }
    Ok(())
}

