//! Command-line front end. [`run`] parses arguments, dispatches, and returns
//! the exit code with the JSON document to print.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification failure,
//! 3 theorem violation or counterexample.

use crate::altitude::{
    altitude_via_complement, canonical_ordering_count, circular_altitude_bounds,
    circular_altitude_exact, AltitudeResult, BoundsOptions, MycielskiHint, DEFAULT_BUDGET,
    EXHAUSTIVE_MAX_VERTICES,
};
use crate::certificate::{self, Certificate, Kind};
use crate::circular_colouring::{
    circular_chromatic_number, find_pq_colouring, verify_zigzag, zigzag_witness,
};
use crate::error::Error;
use crate::graph_core::{
    chromatic_number, components, emit_graph6, girth, max_clique, odd_girth, Graph,
};
use crate::mycielski::iterated_mycielskian;
use crate::named::{self, mycielski_parts};
use crate::powerful::{
    build_powerful_ordering, lemma_report, oddgirth_certificate, verify_powerful,
};
use crate::search::{anneal_min_max_cycle, AnnealConfig};
use crate::theorems::{run_suite, SuiteOptions};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "circalt",
    version,
    about = "Circular altitude and related graph invariants"
)]
struct Cli {
    /// Worker threads for parallel searches.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GraphArg {
    /// Built-in name (K6, C7, W5, K3,3, Petersen, Grotzsch, M2C7, ...),
    /// a graph6 string, or a file whose first line is either.
    graph: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Every invariant of one graph, or of each line of a graph6 file.
    Invariants {
        #[command(flatten)]
        g: GraphArg,
        /// Skip the circular altitude when (n-1)!/2 exceeds this.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Iterated Mycielskian as graph6 with its vertex labels.
    Myc {
        #[arg(long)]
        base: String,
        #[arg(long)]
        r: usize,
        /// Also write the graph6 line to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the index-to-label JSON array to this file.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// Circular altitude, exactly or as a bracket.
    Altitude {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long, conflicts_with = "bounds")]
        exact: bool,
        #[arg(long)]
        bounds: bool,
        /// Largest number of canonical orderings to enumerate.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Enables the annealing upper bound in bounds mode.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 100_000, requires = "seed")]
        steps: u64,
        #[arg(long, default_value_t = 2, requires = "seed")]
        restarts: usize,
        /// Write the certificate to this file.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Exact circular chromatic number.
    ChiC {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Searches for a (p,q)-colouring.
    PqColour {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Powerful ordering of M^r(G) and its upper-bound certificate.
    Powerful {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        r: usize,
        /// Optimal colouring of G as a JSON array; defaults to the solver's.
        #[arg(long)]
        colouring: Option<String>,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Alternating complete bipartite witness in a proper colouring.
    Zigzag {
        #[command(flatten)]
        g: GraphArg,
        /// JSON array of colours, one per vertex.
        #[arg(long)]
        colouring: String,
        /// Number of colours to alternate; defaults to the chromatic number.
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Annealing search for an ordering with every monotonic cycle shorter
    /// than the chromatic number.
    Conjecture {
        #[arg(long, default_value = "M3K6")]
        graph: String,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        steps: u64,
        #[arg(long, default_value_t = 1)]
        restarts: usize,
        /// Values at or below this count as counterexamples; defaults to
        /// chi - 1.
        #[arg(long)]
        threshold: Option<usize>,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Re-verifies a certificate file.
    VerifyCert { file: PathBuf },
    /// Runs the consistency suite.
    Theorems {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 180)]
        random_graphs: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

/// What [`run`] produced: the exit code and the text for standard output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let (code, kind) = match e {
            Error::TheoremViolation(_) => (EXIT_VIOLATION, "theorem-violation"),
            Error::Certificate(_) => (EXIT_VERIFY, "verification"),
            _ => (EXIT_USAGE, "input"),
        };
        Failure {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        kind: "usage",
        message: message.into(),
    }
}

fn render(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialise")
}

pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: EXIT_OK,
                    output: e.to_string(),
                };
            }
            return Outcome {
                code: EXIT_USAGE,
                output: render(&json!({ "error": { "kind": "usage", "message": e.to_string() } })),
            };
        }
    };
    if cli.jobs == 0 {
        return Outcome {
            code: EXIT_USAGE,
            output: render(
                &json!({ "error": { "kind": "usage", "message": "--jobs must be positive" } }),
            ),
        };
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .expect("thread pool");
    match pool.install(|| dispatch(cli.command)) {
        Ok((code, v)) => Outcome {
            code,
            output: render(&v),
        },
        Err(f) => Outcome {
            code: f.code,
            output: render(&json!({ "error": { "kind": f.kind, "message": f.message } })),
        },
    }
}

fn read_graph(text: &str) -> Result<Graph, Failure> {
    let path = Path::new(text);
    if path.is_file() {
        let body = std::fs::read_to_string(path).map_err(|e| usage(format!("{text}: {e}")))?;
        let line = body.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
        return Ok(named::resolve(line.trim())?);
    }
    Ok(named::resolve(text)?)
}

/// All graphs named by `text`: every nonblank line when it is a file.
fn read_graphs(text: &str) -> Result<Vec<Graph>, Failure> {
    let path = Path::new(text);
    if path.is_file() {
        let body = std::fs::read_to_string(path).map_err(|e| usage(format!("{text}: {e}")))?;
        return body
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| named::resolve(l).map_err(Failure::from))
            .collect();
    }
    Ok(vec![named::resolve(text)?])
}

fn parse_colouring(text: &str) -> Result<Vec<usize>, Failure> {
    serde_json::from_str(text).map_err(|e| usage(format!("colouring: {e}")))
}

fn save(path: &Option<PathBuf>, cert: &Certificate) -> Result<(), Failure> {
    if let Some(p) = path {
        let text = serde_json::to_string_pretty(cert).expect("certificate serialises");
        std::fs::write(p, text + "\n").map_err(|e| usage(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn invariant(name: &str, value: Value, witness: Value) -> Value {
    json!({ "invariant": name, "value": value, "witness": witness })
}

fn invariants(g: &Graph, budget: u64) -> Result<Value, Failure> {
    let clique = max_clique(g);
    let chi = chromatic_number(g);
    let mut out = vec![
        invariant("vertices", json!(g.n()), Value::Null),
        invariant("edges", json!(g.edge_count()), json!(g.edges())),
        invariant("clique_number", json!(clique.len()), json!(clique)),
        invariant("chromatic_number", json!(chi.count), json!(chi.colours)),
        invariant("linear_altitude", json!(chi.count), json!(chi.colours)),
        invariant("girth", json!(girth(g)), Value::Null),
        invariant("odd_girth", json!(odd_girth(g)), Value::Null),
        invariant(
            "components",
            json!(components(g).len()),
            json!(components(g)),
        ),
        invariant(
            "complement_components",
            json!(components(&g.complement()).len()),
            json!(components(&g.complement())),
        ),
    ];
    if g.n() <= EXHAUSTIVE_MAX_VERTICES {
        let cc = circular_chromatic_number(g);
        out.push(invariant(
            "circular_chromatic_number",
            json!(cc.value.to_string()),
            json!({ "p": cc.colouring.p, "q": cc.colouring.q, "colouring": cc.colouring.colour }),
        ));
    }
    if altitude_via_complement(g).is_some()
        || (g.n() <= EXHAUSTIVE_MAX_VERTICES && canonical_ordering_count(g.n()) <= budget)
    {
        let a = circular_altitude_exact(g, budget);
        out.push(invariant(
            "circular_altitude",
            json!(a.value),
            json!({ "method": a.method, "ordering": a.witness_ordering, "cycle": a.witness_cycle }),
        ));
    }
    Ok(json!({ "graph6": emit_graph6(g)?, "invariants": out }))
}

fn altitude_certificate(g: &Graph, a: &AltitudeResult) -> Result<Option<Certificate>, Failure> {
    let (Some(ord), Some(cyc)) = (&a.witness_ordering, &a.witness_cycle) else {
        return Ok(None);
    };
    let exact_checkable = a.value.is_some()
        && (altitude_via_complement(g).is_some()
            || (g.n() <= EXHAUSTIVE_MAX_VERTICES
                && canonical_ordering_count(g.n()) <= DEFAULT_BUDGET));
    let kind = if exact_checkable {
        Kind::AltitudeExact
    } else {
        Kind::AltitudeUpper
    };
    Ok(Some(Certificate::new(
        kind,
        g,
        json!({ "value": a.upper, "ordering": ord, "cycle": cyc }),
    )?))
}

fn dispatch(cmd: Command) -> Result<(i32, Value), Failure> {
    match cmd {
        Command::Invariants { g, budget } => {
            let graphs = read_graphs(&g.graph)?;
            let mut all = graphs
                .iter()
                .map(|x| invariants(x, budget))
                .collect::<Result<Vec<_>, _>>()?;
            let v = if all.len() == 1 {
                all.pop().unwrap()
            } else {
                Value::Array(all)
            };
            Ok((EXIT_OK, v))
        }
        Command::Myc {
            base,
            r,
            out,
            sidecar,
        } => {
            let base_graph = read_graph(&base)?;
            let m = iterated_mycielskian(&base_graph, r)?;
            let g6 = emit_graph6(&m.graph)?;
            let labels = m.label_strings();
            if let Some(p) = &out {
                std::fs::write(p, format!("{g6}\n")).map_err(|e| usage(e.to_string()))?;
            }
            if let Some(p) = &sidecar {
                let text = serde_json::to_string_pretty(&labels).unwrap();
                std::fs::write(p, text + "\n").map_err(|e| usage(e.to_string()))?;
            }
            Ok((
                EXIT_OK,
                json!({ "graph6": g6, "n": m.n(), "r": r, "base": emit_graph6(&base_graph)?, "labels": labels }),
            ))
        }
        Command::Altitude {
            g,
            exact,
            bounds,
            budget,
            seed,
            steps,
            restarts,
            cert,
        } => {
            if !exact && !bounds {
                return Err(usage("one of --exact or --bounds is required"));
            }
            let graph = read_graph(&g.graph)?;
            let result = if exact {
                circular_altitude_exact(&graph, budget)
            } else {
                let opts = BoundsOptions {
                    budget,
                    anneal: seed.map(|s| AnnealConfig::new(s, restarts, steps)),
                    mycielski: mycielski_parts(&g.graph).map(|(base, r)| MycielskiHint { base, r }),
                    ..BoundsOptions::default()
                };
                circular_altitude_bounds(&graph, &opts)
            };
            let c = altitude_certificate(&graph, &result)?;
            if let Some(c) = &c {
                save(&cert, c)?;
            }
            let mut v = serde_json::to_value(&result).unwrap();
            v["certificate"] = serde_json::to_value(&c).unwrap();
            Ok((EXIT_OK, v))
        }
        Command::ChiC { g, cert } => {
            let graph = read_graph(&g.graph)?;
            let cc = circular_chromatic_number(&graph);
            let c = Certificate::new(
                Kind::PqColouring,
                &graph,
                json!({ "p": cc.colouring.p, "q": cc.colouring.q, "colour": cc.colouring.colour }),
            )?;
            save(&cert, &c)?;
            Ok((
                EXIT_OK,
                json!({
                    "value": cc.value.to_string(),
                    "p": cc.value.p,
                    "q": cc.value.q,
                    "colouring": cc.colouring,
                    "infeasible": cc.infeasible.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                    "certificate": c,
                }),
            ))
        }
        Command::PqColour { g, p, q, cert } => {
            if p == 0 || q == 0 {
                return Err(usage("p and q must be positive"));
            }
            let graph = read_graph(&g.graph)?;
            match find_pq_colouring(&graph, p, q) {
                Some(col) => {
                    let c = Certificate::new(
                        Kind::PqColouring,
                        &graph,
                        json!({ "p": p, "q": q, "colour": col.colour }),
                    )?;
                    save(&cert, &c)?;
                    Ok((
                        EXIT_OK,
                        json!({ "feasible": true, "colouring": col, "certificate": c }),
                    ))
                }
                None => Ok((EXIT_OK, json!({ "feasible": false, "p": p, "q": q }))),
            }
        }
        Command::Powerful {
            g,
            r,
            colouring,
            cert,
        } => {
            let graph = read_graph(&g.graph)?;
            let colour = match colouring {
                Some(text) => parse_colouring(&text)?,
                None => chromatic_number(&graph).colours,
            };
            let po = build_powerful_ordering(&graph, &colour, r)?;
            let report = verify_powerful(&po.graph, &po.ordering);
            let lemmas = lemma_report(&po);
            let certificate = match oddgirth_certificate(&graph, r) {
                Ok(c) => {
                    let cert_obj = Certificate::new(
                        Kind::Powerful,
                        &po.graph.graph,
                        json!({
                            "r": r,
                            "t": c.t,
                            "base": emit_graph6(&graph)?,
                            "ordering": c.ordering,
                            "value": c.value,
                            "cycle": c.cycle,
                        }),
                    )?;
                    save(&cert, &cert_obj)?;
                    json!({ "value": c.value, "t": c.t, "certificate": cert_obj })
                }
                Err(Error::Hypothesis(m)) => json!({ "hypothesis_failed": m }),
                Err(e) => return Err(e.into()),
            };
            Ok((
                EXIT_OK,
                json!({
                    "r": r,
                    "graph6": emit_graph6(&po.graph.graph)?,
                    "base_colouring": po.base_colouring,
                    "ordering": po.ordering,
                    "labels": po.labels(),
                    "report": report,
                    "paths": lemmas,
                    "upper_bound": certificate,
                }),
            ))
        }
        Command::Zigzag {
            g,
            colouring,
            t,
            cert,
        } => {
            let graph = read_graph(&g.graph)?;
            let colour = parse_colouring(&colouring)?;
            if colour.len() != graph.n() {
                return Err(usage(format!(
                    "colouring has {} entries for {} vertices",
                    colour.len(),
                    graph.n()
                )));
            }
            let t = t.unwrap_or_else(|| chromatic_number(&graph).count);
            let w = zigzag_witness(&graph, &colour, t)?;
            debug_assert!(verify_zigzag(&graph, &colour, &w, t));
            let c = Certificate::new(
                Kind::Zigzag,
                &graph,
                json!({ "t": t, "colouring": colour, "witness": w }),
            )?;
            save(&cert, &c)?;
            Ok((EXIT_OK, json!({ "t": t, "witness": w, "certificate": c })))
        }
        Command::Conjecture {
            graph,
            seed,
            steps,
            restarts,
            threshold,
            cert,
        } => {
            let g = read_graph(&graph)?;
            let threshold = threshold.unwrap_or_else(|| chromatic_number(&g).count - 1);
            let cfg = AnnealConfig::new(seed, restarts, steps);
            let report = anneal_min_max_cycle(&g, &cfg)?;
            let found = report.best_value <= threshold;
            let c = Certificate::new(
                Kind::Anneal,
                &g,
                json!({
                    "value": report.best_value,
                    "ordering": report.best_ordering,
                    "cycle": report.witness_cycle,
                    "seed": seed,
                    "steps": steps,
                    "restarts": restarts,
                }),
            )?;
            save(&cert, &c)?;
            let mut v = serde_json::to_value(&report).unwrap();
            v["threshold"] = json!(threshold);
            v["counterexample"] = json!(found);
            v["config"] = serde_json::to_value(&cfg).unwrap();
            v["certificate"] = serde_json::to_value(&c).unwrap();
            Ok((if found { EXIT_VIOLATION } else { EXIT_OK }, v))
        }
        Command::VerifyCert { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| usage(format!("{}: {e}", file.display())))?;
            let outcome = serde_json::from_str::<Certificate>(&text)
                .map_err(|e| Error::Certificate(format!("malformed certificate: {e}")))
                .and_then(|c| certificate::verify(&c).map(|claim| (c, claim)));
            Ok(match outcome {
                Ok((c, claim)) => (
                    EXIT_OK,
                    json!({ "valid": true, "kind": c.kind, "claim": claim }),
                ),
                Err(e) => (
                    EXIT_VERIFY,
                    json!({ "valid": false, "reason": e.to_string() }),
                ),
            })
        }
        Command::Theorems {
            seed,
            random_graphs,
            samples,
        } => {
            let reports = run_suite(&SuiteOptions {
                seed,
                random_graphs,
                samples,
            });
            let passed = reports.iter().all(|r| r.passed);
            Ok((
                if passed { EXIT_OK } else { EXIT_VIOLATION },
                json!({ "passed": passed, "seed": seed, "claims": reports }),
            ))
        }
    }
}
