//! Command-line front end: generation, hypothesis checking, certified
//! extension, oracle measurement, and the corpus property suite, with JSON
//! output on stdout. Exit codes: 0 success, 2 argument/precondition errors,
//! 3 resource-cap errors, 64 usage errors.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use l1graphs::conditions::{self, DEFAULT_TOUGHNESS_CAP};
use l1graphs::corpus::{self, SuiteConfig};
use l1graphs::extension;
use l1graphs::generators::{self, KnnVariant, LayerSpec};
use l1graphs::graph6::{encode_graph6, parse_graph6};
use l1graphs::oracle::{self, DEFAULT_ORACLE_CAP};
use l1graphs::{dot, Error, Graph, Result, VertexSequence};

#[derive(Parser)]
#[command(
    name = "l1graphs",
    about = "Cyclic properties of L_1-graphs: predicates, certified cycle/path extension, and brute-force oracles",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a generated graph as graph6 or DOT.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Report all hypothesis checks for a graph as JSON.
    Check(GraphInput),
    /// Extend a cycle by one or two vertices with a certificate.
    ExtendCycle {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated cycle vertices in order, e.g. 0,1,2.
        #[arg(long)]
        seq: String,
    },
    /// Extend an x-y path (endpoints must share no neighbor).
    ExtendPath {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated path vertices from x to y.
        #[arg(long)]
        seq: String,
    },
    /// Build a Hamiltonian cycle by iterated extension.
    Hamilton(GraphInput),
    /// Build a spanning x-y path by iterated extension.
    SpanningPath {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
    },
    /// Find a cycle through a prescribed vertex set.
    CycleThroughSet {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated vertex set, e.g. 0,3,5.
        #[arg(long)]
        set: String,
    },
    /// Brute-force cycle spectrum (all lengths plus per-vertex lengths).
    Spectrum(GraphInput),
    /// Brute-force x-y path vertex counts.
    Paths {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
    },
    /// Classify a connected bipartite L_1-graph.
    ClassifyBipartite(GraphInput),
    /// Run every corpus property suite; nonzero exit on any violation.
    VerifyCorpus {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Sampled graphs added to the named corpus.
        #[arg(long, default_value_t = 60)]
        random_count: usize,
        /// Largest sampled-graph order.
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Per-graph bound on enumerated cycles.
        #[arg(long, default_value_t = 300)]
        cycle_limit: usize,
        /// Per-endpoint-pair bound on enumerated paths.
        #[arg(long, default_value_t = 200)]
        path_limit: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Inline graph6 string.
    #[arg(long)]
    g6: Option<String>,
    /// File with one graph6 line per graph; emits one JSON object per line.
    #[arg(long = "in")]
    input_file: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum GenFamily {
    /// Sequential join K_1, empty(2), m x K_2, empty(2), K_1 (2m+6 vertices).
    NonpancyclicA {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = GenFormat::Graph6)]
        format: GenFormat,
    },
    /// Sequential join with doubled empty layers (2m+10 vertices).
    NonpancyclicB {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = GenFormat::Graph6)]
        format: GenFormat,
    },
    /// Exception-family graph between K_{p,p+1} and K_p v complement(K_{p+1}).
    FamilyK {
        #[arg(long)]
        p: usize,
        /// Edges inside the p-side, e.g. 0-1,1-2; `all` for the complete side.
        #[arg(long, default_value = "")]
        a_edges: String,
        #[arg(long, value_enum, default_value_t = GenFormat::Graph6)]
        format: GenFormat,
    },
    /// K_{n,n} or a variant with a vertex, edge, or perfect matching removed.
    Knn {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = KnnVariantArg::Full)]
        variant: KnnVariantArg,
        #[arg(long, value_enum, default_value_t = GenFormat::Graph6)]
        format: GenFormat,
    },
    /// The two path-extension counterexample graphs.
    Fig3 {
        /// 1: five sequentially joined K_2; 2: P_3 v 3K_2.
        #[arg(long)]
        which: usize,
        #[arg(long, value_enum, default_value_t = GenFormat::Graph6)]
        format: GenFormat,
    },
    /// Sequential join of explicit layers, e.g. --layers K1,E2,K2,K2.
    Layered {
        #[arg(long)]
        layers: String,
        #[arg(long, value_enum, default_value_t = GenFormat::Graph6)]
        format: GenFormat,
    },
    /// Seeded random graph satisfying the theorem hypotheses.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 2000)]
        max_tries: usize,
        #[arg(long, value_enum, default_value_t = GenFormat::Graph6)]
        format: GenFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFormat {
    Graph6,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum KnnVariantArg {
    Full,
    MinusVertex,
    MinusEdge,
    MinusPerfectMatching,
}

impl From<KnnVariantArg> for KnnVariant {
    fn from(v: KnnVariantArg) -> KnnVariant {
        match v {
            KnnVariantArg::Full => KnnVariant::Full,
            KnnVariantArg::MinusVertex => KnnVariant::MinusVertex,
            KnnVariantArg::MinusEdge => KnnVariant::MinusEdge,
            KnnVariantArg::MinusPerfectMatching => KnnVariant::MinusPerfectMatching,
        }
    }
}

fn env_cap(name: &str, default: usize) -> usize {
    std::env::var(name)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(default)
}

fn toughness_cap() -> usize {
    env_cap("L1GRAPHS_TOUGHNESS_CAP", DEFAULT_TOUGHNESS_CAP)
}

fn oracle_cap() -> usize {
    env_cap("L1GRAPHS_ORACLE_CAP", DEFAULT_ORACLE_CAP)
}

fn parse_vertex_list(text: &str, flag: &str) -> Result<Vec<usize>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::argument(format!("--{flag}: `{s}` is not a vertex index")))
        })
        .collect()
}

fn parse_edge_list(text: &str) -> Result<Vec<(usize, usize)>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|pair| {
            let (a, b) = pair
                .trim()
                .split_once('-')
                .ok_or_else(|| Error::argument(format!("--a-edges: `{pair}` is not u-v")))?;
            let a = a
                .parse::<usize>()
                .map_err(|_| Error::argument(format!("--a-edges: `{a}` is not a vertex index")))?;
            let b = b
                .parse::<usize>()
                .map_err(|_| Error::argument(format!("--a-edges: `{b}` is not a vertex index")))?;
            Ok((a, b))
        })
        .collect()
}

fn parse_layers(text: &str) -> Result<Vec<LayerSpec>> {
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let (kind, size) = tok.split_at(1.min(tok.len()));
            let size: usize = size
                .parse()
                .map_err(|_| Error::argument(format!("--layers: `{tok}` is not K<n> or E<n>")))?;
            match kind {
                "K" | "k" => Ok(LayerSpec::complete(size)),
                "E" | "e" => Ok(LayerSpec::empty(size)),
                _ => Err(Error::argument(format!("--layers: `{tok}` is not K<n> or E<n>"))),
            }
        })
        .collect()
}

fn error_json(e: &Error) -> serde_json::Value {
    let kind = match e {
        Error::Argument(_) => "argument",
        Error::Precondition(_) => "precondition",
        Error::Parse { .. } => "parse",
        Error::Resource(_) => "resource",
        Error::ExceptionFamily { .. } => "exception_family",
        Error::Internal(_) => "internal",
    };
    let mut obj = json!({ "kind": kind, "message": e.to_string() });
    if let Error::Parse { offset, .. } = e {
        obj["offset"] = json!(offset);
    }
    if let Error::ExceptionFamily { witness, .. } = e {
        obj["witness"] = serde_json::to_value(witness).expect("witness serializes");
    }
    json!({ "error": obj })
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Resource(_) => 3,
        _ => 2,
    }
}

/// Runs `op` on every input graph, one JSON line per graph. Returns the
/// exit code of the worst failure (resource errors dominate).
fn for_each_graph(
    input: &GraphInput,
    mut op: impl FnMut(&Graph) -> Result<serde_json::Value>,
) -> u8 {
    let lines: Vec<String> = if let Some(g6) = &input.g6 {
        vec![g6.clone()]
    } else {
        let path = input.input_file.as_ref().expect("clap enforces one source");
        match std::fs::read_to_string(path) {
            Ok(text) => text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(String::from)
                .collect(),
            Err(e) => {
                let err = Error::argument(format!("cannot read {}: {e}", path.display()));
                println!("{}", error_json(&err));
                return 2;
            }
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut status = 0u8;
    for line in &lines {
        let result = parse_graph6(line).and_then(|g| op(&g));
        match result {
            Ok(value) => writeln!(out, "{value}").expect("stdout"),
            Err(e) => {
                writeln!(out, "{}", error_json(&e)).expect("stdout");
                status = status.max(exit_code_for(&e));
            }
        }
    }
    status
}

fn emit_graph(g: &Graph, format: GenFormat) -> Result<()> {
    match format {
        GenFormat::Graph6 => println!("{}", encode_graph6(g)?),
        GenFormat::Dot => print!("{}", dot::to_dot(g, None)),
    }
    Ok(())
}

fn run_gen(family: GenFamily) -> Result<()> {
    match family {
        GenFamily::NonpancyclicA { m, format } => emit_graph(&generators::nonpancyclic_a(m)?, format),
        GenFamily::NonpancyclicB { m, format } => emit_graph(&generators::nonpancyclic_b(m)?, format),
        GenFamily::FamilyK { p, a_edges, format } => {
            let edges = if a_edges.trim() == "all" {
                generators::all_a_edges(p)
            } else {
                parse_edge_list(&a_edges)?
            };
            emit_graph(&generators::family_k(p, &edges)?, format)
        }
        GenFamily::Knn { n, variant, format } => {
            emit_graph(&generators::knn_variant(n, variant.into())?, format)
        }
        GenFamily::Fig3 { which, format } => {
            let (first, second) = generators::fig3_counterexamples();
            match which {
                1 => emit_graph(&first, format),
                2 => emit_graph(&second, format),
                _ => Err(Error::argument("--which must be 1 or 2")),
            }
        }
        GenFamily::Layered { layers, format } => {
            emit_graph(&generators::layered_join(&parse_layers(&layers)?)?, format)
        }
        GenFamily::Random { n, seed, max_tries, format } => {
            match generators::random_satisfying(n, seed, max_tries) {
                Some(g) => emit_graph(&g, format),
                None => Err(Error::resource(format!(
                    "no satisfying graph on {n} vertices found in {max_tries} tries"
                ))),
            }
        }
    }
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Gen { family } => match run_gen(family) {
            Ok(()) => 0,
            Err(e) => {
                println!("{}", error_json(&e));
                exit_code_for(&e)
            }
        },
        Command::Check(input) => for_each_graph(&input, |g| {
            let report = conditions::satisfies_hypotheses_capped(g, toughness_cap());
            Ok(serde_json::to_value(report).expect("report serializes"))
        }),
        Command::ExtendCycle { input, seq } => {
            let vertices = match parse_vertex_list(&seq, "seq") {
                Ok(v) => v,
                Err(e) => {
                    println!("{}", error_json(&e));
                    return 2;
                }
            };
            for_each_graph(&input, |g| {
                let c = VertexSequence::cycle(vertices.clone());
                let r = extension::extend_cycle(g, &c)?;
                Ok(serde_json::to_value(r).expect("result serializes"))
            })
        }
        Command::ExtendPath { input, seq } => {
            let vertices = match parse_vertex_list(&seq, "seq") {
                Ok(v) => v,
                Err(e) => {
                    println!("{}", error_json(&e));
                    return 2;
                }
            };
            for_each_graph(&input, |g| {
                let p = VertexSequence::path(vertices.clone());
                let r = extension::extend_path(g, &p)?;
                Ok(serde_json::to_value(r).expect("result serializes"))
            })
        }
        Command::Hamilton(input) => for_each_graph(&input, |g| {
            let r = extension::build_hamiltonian(g)?;
            Ok(serde_json::to_value(r).expect("result serializes"))
        }),
        Command::SpanningPath { input, x, y } => for_each_graph(&input, |g| {
            let r = extension::build_spanning_path(g, x, y)?;
            Ok(serde_json::to_value(r).expect("result serializes"))
        }),
        Command::CycleThroughSet { input, set } => {
            let vertices = match parse_vertex_list(&set, "set") {
                Ok(v) => v,
                Err(e) => {
                    println!("{}", error_json(&e));
                    return 2;
                }
            };
            let s: BTreeSet<usize> = vertices.into_iter().collect();
            for_each_graph(&input, |g| {
                let c = extension::cycle_through_set(g, &s)?;
                Ok(json!({ "set": s, "cycle": c }))
            })
        }
        Command::Spectrum(input) => for_each_graph(&input, |g| {
            let report = oracle::cycle_spectrum_capped(g, oracle_cap())?;
            Ok(serde_json::to_value(report).expect("report serializes"))
        }),
        Command::Paths { input, x, y } => for_each_graph(&input, |g| {
            let counts = oracle::path_vertex_counts_capped(g, x, y, oracle_cap())?;
            Ok(json!({ "x": x, "y": y, "counts": counts }))
        }),
        Command::ClassifyBipartite(input) => for_each_graph(&input, |g| {
            let class = conditions::classify_bipartite_l1(g)?;
            Ok(serde_json::to_value(class).expect("class serializes"))
        }),
        Command::VerifyCorpus { seed, random_count, max_n, cycle_limit, path_limit } => {
            let cfg = SuiteConfig { seed, random_count, max_n, cycle_limit, path_limit };
            let violations = corpus::verify_all(&cfg);
            let ok = violations.is_empty();
            println!(
                "{}",
                json!({ "ok": ok, "violations": violations })
            );
            if ok {
                0
            } else {
                1
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version requests on stdout with success.
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(64);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    ExitCode::from(run(cli))
}
