//! Command-line front end.
//!
//! Every command prints one JSON [`RunReport`] on stdout (except `gen` and
//! `aux`, which print graphs). Errors go to stderr and select the exit code.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::approx::{bounds_from, fdim_approx_3_2_with, fdim_simplex_eps, ldim_of, DimBounds};
use crate::constructions::{
    cartesian_product, complement, cycle, fibonacci_cube, hardness_instance, hypercube, path, random_tree,
    simplex_graph, tsp12_instance, two_simplex_graph,
};
use crate::embedding_io::{check_embedding, EmbeddingFile, Rejection, Target};
use crate::error::{Error, Result};
use crate::exact::{fdim_exact_with, CoordinatingPathSystem, FibonacciSolution, DEFAULT_MAX_K};
use crate::graph::{distance_matrix, emit_edge_list, emit_graph6, looks_like_graph6, parse_edge_list, parse_graph6, Graph};
use crate::oracle;
use crate::partial_cube::{canonical_embedding_with, Witness};
use crate::semicube::{build_sc, build_x, build_y, crossing_graph, SemicubeRef};

pub const SCHEMA: &str = "fibdim/1";
/// Exit code for `verify` when the embedding is well-formed but wrong.
pub const EXIT_REJECTED: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "fibdim", version, about = "Isometric, lattice and Fibonacci dimensions of partial cubes")]
struct Cli {
    /// Input graph format; `auto` sniffs graph6 vs. edge list.
    #[arg(long, global = true, value_enum, default_value_t = Format::Auto)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Auto,
    Edges,
    Graph6,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Edges,
    Graph6,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// idim, ldim and the resulting interval for fdim.
    Dims { input: PathBuf },
    /// Fibonacci dimension, exact or approximate, with a certified embedding.
    Fdim(FdimArgs),
    /// Generate a graph family.
    Gen {
        #[arg(long, value_enum, default_value_t = OutputFormat::Edges)]
        output: OutputFormat,
        #[command(subcommand)]
        family: Family,
    },
    /// Check an embedding file against a graph (exit 5 on rejection).
    Verify { graph: PathBuf, embedding: PathBuf },
    /// Dump an auxiliary graph as a named edge list.
    Aux {
        #[arg(value_enum)]
        which: AuxGraph,
        input: PathBuf,
    },
    /// Brute-force references (unstable, for debugging).
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("method").args(["exact", "approx", "simplex"]))]
struct FdimArgs {
    input: PathBuf,
    /// Exact subset DP (default).
    #[arg(long)]
    exact: bool,
    /// Matching-based 3/2-approximation.
    #[arg(long)]
    approx: bool,
    /// Treat the input as κ(G) for the graph in this file; (1+ε) scheme.
    #[arg(long, value_name = "G-FILE")]
    simplex: Option<PathBuf>,
    #[arg(long, default_value_t = 0.5)]
    epsilon: f64,
    /// Write the verified Fibonacci embedding here as JSON.
    #[arg(long, value_name = "PATH")]
    emit_embedding: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Family {
    FibonacciCube { d: usize },
    Hypercube { k: usize },
    Cycle { n: usize },
    Path { n: usize },
    RandomTree {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// P_a □ P_b.
    Grid { a: usize, b: usize },
    /// Cartesian product of two graph files.
    Product { g: PathBuf, h: PathBuf },
    /// κ(G): all cliques.
    Simplex { g: PathBuf },
    /// κ₂(G): cliques of size at most 2.
    TwoSimplex { g: PathBuf },
    Complement { g: PathBuf },
    /// κ₂ of the complement.
    Hardness { g: PathBuf },
    /// (1,2)-TSP instance as a distance matrix.
    Tsp12 { g: PathBuf },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum AuxGraph {
    #[value(name = "X")]
    X,
    #[value(name = "Sc")]
    Sc,
    #[value(name = "Y")]
    Y,
    Crossing,
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Backtracking search for the least f with an isometric embedding.
    Fdim {
        input: PathBuf,
        #[arg(long, default_value_t = 12)]
        f_max: usize,
    },
    /// Exhaustive minimum coordinating path system of X(G).
    PathCover { input: PathBuf },
    Hamiltonian { input: PathBuf },
    /// Optimal tour of the (1,2)-TSP instance of the graph.
    Tsp { input: PathBuf },
    Median { input: PathBuf },
}

#[derive(Serialize, Debug, Default)]
pub struct RunReport {
    pub schema: &'static str,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unstable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub idim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ldim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fdim: Option<usize>,
    /// Achieved dimension of an approximate embedding.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_prime: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<DimBounds>,
    /// `f_prime` over the certified lower bound.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path_system: Option<PathSystemSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simplex: Option<SimplexSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub embedding_file: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
    pub elapsed_ms: f64,
}

#[derive(Serialize, Debug)]
pub struct InputSummary {
    pub sha256: String,
    pub format: &'static str,
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Serialize, Debug)]
pub struct PathSystemSummary {
    pub count: usize,
    pub paths: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct SimplexSummary {
    pub epsilon: f64,
    pub greedy_paths: usize,
    pub used_exact: bool,
}

#[derive(Serialize, Debug)]
pub struct Verification {
    pub target: Target,
    pub verdict: &'static str,
    pub pairs_checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
}

#[derive(Serialize, Debug)]
pub struct WitnessReport {
    pub kind: &'static str,
    pub vertices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph_distance: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hamming: Option<u32>,
}

impl From<&Rejection> for WitnessReport {
    fn from(r: &Rejection) -> Self {
        match *r {
            Rejection::NotFibonacci { vertex } => WitnessReport {
                kind: "label-contains-11",
                vertices: vec![vertex],
                graph_distance: None,
                hamming: None,
            },
            Rejection::Distance(Witness {
                u,
                v,
                graph_distance,
                hamming,
            }) => WitnessReport {
                kind: "distance-mismatch",
                vertices: vec![u, v],
                graph_distance,
                hamming: Some(hamming),
            },
        }
    }
}

struct Input {
    graph: Graph,
    summary: InputSummary,
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

fn read_bytes(path: &Path) -> Result<Vec<u8>> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

fn read_graph(path: &Path, format: Format) -> Result<Input> {
    let bytes = read_bytes(path)?;
    let graph6 = match format {
        Format::Auto => looks_like_graph6(&bytes),
        Format::Edges => false,
        Format::Graph6 => true,
    };
    let graph = if graph6 {
        parse_graph6(&bytes)?
    } else {
        let text = std::str::from_utf8(&bytes).map_err(|e| Error::EdgeList {
            line: 0,
            message: format!("input is not UTF-8: {e}"),
        })?;
        parse_edge_list(text)?
    };
    let summary = InputSummary {
        sha256: sha256_hex(&bytes),
        format: if graph6 { "graph6" } else { "edges" },
        vertices: graph.n(),
        edges: graph.edge_count(),
    };
    Ok(Input { graph, summary })
}

/// Cap on the number of Θ-classes for the exact DP, from `FIBDIM_MAX_K`.
fn max_k_from_env() -> Result<usize> {
    match std::env::var("FIBDIM_MAX_K") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("FIBDIM_MAX_K must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_K),
    }
}

fn describe_system(system: &CoordinatingPathSystem) -> PathSystemSummary {
    PathSystemSummary {
        count: system.len(),
        paths: system
            .paths
            .iter()
            .map(|p| p.iter().map(SemicubeRef::to_string).collect::<Vec<_>>().join("-"))
            .collect(),
    }
}

fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn cmd_dims(input: Input) -> Result<RunReport> {
    let g = &input.graph;
    let dist = distance_matrix(g);
    let emb = canonical_embedding_with(g, &dist)?;
    let ldim = ldim_of(&emb);
    Ok(RunReport {
        command: "dims".into(),
        idim: Some(emb.k()),
        ldim: Some(ldim),
        bounds: Some(bounds_from(emb.k(), ldim)),
        input: Some(input.summary),
        ..Default::default()
    })
}

fn cmd_fdim(args: &FdimArgs, input: Input, format: Format) -> Result<RunReport> {
    let g = &input.graph;
    let dist = distance_matrix(g);
    let hypercube = canonical_embedding_with(g, &dist)?;
    let ldim = ldim_of(&hypercube);
    let bounds = bounds_from(hypercube.k(), ldim);

    let mut report = RunReport {
        command: "fdim".into(),
        ldim: Some(ldim),
        bounds: Some(bounds),
        ..Default::default()
    };
    let solution: FibonacciSolution = if let Some(gfile) = &args.simplex {
        let base = read_graph(gfile, format)?.graph;
        let sol = fdim_simplex_eps(g, &base, args.epsilon, max_k_from_env()?)?;
        report.method = Some("simplex".into());
        report.simplex = Some(SimplexSummary {
            epsilon: args.epsilon,
            greedy_paths: sol.greedy_paths,
            used_exact: sol.used_exact,
        });
        sol.solution
    } else if args.approx {
        report.method = Some("approx".into());
        fdim_approx_3_2_with(g, &dist)?
    } else {
        report.method = Some("exact".into());
        fdim_exact_with(g, &dist, max_k_from_env()?)?
    };

    let f = solution.dimension;
    if report.method.as_deref() == Some("exact") {
        report.fdim = Some(f);
    } else {
        report.f_prime = Some(f);
        report.ratio = Some(if bounds.lower == 0 { 1.0 } else { f as f64 / bounds.lower as f64 });
    }
    report.idim = Some(solution.idim);
    report.path_system = Some(describe_system(&solution.system));

    // closed loop: check the serialized form, not the in-memory one
    let file = EmbeddingFile::from_rows(Target::Fibonacci, solution.embedding.labels());
    let reparsed = EmbeddingFile::from_json(&file.to_json())?;
    if let Some(rejection) = check_embedding(&reparsed, &dist)? {
        return Err(Error::Verification(format!("emitted embedding rejected: {rejection:?}")));
    }
    report.verification = Some(Verification {
        target: Target::Fibonacci,
        verdict: "accepted",
        pairs_checked: pairs(g.n()),
        witness: None,
    });
    if let Some(path) = &args.emit_embedding {
        std::fs::write(path, file.to_json()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        report.embedding_file = Some(path.display().to_string());
    }
    report.input = Some(input.summary);
    Ok(report)
}

fn generate(family: &Family, format: Format) -> Result<GenOutput> {
    let load = |p: &PathBuf| read_graph(p, format).map(|i| i.graph);
    Ok(GenOutput::Graph(match family {
        Family::FibonacciCube { d } => fibonacci_cube(*d)?,
        Family::Hypercube { k } => hypercube(*k)?,
        Family::Cycle { n } => cycle(*n)?,
        Family::Path { n } => path(*n)?,
        Family::RandomTree { n, seed } => random_tree(*n, *seed)?,
        Family::Grid { a, b } => cartesian_product(&path(*a)?, &path(*b)?),
        Family::Product { g, h } => cartesian_product(&load(g)?, &load(h)?),
        Family::Simplex { g } => simplex_graph(&load(g)?)?,
        Family::TwoSimplex { g } => two_simplex_graph(&load(g)?),
        Family::Complement { g } => complement(&load(g)?),
        Family::Hardness { g } => hardness_instance(&load(g)?),
        Family::Tsp12 { g } => return Ok(GenOutput::Text(tsp12_instance(&load(g)?)?.to_text())),
    }))
}

enum GenOutput {
    Graph(Graph),
    Text(String),
}

fn render_graph(g: &Graph, output: OutputFormat) -> Result<String> {
    match output {
        OutputFormat::Graph6 => {
            let mut s = String::from_utf8(emit_graph6(g)?).expect("graph6 is ASCII");
            s.push('\n');
            Ok(s)
        }
        OutputFormat::Edges => {
            let mut s = emit_edge_list(g);
            if g.labels().is_some() {
                for v in 0..g.n() {
                    let _ = writeln!(s, "# vertex {v} = {}", g.vertex_name(v));
                }
            }
            Ok(s)
        }
    }
}

fn aux_edge_list(which: AuxGraph, g: &Graph) -> Result<String> {
    let emb = canonical_embedding_with(g, &distance_matrix(g))?;
    let k = emb.k();
    let class = |i: usize| format!("C({i})");
    let (title, nodes, edges): (&str, usize, Vec<(String, String)>) = match which {
        AuxGraph::X => {
            let x = build_x(&emb);
            ("X", 2 * k, x.edges().map(|(a, b)| (a.to_string(), b.to_string())).collect())
        }
        AuxGraph::Sc => {
            let sc = build_sc(&emb);
            ("Sc", 2 * k, sc.edges().map(|(a, b)| (a.to_string(), b.to_string())).collect())
        }
        AuxGraph::Y => {
            let y = build_y(&build_x(&emb));
            ("Y", k, y.edges().map(|(i, j)| (class(i), class(j))).collect())
        }
        AuxGraph::Crossing => {
            let c = crossing_graph(&emb);
            ("crossing", k, c.edges().map(|(i, j)| (class(i), class(j))).collect())
        }
    };
    let mut out = format!("# {title}: nodes={nodes} edges={}\n", edges.len());
    for (a, b) in edges {
        let _ = writeln!(out, "{a} {b}");
    }
    Ok(out)
}

fn cmd_oracle(cmd: &OracleCommand, format: Format) -> Result<RunReport> {
    let (name, input) = match cmd {
        OracleCommand::Fdim { input, .. } => ("fdim", input),
        OracleCommand::PathCover { input } => ("path-cover", input),
        OracleCommand::Hamiltonian { input } => ("hamiltonian", input),
        OracleCommand::Tsp { input } => ("tsp", input),
        OracleCommand::Median { input } => ("median", input),
    };
    let input = read_graph(input, format)?;
    let g = &input.graph;
    let value = match cmd {
        OracleCommand::Fdim { f_max, .. } => serde_json::json!(oracle::brute_force_fdim(g, *f_max)?),
        OracleCommand::PathCover { .. } => {
            let emb = canonical_embedding_with(g, &distance_matrix(g))?;
            serde_json::json!(oracle::brute_force_path_cover(&build_x(&emb))?)
        }
        OracleCommand::Hamiltonian { .. } => serde_json::json!(oracle::has_hamiltonian_path(g)?),
        OracleCommand::Tsp { .. } => serde_json::json!(oracle::tsp12_optimal(&tsp12_instance(g)?)?),
        OracleCommand::Median { .. } => serde_json::json!(oracle::is_median_graph(g)?),
    };
    Ok(RunReport {
        command: "oracle".into(),
        method: Some(name.into()),
        unstable: Some(true),
        oracle: Some(value),
        input: Some(input.summary),
        ..Default::default()
    })
}

enum Outcome {
    Report(Box<RunReport>, i32),
    Text(String),
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let fmt = cli.format;
    Ok(match &cli.command {
        Command::Dims { input } => Outcome::Report(Box::new(cmd_dims(read_graph(input, fmt)?)?), 0),
        Command::Fdim(args) => Outcome::Report(Box::new(cmd_fdim(args, read_graph(&args.input, fmt)?, fmt)?), 0),
        Command::Gen { output, family } => Outcome::Text(match generate(family, fmt)? {
            GenOutput::Graph(g) => render_graph(&g, *output)?,
            GenOutput::Text(t) => t,
        }),
        Command::Verify { graph, embedding } => {
            let input = read_graph(graph, fmt)?;
            let text = String::from_utf8(read_bytes(embedding)?)
                .map_err(|e| Error::EmbeddingFormat(format!("not UTF-8: {e}")))?;
            let file = EmbeddingFile::from_json(&text)?;
            let rejection = check_embedding(&file, &distance_matrix(&input.graph))?;
            let code = if rejection.is_some() { EXIT_REJECTED } else { 0 };
            let report = RunReport {
                command: "verify".into(),
                verification: Some(Verification {
                    target: file.target,
                    verdict: if rejection.is_some() { "rejected" } else { "accepted" },
                    pairs_checked: pairs(input.graph.n()),
                    witness: rejection.as_ref().map(WitnessReport::from),
                }),
                input: Some(input.summary),
                ..Default::default()
            };
            Outcome::Report(Box::new(report), code)
        }
        Command::Aux { which, input } => Outcome::Text(aux_edge_list(*which, &read_graph(input, fmt)?.graph)?),
        Command::Oracle(cmd) => Outcome::Report(Box::new(cmd_oracle(cmd, fmt)?), 0),
    })
}

/// Runs the CLI on explicit arguments and streams; returns the exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{}", e.render())
            } else {
                write!(stdout, "{}", e.render())
            };
            return code;
        }
    };
    let start = Instant::now();
    match dispatch(&cli) {
        Ok(Outcome::Text(text)) => {
            let _ = stdout.write_all(text.as_bytes());
            0
        }
        Ok(Outcome::Report(mut report, code)) => {
            report.schema = SCHEMA;
            report.elapsed_ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            let _ = writeln!(stdout, "{json}");
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
