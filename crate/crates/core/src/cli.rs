//! The `polarity` command line. Exit codes: 0 success, 1 verification
//! failure, 2 usage error, 3 input or validation error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::{
    diameter, is_c4_free, neighborhood_split, parsons_partition, triangle_free_bound, triangles,
    verify_certificate, verify_vertex_set, Certificate, TriangleHypergraph, Verdict,
};
use crate::error::Error;
use crate::graph::{GraphDescriptor, PolarityGraph};
use crate::io;
use crate::search::{run_search, Budget, SearchConfig, Strategy};
use crate::spectral::{adjacency_spectrum, spectral_gap_check};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "polarity",
    version,
    about = "Polarity graphs and their triangle-free induced subgraphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a polarity graph and write its exports and summary.
    Build(BuildArgs),
    /// Structural report: C4-freeness, diameter, lemma checks, Parsons sets, hypergraph, bound.
    Analyze(AnalyzeArgs),
    /// Adjacency spectrum of the looped graph G°.
    Spectrum(GraphArgs),
    /// Upper bound on induced triangle-free sets without absolute points.
    Bound(BoundArgs),
    /// Search for a large induced triangle-free set without absolute points.
    Search(SearchArgs),
    /// Check a certificate against its graph.
    Verify(VerifyArgs),
    /// Write the graph as DIMACS, an adjacency list, or JSON.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    #[value(name = "ER", alias = "er")]
    Er,
    #[value(name = "U", alias = "u")]
    U,
    #[value(name = "custom")]
    Custom,
}

#[derive(Args, Debug, Clone)]
pub struct GraphArgs {
    #[arg(long, value_enum, default_value = "ER")]
    pub kind: Kind,
    #[arg(long)]
    pub q: Option<u32>,
    /// Plane file (custom graphs).
    #[arg(long, value_name = "FILE")]
    pub plane: Option<PathBuf>,
    /// Polarity file (custom graphs).
    #[arg(long, value_name = "FILE")]
    pub polarity: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, value_name = "DIR", default_value = "polarity-out")]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Also write analysis.json here.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BoundArgs {
    #[arg(long)]
    pub q: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Exact,
    Parsons,
    Seeded,
    Local,
    Greedy,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Exact => Strategy::Exact,
            StrategyArg::Parsons => Strategy::Parsons,
            StrategyArg::Seeded => Strategy::Seeded,
            StrategyArg::Local => Strategy::Local,
            StrategyArg::Greedy => Strategy::Greedy,
        }
    }
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, value_enum, default_value = "seeded")]
    pub strategy: StrategyArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub restarts: u64,
    /// Wall-clock limit; runs that hit it are not reproducible.
    #[arg(long, value_name = "SECONDS")]
    pub budget_sec: Option<f64>,
    /// Node cap (exact) or moves per restart (local search).
    #[arg(long)]
    pub steps: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Starting certificate for the local strategy.
    #[arg(long, value_name = "FILE")]
    pub init: Option<PathBuf>,
    #[arg(long, value_name = "DIR", default_value = "polarity-out")]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Graph flags; when --q and --plane are absent the certificate's own
    /// descriptor selects the graph.
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, value_name = "FILE")]
    pub cert: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dimacs,
    Adj,
    Json,
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, value_enum, default_value = "adj")]
    pub format: Format,
    /// Output file; stdout when absent.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Invalid(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Invalid(Error::Io(e))
    }
}

/// Records how an output directory was produced.
#[derive(Serialize)]
pub struct RunManifest {
    pub command: Vec<String>,
    pub config: Value,
    pub graph: GraphDescriptor,
    pub outputs: Vec<String>,
    pub version: String,
    pub started_unix: f64,
    pub finished_unix: f64,
}

const MANIFEST_FILE: &str = "manifest.json";

fn unix_now() -> f64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs_f64())
        .unwrap_or(0.0)
}

/// Parses arguments and runs; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let command_line = args
        .iter()
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    match dispatch(cli.command, command_line) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Invalid(e)) => {
            eprintln!("error: {e}");
            EXIT_INVALID
        }
    }
}

fn dispatch(command: Command, command_line: Vec<String>) -> Result<i32, Failure> {
    match command {
        Command::Build(a) => cmd_build(&a, command_line),
        Command::Analyze(a) => cmd_analyze(&a),
        Command::Spectrum(a) => cmd_spectrum(&a),
        Command::Bound(a) => {
            print_json(&serde_json::to_value(triangle_free_bound(a.q)).map_err(Error::from)?);
            Ok(EXIT_OK)
        }
        Command::Search(a) => cmd_search(&a, command_line),
        Command::Verify(a) => cmd_verify(&a),
        Command::Export(a) => cmd_export(&a),
    }
}

fn emit_stdout(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn print_json(v: &Value) {
    emit_stdout(&format!("{v:#}\n"));
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<String, Failure> {
    fs::create_dir_all(dir)?;
    let path = dir.join(name);
    fs::write(&path, contents)?;
    Ok(path.to_string_lossy().into_owned())
}

/// Builds the graph the flags describe.
pub fn load_graph(args: &GraphArgs) -> Result<PolarityGraph, Error> {
    match load_graph_inner(args) {
        Ok(g) => Ok(g),
        Err(Failure::Invalid(e)) => Err(e),
        Err(Failure::Usage(msg)) => Err(Error::parse(0, 0, msg)),
    }
}

fn load_graph_inner(args: &GraphArgs) -> Result<PolarityGraph, Failure> {
    let need_q = || {
        args.q
            .ok_or_else(|| Failure::Usage("--q is required for ER and U graphs".into()))
    };
    Ok(match args.kind {
        Kind::Er => PolarityGraph::er(need_q()?)?,
        Kind::U => PolarityGraph::unitary(need_q()?)?,
        Kind::Custom => {
            let (Some(plane_path), Some(pol_path)) = (&args.plane, &args.polarity) else {
                return Err(Failure::Usage(
                    "custom graphs need --plane and --polarity".into(),
                ));
            };
            let plane = io::read_plane(&fs::read_to_string(plane_path)?)?;
            let theta = io::read_polarity(&fs::read_to_string(pol_path)?, &plane)?;
            if args.q.is_some_and(|q| q != plane.order()) {
                return Err(Failure::Usage(format!(
                    "--q disagrees with plane order {}",
                    plane.order()
                )));
            }
            PolarityGraph::new(plane, theta)?
        }
    })
}

/// Counts and degree profile of a graph.
pub fn summary(g: &PolarityGraph) -> Value {
    let profile: serde_json::Map<String, Value> = g
        .graph()
        .degree_profile()
        .into_iter()
        .map(|(d, c)| (d.to_string(), json!(c)))
        .collect();
    json!({
        "graph": g.descriptor(),
        "n": g.num_vertices(),
        "edges": g.graph().num_edges(),
        "absolute": g.absolute_points().len(),
        "degree_profile": profile,
    })
}

fn cmd_build(a: &BuildArgs, command_line: Vec<String>) -> Result<i32, Failure> {
    let started = unix_now();
    let g = load_graph_inner(&a.graph)?;
    let d = g.descriptor();
    let mut outputs = vec![
        write_file(&a.out, "graph.adj", &io::write_adjacency(g.graph()))?,
        write_file(
            &a.out,
            "graph.dimacs",
            &io::write_dimacs(g.graph(), &d.to_string()),
        )?,
        write_file(&a.out, "plane.txt", &io::write_plane(g.plane()))?,
        write_file(
            &a.out,
            "polarity.txt",
            &io::write_polarity(g.polarity(), g.order()),
        )?,
    ];
    let summary = summary(&g);
    outputs.push(write_file(
        &a.out,
        "summary.json",
        &format!("{summary:#}\n"),
    )?);
    write_manifest(
        &a.out,
        command_line,
        json!({ "kind": format!("{:?}", a.graph.kind) }),
        d,
        outputs,
        started,
    )?;
    print_json(&summary);
    Ok(EXIT_OK)
}

fn write_manifest(
    dir: &Path,
    command: Vec<String>,
    config: Value,
    graph: &GraphDescriptor,
    outputs: Vec<String>,
    started_unix: f64,
) -> Result<(), Failure> {
    let m = RunManifest {
        command,
        config,
        graph: graph.clone(),
        outputs,
        version: env!("CARGO_PKG_VERSION").to_owned(),
        started_unix,
        finished_unix: unix_now(),
    };
    let text = serde_json::to_string_pretty(&m).map_err(Error::from)?;
    write_file(dir, MANIFEST_FILE, &(text + "\n"))?;
    Ok(())
}

/// The structural report printed by `analyze`.
pub fn analysis_report(g: &PolarityGraph) -> Value {
    let q = g.order();
    let n = g.num_vertices() as u32;
    let tris = triangles(g.graph());
    let lemma_absolute_free = tris.iter().all(|t| t.iter().all(|&v| !g.is_absolute(v)));
    let lemma_matching = (0..n)
        .filter(|&p| !g.is_absolute(p))
        .all(|p| neighborhood_split(g, p).is_ok_and(|s| s.b_max_degree(g.graph()) <= 1));
    let part = parsons_partition(g);
    let shadow_free = verify_vertex_set(g, &part.shadow).is_ok_and(|v| v.is_accepted());
    let rest_free = verify_vertex_set(g, &part.rest).is_ok_and(|v| v.is_accepted());
    let h = TriangleHypergraph::from_graph(g);
    let diam = diameter(g.graph()).ok();
    json!({
        "graph": g.descriptor(),
        "n": n,
        "edges": g.graph().num_edges(),
        "absolute": part.absolute.len(),
        "c4_free": is_c4_free(g.graph()),
        "diameter": diam,
        "triangles": tris.len(),
        "absolute_points_in_no_triangle": lemma_absolute_free,
        "non_absolute_neighbourhoods_are_matchings": lemma_matching,
        "parsons": {
            "absolute": part.absolute.len(),
            "shadow": part.shadow.len(),
            "rest": part.rest.len(),
            "shadow_triangle_free": shadow_free,
            "rest_triangle_free": rest_free,
        },
        "hypergraph": {
            "vertices": h.vertices().len(),
            "edges": h.edges().len(),
            "max_degree": h.max_degree(),
            "max_codegree": h.max_codegree(),
        },
        "bound": triangle_free_bound(q),
    })
}

fn cmd_analyze(a: &AnalyzeArgs) -> Result<i32, Failure> {
    let g = load_graph_inner(&a.graph)?;
    let report = analysis_report(&g);
    if let Some(dir) = &a.out {
        write_file(dir, "analysis.json", &format!("{report:#}\n"))?;
    }
    print_json(&report);
    Ok(EXIT_OK)
}

fn cmd_spectrum(a: &GraphArgs) -> Result<i32, Failure> {
    let g = load_graph_inner(a)?;
    let view = g.looped();
    let s = adjacency_spectrum(&view)?;
    let check = spectral_gap_check(&view, &s, g.order(), 1e-6);
    print_json(&json!({
        "n": g.num_vertices(),
        "lambda1": s.lambda1,
        "lambda_rest_max": s.lambda_max_rest,
        "sqrt_q": f64::from(g.order()).sqrt(),
        "pass": check.pass,
    }));
    Ok(if check.pass { EXIT_OK } else { EXIT_REJECTED })
}

fn cmd_search(a: &SearchArgs, command_line: Vec<String>) -> Result<i32, Failure> {
    let started = unix_now();
    let g = load_graph_inner(&a.graph)?;
    let mut cfg = SearchConfig::new(a.strategy.into())
        .seed(a.seed)
        .restarts(a.restarts)
        .workers(a.workers)
        .budget(Budget {
            seconds: a.budget_sec,
            steps: a.steps,
        });
    if let Some(path) = &a.init {
        cfg = cfg.initial(Certificate::from_json(&fs::read_to_string(path)?)?);
    }

    fs::create_dir_all(&a.out)?;
    let log_path = a.out.join("search.log");
    let log = std::sync::Mutex::new(fs::File::create(&log_path)?);
    let progress = |r: &crate::search::RestartRecord| {
        eprintln!("{r}");
        if let Ok(mut f) = log.lock() {
            let _ = writeln!(f, "{r}");
        }
    };
    let outcome = run_search(&g, &cfg, Some(&progress))?;

    let mut cert = outcome.certificate;
    cert.manifest = Some(MANIFEST_FILE.to_owned());
    let cert_path = write_file(&a.out, "certificate.json", &cert.to_json())?;
    let mut snapshot = serde_json::to_value(&cfg).map_err(Error::from)?;
    if let Some(obj) = snapshot.as_object_mut() {
        if obj.remove("initial").is_some() {
            obj.insert("init".into(), json!(a.init));
        }
    }
    write_manifest(
        &a.out,
        command_line,
        snapshot,
        g.descriptor(),
        vec![cert_path.clone(), log_path.to_string_lossy().into_owned()],
        started,
    )?;

    let verdict = verify_certificate(&g, &cert)?;
    print_json(&json!({
        "size": cert.size,
        "optimal": outcome.optimal,
        "verified": verdict.is_accepted(),
        "certificate": cert_path,
    }));
    Ok(if verdict.is_accepted() {
        EXIT_OK
    } else {
        EXIT_REJECTED
    })
}

fn cmd_verify(a: &VerifyArgs) -> Result<i32, Failure> {
    let cert = Certificate::from_json(&fs::read_to_string(&a.cert)?)?;
    let g = if a.graph.q.is_none() && a.graph.plane.is_none() {
        PolarityGraph::from_descriptor(&cert.graph)?
    } else {
        load_graph_inner(&a.graph)?
    };
    match verify_certificate(&g, &cert)? {
        Verdict::Accepted { size } => {
            print_json(&json!({ "accepted": true, "size": size }));
            Ok(EXIT_OK)
        }
        Verdict::Rejected(v) => {
            print_json(&json!({ "accepted": false, "witness": v, "reason": v.to_string() }));
            Ok(EXIT_REJECTED)
        }
    }
}

fn cmd_export(a: &ExportArgs) -> Result<i32, Failure> {
    let g = load_graph_inner(&a.graph)?;
    let text = match a.format {
        Format::Dimacs => io::write_dimacs(g.graph(), &g.descriptor().to_string()),
        Format::Adj => io::write_adjacency(g.graph()),
        Format::Json => format!("{:#}\n", io::graph_json(&g)),
    };
    match &a.out {
        Some(path) => fs::write(path, text)?,
        None => emit_stdout(&text),
    }
    Ok(EXIT_OK)
}
