//! Command line front end.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use motifcut_core::enumerate::enumerate_instances_with_limit;
use motifcut_core::graph::DEFAULT_CUT_LIMIT;
use motifcut_core::sparsify::{motif_sparsification, Engine, SparsifyConfig};
use motifcut_core::verify::{self, Counting, VerificationReport};
use motifcut_core::{generate, weights, Graph, Motif};
use rayon::prelude::*;

use crate::io::{read_graph, render_graph};
use crate::report::{report_to_json, stats_to_json};
use crate::spec::parse_motifs;

/// Exit codes.
pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFICATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "motifcut", version, about = "Motif cut sparsifiers of weighted graphs")]
pub struct Cli {
    /// Worker threads for `bench` (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated graph.
    Gen(GenArgs),
    /// Sparsify a graph for one or more motifs.
    Sparsify(SparsifyArgs),
    /// Compare motif cut values of a graph and a sparsifier.
    Verify(VerifyArgs),
    /// Per-edge motif weights.
    Weights(WeightsArgs),
    /// Check structural invariants on a small graph.
    Invariants(InvariantsArgs),
    /// Sparsify and verify a batch of random graphs, one CSV row per seed.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GenKind {
    Clique,
    Gnp,
    DeltaMinus,
    CliqueMinusEdge,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub kind: GenKind,
    pub n: usize,
    /// Edge probability (gnp only).
    pub p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file (default: stdout).
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    /// Where to write the sparse partner graph (clique-minus-edge only).
    #[arg(long)]
    pub pair_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum EngineArg {
    Strength,
    Connectivity,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Strength => Engine::Strength,
            EngineArg::Connectivity => Engine::Connectivity,
        }
    }
}

#[derive(Debug, Args)]
pub struct SparsifyArgs {
    pub graph: PathBuf,
    #[arg(short, long, default_value = "triangle")]
    pub motifs: String,
    #[arg(short, long, default_value_t = 0.5)]
    pub epsilon: f64,
    #[arg(long, value_enum, default_value_t = EngineArg::Strength)]
    pub engine: EngineArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1.0)]
    pub threshold_scale: f64,
    /// Override the number of rounds.
    #[arg(long)]
    pub rounds: Option<usize>,
    #[arg(long, default_value_t = 10.0)]
    pub c1: f64,
    #[arg(long, default_value_t = 1.0 / 64.0)]
    pub d: f64,
    #[arg(long, default_value_t = 11.0)]
    pub d1: f64,
    /// Vertex count up to which strengths are computed exactly.
    #[arg(long, default_value_t = motifcut_core::hypergraph::DEFAULT_EXACT_LIMIT)]
    pub exact_limit: usize,
    /// Count critical edges missed by the engine against exact importances.
    #[arg(long)]
    pub audit: bool,
    /// Sparsifier output file.
    #[arg(short, long)]
    pub out: PathBuf,
    /// Statistics file (default: stdout).
    #[arg(long)]
    pub stats: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Auto,
    Exhaustive,
    Sampled,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub graph: PathBuf,
    pub sparsifier: PathBuf,
    #[arg(short, long, default_value = "triangle")]
    pub motifs: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    pub mode: ModeArg,
    /// Random cuts on top of the singletons in sampled mode.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long, default_value_t = 0.5)]
    pub epsilon: f64,
    /// Count induced instances only.
    #[arg(long)]
    pub induced: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Method {
    Fast,
    Naive,
}

#[derive(Debug, Args)]
pub struct WeightsArgs {
    pub graph: PathBuf,
    #[arg(short, long, default_value = "triangle")]
    pub motif: String,
    #[arg(long, value_enum, default_value_t = Method::Fast)]
    pub method: Method,
    /// Instance cap for the naive method.
    #[arg(long, default_value_t = motifcut_core::enumerate::DEFAULT_INSTANCE_LIMIT)]
    pub instance_limit: usize,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    pub graph: PathBuf,
    #[arg(short, long, default_value = "triangle")]
    pub motif: String,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 14)]
    pub n: usize,
    #[arg(long, default_value_t = 0.6)]
    pub p: f64,
    #[arg(long, default_value_t = 10)]
    pub seeds: u64,
    #[arg(long, default_value_t = 0)]
    pub first_seed: u64,
    #[arg(short, long, default_value = "triangle")]
    pub motifs: String,
    #[arg(short, long, default_value_t = 0.5)]
    pub epsilon: f64,
    #[arg(long, value_enum, default_value_t = EngineArg::Strength)]
    pub engine: EngineArg,
    #[arg(long, default_value_t = 1.0)]
    pub threshold_scale: f64,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> anyhow::Result<Graph> {
    read_graph(path).with_context(|| format!("reading {}", path.display()))
}

fn gen(args: &GenArgs) -> anyhow::Result<bool> {
    let g = match args.kind {
        GenKind::Clique => generate::clique(args.n),
        GenKind::Gnp => {
            let p = args.p.context("gnp needs an edge probability")?;
            generate::gnp(args.n, p, args.seed)?
        }
        GenKind::DeltaMinus => generate::delta_minus(args.n)?,
        GenKind::CliqueMinusEdge => {
            let (g, g_hat) = generate::clique_minus_edge_pair(args.n)?;
            if let Some(path) = &args.pair_out {
                emit(Some(path), &render_graph(&g_hat))?;
            }
            g
        }
    };
    emit(args.out.as_deref(), &render_graph(&g))?;
    Ok(true)
}

fn sparsify(args: &SparsifyArgs) -> anyhow::Result<bool> {
    let g = load(&args.graph)?;
    let motifs = parse_motifs(&args.motifs, g.kind())?;
    let cfg = SparsifyConfig {
        epsilon: args.epsilon,
        c1: args.c1,
        d: args.d,
        d1: args.d1,
        threshold_scale: args.threshold_scale,
        seed: args.seed,
        engine: args.engine.into(),
        rounds_override: args.rounds,
        exact_limit: args.exact_limit,
        audit: args.audit,
    };
    let result = motif_sparsification(&g, &motifs, &cfg)?;
    emit(Some(&args.out), &render_graph(&result.graph))?;
    emit(args.stats.as_deref(), &(stats_to_json(&result.stats) + "\n"))?;
    Ok(true)
}

/// Exhaustive for `n <= 20`, otherwise sampled, unless `mode` forces one.
pub fn verify_graphs(
    g: &Graph,
    g_hat: &Graph,
    motifs: &[Motif],
    mode: ModeArg,
    counting: Counting,
    samples: usize,
    seed: u64,
) -> anyhow::Result<VerificationReport> {
    let exhaustive = match mode {
        ModeArg::Auto => g.n() <= DEFAULT_CUT_LIMIT,
        ModeArg::Exhaustive => true,
        ModeArg::Sampled => false,
    };
    if exhaustive {
        verify::max_cut_error_with(g, g_hat, motifs, counting).map_err(|e| {
            let hint = if e.is_resource_limit() { "; rerun with --mode sampled" } else { "" };
            anyhow::Error::new(e).context(format!("exhaustive verification refused{hint}"))
        })
    } else {
        Ok(verify::sampled_cut_error_with(g, g_hat, motifs, counting, samples, seed)?)
    }
}

fn verify_cmd(args: &VerifyArgs) -> anyhow::Result<bool> {
    let g = load(&args.graph)?;
    let g_hat = load(&args.sparsifier)?;
    if g.n() != g_hat.n() {
        bail!("vertex counts differ: {} and {}", g.n(), g_hat.n());
    }
    let motifs = parse_motifs(&args.motifs, g.kind())?;
    let counting = if args.induced { Counting::Induced } else { Counting::All };
    let report = verify_graphs(&g, &g_hat, &motifs, args.mode, counting, args.samples, args.seed)?;
    println!("{}", report_to_json(&report));
    Ok(report.within(args.epsilon))
}

fn single_motif(spec: &str, g: &Graph) -> anyhow::Result<Motif> {
    let mut motifs = parse_motifs(spec, g.kind())?;
    if motifs.len() != 1 {
        bail!("expected exactly one motif, got {}", motifs.len());
    }
    Ok(motifs.remove(0))
}

fn weights_cmd(args: &WeightsArgs) -> anyhow::Result<bool> {
    let g = load(&args.graph)?;
    let m = single_motif(&args.motif, &g)?;
    let w = match args.method {
        Method::Fast => weights::motif_weights_fast(&g, &m)?,
        Method::Naive => {
            let list = enumerate_instances_with_limit(&g, &m, args.instance_limit)?;
            weights::motif_weights_from_instances(&g, &list)
        }
    };
    let text: String = g.edges().iter().zip(&w).map(|(e, w)| format!("{} {} {}\n", e.u, e.v, w)).collect();
    emit(args.out.as_deref(), &text)?;
    Ok(true)
}

fn invariants(args: &InvariantsArgs) -> anyhow::Result<bool> {
    let g = load(&args.graph)?;
    let m = single_motif(&args.motif, &g)?;
    let report = verify::check_invariants(&g, &m)?;
    println!("{}", report_to_json(&report));
    Ok(report.all_pass())
}

struct BenchRow {
    seed: u64,
    input_edges: usize,
    output_edges: usize,
    rounds_run: usize,
    error: f64,
    mode: &'static str,
    seconds: f64,
}

fn bench_one(args: &BenchArgs, motifs: &[Motif], seed: u64) -> anyhow::Result<BenchRow> {
    let start = Instant::now();
    let g = generate::gnp(args.n, args.p, seed)?;
    let cfg = SparsifyConfig {
        epsilon: args.epsilon,
        threshold_scale: args.threshold_scale,
        seed,
        engine: args.engine.into(),
        ..SparsifyConfig::default()
    };
    let out = motif_sparsification(&g, motifs, &cfg)?;
    let report = verify_graphs(&g, &out.graph, motifs, ModeArg::Auto, Counting::All, args.samples, seed)?;
    Ok(BenchRow {
        seed,
        input_edges: out.stats.input_edges,
        output_edges: out.stats.output_edges,
        rounds_run: out.stats.rounds_run,
        error: report.max_relative_error,
        mode: report.mode.as_str(),
        seconds: start.elapsed().as_secs_f64(),
    })
}

fn bench(args: &BenchArgs) -> anyhow::Result<bool> {
    let motifs = parse_motifs(&args.motifs, motifcut_core::Kind::Undirected)?;
    let seeds: Vec<u64> = (args.first_seed..args.first_seed + args.seeds).collect();
    let rows = seeds
        .par_iter()
        .map(|&s| bench_one(args, &motifs, s))
        .collect::<anyhow::Result<Vec<_>>>()?;
    println!("seed,input_edges,output_edges,rounds_run,max_relative_error,mode,seconds");
    let mut pass = true;
    for r in &rows {
        pass &= r.error <= args.epsilon;
        println!(
            "{},{},{},{},{},{},{:.3}",
            r.seed, r.input_edges, r.output_edges, r.rounds_run, r.error, r.mode, r.seconds
        );
    }
    Ok(pass)
}

pub fn run(cli: &Cli) -> anyhow::Result<bool> {
    match &cli.command {
        Command::Gen(a) => gen(a),
        Command::Sparsify(a) => sparsify(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Weights(a) => weights_cmd(a),
        Command::Invariants(a) => invariants(a),
        Command::Bench(a) => {
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(t) = cli.threads {
                pool = pool.num_threads(t);
            }
            pool.build()?.install(|| bench(a))
        }
    }
}

/// Exit code for a failed command.
pub fn error_code(err: &anyhow::Error) -> u8 {
    let resource = err
        .chain()
        .filter_map(|e| e.downcast_ref::<motifcut_core::Error>())
        .any(motifcut_core::Error::is_resource_limit);
    if resource { EXIT_RESOURCE } else { EXIT_USAGE }
}

pub fn main_with(cli: Cli) -> ExitCode {
    match run(&cli) {
        Ok(true) => ExitCode::from(EXIT_OK),
        Ok(false) => ExitCode::from(EXIT_VERIFICATION),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(error_code(&err))
        }
    }
}
