//! The `rtspan` command line. Kept in the library so tests drive it
//! without spawning processes.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::index;
use serde::Serialize;
use serde_json::json;

use crate::cover::{swrt_cover, CoverParams};
use crate::error::{Error, Result};
use crate::generate::{random_graph, GraphSpec};
use crate::graph::{parse_edge_list, write_edge_list, Direction, EdgeId, Graph, VertexSet};
use crate::partition::cluster;
use crate::seed;
use crate::spanner::{stretch_bound, swrt_spanner, swrt_spanner_weighted, SpannerResult};
use crate::verify::{check_cover, check_stretch, StretchReport};

pub const SPANNER_SCHEMA: &str = "rtspan.spanner-stats/v1";
pub const COVER_SCHEMA: &str = "rtspan.cover-stats/v1";
pub const PARTITION_SCHEMA: &str = "rtspan.partition/v1";
pub const VERIFY_SCHEMA: &str = "rtspan.verify/v1";
pub const BENCH_SCHEMA: &str = "rtspan.bench/v1";

#[derive(Debug, Parser)]
#[command(name = "rtspan", version, about = "Source-wise round-trip spanners and covers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a seeded random digraph.
    Gen(GenArgs),
    /// Build a source-wise round-trip spanner.
    Spanner(SpannerArgs),
    /// Build a source-wise round-trip cover.
    Cover(CoverArgs),
    /// Run one exponential-shift clustering.
    Partition(PartitionArgs),
    /// Check a spanner against its input graph.
    Verify(VerifyArgs),
    /// Sweep spanner construction over (n, s, k).
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// The command's primary artifact in text form.
    Edgelist,
    /// Versioned JSON statistics.
    JsonStats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Out,
    In,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Out => Direction::Out,
            DirectionArg::In => Direction::In,
        }
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value_t = 1.0)]
    pub min_weight: f64,
    #[arg(long, default_value_t = 10.0)]
    pub max_weight: f64,
    #[arg(long)]
    pub integer_weights: bool,
    /// Spread weights log-uniformly over the range.
    #[arg(long)]
    pub log_uniform: bool,
    /// Add a random Hamiltonian cycle first.
    #[arg(long)]
    pub strongly_connected: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Construction parameters shared by `spanner`, `cover` and `bench`.
#[derive(Clone, Debug, Args)]
pub struct BuildArgs {
    #[arg(long, default_value_t = 2)]
    pub k: u32,
    #[arg(long, default_value_t = 4)]
    pub c: u32,
    #[arg(long, default_value_t = 0.125)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 1.0)]
    pub trials_mult: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl BuildArgs {
    fn params(&self) -> CoverParams {
        CoverParams { c: self.c, epsilon: self.epsilon, trial_multiplier: self.trials_mult }
    }
}

#[derive(Debug, Args)]
pub struct SpannerArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Spanner edge list destination.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Statistics sidecar destination.
    #[arg(long)]
    pub stats: Option<PathBuf>,
    /// `all`, a count of uniformly sampled sources, or a file of ids.
    #[arg(long, default_value = "all")]
    pub sources: String,
    #[command(flatten)]
    pub build: BuildArgs,
    /// Use the weight-dependent construction.
    #[arg(long)]
    pub weighted_variant: bool,
    #[arg(long)]
    pub verify: bool,
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Ball records (JSON lines) destination.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Covering radius `R`.
    #[arg(long)]
    pub radius: f64,
    #[arg(long, default_value = "all")]
    pub sources: String,
    #[command(flatten)]
    pub build: BuildArgs,
    #[arg(long)]
    pub verify: bool,
    #[arg(long, value_enum, default_value_t = Format::JsonStats)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PartitionArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub radius: f64,
    /// The `s` in the rate `ln(s) / r`.
    #[arg(long)]
    pub s: usize,
    /// `all`, `none`, a count, or a file of ids.
    #[arg(long, default_value = "all")]
    pub centers: String,
    #[arg(long, value_enum, default_value_t = DirectionArg::Out)]
    pub direction: DirectionArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::JsonStats)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// The spanner, as an edge list over the same vertex ids.
    #[arg(long)]
    pub spanner: PathBuf,
    #[arg(long, default_value = "all")]
    pub sources: String,
    #[arg(long, default_value_t = 2)]
    pub k: u32,
    #[arg(long, default_value_t = 4)]
    pub c: u32,
    /// Stretch bound; defaults to the construction's guarantee for `k`
    /// and `c`.
    #[arg(long)]
    pub bound: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [50, 100])]
    pub ns: Vec<usize>,
    /// Source counts.
    #[arg(long, value_delimiter = ',', default_values_t = [1, 4, 16])]
    pub ss: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_values_t = [2, 3])]
    pub ks: Vec<u32>,
    /// Edges per vertex in the generated strongly connected graphs.
    #[arg(long, default_value_t = 4)]
    pub density: usize,
    #[arg(long, default_value_t = 1.0)]
    pub min_weight: f64,
    #[arg(long, default_value_t = 100.0)]
    pub max_weight: f64,
    #[command(flatten)]
    pub build: BuildArgs,
    /// Measure stretch on every row.
    #[arg(long)]
    pub verify: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    pub format: Format,
}

/// Result of a command: whether every requested check passed, and what
/// goes to standard output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub ok: bool,
    pub stdout: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { ok: true, stdout }
    }
}

pub fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Gen(a) => cmd_gen(&a),
        Command::Spanner(a) => cmd_spanner(&a),
        Command::Cover(a) => cmd_cover(&a),
        Command::Partition(a) => cmd_partition(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Bench(a) => cmd_bench(&a),
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    Ok(parse_edge_list(&fs::read_to_string(path)?)?)
}

fn write_to(path: Option<&Path>, text: &str) -> Result<()> {
    if let Some(p) = path {
        fs::write(p, text)?;
    }
    Ok(())
}

fn to_json(value: &impl Serialize) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Resolves a vertex-set flag: `all`, `none`, a count sampled without
/// replacement from `rng_seed`, or a path to whitespace-separated ids.
pub fn resolve_vertex_set(spec: &str, n: usize, rng_seed: u64) -> Result<VertexSet> {
    let spec = spec.trim();
    if spec == "all" {
        return Ok(VertexSet::full(n));
    }
    if spec == "none" {
        return Ok(VertexSet::empty(n));
    }
    let path = Path::new(spec);
    if !path.is_file() {
        if let Ok(count) = spec.parse::<usize>() {
            if count > n {
                return Err(Error::param("sources", format!("{count} exceeds n = {n}")));
            }
            let mut rng = seed::stream(rng_seed);
            return Ok(VertexSet::from_vertices(n, index::sample(&mut rng, n, count)));
        }
    }
    let text = fs::read_to_string(path)?;
    let mut ids = Vec::new();
    for token in text.lines().filter(|l| !l.trim_start().starts_with('#')).flat_map(str::split_whitespace) {
        let v: usize =
            token.parse().map_err(|_| Error::param("sources", format!("bad vertex id {token:?}")))?;
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        ids.push(v);
    }
    Ok(VertexSet::from_vertices(n, ids))
}

pub fn cmd_gen(a: &GenArgs) -> Result<Outcome> {
    let mut spec = GraphSpec::new(a.n, a.m).weights(a.min_weight, a.max_weight);
    spec.integer_weights = a.integer_weights;
    spec.log_uniform = a.log_uniform;
    spec.strongly_connected = a.strongly_connected;
    let g = random_graph(&spec, &mut seed::child_stream(a.seed, 0))?;
    let text = write_edge_list(&g);
    if a.output.is_some() {
        write_to(a.output.as_deref(), &text)?;
        return Ok(Outcome::ok(String::new()));
    }
    Ok(Outcome::ok(text))
}

#[derive(Debug, Serialize)]
struct SpannerStats<'a> {
    schema: &'static str,
    seed: u64,
    variant: &'static str,
    n: usize,
    m: usize,
    k: u32,
    sources: usize,
    params: CoverParams,
    /// Factor applied to all weights before the weighted construction.
    weight_scale: f64,
    edges: usize,
    certificate_edges: usize,
    balls: usize,
    failure_exits: usize,
    stretch_bound: f64,
    scales: &'a [crate::spanner::ScaleStats],
    stretch: Option<StretchReport>,
}

fn build_spanner(
    g: &Graph,
    sources: &VertexSet,
    build: &BuildArgs,
    weighted: bool,
) -> Result<(SpannerResult, f64)> {
    let params = build.params();
    let mut rng = seed::child_stream(build.seed, 1);
    if weighted {
        let factor = match g.min_weight() {
            Some(w) if w < 1.0 => 1.0 / w,
            _ => 1.0,
        };
        let scaled = if factor == 1.0 { g.clone() } else { g.scaled(factor)? };
        Ok((swrt_spanner_weighted(&scaled, build.k, sources, &params, &mut rng)?, factor))
    } else {
        Ok((swrt_spanner(g, build.k, sources, &params, &mut rng)?, 1.0))
    }
}

pub fn cmd_spanner(a: &SpannerArgs) -> Result<Outcome> {
    let g = read_graph(&a.input)?;
    let sources = resolve_vertex_set(&a.sources, g.n(), seed::derive_seed(a.build.seed, 0))?;
    let (h, weight_scale) = build_spanner(&g, &sources, &a.build, a.weighted_variant)?;
    let bound = stretch_bound(a.build.k, g.n(), a.build.c);
    let stretch = a.verify.then(|| check_stretch(&g, &h.edges, &sources, bound));
    let ok = stretch.as_ref().is_none_or(|r| r.pass);

    let edge_list = write_edge_list(&h.subgraph(&g));
    let stats = to_json(&SpannerStats {
        schema: SPANNER_SCHEMA,
        seed: a.build.seed,
        variant: if a.weighted_variant { "weighted" } else { "contracted" },
        n: g.n(),
        m: g.m(),
        k: a.build.k,
        sources: sources.len(),
        params: a.build.params(),
        weight_scale,
        edges: h.edge_count(),
        certificate_edges: h.certificate_edges,
        balls: h.ball_count(),
        failure_exits: h.failure_exits(),
        stretch_bound: bound,
        scales: &h.scales,
        stretch,
    })?;
    write_to(a.output.as_deref(), &edge_list)?;
    write_to(a.stats.as_deref(), &stats)?;
    let stdout = match a.format {
        Format::JsonStats => stats,
        Format::Edgelist if a.output.is_none() => edge_list,
        Format::Edgelist => String::new(),
    };
    Ok(Outcome { ok, stdout })
}

pub fn cmd_cover(a: &CoverArgs) -> Result<Outcome> {
    let g = read_graph(&a.input)?;
    let sources = resolve_vertex_set(&a.sources, g.n(), seed::derive_seed(a.build.seed, 0))?;
    let params = a.build.params();
    let cover =
        swrt_cover(&g, a.build.k, a.radius, &sources, &params, &mut seed::child_stream(a.build.seed, 1))?;
    let radius_limit = params.max_ball_radius(cover.r);
    let report = a.verify.then(|| check_cover(&g, &cover, &sources, a.radius));
    let ok = report
        .as_ref()
        .is_none_or(|r| r.all_covered() && r.trials_disjoint && r.max_certified_radius <= radius_limit);

    let balls = cover.to_json_lines()?;
    let stats = to_json(&json!({
        "schema": COVER_SCHEMA,
        "seed": a.build.seed,
        "n": g.n(),
        "m": g.m(),
        "k": a.build.k,
        "target_radius": a.radius,
        "exploration_radius": cover.r,
        "radius_limit": radius_limit,
        "sources": sources.len(),
        "params": params,
        "trials": cover.trials,
        "balls": cover.ball_count(),
        "failure_exits": cover.failures.len(),
        "max_ball_radius": cover.max_measured_radius(),
        "max_balls_per_vertex": cover.max_balls_per_vertex(g.n()),
        "report": report,
    }))?;
    write_to(a.output.as_deref(), &balls)?;
    let stdout = match a.format {
        Format::JsonStats => stats,
        Format::Edgelist if a.output.is_none() => balls,
        Format::Edgelist => String::new(),
    };
    Ok(Outcome { ok, stdout })
}

pub fn cmd_partition(a: &PartitionArgs) -> Result<Outcome> {
    let g = read_graph(&a.input)?;
    let centers = resolve_vertex_set(&a.centers, g.n(), seed::derive_seed(a.seed, 0))?;
    let p = cluster(
        &g,
        &g.vertices(),
        &centers,
        a.radius,
        a.s,
        a.direction.into(),
        &mut seed::child_stream(a.seed, 1),
    )?;
    let text = match a.format {
        Format::JsonStats => to_json(&json!({
            "schema": PARTITION_SCHEMA,
            "seed": a.seed,
            "radius": a.radius,
            "s": a.s,
            "partition": p,
        }))?,
        Format::Edgelist => {
            let mut out = String::new();
            let join = |ids: &[usize]| ids.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
            for c in &p.clusters {
                let _ = writeln!(out, "cluster {} {}", c.center, join(&c.members));
            }
            if !p.residual.is_empty() {
                let _ = writeln!(out, "residual {}", join(&p.residual));
            }
            out
        }
    };
    write_to(a.output.as_deref(), &text)?;
    Ok(Outcome::ok(if a.output.is_some() { String::new() } else { text }))
}

/// Maps each edge of `h` to a distinct equal edge of `g`; `None` if `h` is
/// not a subgraph.
pub fn match_subgraph(g: &Graph, h: &Graph) -> Option<Vec<EdgeId>> {
    if h.n() != g.n() {
        return None;
    }
    let key = |e: &crate::graph::Edge| (e.src, e.dst, e.weight.to_bits());
    let mut pool: std::collections::HashMap<_, Vec<EdgeId>> = std::collections::HashMap::new();
    for (id, e) in g.edges().iter().enumerate().rev() {
        pool.entry(key(e)).or_default().push(id);
    }
    h.edges().iter().map(|e| pool.get_mut(&key(e))?.pop()).collect()
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<Outcome> {
    let g = read_graph(&a.input)?;
    let h = read_graph(&a.spanner)?;
    let sources = resolve_vertex_set(&a.sources, g.n(), seed::derive_seed(a.seed, 0))?;
    let bound = a.bound.unwrap_or_else(|| stretch_bound(a.k, g.n(), a.c));
    let ids = match_subgraph(&g, &h);
    let report = ids.as_ref().map(|ids| check_stretch(&g, ids, &sources, bound));
    let ok = report.as_ref().is_some_and(|r| r.pass);
    let text = to_json(&json!({
        "schema": VERIFY_SCHEMA,
        "seed": a.seed,
        "subgraph": ids.is_some(),
        "spanner_edges": h.m(),
        "sources": sources.len(),
        "stretch": report,
        "pass": ok,
    }))?;
    write_to(a.output.as_deref(), &text)?;
    Ok(Outcome { ok, stdout: text })
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub s: usize,
    pub k: u32,
    pub seed: u64,
    pub edges: usize,
    pub certificate_edges: usize,
    pub failure_exits: usize,
    pub max_stretch: Option<f64>,
    pub stretch_bound: f64,
    pub wall_ms: f64,
}

pub fn cmd_bench(a: &BenchArgs) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut ok = true;
    for (i, &n) in a.ns.iter().enumerate() {
        let m = (a.density * n).min(n * n.saturating_sub(1)).max(n);
        let spec = GraphSpec::new(n, m).weights(a.min_weight, a.max_weight).strongly_connected();
        let g = random_graph(&spec, &mut seed::child_stream(a.build.seed, i as u64))?;
        for &s in &a.ss {
            let sources = resolve_vertex_set(
                &s.min(n).to_string(),
                n,
                seed::derive_seed(a.build.seed, 1 << 32 | s as u64),
            )?;
            for &k in &a.ks {
                let build = BuildArgs { k, ..a.build.clone() };
                let start = Instant::now();
                let (h, _) = build_spanner(&g, &sources, &build, false)?;
                let wall_ms = start.elapsed().as_secs_f64() * 1e3;
                let bound = stretch_bound(k, n, a.build.c);
                let stretch = a.verify.then(|| check_stretch(&g, &h.edges, &sources, bound));
                ok &= stretch.as_ref().is_none_or(|r| r.pass);
                rows.push(BenchRow {
                    n,
                    m: g.m(),
                    s: sources.len(),
                    k,
                    seed: build.seed,
                    edges: h.edge_count(),
                    certificate_edges: h.certificate_edges,
                    failure_exits: h.failure_exits(),
                    max_stretch: stretch.map(|r| r.max_stretch),
                    stretch_bound: bound,
                    wall_ms,
                });
            }
        }
    }
    let text = match a.format {
        Format::JsonStats => to_json(&json!({ "schema": BENCH_SCHEMA, "seed": a.build.seed, "rows": rows }))?,
        Format::Edgelist => {
            let mut out = String::from("n\tm\ts\tk\tedges\tcert\tfail\tstretch\tbound\twall_ms\n");
            for r in &rows {
                let stretch = r.max_stretch.map_or("-".to_string(), |x| format!("{x:.3}"));
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.1}\t{:.1}",
                    r.n,
                    r.m,
                    r.s,
                    r.k,
                    r.edges,
                    r.certificate_edges,
                    r.failure_exits,
                    stretch,
                    r.stretch_bound,
                    r.wall_ms
                );
            }
            out
        }
    };
    write_to(a.output.as_deref(), &text)?;
    Ok(Outcome { ok, stdout: text })
}
