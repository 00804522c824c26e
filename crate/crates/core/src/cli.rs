//! `theta-forge` command-line frontend.
//!
//! Exit codes: 0 pass, 1 check failed (witness printed), 2 usage or input error.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::bound_report_for_graph;
use crate::construct::{
    build_norm_set, search_max_bounded_secant, AuditStrategy, ConstructionParams, PointSet,
    SearchMode, DEFAULT_SEARCH_CAP,
};
use crate::gf::{prime_power, Gf};
use crate::graph::io::{read_graph, write_graph, GraphFile, GraphFormat};
use crate::linrep::{build_linear_representation, LinrepConfig, DEFAULT_MAX_EDGES};
use crate::oracle::{self, OracleConfig};
use crate::verify::{find_c4, verify_girth, verify_theta_free, ThetaOptions, VerificationReport};

pub const MAX_EDGES_ENV: &str = "THETA_FORGE_MAX_EDGES";

#[derive(Parser, Debug)]
#[command(
    name = "theta-forge",
    version,
    about = "Norm-set incidence graphs and their forbidden-subgraph certificates"
)]
pub struct Cli {
    /// Worker threads for parallel stages. Results do not depend on this.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build and audit the norm set for GF(q^t) in PG(t+1, q).
    Construct {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also audit by enumerating every line (small ambient spaces only).
        #[arg(long)]
        oracle: bool,
    },
    /// Linear representation of an audited point set, as an edge list.
    Build {
        #[arg(long)]
        pointset: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Declared t written to the graph header; defaults to the audited maximum secant.
        #[arg(long)]
        t: Option<usize>,
    },
    /// Certify a graph file against a forbidden subgraph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        check: CheckKind,
        /// θ path count; defaults to the `t` field of the graph header.
        #[arg(long)]
        t: Option<usize>,
        /// Smallest acceptable girth for `--check girth`.
        #[arg(long, default_value_t = 8)]
        min_girth: usize,
        /// Compute exact per-pair path maxima for the θ check.
        #[arg(long)]
        exact: bool,
        /// Re-run the check with the brute-force oracle (at most 60 vertices).
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Exponent and density diagnostics for a graph file.
    Stats {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-export a graph file in another format.
    Export {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatKind::Edgelist)]
        format: FormatKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Largest point set of PG(n,q) with no t+1 points on a line.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value_t = ModeKind::Exhaustive)]
        mode: ModeKind,
        /// Largest ambient point count accepted by exhaustive mode.
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
        cap: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CheckKind {
    C4,
    Theta,
    Girth,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatKind {
    Edgelist,
    Adjacency,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeKind {
    Exhaustive,
    Greedy,
}

/// Accompanies every output file as `<out>.manifest.json`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct RunManifest {
    pub subcommand: String,
    pub q: Option<u32>,
    pub p: Option<u32>,
    pub e: Option<u32>,
    pub t: Option<usize>,
    pub seed: Option<u64>,
    /// Base-field modulus, then the extension modulus when there is one.
    pub moduli: Vec<Vec<u32>>,
    pub options: Vec<(String, String)>,
    pub inputs: Vec<String>,
    pub outputs: Vec<String>,
    pub tool_version: String,
    pub wall_time_ms: f64,
}

impl RunManifest {
    fn new(subcommand: &str) -> Self {
        RunManifest {
            subcommand: subcommand.into(),
            tool_version: env!("CARGO_PKG_VERSION").into(),
            ..Default::default()
        }
    }

    fn field(&mut self, f: &Gf) {
        self.q = Some(f.q());
        self.p = Some(f.p());
        self.e = Some(f.e());
        self.moduli.push(f.params().modulus.clone());
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let jobs = cli.jobs;
    match crate::with_jobs(jobs, || execute(cli.command)) {
        Ok(passed) => i32::from(!passed),
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

fn validated_field(q: u64, seed: u64) -> anyhow::Result<Gf> {
    if prime_power(q).is_none() {
        bail!("q = {q} is not a prime power");
    }
    Ok(Gf::new(q, seed)?)
}

fn max_edges() -> anyhow::Result<u128> {
    match std::env::var(MAX_EDGES_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{MAX_EDGES_ENV}=`{v}` is not an integer")),
        Err(_) => Ok(DEFAULT_MAX_EDGES),
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_graph_file(path: &Path) -> anyhow::Result<GraphFile> {
    read_graph(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

/// Writes `text` to `out` (plus its manifest) or to stdout.
fn emit(
    text: &str,
    out: Option<&Path>,
    mut manifest: RunManifest,
    start: Instant,
) -> anyhow::Result<()> {
    match out {
        None => print!("{text}"),
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            manifest.outputs.push(path.display().to_string());
            manifest.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
            let mpath = manifest_path(path);
            let json = serde_json::to_string_pretty(&manifest)?;
            fs::write(&mpath, json + "\n")
                .with_context(|| format!("writing {}", mpath.display()))?;
        }
    }
    Ok(())
}

pub fn manifest_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".manifest.json");
    PathBuf::from(s)
}

fn execute(cmd: Command) -> anyhow::Result<bool> {
    let start = Instant::now();
    match cmd {
        Command::Construct {
            q,
            t,
            seed,
            out,
            oracle,
        } => {
            let f = validated_field(q, seed)?;
            let params = ConstructionParams::new(f.clone(), t)?;
            let ns = build_norm_set(&params, seed)?;
            let cfg = OracleConfig::default();
            let mut set = ns.set;
            if oracle && !oracle::secant_audit_in_cap(&set, &cfg) {
                bail!(
                    "ambient space PG({}, {q}) exceeds the oracle cap of {} points",
                    set.n(),
                    cfg.max_ambient_points
                );
            }
            let k = set.audit(AuditStrategy::Auto(cfg))?;
            eprintln!("points: {}\nmax_secant: {k}", set.len());
            let mut m = RunManifest::new("construct");
            m.field(&f);
            m.moduli
                .push(ns.ext.modulus().iter().map(|c| c.value()).collect());
            m.t = Some(t);
            m.seed = Some(seed);
            let comments = vec![
                format!("norm set q={q} t={t} seed={seed}"),
                format!("max_secant {k}"),
            ];
            emit(&set.to_text(&comments), out.as_deref(), m, start)?;
            Ok(true)
        }
        Command::Build { pointset, out, t } => {
            let (set, _) = PointSet::parse(&read(&pointset)?)
                .with_context(|| format!("parsing {}", pointset.display()))?;
            let set = set.audited(AuditStrategy::default())?;
            let k = set.max_secant().expect("audited");
            if let Some(t) = t {
                if k > t {
                    bail!("point set has a {k}-secant, more than the declared t = {t}");
                }
            }
            let ig = build_linear_representation(
                &set,
                &LinrepConfig {
                    max_edges: max_edges()?,
                },
            )?
            .with_t(t.unwrap_or(k));
            eprintln!(
                "P: {}\nL: {}\nE: {}",
                ig.point_count(),
                ig.line_count(),
                ig.edge_count()
            );
            let mut m = RunManifest::new("build");
            m.field(set.field());
            m.t = ig.t();
            m.inputs.push(pointset.display().to_string());
            emit(
                &write_graph(&ig.to_file(), GraphFormat::EdgeList),
                out.as_deref(),
                m,
                start,
            )?;
            Ok(true)
        }
        Command::Verify {
            graph,
            check,
            t,
            min_girth,
            exact,
            oracle,
            report,
        } => {
            let file = read_graph_file(&graph)?;
            let g = &file.graph;
            let t = t.or(file.meta.t);
            let rep: VerificationReport = match check {
                CheckKind::C4 => find_c4(g),
                CheckKind::Theta => {
                    let t =
                        t.ok_or_else(|| anyhow!("--t is required (the graph header has no t)"))?;
                    verify_theta_free(g, t, ThetaOptions { exact_stats: exact })?
                }
                CheckKind::Girth => verify_girth(g, min_girth),
            };
            if let Some(w) = &rep.witness {
                w.replay(g)
                    .map_err(|e| anyhow!("internal error: witness does not replay: {e}"))?;
            }
            eprintln!("elapsed_ms: {:.3}", rep.stats.elapsed.as_secs_f64() * 1e3);
            if oracle {
                let cfg = OracleConfig::default();
                let brute_pass = match check {
                    CheckKind::C4 => !oracle::brute_c4(g, &cfg)?,
                    CheckKind::Theta => {
                        oracle::brute_theta_free(g, t.expect("checked above"), &cfg)?
                    }
                    CheckKind::Girth => bail!("no oracle is available for the girth check"),
                };
                if brute_pass != rep.passed() {
                    bail!(
                        "oracle disagrees: fast check says {}, brute force says {}",
                        rep.passed(),
                        brute_pass
                    );
                }
                eprintln!("oracle: agrees");
            }
            let text = rep.render();
            print!("{text}");
            if let Some(path) = report {
                let mut m = RunManifest::new("verify");
                m.t = t;
                m.q = file.meta.q;
                m.inputs.push(graph.display().to_string());
                let name = match check {
                    CheckKind::C4 => "c4",
                    CheckKind::Theta => "theta",
                    CheckKind::Girth => "girth",
                };
                m.options.push(("check".into(), name.into()));
                emit(&text, Some(&path), m, start)?;
            }
            Ok(rep.passed())
        }
        Command::Stats { graph, t, out } => {
            let file = read_graph_file(&graph)?;
            let t = t
                .or(file.meta.t)
                .ok_or_else(|| anyhow!("--t is required (the graph header has no t)"))?;
            let r = bound_report_for_graph(&file.graph, t)?;
            let mut m = RunManifest::new("stats");
            m.t = Some(t);
            m.q = file.meta.q;
            m.inputs.push(graph.display().to_string());
            emit(&r.render(), out.as_deref(), m, start)?;
            Ok(true)
        }
        Command::Export { graph, format, out } => {
            let file = read_graph_file(&graph)?;
            let (fmt, name) = match format {
                FormatKind::Edgelist => (GraphFormat::EdgeList, "edgelist"),
                FormatKind::Adjacency => (GraphFormat::Adjacency, "adjacency"),
            };
            let mut m = RunManifest::new("export");
            m.inputs.push(graph.display().to_string());
            m.options.push(("format".into(), name.into()));
            emit(&write_graph(&file, fmt), out.as_deref(), m, start)?;
            Ok(true)
        }
        Command::Search {
            n,
            q,
            t,
            mode,
            cap,
            seed,
            out,
        } => {
            let f = validated_field(q, seed)?;
            let (sm, name) = match mode {
                ModeKind::Exhaustive => (SearchMode::Exhaustive, "exhaustive"),
                ModeKind::Greedy => (SearchMode::Greedy, "greedy"),
            };
            let set = search_max_bounded_secant(&f, n, t, sm, cap)?;
            eprintln!(
                "size: {}\nmax_secant: {}",
                set.len(),
                set.max_secant().expect("audited")
            );
            let mut m = RunManifest::new("search");
            m.field(&f);
            m.t = Some(t);
            m.seed = Some(seed);
            m.options.push(("n".into(), n.to_string()));
            m.options.push(("mode".into(), name.into()));
            let comments = vec![
                format!("{name} search n={n} q={q} t={t}"),
                format!("size {}", set.len()),
            ];
            emit(&set.to_text(&comments), out.as_deref(), m, start)?;
            Ok(true)
        }
    }
}
