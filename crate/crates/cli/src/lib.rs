//! Command implementations behind the `rigidcount` binary.

pub mod reports;

use std::path::{Path, PathBuf};

use rigid_algebra::Budget;
use rigid_basepoint::{check_centric, BasepointError};
use rigid_walks::{walk_report, SignLabeling, WalkError};
use rigidcount::calligraph::{glue, is_calligraph, Calligraph, GlueKind};
use rigidcount::invariants::{multiplicity_status, CouplerReport, InvariantError, PartitionRequest};
use rigidcount::{
    count_realizations_oracle, laman_violation, par, EngineError, Engine, EngineConfig, MarkedGraph, OracleConfig,
    OracleError,
};

use reports::*;

pub const DEFAULT_SEED: u64 = 0x5eed;
pub const CACHE_ENV: &str = "RIGIDCOUNT_CACHE";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug)]
pub struct Config {
    pub max_oracle_vertices: usize,
    pub budget: u64,
    pub seed: u64,
    pub cache: Option<PathBuf>,
    pub trace: bool,
    pub format: Format,
    pub jobs: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_oracle_vertices: 7,
            budget: Budget::default().max_reductions,
            seed: DEFAULT_SEED,
            cache: None,
            trace: false,
            format: Format::Text,
            jobs: 0,
        }
    }
}

impl Config {
    pub fn groebner_budget(&self) -> Budget {
        Budget { max_reductions: self.budget, ..Budget::default() }
    }

    pub fn oracle_config(&self) -> OracleConfig {
        OracleConfig { max_vertices: self.max_oracle_vertices, budget: self.groebner_budget(), ..OracleConfig::default() }
    }

    pub fn engine_config(&self) -> EngineConfig {
        EngineConfig { oracle: self.oracle_config(), seed: self.seed, trace: self.trace, ..EngineConfig::default() }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.max_oracle_vertices == 0 || self.budget == 0 {
            return Err(CliError::Usage("--max-oracle-vertices and --budget must be positive".into()));
        }
        Ok(())
    }
}

/// Exit codes: 2 parse/usage, 3 not minimally rigid, 4 oracle or Gröbner resources,
/// 5 other module failures, 1 I/O.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not minimally rigid: {0}")]
    NotRigid(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("{0}")]
    Module(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::NotRigid(_) => 3,
            CliError::Resource(_) => 4,
            CliError::Module(_) => 5,
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::NotMinimallyRigid(v) => CliError::NotRigid(v.to_string()),
            EngineError::NotCalligraph => CliError::NotRigid("input is not a calligraph".into()),
            EngineError::Oracle(o) => o.into(),
            EngineError::Graph(g) => CliError::Module(g.to_string()),
            EngineError::Inconsistent(m) => CliError::Module(m),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::NotMinimallyRigid => CliError::NotRigid(e.to_string()),
            OracleError::TooLarge { .. } | OracleError::Budget(_) | OracleError::NonGeneric(_) => {
                CliError::Resource(e.to_string())
            }
            other => CliError::Module(other.to_string()),
        }
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        CliError::Module(e.to_string())
    }
}

impl From<BasepointError> for CliError {
    fn from(e: BasepointError) -> Self {
        match e {
            BasepointError::Budget(m) => CliError::Resource(m),
            other => CliError::Module(other.to_string()),
        }
    }
}

impl From<WalkError> for CliError {
    fn from(e: WalkError) -> Self {
        CliError::Module(e.to_string())
    }
}

pub fn load_graph(path: &Path) -> Result<MarkedGraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    MarkedGraph::parse(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn load_calligraph(path: &Path) -> Result<Calligraph, CliError> {
    let g = load_graph(path)?;
    if !g.has_vertex(0) {
        return Err(CliError::NotRigid(format!("{}: a calligraph needs vertex 0", path.display())));
    }
    if !is_calligraph(&g) {
        let detail = laman_violation(&glue(&g, GlueKind::C)).map_or_else(String::new, |v| format!(" (G with C_v: {v})"));
        return Err(CliError::NotRigid(format!("{}: not a calligraph{detail}", path.display())));
    }
    Ok(Calligraph::new(g).expect("checked above"))
}

fn trace_json(node: &rigidcount::TraceNode) -> TraceJson {
    serde_json::from_value(node.to_json()).expect("trace nodes match the report schema")
}

/// Engine with the persistent cache loaded; problems with the cache only produce warnings.
fn engine(cfg: &Config, warn: &mut dyn FnMut(String)) -> Engine {
    let engine = Engine::new(cfg.engine_config());
    if let Some(path) = &cfg.cache {
        if path.exists() {
            if let Err(e) = engine.load_cache_file(path) {
                warn(format!("ignoring cache {}: {e}", path.display()));
            }
        }
    }
    engine
}

fn save_cache(cfg: &Config, engine: &Engine, warn: &mut dyn FnMut(String)) {
    if let Some(path) = &cfg.cache {
        if let Err(e) = engine.save_cache_file(path) {
            warn(format!("could not write cache {}: {e}", path.display()));
        }
    }
}

pub fn cmd_count(cfg: &Config, path: &Path, warn: &mut dyn FnMut(String)) -> Result<CountReport, CliError> {
    let g = load_graph(path)?;
    if let Some(v) = laman_violation(&g) {
        return Err(CliError::NotRigid(v.to_string()));
    }
    let engine = engine(cfg, warn);
    let result = par::with_jobs(cfg.jobs, || engine.get_nor(&g))?;
    save_cache(cfg, &engine, warn);
    Ok(CountReport { count: BigNum(result.count), trace: result.trace.as_deref().map(trace_json) })
}

pub fn cmd_class(cfg: &Config, path: &Path, warn: &mut dyn FnMut(String)) -> Result<ClassReport, CliError> {
    let c = load_calligraph(path)?;
    let engine = engine(cfg, warn);
    let result = par::with_jobs(cfg.jobs, || engine.get_class(&c))?;
    save_cache(cfg, &engine, warn);
    Ok(ClassReport { class: (&result.class).into(), trace: result.trace.as_deref().map(trace_json) })
}

/// Partition request of the `invariants` command.
#[derive(Clone, Debug, Default)]
pub struct InvariantsArgs {
    pub n: Option<usize>,
    pub degrees: Vec<i64>,
    pub min_sing: u64,
    /// Other calligraphs to intersect with.
    pub with: Vec<PathBuf>,
}

pub fn cmd_invariants(
    cfg: &Config,
    path: &Path,
    args: &InvariantsArgs,
    warn: &mut dyn FnMut(String),
) -> Result<InvariantsReport, CliError> {
    let c = load_calligraph(path)?;
    if !args.degrees.is_empty() && args.n.is_some_and(|n| n != args.degrees.len()) {
        return Err(CliError::Usage(format!("{} degrees given for n = {}", args.degrees.len(), args.n.unwrap_or(0))));
    }
    let engine = engine(cfg, warn);
    let class_of = |c: &Calligraph| par::with_jobs(cfg.jobs, || engine.get_class(c)).map(|r| r.class);
    let cls = class_of(&c)?;
    let n = args.n.or((!args.degrees.is_empty()).then_some(args.degrees.len()));
    let request = n.map(|n| PartitionRequest {
        n,
        degrees: (!args.degrees.is_empty()).then(|| args.degrees.clone()),
        min_sing: args.min_sing,
        discard_negative: true,
    });
    let mut others = Vec::new();
    for p in &args.with {
        let other = load_calligraph(p)?;
        let oc = class_of(&other)?;
        let m = multiplicity_status(&other, &oc)?
            .known()
            .ok_or_else(|| CliError::Module(format!("{}: multiplicity is not determined", p.display())))?;
        let name = p.file_stem().map_or_else(|| p.display().to_string(), |s| s.to_string_lossy().into_owned());
        others.push((name, oc, m));
    }
    save_cache(cfg, &engine, warn);
    let report = CouplerReport::build(&c, &cls, request.as_ref(), &others)?;
    Ok(serde_json::from_value(report.to_json()).expect("coupler report matches the schema"))
}

pub fn cmd_centric(cfg: &Config, path: &Path) -> Result<CentricReport, CliError> {
    let c = load_calligraph(path)?;
    let verdict = check_centric(&c, &cfg.groebner_budget())?;
    Ok(serde_json::from_value(verdict.to_json()).expect("verdict matches the schema"))
}

pub fn cmd_oracle(cfg: &Config, path: &Path) -> Result<OracleReport, CliError> {
    let g = load_graph(path)?;
    if let Some(v) = laman_violation(&g) {
        return Err(CliError::NotRigid(v.to_string()));
    }
    let oc = cfg.oracle_config();
    let count = par::with_jobs(cfg.jobs, || count_realizations_oracle(&g, cfg.seed, &oc))?;
    Ok(OracleReport { count, seed: cfg.seed, max_vertices: oc.max_vertices })
}

/// Labeling source of the `walks` command; all edges positive when neither is given.
#[derive(Clone, Debug, Default)]
pub struct WalksArgs {
    pub labeling: Option<PathBuf>,
    pub labeling_seed: Option<u64>,
}

pub fn cmd_walks(path: &Path, args: &WalksArgs) -> Result<WalksReport, CliError> {
    let g = load_graph(path)?;
    let tau = match (&args.labeling, args.labeling_seed) {
        (Some(p), _) => {
            let text = std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            SignLabeling::parse_text(&g, &text).map_err(|e| CliError::Parse(format!("{}: {e}", p.display())))?
        }
        (None, Some(seed)) => {
            use rand::SeedableRng;
            SignLabeling::random(&g, &mut rand_chacha::ChaCha8Rng::seed_from_u64(seed))
        }
        (None, None) => SignLabeling::all_positive(&g),
    };
    let report = walk_report(&g, &tau)?;
    Ok(serde_json::from_value(report).expect("walk report matches the schema"))
}

pub fn to_json_string<T: serde::Serialize>(report: &T) -> String {
    serde_json::to_string_pretty(report).expect("reports serialize")
}

fn trace_lines(node: &TraceJson, depth: usize, out: &mut String) {
    let n = node.graph.get("vertices").and_then(|v| v.as_array()).map_or(0, |v| v.len());
    out.push_str(&format!("{}{} n={} value={}\n", "  ".repeat(depth), node.method, n, node.value));
    for c in &node.children {
        trace_lines(c, depth + 1, out);
    }
}

pub fn count_text(r: &CountReport) -> String {
    let mut out = format!("{}\n", r.count.0);
    if let Some(t) = &r.trace {
        trace_lines(t, 0, &mut out);
    }
    out
}

pub fn class_text(r: &ClassReport) -> String {
    let mut out = format!("{}\n", r.class.to_class());
    if let Some(t) = &r.trace {
        trace_lines(t, 0, &mut out);
    }
    out
}

pub fn invariants_text(r: &InvariantsReport) -> String {
    let mut out = format!("class {}\n", r.class.to_class());
    match (r.multiplicity.m, &r.multiplicity.reason) {
        (Some(m), Some(reason)) => out.push_str(&format!("multiplicity {m} ({reason})\n")),
        _ => out.push_str(&format!("multiplicity unknown, candidates {:?}\n", r.multiplicity.candidates.clone().unwrap_or_default())),
    }
    if let Some(d) = &r.degree {
        out.push_str(&format!("degree {}\n", d.0));
    }
    for p in &r.partitions {
        let parts: Vec<String> = p.parts.iter().map(|q| format!("({},{},{})", q[0], q[1], q[2])).collect();
        out.push_str(&format!("partition {} degrees {:?} genus {:?}\n", parts.join(" "), p.degrees, p.genus_bounds));
    }
    for i in &r.intersections {
        out.push_str(&format!("intersection with {}: {}\n", i.with, i.value));
    }
    out
}

pub fn centric_text(r: &CentricReport) -> String {
    let mut out = match (&r.certificate, &r.reason) {
        (Some(c), _) => format!("{} ({c})\n", r.verdict),
        (None, Some(reason)) => format!("{} at condition {}: {reason}\n", r.verdict, r.step.unwrap_or(0)),
        _ => format!("{}\n", r.verdict),
    };
    for c in &r.conditions {
        let at = c.c.as_ref().map_or_else(String::new, |c| format!(" c={c}"));
        out.push_str(&format!("condition {}{at}: {}\n", c.condition, c.status));
    }
    out
}

pub fn oracle_text(r: &OracleReport) -> String {
    format!("{}\n", r.count)
}

pub fn walks_text(r: &WalksReport) -> String {
    let mut out = format!("route {:?}\n", r.route);
    for step in &r.chain {
        let name = step.delta.map_or_else(|| "L0".to_string(), |v| format!("D{v}"));
        out.push_str(&format!("{name}: {}\n", step.walks.join(" ")));
    }
    out.push_str(&format!("final ideal <{}>\n", r.final_ideal.join(", ")));
    out.push_str(&format!("b0 ideal {}\n", r.b0_ideal));
    for (k, v) in &r.checks {
        out.push_str(&format!("{k}: {}\n", if *v { "ok" } else { "FAILED" }));
    }
    out
}
