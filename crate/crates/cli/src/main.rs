use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rigidcount_cli::*;

#[derive(Parser)]
#[command(name = "rigidcount", version, about = "Count complex realizations of minimally rigid graphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Seed for random edge lengths and linear forms.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Persistent cache file; the RIGIDCOUNT_CACHE environment variable takes precedence.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Include the execution tree in the report.
    #[arg(long, global = true)]
    trace: bool,
    #[arg(long, global = true, default_value_t = 7)]
    max_oracle_vertices: usize,
    /// Maximum reduction steps per Gröbner computation.
    #[arg(long, global = true, default_value_t = 50_000_000)]
    budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Number of realizations c(G) of a minimally rigid graph.
    Count { graph: PathBuf },
    /// Class [G] of a calligraph.
    Class { graph: PathBuf },
    /// Coupler-curve invariants of a calligraph.
    Invariants {
        graph: PathBuf,
        /// Number of components.
        n: Option<usize>,
        /// Degree of each component.
        degrees: Vec<i64>,
        /// Lower bound on singular points per component used by the genus filter.
        #[arg(long, default_value_t = 0)]
        min_sing: u64,
        /// Another calligraph to intersect with (repeatable).
        #[arg(long = "with")]
        with: Vec<PathBuf>,
    },
    /// Centricity check of a calligraph.
    Centric { graph: PathBuf },
    /// Count realizations directly by Gröbner bases.
    Oracle { graph: PathBuf },
    /// Walk reduction and elimination checks.
    Walks {
        graph: PathBuf,
        /// Sign labeling file with lines "u v +" or "u v -".
        #[arg(long, conflicts_with = "labeling_seed")]
        labeling: Option<PathBuf>,
        /// Draw a random sign labeling from this seed.
        #[arg(long)]
        labeling_seed: Option<u64>,
    },
}

fn emit<T: serde::Serialize>(format: Format, report: &T, text: impl Fn(&T) -> String) {
    match format {
        Format::Json => println!("{}", to_json_string(report)),
        Format::Text => print!("{}", text(report)),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let g = cli.global;
    let cache = std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from).or(g.cache);
    let cfg = Config {
        max_oracle_vertices: g.max_oracle_vertices,
        budget: g.budget,
        seed: g.seed,
        cache,
        trace: g.trace,
        format: g.format,
        jobs: g.jobs,
    };
    cfg.validate()?;
    let mut warn = |m: String| eprintln!("warning: {m}");
    match cli.command {
        Command::Count { graph } => emit(cfg.format, &cmd_count(&cfg, &graph, &mut warn)?, count_text),
        Command::Class { graph } => emit(cfg.format, &cmd_class(&cfg, &graph, &mut warn)?, class_text),
        Command::Invariants { graph, n, degrees, min_sing, with } => {
            let args = InvariantsArgs { n, degrees, min_sing, with };
            emit(cfg.format, &cmd_invariants(&cfg, &graph, &args, &mut warn)?, invariants_text)
        }
        Command::Centric { graph } => emit(cfg.format, &cmd_centric(&cfg, &graph)?, centric_text),
        Command::Oracle { graph } => emit(cfg.format, &cmd_oracle(&cfg, &graph)?, oracle_text),
        Command::Walks { graph, labeling, labeling_seed } => {
            emit(cfg.format, &cmd_walks(&graph, &WalksArgs { labeling, labeling_seed })?, walks_text)
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
