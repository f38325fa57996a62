mod commands;
mod error;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::RangedU64ValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use powdom::solver::{DEFAULT_ALL_PDS_CAP, DEFAULT_MAX_N};
use powdom::Indexing;

use crate::error::CliError;
use crate::input::InputFormat;

#[derive(Parser, Debug)]
#[command(
    name = "powdom",
    version,
    about = "Power domination number and propagation radius of small graphs"
)]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

/// Options shared by every command.
#[derive(Args, Debug, Clone)]
pub struct Config {
    /// Largest order the exact solver accepts.
    #[arg(long, global = true, env = "POWDOM_MAX_N", default_value_t = DEFAULT_MAX_N,
          value_parser = RangedU64ValueParser::<usize>::new().range(1..=powdom::MAX_VERTICES as u64))]
    pub max_n: usize,
    /// Worker threads (default: one per core).
    #[arg(long, global = true, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
    pub threads: Option<usize>,
    /// Maximum number of minimum power dominating sets listed per graph.
    #[arg(long, global = true, default_value_t = DEFAULT_ALL_PDS_CAP,
          value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
    pub all_pds_cap: usize,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Solve each connected component separately.
    #[arg(long, global = true)]
    pub per_component: bool,
    /// Input format (default: from the file extension, then the content).
    #[arg(long, global = true, value_enum)]
    pub input_format: Option<InputFormat>,
    /// Vertices in edge lists and vertex arguments are numbered from 1.
    #[arg(long, global = true)]
    pub one_based: bool,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl Config {
    pub fn indexing(&self) -> Indexing {
        if self.one_based {
            Indexing::OneBased
        } else {
            Indexing::ZeroBased
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Table,
    Graph6,
    Edgelist,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    /// Lowest-index eligible vertex forces first.
    Lowest,
    /// Order given by --priority.
    Priority,
    /// Uniformly random eligible vertex, seeded by --seed.
    Random,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve, audit and optionally trace every graph in a file.
    Analyze {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        /// Include the propagation trace of the witness.
        #[arg(long)]
        trace: bool,
    },
    /// Generate a member of an extremal family.
    Family {
        name: String,
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Graph6)]
        format: OutputFormat,
        /// Solve the instance and check it against the expected profile.
        #[arg(long)]
        verify: bool,
    },
    /// Solve and audit a graph6 corpus, one result line per graph.
    Batch {
        path: PathBuf,
        /// json gives JSON Lines.
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Bound report for every graph in a file.
    Audit {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Zero forcing sequence, chains and reversal from a vertex set.
    Zf {
        path: PathBuf,
        /// Initial set (default: N[S] for the solver witness S).
        #[arg(long)]
        set: Option<String>,
        #[arg(long, value_enum, default_value_t = PolicyArg::Lowest)]
        policy: PolicyArg,
        /// Vertex order for --policy priority.
        #[arg(long)]
        priority: Option<String>,
        /// Random policies tried when checking that the reversal forces.
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = cli.config;
    let output = match cli.command {
        Command::Analyze {
            path,
            format,
            trace,
        } => commands::analyze(&path, format, trace, &cfg)?,
        Command::Family {
            name,
            params,
            format,
            verify,
        } => commands::family(&name, &params, format, verify, &cfg)?,
        Command::Batch { path, format } => commands::batch(&path, format, &cfg)?,
        Command::Audit { path, format } => commands::audit(&path, format, &cfg)?,
        Command::Zf {
            path,
            set,
            policy,
            priority,
            trials,
            format,
        } => commands::zf(
            &path,
            set.as_deref(),
            policy,
            priority.as_deref(),
            trials,
            format,
            &cfg,
        )?,
    };
    emit(&cfg, &output.text)?;
    if let Some(status) = output.failure {
        return Err(status);
    }
    Ok(())
}

fn emit(cfg: &Config, text: &str) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Usage(format!("writing output: {e}"));
    match &cfg.out {
        Some(path) => std::fs::write(path, text).map_err(io),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(io)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.code() as u8)
        }
    }
}
