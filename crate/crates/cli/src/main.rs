use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kfin_cli::cache::{Cache, CACHE_DIR_ENV};
use kfin_cli::commands::{run_bounds, run_ffin, run_growth, run_trace_matrix, run_verify_command, Context};
use kfin_cli::error::{CliResult, EXIT_VERIFY_FAILED};
use kfin_cli::reports::Format;
use kfin_core::bounds::ManifoldFlags;
use kfin_core::GroupOptions;

/// Torsion-class invariants, traces and conjugacy growth of finitely
/// generated groups.
#[derive(Parser, Debug)]
#[command(name = "kfin", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// JSON output (default).
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Tab-separated text output.
    #[arg(long, global = true)]
    table: bool,
    /// Word-length radius for growth measurements and ball searches.
    #[arg(long, global = true, default_value_t = 8)]
    radius: u32,
    /// Directory for cached JSON reports.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
    /// Largest word-length ball to build.
    #[arg(long, global = true, default_value_t = GroupOptions::default().ball_cap)]
    max_ball: usize,
    /// Largest group to enumerate.
    #[arg(long, global = true, default_value_t = GroupOptions::default().enumeration_cap)]
    max_order: usize,
    /// Iteration limit for element orders.
    #[arg(long, global = true, default_value_t = GroupOptions::default().order_cap)]
    order_cap: u64,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for `verify`.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Power-conjugacy classes of torsion elements, F and F^pol.
    Ffin { spec: String },
    /// Conjugacy-class growth of an element.
    Growth { spec: String, element: String },
    /// Trace matrix over the torsion class representatives.
    TraceMatrix { spec: String },
    /// Rank bounds and manifold bounds.
    Bounds {
        spec: String,
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        oriented: bool,
        #[arg(long)]
        spin_psc: bool,
    },
    /// Closed forms against enumeration over a corpus.
    Verify {
        /// One group spec per line.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> CliResult<(String, bool)> {
    let g = cli.global;
    let ctx = Context {
        options: GroupOptions {
            order_cap: g.order_cap,
            enumeration_cap: g.max_order,
            ball_cap: g.max_ball,
        },
        radius: g.radius,
        format: if g.table { Format::Table } else { Format::Json },
        cache: g.cache_dir.map(Cache::new).transpose()?,
        seed: g.seed,
        workers: g.workers,
    };
    let ok = |s: String| (s, true);
    Ok(match cli.command {
        Command::Ffin { spec } => ok(run_ffin(&ctx, &spec)?),
        Command::Growth { spec, element } => ok(run_growth(&ctx, &spec, &element)?),
        Command::TraceMatrix { spec } => ok(run_trace_matrix(&ctx, &spec)?),
        Command::Bounds {
            spec,
            dim,
            oriented,
            spin_psc,
        } => ok(run_bounds(&ctx, &spec, dim, ManifoldFlags { oriented, spin_psc })?),
        Command::Verify { corpus } => run_verify_command(&ctx, corpus.as_deref())?,
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((text, passed)) => {
            print!("{text}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY_FAILED as u8)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
