use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use listhom::recognizer::PatternKind;
use listhom_cli::commands;
use listhom_cli::selftest::{default_catalog, run_selftest, DEFAULT_SEED};
use listhom_cli::CliError;

#[derive(Parser)]
#[command(
    name = "listhom",
    version,
    about = "Classify list H-colouring targets and check the reductions between them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Place a target graph in the trichotomy.
    Classify {
        h: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Count list colourings of an instance.
    Count { h: PathBuf, instance: PathBuf },
    /// Exact Ising partition function of a graph.
    Ising {
        g: PathBuf,
        #[arg(long, value_name = "P/Q")]
        lambda: String,
    },
    /// Count models of an implication formula.
    CountSat { formula: PathBuf },
    /// Build, symmetrise and optionally thicken a gadget, checking every matrix.
    Gadget {
        h: PathBuf,
        #[arg(long, value_name = "KIND")]
        witness: Option<PatternKind>,
        #[arg(long)]
        t: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Compile a list colouring instance over a staircase target to a formula.
    ReduceSat {
        h: PathBuf,
        instance: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Replace every edge of a graph by a gadget for the target.
    ReduceIsing {
        g: PathBuf,
        h: PathBuf,
        #[arg(long)]
        t: Option<u32>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the built-in verification sweep.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Classify { h, json } => commands::cmd_classify(&h, json),
        Command::Count { h, instance } => commands::cmd_count(&h, &instance),
        Command::Ising { g, lambda } => commands::cmd_ising(&g, &lambda),
        Command::CountSat { formula } => commands::cmd_count_sat(&formula),
        Command::Gadget {
            h,
            witness,
            t,
            json,
        } => commands::cmd_gadget(&h, witness, t, json),
        Command::ReduceSat { h, instance, out } => commands::cmd_reduce_sat(&h, &instance, &out),
        Command::ReduceIsing { g, h, t, out } => commands::cmd_reduce_ising(&g, &h, t, &out),
        Command::Selftest { seed } => {
            let (log, passed) = run_selftest(&default_catalog(), seed);
            if passed {
                Ok(log)
            } else {
                Err(CliError::Mismatch(log))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
