//! `mubell` — exact construction and verification of mutually unbiased bases
//! and generalized Bell bases over prime-power dimensions.
//!
//! Exit codes: 0 when every exact check passes, 1 when a mathematical check
//! fails (an implementation defect), 2 on configuration errors.

mod bell_cmd;
mod config;
mod field_cmd;
mod mub_cmd;
mod render;
mod verify_cmd;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{BasisChoice, BellMode, CliError, OutputFormat, RunConfig, VerifyLevelArg};

#[derive(Parser)]
#[command(
    name = "mubell",
    about = "Exact-arithmetic toolkit for mutually unbiased bases and generalized Bell bases",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct GF(p^n): canonical modulus, bases, trace and character tables
    Field {
        #[arg(short = 'p', long)]
        p: u64,
        #[arg(short = 'n', long, default_value_t = 1)]
        n: usize,
        #[arg(long, value_enum, default_value_t = BasisChoice::Selfdual)]
        basis: BasisChoice,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long)]
        output: Option<String>,
    },
    /// Construct the complete set of p^n + 1 mutually unbiased bases
    Mub {
        #[arg(short = 'p', long)]
        p: u64,
        #[arg(short = 'n', long, default_value_t = 1)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long)]
        output: Option<String>,
        /// Skip the pairwise verification block (construction only)
        #[arg(long)]
        no_verify: bool,
    },
    /// Construct the generalized Bell basis with census and identity checks
    Bell {
        #[arg(short = 'p', long)]
        p: u64,
        #[arg(short = 'n', long, default_value_t = 1)]
        n: usize,
        #[arg(long, value_enum, default_value_t = BellMode::Multiqudit)]
        mode: BellMode,
        #[arg(long, value_enum, default_value_t = BasisChoice::Selfdual)]
        basis: BasisChoice,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long)]
        output: Option<String>,
        /// Skip the exact identity checks (construction only)
        #[arg(long)]
        no_verify: bool,
    },
    /// Run the named invariant suites and print one line per check
    Verify {
        #[arg(short = 'p', long)]
        p: Option<u64>,
        #[arg(short = 'n', long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = VerifyLevelArg::Fast)]
        level: VerifyLevelArg,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long)]
        output: Option<String>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Field { p, n, basis, format, output } => {
            let cfg = RunConfig::construction(p, n, basis, format, output)?;
            let rendered = field_cmd::run(&cfg)?;
            render::emit(&cfg.output, &rendered)
        }
        Command::Mub { p, n, format, output, no_verify } => {
            let cfg = RunConfig::construction(p, n, BasisChoice::Selfdual, format, output)?;
            let rendered = mub_cmd::run(&cfg, !no_verify)?;
            render::emit(&cfg.output, &rendered)
        }
        Command::Bell { p, n, mode, basis, format, output, no_verify } => {
            let mut cfg = RunConfig::construction(p, n, basis, format, output)?;
            cfg.set_mode(mode)?;
            let rendered = bell_cmd::run(&cfg, !no_verify)?;
            render::emit(&cfg.output, &rendered)
        }
        Command::Verify { p, n, level, format, output } => {
            let rendered = verify_cmd::run(p, n, level, format)?;
            render::emit(&output, &rendered)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code())
        }
    }
}
