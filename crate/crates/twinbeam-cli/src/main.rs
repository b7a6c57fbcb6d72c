//! Command-line front end: single-point analysis, parameter sweeps, the
//! built-in figure datasets, and the analytic-vs-oracle verification suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or config error,
//! 3 truncation-capped result (output still written, flagged as a lower
//! bound).

mod analyze;
mod config;
mod figures;
mod output;
mod sweep;
mod verify_cmd;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use twinbeam::verify::VerifyOptions;
use twinbeam::TwinBeamParams;

use crate::config::{AxisRange, OutputKey, SweepConfig};
use crate::figures::{FigureId, FigureOptions};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_TRUNCATED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "twinbeam",
    about = "Entanglement, nonclassicality, and dimensionality of noisy twin beams",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a single parameter point and print a JSON report
    Analyze(AnalyzeArgs),
    /// Sweep a parameter grid and print CSV
    Sweep(SweepArgs),
    /// Emit one of the built-in figure datasets as CSV
    Figure(FigureArgs),
    /// Run the analytic-vs-oracle verification suite
    Verify(VerifyArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Mean photon-pair number per mode
    #[arg(long, allow_negative_numbers = true)]
    bp: f64,
    /// Mean signal-noise photons per mode
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    bs: f64,
    /// Mean idler-noise photons per mode
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    bi: f64,
    /// Also compute the Fock-oracle cross-checks
    #[arg(long)]
    oracle: bool,
    /// Truncation error budget for the oracle
    #[arg(long, default_value_t = 1e-12)]
    eps_trunc: f64,
    /// Override the Fock cutoff chosen from eps-trunc
    #[arg(long)]
    nmax: Option<usize>,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Sweep config file (TOML); mutually exclusive with the grid flags
    #[arg(long)]
    config: Option<PathBuf>,
    /// Pair-number values, comma separated
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    bp: Vec<f64>,
    /// Signal-noise axis as start[:stop:steps]
    #[arg(long)]
    bs: Option<String>,
    /// Idler-noise axis as start[:stop:steps]
    #[arg(long)]
    bi: Option<String>,
    /// Output columns, comma separated
    #[arg(long, value_delimiter = ',')]
    outputs: Vec<String>,
    /// Add Fock-oracle cross-check columns
    #[arg(long)]
    oracle: bool,
    /// Truncation error budget for the oracle
    #[arg(long, default_value_t = 1e-12)]
    eps_trunc: f64,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FigureArgs {
    /// Which dataset to emit
    #[arg(long)]
    figure: FigureId,
    /// Grid steps per axis
    #[arg(long, default_value_t = 101)]
    resolution: usize,
    /// Truncation error budget for oracle-backed datasets
    #[arg(long, default_value_t = 1e-12)]
    eps_trunc: f64,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Coarser grids, for a fast smoke run
    #[arg(long)]
    quick: bool,
    /// Truncation error budget for the oracle grid
    #[arg(long, default_value_t = 1e-12)]
    eps_trunc: f64,
    /// Evaluate the entropy relation with a wrong constant so the suite's
    /// sensitivity can be exercised
    #[arg(long, hide = true)]
    inject_entropy_constant_fault: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze(args) => {
            let params = TwinBeamParams::new(args.bp, args.bs, args.bi)?;
            let opts = analyze::AnalyzeOptions {
                oracle: args.oracle,
                eps_trunc: args.eps_trunc,
                n_max_override: args.nmax,
            };
            let mut sink = output::open_sink(&args.out)?;
            let truncated = analyze::run(&params, &opts, sink.as_mut())?;
            Ok(exit_maybe_truncated(truncated))
        }
        Command::Sweep(args) => {
            let config = sweep_config(&args)?;
            let mut sink = output::open_sink(&args.out)?;
            let truncated = sweep::run(&config, sink.as_mut())?;
            Ok(exit_maybe_truncated(truncated))
        }
        Command::Figure(args) => {
            let opts = FigureOptions {
                resolution: args.resolution,
                eps_trunc: args.eps_trunc,
            };
            let mut sink = output::open_sink(&args.out)?;
            let truncated = figures::run(args.figure, &opts, sink.as_mut())?;
            Ok(exit_maybe_truncated(truncated))
        }
        Command::Verify(args) => {
            let opts = VerifyOptions {
                quick: args.quick,
                eps_trunc: args.eps_trunc,
                entropy_constant_fault: args.inject_entropy_constant_fault,
            };
            let passed = verify_cmd::run(&opts)?;
            Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY_FAILED)
            })
        }
    }
}

fn exit_maybe_truncated(truncated: bool) -> ExitCode {
    if truncated {
        ExitCode::from(EXIT_TRUNCATED)
    } else {
        ExitCode::SUCCESS
    }
}

fn sweep_config(args: &SweepArgs) -> Result<SweepConfig> {
    if let Some(path) = &args.config {
        if !args.bp.is_empty() || args.bs.is_some() || args.bi.is_some() || !args.outputs.is_empty()
        {
            bail!("--config excludes the --bp/--bs/--bi/--outputs grid flags");
        }
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read config {}", path.display()))?;
        return SweepConfig::from_toml(&text);
    }
    if args.bp.is_empty() {
        bail!("either --config or --bp is required");
    }
    let outputs = if args.outputs.is_empty() {
        vec![
            OutputKey::Negativity,
            OutputKey::Tau,
            OutputKey::KEnt,
            OutputKey::RS,
            OutputKey::RI,
            OutputKey::SS,
            OutputKey::SI,
        ]
    } else {
        args.outputs
            .iter()
            .map(|s| OutputKey::parse(s))
            .collect::<Result<Vec<_>>>()?
    };
    let config = SweepConfig {
        b_p_values: args.bp.clone(),
        b_s_range: parse_axis(args.bs.as_deref(), "--bs")?,
        b_i_range: parse_axis(args.bi.as_deref(), "--bi")?,
        outputs,
        oracle: args.oracle,
        eps_trunc: args.eps_trunc,
        mode_counts: None,
    };
    config.validate()?;
    Ok(config)
}

fn parse_axis(text: Option<&str>, flag: &str) -> Result<AxisRange> {
    let Some(text) = text else {
        return Ok(AxisRange::fixed(0.0));
    };
    let parts: Vec<&str> = text.split(':').collect();
    let parse = |s: &str| -> Result<f64> {
        s.parse::<f64>()
            .map_err(|_| anyhow!("{flag}: cannot parse {s:?} as a number"))
    };
    match parts.as_slice() {
        [v] => Ok(AxisRange::fixed(parse(v)?)),
        [start, stop, steps] => Ok(AxisRange {
            start: parse(start)?,
            stop: parse(stop)?,
            steps: steps
                .parse::<usize>()
                .map_err(|_| anyhow!("{flag}: cannot parse {steps:?} as a step count"))?,
        }),
        _ => bail!("{flag}: expected VALUE or START:STOP:STEPS"),
    }
}
