use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use ppwin_core::{ExpSumKind, Variant};

/// Windowed counts of sums of two prime powers and the checks behind them.
#[derive(Debug, Parser)]
#[command(name = "ppwin", version)]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "PPWIN_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Window total over (N, N+H] with the predicted main term.
    Count(CountArgs),
    /// Density constants and admissible window ranges.
    Predict(PredictArgs),
    /// Evaluate one exponential sum.
    Expsum(ExpsumArgs),
    /// Run identity and bound checks.
    Verify(VerifyArgs),
    /// Run a sweep described by a TOML file.
    Sweep(SweepArgs),
}

/// Accepts plain integers and exact scientific forms such as `1e8`.
pub fn parse_count(s: &str) -> Result<u64, String> {
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    let x: f64 = s.parse().map_err(|_| format!("not a number: {s}"))?;
    if x >= 0.0 && x.fract() == 0.0 && x < 9.2e18 {
        Ok(x as u64)
    } else {
        Err(format!("not a nonnegative integer: {s}"))
    }
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse().map_err(|e: ppwin_core::Error| e.to_string())
}

fn parse_kind(s: &str) -> Result<ExpSumKind, String> {
    s.parse().map_err(|e: ppwin_core::Error| e.to_string())
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("window").required(true).args(["h", "h_exp"])))]
#[command(group(ArgGroup::new("cutoff").args(["a", "d"])))]
pub struct CountArgs {
    #[arg(long)]
    pub l1: u32,
    #[arg(long)]
    pub l2: u32,
    #[arg(long, value_parser = parse_variant)]
    pub variant: Variant,
    #[arg(long = "N", value_parser = parse_count)]
    pub n: u64,
    #[arg(long = "H", value_parser = parse_count)]
    pub h: Option<u64>,
    /// H = floor(N^x).
    #[arg(long = "H-exp")]
    pub h_exp: Option<f64>,
    /// Cutoff A for the truncated variants.
    #[arg(long = "A")]
    pub a: Option<f64>,
    /// Cutoff A = A(N, d) for the truncated variants (default d = 1).
    #[arg(long)]
    pub d: Option<f64>,
    /// Weight each n by exp(-n/N).
    #[arg(long)]
    pub damped: bool,
    /// Print every n with a nonzero weight.
    #[arg(long)]
    pub dense: bool,
}

#[derive(Debug, Args)]
pub struct PredictArgs {
    #[arg(long)]
    pub l1: u32,
    #[arg(long)]
    pub l2: u32,
    /// N at which range endpoints are evaluated.
    #[arg(long = "N", value_parser = parse_count, default_value = "100000000")]
    pub n: u64,
    #[arg(long, default_value_t = 0.01)]
    pub epsilon: f64,
}

#[derive(Debug, Args)]
pub struct ExpsumArgs {
    /// S, V, T, f, U, Stilde, Vtilde or Omega.
    #[arg(long, value_parser = parse_kind)]
    pub kind: ExpSumKind,
    #[arg(long = "l", default_value_t = 1)]
    pub ell: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long = "N", value_parser = parse_count)]
    pub n: u64,
    /// Lower cutoff N/A of the finite sums (default: none).
    #[arg(long = "A")]
    pub a: Option<f64>,
    /// Length of U.
    #[arg(long = "H", value_parser = parse_count, default_value = "1")]
    pub h: u64,
    /// Tail tolerance of the damped sums.
    #[arg(long, default_value_t = 1e-16)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Circle,
    Laplace,
    Parseval,
    Theta,
    Bounds,
    Meansq,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long = "N", value_parser = parse_count, default_value = "2000")]
    pub n: u64,
    #[arg(long, default_value_t = 2)]
    pub l1: u32,
    #[arg(long, default_value_t = 2)]
    pub l2: u32,
    /// Window length for the circle identity.
    #[arg(long = "H", value_parser = parse_count, default_value = "40")]
    pub h: u64,
    #[arg(long, value_parser = parse_variant, default_value = "rpp-full")]
    pub variant: Variant,
    /// Random samples for the bound checks.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    /// Also write the reports as JSON.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub config: PathBuf,
    /// Overrides `output.csv` of the config.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Overrides `output.json` of the config.
    #[arg(long)]
    pub json: Option<PathBuf>,
}
