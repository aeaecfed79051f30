//! Command-line argument definitions.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

/// Dispersion relations and exact spectral evolution of time-fractional
/// kinematic wave and linearised KdV equations.
#[derive(Parser, Debug)]
#[command(name = "fracwave", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Subcommands.
#[derive(Subcommand, Debug)]
pub enum Command {
    /// Sweep omega, v_p, v_g over a wave-number range; write CSV and/or SVG
    Sweep(SweepArgs),
    /// Evolve initial data with the exact per-mode fractional propagator
    Evolve(EvolveArgs),
    /// Locate wave numbers where Re v_p = Re v_g (linearised KdV)
    Crossings(CrossingsArgs),
    /// Evaluate the Mittag-Leffler function E_alpha(z)
    MlEval(MlEvalArgs),
    /// List the orders alpha = 1/(2(m+1)) with purely imaginary velocities
    Orders(OrdersArgs),
}

/// Which model equation to use.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    /// kinematic wave equation
    Kinematic,
    /// linearised Korteweg-de Vries equation
    Kdv,
}

/// Branch handling for kappa(k) <= 0 at fractional order.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchKind {
    /// refuse with exit code 3
    Strict,
    /// evaluate the principal branch and set the branch_flag column
    Permissive,
}

/// Output selection for sweeps.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepFormat {
    /// CSV data only
    Csv,
    /// SVG plot only
    Svg,
    /// both files
    Both,
}

/// `sweep` flags.
#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct SweepArgs {
    /// model equation
    #[arg(long, value_enum)]
    pub model: ModelKind,
    /// Caputo order alpha in (0, 1]
    #[arg(long)]
    pub alpha: f64,
    /// lower end of the wave-number range
    #[arg(long)]
    pub kmin: f64,
    /// upper end of the wave-number range
    #[arg(long)]
    pub kmax: f64,
    /// number of uniformly spaced samples (>= 2)
    #[arg(long, short = 'n')]
    pub n: usize,
    /// advection speed c0
    #[arg(long, default_value_t = 1.0)]
    pub c0: f64,
    /// KdV dispersion coefficient mu
    #[arg(long, default_value_t = 1.0)]
    pub mu: f64,
    /// branch handling outside kappa > 0
    #[arg(long, value_enum, default_value = "strict")]
    pub branch: BranchKind,
    /// output selection
    #[arg(long, value_enum, default_value = "csv")]
    pub format: SweepFormat,
    /// output path (extension adjusted per format); relative paths resolve
    /// under $FRACWAVE_OUTPUT_DIR when set
    #[arg(long, default_value = "sweep.csv")]
    pub output: PathBuf,
}

/// Initial-condition shapes for `evolve`.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum IcKind {
    /// cosine of the grid mode nearest to --k0
    Cosine,
    /// Gaussian-envelope carrier (needs --sigma)
    Packet,
}

/// `evolve` flags.
#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct EvolveArgs {
    /// model equation
    #[arg(long, value_enum)]
    pub model: ModelKind,
    /// Caputo order alpha in (0, 1]
    #[arg(long)]
    pub alpha: f64,
    /// grid points (power of two, >= 8)
    #[arg(long, short = 'n', default_value_t = 4096)]
    pub n: usize,
    /// domain length
    #[arg(long, default_value_t = 512.0)]
    pub length: f64,
    /// initial condition
    #[arg(long, value_enum)]
    pub ic: IcKind,
    /// carrier wave number
    #[arg(long)]
    pub k0: f64,
    /// packet width (packet only)
    #[arg(long)]
    pub sigma: Option<f64>,
    /// packet centre (default L/2)
    #[arg(long)]
    pub x0: Option<f64>,
    /// amplitude of the cosine initial condition
    #[arg(long, default_value_t = 1.0)]
    pub amplitude: f64,
    /// comma-separated non-negative ascending snapshot times
    #[arg(long, value_delimiter = ',', required = true)]
    pub times: Vec<f64>,
    /// output directory; relative paths resolve under $FRACWAVE_OUTPUT_DIR
    #[arg(long, default_value = "evolve-out")]
    pub outdir: PathBuf,
}

/// `crossings` flags.
#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct CrossingsArgs {
    /// comma-separated list of orders to scan
    #[arg(long, value_delimiter = ',', required = true)]
    pub alphas: Vec<f64>,
    /// model equation (crossings exist for kdv only)
    #[arg(long, value_enum, default_value = "kdv")]
    pub model: ModelKind,
    /// lower bracket end
    #[arg(long, default_value_t = 0.05)]
    pub kmin: f64,
    /// upper bracket end
    #[arg(long, default_value_t = 0.95)]
    pub kmax: f64,
    /// accepted residual |v_p - v_g| at the crossing
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// also write the report as CSV
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

/// `ml-eval` flags.
#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct MlEvalArgs {
    /// Caputo order alpha in (0, 1]
    #[arg(long)]
    pub alpha: f64,
    /// real part of z
    #[arg(long, default_value_t = 0.0)]
    pub re: f64,
    /// imaginary part of z
    #[arg(long, default_value_t = 0.0)]
    pub im: f64,
}

/// `orders` flags.
#[derive(Args, Debug)]
pub struct OrdersArgs {
    /// largest m in alpha = 1/(2(m+1))
    #[arg(long, default_value_t = 4)]
    pub m_max: u32,
    /// also write the list as CSV
    #[arg(long)]
    pub csv: Option<PathBuf>,
}
