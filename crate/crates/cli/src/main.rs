mod commands;
mod error;
mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

/// Rotation axes of 3x3 orthogonal matrices.
#[derive(Debug, Parser)]
#[command(name = "rotaxis", version)]
pub struct Cli {
    /// Indented multi-line output instead of one document per line.
    #[arg(long, global = true)]
    pub pretty: bool,

    /// Report angles in degrees (inputs stay in radians).
    #[arg(long, global = true)]
    pub degrees: bool,

    /// Orthogonality / unitarity tolerance.
    #[arg(long, global = true, env = "AXIS_TOL", default_value_t = rotaxis::DEFAULT_ORTHO_TOL)]
    pub tol: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Extract the rotation axis of each input matrix.
    Axis(AxisArgs),
    /// Generate seeded random matrices.
    Gen(GenArgs),
    /// Run every applicable method and compare the axes.
    Xval(XvalArgs),
    /// Report orthogonality and identity residuals.
    Check(InputArgs),
    /// Orthogonal matrices over Z_p.
    Ff(FfArgs),
    /// Eigenvectors of SU(3) matrices.
    Su3(Su3Args),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file; standard input when absent or "-".
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AxisArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// auto, v, u, w1, w2, w3, cofactor, degenerate or resolvent.
    #[arg(long, default_value = "auto")]
    pub method: String,

    /// Treat the input as integers modulo this odd prime.
    #[arg(long)]
    pub modulus: Option<u64>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, default_value_t = 1)]
    pub count: usize,

    /// Fixed rotation angle in radians about a random axis.
    #[arg(long, conflicts_with = "su3")]
    pub angle: Option<f64>,

    /// Haar-random SU(3) matrices with [re, im] entries.
    #[arg(long)]
    pub su3: bool,
}

#[derive(Debug, Args)]
pub struct XvalArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Generate Haar samples from this seed instead of reading input.
    #[arg(long)]
    pub seed: Option<u64>,

    /// Number of generated samples.
    #[arg(long, default_value_t = 1000, requires = "seed")]
    pub count: usize,

    /// Also write one line per matrix.
    #[arg(long)]
    pub report: bool,
}

#[derive(Debug, Args)]
pub struct FfArgs {
    #[arg(long)]
    pub modulus: u64,

    #[command(subcommand)]
    pub action: FfAction,
}

#[derive(Debug, Subcommand)]
pub enum FfAction {
    /// Test mᵀm = I and det m = 1.
    Check(InputArgs),
    /// Fixed vector in canonical scaling.
    Axis(InputArgs),
    /// All solutions of a² + b² = 1.
    Circle,
    /// Random products of planar rotations.
    Generate {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        factors: usize,
    },
}

#[derive(Debug, Args)]
pub struct Su3Args {
    #[command(flatten)]
    pub input: InputArgs,

    /// Which eigenvalue, in order of argument.
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..3))]
    pub lambda_index: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("rotaxis: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
