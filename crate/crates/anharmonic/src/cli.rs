use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::output::Format;
use crate::verify::Suite;

#[derive(Debug, Parser)]
#[command(name = "anharmonic", version, about = "Spectrum, eigenfunctions and propagator of a noncentral anharmonic oscillator")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Parameter file with `key = value` lines; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub hbar: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub mu: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub omega: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub v0: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub gamma: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List bound states with E <= emax.
    Spectrum(SpectrumArgs),
    /// Tabulate one eigenfunction on a grid.
    Wavefunction(WavefunctionArgs),
    /// Evaluate the Euclidean propagator.
    Propagator(PropagatorArgs),
    /// Run the built-in verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub emax: Option<f64>,
    /// Largest |m| to scan; by default every m that can reach emax.
    #[arg(long)]
    pub mmax: Option<u32>,
}

#[derive(Debug, Args)]
pub struct WavefunctionArgs {
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub ntheta: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<i32>,
    #[arg(long)]
    pub r_max: Option<f64>,
    #[arg(long)]
    pub r_points: Option<usize>,
    #[arg(long)]
    pub theta_points: Option<usize>,
    #[arg(long)]
    pub phi_points: Option<usize>,
}

#[derive(Debug, Args)]
pub struct PropagatorArgs {
    #[arg(long)]
    pub ntheta: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<i32>,
    #[arg(long, allow_negative_numbers = true)]
    pub ra: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub rb: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub tau: Option<f64>,
    /// Radial cutoff of the spectral sum.
    #[arg(long)]
    pub ncut: Option<u32>,
    /// Required relative agreement of the closed and spectral kernels.
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Also evaluate the time-sliced lattice kernel.
    #[arg(long)]
    pub lattice: bool,
    #[arg(long)]
    pub slices: Option<u32>,
    #[arg(long)]
    pub lattice_points: Option<usize>,
    #[arg(long)]
    pub lattice_rmax: Option<f64>,
    #[arg(long)]
    pub lattice_tolerance: Option<f64>,
    /// Also evaluate the full three-dimensional kernel.
    #[arg(long)]
    pub full: bool,
    #[arg(long)]
    pub theta_a: Option<f64>,
    #[arg(long)]
    pub theta_b: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub phi_a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub phi_b: Option<f64>,
    #[arg(long)]
    pub ntheta_cut: Option<u32>,
    #[arg(long)]
    pub m_cut: Option<u32>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Option<Suite>,
    /// Multiplies every tolerance; 0 must make the run fail.
    #[arg(long)]
    pub tolerance_scale: Option<f64>,
    /// Leave the per-check timing column out, for byte-stable output.
    #[arg(long)]
    pub no_timing: bool,
}
