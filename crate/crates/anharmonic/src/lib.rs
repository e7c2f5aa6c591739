//! Command-line front end, file formats and verification suites for
//! `anharmonic-core`.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;
pub mod verify;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};

use anharmonic_core::PotentialParams;
use clap::Parser;

use crate::cli::{Cli, Command, GlobalArgs};
use crate::commands::Artifact;
use crate::config::ConfigFile;
use crate::error::{CliError, EXIT_INVALID_INPUT, EXIT_OK};
use crate::output::{write_json, Format};

fn params(cfg: &ConfigFile, g: &GlobalArgs) -> Result<PotentialParams, CliError> {
    Ok(PotentialParams::new(
        cfg.pick("hbar", g.hbar, 1.0)?,
        cfg.pick("mu", g.mu, 1.0)?,
        cfg.pick("omega", g.omega, 1.0)?,
        cfg.pick("v0", g.v0, 0.0)?,
        cfg.pick("alpha", g.alpha, 0.0)?,
        cfg.pick("beta", g.beta, 0.0)?,
        cfg.pick("gamma", g.gamma, 0.0)?,
    )?)
}

fn parse_format(cfg: &ConfigFile, flag: Option<Format>) -> Result<Format, CliError> {
    if let Some(f) = flag {
        return Ok(f);
    }
    match cfg.raw("format") {
        None => Ok(Format::default()),
        Some(s) => <Format as clap::ValueEnum>::from_str(s, true)
            .map_err(|_| CliError::Invalid(format!("config key `format`: expected csv or json, got `{s}`"))),
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<Artifact, CliError> {
    let cfg = match &cli.global.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let format = parse_format(&cfg, cli.global.format)?;
    let p = params(&cfg, &cli.global)?;
    let art = match &cli.command {
        Command::Spectrum(a) => commands::spectrum(&p, &cfg, a)?,
        Command::Wavefunction(a) => commands::wavefunction(&p, &cfg, a)?,
        Command::Propagator(a) => commands::propagator(&p, &cfg, a)?,
        Command::Verify(a) => commands::verify(&cfg, a)?,
    };
    let mut sink: Box<dyn Write + '_> = match &cli.global.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(&mut *stdout),
    };
    match format {
        Format::Csv => art.table.write_csv(&mut sink)?,
        Format::Json => write_json(&commands::artifact_json(&art), &mut sink)?,
    }
    sink.flush()?;
    Ok(art)
}

/// Runs the program on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_INVALID_INPUT } else { EXIT_OK };
        }
    };
    match execute(&cli, stdout) {
        Ok(art) => {
            for note in &art.notes {
                let _ = writeln!(stderr, "{note}");
            }
            art.status
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
