use std::f64::consts::{FRAC_PI_2, PI};

use anharmonic_core::model::effective_ell;
use anharmonic_core::propagator::{
    full_kernel_spectral, lattice_radial_kernel, radial_kernel_closed, radial_kernel_spectral, LatticeSpec,
    PropagatorQuery,
};
use anharmonic_core::spectrum::{enumerate_states, EigenState};
use anharmonic_core::{PotentialParams, QuantumNumbers};
use serde_json::Value;

use crate::cli::{PropagatorArgs, SpectrumArgs, VerifyArgs, WavefunctionArgs};
use crate::config::ConfigFile;
use crate::error::{CliError, EXIT_OK, EXIT_TOLERANCE, EXIT_VERIFY_FAILED};
use crate::output::{json_object, json_value, Cell, Table};
use crate::verify::{self, Suite};

/// The result of one command: a table, extra JSON fields, notes for stderr
/// and the exit status.
#[derive(Debug, Clone, PartialEq)]
pub struct Artifact {
    pub table: Table,
    pub meta: Vec<(&'static str, Value)>,
    pub notes: Vec<String>,
    pub status: i32,
}

impl Artifact {
    fn new(table: Table) -> Self {
        Artifact { table, meta: Vec::new(), notes: Vec::new(), status: EXIT_OK }
    }
}

fn length_unit(p: &PotentialParams) -> f64 {
    1.0 / p.inv_length_sq().sqrt()
}

fn positive(name: &str, v: f64) -> Result<f64, CliError> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::Invalid(format!("{name} must be positive and finite")))
    }
}

fn at_least(name: &str, v: usize, min: usize) -> Result<usize, CliError> {
    if v >= min {
        Ok(v)
    } else {
        Err(CliError::Invalid(format!("{name} must be at least {min}")))
    }
}

pub fn spectrum(p: &PotentialParams, cfg: &ConfigFile, args: &SpectrumArgs) -> Result<Artifact, CliError> {
    let e_max: f64 = cfg.pick("emax", args.emax, 6.0)?;
    if !e_max.is_finite() {
        return Err(CliError::Invalid("emax must be finite".into()));
    }
    // the scan stops at the first |m| whose energy floor exceeds emax
    let m_max = cfg.pick("mmax", args.mmax, i32::MAX as u32)?;
    let mut table = Table::new(vec!["n", "n_theta", "m", "lambda", "k", "ell_tilde", "energy"]);
    for s in enumerate_states(p, e_max, m_max) {
        table.push(vec![
            s.qn.n.into(),
            s.qn.n_theta.into(),
            s.qn.m.into(),
            s.angular.lambda.into(),
            s.angular.k.into(),
            s.radial.ell_tilde.into(),
            s.energy().into(),
        ]);
    }
    let mut art = Artifact::new(table);
    art.meta.push(("emax", json_value(e_max)));
    Ok(art)
}

/// Sample points: `r` from 0 to `r_max` inclusive, `θ` at cell midpoints of
/// `(0, π/2)`, `φ` at `2πk/n`.
fn sample_axes(r_max: f64, nr: usize, nt: usize, np: usize) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let r = (0..nr).map(|i| r_max * i as f64 / (nr - 1) as f64).collect();
    let t = (0..nt).map(|j| FRAC_PI_2 * (j as f64 + 0.5) / nt as f64).collect();
    let f = (0..np).map(|k| 2.0 * PI * k as f64 / np as f64).collect();
    (r, t, f)
}

/// `∫|ψ|² dV` by tensor Gauss–Legendre quadrature; `|ψ|` does not depend
/// on `φ`, so that integral is exactly `2π`.
pub fn norm_estimate(p: &PotentialParams, state: &EigenState) -> Result<f64, CliError> {
    let width = (4.0 * f64::from(state.qn.n) + 2.0 * state.radial.ell_tilde + 3.0).sqrt() + 8.0;
    let r_nodes = verify::radial_nodes(width * length_unit(p), 32);
    let theta_nodes = verify::polar_nodes(8);
    let mut total = 0.0;
    for &(r, wr) in &r_nodes {
        for &(t, wt) in &theta_nodes {
            total += wr * wt * state.wavefunction(p, r, t, 0.0)?.norm_sqr();
        }
    }
    Ok(2.0 * PI * total)
}

pub fn wavefunction(p: &PotentialParams, cfg: &ConfigFile, args: &WavefunctionArgs) -> Result<Artifact, CliError> {
    let qn = QuantumNumbers::new(
        cfg.pick("n", args.n, 0)?,
        cfg.pick("ntheta", args.ntheta, 0)?,
        cfg.pick("m", args.m, 0)?,
    );
    let r_max = positive("r-max", cfg.pick("r_max", args.r_max, 6.0 * length_unit(p))?)?;
    let nr = at_least("r-points", cfg.pick("r_points", args.r_points, 61)?, 2)?;
    let nt = at_least("theta-points", cfg.pick("theta_points", args.theta_points, 16)?, 1)?;
    let np = at_least("phi-points", cfg.pick("phi_points", args.phi_points, 8)?, 1)?;
    let state = EigenState::new(p, qn)?;
    let (rs, ts, fs) = sample_axes(r_max, nr, nt, np);
    let mut table = Table::new(vec!["r", "theta", "phi", "re_psi", "im_psi", "abs_psi"]);
    for &r in &rs {
        for &t in &ts {
            // |ψ| is evaluated once per (r, θ) so it is identical across φ
            let modulus = state.wavefunction(p, r, t, 0.0)?.norm_sqr().sqrt();
            for &f in &fs {
                let psi = state.wavefunction(p, r, t, f)?;
                table.push(vec![r.into(), t.into(), f.into(), psi.re.into(), psi.im.into(), modulus.into()]);
            }
        }
    }
    let norm = norm_estimate(p, &state)?;
    let mut art = Artifact::new(table);
    art.meta.push(("n", json_value(qn.n)));
    art.meta.push(("n_theta", json_value(qn.n_theta)));
    art.meta.push(("m", json_value(qn.m)));
    art.meta.push(("energy", json_value(state.energy())));
    art.meta.push(("norm", json_value(norm)));
    art.notes.push(format!("norm={}", crate::output::format_float(norm)));
    Ok(art)
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

pub fn propagator(p: &PotentialParams, cfg: &ConfigFile, args: &PropagatorArgs) -> Result<Artifact, CliError> {
    let n_theta = cfg.pick("ntheta", args.ntheta, 0)?;
    let m = cfg.pick("m", args.m, 0)?;
    let ra = cfg.pick("ra", args.ra, 0.8)?;
    let rb = cfg.pick("rb", args.rb, 1.2)?;
    let tau = cfg.pick("tau", args.tau, 1.0)?;
    let n_cut = cfg.pick("ncut", args.ncut, 40)?;
    let tolerance = positive("tolerance", cfg.pick("tolerance", args.tolerance, 1e-8)?)?;
    let ell = effective_ell(p, n_theta, m)?;

    let closed = radial_kernel_closed(p, n_theta, m, ra, rb, tau)?;
    let spectral = radial_kernel_spectral(p, n_theta, m, ra, rb, tau, n_cut)?;
    let rel_cs = rel(spectral.value, closed);
    let mut failures = Vec::new();
    if !(rel_cs <= tolerance) {
        failures.push(format!(
            "closed and spectral kernels differ by {rel_cs:e} (tolerance {tolerance:e}); increase --ncut (now {n_cut})"
        ));
    }

    let mut lattice = None;
    if args.lattice {
        let slices = cfg.pick("slices", args.slices, 64)?;
        let points = cfg.pick("lattice_points", args.lattice_points, 400)?;
        let r_max = cfg.pick("lattice_rmax", args.lattice_rmax, 8.0 * length_unit(p))?;
        let lat_tol = positive("lattice-tolerance", cfg.pick("lattice_tolerance", args.lattice_tolerance, 1e-3)?)?;
        let spec = LatticeSpec::new(slices, 1e-6 * length_unit(p), r_max, points)?;
        let value = lattice_radial_kernel(p, n_theta, m, ra, rb, tau, &spec)?;
        let r = rel(value, closed);
        if !(r <= lat_tol) {
            failures.push(format!(
                "lattice kernel differs from closed form by {r:e} (tolerance {lat_tol:e}); increase --slices (now {slices}) or --lattice-points (now {points})"
            ));
        }
        lattice = Some(value);
    }

    let mut full = None;
    if args.full {
        let q = PropagatorQuery {
            ra,
            rb,
            theta_a: cfg.pick("theta_a", args.theta_a, 0.7)?,
            theta_b: cfg.pick("theta_b", args.theta_b, 0.9)?,
            phi_a: cfg.pick("phi_a", args.phi_a, 0.0)?,
            phi_b: cfg.pick("phi_b", args.phi_b, 0.5)?,
            tau,
            n_cut,
            ntheta_cut: cfg.pick("ntheta_cut", args.ntheta_cut, 20)?,
            m_cut: cfg.pick("m_cut", args.m_cut, 20)?,
        };
        full = Some(full_kernel_spectral(p, &q)?);
    }

    let mut table = Table::new(vec![
        "n_theta",
        "m",
        "ell_tilde",
        "ra",
        "rb",
        "tau",
        "closed",
        "spectral",
        "spectral_tail",
        "lattice",
        "rel_closed_spectral",
        "rel_closed_lattice",
        "rel_spectral_lattice",
        "full_re",
        "full_im",
        "full_tail",
    ]);
    table.push(vec![
        n_theta.into(),
        m.into(),
        ell.into(),
        ra.into(),
        rb.into(),
        tau.into(),
        closed.into(),
        spectral.value.into(),
        spectral.tail.into(),
        lattice.into(),
        rel_cs.into(),
        lattice.map(|l| rel(l, closed)).into(),
        lattice.map(|l| rel(l, spectral.value)).into(),
        full.map(|f| f.value.re).into(),
        full.map(|f| f.value.im).into(),
        full.map(|f| f.tail).into(),
    ]);
    let mut art = Artifact::new(table);
    if !failures.is_empty() {
        art.status = EXIT_TOLERANCE;
        art.notes = failures;
    }
    Ok(art)
}

pub fn verify(cfg: &ConfigFile, args: &VerifyArgs) -> Result<Artifact, CliError> {
    let suite: Suite = cfg.pick("suite", args.suite, Suite::All)?;
    let scale: f64 = cfg.pick("tolerance_scale", args.tolerance_scale, 1.0)?;
    if !(scale >= 0.0) || !scale.is_finite() {
        return Err(CliError::Invalid("tolerance-scale must be non-negative and finite".into()));
    }
    let checks = verify::run_suite(suite, scale);
    let mut columns = vec!["suite", "check", "observed", "lower", "tolerance", "passed", "detail"];
    if !args.no_timing {
        columns.push("seconds");
    }
    let mut table = Table::new(columns);
    for c in &checks {
        let mut row: Vec<Cell> = vec![
            c.suite.into(),
            c.name.clone().into(),
            c.observed.into(),
            c.bound.lower().into(),
            c.bound.upper().into(),
            c.passed().into(),
            c.detail.clone().map_or(Cell::Empty, Cell::Text),
        ];
        if !args.no_timing {
            row.push(c.seconds.into());
        }
        table.push(row);
    }
    let failed = checks.iter().filter(|c| !c.passed()).count();
    let mut art = Artifact::new(table);
    art.meta.push(("suite", Value::String(suite.name().into())));
    art.meta.push(("tolerance_scale", json_value(scale)));
    art.meta.push(("checks", json_value(checks.len() as u32)));
    art.meta.push(("failed", json_value(failed as u32)));
    art.notes.push(format!("{} checks, {failed} failed", checks.len()));
    if failed > 0 {
        art.status = EXIT_VERIFY_FAILED;
    }
    Ok(art)
}

/// JSON document for an artifact: metadata fields followed by `rows`.
pub fn artifact_json(art: &Artifact) -> Value {
    let mut fields = art.meta.clone();
    fields.push(("rows", art.table.json_rows()));
    json_object(fields)
}
