//! Numerical oracles that never evaluate the closed forms they check.
//!
//! The radial and angular Sturm–Liouville problems are discretized with
//! second-order central differences on interior nodes (Dirichlet data at
//! the ends, singular terms sampled at interior nodes only) and solved by
//! Sturm bisection. Optional Richardson extrapolation combines spacings
//! `h` and `h/2`.

mod quadrature;
mod tridiagonal;

use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use libm::{sin, sqrt};

pub use quadrature::{
    composite, gauss_jacobi, gauss_laguerre, gauss_legendre, integrate_refined, Estimate, GaussRule,
};
pub use tridiagonal::SymTridiagonal;

use crate::model::effective_ell;
use crate::{Error, PotentialParams, Result};

/// Uniform grid of `n_points` interior nodes on `(lo, hi)`, spacing
/// `h = (hi − lo)/(n_points + 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub n_points: usize,
    pub richardson: bool,
}

impl GridSpec {
    pub const MIN_POINTS: usize = 64;

    pub fn new(lo: f64, hi: f64, n_points: usize, richardson: bool) -> Result<Self> {
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::Domain("grid requires finite lo < hi"));
        }
        if n_points < Self::MIN_POINTS {
            return Err(Error::Domain("grid requires at least 64 points"));
        }
        Ok(GridSpec { lo, hi, n_points, richardson })
    }

    /// `(0, 12√(ħ/μω))` with 2000 interior points, Richardson on.
    pub fn radial_default(p: &PotentialParams) -> Self {
        GridSpec { lo: 0.0, hi: 12.0 / sqrt(p.inv_length_sq()), n_points: 2000, richardson: true }
    }

    /// `(0, π/2)` with 2000 interior points, Richardson on.
    pub fn angular_default() -> Self {
        GridSpec { lo: 0.0, hi: FRAC_PI_2, n_points: 2000, richardson: true }
    }

    pub fn spacing(&self) -> f64 {
        (self.hi - self.lo) / (self.n_points as f64 + 1.0)
    }

    /// The same interval with spacing halved.
    pub fn refined(&self) -> Self {
        GridSpec { n_points: 2 * self.n_points + 1, ..*self }
    }

    pub fn nodes(&self) -> Vec<f64> {
        let h = self.spacing();
        (1..=self.n_points).map(|i| self.lo + i as f64 * h).collect()
    }
}

/// Second-order discretization of `−K u'' + V(x) u` on the interior nodes
/// of `grid`, where `K = ħ²/2μ`.
fn sturm_liouville(kinetic: f64, grid: &GridSpec, potential: impl Fn(f64) -> f64) -> SymTridiagonal {
    let h = grid.spacing();
    let coupling = kinetic / (h * h);
    let diag = grid.nodes().into_iter().map(|x| 2.0 * coupling + potential(x)).collect();
    let off = alloc::vec![-coupling; grid.n_points - 1];
    SymTridiagonal::new(diag, off)
}

/// Radial Hamiltonian for `u = rR`:
/// `−(ħ²/2μ)u'' + [−V₀ + ½μω²r² + ħ²l̃(l̃+1)/2μr²]u`.
pub fn radial_hamiltonian(p: &PotentialParams, ell: f64, grid: &GridSpec) -> SymTridiagonal {
    let kinetic = p.kinetic_scale();
    let spring = 0.5 * p.mu() * p.omega() * p.omega();
    let centrifugal = kinetic * ell * (ell + 1.0);
    sturm_liouville(kinetic, grid, |r| -p.v0() + spring * r * r + centrifugal / (r * r))
}

/// Pöschl–Teller Hamiltonian on `(0, π/2)`:
/// `−(ħ²/2μ)φ'' + (ħ²/2μ)[(λ²−¼)/sin²θ + (k²−¼)/cos²θ]φ`.
pub fn angular_hamiltonian(lambda: f64, k: f64, hbar: f64, mu: f64, grid: &GridSpec) -> SymTridiagonal {
    let kinetic = hbar * hbar / (2.0 * mu);
    let a = lambda * lambda - 0.25;
    let b = k * k - 0.25;
    sturm_liouville(kinetic, grid, |t| {
        let s = sin(t);
        let c = sin(FRAC_PI_2 - t);
        kinetic * (a / (s * s) + b / (c * c))
    })
}

/// Finite-difference eigenvalues with convergence diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct FdEigenvalues {
    /// Ascending; Richardson-extrapolated when the grid asks for it.
    pub values: Vec<f64>,
    /// `|E(h) − E(h/2)|` for each requested eigenvalue.
    pub shifts: Vec<f64>,
    /// Set when an inverse-square wall term is attractive (`λ < 1/2` or
    /// `k < 1/2`); Dirichlet data then picks one self-adjoint extension and
    /// the `h²` error law no longer holds.
    pub attractive_wall: bool,
}

/// Allowed `|E(h) − E(h/2)|` as a fraction of the gap to the next level.
pub const MAX_SHIFT_PER_GAP: f64 = 1e-4;

fn solve_two_grids(
    build: impl Fn(&GridSpec) -> SymTridiagonal,
    grid: &GridSpec,
    count: usize,
) -> Result<(Vec<f64>, Vec<f64>)> {
    if count == 0 {
        return Err(Error::Domain("count must be positive"));
    }
    if count + 1 > grid.n_points {
        return Err(Error::Domain("grid has fewer nodes than requested eigenvalues"));
    }
    let coarse = build(grid).lowest_eigenvalues(count + 1);
    let fine = build(&grid.refined()).lowest_eigenvalues(count + 1);
    let mut shifts = Vec::with_capacity(count);
    for i in 0..count {
        let shift = (coarse[i] - fine[i]).abs();
        let gap = fine[i + 1] - fine[i];
        if shift > MAX_SHIFT_PER_GAP * gap {
            return Err(Error::GridTooCoarse { index: i, shift, gap });
        }
        shifts.push(shift);
    }
    let values = if grid.richardson {
        (0..count).map(|i| (4.0 * fine[i] - coarse[i]) / 3.0).collect()
    } else {
        coarse[..count].to_vec()
    };
    Ok((values, shifts))
}

/// Lowest `count` eigenvalues of the radial equation for sector `(n_θ, m)`.
///
/// `grid.lo` must be 0 (Dirichlet at the origin). The box must satisfy
/// `½μω²·hi² − V₀ ≥ E_top + 40ħω` for the highest returned eigenvalue.
pub fn radial_eigenvalues_fd(
    p: &PotentialParams,
    n_theta: u32,
    m: i32,
    grid: &GridSpec,
    count: usize,
) -> Result<FdEigenvalues> {
    if grid.lo != 0.0 {
        return Err(Error::Domain("radial grid must start at r = 0"));
    }
    let ell = effective_ell(p, n_theta, m)?;
    let (values, shifts) = solve_two_grids(|g| radial_hamiltonian(p, ell, g), grid, count)?;
    let top = values[count - 1];
    let spring = 0.5 * p.mu() * p.omega() * p.omega();
    let needed = top + p.v0() + 40.0 * p.hbar() * p.omega();
    if spring * grid.hi * grid.hi < needed {
        return Err(Error::GridTooShort { required_hi: sqrt(needed / spring), hi: grid.hi });
    }
    Ok(FdEigenvalues { values, shifts, attractive_wall: false })
}

/// Lowest `count` eigenvalues of the Pöschl–Teller problem on `(0, π/2)`.
pub fn angular_eigenvalues_fd(
    lambda: f64,
    k: f64,
    hbar: f64,
    mu: f64,
    grid: &GridSpec,
    count: usize,
) -> Result<FdEigenvalues> {
    if !(lambda >= 0.0) || !(k > 0.0) {
        return Err(Error::Domain("angular solver requires lambda >= 0 and k > 0"));
    }
    if !(hbar > 0.0) || !(mu > 0.0) {
        return Err(Error::Domain("hbar and mu must be positive"));
    }
    if grid.lo != 0.0 || (grid.hi - FRAC_PI_2).abs() > 1e-12 {
        return Err(Error::Domain("angular grid must span (0, pi/2)"));
    }
    let (values, shifts) =
        solve_two_grids(|g| angular_hamiltonian(lambda, k, hbar, mu, g), grid, count)?;
    Ok(FdEigenvalues { values, shifts, attractive_wall: lambda < 0.5 || k < 0.5 })
}

const INNER_TOL: f64 = 1e-10;

fn inner_product(integrand: impl Fn(f64) -> f64, grid: &GridSpec) -> Result<Estimate> {
    let panels = (grid.n_points / 16).max(1);
    let first = integrate_refined(&integrand, grid.lo, grid.hi, panels, f64::INFINITY)?;
    let tol = 1e-12 * first.value.abs().max(1.0);
    let est = integrate_refined(&integrand, grid.lo, grid.hi, panels, tol)?;
    if est.error > INNER_TOL {
        return Err(Error::NonConvergence("inner product error estimate above 1e-10"));
    }
    Ok(est)
}

/// `∫ f g r² dr` over `[grid.lo, grid.hi]`.
pub fn inner_product_radial(
    f: impl Fn(f64) -> f64,
    g: impl Fn(f64) -> f64,
    grid: &GridSpec,
) -> Result<Estimate> {
    inner_product(|r| f(r) * g(r) * r * r, grid)
}

/// `∫ f g sinθ dθ` over `[grid.lo, grid.hi]` (normally `(0, π/2)`).
pub fn inner_product_angular(
    f: impl Fn(f64) -> f64,
    g: impl Fn(f64) -> f64,
    grid: &GridSpec,
) -> Result<Estimate> {
    inner_product(|t| f(t) * g(t) * sin(t), grid)
}
