//! Time-sliced radial kernel.
//!
//! The reduced function `u = rR` sees the effective potential
//! `V_eff = −V₀ + ½μω²r² + ħ²l̃(l̃+1)/2μr²` on the half line. One Euclidean
//! slice of length `ε = τ/N` is, for [`SliceRule::Primitive`], the
//! symmetrized primitive kernel
//!
//! ```text
//! T(x, y) = √(μ/2πħε) exp[−(μ/2ħ)(x−y)²/ε − (ε/2ħ)(V_eff(x) + V_eff(y))]
//! ```
//!
//! The inverse-square term spoils the `ε²` Trotter law of this kernel (the
//! error falls as `N^{−3/2}`). [`SliceRule::ExactCentrifugal`] keeps the
//! centrifugal term inside the free radial kernel,
//!
//! ```text
//! T(x, y) = (μ/ħε) √(xy) I_{l̃+1/2}(μxy/ħε) e^{−μ(x²+y²)/2ħε}
//!           · exp[−(ε/2ħ)(U(x) + U(y))],   U = −V₀ + ½μω²r²,
//! ```
//!
//! whose large-argument limit is the primitive kernel, and restores the
//! `N^{−2}` law.
//!
//! Slices are composed with trapezoid weights on a uniform grid. The
//! endpoints `r_a`, `r_b` enter only through their own rows `T(r_a, ·)` and
//! `T(·, r_b)`, so no interpolation is needed. The `u` kernel divided by
//! `r_a r_b` is the kernel against `r² dr`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use libm::{exp, log, sqrt};

use crate::model::effective_ell;
use crate::specfun::ln_bessel_i;
use crate::{Error, PotentialParams, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SliceRule {
    /// Whole `V_eff` split symmetrically between the slice endpoints.
    Primitive,
    /// Free radial kernel for the kinetic and centrifugal terms, symmetric
    /// splitting of the rest.
    #[default]
    ExactCentrifugal,
}

/// Uniform radial grid `r_min..=r_max` with `n_grid` nodes and trapezoid
/// weights. `u = rR` vanishes at the origin, so an `r_min` close to zero
/// is the natural choice; a larger `r_min` truncates the box there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeSpec {
    pub n_slices: u32,
    pub r_min: f64,
    pub r_max: f64,
    pub n_grid: usize,
    pub rule: SliceRule,
}

impl LatticeSpec {
    /// A spec with the default [`SliceRule`].
    pub fn new(n_slices: u32, r_min: f64, r_max: f64, n_grid: usize) -> Result<Self> {
        let spec = LatticeSpec { n_slices, r_min, r_max, n_grid, rule: SliceRule::default() };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.r_min > 0.0) || !(self.r_max > self.r_min) || !self.r_max.is_finite() {
            return Err(Error::Domain("lattice requires 0 < r_min < r_max"));
        }
        if self.n_grid < 16 {
            return Err(Error::Domain("lattice requires at least 16 grid points"));
        }
        if self.n_slices == 0 {
            return Err(Error::Domain("lattice requires at least one slice"));
        }
        Ok(())
    }

    pub fn with_rule(self, rule: SliceRule) -> Self {
        LatticeSpec { rule, ..self }
    }

    pub fn spacing(&self) -> f64 {
        (self.r_max - self.r_min) / (self.n_grid as f64 - 1.0)
    }
}

/// Lattice kernel of the sector `(n_θ, m)`.
pub fn lattice_radial_kernel(
    p: &PotentialParams,
    n_theta: u32,
    m: i32,
    ra: f64,
    rb: f64,
    tau: f64,
    spec: &LatticeSpec,
) -> Result<f64> {
    lattice_radial_kernel_ell(p, effective_ell(p, n_theta, m)?, ra, rb, tau, spec)
}

struct Slicer {
    rule: SliceRule,
    nu: f64,
    hbar: f64,
    eps: f64,
    stiffness: f64,
    ln_norm: f64,
    v0: f64,
    spring: f64,
    centrifugal: f64,
}

impl Slicer {
    fn new(p: &PotentialParams, ell: f64, tau: f64, spec: &LatticeSpec) -> Self {
        let eps = tau / f64::from(spec.n_slices);
        let stiffness = p.mu() / (p.hbar() * eps);
        Slicer {
            rule: spec.rule,
            nu: ell + 0.5,
            hbar: p.hbar(),
            eps,
            stiffness,
            ln_norm: 0.5 * log(stiffness / (2.0 * PI)),
            v0: p.v0(),
            spring: 0.5 * p.mu() * p.omega() * p.omega(),
            centrifugal: match spec.rule {
                SliceRule::Primitive => p.kinetic_scale() * ell * (ell + 1.0),
                SliceRule::ExactCentrifugal => 0.0,
            },
        }
    }

    /// The part of `V_eff` split between slice endpoints.
    fn split_potential(&self, r: f64) -> f64 {
        -self.v0 + self.spring * r * r + self.centrifugal / (r * r)
    }

    fn kernel(&self, x: f64, vx: f64, y: f64, vy: f64) -> f64 {
        let split = -0.5 * self.eps * (vx + vy) / self.hbar;
        match self.rule {
            SliceRule::Primitive => {
                let d = x - y;
                exp(self.ln_norm - 0.5 * self.stiffness * d * d + split)
            }
            SliceRule::ExactCentrifugal => {
                // x, y > 0, so the Bessel argument is positive and ln I finite
                let ln_i = ln_bessel_i(self.nu, self.stiffness * x * y).unwrap_or(f64::NEG_INFINITY);
                exp(log(self.stiffness) + 0.5 * log(x * y) + ln_i
                    - 0.5 * self.stiffness * (x * x + y * y)
                    + split)
            }
        }
    }
}

struct Lattice {
    slicer: Slicer,
    nodes: Vec<f64>,
    potential: Vec<f64>,
    weights: Vec<f64>,
    /// Row-major `T(r_i, r_j) w_j`, zero outside the band.
    matrix: Vec<f64>,
    reach: usize,
}

impl Lattice {
    fn build(slicer: Slicer, spec: &LatticeSpec) -> Result<Self> {
        let h = spec.spacing();
        // σ = √(ħε/μ)
        let width = sqrt(1.0 / slicer.stiffness);
        if width < h {
            return Err(Error::LatticeUnresolved { width, spacing: h, reason: "slice width below grid spacing" });
        }
        if width > 0.25 * (spec.r_max - spec.r_min) {
            return Err(Error::LatticeUnresolved {
                width,
                spacing: h,
                reason: "slice width exceeds a quarter of the radial box",
            });
        }
        let n = spec.n_grid;
        let nodes: Vec<f64> = (0..n).map(|j| spec.r_min + j as f64 * h).collect();
        let potential: Vec<f64> = nodes.iter().map(|&r| slicer.split_potential(r)).collect();
        let weights: Vec<f64> = (0..n).map(|j| if j == 0 || j == n - 1 { 0.5 * h } else { h }).collect();
        // band cutoff: the Gaussian factor is below e^{-40} past `reach` nodes
        let reach = ((sqrt(80.0) * width / h) as usize + 1).min(n);
        let mut matrix = alloc::vec![0.0; n * n];
        for i in 0..n {
            for j in i.saturating_sub(reach)..(i + reach + 1).min(n) {
                matrix[i * n + j] = slicer.kernel(nodes[i], potential[i], nodes[j], potential[j]) * weights[j];
            }
        }
        Ok(Lattice { slicer, nodes, potential, weights, matrix, reach })
    }

    /// `w_j T(r, r_j)`.
    fn first_row(&self, r: f64) -> Vec<f64> {
        let vr = self.slicer.split_potential(r);
        (0..self.nodes.len())
            .map(|j| self.slicer.kernel(r, vr, self.nodes[j], self.potential[j]) * self.weights[j])
            .collect()
    }

    /// `row · M`, one more slice.
    fn step(&self, row: &[f64], out: &mut [f64]) {
        let n = self.nodes.len();
        out.iter_mut().for_each(|x| *x = 0.0);
        for (i, &ri) in row.iter().enumerate() {
            if ri == 0.0 {
                continue;
            }
            let lo = i.saturating_sub(self.reach);
            let hi = (i + self.reach + 1).min(n);
            for (o, m) in out[lo..hi].iter_mut().zip(&self.matrix[i * n + lo..i * n + hi]) {
                *o += ri * m;
            }
        }
    }

    /// `w_j T^{(slices)}(r, r_j)`.
    fn propagate(&self, r: f64, slices: u32) -> Vec<f64> {
        let mut row = self.first_row(r);
        let mut next = alloc::vec![0.0; row.len()];
        for _ in 1..slices {
            self.step(&row, &mut next);
            core::mem::swap(&mut row, &mut next);
        }
        row
    }
}

fn check_inputs(ell: f64, tau: f64, spec: &LatticeSpec, radii: &[f64]) -> Result<()> {
    spec.validate()?;
    if !(ell >= 0.0) {
        return Err(Error::Domain("l~ must be non-negative"));
    }
    if !(tau > 0.0) || !tau.is_finite() {
        return Err(Error::Domain("tau must be positive and finite"));
    }
    for &r in radii {
        if !(r >= spec.r_min && r <= spec.r_max) {
            return Err(Error::Domain("lattice endpoints must lie in [r_min, r_max]"));
        }
    }
    Ok(())
}

/// Lattice kernel for an explicit `l̃ ≥ 0`.
///
/// With more than one slice the Gaussian width `σ = √(ħε/μ)` must be at
/// least one grid spacing (otherwise the trapezoid sums undersample the
/// slice kernel) and at most a quarter of the box.
pub fn lattice_radial_kernel_ell(
    p: &PotentialParams,
    ell: f64,
    ra: f64,
    rb: f64,
    tau: f64,
    spec: &LatticeSpec,
) -> Result<f64> {
    check_inputs(ell, tau, spec, &[ra, rb])?;
    let slicer = Slicer::new(p, ell, tau, spec);
    let vb = slicer.split_potential(rb);
    if spec.n_slices == 1 {
        return Ok(slicer.kernel(ra, slicer.split_potential(ra), rb, vb) / (ra * rb));
    }
    let lattice = Lattice::build(slicer, spec)?;
    let row = lattice.propagate(ra, spec.n_slices - 1);
    let u_kernel: f64 = row
        .iter()
        .zip(&lattice.nodes)
        .zip(&lattice.potential)
        .map(|((&w, &x), &vx)| w * lattice.slicer.kernel(x, vx, rb, vb))
        .sum();
    Ok(u_kernel / (ra * rb))
}

/// `K(r_a, r_j)` at every grid node, with the trapezoid weights.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeProfile {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub values: Vec<f64>,
}

/// The lattice kernel from `r_a` to each grid node, normalized against
/// `r² dr`. Needs at least two slices.
pub fn lattice_radial_profile_ell(
    p: &PotentialParams,
    ell: f64,
    ra: f64,
    tau: f64,
    spec: &LatticeSpec,
) -> Result<LatticeProfile> {
    check_inputs(ell, tau, spec, &[ra])?;
    if spec.n_slices < 2 {
        return Err(Error::Domain("a lattice profile needs at least two slices"));
    }
    let lattice = Lattice::build(Slicer::new(p, ell, tau, spec), spec)?;
    let row = lattice.propagate(ra, spec.n_slices);
    let values = row
        .iter()
        .zip(&lattice.weights)
        .zip(&lattice.nodes)
        .map(|((&v, &w), &r)| v / (w * ra * r))
        .collect();
    Ok(LatticeProfile { nodes: lattice.nodes, weights: lattice.weights, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::propagator::radial_kernel_closed_ell;

    fn unit_spec(n_slices: u32) -> LatticeSpec {
        LatticeSpec::new(n_slices, 1e-6, 8.0, 400).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(LatticeSpec::new(4, 0.0, 8.0, 400).is_err());
        assert!(LatticeSpec::new(4, 1.0, 0.5, 400).is_err());
        assert!(LatticeSpec::new(4, 0.1, 8.0, 8).is_err());
        assert!(LatticeSpec::new(0, 0.1, 8.0, 400).is_err());
    }

    #[test]
    fn single_slice_short_time_normalization() {
        let p = PotentialParams::isotropic();
        let spec = unit_spec(1);
        for tau in [1e-4, 1e-6, 1e-8] {
            let k = lattice_radial_kernel_ell(&p, 1.0, 1.0, 1.0, tau, &spec).unwrap();
            let free = (1.0 / (2.0 * PI * tau)).sqrt();
            assert!((k / free - 1.0).abs() < 2.0 * tau);
        }
    }

    #[test]
    fn converges_to_closed_kernel() {
        let p = PotentialParams::isotropic();
        let closed = radial_kernel_closed_ell(&p, 1.0, 0.8, 1.2, 0.5).unwrap();
        let lat = lattice_radial_kernel_ell(&p, 1.0, 0.8, 1.2, 0.5, &unit_spec(64)).unwrap();
        assert!(((lat - closed) / closed).abs() <= 1e-3);
    }

    #[test]
    fn rules_agree_at_large_radius() {
        let p = PotentialParams::isotropic();
        let spec = LatticeSpec::new(1, 0.5, 30.0, 16).unwrap();
        let exact = lattice_radial_kernel_ell(&p, 1.0, 20.0, 20.01, 1e-3, &spec).unwrap();
        let primitive = lattice_radial_kernel_ell(&p, 1.0, 20.0, 20.01, 1e-3, &spec.with_rule(SliceRule::Primitive)).unwrap();
        assert!(((exact - primitive) / exact).abs() < 1e-8);
    }

    #[test]
    fn primitive_rule_converges_at_reduced_order() {
        let p = PotentialParams::isotropic();
        let closed = radial_kernel_closed_ell(&p, 1.0, 0.8, 1.2, 0.5).unwrap();
        let err = |n| {
            let spec = unit_spec(n).with_rule(SliceRule::Primitive);
            ((lattice_radial_kernel_ell(&p, 1.0, 0.8, 1.2, 0.5, &spec).unwrap() - closed) / closed).abs()
        };
        let (e32, e64) = (err(32), err(64));
        assert!(e64 <= 1e-3);
        let ratio = e32 / e64;
        assert!(ratio > 2.6 && ratio < 3.1, "ratio {ratio}");
    }

    #[test]
    fn flags_unresolved_slices() {
        let p = PotentialParams::isotropic();
        let fine_time = lattice_radial_kernel_ell(&p, 1.0, 0.8, 1.2, 0.5, &unit_spec(100_000));
        assert!(matches!(fine_time, Err(Error::LatticeUnresolved { .. })));
        let wide = LatticeSpec::new(2, 0.5, 1.5, 100).unwrap();
        let coarse_time = lattice_radial_kernel_ell(&p, 1.0, 0.8, 1.2, 1.0, &wide);
        assert!(matches!(coarse_time, Err(Error::LatticeUnresolved { .. })));
        assert!(lattice_radial_kernel_ell(&p, 1.0, 9.0, 1.2, 0.5, &unit_spec(8)).is_err());
    }
}
