//! Model parameters, quantum numbers, the potential, and the derived indices
//! `λ = √(β + m²)`, `k = √(γ + 1/4)` and the effective radial angular
//! momentum `l̃ = √((k + λ + 2n_θ + 1)² + α − β) − 1/2`.
//!
//! The angular coordinate is restricted to `θ ∈ (0, π/2)`: the `γ/cos²θ`
//! barrier separates the two hemispheres and every state here lives on the
//! upper one. At `α = β = γ = 0` this reproduces only the subset of the
//! isotropic oscillator that is odd under `z → −z`.

use core::f64::consts::FRAC_PI_2;

use libm::{log, sqrt};

use crate::specfun::{log_factorial, log_gamma};
use crate::{Error, Result};

/// Physical constants and couplings.
///
/// Constructed through [`PotentialParams::new`], which enforces
/// `ħ, μ, ω > 0` and `γ > −1/4`. Whether `β + m² ≥ 0` depends on `m` and is
/// checked per sector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    hbar: f64,
    mu: f64,
    omega: f64,
    v0: f64,
    alpha: f64,
    beta: f64,
    gamma: f64,
}

impl PotentialParams {
    pub fn new(
        hbar: f64,
        mu: f64,
        omega: f64,
        v0: f64,
        alpha: f64,
        beta: f64,
        gamma: f64,
    ) -> Result<Self> {
        if !(hbar > 0.0) || !hbar.is_finite() {
            return Err(Error::Domain("hbar must be positive"));
        }
        if !(mu > 0.0) || !mu.is_finite() {
            return Err(Error::Domain("mu must be positive"));
        }
        if !(omega > 0.0) || !omega.is_finite() {
            return Err(Error::Domain("omega must be positive"));
        }
        if !v0.is_finite() || !alpha.is_finite() || !beta.is_finite() || !gamma.is_finite() {
            return Err(Error::Domain("v0, alpha, beta and gamma must be finite"));
        }
        if !(gamma > -0.25) {
            return Err(Error::Domain("gamma must exceed -1/4"));
        }
        Ok(PotentialParams { hbar, mu, omega, v0, alpha, beta, gamma })
    }

    /// `ħ = μ = ω = 1` with the given offset and couplings.
    pub fn unit(v0: f64, alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        Self::new(1.0, 1.0, 1.0, v0, alpha, beta, gamma)
    }

    /// The pure isotropic oscillator at unit scale.
    pub fn isotropic() -> Self {
        PotentialParams { hbar: 1.0, mu: 1.0, omega: 1.0, v0: 0.0, alpha: 0.0, beta: 0.0, gamma: 0.0 }
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }
    pub fn mu(&self) -> f64 {
        self.mu
    }
    pub fn omega(&self) -> f64 {
        self.omega
    }
    pub fn v0(&self) -> f64 {
        self.v0
    }
    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn beta(&self) -> f64 {
        self.beta
    }
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// `μω/ħ`, the inverse squared oscillator length.
    pub fn inv_length_sq(&self) -> f64 {
        self.mu * self.omega / self.hbar
    }

    /// `ħ²/2μ`.
    pub fn kinetic_scale(&self) -> f64 {
        self.hbar * self.hbar / (2.0 * self.mu)
    }
}

/// Labels `(n, n_θ, m)` of a bound state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuantumNumbers {
    pub n: u32,
    pub n_theta: u32,
    pub m: i32,
}

impl QuantumNumbers {
    pub const fn new(n: u32, n_theta: u32, m: i32) -> Self {
        QuantumNumbers { n, n_theta, m }
    }
}

/// Angular sector data for one `(n_θ, m)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularMode {
    pub lambda: f64,
    pub k: f64,
    pub n_theta: u32,
    pub m: i32,
    /// `(ħ²/2μ)(2n_θ + k + λ + 1)²`.
    pub eps: f64,
    /// `N_{n_θ,m}`; makes `Θ` orthonormal under `sinθ dθ` on `(0, π/2)`.
    pub norm: f64,
}

impl AngularMode {
    pub fn new(p: &PotentialParams, n_theta: u32, m: i32) -> Result<Self> {
        let lambda = angular_lambda(p, m)?;
        let k = angular_k(p);
        Ok(Self::from_indices(p, lambda, k, n_theta, m))
    }

    /// Builds the mode from `λ` and `k` directly. `m` is kept only as a label.
    pub fn from_indices(p: &PotentialParams, lambda: f64, k: f64, n_theta: u32, m: i32) -> Self {
        let nt = f64::from(n_theta);
        let level = 2.0 * nt + k + lambda + 1.0;
        let ln_norm_sq = log(2.0 * level) + log_factorial(n_theta) + lg(nt + k + lambda + 1.0)
            - lg(nt + k + 1.0)
            - lg(nt + lambda + 1.0);
        AngularMode {
            lambda,
            k,
            n_theta,
            m,
            eps: p.kinetic_scale() * level * level,
            norm: libm::exp(0.5 * ln_norm_sq),
        }
    }
}

/// Radial data for one state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialMode {
    pub ell_tilde: f64,
    /// `(2n + l̃ + 3/2)ħω − V₀`.
    pub energy: f64,
    /// Normalization of `R_n` under `r² dr`.
    pub norm: f64,
}

impl RadialMode {
    pub fn new(p: &PotentialParams, qn: QuantumNumbers) -> Result<Self> {
        let ell = effective_ell(p, qn.n_theta, qn.m)?;
        Ok(Self::from_ell(p, ell, qn.n))
    }

    pub fn from_ell(p: &PotentialParams, ell_tilde: f64, n: u32) -> Self {
        let nf = f64::from(n);
        let c = p.inv_length_sq();
        let ln_norm_sq = log(2.0) + 1.5 * log(c) + log_factorial(n) - lg(nf + ell_tilde + 1.5);
        RadialMode {
            ell_tilde,
            energy: (2.0 * nf + ell_tilde + 1.5) * p.hbar() * p.omega() - p.v0(),
            norm: libm::exp(0.5 * ln_norm_sq),
        }
    }
}

// arguments here are always >= 1
fn lg(x: f64) -> f64 {
    log_gamma(x).unwrap_or(f64::NAN)
}

/// `V(r, θ)` in spherical coordinates.
pub fn potential_spherical(p: &PotentialParams, r: f64, theta: f64) -> Result<f64> {
    let has_barrier = p.alpha != 0.0 || p.beta != 0.0 || p.gamma != 0.0;
    if !(r >= 0.0) || (r == 0.0 && has_barrier) {
        return Err(Error::Domain("potential requires r > 0"));
    }
    if !(0.0..=FRAC_PI_2).contains(&theta) {
        return Err(Error::Domain("theta must lie in (0, pi/2)"));
    }
    let (s, c) = libm::sincos(theta);
    if (theta == 0.0 && p.beta != 0.0) || (theta == FRAC_PI_2 && p.gamma != 0.0) {
        return Err(Error::Domain("potential is singular on the polar axis or the z = 0 plane"));
    }
    let k = p.kinetic_scale();
    let mut v = -p.v0 + 0.5 * p.mu * p.omega * p.omega * r * r;
    if r > 0.0 {
        let inv_r2 = 1.0 / (r * r);
        if p.alpha != 0.0 {
            v += p.alpha * k * inv_r2;
        }
        if p.beta != 0.0 {
            v += p.beta * k * c * c * inv_r2 / (s * s);
        }
        if p.gamma != 0.0 {
            v += p.gamma * k * inv_r2 / (c * c);
        }
    }
    Ok(v)
}

/// `V(x, y, z)` in Cartesian coordinates:
/// `−V₀ + ½μω²r² + (α−β)ħ²/(2μr²) + βħ²/(2μ(x²+y²)) + γħ²/(2μz²)`.
pub fn potential_cartesian(p: &PotentialParams, x: f64, y: f64, z: f64) -> Result<f64> {
    let rho2 = x * x + y * y;
    let r2 = rho2 + z * z;
    let has_barrier = p.alpha != 0.0 || p.beta != 0.0 || p.gamma != 0.0;
    if !r2.is_finite() || (r2 == 0.0 && has_barrier) {
        return Err(Error::Domain("potential requires (x, y, z) != 0"));
    }
    if rho2 == 0.0 && p.beta != 0.0 {
        return Err(Error::Domain("potential requires x^2 + y^2 > 0 when beta != 0"));
    }
    if z == 0.0 && p.gamma != 0.0 {
        return Err(Error::Domain("potential requires z != 0 when gamma != 0"));
    }
    let k = p.kinetic_scale();
    let mut v = -p.v0 + 0.5 * p.mu * p.omega * p.omega * r2;
    if p.alpha != p.beta {
        v += (p.alpha - p.beta) * k / r2;
    }
    if p.beta != 0.0 {
        v += p.beta * k / rho2;
    }
    if p.gamma != 0.0 {
        v += p.gamma * k / (z * z);
    }
    Ok(v)
}

/// `λ = √(β + m²)`.
pub fn angular_lambda(p: &PotentialParams, m: i32) -> Result<f64> {
    let mf = f64::from(m);
    let radicand = p.beta + mf * mf;
    if radicand < 0.0 {
        return Err(Error::Domain("beta + m^2 must be non-negative"));
    }
    Ok(sqrt(radicand))
}

/// `k = √(γ + 1/4)`; positive because the parameters guarantee `γ > −1/4`.
pub fn angular_k(p: &PotentialParams) -> f64 {
    sqrt(p.gamma + 0.25)
}

/// `l̃` for the sector `(n_θ, m)`.
pub fn effective_ell(p: &PotentialParams, n_theta: u32, m: i32) -> Result<f64> {
    let lambda = angular_lambda(p, m).map_err(|_| Error::Inadmissible {
        n_theta,
        m,
        reason: "beta + m^2 < 0",
    })?;
    ell_from_indices(p, lambda, angular_k(p), n_theta).map_err(|reason| Error::Inadmissible {
        n_theta,
        m,
        reason,
    })
}

/// `l̃` from explicit angular indices `λ`, `k`.
pub fn effective_ell_from_indices(p: &PotentialParams, lambda: f64, k: f64, n_theta: u32) -> Result<f64> {
    ell_from_indices(p, lambda, k, n_theta).map_err(Error::Domain)
}

pub(crate) fn ell_from_indices(
    p: &PotentialParams,
    lambda: f64,
    k: f64,
    n_theta: u32,
) -> core::result::Result<f64, &'static str> {
    let level = k + lambda + 2.0 * f64::from(n_theta) + 1.0;
    let radicand = level * level + p.alpha - p.beta;
    if radicand < 0.0 {
        return Err("negative radicand in l~ (fall to center)");
    }
    let ell = sqrt(radicand) - 0.5;
    if ell < 0.0 {
        return Err("l~ < 0 is not normalizable at the origin");
    }
    Ok(ell)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_PI_3, FRAC_PI_4, PI};

    fn unit(alpha: f64, beta: f64, gamma: f64) -> PotentialParams {
        PotentialParams::unit(0.0, alpha, beta, gamma).unwrap()
    }

    #[test]
    fn parameter_validation() {
        let err = PotentialParams::unit(0.0, 0.0, 0.0, -0.3).unwrap_err();
        assert_eq!(err, Error::Domain("gamma must exceed -1/4"));
        assert!(PotentialParams::unit(0.0, 0.0, 0.0, -0.25).is_err());
        assert!(PotentialParams::new(0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0).is_err());
        assert!(PotentialParams::new(1.0, -1.0, 1.0, 0.0, 0.0, 0.0, 0.0).is_err());
        assert!(PotentialParams::new(1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0).is_err());
        assert!(PotentialParams::unit(f64::NAN, 0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn spherical_potential_examples() {
        let v = potential_spherical(&unit(0.0, 0.0, 0.0), 1.0, FRAC_PI_4).unwrap();
        assert!((v - 0.5).abs() < 1e-15);
        let v = potential_spherical(&unit(1.0, 0.0, 0.0), 2.0, FRAC_PI_3).unwrap();
        assert!((v - 2.125).abs() < 1e-15);
        let v = potential_spherical(&unit(0.0, 2.0, 0.0), 1.0, FRAC_PI_4).unwrap();
        assert!((v - 1.5).abs() < 1e-14);
    }

    #[test]
    fn spherical_potential_domain() {
        let p = unit(1.0, 0.5, 2.0);
        assert!(potential_spherical(&p, 0.0, 0.3).is_err());
        assert!(potential_spherical(&p, 1.0, 0.0).is_err());
        assert!(potential_spherical(&p, 1.0, FRAC_PI_2).is_err());
        assert!(potential_spherical(&p, 1.0, 2.0).is_err());
        // without the beta barrier the polar axis is allowed
        assert!(potential_spherical(&unit(1.0, 0.0, 2.0), 1.0, 0.0).is_ok());
    }

    #[test]
    fn cartesian_potential_examples() {
        let p = unit(0.0, 0.0, 0.0);
        let v = potential_cartesian(&p, 0.3, -1.2, 0.7).unwrap();
        assert!((v - 0.5 * (0.09 + 1.44 + 0.49)).abs() < 1e-15);
        let v = potential_cartesian(&unit(1.0, 1.0, 0.0), 1.0, 0.0, 1.0).unwrap();
        assert!((v - 1.5).abs() < 1e-15);
        let p = unit(1.0, 0.5, 2.0);
        assert!(potential_cartesian(&p, 0.0, 0.0, 1.0).is_err());
        assert!(potential_cartesian(&p, 1.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn lambda_and_k_examples() {
        assert_eq!(angular_lambda(&unit(0.0, 0.0, 0.0), -3).unwrap(), 3.0);
        assert_eq!(angular_lambda(&unit(0.0, 5.0, 0.0), 2).unwrap(), 3.0);
        assert!(angular_lambda(&unit(0.0, -1.0, 0.0), 0).is_err());
        assert_eq!(angular_k(&unit(0.0, 0.0, 0.0)), 0.5);
        assert_eq!(angular_k(&unit(0.0, 0.0, 2.0)), 1.5);
    }

    #[test]
    fn effective_ell_examples() {
        // k = 1.5, λ = 2 (β = 0, m = 2), α = β
        let ell = effective_ell(&unit(0.0, 0.0, 2.0), 0, 2).unwrap();
        assert!((ell - 4.0).abs() < 1e-15);
        let ell = effective_ell(&unit(0.0, 0.0, 0.0), 0, 0).unwrap();
        assert!((ell - 1.0).abs() < 1e-15);
        let ell = effective_ell(&unit(1.0, 0.5, 2.0), 1, 1).unwrap();
        assert!((ell - 5.268_249_634_206_576).abs() < 1e-13);
    }

    #[test]
    fn effective_ell_rejects_collapse() {
        // radicand (1.5)^2 - 10 < 0
        let p = unit(-10.0, 0.0, 0.0);
        assert!(matches!(effective_ell(&p, 0, 0), Err(Error::Inadmissible { .. })));
        // radicand 2.25 - 2.1 = 0.15 gives l~ < 0
        let p = unit(-2.1, 0.0, 0.0);
        assert!(matches!(effective_ell(&p, 0, 0), Err(Error::Inadmissible { .. })));
        // the same couplings are admissible one angular level up
        assert!(effective_ell(&p, 1, 0).is_ok());
        // beta + m^2 < 0
        let p = unit(0.0, -2.0, 0.0);
        assert!(matches!(effective_ell(&p, 0, 1), Err(Error::Inadmissible { .. })));
    }

    #[test]
    fn degenerate_limit_is_exact() {
        let p = unit(0.0, 0.0, 0.0);
        for nt in 0..=10 {
            for m in -10..=10 {
                let ell = effective_ell(&p, nt, m).unwrap();
                assert_eq!(ell, f64::from(m.unsigned_abs()) + 2.0 * f64::from(nt) + 1.0);
            }
        }
    }

    #[test]
    fn angular_norm_ground_state() {
        let mode = AngularMode::new(&unit(0.0, 0.0, 0.0), 0, 0).unwrap();
        assert!((mode.norm - 3f64.sqrt()).abs() < 1e-14);
        assert!((mode.eps - 1.125).abs() < 1e-15);
    }

    #[test]
    fn cartesian_matches_spherical_at_fixed_points() {
        let p = unit(1.0, 0.5, 2.0);
        for &(r, th, ph) in &[(0.7, 0.3, 1.1), (2.5, 1.2, 4.0), (1.0, FRAC_PI_4, PI)] {
            let (st, ct) = th.sin_cos();
            let (sp, cp) = ph.sin_cos();
            let a = potential_cartesian(&p, r * st * cp, r * st * sp, r * ct).unwrap();
            let b = potential_spherical(&p, r, th).unwrap();
            assert!(((a - b) / b).abs() < 1e-12);
        }
    }
}
