//! Closed-form bound states.
//!
//! `ψ_{n,n_θ,m}(r, θ, φ) = N e^{−μωr²/2ħ} (√(μω/ħ) r)^{l̃} L_n^{l̃+1/2}(μωr²/ħ)
//! (sinθ)^λ (cosθ)^{k+1/2} P_{n_θ}^{(λ,k)}(cos 2θ) e^{imφ}`
//!
//! normalized on the half space `θ ∈ (0, π/2)` with volume element
//! `r² sinθ dr dθ dφ`. The angular factor is orthonormal under `sinθ dθ`,
//! the radial factor under `r² dr`, so `N² = N_r² N_θ² / 2π`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::{FRAC_PI_2, PI};

use libm::{cos, exp, log, pow, sincos, sqrt};
use num_complex::Complex64;

use crate::model::{angular_k, angular_lambda, effective_ell, AngularMode, RadialMode};
use crate::specfun::{jacobi, laguerre};
use crate::{Error, PotentialParams, QuantumNumbers, Result};

/// `E = (2n + l̃ + 3/2)ħω − V₀`.
pub fn energy(p: &PotentialParams, qn: QuantumNumbers) -> Result<f64> {
    let ell = effective_ell(p, qn.n_theta, qn.m)?;
    Ok((2.0 * f64::from(qn.n) + ell + 1.5) * p.hbar() * p.omega() - p.v0())
}

/// `ε(n_θ) = (ħ²/2μ)(2n_θ + k + λ + 1)²`.
pub fn angular_energy(p: &PotentialParams, n_theta: u32, m: i32) -> Result<f64> {
    Ok(AngularMode::new(p, n_theta, m)?.eps)
}

/// Unnormalized angular shape `(sinθ)^λ (cosθ)^{k+1/2} P^{(λ,k)}(cos 2θ)`.
fn angular_shape(mode: &AngularMode, theta: f64) -> Result<f64> {
    if !(theta > 0.0 && theta < FRAC_PI_2) {
        return Err(Error::Domain("theta must lie in (0, pi/2)"));
    }
    let (s, c) = sincos(theta);
    let poly = jacobi(mode.n_theta, mode.lambda, mode.k, cos(2.0 * theta))?;
    Ok(pow(s, mode.lambda) * pow(c, mode.k + 0.5) * poly)
}

/// `Θ_{n_θ,m}(θ)`, orthonormal under `sinθ dθ` on `(0, π/2)`.
pub fn angular_wavefunction(mode: &AngularMode, theta: f64) -> Result<f64> {
    Ok(mode.norm * angular_shape(mode, theta)?)
}

/// `e^{−x/2} (√x)^{l̃} L_n^{l̃+1/2}(x)` with `x = μωr²/ħ`, multiplied by
/// `exp(ln_prefactor)`. Evaluated in log space so that large `l̃` neither
/// overflows nor underflows early.
fn radial_shape(p: &PotentialParams, ell: f64, n: u32, r: f64, ln_prefactor: f64) -> Result<f64> {
    if !(r >= 0.0) || !r.is_finite() {
        return Err(Error::Domain("r must be non-negative and finite"));
    }
    let x = p.inv_length_sq() * r * r;
    let poly = laguerre(n, ell + 0.5, x)?;
    if r == 0.0 {
        return Ok(if ell == 0.0 { exp(ln_prefactor) * poly } else { 0.0 });
    }
    Ok(exp(ln_prefactor - 0.5 * x + 0.5 * ell * log(x)) * poly)
}

/// `R_{n}(r)`, orthonormal under `r² dr` on `(0, ∞)`.
pub fn radial_wavefunction(p: &PotentialParams, mode: &RadialMode, n: u32, r: f64) -> Result<f64> {
    radial_shape(p, mode.ell_tilde, n, r, log(mode.norm))
}

/// A fully resolved bound state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenState {
    pub qn: QuantumNumbers,
    pub angular: AngularMode,
    pub radial: RadialMode,
    /// `N_{n,n_θ,m}` of the full wavefunction.
    pub total_norm: f64,
}

impl EigenState {
    pub fn new(p: &PotentialParams, qn: QuantumNumbers) -> Result<Self> {
        let angular = AngularMode::new(p, qn.n_theta, qn.m)?;
        let radial = RadialMode::new(p, qn)?;
        let total_norm = radial.norm * angular.norm / sqrt(2.0 * PI);
        Ok(EigenState { qn, angular, radial, total_norm })
    }

    pub fn energy(&self) -> f64 {
        self.radial.energy
    }

    pub fn radial_at(&self, p: &PotentialParams, r: f64) -> Result<f64> {
        radial_wavefunction(p, &self.radial, self.qn.n, r)
    }

    pub fn angular_at(&self, theta: f64) -> Result<f64> {
        angular_wavefunction(&self.angular, theta)
    }

    /// `ψ(r, θ, φ)`.
    pub fn wavefunction(&self, p: &PotentialParams, r: f64, theta: f64, phi: f64) -> Result<Complex64> {
        let radial = radial_shape(p, self.radial.ell_tilde, self.qn.n, r, log(self.total_norm))?;
        let angular = angular_shape(&self.angular, theta)?;
        let (s, c) = sincos(f64::from(self.qn.m) * phi);
        let amp = radial * angular;
        Ok(Complex64::new(amp * c, amp * s))
    }
}

/// `ψ_{n,n_θ,m}(r, θ, φ)`.
pub fn full_wavefunction(
    p: &PotentialParams,
    qn: QuantumNumbers,
    r: f64,
    theta: f64,
    phi: f64,
) -> Result<Complex64> {
    EigenState::new(p, qn)?.wavefunction(p, r, theta, phi)
}

/// Ordering used for state tables: energy, then `(n, n_θ, m)`.
pub fn state_order(a: &EigenState, b: &EigenState) -> Ordering {
    a.energy()
        .total_cmp(&b.energy())
        .then(a.qn.n.cmp(&b.qn.n))
        .then(a.qn.n_theta.cmp(&b.qn.n_theta))
        .then(a.qn.m.cmp(&b.qn.m))
}

/// Lower bound on `l̃` over all states sharing `λ` with angular level at
/// least `n_theta`, ignoring admissibility. Monotone in both `λ` and `n_θ`.
fn ell_lower_bound(p: &PotentialParams, lambda: f64, k: f64, n_theta: u32) -> f64 {
    let level = k + lambda + 2.0 * f64::from(n_theta) + 1.0;
    let radicand = level * level + p.alpha() - p.beta();
    if radicand <= 0.0 {
        return 0.0;
    }
    (sqrt(radicand) - 0.5).max(0.0)
}

/// All admissible states with `|m| ≤ m_max` and `E ≤ e_max`, sorted by
/// [`state_order`].
///
/// `l̃` grows with `n_θ` and `|m|`, so the scan stops each direction as soon
/// as a lower bound on the energy passes `e_max`.
pub fn enumerate_states(p: &PotentialParams, e_max: f64, m_max: u32) -> Vec<EigenState> {
    let mut states = Vec::new();
    if !e_max.is_finite() {
        return states;
    }
    let k = angular_k(p);
    let quantum = p.hbar() * p.omega();
    let floor = |ell: f64| (ell + 1.5) * quantum - p.v0();
    for abs_m in 0..=m_max {
        let Ok(m) = i32::try_from(abs_m) else { break };
        let lambda = match angular_lambda(p, m) {
            Ok(l) => l,
            Err(_) => continue,
        };
        if floor(ell_lower_bound(p, lambda, k, 0)) > e_max {
            break;
        }
        let mut n_theta = 0u32;
        while floor(ell_lower_bound(p, lambda, k, n_theta)) <= e_max {
            let signs: &[i32] = if m == 0 { &[0] } else { &[-m, m] };
            for &signed_m in signs {
                let mut n = 0u32;
                while let Ok(state) = EigenState::new(p, QuantumNumbers::new(n, n_theta, signed_m)) {
                    if state.energy() > e_max {
                        break;
                    }
                    states.push(state);
                    n += 1;
                }
            }
            n_theta += 1;
        }
    }
    states.sort_by(state_order);
    states
}
