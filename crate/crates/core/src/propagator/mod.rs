//! Euclidean-time kernels (`T → −iτ`).
//!
//! The closed-form radial kernel
//!
//! ```text
//! K(r_a, r_b; τ) = e^{V₀τ/ħ} μω / (ħ sinh ωτ √(r_a r_b))
//!                  · I_{l̃+1/2}(μω r_a r_b / (ħ sinh ωτ))
//!                  · exp[−(μω/2ħ)(r_a² + r_b²) coth ωτ]
//! ```
//!
//! and its spectral expansion `Σ_n e^{−E_n τ/ħ} R_n(r_a) R_n(r_b)` both
//! integrate against `r² dr`. The lattice kernel in [`lattice`] rebuilds the
//! same object from the time-sliced radial action.

pub mod lattice;

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use libm::{exp, expm1, log, sincos, sqrt};
use num_complex::Complex64;

use crate::model::{effective_ell, AngularMode, RadialMode};
use crate::oracle::{composite, gauss_legendre, integrate_refined, Estimate};
use crate::specfun::{laguerre, ln_bessel_i, log_factorial, log_gamma};
use crate::spectrum::{angular_wavefunction, enumerate_states, radial_wavefunction, EigenState};
use crate::{Error, PotentialParams, QuantumNumbers, Result};

pub use lattice::{
    lattice_radial_kernel, lattice_radial_kernel_ell, lattice_radial_profile_ell, LatticeProfile, LatticeSpec,
    SliceRule,
};

/// A truncated sum with a bound (or, where noted, an estimate) on what the
/// omitted terms contribute.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncated<T> {
    pub value: T,
    pub tail: f64,
}

/// Endpoints, Euclidean time and cutoffs for a full-kernel evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagatorQuery {
    pub ra: f64,
    pub rb: f64,
    pub theta_a: f64,
    pub theta_b: f64,
    pub phi_a: f64,
    pub phi_b: f64,
    pub tau: f64,
    /// Highest radial quantum number kept (inclusive).
    pub n_cut: u32,
    /// Highest angular quantum number kept (inclusive).
    pub ntheta_cut: u32,
    /// Largest `|m|` kept.
    pub m_cut: u32,
}

impl PropagatorQuery {
    pub fn validate(&self) -> Result<()> {
        check_radius(self.ra)?;
        check_radius(self.rb)?;
        check_theta(self.theta_a)?;
        check_theta(self.theta_b)?;
        check_tau(self.tau)?;
        if !self.phi_a.is_finite() || !self.phi_b.is_finite() {
            return Err(Error::Domain("phi must be finite"));
        }
        if self.n_cut == 0 || self.ntheta_cut == 0 {
            return Err(Error::Domain("radial and angular cutoffs must be at least 1"));
        }
        Ok(())
    }
}

fn check_radius(r: f64) -> Result<()> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::Domain("radii must be positive and finite"));
    }
    Ok(())
}

fn check_theta(theta: f64) -> Result<()> {
    if !(theta > 0.0 && theta < FRAC_PI_2) {
        return Err(Error::Domain("theta must lie in (0, pi/2)"));
    }
    Ok(())
}

fn check_tau(tau: f64) -> Result<()> {
    if !(tau > 0.0) || !tau.is_finite() {
        return Err(Error::Domain("tau must be positive and finite"));
    }
    Ok(())
}

/// `ln K` of the closed-form radial kernel for a given `l̃`.
fn ln_radial_kernel_closed(p: &PotentialParams, ell: f64, ra: f64, rb: f64, tau: f64) -> Result<f64> {
    check_radius(ra)?;
    check_radius(rb)?;
    check_tau(tau)?;
    let c = p.inv_length_sq();
    let wt = p.omega() * tau;
    // q = e^{-2ωτ}; sinh ωτ = e^{ωτ}(1 − q)/2, coth ωτ = (1 + q)/(1 − q)
    let one_minus_q = -expm1(-2.0 * wt);
    let q = 1.0 - one_minus_q;
    let ln_sinh = wt + log(0.5 * one_minus_q);
    let coth = (1.0 + q) / one_minus_q;
    let arg = c * ra * rb * exp(-ln_sinh);
    Ok(-0.5 * log(ra * rb) + p.v0() * tau / p.hbar() + log(c) - ln_sinh
        + ln_bessel_i(ell + 0.5, arg)?
        - 0.5 * c * (ra * ra + rb * rb) * coth)
}

fn exp_checked(ln: f64, what: &'static str) -> Result<f64> {
    if ln > log(f64::MAX) {
        return Err(Error::Overflow(what));
    }
    Ok(exp(ln))
}

/// Closed-form radial kernel for an explicit `l̃ ≥ 0`.
pub fn radial_kernel_closed_ell(p: &PotentialParams, ell: f64, ra: f64, rb: f64, tau: f64) -> Result<f64> {
    if !(ell >= 0.0) {
        return Err(Error::Domain("l~ must be non-negative"));
    }
    exp_checked(ln_radial_kernel_closed(p, ell, ra, rb, tau)?, "radial kernel exceeds the f64 range")
}

/// Closed-form radial kernel of the sector `(n_θ, m)`.
pub fn radial_kernel_closed(
    p: &PotentialParams,
    n_theta: u32,
    m: i32,
    ra: f64,
    rb: f64,
    tau: f64,
) -> Result<f64> {
    radial_kernel_closed_ell(p, effective_ell(p, n_theta, m)?, ra, rb, tau)
}

fn radial_partial_sum(p: &PotentialParams, ell: f64, ra: f64, rb: f64, tau: f64, n_cut: u32) -> Result<f64> {
    let mut sum = 0.0;
    for n in 0..=n_cut {
        let mode = RadialMode::from_ell(p, ell, n);
        let weight = exp(-mode.energy * tau / p.hbar());
        if weight == 0.0 {
            break;
        }
        sum += weight * radial_wavefunction(p, &mode, n, ra)? * radial_wavefunction(p, &mode, n, rb)?;
    }
    Ok(sum)
}

/// Spectral radial kernel for an explicit `l̃`, summed over `n = 0..=n_cut`.
///
/// The tail is bounded by Cauchy–Schwarz from the diagonal tails,
/// `|tail(a, b)| ≤ √(tail(a, a) tail(b, b))`, each diagonal tail being the
/// closed-form diagonal minus its partial sum (all terms positive there),
/// plus a few ulps of the diagonal for the rounding in that subtraction.
pub fn radial_kernel_spectral_ell(
    p: &PotentialParams,
    ell: f64,
    ra: f64,
    rb: f64,
    tau: f64,
    n_cut: u32,
) -> Result<Truncated<f64>> {
    check_radius(ra)?;
    check_radius(rb)?;
    check_tau(tau)?;
    if !(ell >= 0.0) {
        return Err(Error::Domain("l~ must be non-negative"));
    }
    let value = radial_partial_sum(p, ell, ra, rb, tau, n_cut)?;
    let diag_tail = |r: f64| -> Result<f64> {
        let partial = radial_partial_sum(p, ell, r, r, tau, n_cut)?;
        Ok(match radial_kernel_closed_ell(p, ell, r, r, tau) {
            Ok(full) => (full - partial).max(0.0) + 8.0 * f64::EPSILON * full,
            Err(_) => f64::INFINITY,
        })
    };
    let tail = sqrt(diag_tail(ra)? * diag_tail(rb)?);
    Ok(Truncated { value, tail })
}

/// Spectral radial kernel of the sector `(n_θ, m)`.
pub fn radial_kernel_spectral(
    p: &PotentialParams,
    n_theta: u32,
    m: i32,
    ra: f64,
    rb: f64,
    tau: f64,
    n_cut: u32,
) -> Result<Truncated<f64>> {
    radial_kernel_spectral_ell(p, effective_ell(p, n_theta, m)?, ra, rb, tau, n_cut)
}

/// Angular kernel `Σ_{n_θ ≤ cut} e^{−ε(n_θ) s/ħ} Θ(θ_a) Θ(θ_b)` in the
/// pseudo-time `s`.
///
/// The tail is an estimate: the first omitted term times the geometric
/// factor of the following gap.
pub fn angular_kernel_spectral(
    p: &PotentialParams,
    m: i32,
    theta_a: f64,
    theta_b: f64,
    s_tau: f64,
    ntheta_cut: u32,
) -> Result<Truncated<f64>> {
    check_theta(theta_a)?;
    check_theta(theta_b)?;
    if !(s_tau > 0.0) || !s_tau.is_finite() {
        return Err(Error::Domain("pseudo-time must be positive and finite"));
    }
    let term = |n_theta: u32| -> Result<(f64, f64)> {
        let mode = AngularMode::new(p, n_theta, m)?;
        let value = exp(-mode.eps * s_tau / p.hbar())
            * angular_wavefunction(&mode, theta_a)?
            * angular_wavefunction(&mode, theta_b)?;
        Ok((value, mode.eps))
    };
    let mut value = 0.0;
    for n_theta in 0..=ntheta_cut {
        value += term(n_theta)?.0;
    }
    let (next, eps_next) = term(ntheta_cut + 1)?;
    let eps_after = AngularMode::new(p, ntheta_cut + 2, m)?.eps;
    let ratio = exp(-(eps_after - eps_next) * s_tau / p.hbar());
    Ok(Truncated { value, tail: next.abs() / (1.0 - ratio) })
}

/// Full kernel `Σ_n Σ_{n_θ} Σ_{|m| ≤ m_cut} e^{−Eτ/ħ} ψ*(a) ψ(b)`.
///
/// Sectors that are not admissible (`β + m² < 0` or `l̃ < 0`) carry no
/// states and are skipped. Within each kept sector the radial tail is a
/// bound; the contribution of the first omitted angular and azimuthal
/// sectors is estimated from their Cauchy–Schwarz radial envelope, damped
/// geometrically by `e^{−ωτ}` per further level.
pub fn full_kernel_spectral(p: &PotentialParams, q: &PropagatorQuery) -> Result<Truncated<Complex64>> {
    q.validate()?;
    let dphi = q.phi_b - q.phi_a;
    let m_cut = i32::try_from(q.m_cut).map_err(|_| Error::Domain("m cutoff too large"))?;
    let mut value = Complex64::new(0.0, 0.0);
    let mut tail = 0.0;
    let sector = |n_theta: u32, m: i32| -> Option<(f64, f64)> {
        let ell = effective_ell(p, n_theta, m).ok()?;
        let mode = AngularMode::new(p, n_theta, m).ok()?;
        let ang = angular_wavefunction(&mode, q.theta_a).ok()? * angular_wavefunction(&mode, q.theta_b).ok()?;
        Some((ell, ang / (2.0 * PI)))
    };
    let envelope = |ell: f64| -> f64 {
        let ka = radial_kernel_closed_ell(p, ell, q.ra, q.ra, q.tau).unwrap_or(f64::INFINITY);
        let kb = radial_kernel_closed_ell(p, ell, q.rb, q.rb, q.tau).unwrap_or(f64::INFINITY);
        sqrt(ka * kb)
    };
    for m in -m_cut..=m_cut {
        let (s, c) = sincos(f64::from(m) * dphi);
        for n_theta in 0..=q.ntheta_cut {
            let Some((ell, ang)) = sector(n_theta, m) else { continue };
            let radial = radial_kernel_spectral_ell(p, ell, q.ra, q.rb, q.tau, q.n_cut)?;
            value += Complex64::new(c, s) * (ang * radial.value);
            tail += (ang * radial.tail).abs();
        }
    }
    let damping = 1.0 / (1.0 - exp(-p.omega() * q.tau));
    let mut frontier = Vec::new();
    for m in -m_cut..=m_cut {
        frontier.push((q.ntheta_cut + 1, m));
    }
    for n_theta in 0..=q.ntheta_cut + 1 {
        frontier.push((n_theta, m_cut + 1));
        frontier.push((n_theta, -m_cut - 1));
    }
    for (n_theta, m) in frontier {
        if let Some((ell, ang)) = sector(n_theta, m) {
            tail += (ang * envelope(ell)).abs() * damping * damping;
        }
    }
    Ok(Truncated { value, tail })
}

/// `|LHS − RHS|` of the Hille–Hardy bilinear generating formula
///
/// ```text
/// s/(1−s²) exp[−½(X+Y)(1+s²)/(1−s²)] I_{l̃+1/2}(2√(XY) s/(1−s²))
///   = Σ_{n=0}^{n_terms} s^{2n+l̃+3/2} n! e^{−(X+Y)/2} (√(XY))^{l̃+1/2}
///     L_n^{l̃+1/2}(X) L_n^{l̃+1/2}(Y) / Γ(n+l̃+3/2)
/// ```
pub fn hille_hardy_residual(x_val: f64, y_val: f64, s: f64, ell: f64, n_terms: u32) -> Result<f64> {
    if !(x_val > 0.0) || !(y_val > 0.0) || !x_val.is_finite() || !y_val.is_finite() {
        return Err(Error::Domain("Hille-Hardy arguments X, Y must be positive"));
    }
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::Domain("Hille-Hardy requires 0 < s < 1"));
    }
    if !(ell >= 0.0) {
        return Err(Error::Domain("l~ must be non-negative"));
    }
    let nu = ell + 0.5;
    let s2 = s * s;
    let one_minus = 1.0 - s2;
    let sum_xy = x_val + y_val;
    let ln_sqrt_xy = 0.5 * log(x_val * y_val);
    let lhs = exp(
        log(s / one_minus) - 0.5 * sum_xy * (1.0 + s2) / one_minus
            + ln_bessel_i(nu, 2.0 * exp(ln_sqrt_xy) * s / one_minus)?,
    );
    let ln_common = -0.5 * sum_xy + nu * ln_sqrt_xy;
    let mut rhs = 0.0;
    for n in 0..=n_terms {
        let nf = f64::from(n);
        let ln_pref = (2.0 * nf + ell + 1.5) * log(s) + log_factorial(n) + ln_common
            - log_gamma(nf + ell + 1.5)?;
        rhs += exp(ln_pref) * laguerre(n, nu, x_val)? * laguerre(n, nu, y_val)?;
    }
    Ok((lhs - rhs).abs())
}

/// `|∫u⁴e^{−au²}du − (3/4a²)∫e^{−au²}du|` over the real line, both
/// integrals by composite Gauss–Legendre quadrature.
pub fn quartic_moment_check(a: f64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::Domain("quartic moment check requires a > 0"));
    }
    // e^{-a L²} = e^{-80}
    let half_width = sqrt(80.0 / a);
    let rule = gauss_legendre(20);
    let panels = 40;
    let gauss = composite(&rule, |u| exp(-a * u * u), 0.0, half_width, panels);
    let quartic = composite(&rule, |u| u * u * u * u * exp(-a * u * u), 0.0, half_width, panels);
    Ok(2.0 * (quartic - 0.75 / (a * a) * gauss).abs())
}

/// Partition-function check: the diagonal of the truncated full kernel,
/// integrated over the half space, against `Σ e^{−Eτ/ħ}` over the
/// enumerated states with `E ≤ e_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceCheck {
    /// `∫ K(x, x) dV` for the kernel truncated at the query cutoffs.
    pub kernel_integral: Estimate,
    /// Closed-form `Σ e^{−Eτ/ħ}` over the same truncation box.
    pub box_sum: f64,
    /// `Σ e^{−Eτ/ħ}` over `enumerate_states(p, e_max, m_cut)`.
    pub partition_sum: f64,
    /// Weight of the states in one set but not the other.
    pub truncation_bound: f64,
}

impl TraceCheck {
    pub fn discrepancy(&self) -> f64 {
        (self.kernel_integral.value - self.partition_sum).abs()
    }

    pub fn holds(&self) -> bool {
        self.discrepancy() <= self.truncation_bound + self.kernel_integral.error
    }
}

/// Builds a [`TraceCheck`].
///
/// `K(x, x) = Σ_{m, n_θ} Θ²(θ)/(2π) · K_rad(r, r)`, so the volume integral
/// factors into one radial and one angular quadrature per sector; the
/// `φ` integral contributes exactly `2π`.
pub fn trace_consistency(
    p: &PotentialParams,
    tau: f64,
    n_cut: u32,
    ntheta_cut: u32,
    m_cut: u32,
    e_max: f64,
) -> Result<TraceCheck> {
    check_tau(tau)?;
    let m_max = i32::try_from(m_cut).map_err(|_| Error::Domain("m cutoff too large"))?;
    let r_hi = 12.0 / sqrt(p.inv_length_sq());
    let mut integral = 0.0;
    let mut error = 0.0;
    let mut box_sum = 0.0;
    let mut box_states = Vec::new();
    for m in -m_max..=m_max {
        for n_theta in 0..=ntheta_cut {
            let Ok(ell) = effective_ell(p, n_theta, m) else { continue };
            let mode = AngularMode::new(p, n_theta, m)?;
            let angular = integrate_refined(
                |t| {
                    let v = if t > 0.0 && t < FRAC_PI_2 { angular_wavefunction(&mode, t).unwrap_or(0.0) } else { 0.0 };
                    v * v * libm::sin(t)
                },
                0.0,
                FRAC_PI_2,
                8,
                1e-13,
            )?;
            let radial = integrate_refined(
                |r| {
                    if r <= 0.0 {
                        return 0.0;
                    }
                    radial_partial_sum(p, ell, r, r, tau, n_cut).unwrap_or(0.0) * r * r
                },
                0.0,
                r_hi,
                16,
                1e-13,
            )?;
            integral += angular.value * radial.value;
            error += angular.error * radial.value.abs() + radial.error * angular.value.abs();
            for n in 0..=n_cut {
                let qn = QuantumNumbers::new(n, n_theta, m);
                let state = EigenState::new(p, qn)?;
                box_sum += exp(-state.energy() * tau / p.hbar());
                box_states.push((qn, state.energy()));
            }
        }
    }
    let enumerated = enumerate_states(p, e_max, m_cut);
    let partition_sum = enumerated.iter().map(|s| exp(-s.energy() * tau / p.hbar())).sum();
    let mut truncation_bound = 0.0;
    for &(qn, e) in &box_states {
        if e > e_max {
            truncation_bound += exp(-e * tau / p.hbar());
        } else if !enumerated.iter().any(|s| s.qn == qn) {
            return Err(Error::NonConvergence("enumeration missed a state below e_max"));
        }
    }
    for s in &enumerated {
        if s.qn.n > n_cut || s.qn.n_theta > ntheta_cut {
            truncation_bound += exp(-s.energy() * tau / p.hbar());
        }
    }
    Ok(TraceCheck {
        kernel_integral: Estimate { value: integral, error },
        box_sum,
        partition_sum,
        truncation_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn closed_kernel_is_symmetric_and_positive() {
        let p = PotentialParams::unit(0.3, 1.0, 0.5, 2.0).unwrap();
        for &(a, b) in &[(0.8, 1.2), (0.1, 3.0), (2.0, 2.5)] {
            let k1 = radial_kernel_closed(&p, 1, 1, a, b, 0.7).unwrap();
            let k2 = radial_kernel_closed(&p, 1, 1, b, a, 0.7).unwrap();
            assert_eq!(k1, k2);
            assert!(k1 > 0.0);
        }
        assert!(radial_kernel_closed(&p, 0, 0, 1.0, 1.0, 0.0).is_err());
        assert!(radial_kernel_closed(&p, 0, 0, -1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn closed_matches_spectral_isotropic() {
        let p = PotentialParams::isotropic();
        let closed = radial_kernel_closed(&p, 0, 0, 0.8, 1.2, 1.0).unwrap();
        let spectral = radial_kernel_spectral(&p, 0, 0, 0.8, 1.2, 1.0, 40).unwrap();
        assert!(rel(spectral.value, closed) <= 1e-10);
        assert!(spectral.tail <= 1e-10 * closed);
    }

    #[test]
    fn long_time_limit_is_ground_state() {
        let p = PotentialParams::isotropic();
        let tau = 20.0;
        let k = radial_kernel_spectral(&p, 0, 0, 0.8, 1.2, tau, 10).unwrap().value;
        let ground = RadialMode::from_ell(&p, 1.0, 0);
        let r0 = |r| radial_wavefunction(&p, &ground, 0, r).unwrap();
        let scaled = k * (ground.energy * tau).exp();
        assert!((scaled - r0(0.8) * r0(1.2)).abs() <= 1e-8);
    }

    #[test]
    fn diagonal_partial_sums_increase() {
        let p = PotentialParams::unit(0.0, 1.0, 0.5, 2.0).unwrap();
        let mut prev = 0.0;
        for cut in 0..12 {
            let v = radial_kernel_spectral(&p, 1, 0, 1.1, 1.1, 0.4, cut).unwrap().value;
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn angular_kernel_symmetry_and_dominance() {
        let p = PotentialParams::unit(0.0, 1.0, 0.5, 2.0).unwrap();
        let a = angular_kernel_spectral(&p, 1, 0.3, 1.1, 0.5, 20).unwrap().value;
        let b = angular_kernel_spectral(&p, 1, 1.1, 0.3, 0.5, 20).unwrap().value;
        assert!(rel(a, b) < 1e-14);
        // gap ε(1) − ε(0) times s ≥ 30
        let m0 = AngularMode::new(&p, 0, 1).unwrap();
        let m1 = AngularMode::new(&p, 1, 1).unwrap();
        let s = 30.0 / (m1.eps - m0.eps);
        let k = angular_kernel_spectral(&p, 1, 0.4, 0.9, s, 10).unwrap().value;
        let lead = (-m0.eps * s).exp()
            * angular_wavefunction(&m0, 0.4).unwrap()
            * angular_wavefunction(&m0, 0.9).unwrap();
        assert!(rel(k, lead) <= 1e-10);
    }

    #[test]
    fn full_kernel_structure() {
        let p = PotentialParams::unit(0.0, 1.0, 0.5, 2.0).unwrap();
        let q = PropagatorQuery {
            ra: 1.0, rb: 1.4, theta_a: 0.5, theta_b: 0.9, phi_a: 0.2, phi_b: 1.3,
            tau: 0.8, n_cut: 20, ntheta_cut: 6, m_cut: 4,
        };
        let ab = full_kernel_spectral(&p, &q).unwrap().value;
        let swapped = PropagatorQuery {
            ra: q.rb, rb: q.ra, theta_a: q.theta_b, theta_b: q.theta_a, phi_a: q.phi_b, phi_b: q.phi_a, ..q
        };
        let ba = full_kernel_spectral(&p, &swapped).unwrap().value;
        assert!((ab - ba.conj()).norm_sqr().sqrt() <= 1e-14 * ab.norm_sqr().sqrt());
        let shifted = PropagatorQuery { phi_a: q.phi_a + 0.7, phi_b: q.phi_b + 0.7, ..q };
        let sh = full_kernel_spectral(&p, &shifted).unwrap().value;
        assert!((ab - sh).norm_sqr().sqrt() <= 1e-13 * ab.norm_sqr().sqrt());
        let diag = PropagatorQuery { rb: q.ra, theta_b: q.theta_a, phi_b: q.phi_a, ..q };
        let d = full_kernel_spectral(&p, &diag).unwrap().value;
        assert!(d.re > 0.0 && d.im == 0.0);
    }

    #[test]
    fn query_validation() {
        let q = PropagatorQuery {
            ra: 1.0, rb: 1.0, theta_a: 0.5, theta_b: 0.5, phi_a: 0.0, phi_b: 0.0,
            tau: 1.0, n_cut: 5, ntheta_cut: 5, m_cut: 0,
        };
        assert!(q.validate().is_ok());
        assert!(PropagatorQuery { tau: 0.0, ..q }.validate().is_err());
        assert!(PropagatorQuery { n_cut: 0, ..q }.validate().is_err());
        assert!(PropagatorQuery { theta_b: 2.0, ..q }.validate().is_err());
    }

    #[test]
    fn hille_hardy_examples() {
        assert!(hille_hardy_residual(1.0, 1.0, 0.3, 1.0, 50).unwrap() <= 1e-12);
        assert!(hille_hardy_residual(0.5, 2.0, 0.6, 2.5, 120).unwrap() <= 1e-10);
        assert!(hille_hardy_residual(1.0, 1.0, 1e-4, 1.0, 10).unwrap() <= 1e-14);
        assert!(hille_hardy_residual(1.0, 1.0, 1.0, 1.0, 10).is_err());
        assert!(hille_hardy_residual(-1.0, 1.0, 0.5, 1.0, 10).is_err());
    }

    #[test]
    fn hille_hardy_truncation_decays_geometrically() {
        // residual after n terms ~ s^{2n}
        let s: f64 = 0.5;
        let r10 = hille_hardy_residual(1.2, 0.7, s, 1.5, 10).unwrap();
        let r14 = hille_hardy_residual(1.2, 0.7, s, 1.5, 14).unwrap();
        let ratio = r14 / r10;
        assert!(ratio < s.powi(8) * 4.0 && ratio > s.powi(8) / 4.0, "ratio {ratio}");
    }

    #[test]
    fn quartic_moment_examples() {
        for a in [0.1, 0.5, 1.0, 10.0, 100.0] {
            assert!(quartic_moment_check(a).unwrap() <= 1e-12, "a = {a}");
        }
        assert!(quartic_moment_check(0.0).is_err());
    }
}
