//! Quadrature rules.
//!
//! Gauss–Legendre nodes come from Newton iteration on the Legendre
//! recurrence. Rules for other classical weights are built by Golub–Welsch
//! from their Jacobi matrices, with nodes found by Sturm bisection and
//! weights from the Christoffel numbers of the orthonormal recurrence, so
//! none of them touches [`crate::specfun`].

use alloc::vec::Vec;
use core::f64::consts::PI;

use libm::{cos, exp, log, sqrt};

use super::tridiagonal::SymTridiagonal;
use crate::specfun::log_gamma;
use crate::{Error, Result};

/// A quadrature rule `∫ w(x) f(x) dx ≈ Σ wᵢ f(xᵢ)` with nodes ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

/// `n`-point Gauss–Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> GaussRule {
    assert!(n > 0, "a quadrature rule needs at least one node");
    let mut nodes = alloc::vec![0.0; n];
    let mut weights = alloc::vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut z = cos(PI * (i as f64 + 0.75) / (nf + 0.5));
        let mut deriv = 0.0;
        for _ in 0..100 {
            let (mut p1, mut p2) = (1.0, 0.0);
            for j in 1..=n {
                let jf = j as f64;
                let p3 = p2;
                p2 = p1;
                p1 = ((2.0 * jf - 1.0) * z * p2 - (jf - 1.0) * p3) / jf;
            }
            deriv = nf * (z * p1 - p2) / (z * z - 1.0);
            let step = p1 / deriv;
            z -= step;
            if step.abs() <= 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - z * z) * deriv * deriv);
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    GaussRule { nodes, weights }
}

/// Golub–Welsch from the recurrence `b_{j+1} p_{j+1} = (x − a_j) p_j − b_j p_{j−1}`
/// with total mass `mass`. `off[j]` holds `b_{j+1}`.
fn golub_welsch(diag: Vec<f64>, off: Vec<f64>, mass: f64) -> GaussRule {
    let n = diag.len();
    let jacobi = SymTridiagonal::new(diag.clone(), off.clone());
    let nodes = jacobi.lowest_eigenvalues(n);
    let weights = nodes
        .iter()
        .map(|&x| {
            let (mut prev, mut cur) = (0.0, 1.0);
            let mut sum = 1.0;
            for j in 0..n - 1 {
                let back = if j == 0 { 0.0 } else { off[j - 1] };
                let next = ((x - diag[j]) * cur - back * prev) / off[j];
                prev = cur;
                cur = next;
                sum += cur * cur;
            }
            mass / sum
        })
        .collect();
    GaussRule { nodes, weights }
}

/// `n`-point Gauss–Jacobi rule for the weight `(1−x)^a (1+x)^b` on `[-1, 1]`.
pub fn gauss_jacobi(n: usize, a: f64, b: f64) -> Result<GaussRule> {
    if !(a > -1.0) || !(b > -1.0) {
        return Err(Error::Domain("gauss_jacobi requires a > -1 and b > -1"));
    }
    assert!(n > 0, "a quadrature rule needs at least one node");
    let ab = a + b;
    let diag = (0..n)
        .map(|j| {
            if j == 0 {
                (b - a) / (ab + 2.0)
            } else {
                let s = 2.0 * j as f64 + ab;
                (b * b - a * a) / (s * (s + 2.0))
            }
        })
        .collect();
    let off = (1..n)
        .map(|j| {
            let jf = j as f64;
            let s = 2.0 * jf + ab;
            if j == 1 {
                sqrt(4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab)))
            } else {
                sqrt(4.0 * jf * (jf + a) * (jf + b) * (jf + ab) / (s * s * (s + 1.0) * (s - 1.0)))
            }
        })
        .collect();
    let ln_mass = (ab + 1.0) * log(2.0) + log_gamma(a + 1.0)? + log_gamma(b + 1.0)?
        - log_gamma(ab + 2.0)?;
    Ok(golub_welsch(diag, off, exp(ln_mass)))
}

/// `n`-point generalized Gauss–Laguerre rule for the weight `x^a e^{−x}` on `[0, ∞)`.
pub fn gauss_laguerre(n: usize, a: f64) -> Result<GaussRule> {
    if !(a > -1.0) {
        return Err(Error::Domain("gauss_laguerre requires a > -1"));
    }
    assert!(n > 0, "a quadrature rule needs at least one node");
    let diag = (0..n).map(|j| 2.0 * j as f64 + a + 1.0).collect();
    let off = (1..n).map(|j| sqrt(j as f64 * (j as f64 + a))).collect();
    Ok(golub_welsch(diag, off, exp(log_gamma(a + 1.0)?)))
}

/// Composite rule: `rule` (on `[-1, 1]`) applied on `panels` equal panels of `[a, b]`.
pub fn composite(rule: &GaussRule, f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let width = (b - a) / panels as f64;
    let half = 0.5 * width;
    let mut total = 0.0;
    for p in 0..panels {
        let mid = a + (p as f64 + 0.5) * width;
        let mut panel = 0.0;
        for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
            panel += w * f(mid + half * x);
        }
        total += half * panel;
    }
    total
}

/// An integral together with an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

const PANEL_RULE: usize = 16;
const MAX_DOUBLINGS: u32 = 10;

/// Composite 16-point Gauss–Legendre on `[a, b]`, doubling the panel count
/// until two successive values differ by at most `abs_tol`.
pub fn integrate_refined(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    initial_panels: usize,
    abs_tol: f64,
) -> Result<Estimate> {
    let rule = gauss_legendre(PANEL_RULE);
    let mut panels = initial_panels.max(1);
    let mut coarse = composite(&rule, &f, a, b, panels);
    for _ in 0..MAX_DOUBLINGS {
        panels *= 2;
        let fine = composite(&rule, &f, a, b, panels);
        let error = (fine - coarse).abs();
        if error <= abs_tol {
            return Ok(Estimate { value: fine, error });
        }
        coarse = fine;
    }
    Err(Error::NonConvergence("panel refinement stalled"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_rule_integrates_polynomials_exactly() {
        let rule = gauss_legendre(8);
        for deg in 0..16 {
            let got = rule.integrate(|x| x.powi(deg));
            let want = if deg % 2 == 1 { 0.0 } else { 2.0 / (deg as f64 + 1.0) };
            assert!((got - want).abs() < 1e-14, "deg {deg}");
        }
        let total: f64 = gauss_legendre(64).weights.iter().sum();
        assert!((total - 2.0).abs() < 1e-13);
    }

    #[test]
    fn golub_welsch_reproduces_legendre() {
        let a = gauss_legendre(20);
        let b = gauss_jacobi(20, 0.0, 0.0).unwrap();
        for i in 0..20 {
            assert!((a.nodes[i] - b.nodes[i]).abs() < 1e-14);
            assert!((a.weights[i] - b.weights[i]).abs() < 1e-13);
        }
    }

    #[test]
    fn jacobi_rule_integrates_beta_moments() {
        // ∫_{-1}^{1} (1-x)^a (1+x)^{b+j} dx = 2^{a+b+j+1} B(a+1, b+j+1)
        let (a, b) = (-0.6, 1.7);
        let rule = gauss_jacobi(12, a, b).unwrap();
        for j in 0..20 {
            let jf = j as f64;
            let got = rule.integrate(|x| (1.0 + x).powi(j));
            let ln_want = (a + b + jf + 1.0) * 2f64.ln() + log_gamma(a + 1.0).unwrap()
                + log_gamma(b + jf + 1.0).unwrap()
                - log_gamma(a + b + jf + 2.0).unwrap();
            assert!(((got - ln_want.exp()) / ln_want.exp()).abs() < 1e-12, "j={j}");
        }
    }

    #[test]
    fn laguerre_rule_integrates_gamma_moments() {
        let a = -0.4;
        let rule = gauss_laguerre(12, a).unwrap();
        for j in 0..20 {
            let got = rule.integrate(|x| x.powi(j));
            let want = log_gamma(a + j as f64 + 1.0).unwrap().exp();
            assert!(((got - want) / want).abs() < 1e-11, "j={j}");
        }
    }

    #[test]
    fn refined_integration_converges() {
        let est = integrate_refined(|x| x * x, 0.0, 1.0, 4, 1e-14).unwrap();
        assert!((est.value - 1.0 / 3.0).abs() < 1e-15);
        let est = integrate_refined(|x| (-x * x).exp(), 0.0, 10.0, 4, 1e-14).unwrap();
        assert!((est.value - PI.sqrt() / 2.0).abs() < 1e-14);
        assert!(integrate_refined(|x| 1.0 / x, 0.0, 1.0, 1, 1e-12).is_err());
    }
}
