use std::f64::consts::{FRAC_PI_2, PI};

use anharmonic_core::model::{
    angular_k, angular_lambda, effective_ell, effective_ell_from_indices, potential_cartesian, potential_spherical,
    AngularMode,
};
use anharmonic_core::oracle::{gauss_legendre, inner_product_angular, GridSpec};
use anharmonic_core::spectrum::{angular_wavefunction, energy, enumerate_states, EigenState};
use anharmonic_core::{Complex64, PotentialParams, QuantumNumbers};
use proptest::prelude::*;

fn params() -> impl Strategy<Value = PotentialParams> {
    (0.2f64..3.0, 0.2f64..3.0, 0.2f64..3.0, -2.0f64..2.0, 0.0f64..4.0, 0.0f64..3.0, -0.2f64..3.0)
        .prop_map(|(hbar, mu, omega, v0, alpha, beta, gamma)| {
            PotentialParams::new(hbar, mu, omega, v0, alpha, beta, gamma).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn cartesian_matches_spherical(
        p in params(),
        r in 0.05f64..6.0,
        theta in 0.01f64..(FRAC_PI_2 - 0.01),
        phi in 0.0f64..(2.0 * PI),
    ) {
        let (x, y, z) = (r * theta.sin() * phi.cos(), r * theta.sin() * phi.sin(), r * theta.cos());
        let a = potential_spherical(&p, r, theta).unwrap();
        let b = potential_cartesian(&p, x, y, z).unwrap();
        // cancellation between −V₀ and the rest sets the scale
        let scale = p.v0().abs() + 0.5 * p.mu() * p.omega().powi(2) * r * r + a.abs();
        prop_assert!((a - b).abs() <= 1e-12 * scale, "{a} vs {b}");
    }

    #[test]
    fn lambda_is_even_in_m(p in params(), m in 0i32..50) {
        prop_assert_eq!(angular_lambda(&p, m).unwrap(), angular_lambda(&p, -m).unwrap());
    }

    #[test]
    fn energy_is_even_in_m(p in params(), n in 0u32..20, n_theta in 0u32..10, m in 1i32..10) {
        let e1 = energy(&p, QuantumNumbers::new(n, n_theta, m)).unwrap();
        let e2 = energy(&p, QuantumNumbers::new(n, n_theta, -m)).unwrap();
        prop_assert_eq!(e1, e2);
    }

    #[test]
    fn ell_is_monotone(p in params(), n_theta in 0u32..8, m in 0i32..8) {
        let ell = effective_ell(&p, n_theta, m).unwrap();
        prop_assert!(effective_ell(&p, n_theta + 1, m).unwrap() > ell);
        prop_assert!(effective_ell(&p, n_theta, m + 1).unwrap() > ell);
        let more_alpha = PotentialParams::new(p.hbar(), p.mu(), p.omega(), p.v0(), p.alpha() + 0.5, p.beta(), p.gamma()).unwrap();
        prop_assert!(effective_ell(&more_alpha, n_theta, m).unwrap() > ell);
        // β enters l̃ directly when λ is held fixed
        let lambda = angular_lambda(&p, m).unwrap();
        let k = angular_k(&p);
        let more_beta = PotentialParams::new(p.hbar(), p.mu(), p.omega(), p.v0(), p.alpha(), p.beta() + 0.5, p.gamma()).unwrap();
        prop_assert!(effective_ell_from_indices(&more_beta, lambda, k, n_theta).unwrap() < ell);
    }
}

#[test]
fn degenerate_limit_is_exact() {
    let p = PotentialParams::isotropic();
    for n_theta in 0..=10u32 {
        for m in -10..=10i32 {
            let ell = effective_ell(&p, n_theta, m).unwrap();
            assert_eq!(ell, f64::from(m.unsigned_abs() + 2 * n_theta + 1));
            for n in 0..=10u32 {
                let e = energy(&p, QuantumNumbers::new(n, n_theta, m)).unwrap();
                assert_eq!(e, f64::from(2 * n + 2 * n_theta + m.unsigned_abs()) + 2.5);
            }
        }
    }
}

#[test]
fn angular_orthonormality() {
    let p = PotentialParams::unit(0.0, 1.0, 0.5, 2.0).unwrap();
    let grid = GridSpec::angular_default();
    for &(lambda, k) in &[(0.0, 0.5), (0.5, 0.5), (1.0, 1.5), (2.0, 1.5), (0.707, 1.5)] {
        let modes: Vec<AngularMode> = (0..=5).map(|n| AngularMode::from_indices(&p, lambda, k, n, 0)).collect();
        for i in 0..modes.len() {
            for j in 0..=i {
                let (a, b) = (&modes[i], &modes[j]);
                let est = inner_product_angular(
                    |t| angular_wavefunction(a, t).unwrap(),
                    |t| angular_wavefunction(b, t).unwrap(),
                    &grid,
                )
                .unwrap();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((est.value - want).abs() <= 1e-10, "λ={lambda} k={k} ({i},{j}): {}", est.value);
            }
        }
    }
}

/// Tensor-product rule for the half space: composite Gauss–Legendre in `r`
/// and in `u` with `θ = (π/2)u³` (the substitution flattens the `sin^{2λ+1}`
/// endpoint behaviour), and the trapezoid rule in `φ`.
#[test]
fn gram_matrix_of_lowest_states_is_identity() {
    let p = PotentialParams::unit(0.0, 1.0, 0.5, 2.0).unwrap();
    let mut states = enumerate_states(&p, 12.0, 6);
    assert!(states.len() >= 8);
    states.truncate(8);

    let rule = gauss_legendre(16);
    let composite_nodes = |a: f64, b: f64, panels: usize| -> Vec<(f64, f64)> {
        let width = (b - a) / panels as f64;
        let mut out = Vec::new();
        for k in 0..panels {
            let mid = a + (k as f64 + 0.5) * width;
            for (x, w) in rule.nodes.iter().zip(&rule.weights) {
                out.push((mid + 0.5 * width * x, 0.5 * width * w));
            }
        }
        out
    };
    let r_nodes: Vec<(f64, f64)> = composite_nodes(0.0, 12.0, 24).into_iter().map(|(r, w)| (r, w * r * r)).collect();
    let theta_nodes: Vec<(f64, f64)> = composite_nodes(0.0, 1.0, 8)
        .into_iter()
        .map(|(u, w)| {
            let theta = FRAC_PI_2 * u.powi(3);
            (theta, w * 3.0 * FRAC_PI_2 * u * u * theta.sin())
        })
        .collect();
    let n_phi = 16;
    let phi_nodes: Vec<(f64, f64)> =
        (0..n_phi).map(|j| (2.0 * PI * j as f64 / n_phi as f64, 2.0 * PI / n_phi as f64)).collect();

    let mut gram = [[Complex64::new(0.0, 0.0); 8]; 8];
    let mut values = [Complex64::new(0.0, 0.0); 8];
    for &(r, wr) in &r_nodes {
        for &(theta, wt) in &theta_nodes {
            for &(phi, wp) in &phi_nodes {
                for (v, s) in values.iter_mut().zip(&states) {
                    *v = s.wavefunction(&p, r, theta, phi).unwrap();
                }
                let w = wr * wt * wp;
                for (row, vi) in gram.iter_mut().zip(&values) {
                    for (g, vj) in row.iter_mut().zip(&values) {
                        *g += vi.conj() * vj * w;
                    }
                }
            }
        }
    }
    for (i, row) in gram.iter().enumerate() {
        for (j, g) in row.iter().enumerate() {
            let want = if i == j { 1.0 } else { 0.0 };
            let d = *g - Complex64::new(want, 0.0);
            assert!(d.re.abs() <= 1e-8 && d.im.abs() <= 1e-8, "({i},{j}): {g:?}");
        }
    }
}

#[test]
fn enumeration_is_sorted_and_complete_for_small_box() {
    let p = PotentialParams::unit(0.0, 1.0, 0.5, 2.0).unwrap();
    let states = enumerate_states(&p, 14.0, 8);
    for w in states.windows(2) {
        assert!(w[0].energy() <= w[1].energy());
    }
    let mut brute = 0;
    for n in 0..10u32 {
        for n_theta in 0..10u32 {
            for m in -8..=8i32 {
                if let Ok(s) = EigenState::new(&p, QuantumNumbers::new(n, n_theta, m)) {
                    if s.energy() <= 14.0 {
                        brute += 1;
                    }
                }
            }
        }
    }
    assert_eq!(states.len(), brute);
}
