//! Exact bound-state spectrum, eigenfunctions and Euclidean propagator of the
//! three-dimensional noncentral anharmonic oscillator
//!
//! ```text
//! V(r, θ) = −V₀ + ½μω²r² + αħ²/(2μr²) + βħ²cos²θ/(2μr²sin²θ) + γħ²/(2μr²cos²θ)
//! ```
//!
//! together with numerical oracles that check every closed form without
//! reusing it: finite-difference Sturm–Liouville eigensolvers, quadrature
//! rules, and a time-sliced transfer-matrix radial kernel.
//!
//! The crate is `no_std` and only needs `alloc`. All elementary functions go
//! through [`libm`], so results are bit-identical across platforms.
//!
//! Module map:
//!
//! - [`specfun`]: log-gamma, Laguerre, Jacobi and modified Bessel functions.
//! - [`model`]: parameters, quantum numbers, the potential and the indices λ, k, l̃.
//! - [`spectrum`]: energies, normalized wavefunctions, state enumeration.
//! - [`propagator`]: closed-form, spectral and lattice kernels in Euclidean time.
//! - [`oracle`]: finite-difference eigensolvers and quadrature.
#![no_std]
// `!(x > 0.0)` is used on purpose: it also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod model;
pub mod oracle;
pub mod propagator;
pub mod specfun;
pub mod spectrum;

pub use error::{Error, Result};
pub use model::{PotentialParams, QuantumNumbers};
pub use num_complex::Complex64;
