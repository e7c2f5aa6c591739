//! Special functions: log-gamma, generalized Laguerre and Jacobi polynomials,
//! and the modified Bessel function of the first kind.
//!
//! Polynomials use forward three-term recurrences in the degree. `I_ν` is
//! summed from its power series (all terms positive, rescaled to stay in
//! range) for `x < 15`, and from the large-argument expansion beyond that
//! when it converges; the series is the fallback everywhere.

use core::f64::consts::PI;

use libm::{exp, log};

use crate::{Error, Result};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// `B_{2j} / (2j (2j-1))` for j = 1..=8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

fn stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut pow = inv;
    for c in STIRLING {
        corr += c * pow;
        pow *= inv2;
    }
    (x - 0.5) * log(x) - x + LN_SQRT_2PI + corr
}

/// `ln Γ(x)` for `x > 0`.
///
/// Stirling's series with eight Bernoulli corrections for `x ≥ 10`; below
/// that the argument is shifted up with the recurrence `Γ(x+1) = xΓ(x)`.
/// Near the zeros at 1 and 2 the absolute error is a few ulp of `ln Γ(10)`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain("log_gamma requires a finite x > 0"));
    }
    if x == 1.0 || x == 2.0 {
        return Ok(0.0);
    }
    if x >= 10.0 {
        return Ok(stirling(x));
    }
    let mut shifted = x;
    let mut prod = 1.0;
    while shifted < 10.0 {
        prod *= shifted;
        shifted += 1.0;
    }
    Ok(stirling(shifted) - log(prod))
}

/// `ln(n!)`.
pub fn log_factorial(n: u32) -> f64 {
    if n < 2 {
        return 0.0;
    }
    // n + 1 >= 3 is always in the domain
    log_gamma(f64::from(n) + 1.0).unwrap_or(0.0)
}

/// Generalized Laguerre polynomial `L_n^a(x)`.
pub fn laguerre(n: u32, a: f64, x: f64) -> Result<f64> {
    if !(a > -1.0) {
        return Err(Error::Domain("laguerre requires a > -1"));
    }
    let mut prev = 1.0;
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = 1.0 + a - x;
    for k in 1..n {
        let kf = f64::from(k);
        let next = ((2.0 * kf + 1.0 + a - x) * cur - (kf + a) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Jacobi polynomial `P_n^{(a,b)}(x)`.
pub fn jacobi(n: u32, a: f64, b: f64, x: f64) -> Result<f64> {
    if !(a > -1.0) || !(b > -1.0) {
        return Err(Error::Domain("jacobi requires a > -1 and b > -1"));
    }
    let mut prev = 1.0;
    if n == 0 {
        return Ok(prev);
    }
    let ab = a + b;
    let mut cur = 0.5 * (a - b) + 0.5 * (ab + 2.0) * x;
    for k in 1..n {
        let kf = f64::from(k);
        let s = 2.0 * kf + ab;
        let denom = 2.0 * (kf + 1.0) * (kf + ab + 1.0) * s;
        let lin = (s + 1.0) * ((s + 2.0) * s * x + a * a - b * b);
        let back = 2.0 * (kf + a) * (kf + b) * (s + 2.0);
        let next = (lin * cur - back * prev) / denom;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

const SERIES_CUTOVER: f64 = 15.0;
const RESCALE: f64 = 1e250;
const LN_RESCALE: f64 = 575.646_273_248_511_4;

/// `ln I_ν(x)` from the power series, rescaling the running sum so that no
/// intermediate leaves the floating range.
fn ln_bessel_series(nu: f64, x: f64) -> f64 {
    let half = 0.5 * x;
    let q = half * half;
    let ln_t0 = nu * log(half) - log_gamma(nu + 1.0).unwrap_or(0.0);
    let mut sum = 1.0;
    let mut term = 1.0;
    let mut ln_scale = 0.0;
    let mut k = 0.0_f64;
    loop {
        term *= q / ((k + 1.0) * (k + nu + 1.0));
        sum += term;
        k += 1.0;
        if sum > RESCALE {
            sum /= RESCALE;
            term /= RESCALE;
            ln_scale += LN_RESCALE;
        }
        // past the peak the terms fall off faster than geometrically
        if (k + 1.0) * (k + nu + 1.0) > q && term < 1e-17 * sum {
            break;
        }
    }
    ln_t0 + log(sum) + ln_scale
}

/// `ln I_ν(x)` from the Hankel expansion, or `None` if the expansion starts
/// growing before it reaches double precision.
fn ln_bessel_asymptotic(nu: f64, x: f64) -> Option<f64> {
    let mu = 4.0 * nu * nu;
    let mut sum = 1.0;
    let mut term = 1.0_f64;
    for k in 1..200 {
        let kf = f64::from(k);
        let odd = 2.0 * kf - 1.0;
        let next = -term * (mu - odd * odd) / (8.0 * kf * x);
        if next == 0.0 {
            break;
        }
        if next.abs() > term.abs() {
            return None;
        }
        sum += next;
        term = next;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    if sum <= 0.0 {
        return None;
    }
    Some(x - 0.5 * log(2.0 * PI * x) + log(sum))
}

/// `ln I_ν(x)` for `ν ≥ 0`, `x ≥ 0`. Returns `-∞` at `x = 0` when `ν > 0`.
pub fn ln_bessel_i(nu: f64, x: f64) -> Result<f64> {
    if !(nu >= 0.0) || !(x >= 0.0) || !nu.is_finite() || !x.is_finite() {
        return Err(Error::Domain("bessel_i requires finite nu >= 0 and x >= 0"));
    }
    if x == 0.0 {
        return Ok(if nu == 0.0 { 0.0 } else { f64::NEG_INFINITY });
    }
    if x >= SERIES_CUTOVER {
        if let Some(v) = ln_bessel_asymptotic(nu, x) {
            return Ok(v);
        }
    }
    Ok(ln_bessel_series(nu, x))
}

/// Modified Bessel function of the first kind `I_ν(x)`.
pub fn bessel_i(nu: f64, x: f64) -> Result<f64> {
    let ln = ln_bessel_i(nu, x)?;
    if ln > log(f64::MAX) {
        return Err(Error::Overflow("bessel_i result exceeds the f64 range"));
    }
    Ok(exp(ln))
}

/// Ratio of `I_m(a/ε)` to its short-time form
/// `(ε/2πa)^{1/2} exp[a/ε − (ε/2a)(m² − 1/4)]`, evaluated in log space.
///
/// Tends to 1 as `ε → 0`.
pub fn bessel_short_time_ratio(m: i32, a: f64, eps: f64) -> Result<f64> {
    if !(a > 0.0) || !(eps > 0.0) {
        return Err(Error::Domain("bessel_short_time_ratio requires a > 0 and eps > 0"));
    }
    let nu = f64::from(m.unsigned_abs());
    let x = a / eps;
    let exact = ln_bessel_i(nu, x)?;
    let asym = 0.5 * log(eps / (2.0 * PI * a)) + x - (eps / (2.0 * a)) * (nu * nu - 0.25);
    Ok(exp(exact - asym))
}
