//! Special-function kernels shared by every other module.
//!
//! All tables are built on first use and immutable afterwards.

pub mod bernoulli;
pub mod gamma;
pub mod zeta;

use num_complex::Complex64;

pub use bernoulli::{bernoulli_f64, bernoulli_number, bernoulli_poly_shifted, BERNOULLI_MAX};
pub use gamma::{digamma as digamma_c, gamma as gamma_c, ln_gamma, rgamma, trigamma_int};
pub use zeta::{zeta_taylor_coeff, STIELTJES_0, STIELTJES_1};

use crate::error::Result;
use crate::order::Order;

/// `Γ(s)` with relative error ≤ 1e-12 for `|Re s|, |Im s| ≤ 20`.
pub fn gamma(s: Order) -> Result<Complex64> {
    gamma::gamma(s.complex())
}

/// `ψ(s) = Γ'(s)/Γ(s)`.
pub fn digamma(s: Order) -> Result<Complex64> {
    gamma::digamma(s.complex())
}

/// `ζ(s)` for `s ≠ 1`.
pub fn riemann_zeta(s: Order) -> Result<Complex64> {
    zeta::riemann_zeta(s)
}

/// Harmonic number `H_n`, with `H_0 = 0`.
pub fn harmonic(n: usize) -> f64 {
    (1..=n).rev().map(|j| 1.0 / j as f64).sum()
}

/// `sin(πx)` with exact zeros at the integers.
pub fn sin_pi_real(x: f64) -> f64 {
    if x == x.round() {
        return 0.0;
    }
    let n = (2.0 * x).round();
    let r = x - 0.5 * n;
    let (s, c) = (std::f64::consts::PI * r).sin_cos();
    match (n as i64).rem_euclid(4) {
        0 => s,
        1 => c,
        2 => -s,
        _ => -c,
    }
}

/// `cos(πx)` with exact zeros at the half-integers.
pub fn cos_pi_real(x: f64) -> f64 {
    let n = (2.0 * x).round();
    let r = x - 0.5 * n;
    if r == 0.0 && n % 2.0 != 0.0 {
        return 0.0;
    }
    let (s, c) = (std::f64::consts::PI * r).sin_cos();
    match (n as i64).rem_euclid(4) {
        0 => c,
        1 => -s,
        2 => -c,
        _ => s,
    }
}

/// Complex `sin(πz)`.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let y = std::f64::consts::PI * z.im;
    Complex64::new(sin_pi_real(z.re) * y.cosh(), cos_pi_real(z.re) * y.sinh())
}

/// Complex `cos(πz)`.
pub fn cos_pi(z: Complex64) -> Complex64 {
    let y = std::f64::consts::PI * z.im;
    Complex64::new(cos_pi_real(z.re) * y.cosh(), -sin_pi_real(z.re) * y.sinh())
}

/// `cot(πz)`.
pub fn cot_pi(z: Complex64) -> Complex64 {
    cos_pi(z) / sin_pi(z)
}

/// `e^{iπz}` for complex `z`.
pub fn exp_i_pi(z: Complex64) -> Complex64 {
    let mag = (-std::f64::consts::PI * z.im).exp();
    Complex64::new(cos_pi_real(z.re) * mag, sin_pi_real(z.re) * mag)
}
