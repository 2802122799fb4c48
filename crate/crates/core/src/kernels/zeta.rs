//! Riemann zeta: Euler–Maclaurin on `Re s ≥ 1/2`, reflection elsewhere.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::bernoulli;
use super::gamma::{ln_gamma, ln_gamma_real};
use super::sin_pi;
use crate::error::{Error, Result};
use crate::order::Order;

/// Stieltjes constant γ₀ (Euler–Mascheroni).
pub const STIELTJES_0: f64 = 0.577_215_664_901_532_9;
/// Stieltjes constant γ₁.
pub const STIELTJES_1: f64 = -0.072_815_845_483_676_72;

const LN_2: f64 = std::f64::consts::LN_2;

/// Euler–Maclaurin summation, `Re s ≥ 1/2`, `s ≠ 1`.
fn zeta_em(s: Complex64) -> Complex64 {
    let b = bernoulli::table().floats();
    let n_cut = (((s.norm() + 40.0) / PI).ceil() as usize).max(12);
    let mut head = Complex64::new(0.0, 0.0);
    // smallest terms first
    for n in (1..n_cut).rev() {
        head += (-s * (n as f64).ln()).exp();
    }
    let big_n = n_cut as f64;
    let ln_n = big_n.ln();
    let n_pow = (-s * ln_n).exp(); // N^{−s}
    let mut sum = head + n_pow * 0.5 + n_pow * big_n / (s - 1.0);

    // Σ_k B_{2k}/(2k)! · s(s+1)…(s+2k−2) · N^{−s−2k+1}
    let mut rising = s; // s(s+1)…(s+2k−2) for k = 1
    let mut npow = n_pow / big_n; // N^{−s−1}
    let mut fact = 2.0; // (2k)!
    let mut small = 0;
    for k in 1..=31 {
        let term = rising * npow * (b[2 * k] / fact);
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() {
            small += 1;
            if small >= 2 {
                break;
            }
        } else {
            small = 0;
        }
        let m = (2 * k) as f64;
        rising *= (s + (m - 1.0)) * (s + m);
        npow /= big_n * big_n;
        fact *= (m + 1.0) * (m + 2.0);
    }
    sum
}

fn is_one(s: Complex64) -> bool {
    s.re == 1.0 && s.im == 0.0
}

/// Riemann zeta function for complex `s ≠ 1`.
pub fn riemann_zeta(s: Order) -> Result<Complex64> {
    zeta(s.complex())
}

pub(crate) fn zeta(s: Complex64) -> Result<Complex64> {
    if is_one(s) {
        return Err(Error::Pole {
            func: "riemann_zeta",
            at: "1".into(),
        });
    }
    if s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round() {
        let n = -s.re;
        if n == 0.0 {
            return Ok(Complex64::new(-0.5, 0.0));
        }
        if n % 2.0 == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
    }
    if s.re >= 0.5 {
        return Ok(zeta_em(s));
    }
    // ζ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s) ζ(1−s)
    let one_minus = Complex64::new(1.0, 0.0) - s;
    let log_mag = s * LN_2 + (s - 1.0) * PI.ln() + ln_gamma(one_minus)?;
    Ok(log_mag.exp() * sin_pi(s * 0.5) * zeta_em(one_minus))
}

/// Taylor coefficient `ζ(s − k)/k!` of the regular part of `li_s`.
///
/// Large `k` goes through the reflection formula in log form, so the
/// factorial growth of `ζ(s − k)` never materialises.
pub fn zeta_taylor_coeff(s: Complex64, k: usize) -> Result<Complex64> {
    let w = s - k as f64;
    if is_one(w) {
        return Err(Error::Pole {
            func: "riemann_zeta",
            at: "1".into(),
        });
    }
    let ln_fact = ln_gamma_real(k as f64 + 1.0);
    if w.re >= 0.5 || (w.im == 0.0 && w.re == 0.0) {
        return Ok(zeta(w)? * (-ln_fact).exp());
    }
    if w.im == 0.0 && w.re == w.re.round() && (w.re as i64) % 2 == 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let one_minus = Complex64::new(1.0, 0.0) - w;
    let log_mag = w * LN_2 + (w - 1.0) * PI.ln() + ln_gamma(one_minus)? - ln_fact;
    Ok(log_mag.exp() * sin_pi(w * 0.5) * zeta_em(one_minus))
}
