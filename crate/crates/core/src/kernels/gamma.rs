//! Complex gamma and digamma.
//!
//! Both use the Stirling series after shifting `Re z` up to [`SHIFT_TO`];
//! the left half-plane (`Re z < 1/2`) goes through the reflection formulas.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::bernoulli;
use super::{cot_pi, sin_pi};
use crate::error::{Error, Result};

const SHIFT_TO: f64 = 15.0;
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
/// Stirling / asymptotic terms kept; the B_{2k} tail is far below an ulp at |z| ≥ 15.
const STIRLING_TERMS: usize = 12;

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

fn pole(func: &'static str, z: Complex64) -> Error {
    Error::Pole {
        func,
        at: format!("{z}"),
    }
}

/// Stirling series for `ln Γ(w)`, valid for `Re w ≥ SHIFT_TO`.
fn stirling(w: Complex64) -> Complex64 {
    let b = bernoulli::table();
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = inv;
    for k in 1..=STIRLING_TERMS {
        let b2k = b.floats()[2 * k];
        series += pow * (b2k / ((2 * k) * (2 * k - 1)) as f64);
        pow *= inv2;
    }
    (w - 0.5) * w.ln() - w + LN_SQRT_2PI + series
}

/// A logarithm of `Γ(z)` (not necessarily the principal branch of `log Γ`).
///
/// Intended for use inside `exp`, where the branch is irrelevant.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(pole("ln_gamma", z));
    }
    if z.re < 0.5 {
        // Γ(z)Γ(1−z) = π / sin(πz)
        let rest = ln_gamma(Complex64::new(1.0, 0.0) - z)?;
        return Ok(Complex64::new(PI.ln(), 0.0) - sin_pi(z).ln() - rest);
    }
    let mut w = z;
    let mut prod = Complex64::new(1.0, 0.0);
    while w.re < SHIFT_TO {
        prod *= w;
        w += 1.0;
    }
    Ok(stirling(w) - prod.ln())
}

/// `ln Γ(x)` for real `x > 0`.
pub fn ln_gamma_real(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    ln_gamma(Complex64::new(x, 0.0))
        .map(|v| v.re)
        .unwrap_or(f64::NAN)
}

/// Complex gamma function.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(pole("gamma", z));
    }
    if z.re < 0.5 {
        let g = gamma(Complex64::new(1.0, 0.0) - z)?;
        return Ok(PI / (sin_pi(z) * g));
    }
    if z.im == 0.0 && z.re == z.re.round() && z.re <= 171.0 {
        // exact factorials
        let mut acc = 1.0;
        let mut k = 2.0;
        while k < z.re {
            acc *= k;
            k += 1.0;
        }
        return Ok(Complex64::new(acc, 0.0));
    }
    Ok(ln_gamma(z)?.exp())
}

/// Reciprocal gamma `1/Γ(z)`, entire: zero at the non-positive integers.
pub fn rgamma(z: Complex64) -> Complex64 {
    match gamma(z) {
        Ok(g) => g.inv(),
        Err(_) => Complex64::new(0.0, 0.0),
    }
}

/// Digamma `ψ(z) = Γ'(z)/Γ(z)`.
pub fn digamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(pole("digamma", z));
    }
    if z.re < 0.5 {
        // ψ(1−z) − ψ(z) = π cot(πz)
        return Ok(digamma(Complex64::new(1.0, 0.0) - z)? - PI * cot_pi(z));
    }
    let b = bernoulli::table();
    let mut w = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while w.re < SHIFT_TO {
        acc -= w.inv();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = inv2;
    for k in 1..=STIRLING_TERMS {
        series += pow * (b.floats()[2 * k] / (2 * k) as f64);
        pow *= inv2;
    }
    Ok(acc + w.ln() - 0.5 * inv - series)
}

/// Trigamma at a positive integer: `ψ'(n) = π²/6 − Σ_{j<n} 1/j²`.
pub fn trigamma_int(n: u32) -> f64 {
    assert!(n >= 1, "trigamma_int needs n >= 1");
    let tail: f64 = (1..n).rev().map(|j| 1.0 / (j as f64 * j as f64)).sum();
    PI * PI / 6.0 - tail
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn gamma_examples() {
        assert!(rel(gamma(c(1.0, 0.0)).unwrap(), c(1.0, 0.0)) < 1e-15);
        assert!(rel(gamma(c(5.0, 0.0)).unwrap(), c(24.0, 0.0)) < 1e-15);
        assert!(rel(gamma(c(0.5, 0.0)).unwrap(), c(PI.sqrt(), 0.0)) < 1e-14);
    }

    #[test]
    fn gamma_matches_high_precision_values() {
        // reference values: 30-digit evaluation
        let cases = [
            (c(0.25, 0.0), c(3.625_609_908_221_908_3, 0.0)),
            (
                c(3.3, -4.4),
                c(0.154_224_337_799_007_45, 0.105_054_344_764_712_34),
            ),
            (
                c(-7.7, 2.1),
                c(-4.100_161_952_673_629_8e-7, -3.265_140_190_265_049e-7),
            ),
            (
                c(15.5, 19.0),
                c(1_688_023.884_755_718_8, -15_624_279.389_265_458),
            ),
            (
                c(-19.5, -12.0),
                c(6.815_990_649_770_499_6e-33, 1.326_380_994_323_013_4e-32),
            ),
            (
                c(0.1, 0.1),
                c(4.520_080_204_891_074_6, -4.917_313_069_142_463),
            ),
        ];
        for (z, want) in cases {
            let got = gamma(z).unwrap();
            assert!(rel(got, want) < 1e-12, "Γ({z}) = {got}, want {want}");
        }
    }

    #[test]
    fn gamma_poles() {
        for n in 0..5 {
            assert!(matches!(
                gamma(c(-(n as f64), 0.0)),
                Err(Error::Pole { .. })
            ));
            assert!(matches!(
                digamma(c(-(n as f64), 0.0)),
                Err(Error::Pole { .. })
            ));
        }
        assert_eq!(rgamma(c(-3.0, 0.0)), c(0.0, 0.0));
    }

    #[test]
    fn digamma_examples() {
        let euler = 0.577_215_664_901_532_9;
        assert!((digamma(c(1.0, 0.0)).unwrap().re + euler).abs() < 1e-14);
        assert!((digamma(c(2.0, 0.0)).unwrap().re - (1.0 - euler)).abs() < 1e-14);
        let half = -euler - 2.0 * 2f64.ln();
        assert!((digamma(c(0.5, 0.0)).unwrap().re - half).abs() < 1e-13);
    }

    #[test]
    fn digamma_matches_high_precision_values() {
        let cases = [
            (
                c(3.3, -4.4),
                c(1.650_966_203_224_991_7, -1.002_671_915_765_352_8),
            ),
            (
                c(-7.7, 2.1),
                c(2.136_394_641_533_132_7, 2.891_158_119_067_987),
            ),
            (c(0.25, 0.0), c(-4.227_453_533_376_265_4, 0.0)),
            (
                c(12.0, 18.0),
                c(3.061_482_093_956_96, 1.002_188_885_028_435_7),
            ),
        ];
        for (z, want) in cases {
            let got = digamma(z).unwrap();
            assert!(rel(got, want) < 1e-10, "ψ({z}) = {got}, want {want}");
        }
    }

    #[test]
    fn trigamma_integers() {
        assert!((trigamma_int(1) - PI * PI / 6.0).abs() < 1e-16);
        assert!((trigamma_int(3) - (PI * PI / 6.0 - 1.25)).abs() < 1e-15);
    }

    #[test]
    fn ln_gamma_large_argument_ratio() {
        // Γ(301.5)/Γ(301) ≈ sqrt(301) (1 − 1/(8·301) + …)
        let d = ln_gamma(c(301.5, 0.0)).unwrap() - ln_gamma(c(301.0, 0.0)).unwrap();
        let x = 301.0f64;
        let approx = x.sqrt().ln() - 1.0 / (8.0 * x) + 1.0 / (192.0 * x.powi(3));
        assert!((d.re - approx).abs() < 1e-12);
    }
}
