//! Modified polylogarithms.
//!
//! Real line: `λi_n(x) = Σ_{k<n} 2^k B_k/k!·x^k·li_{n−k}(x)` (standard `B_k`,
//! `B_1 = −1/2`), so `λi_2 = li_2 − x·li_1`. The log-singular parts cancel up to
//! `−x^{n−1}log|x|·2^{n−1}B_{n−1}(1/2)/(n−1)!`, which vanishes for even `n`.
//!
//! Complex plane: the same weights with `log^k|z|` and `Li_{n−k}(z)`, projected
//! to the imaginary part for even `n` and the real part for odd `n`.

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::bernoulli::bernoulli_poly_shifted_exact;
use crate::kernels::{bernoulli_f64, bernoulli_number};
use crate::order::Order;
use crate::polylog::{factorial, integer_order_complex, li_eval, EvalPoint, Side, ZAGIER_RADIUS};

/// Largest supported weight.
pub const MAX_WEIGHT: u32 = 8;
/// `|z|` up to which `Li_m(z)` is summed directly.
pub const SERIES_DISC: f64 = 0.6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Projection {
    RealPart,
    ImagPart,
    Full,
}

impl Projection {
    /// Imaginary part for even weight, real part for odd.
    pub fn default_for(n: u32) -> Self {
        if n.is_multiple_of(2) {
            Projection::ImagPart
        } else {
            Projection::RealPart
        }
    }

    fn apply(self, v: Complex64) -> Complex64 {
        match self {
            Projection::RealPart => Complex64::new(v.re, 0.0),
            Projection::ImagPart => Complex64::new(v.im, 0.0),
            Projection::Full => v,
        }
    }
}

impl FromStr for Projection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "re" | "real" | "real_part" => Ok(Projection::RealPart),
            "im" | "imag" | "imag_part" => Ok(Projection::ImagPart),
            "full" => Ok(Projection::Full),
            other => Err(Error::invalid(format!("unknown projection '{other}'"))),
        }
    }
}

impl fmt::Display for Projection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Projection::RealPart => "real_part",
            Projection::ImagPart => "imag_part",
            Projection::Full => "full",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModifiedSpec {
    pub n: u32,
    pub projection: Projection,
}

impl ModifiedSpec {
    /// Weight `n` with the parity-default projection.
    pub fn new(n: u32) -> Result<Self> {
        Self::with_projection(n, Projection::default_for(n))
    }

    pub fn with_projection(n: u32, projection: Projection) -> Result<Self> {
        check_weight(n)?;
        Ok(ModifiedSpec { n, projection })
    }
}

fn check_weight(n: u32) -> Result<()> {
    if n == 0 || n > MAX_WEIGHT {
        return Err(Error::invalid(format!(
            "weight must lie in 1..={MAX_WEIGHT}, got {n}"
        )));
    }
    Ok(())
}

/// Weights `2^k B_k/k!`, `k = 0..n−1`.
pub fn lambda_coefficients(n: u32) -> Result<Vec<f64>> {
    check_weight(n)?;
    (0..n as usize)
        .map(|k| Ok(bernoulli_f64(k)? * 2f64.powi(k as i32) / factorial(k)))
        .collect()
}

/// `λi_n(x)` on the principal side, `x ≠ 0`.
pub fn lambda_i(n: u32, p: EvalPoint) -> Result<f64> {
    let c = lambda_coefficients(n)?;
    let x = p.x;
    let q = EvalPoint::new(x, Side::Principal);
    let mut acc = 0.0;
    for (k, ck) in c.iter().enumerate() {
        if *ck == 0.0 {
            continue;
        }
        let li = li_eval(Order::real((n as usize - k) as f64), q)?.value;
        acc += ck * x.powi(k as i32) * li.re;
    }
    Ok(acc)
}

/// Coefficient of `x^{n−1}log|x|` left in `λi_n`: `−2^{n−1}B_{n−1}(1/2)/(n−1)!`.
pub fn lambda_singular_coefficient(n: u32) -> Result<f64> {
    check_weight(n)?;
    let (_, rhs) = coefficient_identity(n)?;
    Ok(-rhs.to_f64().unwrap_or(f64::NAN))
}

/// Both sides of `Σ_{k<n} 2^k B_k/(k!(n−1−k)!) = 2^{n−1}B_{n−1}(1/2)/(n−1)!` in exact arithmetic.
pub fn coefficient_identity(n: u32) -> Result<(BigRational, BigRational)> {
    check_weight(n)?;
    let m = (n - 1) as usize;
    let fact = |k: usize| -> BigInt { (1..=k).fold(BigInt::one(), |a, j| a * BigInt::from(j)) };
    let mut lhs = BigRational::zero();
    for k in 0..=m {
        let b = bernoulli_number(k)?;
        let w = BigRational::new(BigInt::from(2).pow(k as u32), fact(k) * fact(m - k));
        lhs += b * w;
    }
    let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
    let rhs = bernoulli_poly_shifted_exact(m, &half)?
        * BigRational::new(BigInt::from(2).pow(m as u32), fact(m));
    Ok((lhs, rhs))
}

/// Least-squares estimate of `c` in `f(x) = poly(x) + c·x^m·log|x|` from samples at `±j·h`.
pub fn extract_log_coefficient<F>(f: F, m: u32, h: f64, points: usize, degree: usize) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if 2 * points <= degree + 1 {
        return Err(Error::invalid("too few samples for the requested fit"));
    }
    let xs: Vec<f64> = (1..=points)
        .flat_map(|j| [-(j as f64) * h, j as f64 * h])
        .collect();
    let span = points as f64 * h;
    let a = DMatrix::from_fn(xs.len(), degree + 2, |r, c| {
        let x = xs[r];
        if c <= degree {
            (x / span).powi(c as i32)
        } else {
            x.powi(m as i32) * x.abs().ln()
        }
    });
    let b = DVector::from_iterator(
        xs.len(),
        xs.iter().map(|&x| f(x)).collect::<Result<Vec<_>>>()?,
    );
    let sol = a
        .svd(true, true)
        .solve(&b, 1e-14)
        .map_err(|e| Error::invalid(format!("least-squares fit failed: {e}")))?;
    Ok(sol[degree + 1])
}

/// `Li_m(z)` for integer `m ≥ 1`: direct series on `|z| ≤ 0.6`, expansion in `log z` elsewhere.
pub fn polylog_complex(m: u32, z: Complex64) -> Result<Complex64> {
    if m == 0 {
        return Err(Error::invalid("polylog_complex needs m >= 1"));
    }
    if z.norm() <= SERIES_DISC {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut pow = z;
        for j in 1..=400u32 {
            let t = pow / (j as f64).powi(m as i32);
            sum += t;
            if t.norm() <= 1e-17 * sum.norm().max(f64::MIN_POSITIVE) {
                return Ok(sum);
            }
            pow *= z;
        }
        return Ok(sum);
    }
    if z == Complex64::new(1.0, 0.0) {
        return Err(Error::domain("Li_m(z) is evaluated only for z != 1"));
    }
    let x = z.ln();
    if x.norm() >= ZAGIER_RADIUS {
        return Err(Error::domain(format!(
            "|log z| = {} is outside the covered region",
            x.norm()
        )));
    }
    let log_neg = if x.im == 0.0 && x.re > 0.0 {
        log::warn!("z = {z} lies on the cut (1, ∞); using the principal mean");
        Complex64::new(x.re.ln(), 0.0)
    } else {
        (-x).ln()
    };
    integer_order_complex(m, x, log_neg)
}

/// `Σ_{k<n} 2^k B_k/k!·log^k|z|·Li_{n−k}(z)` with the projection of `spec`.
pub fn classical_modified(spec: ModifiedSpec, z: Complex64) -> Result<Complex64> {
    check_weight(spec.n)?;
    if z.norm() == 0.0 || z == Complex64::new(1.0, 0.0) {
        return Err(Error::domain("z must avoid 0 and 1"));
    }
    let c = lambda_coefficients(spec.n)?;
    let l = z.norm().ln();
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, ck) in c.iter().enumerate() {
        if *ck == 0.0 {
            continue;
        }
        acc += polylog_complex(spec.n - k as u32, z)? * (ck * l.powi(k as i32));
    }
    Ok(spec.projection.apply(acc))
}

/// Bloch–Wigner `D(z) = Im Li_2(z) + arg(1−z)·log|z|`.
///
/// Points whose logarithm leaves the covered region use `D(z) = −D(1/z)`.
pub fn bloch_wigner(z: Complex64) -> Result<f64> {
    if z.norm() == 0.0 || z == Complex64::new(1.0, 0.0) {
        return Err(Error::domain("D(z) needs z != 0, 1"));
    }
    if z.norm() > SERIES_DISC && z.ln().norm() >= ZAGIER_RADIUS {
        return Ok(-bloch_wigner(z.inv())?);
    }
    if z.im == 0.0 {
        return Ok(0.0);
    }
    let li2 = polylog_complex(2, z)?;
    Ok(li2.im + (Complex64::new(1.0, 0.0) - z).arg() * z.norm().ln())
}

/// Catalan's constant, `D(i)`.
pub const CATALAN: f64 = 0.915_965_594_177_219_015;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smoothness::{two_sided, Ladder};
    use proptest::prelude::*;
    use std::f64::consts::{LN_2, PI};

    #[test]
    fn coefficients_match_the_two_term_form() {
        let c = lambda_coefficients(2).unwrap();
        assert_eq!(c, vec![1.0, -1.0]);
        let c = lambda_coefficients(4).unwrap();
        assert!((c[2] - 4.0 / 6.0 / 2.0).abs() < 1e-16);
        assert_eq!(c[3], 0.0);
        assert!(lambda_coefficients(0).is_err());
        assert!(lambda_coefficients(9).is_err());
    }

    #[test]
    fn lambda_examples() {
        let v = lambda_i(2, EvalPoint::principal(-1.0)).unwrap();
        // li₂(−1) − log(1 − e⁻¹), both by 30-digit summation
        assert!((v - (0.408_754_287_348_896_27 + 0.458_675_145_387_081_8)).abs() < 1e-12);
        assert!((lambda_i(1, EvalPoint::principal(-LN_2)).unwrap() - LN_2).abs() < 1e-13);
        for &x in &[1e-4, -1e-4] {
            let v = lambda_i(2, EvalPoint::principal(x)).unwrap();
            assert!((v - PI * PI / 6.0).abs() < 2e-4);
        }
    }

    #[test]
    fn lambda_two_derivatives_at_origin() {
        // λi₂ = ζ(2) + x + Σ_{k≥2} (1−k)ζ(2−k)x^k/k!: derivatives ζ(2), 1, 1/2, 1/6
        let ts = two_sided(
            |x| lambda_i(2, EvalPoint::principal(x)).map(|v| Complex64::new(v, 0.0)),
            &Ladder::wide(),
            3,
        )
        .unwrap();
        let want = [PI * PI / 6.0, 1.0, 0.5, 1.0 / 6.0];
        for side in [&ts.left, &ts.right] {
            for (k, w) in want.iter().enumerate() {
                assert!(
                    (side.limits[k].re - w).abs() < 1e-7,
                    "k={k}: {}",
                    side.limits[k]
                );
            }
        }
    }

    #[test]
    fn singular_coefficient_values() {
        for n in [2, 4, 6, 8] {
            assert_eq!(lambda_singular_coefficient(n).unwrap(), 0.0);
        }
        assert!((lambda_singular_coefficient(1).unwrap() + 1.0).abs() < 1e-15);
        assert!((lambda_singular_coefficient(3).unwrap() - 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn coefficient_identity_is_exact() {
        for n in 1..=8 {
            let (l, r) = coefficient_identity(n).unwrap();
            assert_eq!(l, r, "n = {n}");
        }
    }

    #[test]
    fn odd_weight_log_term_is_recovered() {
        let c = extract_log_coefficient(|x| lambda_i(3, EvalPoint::principal(x)), 2, 0.02, 12, 9)
            .unwrap();
        assert!(
            (c - lambda_singular_coefficient(3).unwrap()).abs() < 1e-8,
            "{c}"
        );
        let c = extract_log_coefficient(|x| lambda_i(2, EvalPoint::principal(x)), 1, 0.02, 12, 9)
            .unwrap();
        assert!(c.abs() < 1e-8);
    }

    #[test]
    fn complex_polylog_agrees_with_series_on_overlap() {
        for &z in &[
            Complex64::new(0.55, 0.1),
            Complex64::new(-0.3, 0.5),
            Complex64::new(0.0, -0.59),
        ] {
            for m in 1..=4 {
                let series = polylog_complex(m, z).unwrap();
                let x = z.ln();
                let expansion = integer_order_complex(m, x, (-x).ln()).unwrap();
                assert!((series - expansion).norm() < 1e-12, "m={m} z={z}");
            }
        }
        let li1 = polylog_complex(1, Complex64::new(0.3, 0.8)).unwrap();
        let want = -(Complex64::new(0.7, -0.8)).ln();
        assert!((li1 - want).norm() < 1e-13);
    }

    #[test]
    fn classical_examples() {
        let spec = ModifiedSpec::new(2).unwrap();
        let v = classical_modified(spec, Complex64::i()).unwrap();
        assert!((v.re - CATALAN).abs() < 1e-12);
        assert_eq!(
            classical_modified(spec, Complex64::new(0.3, 0.0))
                .unwrap()
                .re,
            0.0
        );
        let z = Complex64::new(0.4, 0.9);
        let a = classical_modified(spec, z).unwrap().re;
        let b = classical_modified(spec, z.conj()).unwrap().re;
        assert!((a + b).abs() < 1e-13);
        assert!(classical_modified(spec, Complex64::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn bloch_wigner_examples() {
        assert!((bloch_wigner(Complex64::i()).unwrap() - CATALAN).abs() < 1e-12);
        assert_eq!(bloch_wigner(Complex64::new(0.5, 0.0)).unwrap(), 0.0);
        let eps = 1e-6;
        let up = bloch_wigner(Complex64::new(2.0, eps)).unwrap();
        let down = bloch_wigner(Complex64::new(2.0, -eps)).unwrap();
        assert!((up - down).abs() < 1e-5);
        // D(e^{iπ/3}) is the maximum 1.0149416064096536250
        let z = Complex64::from_polar(1.0, PI / 3.0);
        assert!((bloch_wigner(z).unwrap() - 1.014_941_606_409_653_6).abs() < 1e-12);
        // far points go through inversion
        let far = Complex64::new(400.0, 300.0);
        assert!((bloch_wigner(far).unwrap() + bloch_wigner(far.inv()).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn bloch_wigner_matches_classical_modified() {
        for &z in &[
            Complex64::new(0.2, 0.3),
            Complex64::new(1.5, -0.4),
            Complex64::new(-2.0, 1.0),
        ] {
            let d = bloch_wigner(z).unwrap();
            let c = classical_modified(ModifiedSpec::new(2).unwrap(), z)
                .unwrap()
                .re;
            assert!((d - c).abs() < 1e-12);
        }
    }

    #[test]
    fn five_term_relation() {
        for &(x, y) in &[
            (Complex64::new(0.3, 0.4), Complex64::new(-0.2, 0.7)),
            (Complex64::new(1.7, -0.6), Complex64::new(0.5, 0.5)),
            (Complex64::new(-0.8, -0.1), Complex64::new(0.1, -0.9)),
        ] {
            let one = Complex64::new(1.0, 0.0);
            let w = one - x * y;
            let sum = bloch_wigner(x).unwrap()
                + bloch_wigner(y).unwrap()
                + bloch_wigner((one - x) / w).unwrap()
                + bloch_wigner(w).unwrap()
                + bloch_wigner((one - y) / w).unwrap();
            assert!(sum.abs() < 1e-9, "{sum}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]

        #[test]
        fn inversion_and_reflection(r in 0.05f64..0.95, t in 0.05f64..(2.0 * PI - 0.05)) {
            let z = Complex64::from_polar(r, t);
            let d = bloch_wigner(z).unwrap();
            prop_assert!((d + bloch_wigner(z.inv()).unwrap()).abs() < 1e-9);
            prop_assert!((d + bloch_wigner(Complex64::new(1.0, 0.0) - z).unwrap()).abs() < 1e-9);
        }
    }
}
