//! Singular/smooth split of `li_s` at `x = 0`.
//!
//! Non-integer `s`:
//! `li_s ≡ −Γ(1−s)/2·[e^{−iπs}(x+i0)^{s−1} + e^{iπs}(x−i0)^{s−1}]` modulo smooth functions.
//! Integer orders: `li_n ≡ −x^{n−1}log|x|/(n−1)!` for `n ≥ 1` and
//! `li_{−m} ≡ (−1)^{m−1} m! x^{−m−1}` for `m ≥ 0`.
//!
//! The smooth remainder is `li_eval` minus the applicable singular part.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::{exp_i_pi, gamma_c, zeta_taylor_coeff};
use crate::order::Order;
use crate::polylog::{factorial, li_eval, EvalPoint, SERIES_CAP, ZAGIER_RADIUS};

/// Orders closer than this to an integer count as integers.
pub const INTEGER_TOL: f64 = 1e-8;
/// Most Taylor coefficients [`remainder_taylor`] returns.
pub const TAYLOR_MAX: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TermKind {
    /// `(x+i0)^a`: `x^a` for `x > 0`, `|x|^a e^{iπa}` for `x < 0`.
    PowerAbove,
    /// `(x−i0)^a`: `x^a` for `x > 0`, `|x|^a e^{−iπa}` for `x < 0`.
    PowerBelow,
    /// `|x|^a`.
    AbsPower,
    /// `x^m log|x|`, `m` a non-negative integer.
    PowerLog,
    /// `x^m`, `m` an integer (negative for the poles of `li_{−m}`).
    IntegerPower,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SingularTerm {
    pub coeff: Complex64,
    pub exponent: Complex64,
    pub kind: TermKind,
}

impl SingularTerm {
    /// Value at `x ≠ 0`.
    pub fn eval(&self, x: f64) -> Complex64 {
        let a = self.exponent;
        let abs_pow = || (a * x.abs().ln()).exp();
        let v = match self.kind {
            TermKind::AbsPower => abs_pow(),
            TermKind::PowerAbove if x < 0.0 => abs_pow() * exp_i_pi(a),
            TermKind::PowerBelow if x < 0.0 => abs_pow() * exp_i_pi(-a),
            TermKind::PowerAbove | TermKind::PowerBelow => abs_pow(),
            TermKind::PowerLog => Complex64::new(x.powi(a.re as i32) * x.abs().ln(), 0.0),
            TermKind::IntegerPower => Complex64::new(x.powi(a.re as i32), 0.0),
        };
        self.coeff * v
    }
}

impl fmt::Display for SingularTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coeff;
        let a = self.exponent;
        match self.kind {
            TermKind::PowerAbove => write!(f, "({c})·(x+i0)^({a})"),
            TermKind::PowerBelow => write!(f, "({c})·(x−i0)^({a})"),
            TermKind::AbsPower => write!(f, "({c})·|x|^({a})"),
            TermKind::PowerLog => write!(f, "({c})·x^{}·log|x|", a.re),
            TermKind::IntegerPower => write!(f, "({c})·x^{}", a.re),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct SingularPart {
    pub terms: Vec<SingularTerm>,
}

impl SingularPart {
    /// Sum of the terms at `x ≠ 0`.
    pub fn eval(&self, x: f64) -> Result<Complex64> {
        if x == 0.0 || !x.is_finite() {
            return Err(Error::domain(format!(
                "singular part is evaluated only at finite x != 0, got {x}"
            )));
        }
        Ok(self.terms.iter().map(|t| t.eval(x)).sum())
    }
}

impl fmt::Display for SingularPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Boundary-value singular part for non-integer `s`.
pub fn singular_part(s: Order) -> Result<SingularPart> {
    if s.dist_to_integer() <= INTEGER_TOL {
        return Err(Error::IntegerOrder(s.to_string()));
    }
    let sc = s.complex();
    let half = -gamma_c(Complex64::new(1.0, 0.0) - sc)? * 0.5;
    let exponent = sc - 1.0;
    Ok(SingularPart {
        terms: vec![
            SingularTerm {
                coeff: half * exp_i_pi(-sc),
                exponent,
                kind: TermKind::PowerAbove,
            },
            SingularTerm {
                coeff: half * exp_i_pi(sc),
                exponent,
                kind: TermKind::PowerBelow,
            },
        ],
    })
}

/// Single-term singular part for integer order `n`.
pub fn singular_part_integer(n: i64) -> SingularPart {
    let term = if n >= 1 {
        let m = (n - 1) as usize;
        SingularTerm {
            coeff: Complex64::new(-1.0 / factorial(m), 0.0),
            exponent: Complex64::new(m as f64, 0.0),
            kind: TermKind::PowerLog,
        }
    } else {
        let m = (-n) as usize;
        let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
        SingularTerm {
            coeff: Complex64::new(sign * factorial(m), 0.0),
            exponent: Complex64::new(-(m as f64) - 1.0, 0.0),
            kind: TermKind::IntegerPower,
        }
    };
    SingularPart { terms: vec![term] }
}

/// Singular part applicable to `s`: integer form within [`INTEGER_TOL`], boundary-value form otherwise.
pub fn singular_part_for(s: Order) -> Result<SingularPart> {
    match s.as_integer(INTEGER_TOL) {
        Some(n) => Ok(singular_part_integer(n)),
        None => singular_part(s),
    }
}

/// `li_eval(s, p)` minus the singular part.
///
/// Away from the positive integers and inside the Zagier disc the remainder
/// is exactly the regular series, which is summed directly; subtracting a
/// pole of order `m + 1` would lose `(m + 1)·log₁₀(1/|x|)` digits near `0`.
pub fn smooth_remainder(s: Order, p: EvalPoint) -> Result<Complex64> {
    let positive_integer = s.as_integer(INTEGER_TOL).is_some_and(|n| n >= 1);
    if !positive_integer && p.x != 0.0 && p.x.abs() < ZAGIER_RADIUS {
        return regular_series(s, p.x);
    }
    let li = li_eval(s, p)?.value;
    Ok(li - singular_part_for(s)?.eval(p.x)?)
}

/// `Σ_k ζ(s−k) x^k/k!`, stopped after three terms below `1e-16` of the sum.
fn regular_series(s: Order, x: f64) -> Result<Complex64> {
    let sc = s.complex();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut pow = 1.0;
    let mut small = 0;
    for k in 0..SERIES_CAP {
        let t = zeta_taylor_coeff(sc, k)? * pow;
        sum += t;
        if t.norm() <= 1e-16 * sum.norm() {
            small += 1;
            if small == 3 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
        pow *= x;
    }
    Err(Error::SlowConvergence {
        cap: SERIES_CAP,
        last: (zeta_taylor_coeff(sc, SERIES_CAP)? * pow).norm(),
    })
}

/// Taylor coefficients `ζ(s−k)/k!`, `k < m`, of the remainder at 0 for non-integer `s`.
pub fn remainder_taylor(s: Order, m: usize) -> Result<Vec<Complex64>> {
    if m > TAYLOR_MAX {
        return Err(Error::OutOfRange {
            index: m,
            max: TAYLOR_MAX,
        });
    }
    let (n, eps) = s.nearest_integer();
    if n >= 1 && eps.norm() <= INTEGER_TOL {
        return Err(Error::IntegerOrder(s.to_string()));
    }
    (0..m).map(|k| zeta_taylor_coeff(s.complex(), k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::cos_pi;
    use crate::polylog::{li_integer_limit, Side};
    use std::f64::consts::{LN_2, PI};

    #[test]
    fn boundary_value_part_examples() {
        let sp = singular_part(Order::real(0.5)).unwrap();
        assert!((sp.eval(-1.0).unwrap() - Complex64::new(PI.sqrt(), 0.0)).norm() < 1e-14);
        assert!(sp.eval(1.0).unwrap().norm() < 1e-15);
        let sp = singular_part(Order::real(0.25)).unwrap();
        // −Γ(3/4)cos(π/4), Γ(3/4) = 1.2254167024651776451
        let want = -1.225_416_702_465_177_6 * (0.5f64).sqrt();
        assert!((sp.eval(1.0).unwrap() - Complex64::new(want, 0.0)).norm() < 1e-14);
        assert!(matches!(
            singular_part(Order::real(3.0)),
            Err(Error::IntegerOrder(_))
        ));
    }

    #[test]
    fn integer_part_examples() {
        let sp = singular_part_integer(1);
        assert!((sp.eval(0.5).unwrap().re - LN_2).abs() < 1e-15);
        assert!((sp.eval(-0.5).unwrap().re - LN_2).abs() < 1e-15);
        assert!((singular_part_integer(0).eval(2.0).unwrap().re + 0.5).abs() < 1e-15);
        assert_eq!(singular_part_integer(3).eval(1.0).unwrap().re, 0.0);
        // (−1)^{m−1} m! x^{−m−1} for m = 2: −2/x³
        assert!((singular_part_integer(-2).eval(0.5).unwrap().re + 16.0).abs() < 1e-13);
    }

    #[test]
    fn zagier_equivalence_on_negative_axis() {
        for s in [
            Order::real(0.5),
            Order::real(-1.3),
            Order::new(1.5, 0.7).unwrap(),
            Order::new(-0.2, -2.0).unwrap(),
        ] {
            let sp = singular_part(s).unwrap();
            for x in [-0.01f64, -0.4, -2.5] {
                let sc = s.complex();
                let want = gamma_c(Complex64::new(1.0, 0.0) - sc).unwrap()
                    * ((sc - 1.0) * (-x).ln()).exp();
                let got = sp.eval(x).unwrap();
                assert!((got - want).norm() <= 1e-12 * want.norm(), "s={s} x={x}");
            }
        }
    }

    #[test]
    fn principal_positive_axis_matches_cosine_form() {
        let s = Order::new(0.3, 0.4).unwrap();
        let sc = s.complex();
        let sp = singular_part(s).unwrap();
        let x = 0.7f64;
        let want = -gamma_c(Complex64::new(1.0, 0.0) - sc).unwrap()
            * cos_pi(sc)
            * ((sc - 1.0) * x.ln()).exp();
        assert!((sp.eval(x).unwrap() - want).norm() < 1e-13 * want.norm());
    }

    #[test]
    fn remainder_examples() {
        // s = 1: −log|(1−e^x)/x| → 0 on both sides
        for &x in &[-1e-6, 1e-6] {
            let r = smooth_remainder(Order::real(1.0), EvalPoint::principal(x)).unwrap();
            assert!(r.norm() < 1e-6);
        }
        // s = 1/2: remainder equals the regular series
        let c = remainder_taylor(Order::real(0.5), 40).unwrap();
        for &x in &[-0.1, 0.1] {
            let r = smooth_remainder(Order::real(0.5), EvalPoint::principal(x)).unwrap();
            let t: Complex64 = c
                .iter()
                .rev()
                .fold(Complex64::new(0.0, 0.0), |acc, &ck| acc * x + ck);
            assert!((r - t).norm() < 1e-9);
        }
        // s = 2: remainder = li₂ + x log|x|
        for &x in &[-0.05, 0.05] {
            let r = smooth_remainder(Order::real(2.0), EvalPoint::principal(x)).unwrap();
            let li = li_integer_limit(2, EvalPoint::new(x, Side::Principal)).unwrap();
            assert!((r - (li + x * x.abs().ln())).norm() < 1e-14);
            // ζ(2) + x + ζ(0)x²/2 + …
            let approx = PI * PI / 6.0 + x - 0.25 * x * x;
            assert!((r.re - approx).abs() < 1e-5);
        }
    }

    #[test]
    fn remainder_taylor_examples_and_errors() {
        let c = remainder_taylor(Order::real(0.5), 1).unwrap();
        assert!((c[0].re + 1.460_354_508_809_586_8).abs() < 1e-12);
        let c = remainder_taylor(Order::real(2.5), 2).unwrap();
        assert!((c[1].re - 2.612_375_348_685_488_3).abs() < 1e-12);
        let c = remainder_taylor(Order::real(-0.5), 1).unwrap();
        assert!((c[0].re + 0.207_886_224_977_354_57).abs() < 1e-12);
        assert!(matches!(
            remainder_taylor(Order::real(2.0), 3),
            Err(Error::IntegerOrder(_))
        ));
        assert!(matches!(
            remainder_taylor(Order::real(0.5), 41),
            Err(Error::OutOfRange { .. })
        ));
        assert!(remainder_taylor(Order::real(-2.0), 3).is_ok());
    }

    #[test]
    fn recomposition_is_exact() {
        for s in [
            Order::real(0.5),
            Order::real(3.0),
            Order::real(-1.0),
            Order::new(2.2, -0.3).unwrap(),
        ] {
            for &x in &[-2.0, -0.3, 0.4, 3.0] {
                let p = EvalPoint::principal(x);
                let li = li_eval(s, p).unwrap().value;
                let back = smooth_remainder(s, p).unwrap()
                    + singular_part_for(s).unwrap().eval(x).unwrap();
                assert!((li - back).norm() <= 1e-12 * (1.0 + li.norm()));
            }
        }
    }

    #[test]
    fn residue_is_a_pure_power() {
        // residue of s ↦ singular_part(s)(x) at s = n is −x^{n−1}/(n−1)!
        let r = 1e-3;
        for n in 1..=3u32 {
            for &x in &[-0.7, -0.2, 0.3, 1.1] {
                let pts = 32;
                let mean: Complex64 = (0..pts)
                    .map(|j| {
                        let eps =
                            Complex64::from_polar(r, 2.0 * PI * (j as f64 + 0.5) / pts as f64);
                        let s = Order::from(Complex64::new(n as f64, 0.0) + eps);
                        eps * singular_part(s).unwrap().eval(x).unwrap()
                    })
                    .sum::<Complex64>()
                    / pts as f64;
                let want = -x.powi(n as i32 - 1) / factorial((n - 1) as usize);
                assert!(
                    (mean - Complex64::new(want, 0.0)).norm() < 1e-8,
                    "n={n} x={x}: {mean}"
                );
            }
        }
    }
}
