//! Pointwise `li_s(x) = Li_s(e^x)` for complex order `s` and real `x`.
//!
//! Regimes:
//!
//! * `x ≤ −1`: the defining series `Σ e^{nx}/n^s`.
//! * `0 < |x| < 2π·0.875`: the expansion
//!   `Γ(1−s)(−x)^{s−1} + Σ_k ζ(s−k) x^k/k!`.
//! * `s` at (or within [`INTEGER_GUARD`] of) a positive integer `n`: the
//!   limit of that expansion, where the two pole-bearing terms cancel into
//!   `x^{n−1}/(n−1)!·(H_{n−1} − log(−x))`.
//! * `s` a non-positive integer: the rational function of `e^x` obtained by
//!   differentiating `1/(e^{−x}−1)`.
//!
//! For `x > 0` the power `(−x)^{s−1}` sits on the cut; [`Side`] picks the
//! boundary value: `Above` means `arg(−x) = −π` (the limit from `Im x > 0`),
//! `Below` means `+π`, `Principal` is their mean.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::{self, cos_pi, digamma_c, gamma_c, trigamma_int, zeta_taylor_coeff};
use crate::order::Order;

/// Largest `|x|` accepted by the small-`x` expansion.
pub const ZAGIER_RADIUS: f64 = 2.0 * PI * 0.875;
/// Half-width of the band around positive integers evaluated by joint expansion.
pub const INTEGER_GUARD: f64 = 1e-4;
/// Orders this close to a non-positive integer use the closed form.
pub const NEG_INTEGER_TOL: f64 = 1e-12;
/// Series stop once three consecutive terms fall below this fraction of the partial sum.
pub const SERIES_EPS: f64 = 1e-14;
pub const SERIES_CAP: usize = 400;
/// `x` at or below this uses the defining series.
pub const DIRECT_SWITCH: f64 = -1.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Above,
    Below,
    #[default]
    Principal,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Above => "above",
            Side::Below => "below",
            Side::Principal => "principal",
        }
    }

    /// `arg(−x)` for `x > 0`, or `None` for the principal mean.
    fn arg_neg_x(self) -> Option<f64> {
        match self {
            Side::Above => Some(-PI),
            Side::Below => Some(PI),
            Side::Principal => None,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "above" | "+" => Ok(Side::Above),
            "below" | "-" => Ok(Side::Below),
            "principal" | "pv" => Ok(Side::Principal),
            other => Err(Error::invalid(format!("unknown side '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalPoint {
    pub x: f64,
    pub side: Side,
}

impl EvalPoint {
    pub fn new(x: f64, side: Side) -> Self {
        EvalPoint { x, side }
    }

    pub fn principal(x: f64) -> Self {
        EvalPoint {
            x,
            side: Side::Principal,
        }
    }
}

impl From<f64> for EvalPoint {
    fn from(x: f64) -> Self {
        EvalPoint::principal(x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    DirectSeries,
    Zagier,
    IntegerLimit,
    NegativeInteger,
    PositiveSide,
    OriginLimit,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::DirectSeries => "direct_series",
            Regime::Zagier => "zagier",
            Regime::IntegerLimit => "integer_limit",
            Regime::NegativeInteger => "negative_integer",
            Regime::PositiveSide => "positive_side",
            Regime::OriginLimit => "origin_limit",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: Complex64,
    pub regime: Regime,
    pub est_error: f64,
}

/// Partial sum with the three-small-terms stopping rule.
struct SeriesSum {
    sum: Complex64,
    abs_sum: f64,
    last: f64,
}

fn sum_series<F>(start: usize, mut term: F) -> Result<SeriesSum>
where
    F: FnMut(usize) -> Result<Complex64>,
{
    let mut sum = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    let mut small = 0;
    let mut last = 0.0;
    for (count, k) in (start..).enumerate() {
        if count >= SERIES_CAP {
            return Err(Error::SlowConvergence {
                cap: SERIES_CAP,
                last,
            });
        }
        let t = term(k)?;
        sum += t;
        last = t.norm();
        abs_sum += last;
        if last <= SERIES_EPS * sum.norm() {
            small += 1;
            if small == 3 {
                return Ok(SeriesSum { sum, abs_sum, last });
            }
        } else {
            small = 0;
        }
    }
    unreachable!()
}

impl SeriesSum {
    fn error(&self, ratio: f64) -> f64 {
        let tail = if ratio < 1.0 {
            self.last * ratio / (1.0 - ratio)
        } else {
            self.last
        };
        tail + 4.0 * f64::EPSILON * self.abs_sum
    }
}

/// The defining series `Σ_{n≥1} e^{nx}/n^s`, `x < 0`.
pub fn li_direct_series(s: Order, x: f64) -> Result<Complex64> {
    direct_series(s, x).map(|r| r.value)
}

fn direct_series(s: Order, x: f64) -> Result<EvalResult> {
    if !(x < 0.0) {
        return Err(Error::domain(format!("direct series needs x < 0, got {x}")));
    }
    let sc = s.complex();
    let series = sum_series(1, |n| {
        let nf = n as f64;
        Ok((x * nf - sc * nf.ln()).exp())
    })?;
    Ok(EvalResult {
        value: series.sum,
        regime: Regime::DirectSeries,
        est_error: series.error(x.exp()),
    })
}

/// `log(−x)` on the branch selected by `side` (`x ≠ 0`).
pub fn log_neg_x(x: f64, side: Side) -> Complex64 {
    let l = x.abs().ln();
    if x < 0.0 {
        return Complex64::new(l, 0.0);
    }
    match side.arg_neg_x() {
        Some(arg) => Complex64::new(l, arg),
        None => Complex64::new(l, 0.0),
    }
}

/// `Γ(1−s)(−x)^{s−1}` on the branch selected by `side`.
fn zagier_singular_term(s: Complex64, x: f64, side: Side) -> Result<Complex64> {
    let g = gamma_c(Complex64::new(1.0, 0.0) - s)?;
    let pow = (s - 1.0) * x.abs().ln();
    if x < 0.0 {
        return Ok(g * pow.exp());
    }
    Ok(match side.arg_neg_x() {
        Some(arg) => g * (pow + Complex64::new(0.0, arg) * (s - 1.0)).exp(),
        // mean of e^{∓iπ(s−1)} is cos(π(s−1)) = −cos(πs)
        None => -g * cos_pi(s) * pow.exp(),
    })
}

fn check_radius(x: f64) -> Result<()> {
    if x == 0.0 {
        return Err(Error::domain("expansion needs x != 0"));
    }
    if x.abs() >= ZAGIER_RADIUS {
        return Err(Error::domain(format!(
            "|x| = {} is outside the expansion radius {ZAGIER_RADIUS}",
            x.abs()
        )));
    }
    Ok(())
}

/// `Σ_k c_k x^k` (skipping `skip`), complex `x`.
fn regular_series<F>(x: Complex64, skip: Option<usize>, coeff: F) -> Result<SeriesSum>
where
    F: Fn(usize) -> Result<Complex64>,
{
    let mut pow = Complex64::new(1.0, 0.0);
    sum_series(0, |k| {
        let p = pow;
        pow *= x;
        if Some(k) == skip {
            return Ok(Complex64::new(0.0, 0.0));
        }
        Ok(coeff(k)? * p)
    })
}

fn positive_integer_near(s: Order) -> Option<(u32, Complex64)> {
    let (n, eps) = s.nearest_integer();
    (n >= 1 && eps.norm() < INTEGER_GUARD).then_some((n as u32, eps))
}

/// Small-`x` expansion for non-integer-adjacent `s`.
pub fn li_zagier(s: Order, p: EvalPoint) -> Result<Complex64> {
    zagier(s, p).map(|r| r.value)
}

fn zagier(s: Order, p: EvalPoint) -> Result<EvalResult> {
    check_radius(p.x)?;
    if let Some((n, _)) = positive_integer_near(s) {
        return Err(Error::NearInteger {
            s: s.to_string(),
            n: n as i64,
            radius: INTEGER_GUARD,
        });
    }
    let sc = s.complex();
    let sing = zagier_singular_term(sc, p.x, p.side)?;
    let series = regular_series(Complex64::new(p.x, 0.0), None, |k| zagier_coeff(sc, k))?;
    let rounding = 8.0 * f64::EPSILON * sing.norm() * (1.0 + sc.norm() * p.x.abs().ln().abs());
    Ok(EvalResult {
        value: sing + series.sum,
        regime: if p.x < 0.0 {
            Regime::Zagier
        } else {
            Regime::PositiveSide
        },
        est_error: series.error(p.x.abs() / (2.0 * PI)) + rounding,
    })
}

fn zagier_coeff(s: Complex64, k: usize) -> Result<Complex64> {
    zeta_taylor_coeff(s, k)
}

/// Joint expansion around a positive integer `n` with offset `eps = s − n`:
/// `Γ(1−s)(−x)^{s−1} + ζ(s−n+1)x^{n−1}/(n−1)!` to first order in `eps`,
/// plus the remaining regular terms at the actual order.
fn near_integer(
    n: u32,
    eps: Complex64,
    x: Complex64,
    log_neg: Complex64,
) -> Result<(Complex64, f64)> {
    let m = (n - 1) as usize;
    let psi = digamma_c(Complex64::new(n as f64, 0.0))?.re;
    let tri = trigamma_int(n);
    let l = log_neg;
    let a0 = Complex64::new(psi + kernels::STIELTJES_0, 0.0) - l;
    let a1 = psi * l - l * l * 0.5 - 0.5 * (PI * PI / 3.0 + psi * psi - tri) - kernels::STIELTJES_1;
    let s = Complex64::new(n as f64, 0.0) + eps;
    let x_pow_m = x.powu(m as u32) / factorial(m);
    let pair = x_pow_m * (a0 + eps * a1);
    let series = if eps == Complex64::new(0.0, 0.0) {
        regular_series(x, Some(m), |k| integer_coeff(n, k))?
    } else {
        regular_series(x, Some(m), |k| zeta_taylor_coeff(s, k))?
    };
    let truncation = x_pow_m.norm() * eps.norm_sqr() * (1.0 + l.norm()).powi(2);
    let err = series.error(x.norm() / (2.0 * PI)) + truncation + 4.0 * f64::EPSILON * pair.norm();
    Ok((pair + series.sum, err))
}

/// `ζ(n − k)/k!` for integer order `n`, with the `k = n − 1` pole excluded.
fn integer_coeff(n: u32, k: usize) -> Result<Complex64> {
    zeta_taylor_coeff(Complex64::new(n as f64, 0.0), k)
}

pub(crate) fn factorial(m: usize) -> f64 {
    (1..=m).map(|j| j as f64).product()
}

/// Limit of the small-`x` expansion as `s → n` for a positive integer `n`:
/// `x^{n−1}/(n−1)!·(H_{n−1} − log(−x)) + Σ_{k≠n−1} ζ(n−k) x^k/k!`.
pub fn li_integer_limit(n: u32, p: EvalPoint) -> Result<Complex64> {
    integer_limit(n, p).map(|r| r.value)
}

fn integer_limit(n: u32, p: EvalPoint) -> Result<EvalResult> {
    if n == 0 {
        return Err(Error::invalid("integer limit needs n >= 1"));
    }
    check_radius(p.x)?;
    let (value, est_error) = near_integer(
        n,
        Complex64::new(0.0, 0.0),
        Complex64::new(p.x, 0.0),
        log_neg_x(p.x, p.side),
    )?;
    Ok(EvalResult {
        value,
        regime: Regime::IntegerLimit,
        est_error,
    })
}

/// Integer-order `li_n` at complex `x` with an explicit `log(−x)`, for the
/// complex-argument polylogarithm used by the modified module.
pub(crate) fn integer_order_complex(n: u32, x: Complex64, log_neg: Complex64) -> Result<Complex64> {
    if x.norm() >= ZAGIER_RADIUS {
        return Err(Error::domain(format!(
            "|log z| = {} is outside the expansion radius",
            x.norm()
        )));
    }
    near_integer(n, Complex64::new(0.0, 0.0), x, log_neg).map(|(v, _)| v)
}

/// Eulerian numbers `A(n, m)`, `m = 0..n−1` (`A(0, 0) = 1`).
fn eulerian_row(n: u32) -> Vec<f64> {
    let mut row = vec![1.0];
    for k in 1..=n as usize {
        // A(k, m) = (m+1) A(k−1, m) + (k−m) A(k−1, m−1)
        let mut next = vec![0.0; k];
        for (m, slot) in next.iter_mut().enumerate() {
            let a = row.get(m).copied().unwrap_or(0.0);
            let b = if m > 0 {
                row.get(m - 1).copied().unwrap_or(0.0)
            } else {
                0.0
            };
            *slot = (m + 1) as f64 * a + (k - m) as f64 * b;
        }
        row = next;
    }
    row
}

/// `li_{−n}(x) = ∂ₓⁿ 1/(e^{−x}−1)`, a rational function of `e^x`, for `x ≠ 0`.
pub fn li_negative_integer(n: u32, x: f64) -> Result<f64> {
    if x == 0.0 {
        return Err(Error::domain("li_{-n} has a pole at x = 0"));
    }
    let z = x.exp();
    let one_minus_z = -x.exp_m1();
    // Σ_k k^n z^k = z A_n(z) / (1 − z)^{n+1}
    let poly = eulerian_row(n)
        .iter()
        .rev()
        .fold(0.0, |acc, &a| acc * z + a);
    Ok(z * poly / one_minus_z.powi(n as i32 + 1))
}

/// Regime-dispatched `li_s(x)`.
pub fn li_eval(s: Order, p: EvalPoint) -> Result<EvalResult> {
    let x = p.x;
    if !x.is_finite() {
        return Err(Error::invalid(format!("non-finite x = {x}")));
    }
    if x == 0.0 {
        if s.re > 1.5 {
            let value = kernels::riemann_zeta(s)?;
            return Ok(EvalResult {
                value,
                regime: Regime::OriginLimit,
                est_error: 1e-15 * value.norm(),
            });
        }
        return Err(Error::Origin(s.to_string()));
    }
    if x >= ZAGIER_RADIUS {
        return Err(Error::domain(format!(
            "x = {x} exceeds {ZAGIER_RADIUS} on the positive axis"
        )));
    }
    if let Some(n) = s.as_integer(NEG_INTEGER_TOL).filter(|&n| n <= 0) {
        let v = li_negative_integer((-n) as u32, x)?;
        return Ok(EvalResult {
            value: Complex64::new(v, 0.0),
            regime: Regime::NegativeInteger,
            est_error: 8.0 * f64::EPSILON * v.abs(),
        });
    }
    if x <= DIRECT_SWITCH {
        return direct_series(s, x);
    }
    if let Some((n, eps)) = positive_integer_near(s) {
        let (value, est_error) =
            near_integer(n, eps, Complex64::new(x, 0.0), log_neg_x(x, p.side))?;
        return Ok(EvalResult {
            value,
            regime: Regime::IntegerLimit,
            est_error,
        });
    }
    zagier(s, p)
}

/// `Li_s(t)` on the positive axis via `t = e^x`.
pub fn polylog_at(s: Order, t: f64, side: Side) -> Result<Complex64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain(format!("Li_s(t) needs t > 0, got {t}")));
    }
    li_eval(s, EvalPoint::new(t.ln(), side)).map(|r| r.value)
}

/// `li_s` at a fixed order with the regular-series coefficients cached,
/// for repeated evaluation (quadrature, grid scans).
pub struct LiEvaluator {
    s: Order,
    coeffs: Vec<Complex64>,
    near: Option<(u32, Complex64)>,
    neg_int: Option<u32>,
}

impl LiEvaluator {
    pub fn new(s: Order) -> Result<Self> {
        let neg_int = s
            .as_integer(NEG_INTEGER_TOL)
            .filter(|&n| n <= 0)
            .map(|n| (-n) as u32);
        let near = positive_integer_near(s);
        let mut coeffs = Vec::new();
        if neg_int.is_none() {
            let sc = match near {
                Some((n, eps)) if eps == Complex64::new(0.0, 0.0) => Complex64::new(n as f64, 0.0),
                _ => s.complex(),
            };
            let skip = near.map(|(n, _)| (n - 1) as usize);
            for k in 0..SERIES_CAP {
                coeffs.push(if Some(k) == skip {
                    Complex64::new(0.0, 0.0)
                } else {
                    zeta_taylor_coeff(sc, k)?
                });
            }
        }
        Ok(LiEvaluator {
            s,
            coeffs,
            near,
            neg_int,
        })
    }

    pub fn order(&self) -> Order {
        self.s
    }

    pub fn eval(&self, p: EvalPoint) -> Result<EvalResult> {
        let x = p.x;
        if let Some(n) = self.neg_int {
            if x == 0.0 {
                return Err(Error::Origin(self.s.to_string()));
            }
            let v = li_negative_integer(n, x)?;
            return Ok(EvalResult {
                value: Complex64::new(v, 0.0),
                regime: Regime::NegativeInteger,
                est_error: 8.0 * f64::EPSILON * v.abs(),
            });
        }
        if x == 0.0 || x <= DIRECT_SWITCH || x >= ZAGIER_RADIUS {
            return li_eval(self.s, p);
        }
        let xc = Complex64::new(x, 0.0);
        let coeff = |k: usize| Ok(self.coeffs[k]);
        match self.near {
            Some((n, eps)) => {
                let m = (n - 1) as usize;
                let l = log_neg_x(x, p.side);
                let psi = digamma_c(Complex64::new(n as f64, 0.0))?.re;
                let a0 = Complex64::new(psi + kernels::STIELTJES_0, 0.0) - l;
                let a1 = psi * l
                    - l * l * 0.5
                    - 0.5 * (PI * PI / 3.0 + psi * psi - trigamma_int(n))
                    - kernels::STIELTJES_1;
                let pair = xc.powu(m as u32) / factorial(m) * (a0 + eps * a1);
                let series = regular_series(xc, Some(m), coeff)?;
                Ok(EvalResult {
                    value: pair + series.sum,
                    regime: Regime::IntegerLimit,
                    est_error: series.error(x.abs() / (2.0 * PI))
                        + 4.0 * f64::EPSILON * pair.norm(),
                })
            }
            None => {
                let sc = self.s.complex();
                let sing = zagier_singular_term(sc, x, p.side)?;
                let series = regular_series(xc, None, coeff)?;
                Ok(EvalResult {
                    value: sing + series.sum,
                    regime: if x < 0.0 {
                        Regime::Zagier
                    } else {
                        Regime::PositiveSide
                    },
                    est_error: series.error(x.abs() / (2.0 * PI))
                        + 8.0 * f64::EPSILON * sing.norm(),
                })
            }
        }
    }
}
