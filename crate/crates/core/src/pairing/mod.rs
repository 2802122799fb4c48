//! Tempered-distribution pairings of `li_s` and the power distributions.
//!
//! `li_s = γ₊ˢ * li₀`, so `⟨li_s, f⟩ = ⟨li₀, F_s⟩` with the profile
//! `F_s(t) = ⟨γ₊ˢ, f(· + t)⟩`. The profile is computed after `k` integrations
//! by parts, which keeps the integrand exponent positive and makes the
//! construction valid for every complex `s`. The principal value against
//! `li₀(t) = 1/(e^{−t} − 1)` is split by an even cutoff `χ` into an absolutely
//! convergent far part and a regularised near part.

pub mod quadrature;
pub mod testfn;

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::{bernoulli_f64, exp_i_pi, rgamma};
use crate::order::Order;
use crate::polylog::{EvalPoint, LiEvaluator};
use quadrature::{breakpoints, integrate, tanh_sinh, Estimate, Tolerance};
pub use testfn::{Cutoff, TestFunction, TestFunctionSpec};

/// Largest integration-by-parts order in the profile.
pub const MAX_PROFILE_ORDER: usize = 20;
/// Taylor terms of the profile used for the difference quotient near `t = 0`.
const TAYLOR_TERMS: usize = 10;
/// Below this `|t|` the regularised kernel uses its Bernoulli series.
const KERNEL_SERIES: f64 = 0.1;
/// Radius of the circle mean used at poles of `Γ(1 + a)`.
const POLE_RADIUS: f64 = 0.05;
const POLE_POINTS: usize = 32;
/// Distance to a pole of `Γ(1 + a)` below which the circle mean is used.
const POLE_GUARD: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairingResult {
    pub value: Complex64,
    pub est_error: f64,
}

impl PairingResult {
    fn from_estimate(e: Estimate) -> Result<Self> {
        if !e.value.re.is_finite() || !e.value.im.is_finite() {
            return Err(Error::Quadrature {
                tol: 0.0,
                estimate: f64::INFINITY,
            });
        }
        Ok(PairingResult {
            value: e.value,
            est_error: e.error,
        })
    }
}

/// Boundary value of `(ξ ± i0)^a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EtaSide {
    Plus,
    Minus,
}

impl FromStr for EtaSide {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(EtaSide::Plus),
            "minus" | "-" => Ok(EtaSide::Minus),
            _ => Err(Error::invalid(format!(
                "unknown eta side '{s}' (plus|minus)"
            ))),
        }
    }
}

impl fmt::Display for EtaSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EtaSide::Plus => "plus",
            EtaSide::Minus => "minus",
        })
    }
}

/// `k = max(0, ⌈1.25 − Re s⌉)`: the smallest order keeping `Re s + k ≥ 1.25`.
pub fn profile_order(s: Order) -> usize {
    (1.25 - s.re).ceil().max(0.0) as usize
}

fn inner_tol() -> Tolerance {
    Tolerance::new(1e-17, 1e-13)
}

fn outer_tol() -> Tolerance {
    Tolerance::new(1e-14, 1e-12)
}

/// Length scale over which a test function varies.
fn smooth_scale(f: &TestFunction) -> f64 {
    (1.0 / (1.0 / f.sigma() + f.freq().abs())).min(1.0)
}

/// A smooth function of `t` with its Taylor data at `0`: either a test
/// function itself or its profile `F_s`.
struct Smoothed {
    /// `g^{(j)}`, `j = 0..=TAYLOR_TERMS`, with `g = f^{(k)}` for a profile.
    derivs: Vec<TestFunction>,
    /// `(s + k − 1, (−1)^k/Γ(s + k))` for a profile, `None` for `g` itself.
    kernel: Option<(Complex64, Complex64)>,
    scale: f64,
}

impl Smoothed {
    fn identity(f: &TestFunction) -> Result<Self> {
        Self::build(f.clone(), None)
    }

    fn profile(s: Order, f: &TestFunction, k: usize) -> Result<Self> {
        if k > MAX_PROFILE_ORDER {
            return Err(Error::invalid(format!(
                "profile order {k} exceeds {MAX_PROFILE_ORDER}"
            )));
        }
        if s.re + k as f64 <= 0.25 {
            return Err(Error::invalid(format!(
                "profile needs Re s + k > 0.25, got s = {s}, k = {k}"
            )));
        }
        let sk = s.complex() + k as f64;
        let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
        Self::build(f.nth_derivative(k)?, Some((sk - 1.0, rgamma(sk) * sign)))
    }

    fn build(g: TestFunction, kernel: Option<(Complex64, Complex64)>) -> Result<Self> {
        let scale = smooth_scale(&g);
        let mut derivs = vec![g];
        for j in 0..TAYLOR_TERMS {
            derivs.push(derivs[j].derivative()?);
        }
        Ok(Smoothed {
            derivs,
            kernel,
            scale,
        })
    }

    /// `t` beyond which the function vanishes to working precision.
    fn upper(&self) -> f64 {
        self.derivs[0].support().1
    }

    /// `F^{(j)}(t)`.
    fn eval(&self, j: usize, t: f64) -> Result<Estimate> {
        let g = &self.derivs[j];
        let Some((a, c)) = self.kernel else {
            let v = g.eval(t);
            return Ok(Estimate {
                value: v,
                error: 0.0,
                abs_sum: v.norm(),
            });
        };
        let (lo, hi) = g.support();
        let (lo, hi) = (lo - t, hi - t);
        if hi <= 0.0 {
            return Ok(Estimate::zero());
        }
        let integrand = |x: f64| Ok((a * x.ln()).exp() * g.eval(x + t));
        let width = 2.0 * self.scale;
        let est = if lo > 0.0 {
            integrate(integrand, &breakpoints(lo, hi, width), inner_tol())?
        } else {
            let delta = (0.5 * self.scale).min(hi);
            let head = tanh_sinh(integrand, 0.0, delta, inner_tol())?;
            head + integrate(integrand, &breakpoints(delta, hi, width), inner_tol())?
        };
        Ok(Estimate {
            value: est.value * c,
            error: est.error * c.norm(),
            abs_sum: est.abs_sum * c.norm(),
        })
    }
}

/// `F_s(t) = (−1)^k/Γ(s+k) ∫₀^∞ x^{s+k−1} f^{(k)}(x+t) dx`.
pub fn profile(s: Order, t: f64, f: &TestFunction, k: usize) -> Result<Complex64> {
    if !t.is_finite() {
        return Err(Error::invalid(format!("non-finite t = {t}")));
    }
    Ok(Smoothed::profile(s, f, k)?.eval(0, t)?.value)
}

/// `⟨γ₊ˢ, f⟩` with `γ₊ˢ = x₊^{s−1}/Γ(s)`, entire in `s`.
pub fn pair_gamma_plus(s: Order, f: &TestFunction) -> Result<PairingResult> {
    let p = Smoothed::profile(s, f, profile_order(s))?;
    PairingResult::from_estimate(p.eval(0, 0.0)?)
}

/// `li₀(t) = 1/(e^{−t} − 1)`.
fn li0_kernel(t: f64) -> f64 {
    1.0 / (-t).exp_m1()
}

/// `li₀(t) + 1/t`, smooth at `0`.
fn li0_regular(t: f64) -> f64 {
    if t.abs() < KERNEL_SERIES {
        // −1/2 − Σ B_{2n} t^{2n−1}/(2n)!
        let t2 = t * t;
        let mut p = t;
        let mut fact = 2.0;
        let mut sum = -0.5;
        for n in 1..=6 {
            sum -= bernoulli_f64(2 * n).expect("tabulated Bernoulli number") * p / fact;
            p *= t2;
            fact *= ((2 * n + 1) * (2 * n + 2)) as f64;
        }
        sum
    } else {
        li0_kernel(t) + 1.0 / t
    }
}

/// `⟨PV li₀, F⟩` for a smooth `F` with Taylor data at `0`.
fn pv_li0(func: &Smoothed, chi: Cutoff, lo: f64) -> Result<PairingResult> {
    let hi = func.upper();
    let tol = outer_tol();
    let value = |t: f64| func.eval(0, t).map(|e| e.value);
    let mut total = Estimate::zero();

    // far part: ∫ (1 − χ) F li₀ over |t| ≥ a
    let far = |t: f64| Ok((1.0 - chi.eval(t)) * value(t)? * li0_kernel(t));
    let mut left = breakpoints(lo, -chi.b, 1.0);
    left.push(-chi.a);
    total = total + integrate(far, &left, tol)?;
    if hi > chi.a {
        let mut right = vec![chi.a];
        if hi > chi.b {
            right.extend(breakpoints(chi.b, hi, 1.0));
        } else {
            right.push(hi);
        }
        total = total + integrate(far, &right, tol)?;
    }

    // near part: ∫ χ [F (li₀ + 1/t) − (F − F(0))/t] over |t| < b
    let taylor: Vec<Complex64> = {
        let mut c = Vec::with_capacity(TAYLOR_TERMS + 1);
        let mut fact = 1.0;
        for j in 0..=TAYLOR_TERMS {
            if j > 0 {
                fact *= j as f64;
            }
            c.push(func.eval(j, 0.0)?.value / fact);
        }
        c
    };
    let radius = 0.05 * func.scale;
    let quotient = |t: f64| -> Result<Complex64> {
        if t.abs() < radius {
            Ok(taylor[1..]
                .iter()
                .rev()
                .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * t + c))
        } else {
            Ok((value(t)? - taylor[0]) / t)
        }
    };
    let near = |t: f64| Ok(chi.eval(t) * (value(t)? * li0_regular(t) - quotient(t)?));
    total = total + integrate(near, &[-chi.b, -chi.a, 0.0, chi.a, chi.b], tol)?;
    PairingResult::from_estimate(total)
}

fn lower_limit(func: &Smoothed, growth: f64) -> f64 {
    let (lo, _) = func.derivs[0].support();
    (-60.0f64).min(lo - 40.0) - 4.0 * growth.max(0.0)
}

/// `⟨PV(e^{−x} − 1)^{−1}, f⟩`.
pub fn pair_li0(f: &TestFunction, chi: Cutoff) -> Result<PairingResult> {
    let func = Smoothed::identity(f)?;
    pv_li0(&func, chi, lower_limit(&func, 0.0))
}

/// `⟨li_s, f⟩ = ⟨PV li₀, F_s⟩`, entire in `s`.
pub fn pair_li(s: Order, f: &TestFunction, chi: Cutoff) -> Result<PairingResult> {
    let k = profile_order(s);
    let func = Smoothed::profile(s, f, k)?;
    pv_li0(&func, chi, lower_limit(&func, s.re + k as f64))
}

/// Above this `x` the direct pairing evaluates `li_s` by the Bose integral.
const BOSE_SWITCH: f64 = 5.0;

/// Principal value of `li_s(x)` for `x > 1`, `Re s > 0`:
/// `PV (1/Γ(s)) ∫₀^∞ y^{s−1}/(e^{y−x} − 1) dy`, the mean of the two boundary values.
fn li_bose_principal(s: Order, x: f64) -> Result<Complex64> {
    if !(x > 1.0) || s.re <= 0.0 {
        return Err(Error::domain(format!(
            "Bose integral needs x > 1 and Re s > 0, got x = {x}, s = {s}"
        )));
    }
    let a = s.complex() - 1.0;
    let g = |y: f64| (a * y.ln()).exp();
    let tol = Tolerance::new(1e-16, 1e-13);
    let w = 0.5;
    let far = |y: f64| Ok(g(y) / (y - x).exp_m1());
    let head = tanh_sinh(far, 0.0, 1.0, tol)?;
    let upper = x + 60.0 + 10.0 * s.re;
    let mut br = breakpoints(1.0, x - w, 1.0);
    br.pop();
    br.extend(breakpoints(x - w, x + w, 2.0 * w));
    br.extend(breakpoints(x + w, upper, 2.0).into_iter().skip(1));
    let body = |y: f64| {
        let u = y - x;
        if u.abs() >= w {
            return far(y);
        }
        // symmetric pairing of x ± u removes the pole
        if u <= 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let k = 1.0 / u.exp_m1();
        let km = 1.0 / (-u).exp_m1();
        Ok(g(x + u) * (k - 1.0 / u) + g(x - u) * (km + 1.0 / u) + (g(x + u) - g(x - u)) / u)
    };
    let rest = integrate(body, &br, tol)?;
    Ok((head.value + rest.value) * rgamma(s.complex()))
}

/// `∫ li_s(x) f(x) dx` by direct quadrature of the pointwise principal value.
///
/// Defined only where the singularity at `0` is integrable, i.e. `Re s > 0`
/// or `s` a positive integer.
pub fn pair_direct(s: Order, f: &TestFunction) -> Result<PairingResult> {
    let integer = s.as_integer(1e-12);
    match integer {
        Some(n) if n <= 0 => {
            return Err(Error::NonIntegrable {
                exponent: (n - 1).to_string(),
            });
        }
        None if s.re <= 0.0 => {
            return Err(Error::NonIntegrable {
                exponent: s.shift(-1.0).to_string(),
            });
        }
        _ => {}
    }
    let (lo, hi) = f.support();
    let li = LiEvaluator::new(s)?;
    let integrand = |x: f64| {
        let v = if x >= BOSE_SWITCH {
            li_bose_principal(s, x)?
        } else {
            li.eval(EvalPoint::principal(x))?.value
        };
        Ok(v * f.eval(x))
    };
    let tol = outer_tol();
    let width = 2.0 * smooth_scale(f);
    let delta = 0.5 * smooth_scale(f);
    let mut total = Estimate::zero();
    let mut smooth_panels = |a: f64, b: f64| -> Result<()> {
        if b > a {
            let mut br = breakpoints(a, b, width);
            for cut in [-1.0, BOSE_SWITCH] {
                if a < cut && b > cut {
                    br.push(cut);
                }
            }
            br.sort_by(f64::total_cmp);
            total = total + integrate(integrand, &br, tol)?;
        }
        Ok(())
    };
    if lo >= 0.0 || hi <= 0.0 {
        smooth_panels(lo, hi)?;
    } else {
        let (a, b) = ((-delta).max(lo), delta.min(hi));
        smooth_panels(lo, a)?;
        smooth_panels(b, hi)?;
        total = total + tanh_sinh(integrand, a, 0.0, tol)?;
        total = total + tanh_sinh(integrand, 0.0, b, tol)?;
    }
    PairingResult::from_estimate(total)
}

/// `Γ(1 + a)[⟨γ₊^{1+a}, f⟩ + e^{∓iπa}⟨γ₊^{1+a}, f(−·)⟩]` at a regular point.
fn eta_regular(
    a: Complex64,
    side: EtaSide,
    f: &TestFunction,
    g: &TestFunction,
) -> Result<PairingResult> {
    let b = Order::from(a + 1.0);
    let gam = crate::kernels::gamma(b)?;
    let phase = match side {
        EtaSide::Minus => exp_i_pi(-a),
        EtaSide::Plus => exp_i_pi(a),
    };
    let p = pair_gamma_plus(b, f)?;
    let q = pair_gamma_plus(b, g)?;
    Ok(PairingResult {
        value: gam * (p.value + phase * q.value),
        est_error: gam.norm() * (p.est_error + phase.norm() * q.est_error),
    })
}

/// `⟨(ξ ± i0)^a, f⟩`, entire in `a`.
///
/// Within `1e-3` of a pole of `Γ(1 + a)` the value is the mean over a
/// circle of radius `0.05` around the requested exponent.
pub fn pair_eta(a: Order, side: EtaSide, f: &TestFunction) -> Result<PairingResult> {
    let g = f.reflect();
    let ac = a.complex();
    let near_pole = {
        let n = (ac.re + 1.0).round();
        n <= 0.0 && (ac + 1.0 - n).norm() < POLE_GUARD
    };
    if !near_pole {
        return eta_regular(ac, side, f, &g);
    }
    let mut value = Complex64::new(0.0, 0.0);
    let mut est_error = 0.0;
    for j in 0..POLE_POINTS {
        let z = ac + Complex64::from_polar(POLE_RADIUS, 2.0 * PI * j as f64 / POLE_POINTS as f64);
        let r = eta_regular(z, side, f, &g)?;
        value += r.value;
        est_error += r.est_error;
    }
    let n = POLE_POINTS as f64;
    Ok(PairingResult {
        value: value / n,
        est_error: est_error / n,
    })
}

/// `|⟨γ₊ˢ, f̂⟩ − e^{−iπs/2}⟨η₋^{−s}, f⟩|`.
pub fn verify_fourier_gamma(s: Order, f: &TestFunction) -> Result<f64> {
    let lhs = pair_gamma_plus(s, &f.fourier())?;
    let minus_s = Order::from(-s.complex());
    let rhs = exp_i_pi(-s.complex() * 0.5) * pair_eta(minus_s, EtaSide::Minus, f)?.value;
    Ok((lhs.value - rhs).norm())
}

/// `|⟨li_{s−1}, f⟩ + ⟨li_s, f′⟩|`.
pub fn verify_functional_equation(s: Order, f: &TestFunction, chi: Cutoff) -> Result<f64> {
    let a = pair_li(s.shift(-1.0), f, chi)?;
    let b = pair_li(s, &f.derivative()?, chi)?;
    Ok((a.value + b.value).norm())
}
