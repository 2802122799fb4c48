//! Complex-valued quadrature: adaptive Gauss–Kronrod (7/15) panels for
//! smooth integrands and a tanh-sinh rule for panels with an algebraic or
//! logarithmic endpoint singularity.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Kronrod abscissae on [0, 1] (symmetric), odd indices are the Gauss nodes.
const XK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
    pub max_panels: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs: 1e-15,
            rel: 1e-13,
            max_panels: 4000,
        }
    }
}

impl Tolerance {
    pub fn new(abs: f64, rel: f64) -> Self {
        Tolerance {
            abs,
            rel,
            ..Default::default()
        }
    }

    fn target(&self, value: Complex64, abs_sum: f64) -> f64 {
        self.abs
            .max(self.rel * value.norm())
            .max(50.0 * f64::EPSILON * abs_sum)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: Complex64,
    pub error: f64,
    /// `∫|f|` approximation, the scale of rounding error.
    pub abs_sum: f64,
}

impl Estimate {
    pub fn zero() -> Self {
        Estimate {
            value: Complex64::new(0.0, 0.0),
            error: 0.0,
            abs_sum: 0.0,
        }
    }
}

impl std::ops::Add for Estimate {
    type Output = Estimate;

    fn add(self, o: Estimate) -> Estimate {
        Estimate {
            value: self.value + o.value,
            error: self.error + o.error,
            abs_sum: self.abs_sum + o.abs_sum,
        }
    }
}

struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
    abs_sum: f64,
}

fn gauss_kronrod<F>(f: &F, a: f64, b: f64) -> Result<Panel>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c)?;
    let mut k = fc * WK[7];
    let mut g = fc * WG[3];
    let mut abs_sum = fc.norm() * WK[7];
    for (i, (&x, &w)) in XK[..7].iter().zip(&WK[..7]).enumerate() {
        let f1 = f(c - h * x)?;
        let f2 = f(c + h * x)?;
        k += (f1 + f2) * w;
        abs_sum += (f1.norm() + f2.norm()) * w;
        if i % 2 == 1 {
            g += (f1 + f2) * WG[i / 2];
        }
    }
    let value = k * h;
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::Quadrature {
            tol: 0.0,
            estimate: f64::INFINITY,
        });
    }
    Ok(Panel {
        a,
        b,
        value,
        error: ((k - g) * h).norm(),
        abs_sum: abs_sum * h.abs(),
    })
}

/// Adaptive Gauss–Kronrod over the panels delimited by `breaks` (sorted).
pub fn integrate<F>(f: F, breaks: &[f64], tol: Tolerance) -> Result<Estimate>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let mut panels = Vec::new();
    for w in breaks.windows(2) {
        if w[1] > w[0] {
            panels.push(gauss_kronrod(&f, w[0], w[1])?);
        }
    }
    loop {
        let value: Complex64 = panels.iter().map(|p| p.value).sum();
        let error: f64 = panels.iter().map(|p| p.error).sum();
        let abs_sum: f64 = panels.iter().map(|p| p.abs_sum).sum();
        let target = tol.target(value, abs_sum);
        if error <= target {
            return Ok(Estimate {
                value,
                error,
                abs_sum,
            });
        }
        if panels.len() >= tol.max_panels {
            return Err(Error::Quadrature {
                tol: target,
                estimate: error,
            });
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .map(|(i, _)| i)
            .expect("at least one panel");
        let p = panels.swap_remove(worst);
        let mid = 0.5 * (p.a + p.b);
        if mid <= p.a || mid >= p.b {
            return Err(Error::Quadrature {
                tol: target,
                estimate: error,
            });
        }
        panels.push(gauss_kronrod(&f, p.a, mid)?);
        panels.push(gauss_kronrod(&f, mid, p.b)?);
    }
}

/// Evenly spaced breakpoints covering `[a, b]` with panels no wider than `width`.
pub fn breakpoints(a: f64, b: f64, width: f64) -> Vec<f64> {
    if b <= a {
        return vec![a, a];
    }
    let n = ((b - a) / width).ceil().max(1.0) as usize;
    (0..=n)
        .map(|i| {
            if i == n {
                b
            } else {
                a + (b - a) * i as f64 / n as f64
            }
        })
        .collect()
}

/// Tanh-sinh quadrature on `[a, b]`; the integrand receives the node and
/// tolerates integrable singularities at either endpoint.
pub fn tanh_sinh<F>(f: F, a: f64, b: f64, tol: Tolerance) -> Result<Estimate>
where
    F: Fn(f64) -> Result<Complex64>,
{
    const T_MAX: f64 = 5.0;
    const MAX_LEVEL: u32 = 9;
    let half = 0.5 * (b - a);
    let node = |t: f64| -> Option<(f64, f64)> {
        let u = FRAC_PI_2 * t.sinh();
        let w = half * FRAC_PI_2 * t.cosh() / u.cosh().powi(2);
        // distance from the nearer endpoint, computed without cancellation
        let d = (b - a) / (1.0 + (2.0 * u.abs()).exp());
        let x = if t <= 0.0 { a + d } else { b - d };
        (x > a && x < b && w > 0.0).then_some((x, w))
    };
    let mut h = 1.0;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    let n0 = (T_MAX / h) as i64;
    for j in -n0..=n0 {
        if let Some((x, w)) = node(j as f64 * h) {
            let v = f(x)? * w;
            sum += v;
            abs_sum += v.norm();
        }
    }
    let mut prev = sum * h;
    let mut prev_err = f64::NAN;
    for _ in 1..=MAX_LEVEL {
        h *= 0.5;
        let n = (T_MAX / h) as i64;
        for j in (-n..=n).filter(|j| j % 2 != 0) {
            if let Some((x, w)) = node(j as f64 * h) {
                let v = f(x)? * w;
                sum += v;
                abs_sum += v.norm();
            }
        }
        let cur = sum * h;
        let diff = (cur - prev).norm();
        if !cur.re.is_finite() || !cur.im.is_finite() {
            return Err(Error::Quadrature {
                tol: 0.0,
                estimate: f64::INFINITY,
            });
        }
        // the level error roughly squares with each halving of h
        let err = if prev_err > diff && prev_err < 1.0 && diff > 0.0 {
            diff.powf(diff.ln() / prev_err.ln())
                .max(diff * diff)
                .min(diff)
        } else {
            diff
        };
        let err = err.max(f64::EPSILON * abs_sum * h);
        if err <= tol.target(cur, abs_sum * h) {
            return Ok(Estimate {
                value: cur,
                error: err,
                abs_sum: abs_sum * h,
            });
        }
        prev = cur;
        prev_err = diff;
    }
    let target = tol.target(prev, abs_sum * h);
    Err(Error::Quadrature {
        tol: target,
        estimate: f64::NAN,
    })
}
