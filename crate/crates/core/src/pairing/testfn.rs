//! Hermite–Gaussian test functions and the smooth cutoff.
//!
//! A [`TestFunction`] is `q(u)·exp(−u²/(2σ²))·e^{iωu}` with `u = x − μ` and
//! `q` a complex polynomial. The family is closed under differentiation,
//! translation, reflection and the Fourier transform `f̂(ξ) = ∫ f(x)e^{−ixξ} dx`,
//! all computed exactly on the coefficients.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest polynomial degree accepted from callers.
pub const MAX_DEGREE: usize = 12;
/// Largest derivative order produced by [`TestFunction::derivative`].
pub const MAX_DERIVATIVE: usize = 40;

/// Plain description: `poly(x)·exp(−(x−μ)²/(2σ²))` with `poly` in the monomial basis of `x`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TestFunctionSpec {
    pub mu: f64,
    pub sigma: f64,
    pub coeffs: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TestFunction {
    mu: f64,
    sigma: f64,
    /// Coefficients of `q` in powers of `u = x − μ`.
    centered: Vec<Complex64>,
    /// Frequency `ω` of the factor `e^{iωu}`.
    freq: f64,
    /// Derivatives applied since construction from a spec.
    order: usize,
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (n - j) as f64 / (j + 1) as f64)
}

impl TestFunction {
    /// `poly(x)·exp(−(x−μ)²/(2σ²))`, `poly` given in powers of `x`.
    pub fn new(mu: f64, sigma: f64, coeffs: &[f64]) -> Result<Self> {
        if !mu.is_finite() || !(sigma > 0.0) || !sigma.is_finite() {
            return Err(Error::invalid(format!(
                "need finite mu and positive sigma, got mu={mu} sigma={sigma}"
            )));
        }
        if coeffs.is_empty()
            || coeffs.len() > MAX_DEGREE + 1
            || coeffs.iter().any(|c| !c.is_finite())
        {
            return Err(Error::invalid(format!(
                "need 1..={} finite coefficients",
                MAX_DEGREE + 1
            )));
        }
        // x^j = (u + μ)^j
        let mut centered = vec![Complex64::new(0.0, 0.0); coeffs.len()];
        for (j, &c) in coeffs.iter().enumerate() {
            for (i, slot) in centered.iter_mut().enumerate().take(j + 1) {
                *slot += c * binomial(j, i) * mu.powi((j - i) as i32);
            }
        }
        Ok(TestFunction {
            mu,
            sigma,
            centered,
            freq: 0.0,
            order: 0,
        })
    }

    pub fn from_spec(spec: &TestFunctionSpec) -> Result<Self> {
        Self::new(spec.mu, spec.sigma, &spec.coeffs)
    }

    /// Unit-mass Gaussian of centre `mu` and width `sigma`.
    pub fn gaussian(mu: f64, sigma: f64) -> Result<Self> {
        Self::new(mu, sigma, &[1.0 / (sigma * (2.0 * PI).sqrt())])
    }

    /// Unit-mass standard Gaussian.
    pub fn standard() -> Self {
        Self::gaussian(0.0, 1.0).expect("valid standard Gaussian")
    }

    /// `He_n((x−μ)/σ)·exp(−(x−μ)²/(2σ²))`, probabilists' Hermite polynomial.
    pub fn hermite(mu: f64, sigma: f64, n: usize) -> Result<Self> {
        if n > MAX_DEGREE {
            return Err(Error::invalid(format!(
                "Hermite degree {n} exceeds {MAX_DEGREE}"
            )));
        }
        // He_{k+1}(y) = y He_k(y) − k He_{k−1}(y)
        let mut prev: Vec<f64> = vec![];
        let mut cur = vec![1.0];
        for k in 0..n {
            let mut next = vec![0.0; k + 2];
            for (i, &c) in cur.iter().enumerate() {
                next[i + 1] += c;
            }
            for (i, &c) in prev.iter().enumerate() {
                next[i] -= k as f64 * c;
            }
            prev = cur;
            cur = next;
        }
        let mut f = Self::gaussian(mu, sigma)?;
        f.centered = cur
            .iter()
            .enumerate()
            .map(|(i, &c)| Complex64::new(c / sigma.powi(i as i32), 0.0))
            .collect();
        Ok(f)
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn freq(&self) -> f64 {
        self.freq
    }

    pub fn centered_coeffs(&self) -> &[Complex64] {
        &self.centered
    }

    pub fn degree(&self) -> usize {
        self.centered.len() - 1
    }

    pub fn is_real(&self) -> bool {
        self.freq == 0.0 && self.centered.iter().all(|c| c.im == 0.0)
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        let u = x - self.mu;
        let q = self
            .centered
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * u + c);
        q * Complex64::new(-0.5 * u * u / (self.sigma * self.sigma), self.freq * u).exp()
    }

    /// `f'`: `q ↦ q' − u·q/σ² + iω·q`.
    pub fn derivative(&self) -> Result<Self> {
        if self.order >= MAX_DERIVATIVE {
            return Err(Error::invalid(format!(
                "derivative order exceeds {MAX_DERIVATIVE}"
            )));
        }
        let n = self.centered.len();
        let inv_s2 = 1.0 / (self.sigma * self.sigma);
        let iw = Complex64::new(0.0, self.freq);
        let mut next = vec![Complex64::new(0.0, 0.0); n + 1];
        for (j, &c) in self.centered.iter().enumerate() {
            if j > 0 {
                next[j - 1] += c * j as f64;
            }
            next[j + 1] -= c * inv_s2;
            next[j] += c * iw;
        }
        Ok(TestFunction {
            centered: next,
            order: self.order + 1,
            ..*self
        })
    }

    /// `f^{(k)}`.
    pub fn nth_derivative(&self, k: usize) -> Result<Self> {
        let mut f = self.clone();
        for _ in 0..k {
            f = f.derivative()?;
        }
        Ok(f)
    }

    /// `x ↦ f(x + t)`.
    pub fn translate(&self, t: f64) -> Self {
        // e^{iωu} is unchanged since u is measured from the moving centre
        TestFunction {
            mu: self.mu - t,
            centered: self.centered.clone(),
            ..*self
        }
    }

    /// `x ↦ f(−x)`.
    pub fn reflect(&self) -> Self {
        let centered = self
            .centered
            .iter()
            .enumerate()
            .map(|(j, &c)| if j % 2 == 1 { -c } else { c })
            .collect();
        TestFunction {
            mu: -self.mu,
            centered,
            freq: -self.freq,
            ..*self
        }
    }

    /// `f̂(ξ) = ∫ f(x) e^{−ixξ} dx`, again a member of the family.
    pub fn fourier(&self) -> Self {
        // ∫ u^j e^{−u²/2σ²} e^{−iuη} du = σ√(2π)·i^j·P_j(η)·e^{−σ²η²/2},
        // P_0 = 1, P_{j+1} = P_j' − σ²η P_j
        let s2 = self.sigma * self.sigma;
        let n = self.centered.len();
        let mut p = vec![1.0];
        let mut r = vec![Complex64::new(0.0, 0.0); n];
        let mut ipow = Complex64::new(1.0, 0.0);
        for &c in &self.centered {
            for (i, &pi) in p.iter().enumerate() {
                r[i] += c * ipow * pi;
            }
            let mut next = vec![0.0; p.len() + 1];
            for (i, &pi) in p.iter().enumerate() {
                if i > 0 {
                    next[i - 1] += pi * i as f64;
                }
                next[i + 1] -= s2 * pi;
            }
            p = next;
            ipow *= Complex64::i();
        }
        // f̂(ξ) = e^{−iμξ} σ√(2π) R(η) e^{−σ²η²/2}, η = ξ − ω;  e^{−iμξ} = e^{−iμω} e^{−iμη}
        let scale =
            Complex64::new(0.0, -self.mu * self.freq).exp() * (self.sigma * (2.0 * PI).sqrt());
        TestFunction {
            mu: self.freq,
            sigma: 1.0 / self.sigma,
            centered: r.into_iter().map(|c| c * scale).collect(),
            freq: -self.mu,
            order: self.order,
        }
    }

    /// `∫ f`, i.e. `f̂(0)`.
    pub fn integral(&self) -> Complex64 {
        self.fourier().eval(0.0)
    }

    /// Half-width in units of σ beyond which `|f|` is below 1e-17 of its scale.
    pub fn support_radius(&self) -> f64 {
        self.sigma * (10.0 + 1.5 * (self.degree() as f64).sqrt())
    }

    /// `[μ − R, μ + R]` outside which `f` is negligible.
    pub fn support(&self) -> (f64, f64) {
        let r = self.support_radius();
        (self.mu - r, self.mu + r)
    }
}

/// Even smooth cutoff: 1 on `[−a, a]`, 0 outside `(−b, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cutoff {
    pub a: f64,
    pub b: f64,
}

impl Default for Cutoff {
    fn default() -> Self {
        Cutoff { a: 0.5, b: 1.0 }
    }
}

impl Cutoff {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && b > a && b.is_finite()) {
            return Err(Error::invalid(format!(
                "cutoff needs 0 < a < b, got a={a} b={b}"
            )));
        }
        Ok(Cutoff { a, b })
    }

    pub fn eval(&self, t: f64) -> f64 {
        let r = t.abs();
        if r <= self.a {
            return 1.0;
        }
        if r >= self.b {
            return 0.0;
        }
        let u = (self.b - r) / (self.b - self.a);
        let g = |v: f64| if v > 0.0 { (-1.0 / v).exp() } else { 0.0 };
        g(u) / (g(u) + g(1.0 - u))
    }
}
