//! One-sided derivative extrapolation at the origin.
//!
//! For each step `h` of a halving ladder the function is sampled at
//! `±j·h`, `j = 1..=points`; the interpolating polynomial in `j` yields
//! one-sided estimates of `f^{(k)}(0±)` with truncation error `O(h^{points−k})`.
//! Two Richardson levels across the ladder remove the next two error orders.

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default step ladder.
pub const DEFAULT_STEPS: [f64; 3] = [1e-2, 5e-3, 2.5e-3];
/// Wider ladder for higher derivatives.
pub const WIDE_STEPS: [f64; 3] = [0.1, 0.05, 0.025];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ladder {
    /// Decreasing steps; consecutive ratios need not be equal.
    pub steps: Vec<f64>,
    /// Samples per side and step.
    pub points: usize,
}

impl Ladder {
    pub fn new(steps: Vec<f64>, points: usize) -> Result<Self> {
        if steps.is_empty() || steps.iter().any(|&h| !(h > 0.0) || !h.is_finite()) {
            return Err(Error::invalid("ladder steps must be positive and finite"));
        }
        if steps.windows(2).any(|w| w[1] >= w[0]) {
            return Err(Error::invalid("ladder steps must decrease"));
        }
        if points < 2 {
            return Err(Error::invalid("ladder needs at least two points per step"));
        }
        Ok(Ladder { steps, points })
    }

    /// Default steps with `max_order + 2` points.
    pub fn for_order(max_order: usize) -> Self {
        Ladder {
            steps: DEFAULT_STEPS.to_vec(),
            points: max_order + 2,
        }
    }

    /// Ten points on `{0.1, 0.05, 0.025}`: less noise amplification for
    /// third derivatives of functions analytic on a wide disc.
    pub fn wide() -> Self {
        Ladder {
            steps: WIDE_STEPS.to_vec(),
            points: 10,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OneSided {
    /// `+1` for the right side, `−1` for the left.
    pub sign: f64,
    /// `table[k][i]`: estimate of `f^{(k)}(0±)` at ladder step `i`.
    pub table: Vec<Vec<Complex64>>,
    /// Extrapolated `f^{(k)}(0±)`.
    pub limits: Vec<Complex64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwoSided {
    pub left: OneSided,
    pub right: OneSided,
}

impl TwoSided {
    /// `|right_k − left_k|` per derivative order.
    pub fn gaps(&self) -> Vec<f64> {
        self.left
            .limits
            .iter()
            .zip(&self.right.limits)
            .map(|(l, r)| (r - l).norm())
            .collect()
    }

    /// Mean of the two one-sided limits per derivative order.
    pub fn mean(&self) -> Vec<Complex64> {
        self.left
            .limits
            .iter()
            .zip(&self.right.limits)
            .map(|(l, r)| (l + r) * 0.5)
            .collect()
    }
}

/// `W` with `a = W·f` the monomial coefficients of the interpolant through `(j, f_j)`, `j = 1..=n`,
/// inverted exactly in rational arithmetic.
fn interpolation_weights(n: usize) -> Result<DMatrix<f64>> {
    let one = BigRational::one();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|j| {
            let node = BigRational::from_integer(BigInt::from(j + 1));
            let mut row: Vec<BigRational> = Vec::with_capacity(2 * n);
            let mut p = one.clone();
            for _ in 0..n {
                row.push(p.clone());
                p *= &node;
            }
            row.extend((0..n).map(|k| {
                if k == j {
                    one.clone()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::invalid("singular interpolation matrix"))?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        let pivot = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot) {
                    *v -= &factor * p;
                }
            }
        }
    }
    Ok(DMatrix::from_fn(n, n, |k, j| {
        a[k][n + j].to_f64().unwrap_or(f64::NAN)
    }))
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|j| j as f64).product()
}

/// Neville-style elimination of `h^p` then `h^{p+1}` across the ladder.
fn richardson(steps: &[f64], est: &[Complex64], p: usize) -> Complex64 {
    let mut row = est.to_vec();
    let mut h = steps.to_vec();
    for level in 0..2 {
        if row.len() < 2 {
            break;
        }
        let q = (p + level) as i32;
        let next: Vec<Complex64> = (0..row.len() - 1)
            .map(|i| {
                let r = (h[i] / h[i + 1]).powi(q);
                (row[i + 1] * r - row[i]) / (r - 1.0)
            })
            .collect();
        row = next;
        h.remove(0);
    }
    *row.last().expect("non-empty ladder")
}

/// One-sided extrapolated derivatives `f^{(k)}(0±)`, `k = 0..=max_order`.
pub fn one_sided<F>(f: F, sign: f64, ladder: &Ladder, max_order: usize) -> Result<OneSided>
where
    F: Fn(f64) -> Result<Complex64>,
{
    if max_order >= ladder.points {
        return Err(Error::invalid(format!(
            "derivative order {max_order} needs more than {} points",
            ladder.points
        )));
    }
    let w = interpolation_weights(ladder.points)?;
    let mut table = vec![Vec::with_capacity(ladder.steps.len()); max_order + 1];
    for &h in &ladder.steps {
        let samples: Vec<Complex64> = (1..=ladder.points)
            .map(|j| f(sign * j as f64 * h))
            .collect::<Result<_>>()?;
        let re = &w * DVector::from_iterator(samples.len(), samples.iter().map(|z| z.re));
        let im = &w * DVector::from_iterator(samples.len(), samples.iter().map(|z| z.im));
        for (k, row) in table.iter_mut().enumerate() {
            let scale = factorial(k) * (sign / h).powi(k as i32);
            row.push(Complex64::new(re[k], im[k]) * scale);
        }
    }
    let limits = table
        .iter()
        .enumerate()
        .map(|(k, row)| richardson(&ladder.steps, row, ladder.points - k))
        .collect();
    Ok(OneSided {
        sign,
        table,
        limits,
    })
}

/// Both one-sided extrapolations.
pub fn two_sided<F>(f: F, ladder: &Ladder, max_order: usize) -> Result<TwoSided>
where
    F: Fn(f64) -> Result<Complex64>,
{
    Ok(TwoSided {
        left: one_sided(&f, -1.0, ladder, max_order)?,
        right: one_sided(&f, 1.0, ladder, max_order)?,
    })
}
