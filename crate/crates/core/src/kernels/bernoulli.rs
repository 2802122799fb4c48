//! Exact Bernoulli numbers and the shifted Bernoulli polynomials.
//!
//! The table stores the standard convention (`B₁ = −1/2`). Call sites that
//! need the `B₁ = +1/2` convention (the expansion of `1/(e^{−x}−1)`) apply
//! `(−1)^n` themselves.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest index held in the table.
pub const BERNOULLI_MAX: usize = 64;

pub struct BernoulliTable {
    exact: Vec<BigRational>,
    float: Vec<f64>,
}

impl BernoulliTable {
    fn build(n_max: usize) -> Self {
        // Σ_{j=0}^{n} C(n+1, j) B_j = 0  for n ≥ 1.
        let mut exact: Vec<BigRational> = Vec::with_capacity(n_max + 1);
        exact.push(BigRational::one());
        for n in 1..=n_max {
            let mut acc = BigRational::zero();
            let mut binom = BigInt::one(); // C(n+1, 0)
            for (j, b) in exact.iter().enumerate() {
                acc += BigRational::from_integer(binom.clone()) * b;
                binom = binom * BigInt::from(n + 1 - j) / BigInt::from(j + 1);
            }
            // binom now equals C(n+1, n) = n + 1
            exact.push(-acc / BigRational::from_integer(binom));
        }
        let float = exact.iter().map(rational_to_f64).collect();
        BernoulliTable { exact, float }
    }

    pub fn exact(&self, n: usize) -> Result<&BigRational> {
        self.exact.get(n).ok_or(Error::OutOfRange {
            index: n,
            max: self.len() - 1,
        })
    }

    pub fn float(&self, n: usize) -> Result<f64> {
        self.float.get(n).copied().ok_or(Error::OutOfRange {
            index: n,
            max: self.len() - 1,
        })
    }

    pub fn floats(&self) -> &[f64] {
        &self.float
    }

    pub fn len(&self) -> usize {
        self.exact.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exact.is_empty()
    }
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    let (n, d) = (q.numer(), q.denom());
    match (n.to_f64(), d.to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() && b != 0.0 => {
            // one correction step recovers the ulp lost in the division
            let approx = a / b;
            let err = q - BigRational::from_float(approx).unwrap_or_else(BigRational::zero);
            approx + err.to_f64().unwrap_or(0.0)
        }
        _ => q.to_f64().unwrap_or(f64::NAN),
    }
}

pub fn table() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(|| BernoulliTable::build(BERNOULLI_MAX))
}

/// Exact standard-convention Bernoulli number `B_n`.
pub fn bernoulli_number(n: usize) -> Result<BigRational> {
    table().exact(n).cloned()
}

/// Floating-point `B_n` (standard convention).
pub fn bernoulli_f64(n: usize) -> Result<f64> {
    table().float(n)
}

/// Shifted Bernoulli polynomial `B^n(q)` with generating function
/// `t e^{(q+1)t}/(e^t − 1)`, i.e. the standard `B_n(q + 1)`.
pub fn bernoulli_poly_shifted(n: usize, q: f64) -> Result<f64> {
    let tab = table();
    if n >= tab.len() {
        return Err(Error::OutOfRange {
            index: n,
            max: tab.len() - 1,
        });
    }
    let x = q + 1.0;
    // B_n(x) = Σ_k C(n,k) B_k x^{n−k}; Horner with k = 0 as the leading coefficient.
    let mut acc = 0.0;
    let mut binom = 1.0;
    for k in 0..=n {
        acc = acc * x + binom * tab.float[k];
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    Ok(acc)
}

/// Exact `B^n(q)` for rational `q`.
pub fn bernoulli_poly_shifted_exact(n: usize, q: &BigRational) -> Result<BigRational> {
    let tab = table();
    if n >= tab.len() {
        return Err(Error::OutOfRange {
            index: n,
            max: tab.len() - 1,
        });
    }
    let x = q + BigRational::one();
    let mut acc = BigRational::zero();
    let mut binom = BigInt::one();
    for k in 0..=n {
        acc = acc * &x + BigRational::from_integer(binom.clone()) * &tab.exact[k];
        binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn known_values() {
        assert_eq!(bernoulli_number(0).unwrap(), q(1, 1));
        assert_eq!(bernoulli_number(1).unwrap(), q(-1, 2));
        assert_eq!(bernoulli_number(2).unwrap(), q(1, 6));
        assert_eq!(bernoulli_number(12).unwrap(), q(-691, 2730));
        assert_eq!(bernoulli_number(14).unwrap(), q(7, 6));
    }

    #[test]
    fn odd_entries_vanish() {
        for n in (3..=BERNOULLI_MAX).step_by(2) {
            assert!(bernoulli_number(n).unwrap().is_zero(), "B_{n}");
        }
    }

    #[test]
    fn recurrence_holds_exactly() {
        for n in 1..BERNOULLI_MAX {
            let mut acc = BigRational::zero();
            let mut binom = BigInt::one();
            for j in 0..=n {
                acc += BigRational::from_integer(binom.clone()) * bernoulli_number(j).unwrap();
                binom = binom * BigInt::from(n + 1 - j) / BigInt::from(j + 1);
            }
            assert!(acc.is_zero(), "recurrence fails at n = {n}");
        }
    }

    #[test]
    fn table_bounds() {
        assert!(bernoulli_number(BERNOULLI_MAX).is_ok());
        assert!(matches!(
            bernoulli_number(BERNOULLI_MAX + 1),
            Err(Error::OutOfRange { .. })
        ));
        assert!(bernoulli_poly_shifted(BERNOULLI_MAX + 1, 0.0).is_err());
    }

    #[test]
    fn float_table_is_correctly_rounded() {
        // B_60 ≈ −2.13999492572253336658107447651910973926e34
        let b60 = bernoulli_f64(60).unwrap();
        assert!((b60 / -2.1399949257225333665810744765191097e34 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn shifted_polynomial_examples() {
        assert!(bernoulli_poly_shifted(1, -0.5).unwrap().abs() < 1e-16);
        assert!((bernoulli_poly_shifted(2, -0.5).unwrap() + 1.0 / 12.0).abs() < 1e-16);
        assert!((bernoulli_poly_shifted(1, 0.0).unwrap() - 0.5).abs() < 1e-16);
        assert_eq!(bernoulli_poly_shifted_exact(1, &q(-1, 2)).unwrap(), q(0, 1));
    }

    #[test]
    fn odd_shifted_values_at_minus_half_vanish_exactly() {
        for n in (1..=BERNOULLI_MAX).step_by(2) {
            assert!(bernoulli_poly_shifted_exact(n, &q(-1, 2))
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn generating_function() {
        for &qv in &[-0.5, 0.0, 1.0] {
            for &t in &[0.1f64, 0.5] {
                let mut sum = 0.0;
                let mut pow = 1.0;
                for n in 0..=30 {
                    sum += bernoulli_poly_shifted(n, qv).unwrap() * pow;
                    pow *= t / (n + 1) as f64;
                }
                let expect = t * ((qv + 1.0) * t).exp() / t.exp_m1();
                assert!(
                    (sum - expect).abs() < 1e-12,
                    "q={qv} t={t}: {sum} vs {expect}"
                );
            }
        }
    }
}
