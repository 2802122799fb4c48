use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Complex order `s` of the polylogarithm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Order {
    pub re: f64,
    pub im: f64,
}

impl Order {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !re.is_finite() || !im.is_finite() {
            return Err(Error::invalid(format!("non-finite order ({re}, {im})")));
        }
        Ok(Order { re, im })
    }

    /// Real order. Panics on non-finite input; use [`Order::new`] for untrusted values.
    pub fn real(re: f64) -> Self {
        Order::new(re, 0.0).expect("finite real order")
    }

    pub fn complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn is_real(self) -> bool {
        self.im == 0.0
    }

    /// Nearest integer and the complex offset from it.
    pub fn nearest_integer(self) -> (i64, Complex64) {
        let n = self.re.round();
        (n as i64, Complex64::new(self.re - n, self.im))
    }

    /// Distance to the closest integer.
    pub fn dist_to_integer(self) -> f64 {
        self.nearest_integer().1.norm()
    }

    /// Integer value when `s` is within `tol` of one.
    pub fn as_integer(self, tol: f64) -> Option<i64> {
        let (n, eps) = self.nearest_integer();
        (eps.norm() <= tol).then_some(n)
    }

    pub fn shift(self, by: f64) -> Self {
        Order {
            re: self.re + by,
            im: self.im,
        }
    }
}

impl From<Complex64> for Order {
    fn from(z: Complex64) -> Self {
        Order { re: z.re, im: z.im }
    }
}

impl From<f64> for Order {
    fn from(re: f64) -> Self {
        Order::real(re)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == 0.0 {
            write!(f, "{}", self.re)
        } else if self.im < 0.0 {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}
