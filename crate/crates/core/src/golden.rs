//! Golden-vector records and the operation registry that recomputes them.
//!
//! A golden file is a JSON array of [`GoldenRecord`]s. Each record names an
//! operation, its order `s`, its real argument `x`, a side label and any
//! further numeric arguments in `extra`; the registry maps it back to a call.
//!
//! Test functions are encoded in `extra` as `mu`, `sigma` and polynomial
//! coefficients `c0, c1, …` in powers of `x`; a cutoff as `chi_a`, `chi_b`.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels;
use crate::modified::{bloch_wigner, classical_modified, lambda_i, ModifiedSpec, Projection};
use crate::order::Order;
use crate::pairing::{
    pair_direct, pair_eta, pair_gamma_plus, pair_li, pair_li0, profile, Cutoff, EtaSide,
    TestFunction,
};
use crate::polylog::{li_direct_series, li_eval, polylog_at, EvalPoint, Side};
use crate::singular::{remainder_taylor, singular_part, singular_part_integer, smooth_remainder};

/// Label for records whose operation has no side argument.
pub const NO_SIDE: &str = "none";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoldenRecord {
    pub op: String,
    pub s_re: f64,
    pub s_im: f64,
    pub x: f64,
    pub side: String,
    #[serde(default)]
    pub extra: BTreeMap<String, f64>,
    pub value_re: f64,
    pub value_im: f64,
    pub abs_tol: f64,
}

impl GoldenRecord {
    pub fn order(&self) -> Result<Order> {
        Order::new(self.s_re, self.s_im)
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.value_re, self.value_im)
    }

    fn extra(&self, key: &str) -> Result<f64> {
        self.extra
            .get(key)
            .copied()
            .ok_or_else(|| Error::invalid(format!("record '{}' lacks extra.{key}", self.op)))
    }

    fn count(&self, key: &str) -> Result<usize> {
        let v = self.extra(key)?;
        if v < 0.0 || v.fract() != 0.0 || v > u32::MAX as f64 {
            return Err(Error::invalid(format!("extra.{key} = {v} is not a count")));
        }
        Ok(v as usize)
    }

    fn point(&self) -> Result<EvalPoint> {
        Ok(EvalPoint::new(self.x, self.side.parse::<Side>()?))
    }

    fn test_function(&self) -> Result<TestFunction> {
        let mut coeffs = Vec::new();
        while let Some(&c) = self.extra.get(&format!("c{}", coeffs.len())) {
            coeffs.push(c);
        }
        TestFunction::new(self.extra("mu")?, self.extra("sigma")?, &coeffs)
    }

    fn cutoff(&self) -> Result<Cutoff> {
        match (self.extra.get("chi_a"), self.extra.get("chi_b")) {
            (Some(&a), Some(&b)) => Cutoff::new(a, b),
            (None, None) => Ok(Cutoff::default()),
            _ => Err(Error::invalid("cutoff needs both chi_a and chi_b")),
        }
    }

    /// Structural validity: finite numbers, positive tolerance, known op.
    pub fn validate(&self) -> Result<()> {
        let nums = [
            self.s_re,
            self.s_im,
            self.x,
            self.value_re,
            self.value_im,
            self.abs_tol,
        ];
        if nums
            .iter()
            .chain(self.extra.values())
            .any(|v| !v.is_finite())
        {
            return Err(Error::invalid(format!(
                "record '{}' has non-finite fields",
                self.op
            )));
        }
        if !(self.abs_tol > 0.0) {
            return Err(Error::invalid(format!(
                "record '{}' needs abs_tol > 0",
                self.op
            )));
        }
        if !OPS.contains(&self.op.as_str()) {
            return Err(Error::invalid(format!("unknown op '{}'", self.op)));
        }
        Ok(())
    }
}

/// Every operation name a record may carry.
pub const OPS: [&str; 22] = [
    "gamma",
    "digamma",
    "riemann_zeta",
    "bernoulli_poly_shifted",
    "harmonic",
    "li_direct_series",
    "li_eval",
    "polylog_at",
    "singular_part",
    "singular_part_integer",
    "smooth_remainder",
    "remainder_taylor",
    "lambda_i",
    "classical_modified",
    "bloch_wigner",
    "profile",
    "pair_gamma_plus",
    "pair_li0",
    "pair_li",
    "pair_direct",
    "pair_eta",
    "li_regime",
];

fn real(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

/// Recomputes the value a record describes.
pub fn evaluate(r: &GoldenRecord) -> Result<Complex64> {
    r.validate()?;
    let s = r.order()?;
    match r.op.as_str() {
        "gamma" => kernels::gamma(s),
        "digamma" => kernels::digamma(s),
        "riemann_zeta" => kernels::riemann_zeta(s),
        "bernoulli_poly_shifted" => kernels::bernoulli_poly_shifted(r.count("n")?, r.x).map(real),
        "harmonic" => Ok(real(kernels::harmonic(r.count("n")?))),
        "li_direct_series" => li_direct_series(s, r.x),
        "li_eval" => li_eval(s, r.point()?).map(|e| e.value),
        "polylog_at" => polylog_at(s, r.x, r.side.parse()?),
        "singular_part" => singular_part(s)?.eval(r.x),
        "singular_part_integer" => {
            let n = s
                .as_integer(0.0)
                .ok_or_else(|| Error::invalid("singular_part_integer needs integer s"))?;
            singular_part_integer(n).eval(r.x)
        }
        "smooth_remainder" => smooth_remainder(s, r.point()?),
        "remainder_taylor" => {
            let k = r.count("k")?;
            Ok(remainder_taylor(s, k + 1)?[k])
        }
        "lambda_i" => lambda_i(r.count("n")? as u32, r.point()?).map(real),
        "classical_modified" => {
            let n = r.count("n")? as u32;
            let spec = match r.side.as_str() {
                NO_SIDE => ModifiedSpec::new(n)?,
                p => ModifiedSpec::with_projection(n, p.parse::<Projection>()?)?,
            };
            classical_modified(spec, Complex64::new(r.x, r.extra("z_im")?))
        }
        "bloch_wigner" => bloch_wigner(Complex64::new(r.x, r.extra("z_im")?)).map(real),
        "profile" => profile(s, r.x, &r.test_function()?, r.count("k")?),
        "pair_gamma_plus" => pair_gamma_plus(s, &r.test_function()?).map(|p| p.value),
        "pair_li0" => pair_li0(&r.test_function()?, r.cutoff()?).map(|p| p.value),
        "pair_li" => pair_li(s, &r.test_function()?, r.cutoff()?).map(|p| p.value),
        "pair_direct" => pair_direct(s, &r.test_function()?).map(|p| p.value),
        "pair_eta" => pair_eta(s, r.side.parse::<EtaSide>()?, &r.test_function()?).map(|p| p.value),
        // regime index in declaration order, as a real number
        "li_regime" => li_eval(s, r.point()?).map(|e| real(e.regime as u8 as f64)),
        other => Err(Error::invalid(format!("unknown op '{other}'"))),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub index: usize,
    pub op: String,
    pub expected_re: f64,
    pub expected_im: f64,
    pub got_re: f64,
    pub got_im: f64,
    pub diff: f64,
    pub abs_tol: f64,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Recomputes every record and compares within its `abs_tol`.
pub fn compare(records: &[GoldenRecord]) -> Vec<Comparison> {
    records
        .iter()
        .enumerate()
        .map(|(index, r)| {
            let want = r.value();
            let (got, error) = match evaluate(r) {
                Ok(v) => (v, None),
                Err(e) => (Complex64::new(f64::NAN, f64::NAN), Some(e.to_string())),
            };
            let diff = (got - want).norm();
            Comparison {
                index,
                op: r.op.clone(),
                expected_re: want.re,
                expected_im: want.im,
                got_re: got.re,
                got_im: got.im,
                diff,
                abs_tol: r.abs_tol,
                passed: error.is_none() && diff <= r.abs_tol,
                error,
            }
        })
        .collect()
}

/// Records with their values replaced by the current build's output.
pub fn emit(records: &[GoldenRecord]) -> Result<Vec<GoldenRecord>> {
    records
        .iter()
        .map(|r| {
            let v = evaluate(r)?;
            Ok(GoldenRecord {
                value_re: v.re,
                value_im: v.im,
                ..r.clone()
            })
        })
        .collect()
}

pub fn parse(text: &str) -> Result<Vec<GoldenRecord>> {
    let records: Vec<GoldenRecord> =
        serde_json::from_str(text).map_err(|e| Error::invalid(format!("golden file: {e}")))?;
    for r in &records {
        r.validate()?;
    }
    Ok(records)
}

pub fn load(path: &Path) -> Result<Vec<GoldenRecord>> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::invalid(format!("{}: {e}", path.display())))?;
    parse(&text)
}

pub fn to_json(records: &[GoldenRecord]) -> Result<String> {
    serde_json::to_string_pretty(records).map_err(|e| Error::invalid(e.to_string()))
}
