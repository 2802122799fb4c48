//! `tpolylog`: pointwise evaluation, grid scans, verification suites and
//! golden-vector comparison for the polylogarithm on the real line.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 domain error, 3 usage error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::slice;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::ser::{Formatter, Serializer};
use serde_json::{json, Value};
use tempered_polylog::golden::{self, GoldenRecord};
use tempered_polylog::polylog::li_eval;
use tempered_polylog::verify::{self, Suite};
use tempered_polylog::{Error, EvalPoint, Order, Side};

/// Environment variable holding the worker-thread count.
const THREADS_ENV: &str = "TPOLYLOG_THREADS";

#[derive(Parser)]
#[command(
    name = "tpolylog",
    version,
    about = "Polylogarithm of complex order on the real line"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate li_s(x), or Li_s(t) with --positive-axis, as one JSON line.
    Eval(EvalArgs),
    /// Evaluate over an s-grid × x-grid and write CSV.
    Scan(ScanArgs),
    /// Run a verification suite and print one JSON report line per module.
    Verify {
        /// kernels, polylog, singular, modified, pairing or all
        suite: String,
    },
    /// Compare against, or regenerate, a golden-vector file.
    Golden {
        #[command(subcommand)]
        action: GoldenAction,
    },
}

#[derive(Args)]
struct EvalArgs {
    /// Real part of the order.
    #[arg(long, allow_hyphen_values = true)]
    s: f64,
    /// Imaginary part of the order.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    s_im: f64,
    /// Point on the real line.
    #[arg(
        long,
        allow_hyphen_values = true,
        required_unless_present = "t",
        conflicts_with = "t"
    )]
    x: Option<f64>,
    /// Point on the positive axis, t = e^x; requires --positive-axis.
    #[arg(long, requires = "positive_axis", allow_hyphen_values = true)]
    t: Option<f64>,
    #[arg(long)]
    positive_axis: bool,
    /// above, below or principal; matters only for x > 0.
    #[arg(long, default_value = "principal")]
    side: String,
}

#[derive(Args)]
struct ScanArgs {
    /// Comma-separated real parts of the order.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required = true
    )]
    s: Vec<f64>,
    /// Imaginary part shared by every order.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    s_im: f64,
    /// Comma-separated points; an empty list is a usage error.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 0..=1)]
    x: Vec<f64>,
    #[arg(long, default_value = "principal")]
    side: String,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GoldenAction {
    /// Recompute every record; exit 1 with a per-record diff on any mismatch.
    Compare { path: PathBuf },
    /// Write the records of --from (default: PATH) with current values to PATH.
    Emit {
        path: PathBuf,
        #[arg(long)]
        from: Option<PathBuf>,
    },
}

/// Failure carrying its exit code.
struct Exit {
    code: u8,
    msg: String,
}

impl Exit {
    fn usage(msg: impl Into<String>) -> Self {
        Exit {
            code: 3,
            msg: msg.into(),
        }
    }

    fn verification(msg: impl Into<String>) -> Self {
        Exit {
            code: 1,
            msg: msg.into(),
        }
    }
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        Exit {
            code: if e.is_domain() { 2 } else { 3 },
            msg: e.to_string(),
        }
    }
}

impl From<io::Error> for Exit {
    fn from(e: io::Error) -> Self {
        Exit::usage(e.to_string())
    }
}

/// Floats as 17 significant digits, the lossless width for `f64`.
struct Digits17;

impl Formatter for Digits17 {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, v: f64) -> io::Result<()> {
        write!(w, "{}", fmt17(v))
    }
}

fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

fn to_line<T: Serialize>(v: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = Serializer::with_formatter(&mut buf, Digits17);
    v.serialize(&mut ser).expect("serialising to memory");
    String::from_utf8(buf).expect("JSON is UTF-8")
}

fn to_pretty<T: Serialize>(v: &T) -> String {
    let value: Value = serde_json::from_str(&to_line(v)).expect("round trip");
    serde_json::to_string_pretty(&value).expect("serialising to memory")
}

fn order(re: f64, im: f64) -> Result<Order, Exit> {
    Order::new(re, im).map_err(|e| Exit::usage(e.to_string()))
}

fn side(s: &str) -> Result<Side, Exit> {
    s.parse().map_err(|e: Error| Exit::usage(e.to_string()))
}

fn cmd_eval(a: EvalArgs) -> Result<u8, Exit> {
    let s = order(a.s, a.s_im)?;
    let side = side(&a.side)?;
    let x = match (a.x, a.t) {
        (Some(x), None) => x,
        (None, Some(t)) if t > 0.0 => t.ln(),
        (None, Some(t)) => {
            return Err(Error::domain(format!("Li_s(t) needs t > 0, got {t}")).into())
        }
        _ => return Err(Exit::usage("give exactly one of --x and --t")),
    };
    let r = li_eval(s, EvalPoint::new(x, side))?;
    let mut line = json!({
        "s_re": a.s,
        "s_im": a.s_im,
        "x": x,
        "side": side.as_str(),
        "value_re": r.value.re,
        "value_im": r.value.im,
        "regime": r.regime.as_str(),
        "err": r.est_error,
    });
    if let Some(t) = a.t {
        line["t"] = json!(t);
    }
    println!("{}", to_line(&line));
    Ok(0)
}

fn cmd_scan(a: ScanArgs) -> Result<u8, Exit> {
    if a.s.is_empty() || a.x.is_empty() {
        return Err(Exit::usage("scan needs non-empty --s and --x grids"));
    }
    let side = side(&a.side)?;
    let orders =
        a.s.iter()
            .map(|&re| order(re, a.s_im))
            .collect::<Result<Vec<_>, _>>()?;
    let points: Vec<(Order, f64)> = orders
        .iter()
        .flat_map(|&s| a.x.iter().map(move |&x| (s, x)))
        .collect();
    // rows are computed in parallel and collected in grid-major order
    let rows: Vec<[String; 8]> = points
        .par_iter()
        .map(|&(s, x)| {
            let (v, regime, err) = match li_eval(s, EvalPoint::new(x, side)) {
                Ok(r) => (r.value, r.regime.as_str(), r.est_error),
                Err(_) => (
                    tempered_polylog::Complex64::new(f64::NAN, f64::NAN),
                    "error",
                    f64::NAN,
                ),
            };
            [
                fmt17(s.re),
                fmt17(s.im),
                fmt17(x),
                side.as_str().to_string(),
                fmt17(v.re),
                fmt17(v.im),
                regime.to_string(),
                fmt17(err),
            ]
        })
        .collect();
    let sink: Box<dyn Write> = match &a.out {
        Some(p) => Box::new(fs::File::create(p)?),
        None => Box::new(io::stdout().lock()),
    };
    let mut w = csv::Writer::from_writer(sink);
    let csv_err = |e: csv::Error| Exit::usage(e.to_string());
    w.write_record([
        "s_re", "s_im", "x", "side", "value_re", "value_im", "regime", "err",
    ])
    .map_err(csv_err)?;
    for row in &rows {
        w.write_record(row).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(0)
}

fn cmd_verify(name: &str) -> Result<u8, Exit> {
    let suite: Suite = name
        .parse()
        .map_err(|e: Error| Exit::usage(e.to_string()))?;
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::MODULES.to_vec(),
        one => vec![one],
    };
    let reports: Vec<_> = suites.par_iter().flat_map(|&s| verify::run(s)).collect();
    let mut ok = true;
    for r in &reports {
        ok &= r.passed;
        println!("{}", to_line(r));
    }
    if ok {
        Ok(0)
    } else {
        let failed: Vec<String> = reports
            .iter()
            .flat_map(|r| r.failures().map(move |c| format!("{}/{}", r.suite, c.name)))
            .collect();
        Err(Exit::verification(format!(
            "failed checks: {}",
            failed.join(", ")
        )))
    }
}

fn load(path: &Path) -> Result<Vec<GoldenRecord>, Exit> {
    if !path.is_file() {
        return Err(Exit::usage(format!("{}: no such file", path.display())));
    }
    golden::load(path).map_err(|e| Exit::usage(e.to_string()))
}

fn cmd_golden(action: GoldenAction) -> Result<u8, Exit> {
    match action {
        GoldenAction::Compare { path } => {
            let records = load(&path)?;
            let results: Vec<_> = records
                .par_iter()
                .enumerate()
                .map(|(i, r)| golden::Comparison {
                    index: i,
                    ..golden::compare(slice::from_ref(r)).remove(0)
                })
                .collect();
            let mut failed = 0;
            for c in &results {
                if !c.passed {
                    failed += 1;
                    println!("{}", to_line(c));
                }
            }
            println!(
                "{}",
                to_line(&json!({ "records": records.len(), "failed": failed }))
            );
            if failed == 0 {
                Ok(0)
            } else {
                Err(Exit::verification(format!(
                    "{failed} of {} records differ",
                    records.len()
                )))
            }
        }
        GoldenAction::Emit { path, from } => {
            let records = load(from.as_ref().unwrap_or(&path))?;
            let emitted = records
                .par_iter()
                .map(|r| golden::emit(slice::from_ref(r)).map(|mut v| v.remove(0)))
                .collect::<Result<Vec<_>, _>>()?;
            fs::write(&path, to_pretty(&emitted) + "\n")?;
            println!(
                "{}",
                to_line(&json!({ "records": emitted.len(), "path": path.display().to_string() }))
            );
            Ok(0)
        }
    }
}

fn configure_threads() -> Result<(), Exit> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = v.parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        Exit::usage(format!(
            "{THREADS_ENV} must be a positive integer, got '{v}'"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Exit::usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    let run = || -> Result<u8, Exit> {
        configure_threads()?;
        match cli.command {
            Command::Eval(a) => cmd_eval(a),
            Command::Scan(a) => cmd_scan(a),
            Command::Verify { suite } => cmd_verify(&suite),
            Command::Golden { action } => cmd_golden(action),
        }
    };
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("tpolylog: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}
