//! Command-line front end: `eval`, `tables`, `elastica`, `check`.
//!
//! Exit codes: 0 success, 2 bad flags or arguments, 3 domain error from the
//! library, 4 tolerance failure.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::value::RawValue;

use crate::elastica::{sample_curve, CurveKind, ElasticaParams};
use crate::error::Error;
use crate::extended::{epsilon_any, zeta_any_on_branch, Branch, ComplexValue, Modulus, Regime};
use crate::quadrature::{epsilon_by_quadrature, zeta_by_quadrature};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_TOLERANCE: i32 = 4;

/// Largest accepted |Present − Quadrature| in `tables`; half a unit in the
/// sixth decimal.
pub const TABLE_THRESHOLD: f64 = 5e-7;

const TABLE_QUAD_TOL: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(name = "jez", version, about = "Jacobi epsilon and zeta functions for any real or pure imaginary modulus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate epsilon or zeta at one or more points
    Eval(EvalArgs),
    /// Print the reference tables (x = 0.5, k = 0.5, 1, 2) against quadrature
    Tables,
    /// Sample an elastica curve as CSV
    Elastica(ElasticaArgs),
    /// Randomized comparison of the closed forms against quadrature
    Check(CheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FunctionName {
    Epsilon,
    Zeta,
}

impl FunctionName {
    fn as_str(self) -> &'static str {
        match self {
            FunctionName::Epsilon => "epsilon",
            FunctionName::Zeta => "zeta",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModulusKind {
    Real,
    Imaginary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BranchArg {
    Lower,
    Upper,
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Self {
        match b {
            BranchArg::Lower => Branch::Lower,
            BranchArg::Upper => Branch::Upper,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Flexural,
    Inflexural,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long = "fn", value_enum)]
    function: FunctionName,
    /// Argument(s) x
    #[arg(long, required = true, num_args = 1.., allow_negative_numbers = true)]
    x: Vec<f64>,
    /// Modulus magnitude (coefficient of i when --modulus imaginary)
    #[arg(long, allow_negative_numbers = true)]
    k: f64,
    #[arg(long, value_enum, default_value = "real")]
    modulus: ModulusKind,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Sheet for zeta with real k > 1
    #[arg(long, value_enum, default_value = "lower")]
    branch: BranchArg,
    /// Also report the quadrature value and its difference
    #[arg(long)]
    oracle: bool,
    /// Always print the imaginary part in text mode
    #[arg(long)]
    complex: bool,
}

#[derive(Debug, Args)]
struct ElasticaArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long, allow_negative_numbers = true)]
    k: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    omega: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    u_min: f64,
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    u_max: f64,
    #[arg(long, default_value_t = 201)]
    samples: usize,
    /// Output file; standard output when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// One evaluated value, optionally with its quadrature counterpart.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub function: &'static str,
    pub x: f64,
    pub modulus: Modulus,
    pub value: ComplexValue,
    pub oracle_value: Option<ComplexValue>,
    pub abs_diff: Option<f64>,
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    #[serde(rename = "fn")]
    function: &'a str,
    x: Box<RawValue>,
    k: Box<RawValue>,
    regime: &'a str,
    re: Box<RawValue>,
    im: Box<RawValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_re: Option<Box<RawValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_im: Option<Box<RawValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    abs_diff: Option<Box<RawValue>>,
}

fn raw(v: f64) -> Box<RawValue> {
    RawValue::from_string(sig17(v)).expect("formatted float is valid JSON")
}

/// 17 significant digits in scientific notation; round-trips any f64.
pub fn sig17(v: f64) -> String {
    format!("{:.16e}", v + 0.0)
}

/// Fixed six decimals; never prints a negative zero.
pub fn fixed6(v: f64) -> String {
    let s = format!("{v:.6}");
    if s.bytes().all(|b| matches!(b, b'-' | b'0' | b'.')) {
        return s.trim_start_matches('-').to_string();
    }
    s
}

/// `a + bi` / `a - bi` with six decimals.
pub fn fixed6_complex(z: ComplexValue) -> String {
    let im = fixed6(z.im);
    match im.strip_prefix('-') {
        Some(mag) => format!("{} - {}i", fixed6(z.re), mag),
        None => format!("{} + {}i", fixed6(z.re), im),
    }
}

/// Run the CLI with `args` (including the program name). Returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let is_info = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let sink: &mut dyn Write = if is_info { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if is_info { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(&a, out),
        Command::Tables => cmd_tables(out),
        Command::Elastica(a) => cmd_elastica(&a, out),
        Command::Check(a) => cmd_check(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

fn build_modulus(k: f64, kind: ModulusKind) -> Result<Modulus, Error> {
    match kind {
        ModulusKind::Real => Modulus::real(k),
        ModulusKind::Imaginary => Modulus::imaginary(k),
    }
}

fn evaluate(
    function: FunctionName,
    x: f64,
    m: Modulus,
    branch: Branch,
    oracle: bool,
) -> Result<OutputRecord, Error> {
    let value = match function {
        FunctionName::Epsilon => epsilon_any(x, m)?.into(),
        FunctionName::Zeta => zeta_any_on_branch(x, m, branch)?,
    };
    let oracle_value = if oracle {
        Some(match function {
            FunctionName::Epsilon => epsilon_by_quadrature(x, m, TABLE_QUAD_TOL)?.into(),
            FunctionName::Zeta => zeta_by_quadrature(x, m, branch, TABLE_QUAD_TOL)?,
        })
    } else {
        None
    };
    Ok(OutputRecord {
        function: function.as_str(),
        x,
        modulus: m,
        value,
        abs_diff: oracle_value.map(|o| (o - value).norm()),
        oracle_value,
    })
}

fn cmd_eval(a: &EvalArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let m = build_modulus(a.k, a.modulus)?;
    let records = a
        .x
        .iter()
        .map(|&x| evaluate(a.function, x, m, a.branch.into(), a.oracle))
        .collect::<Result<Vec<_>, _>>()?;
    let show_im = a.complex || (a.function == FunctionName::Zeta && m.regime() == Regime::LargeReal);

    match a.format {
        Format::Text => {
            for r in &records {
                let mut line = if show_im {
                    fixed6_complex(r.value)
                } else {
                    fixed6(r.value.re)
                };
                if let (Some(o), Some(d)) = (r.oracle_value, r.abs_diff) {
                    let o = if show_im { fixed6_complex(o) } else { fixed6(o.re) };
                    line.push_str(&format!("  quadrature {o}  abs_diff {d:.1e}"));
                }
                writeln!(out, "{line}")?;
            }
        }
        Format::Json => {
            for r in &records {
                let rec = JsonRecord {
                    function: r.function,
                    x: raw(r.x),
                    k: raw(r.modulus.magnitude()),
                    regime: r.modulus.regime().name(),
                    re: raw(r.value.re),
                    im: raw(r.value.im),
                    oracle_re: r.oracle_value.map(|o| raw(o.re)),
                    oracle_im: r.oracle_value.map(|o| raw(o.im)),
                    abs_diff: r.abs_diff.map(raw),
                };
                serde_json::to_writer(&mut *out, &rec).map_err(io::Error::from)?;
                writeln!(out)?;
            }
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(&mut *out);
            let mut header = vec!["fn", "x", "k", "regime", "re", "im"];
            if a.oracle {
                header.extend(["oracle_re", "oracle_im", "abs_diff"]);
            }
            w.write_record(&header)?;
            for r in &records {
                let mut row = vec![
                    r.function.to_string(),
                    sig17(r.x),
                    sig17(r.modulus.magnitude()),
                    r.modulus.regime().name().to_string(),
                    sig17(r.value.re),
                    sig17(r.value.im),
                ];
                if let (Some(o), Some(d)) = (r.oracle_value, r.abs_diff) {
                    row.extend([sig17(o.re), sig17(o.im), sig17(d)]);
                }
                w.write_record(&row)?;
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

/// One cell of the reproduction tables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub k: f64,
    pub present: ComplexValue,
    pub quadrature: ComplexValue,
}

impl TableRow {
    pub fn abs_diff(&self) -> f64 {
        (self.present - self.quadrature).norm()
    }
}

/// A reproduction table: title, whether values are complex, and rows.
#[derive(Debug, Clone)]
pub struct Table {
    pub title: &'static str,
    pub rows: Vec<TableRow>,
}

pub const TABLE_X: f64 = 0.5;
pub const TABLE_KS: [f64; 3] = [0.5, 1.0, 2.0];

/// Compute the four tables: ε and Z at `x = 0.5` for real `k` and for `ik`,
/// `k ∈ {0.5, 1, 2}`, with a quadrature column for each.
pub fn compute_tables() -> Result<Vec<Table>, Error> {
    let specs: [(&'static str, FunctionName, ModulusKind); 4] = [
        ("Table 1. epsilon(x, k)", FunctionName::Epsilon, ModulusKind::Real),
        ("Table 2. epsilon(x, ik)", FunctionName::Epsilon, ModulusKind::Imaginary),
        ("Table 3. Z(x, k)", FunctionName::Zeta, ModulusKind::Real),
        ("Table 4. Z(x, ik)", FunctionName::Zeta, ModulusKind::Imaginary),
    ];
    specs
        .iter()
        .map(|&(title, function, kind)| {
            let rows = TABLE_KS
                .iter()
                .map(|&k| {
                    let m = build_modulus(k, kind)?;
                    let r = evaluate(function, TABLE_X, m, Branch::Lower, true)?;
                    Ok(TableRow {
                        k,
                        present: r.value,
                        quadrature: r.oracle_value.expect("oracle requested"),
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(Table { title, rows })
        })
        .collect()
}

fn cmd_tables(out: &mut dyn Write) -> Result<i32, CliError> {
    let tables = compute_tables()?;
    let mut worst = 0.0f64;
    for (i, t) in tables.iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        writeln!(out, "{}, x = {}", t.title, TABLE_X)?;
        writeln!(out, "{:<5} {:<24} {:<24} AbsDiff", "k", "Present", "Quadrature")?;
        for r in &t.rows {
            let fmt = |z: ComplexValue| {
                if z.im != 0.0 {
                    fixed6_complex(z)
                } else {
                    fixed6(z.re)
                }
            };
            let d = r.abs_diff();
            worst = worst.max(d);
            writeln!(out, "{:<5} {:<24} {:<24} {:.1e}", r.k, fmt(r.present), fmt(r.quadrature), d)?;
        }
    }
    writeln!(out)?;
    if worst <= TABLE_THRESHOLD {
        writeln!(out, "max abs diff {worst:.1e} <= {TABLE_THRESHOLD:.0e}: ok")?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "max abs diff {worst:.1e} > {TABLE_THRESHOLD:.0e}: FAIL")?;
        Ok(EXIT_TOLERANCE)
    }
}

fn cmd_elastica(a: &ElasticaArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if !(a.u_min < a.u_max) {
        return Err(CliError::Usage(format!(
            "--u-min ({}) must be less than --u-max ({})",
            a.u_min, a.u_max
        )));
    }
    if a.samples < 2 {
        return Err(CliError::Usage(format!("--samples must be at least 2, got {}", a.samples)));
    }
    let kind = match a.kind {
        KindArg::Flexural => CurveKind::Flexural,
        KindArg::Inflexural => CurveKind::Inflexural,
    };
    let params = ElasticaParams::new(a.k, a.omega)?;
    let samples = sample_curve(kind, &params, a.u_min, a.u_max, a.samples)?;

    let sink: Box<dyn Write + '_> = match &a.out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(&mut *out),
    };
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink);
    w.write_record(["u", "x", "y"])?;
    for s in &samples {
        // + 0.0 turns a negative zero into a positive one
        w.write_record([
            (s.u + 0.0).to_string(),
            (s.point.x + 0.0).to_string(),
            (s.point.y + 0.0).to_string(),
        ])?;
    }
    w.flush()?;
    Ok(EXIT_OK)
}

/// Largest |closed form − quadrature| for ε over random points in one regime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeReport {
    pub regime: Regime,
    pub max_abs_diff: f64,
    pub worst_x: f64,
    pub worst_k: f64,
}

/// Randomized comparison of `epsilon_any` against `epsilon_by_quadrature`
/// in every regime. Deterministic for a given seed.
pub fn oracle_check(trials: usize, quad_tol: f64, seed: u64) -> Result<Vec<RegimeReport>, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let regimes = [
        (Regime::Standard, 0.0, 1.0),
        (Regime::LargeReal, 1.05, 6.0),
        (Regime::PureImaginary, 0.05, 5.0),
    ];
    regimes
        .iter()
        .map(|&(regime, k_lo, k_hi)| {
            let mut report = RegimeReport { regime, max_abs_diff: 0.0, worst_x: 0.0, worst_k: 0.0 };
            for _ in 0..trials {
                let x: f64 = rng.gen_range(-4.0..4.0);
                let k: f64 = rng.gen_range(k_lo..k_hi);
                let m = match regime {
                    Regime::PureImaginary => Modulus::imaginary(k)?,
                    _ => Modulus::real(k)?,
                };
                let d = (epsilon_any(x, m)? - epsilon_by_quadrature(x, m, quad_tol)?).abs();
                if d > report.max_abs_diff {
                    report = RegimeReport { regime, max_abs_diff: d, worst_x: x, worst_k: k };
                }
            }
            Ok(report)
        })
        .collect()
}

fn cmd_check(a: &CheckArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if a.trials == 0 {
        return Err(CliError::Usage("--trials must be positive".into()));
    }
    if !(a.tol > 0.0 && a.tol.is_finite()) {
        return Err(CliError::Usage(format!("--tol must be positive, got {}", a.tol)));
    }
    let quad_tol = (a.tol * 1e-2).clamp(1e-13, 1e-6);
    let reports = oracle_check(a.trials, quad_tol, a.seed)?;
    writeln!(
        out,
        "jez check {} seed={} trials={} tol={:e}",
        env!("CARGO_PKG_VERSION"),
        a.seed,
        a.trials,
        a.tol
    )?;
    let mut pass = true;
    for r in &reports {
        let ok = r.max_abs_diff <= a.tol;
        pass &= ok;
        writeln!(
            out,
            "{:<15} max_abs_diff={:.3e} at x={:.6} k={:.6} {}",
            r.regime.name(),
            r.max_abs_diff,
            r.worst_x,
            r.worst_k,
            if ok { "ok" } else { "FAIL" }
        )?;
    }
    writeln!(out, "result: {}", if pass { "pass" } else { "fail" })?;
    Ok(if pass { EXIT_OK } else { EXIT_TOLERANCE })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_decimal_formatting() {
        assert_eq!(fixed6(0.3679749966920589), "0.367975");
        assert_eq!(fixed6(-1e-9), "0.000000");
        assert_eq!(fixed6(-0.6162027), "-0.616203");
        assert_eq!(
            fixed6_complex(ComplexValue::new(0.6633609331, -0.4193087282)),
            "0.663361 - 0.419309i"
        );
        assert_eq!(fixed6_complex(ComplexValue::new(1.0, 0.25)), "1.000000 + 0.250000i");
        // exact binary ties round half to even
        assert_eq!(fixed6(0.0078125), "0.007812");
        assert_eq!(fixed6(0.0234375), "0.023438");
    }

    #[test]
    fn sig17_round_trips() {
        for v in [0.1, 1.0 / 3.0, -2.5e-300, 6.02e23, 0.0, -0.0] {
            let s = sig17(v);
            assert_eq!(s.parse::<f64>().unwrap(), v);
            assert!(!s.starts_with("-0.0"));
        }
    }
}
