//! `invfac`: evaluate inverse factorial series, run the identity battery,
//! print exact number tables and apply sequence transforms.

mod render;

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use invfac::exact_core::{
    bernoulli, cauchy_first, cauchy_second, euler_poly_at_zero, stirling1_row, stirling2_row,
};
use invfac::representations::{
    asymptotic_series, binet_coefficient, binet_log_gamma, binomial_rhs_series, catalog,
    polylog_via_stirling, Representation, ASYMPTOTIC_KEYS, DEFAULT_ASYMPTOTIC_LEN, KEYS,
};
use invfac::scalar::rational_to_f64;
use invfac::series_engine::{eval_asymptotic, EvalOptions};
use invfac::transforms::{
    asymptotic_from_factorial, inverse_stirling_transform, parse_rational, stirling_transform,
    RationalSequence,
};
use invfac::{verify, Error, EvalOptions64, Rational};
use num_traits::ToPrimitive;

use render::{EvalOutput, Format, ReportOutput, TableOutput};

const EXTRA_KEYS: [&str; 3] = ["polylog", "log_gamma", "binomial_rhs"];
const MAX_ROWS: usize = 200;

#[derive(Parser)]
#[command(name = "invfac", version)]
#[command(
    about = "Inverse factorial series: evaluation, identity checks, exact tables, transforms"
)]
struct Cli {
    /// Absolute tolerance for series evaluation
    #[arg(long, global = true, env = "INVFAC_TOL", default_value_t = 1e-10)]
    tol: f64,

    /// Term budget for series evaluation
    #[arg(
        long,
        global = true,
        env = "INVFAC_MAX_TERMS",
        default_value_t = 200_000
    )]
    max_terms: usize,

    /// Output format
    #[arg(long, global = true, env = "INVFAC_FORMAT", value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a catalog entry, an asymptotic series, or polylog / log_gamma / binomial_rhs
    Eval {
        /// Entry key
        name: String,
        /// Parameters as key=value
        params: Vec<String>,
        #[arg(long)]
        z: Option<String>,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        k: Option<String>,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        w: Option<String>,
        #[arg(long)]
        m: Option<String>,
    },
    /// Run the identity battery; exit 1 if any check fails
    Verify {
        /// filter=NAME and tol_scale=S
        params: Vec<String>,
        /// Keep checks whose name contains this text
        #[arg(long)]
        filter: Option<String>,
        /// Multiply every tolerance by this factor
        #[arg(long, env = "INVFAC_TOL_SCALE")]
        tol_scale: Option<f64>,
    },
    /// Print an exact table, rows n = 0..rows-1
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        /// rows=N
        params: Vec<String>,
        #[arg(long)]
        rows: Option<usize>,
    },
    /// Transform a sequence file (one rational per line, or a JSON array of strings)
    Transform {
        /// Input path
        input: Option<PathBuf>,
        #[arg(long = "in")]
        in_path: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Direction::Forward)]
        direction: Direction,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableKind {
    Stirling1,
    Stirling2,
    Bernoulli,
    Cauchy1,
    Cauchy2,
    Euler0,
    Binet,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
    ToAsymptotic,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    UnknownKey(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::UnknownKey(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::UnknownKey(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownKey { .. } => Failure::UnknownKey(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn all_keys() -> Vec<&'static str> {
    KEYS.iter()
        .chain(&ASYMPTOTIC_KEYS)
        .chain(&EXTRA_KEYS)
        .copied()
        .collect()
}

fn split_params(raw: &[String]) -> Result<BTreeMap<String, String>, Failure> {
    raw.iter()
        .map(|s| {
            s.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| usage(format!("expected key=value, got `{s}`")))
        })
        .collect()
}

fn rational(name: &str, v: &str) -> Result<Rational, Failure> {
    parse_rational(v).map_err(|m| usage(format!("{name}: {m}")))
}

fn real(params: &BTreeMap<String, Rational>, name: &str) -> Result<f64, Failure> {
    params
        .get(name)
        .map(rational_to_f64)
        .ok_or_else(|| usage(format!("missing parameter {name}")))
}

fn count(params: &BTreeMap<String, Rational>, name: &str) -> Result<usize, Failure> {
    let v = params
        .get(name)
        .ok_or_else(|| usage(format!("missing parameter {name}")))?;
    if !v.is_integer() {
        return Err(usage(format!("{name} must be an integer, got {v}")));
    }
    v.to_integer()
        .to_usize()
        .ok_or_else(|| usage(format!("{name} must be a nonnegative integer, got {v}")))
}

fn with_defaults(
    mut given: BTreeMap<String, Rational>,
    defaults: &[(&str, i64, i64)],
) -> BTreeMap<String, Rational> {
    for &(k, n, d) in defaults {
        given
            .entry(k.to_string())
            .or_insert_with(|| Rational::new(n.into(), d.into()));
    }
    given
}

fn shown(params: &BTreeMap<String, Rational>, names: &[&str]) -> BTreeMap<String, String> {
    names
        .iter()
        .filter_map(|n| params.get(*n).map(|v| (n.to_string(), v.to_string())))
        .collect()
}

fn eval(
    name: &str,
    raw: BTreeMap<String, String>,
    opts: &EvalOptions64,
) -> Result<EvalOutput, Failure> {
    if !(opts.tol > 0.0) || opts.max_terms == 0 {
        return Err(usage("tol and max-terms must be positive"));
    }
    let given = raw
        .iter()
        .map(|(k, v)| Ok((k.clone(), rational(k, v)?)))
        .collect::<Result<BTreeMap<_, _>, Failure>>()?;

    if KEYS.contains(&name) {
        let mut params = catalog()
            .into_iter()
            .find(|r| r.key() == name)
            .map(|r| r.params())
            .unwrap_or_default()
            .into_iter()
            .map(|(k, v)| Ok((k.clone(), rational(&k, &v)?)))
            .collect::<Result<BTreeMap<_, _>, Failure>>()?;
        params.extend(given);
        let rep = Representation::from_key(name, &params)?;
        let z = if rep.needs_z() {
            Some(real(&params, "z")?)
        } else {
            None
        };
        let r = rep.evaluate(z, opts)?;
        let mut shown = rep.params();
        if rep.needs_z() {
            shown.insert("z".into(), params["z"].to_string());
        }
        return Ok(EvalOutput::new(name, shown, &r));
    }

    match name {
        "beta_asym" | "trigamma_asym" | "incgamma_asym" => {
            let defaults: &[(&str, i64, i64)] = if name == "incgamma_asym" {
                &[("x", 1, 1), ("len", DEFAULT_ASYMPTOTIC_LEN as i64, 1)]
            } else {
                &[("len", DEFAULT_ASYMPTOTIC_LEN as i64, 1)]
            };
            let params = with_defaults(given, defaults);
            reject_extra(name, &params, &["z", "x", "len"])?;
            let z = real(&params, "z")?;
            let len = count(&params, "len")?;
            if len == 0 {
                return Err(usage("len must be positive"));
            }
            let series = asymptotic_series(name, params.get("x"), len)?;
            let mut r = eval_asymptotic(&series, z)?;
            let names: &[&str] = if name == "incgamma_asym" {
                &["len", "x", "z"]
            } else {
                &["len", "z"]
            };
            if name == "incgamma_asym" {
                let x = real(&params, "x")?;
                let factor = x.powf(z) * (-x).exp();
                r = r.map_value(|v| v * factor);
                r.error_estimate *= factor;
            }
            Ok(EvalOutput::new(name, shown(&params, names), &r))
        }
        "polylog" => {
            let params = with_defaults(given, &[("k", 1, 1), ("x", 1, 2)]);
            reject_extra(name, &params, &["k", "x"])?;
            let r = polylog_via_stirling(count(&params, "k")?, real(&params, "x")?, opts)?;
            Ok(EvalOutput::new(name, shown(&params, &["k", "x"]), &r))
        }
        "log_gamma" => {
            reject_extra(name, &given, &["z"])?;
            let r = binet_log_gamma(real(&given, "z")?, opts)?;
            Ok(EvalOutput::new(name, shown(&given, &["z"]), &r))
        }
        "binomial_rhs" => {
            let params = with_defaults(given, &[("p", 1, 1), ("m", 1, 1), ("k", 1, 1)]);
            reject_extra(name, &params, &["p", "m", "k"])?;
            let (p, m, k) = (
                count(&params, "p")?,
                count(&params, "m")?,
                count(&params, "k")?,
            );
            if p == 0 || k == 0 {
                return Err(usage("binomial_rhs needs p >= 1 and k >= 1"));
            }
            let r = binomial_rhs_series(p, m, k, opts);
            Ok(EvalOutput::new(name, shown(&params, &["k", "m", "p"]), &r))
        }
        _ => Err(Failure::UnknownKey(format!(
            "unknown key `{name}`; valid keys: {}",
            all_keys().join(", ")
        ))),
    }
}

fn reject_extra(
    name: &str,
    params: &BTreeMap<String, Rational>,
    allowed: &[&str],
) -> Result<(), Failure> {
    match params.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(extra) => Err(usage(format!("{name} takes no parameter {extra}"))),
        None => Ok(()),
    }
}

fn table(kind: TableKind, rows: usize) -> Result<TableOutput, Failure> {
    if !(1..=MAX_ROWS).contains(&rows) {
        return Err(usage(format!("rows must be in 1..={MAX_ROWS}, got {rows}")));
    }
    let single =
        |f: &dyn Fn(usize) -> Rational| (0..rows).map(|n| vec![f(n).to_string()]).collect();
    let rows = match kind {
        TableKind::Stirling1 => (0..rows)
            .map(|n| stirling1_row(n).iter().map(|v| v.to_string()).collect())
            .collect(),
        TableKind::Stirling2 => (0..rows)
            .map(|n| stirling2_row(n).iter().map(|v| v.to_string()).collect())
            .collect(),
        TableKind::Bernoulli => single(&bernoulli),
        TableKind::Cauchy1 => single(&cauchy_first),
        TableKind::Cauchy2 => single(&cauchy_second),
        TableKind::Euler0 => single(&euler_poly_at_zero),
        TableKind::Binet => single(&binet_coefficient),
    };
    let kind = kind
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    Ok(TableOutput { kind, rows })
}

fn read_sequence(path: &PathBuf) -> Result<RationalSequence, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    if !text.trim_start().starts_with('[') {
        return Ok(RationalSequence::parse_text(&text)?);
    }
    let items: Vec<String> =
        serde_json::from_str(&text).map_err(|e| usage(format!("line {}: {e}", e.line())))?;
    let entries = items
        .iter()
        .enumerate()
        .map(|(i, s)| parse_rational(s).map_err(|m| usage(format!("entry {}: {m}", i + 1))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RationalSequence::new(entries)?)
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    let format = cli.format;
    match cli.command {
        Command::Eval {
            name,
            params,
            z,
            x,
            k,
            a,
            p,
            w,
            m,
        } => {
            let mut raw = split_params(&params)?;
            let flags = [
                ("z", z),
                ("x", x),
                ("k", k),
                ("a", a),
                ("p", p),
                ("w", w),
                ("m", m),
            ];
            for (key, v) in flags {
                if let Some(v) = v {
                    raw.insert(key.to_string(), v);
                }
            }
            let opts = EvalOptions::new(cli.tol, cli.max_terms);
            Ok((eval(&name, raw, &opts)?.render(format), 0))
        }
        Command::Verify {
            params,
            filter,
            tol_scale,
        } => {
            let mut raw = split_params(&params)?;
            let filter = filter.or_else(|| raw.remove("filter"));
            let tol_scale = match (tol_scale, raw.remove("tol_scale")) {
                (Some(s), _) => s,
                (None, Some(s)) => s
                    .parse()
                    .map_err(|_| usage(format!("tol_scale: not a number `{s}`")))?,
                (None, None) => 1.0,
            };
            if let Some(extra) = raw.keys().next() {
                return Err(usage(format!("verify takes no parameter {extra}")));
            }
            if !(tol_scale > 0.0) || !tol_scale.is_finite() {
                return Err(usage(format!(
                    "tol_scale must be positive, got {tol_scale}"
                )));
            }
            let report = verify::run(filter.as_deref(), tol_scale);
            if report.entries.is_empty() {
                return Err(usage(format!(
                    "no check matches filter `{}`",
                    filter.unwrap_or_default()
                )));
            }
            let code = if report.overall_pass { 0 } else { 1 };
            Ok((ReportOutput::from(&report).render(format), code))
        }
        Command::Table { kind, params, rows } => {
            let mut raw = split_params(&params)?;
            let rows = match (rows, raw.remove("rows")) {
                (Some(r), _) => r,
                (None, Some(r)) => r
                    .parse()
                    .map_err(|_| usage(format!("rows: not a count `{r}`")))?,
                (None, None) => 10,
            };
            if let Some(extra) = raw.keys().next() {
                return Err(usage(format!("table takes no parameter {extra}")));
            }
            Ok((table(kind, rows)?.render(format), 0))
        }
        Command::Transform {
            input,
            in_path,
            direction,
        } => {
            let path = in_path
                .or(input)
                .ok_or_else(|| usage("transform needs an input path"))?;
            let seq = read_sequence(&path)?;
            let out = match direction {
                Direction::Forward => stirling_transform(&seq),
                Direction::Inverse => inverse_stirling_transform(&seq),
                Direction::ToAsymptotic => asymptotic_from_factorial(&seq),
            };
            let values: Vec<String> = out.entries().iter().map(|r| r.to_string()).collect();
            Ok((render::sequence(&values, format), 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
