//! Subcommand bodies. Each returns the text it would print and an exit code
//! so the binary stays a thin argument parser.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use boolfactor::dyadic::{self, DyadicTrace};
use boolfactor::factor::{self, FactorOptions, FactorReport, Method};
use boolfactor::satsolve::{self, DEFAULT_BUDGET};
use boolfactor::{BoolExpr, DyadicInt, Instantiation};

use crate::render;

pub const EXIT_OK: u8 = 0;
pub const EXIT_PRIME: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

/// Name of the environment variable that overrides default widths.
pub const WIDTH_ENV: &str = "GENERIC_INT_WIDTH";

/// Default modulus width of `inverse`.
pub const DEFAULT_INVERSE_WIDTH: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flags {
    pub json: bool,
    pub width: Option<usize>,
    pub seed: u64,
    pub budget: u64,
}

impl Default for Flags {
    fn default() -> Self {
        Flags {
            json: false,
            width: None,
            seed: 0,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl Flags {
    /// `--width`, else `GENERIC_INT_WIDTH`, else `None`.
    pub fn resolved_width(&self) -> Result<Option<usize>, String> {
        if self.width.is_some() {
            return Ok(self.width);
        }
        match std::env::var(WIDTH_ENV) {
            Ok(s) if !s.trim().is_empty() => s
                .trim()
                .parse()
                .map(Some)
                .map_err(|_| format!("{WIDTH_ENV}={s:?} is not a width")),
            _ => Ok(None),
        }
    }
}

/// What a command printed and how it exits.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    pub fn ok(stdout: String) -> Outcome {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    pub fn error(msg: impl std::fmt::Display) -> Outcome {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_ERROR,
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialise");
    s.push('\n');
    s
}

/// Lopsided division of `a` by `b`. `steps` defaults to
/// `max(1, 1 + lgth(a) - lgth(b))`.
pub fn divide_trace(a: i128, b: i128, steps: Option<usize>, flags: &Flags) -> Result<dyadic::Division, String> {
    let (da, db) = (DyadicInt::from_int(a), DyadicInt::from_int(b));
    if b <= 0 {
        return Err(format!("divisor {b} must be a positive odd integer"));
    }
    let steps = match steps {
        Some(s) => s,
        None if a > 0 => dyadic::gamma(&da, &db).map_err(|e| e.to_string())?.max(1),
        None => return Err("a non-positive dividend needs an explicit --steps".into()),
    };
    let width = flags.resolved_width()?;
    dyadic::lopsided_divide_with_width(&da, &db, steps, width).map_err(|e| e.to_string())
}

pub fn cmd_divide(a: i128, b: i128, steps: Option<usize>, flags: &Flags) -> Outcome {
    let division = match divide_trace(a, b, steps, flags) {
        Ok(d) => d,
        Err(e) => return Outcome::error(e),
    };
    if flags.json {
        return Outcome::ok(to_json(&division.trace));
    }
    let trace = &division.trace;
    let mut out = render::tableau(trace);
    let g = trace.gamma;
    writeln!(out, "gamma = {g}").unwrap();
    let verdict = if division.exact {
        format!("exact: c({g}) = borrows({g})")
    } else {
        format!("not exact: c({g}) != borrows({g})")
    };
    writeln!(out, "{verdict}").unwrap();
    writeln!(
        out,
        "quotient = {} = {}",
        render::quotient_string(&trace.quotient_bits),
        render::quotient_value(&trace.quotient_bits)
    )
    .unwrap();
    Outcome::ok(out)
}

pub fn cmd_inverse(b: i128, flags: &Flags) -> Outcome {
    let width = match flags.resolved_width() {
        Ok(w) => w.unwrap_or(DEFAULT_INVERSE_WIDTH),
        Err(e) => return Outcome::error(e),
    };
    if width > 128 {
        return Outcome::error(format!("width {width} exceeds 128"));
    }
    let r = match dyadic::dyadic_inverse(&DyadicInt::from_int(b), width) {
        Ok(r) => r,
        Err(e) => return Outcome::error(e),
    };
    let value = r.to_u128_mod().expect("width checked above");
    if flags.json {
        return Outcome::ok(to_json(&json!({
            "b": b,
            "width": width,
            "inverse": value,
            "bits": r.to_string(),
        })));
    }
    Outcome::ok(format!("{b}^-1 mod 2^{width} = {value} ({r})\n"))
}

/// The JSON written by `--emit-system` and `export system`.
pub fn system_json(n: u64, report_beta: usize, gamma: usize, stage: &factor::Stage) -> Value {
    json!({
        "N": n,
        "alpha": factor::parameters(n).0,
        "beta": report_beta,
        "gamma": gamma,
        "level": stage.level,
        "e": stage.e.to_string(),
        "system": stage.system.to_string(),
        "quotientBits": stage.quotient_bits.iter().map(BoolExpr::to_string).collect::<Vec<_>>(),
    })
}

pub fn run_factor(n: u64, method: Method, opts: &FactorOptions, flags: &Flags) -> Result<FactorReport, String> {
    if n < 3 {
        return Err(format!("{n} is below 3"));
    }
    match method {
        Method::Bf => factor::bf_factor(n, opts),
        Method::Mbf => factor::mbf_factor_with_width(n, flags.resolved_width()?, opts),
    }
    .map_err(|e| e.to_string())
}

/// Whether the report shows `N` to be composite.
pub fn is_composite(report: &FactorReport) -> bool {
    let nontrivial = report
        .factors
        .iter()
        .any(|p| p.divisor != 1 && p.divisor != report.odd_part);
    nontrivial || (report.two_power > 0 && report.n > 2)
}

pub fn cmd_factor(
    n: u64,
    method: Method,
    enumerate_all: bool,
    include_trivial: bool,
    emit_system: Option<&Path>,
    flags: &Flags,
) -> Outcome {
    let opts = FactorOptions {
        enumerate_all,
        include_trivial,
        budget: flags.budget,
    };
    let report = match run_factor(n, method, &opts, flags) {
        Ok(r) => r,
        Err(e) => return Outcome::error(e),
    };
    if let (Some(path), Some(stage)) = (emit_system, report.stages.last()) {
        let (_, _, gamma) = factor::parameters(report.odd_part);
        let doc = system_json(report.odd_part, report.beta, gamma, stage);
        if let Err(e) = std::fs::write(path, to_json(&doc)) {
            return Outcome::error(format!("writing {}: {e}", path.display()));
        }
    }
    let composite = is_composite(&report);
    let incomplete = !composite && report.any_budget_exhausted();
    let code = if incomplete {
        EXIT_ERROR
    } else if composite {
        EXIT_OK
    } else {
        EXIT_PRIME
    };
    let mut out = Outcome {
        code,
        ..Outcome::default()
    };
    if incomplete {
        out.stderr = "error: solver budget exhausted before a factor was found\n".into();
    }
    if flags.json {
        out.stdout = to_json(&report);
        return out;
    }
    out.stdout = render::stage_log(&report);
    match render::factor_lines(&report) {
        Some(lines) if composite => {
            for line in lines {
                writeln!(out.stdout, "{line}").unwrap();
            }
        }
        _ if incomplete => writeln!(out.stdout, "{n}: search incomplete").unwrap(),
        _ => writeln!(out.stdout, "{n} is prime").unwrap(),
    }
    out
}

fn assignment_map(phi: &Instantiation, vars: &[usize]) -> BTreeMap<String, u8> {
    vars.iter().map(|&i| (format!("x{i}"), phi.get(i) as u8)).collect()
}

pub fn cmd_solve(expr: &str, all: bool, flags: &Flags) -> Outcome {
    let e: BoolExpr = match expr.parse() {
        Ok(e) => e,
        Err(err) => return Outcome::error(err),
    };
    let universe = e.vars();
    let outcome = match satsolve::solve_scarce(&e, universe, flags.budget, true) {
        Ok(o) => o,
        Err(err) => return Outcome::error(err),
    };
    let vars: Vec<usize> = universe.iter().collect();
    let shown = if all {
        outcome.solutions.len()
    } else {
        outcome.solutions.len().min(1)
    };
    let solutions: Vec<BTreeMap<String, u8>> = outcome.solutions[..shown]
        .iter()
        .map(|phi| assignment_map(phi, &vars))
        .collect();
    let forced: BTreeMap<String, u8> = outcome
        .forced
        .iter()
        .map(|(&i, &b)| (format!("x{i}"), b as u8))
        .collect();
    let code = if !outcome.solutions.is_empty() {
        EXIT_OK
    } else if outcome.exhausted {
        EXIT_ERROR
    } else {
        EXIT_PRIME
    };
    if flags.json {
        let mut doc = json!({
            "solutions": solutions,
            "forced": forced,
            "mu": outcome.mu,
            "scarce": outcome.scarce,
        });
        if outcome.exhausted {
            doc["exhausted"] = Value::Bool(true);
        }
        return Outcome {
            stdout: to_json(&doc),
            stderr: String::new(),
            code,
        };
    }
    let mut out = String::new();
    let list = |m: &BTreeMap<String, u8>| {
        let mut kv: Vec<(usize, String)> = m
            .iter()
            .map(|(k, v)| (k[1..].parse().unwrap_or(0), format!("{k}={v}")))
            .collect();
        kv.sort();
        kv.into_iter().map(|(_, s)| s).collect::<Vec<_>>().join(" ")
    };
    writeln!(
        out,
        "forced: {}",
        if forced.is_empty() {
            "none".into()
        } else {
            list(&forced)
        }
    )
    .unwrap();
    writeln!(out, "mu = {}, scarce = {}", outcome.mu, outcome.scarce).unwrap();
    if outcome.exhausted {
        writeln!(out, "budget exhausted after {} assignments", outcome.budget_used).unwrap();
    }
    if solutions.is_empty() {
        writeln!(out, "no solutions").unwrap();
    }
    for s in &solutions {
        writeln!(
            out,
            "{}",
            if s.is_empty() {
                "(empty assignment)".into()
            } else {
                list(s)
            }
        )
        .unwrap();
    }
    if !all && outcome.solutions.len() > 1 {
        writeln!(out, "{} solutions in total; --all lists them", outcome.solutions.len()).unwrap();
    }
    Outcome {
        stdout: out,
        stderr: String::new(),
        code,
    }
}

/// The division trace as JSON.
pub fn cmd_export_trace(a: i128, b: i128, steps: Option<usize>, flags: &Flags) -> Outcome {
    match divide_trace(a, b, steps, flags) {
        Ok(d) => Outcome::ok(to_json(&d.trace)),
        Err(e) => Outcome::error(e),
    }
}

/// Parses an exported trace back.
pub fn parse_trace(text: &str) -> Result<DyadicTrace, serde_json::Error> {
    serde_json::from_str(text)
}

/// The BF system of level `level` for odd `n`, as JSON.
pub fn cmd_export_system(n: u64, level: usize) -> Outcome {
    let inst = match factor::bf_build(n, level) {
        Ok(i) => i,
        Err(e) => return Outcome::error(e),
    };
    Outcome::ok(to_json(&json!({
        "N": n,
        "alpha": inst.alpha,
        "beta": inst.beta,
        "gamma": inst.gamma,
        "level": inst.level,
        "e": inst.e.to_string(),
        "system": inst.system().to_string(),
        "quotientBits": inst.quotient_bits.iter().map(BoolExpr::to_string).collect::<Vec<_>>(),
    })))
}
