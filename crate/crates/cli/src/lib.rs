//! Command-line front end for `boolfactor`: division tableaus, factoring
//! reports, the scarce solver, exports, a self-test and a benchmark harness.

pub mod bench;
pub mod commands;
pub mod render;
pub mod selftest;

use std::fmt::Write as _;
use std::path::Path;

pub use commands::{Flags, Outcome, EXIT_ERROR, EXIT_OK, EXIT_PRIME};

pub fn cmd_selftest(flags: &Flags) -> Outcome {
    let checks = selftest::run(flags.seed);
    let mut out = String::new();
    for c in &checks {
        if c.passed {
            writeln!(out, "PASS {}", c.name).unwrap();
        } else {
            writeln!(out, "FAIL {}: {}", c.name, c.detail).unwrap();
        }
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    writeln!(out, "{passed}/{} checks passed", checks.len()).unwrap();
    Outcome {
        stdout: out,
        stderr: String::new(),
        code: if passed == checks.len() { EXIT_OK } else { 1 },
    }
}

/// Benchmarks odd `N` in `from..=to`. Records go to `csv_path` when given,
/// otherwise to stdout (CSV, or JSON with `--json`); the summary goes to
/// stderr.
pub fn cmd_bench(from: u64, to: u64, config: &bench::BenchConfig, csv_path: Option<&Path>, flags: &Flags) -> Outcome {
    let records = match bench::run(from, to, config) {
        Ok(r) => r,
        Err(e) => return Outcome::error(e),
    };
    let mut out = Outcome {
        stderr: bench::summary(&records),
        ..Outcome::default()
    };
    let mut buf = Vec::new();
    if let Err(e) = bench::write_csv(&records, &mut buf) {
        return Outcome::error(e);
    }
    match csv_path {
        Some(p) => {
            if let Err(e) = std::fs::write(p, &buf) {
                return Outcome::error(format!("writing {}: {e}", p.display()));
            }
        }
        None if !flags.json => out.stdout = String::from_utf8(buf).expect("csv output is UTF-8"),
        None => {}
    }
    if flags.json {
        out.stdout = serde_json::to_string_pretty(&records).expect("records serialise") + "\n";
    }
    out
}
