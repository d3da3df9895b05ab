//! Plain-text tableaus and report summaries.

use std::fmt::Write as _;

use boolfactor::dyadic::DyadicTrace;
use boolfactor::factor::FactorReport;
use boolfactor::DyadicInt;

const LABEL: usize = 14;

/// Number of low bit positions needed to show every row of the trace.
fn display_width(trace: &DyadicTrace) -> usize {
    let rows = trace
        .steps
        .iter()
        .flat_map(|s| [Some(&s.c), Some(&s.borrows), s.subtrahend.as_ref()]);
    rows.flatten()
        .chain([&trace.dividend, &trace.divisor])
        .map(DyadicInt::significant_width)
        .max()
        .unwrap_or(1)
        .max(trace.gamma)
        .max(1)
}

fn bit_row(label: &str, cells: impl Iterator<Item = Option<bool>>) -> String {
    let mut line = format!("{label:<LABEL$}");
    for cell in cells {
        line.push_str(match cell {
            Some(true) => " 1",
            Some(false) => " 0",
            None => "  ",
        });
    }
    line
}

fn value_row(label: &str, v: &DyadicInt, width: usize) -> String {
    bit_row(label, (0..width).rev().map(|j| Some(v.bit(j))))
}

/// The division tableau, low bit rightmost.
///
/// The header carries the quotient bits over the columns they were read
/// from; each block shows `c^(i)`, `borrows^(i)` and the gated subtrahend,
/// closed by a rule.
pub fn tableau(trace: &DyadicTrace) -> String {
    let width = display_width(trace);
    let rule = "-".repeat(LABEL + 2 * width);
    let mut out = String::new();
    let header = (0..width).rev().map(|j| trace.quotient_bits.get(j).copied());
    writeln!(out, "{}", bit_row("quotient", header)).unwrap();
    writeln!(out, "{rule}").unwrap();
    let last = trace.steps.len() - 1;
    for (i, step) in trace.steps.iter().enumerate() {
        writeln!(out, "{}", value_row(&format!("c({i})"), &step.c, width)).unwrap();
        writeln!(out, "{}", value_row(&format!("borrows({i})"), &step.borrows, width)).unwrap();
        if let Some(t) = &step.subtrahend {
            let q = trace.quotient_bits[i] as u8;
            writeln!(out, "{}", value_row(&format!("{q} * S^{i} b"), t, width)).unwrap();
        }
        if i < last {
            writeln!(out, "{rule}").unwrap();
        }
    }
    out
}

/// Quotient bits most significant first, as in `1011`.
pub fn quotient_string(bits: &[bool]) -> String {
    bits.iter().rev().map(|&b| if b { '1' } else { '0' }).collect()
}

pub fn quotient_value(bits: &[bool]) -> u128 {
    bits.iter().enumerate().fold(0u128, |v, (i, &b)| v | (b as u128) << i)
}

/// The closing line of a factor run, such as `21 = 3 × 7` or `4 = 2^2`.
///
/// Returns one line per distinct pair; `None` when nothing was split off.
pub fn factor_lines(report: &FactorReport) -> Option<Vec<String>> {
    let power = match report.two_power {
        0 => None,
        1 => Some("2".to_string()),
        s => Some(format!("2^{s}")),
    };
    let pairs: Vec<(u64, u64)> = report.factor_set().into_iter().filter(|&(a, _)| a != 1).collect();
    let join = |parts: Vec<String>| format!("{} = {}", report.n, parts.join(" × "));
    if pairs.is_empty() {
        let power = power?;
        if report.odd_part == 1 && report.two_power == 1 {
            return None;
        }
        let mut parts = vec![power];
        if report.odd_part > 1 {
            parts.push(report.odd_part.to_string());
        }
        return Some(vec![join(parts)]);
    }
    Some(
        pairs
            .into_iter()
            .map(|(a, b)| {
                let mut parts: Vec<String> = power.iter().cloned().collect();
                parts.push(a.to_string());
                parts.push(b.to_string());
                join(parts)
            })
            .collect(),
    )
}

/// One line per descent level.
pub fn stage_log(report: &FactorReport) -> String {
    let mut out = String::new();
    if report.two_power > 0 && report.odd_part > 1 {
        writeln!(out, "{} = 2^{} * {}", report.n, report.two_power, report.odd_part).unwrap();
    }
    if report.stages.is_empty() {
        return out;
    }
    writeln!(
        out,
        "N = {}: alpha = {}, beta = {}, method = {}",
        report.odd_part, report.alpha, report.beta, report.method
    )
    .unwrap();
    for s in &report.stages {
        write!(out, "level {} (length {}): e = {}", s.level, s.divisor_length, s.e).unwrap();
        write!(out, "; {} solution(s), mu = {}", s.solutions, s.mu).unwrap();
        if s.exhausted {
            write!(out, ", budget exhausted").unwrap();
        }
        if s.factors.is_empty() {
            write!(out, "; no factor of length {}", s.divisor_length).unwrap();
        } else {
            let found: Vec<String> = s
                .factors
                .iter()
                .map(|p| format!("{} × {}", p.divisor, p.cofactor))
                .collect();
            write!(out, "; {}", found.join(", ")).unwrap();
        }
        writeln!(out).unwrap();
    }
    out
}
