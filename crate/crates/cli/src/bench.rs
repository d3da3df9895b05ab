//! Runtime harness: factors every odd `N` in a range and records time,
//! expression size and search width.

use std::collections::HashMap;
use std::io::Write;
use std::time::{Duration, Instant};

use serde::Serialize;

use boolfactor::factor::{self, FactorOptions, FactorReport, Method};
use boolfactor::{GenericInt, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    #[serde(rename = "N")]
    pub n: u64,
    pub alpha: usize,
    pub beta: usize,
    pub method: Method,
    /// Fastest of the repeated runs, in seconds; always positive.
    pub wall_time_s: f64,
    pub anf_peak_terms: usize,
    pub mu: usize,
    /// Sorted pairs as `3x7`, separated by `;`. A record whose search ran
    /// out of budget carries the marker `budget_exhausted`.
    pub factors: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchConfig {
    pub method: Method,
    /// Each `N` is factored this many times and the fastest run is kept.
    pub repeats: usize,
    pub budget: u64,
    /// MBF product width; `None` uses `4 beta + 2`, enough for every `N`
    /// with that divisor width.
    pub width: Option<usize>,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            method: Method::Bf,
            repeats: 1,
            budget: boolfactor::satsolve::DEFAULT_BUDGET,
            width: None,
        }
    }
}

/// Odd `N` in `from..=to`, skipping 1.
pub fn odd_range(from: u64, to: u64) -> impl Iterator<Item = u64> {
    let start = from.max(3) | 1;
    (start..=to).step_by(2)
}

fn factors_field(report: &FactorReport) -> String {
    let mut parts: Vec<String> = report
        .factor_set()
        .into_iter()
        .map(|(a, b)| format!("{a}x{b}"))
        .collect();
    if report.any_budget_exhausted() {
        parts.push("budget_exhausted".into());
    }
    parts.join(";")
}

/// Runs the harness over every odd `N` in `from..=to`.
pub fn run(from: u64, to: u64, config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    if to >= factor::SIZE_CAP {
        return Err(boolfactor::Error::OutOfRange(format!(
            "{to} exceeds the size cap of {}",
            factor::SIZE_CAP
        )));
    }
    let opts = FactorOptions {
        budget: config.budget,
        ..FactorOptions::default()
    };
    // One inverse per divisor length, built before any timing starts.
    let mut inverses: HashMap<usize, GenericInt> = HashMap::new();
    let mut records = Vec::new();
    for n in odd_range(from, to) {
        let (alpha, beta, _) = factor::parameters(n);
        if config.method == Method::Mbf && !inverses.contains_key(&beta) {
            let width = config.width.unwrap_or(2 * (2 * beta) + 2);
            inverses.insert(beta, factor::mbf_precompute(beta, width)?);
        }
        let mut best = Duration::MAX;
        let mut report = None;
        for _ in 0..config.repeats.max(1) {
            let start = Instant::now();
            let r = match config.method {
                Method::Bf => factor::bf_factor(n, &opts)?,
                Method::Mbf => factor::mbf_factor(n, &inverses[&beta], &opts)?,
            };
            best = best.min(start.elapsed());
            report = Some(r);
        }
        let report = report.expect("at least one repeat");
        records.push(BenchRecord {
            n,
            alpha,
            beta,
            method: config.method,
            wall_time_s: best.as_secs_f64().max(1e-9),
            anf_peak_terms: report.peak_terms(),
            mu: report.mu(),
            factors: factors_field(&report),
        });
    }
    Ok(records)
}

pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if records.is_empty() {
        w.write_record([
            "N",
            "alpha",
            "beta",
            "method",
            "wall_time_s",
            "anf_peak_terms",
            "mu",
            "factors",
        ])?;
    }
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Least-squares slope of `y` against `x`; `None` with fewer than two
/// distinct `x`.
pub fn least_squares_slope(points: &[(f64, f64)]) -> Option<f64> {
    let n = points.len() as f64;
    if points.len() < 2 {
        return None;
    }
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Slope of `ln(wall_time_s)` against `beta`.
pub fn time_slope(records: &[BenchRecord]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = records.iter().map(|r| (r.beta as f64, r.wall_time_s.ln())).collect();
    least_squares_slope(&pts)
}

pub fn summary(records: &[BenchRecord]) -> String {
    match time_slope(records) {
        Some(s) => format!(
            "{} records; slope of ln(wall_time_s) against beta = {s:.4} (factor {:.3} per unit of beta)\n",
            records.len(),
            s.exp()
        ),
        None => format!("{} records; too few beta values for a slope\n", records.len()),
    }
}
