//! Factoring as Boolean satisfiability.
//!
//! An odd divisor of `N` of length `beta - j` is written as the generic
//! integer `x = (...0, x_{beta-j-1}, ..., x1, 1)`. Dividing `N` by `x` for
//! `Gamma + j` steps leaves an expression `e` that is 1 exactly at the
//! assignments for which the division is exact. BF reads `e` off the
//! division tableau; MBF reads the same condition off the high bits of
//! `N * x^-1` modulo `2^W`.

mod bf;
mod mbf;

use std::time::Duration;

use serde::{Serialize, Serializer};

use crate::boolring::{BoolExpr, Instantiation, VarSet};
use crate::error::{Error, Result};
use crate::generic::GenericInt;
use crate::satsolve::{self, SolveOutcome};

pub use bf::{bf_build, bf_factor, BfInstance};
pub use mbf::{mbf_default_width, mbf_factor, mbf_factor_with_width, mbf_precompute};

/// Largest `N` accepted by the factoring routines.
pub const SIZE_CAP: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Bf,
    Mbf,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Bf => "bf",
            Method::Mbf => "mbf",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorOptions {
    /// Keep descending after the first level that yields a factor.
    pub enumerate_all: bool,
    /// Report the divisor 1 (and `N`) instead of discarding it.
    pub include_trivial: bool,
    /// Step-4 budget of the solver, per level.
    pub budget: u64,
}

impl Default for FactorOptions {
    fn default() -> Self {
        FactorOptions {
            enumerate_all: false,
            include_trivial: false,
            budget: satsolve::DEFAULT_BUDGET,
        }
    }
}

/// `divisor * cofactor = N`, with `divisor = Phi(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FactorPair {
    pub divisor: u64,
    pub cofactor: u64,
}

impl FactorPair {
    /// The pair with the smaller number first.
    pub fn sorted(self) -> (u64, u64) {
        (self.divisor.min(self.cofactor), self.divisor.max(self.cofactor))
    }
}

/// One descent level.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Stage {
    pub level: usize,
    /// Length of the divisors this level looks for, `beta - level`.
    pub divisor_length: usize,
    /// The equation read off the division (BF) or the product window (MBF).
    pub e: BoolExpr,
    /// `e` conjoined with the leading-bit condition; what the solver sees.
    pub system: BoolExpr,
    /// Cofactor bits, least significant first.
    pub quotient_bits: Vec<BoolExpr>,
    pub solutions: usize,
    pub mu: usize,
    pub exhausted: bool,
    pub peak_terms: usize,
    #[serde(rename = "elapsedS", serialize_with = "seconds")]
    pub elapsed: Duration,
    pub factors: Vec<FactorPair>,
}

fn seconds<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FactorReport {
    pub n: u64,
    pub method: Method,
    /// `N = 2^two_power * odd_part`.
    pub two_power: u32,
    pub odd_part: u64,
    pub alpha: usize,
    pub beta: usize,
    pub stages: Vec<Stage>,
    /// Verified pairs for the odd part, in level order then solution order.
    pub factors: Vec<FactorPair>,
    pub trivial_excluded: bool,
}

impl FactorReport {
    pub fn peak_terms(&self) -> usize {
        self.stages.iter().map(|s| s.peak_terms).max().unwrap_or(0)
    }

    /// Largest step-4 variable count over all stages.
    pub fn mu(&self) -> usize {
        self.stages.iter().map(|s| s.mu).max().unwrap_or(0)
    }

    pub fn elapsed(&self) -> Duration {
        self.stages.iter().map(|s| s.elapsed).sum()
    }

    /// Factor pairs with the smaller number first, sorted and deduplicated.
    pub fn factor_set(&self) -> Vec<(u64, u64)> {
        let mut v: Vec<(u64, u64)> = self.factors.iter().map(|p| p.sorted()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn any_budget_exhausted(&self) -> bool {
        self.stages.iter().any(|s| s.exhausted)
    }
}

/// Whether `d` divides `n` exactly.
pub fn verify_candidate(n: u64, d: u64) -> bool {
    d >= 1 && n % d == 0
}

/// Bit length `alpha`, divisor width `beta = floor((1+alpha)/2)` and step
/// count `Gamma = ceil((1+alpha)/2)` of `n`.
pub fn parameters(n: u64) -> (usize, usize, usize) {
    let alpha = (64 - n.leading_zeros()) as usize;
    let beta = (1 + alpha) / 2;
    (alpha, beta, alpha + 1 - beta)
}

/// `(...0, x_{len-1}, ..., x1, 1)`, the generic odd integer of length `len`.
pub fn odd_candidate(len: usize) -> GenericInt {
    let mut coeffs = vec![BoolExpr::one()];
    coeffs.extend((1..len).map(BoolExpr::var));
    GenericInt::exact(coeffs, BoolExpr::zero())
}

/// `Phi(x)` for the odd candidate `(x_{len-1}, ..., x1, 1)`.
pub fn candidate_value(phi: &Instantiation, len: usize) -> u64 {
    (1..len).fold(1u64, |d, i| d | (phi.get(i) as u64) << i)
}

fn check_odd(n: u64) -> Result<()> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::OutOfRange(format!("{n} is not an odd integer >= 3")));
    }
    if n >= SIZE_CAP {
        return Err(Error::OutOfRange(format!("{n} exceeds the size cap of {SIZE_CAP}")));
    }
    Ok(())
}

fn split_two_power(n: u64) -> Result<(u32, u64)> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("{n} has no factorisation to search")));
    }
    if n >= SIZE_CAP {
        return Err(Error::OutOfRange(format!("{n} exceeds the size cap of {SIZE_CAP}")));
    }
    let s = n.trailing_zeros();
    Ok((s, n >> s))
}

/// Runs the descent shared by both methods; `level` builds the Boolean
/// system for one level of the odd part.
fn descend(
    n: u64,
    method: Method,
    opts: &FactorOptions,
    mut level: impl FnMut(u64, usize) -> Result<LevelSystem>,
) -> Result<FactorReport> {
    let (two_power, m) = split_two_power(n)?;
    let (alpha, beta, _) = parameters(m);
    let mut report = FactorReport {
        n,
        method,
        two_power,
        odd_part: m,
        alpha,
        beta,
        stages: Vec::new(),
        factors: Vec::new(),
        trivial_excluded: !opts.include_trivial,
    };
    if m == 1 {
        return Ok(report);
    }
    for j in 0..beta {
        let start = std::time::Instant::now();
        let sys = level(m, j)?;
        let outcome: SolveOutcome = satsolve::solve_scarce(&sys.system, sys.universe, opts.budget, true)?;
        let len = beta - j;
        let mut factors = Vec::new();
        for phi in &outcome.solutions {
            let d = candidate_value(phi, len);
            let q = bf::bits_value(&sys.quotient_bits, phi);
            if d.checked_mul(q) != Some(m) || !verify_candidate(m, d) {
                continue;
            }
            if !opts.include_trivial && (d == 1 || d == m) {
                continue;
            }
            factors.push(FactorPair {
                divisor: d,
                cofactor: q,
            });
        }
        let found = !factors.is_empty();
        report.factors.extend(factors.iter().copied());
        report.stages.push(Stage {
            level: j,
            divisor_length: len,
            e: sys.e,
            system: sys.system,
            quotient_bits: sys.quotient_bits,
            solutions: outcome.solutions.len(),
            mu: outcome.mu,
            exhausted: outcome.exhausted,
            peak_terms: sys.peak_terms,
            elapsed: start.elapsed(),
            factors,
        });
        if found && !opts.enumerate_all && factors_nontrivial(&report) {
            break;
        }
    }
    Ok(report)
}

fn factors_nontrivial(report: &FactorReport) -> bool {
    report
        .factors
        .iter()
        .any(|p| p.divisor != 1 && p.divisor != report.odd_part)
}

struct LevelSystem {
    e: BoolExpr,
    system: BoolExpr,
    universe: VarSet,
    peak_terms: usize,
    quotient_bits: Vec<BoolExpr>,
}

#[cfg(test)]
mod tests;
