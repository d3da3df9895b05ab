use super::{check_odd, descend, odd_candidate, parameters, FactorOptions, FactorReport, LevelSystem, Method};
use crate::boolring::{BoolExpr, Instantiation, VarSet};
use crate::error::{Error, Result};
use crate::generic::{g_lopsided_divide, GenericInt};
use crate::satsolve::conjoin;

/// The level-`j` Boolean system for `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfInstance {
    pub n: u64,
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub level: usize,
    /// The divisor candidate with `x_{beta-1}, ..., x_{beta-j}` set to 0.
    pub x: GenericInt,
    /// `(c = borrows)` after `Gamma + j` steps.
    pub e: BoolExpr,
    /// `x_{beta-j-1}`, which must be 1 for the divisor to have full length.
    /// `None` when that position is the constant bit 0.
    pub leading: Option<usize>,
    /// `c_i^(i)` for `i < Gamma + j`: the cofactor's bits.
    pub quotient_bits: Vec<BoolExpr>,
    pub peak_terms: usize,
}

impl BfInstance {
    /// Variables of the candidate, `x1 ..= x_{beta-j-1}`.
    pub fn universe(&self) -> VarSet {
        VarSet::range(1, self.beta - self.level)
    }

    /// `e` conjoined with the leading-bit condition.
    pub fn system(&self) -> BoolExpr {
        match self.leading {
            Some(i) => conjoin([&self.e, &BoolExpr::var(i)]),
            None => self.e.clone(),
        }
    }

    /// The cofactor read from the quotient bits under `phi`.
    pub fn cofactor(&self, phi: &Instantiation) -> u64 {
        bits_value(&self.quotient_bits, phi)
    }

    pub fn steps(&self) -> usize {
        self.gamma + self.level
    }
}

pub(super) fn bits_value(bits: &[BoolExpr], phi: &Instantiation) -> u64 {
    bits.iter()
        .enumerate()
        .fold(0u64, |v, (i, b)| v | (b.evaluate(phi) as u64) << i)
}

/// Builds the level-`j` instance: divides `N` by the candidate of length
/// `beta - j` for `Gamma + j` steps and compares remainder and borrows.
pub fn bf_build(n: u64, j: usize) -> Result<BfInstance> {
    check_odd(n)?;
    let (alpha, beta, gamma) = parameters(n);
    if j >= beta {
        return Err(Error::OutOfRange(format!("level {j} is outside 0..{beta}")));
    }
    let len = beta - j;
    let x = odd_candidate(len);
    let division = g_lopsided_divide(&GenericInt::from_int(n as i128), &x, gamma + j)?;
    let e = division.remainder_vanishes()?;
    Ok(BfInstance {
        n,
        alpha,
        beta,
        gamma,
        level: j,
        x,
        e,
        leading: (len >= 2).then_some(len - 1),
        peak_terms: division.peak_terms(),
        quotient_bits: division.quotient_bits,
    })
}

/// Factors `N` level by level, longest divisors first.
pub fn bf_factor(n: u64, opts: &FactorOptions) -> Result<FactorReport> {
    descend(n, Method::Bf, opts, |m, j| {
        let inst = bf_build(m, j)?;
        Ok(LevelSystem {
            system: inst.system(),
            universe: inst.universe(),
            peak_terms: inst.peak_terms,
            e: inst.e,
            quotient_bits: inst.quotient_bits,
        })
    })
}
