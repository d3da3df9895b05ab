use super::{descend, odd_candidate, parameters, FactorOptions, FactorReport, LevelSystem, Method};
use crate::boolring::{BoolExpr, VarSet};
use crate::error::{Error, Result};
use crate::generic::{g_lopsided_divide, GenericInt};
use crate::satsolve::conjoin;

/// Default product width for `N`: `2 alpha + 2`.
pub fn mbf_default_width(n: u64) -> usize {
    let (alpha, _, _) = parameters(n);
    2 * alpha + 2
}

/// `x^-1 mod 2^width` for the candidate of length `beta`, by lopsided
/// division of 1 by `x`.
pub fn mbf_precompute(beta: usize, width: usize) -> Result<GenericInt> {
    if beta == 0 {
        return Err(Error::OutOfRange("beta must be positive".into()));
    }
    if width < 2 * beta {
        return Err(Error::WidthExhausted {
            needed: 2 * beta,
            width,
        });
    }
    let one = GenericInt::truncated_int(1, width);
    Ok(g_lopsided_divide(&one, &odd_candidate(beta), width)?.quotient())
}

/// Variables `x_i` present in a precomputed inverse, as `beta = max i + 1`.
fn inverse_beta(xinv: &GenericInt) -> usize {
    xinv.vars().iter().last().map_or(1, |i| i + 1)
}

/// Factors `N` with a precomputed inverse `xinv` (truncated, width `W`).
///
/// At level `j` the candidate's variables from `x_{beta_N - j}` up are set to
/// 0 in `xinv`, `q = N x^-1 mod 2^W` is formed, and the system is
/// `q_k = 0` for `Gamma + j <= k < W` together with the leading bit.
pub fn mbf_factor(n: u64, xinv: &GenericInt, opts: &FactorOptions) -> Result<FactorReport> {
    let width = xinv.width();
    let have = inverse_beta(xinv);
    descend(n, Method::Mbf, opts, |m, j| {
        let (alpha, beta, gamma) = parameters(m);
        if beta > have {
            return Err(Error::OutOfRange(format!(
                "inverse covers divisors of length {have}, {m} needs {beta}"
            )));
        }
        if width < alpha + beta + 1 {
            return Err(Error::WidthExhausted {
                needed: alpha + beta + 1,
                width,
            });
        }
        let len = beta - j;
        let inv = (len..have.max(len)).fold(xinv.clone(), |g, i| g.substitute(i, false));
        let q = GenericInt::from_int(m as i128).mul(&inv)?;
        let window = gamma + j;
        let e = q.equiv_window(&GenericInt::truncated_int(0, width), window.min(width)..width);
        let system = if len >= 2 {
            conjoin([&e, &BoolExpr::var(len - 1)])
        } else {
            e.clone()
        };
        Ok(LevelSystem {
            peak_terms: q.term_count() + inv.term_count(),
            e,
            system,
            universe: VarSet::range(1, len),
            quotient_bits: q.coeffs()[..window.min(width)].to_vec(),
        })
    })
}

/// [`mbf_factor`] with an inverse computed for `N` at the default width.
pub fn mbf_factor_with_width(n: u64, width: Option<usize>, opts: &FactorOptions) -> Result<FactorReport> {
    let m = if n == 0 { 0 } else { n >> n.trailing_zeros() };
    let (beta, width) = if m >= 3 {
        let (_, beta, _) = parameters(m);
        (beta, width.unwrap_or_else(|| mbf_default_width(m)))
    } else {
        (1, width.unwrap_or(2))
    };
    let xinv = mbf_precompute(beta, width)?;
    mbf_factor(n, &xinv, opts)
}
