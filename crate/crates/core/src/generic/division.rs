//! Lopsided division with a generic divisor.
//!
//! The iteration carries `(c, borrows, w, l)` where `w = S^l x`; each step
//! emits the quotient bit `c_l` and subtracts `c_l * w` in borrow-save form.

use super::GenericInt;
use crate::boolring::BoolExpr;
use crate::error::{Error, Result};
use crate::trace::{DivisionStep, DivisionTrace};
use crate::Mode;

pub type GenericTrace = DivisionTrace<GenericInt, BoolExpr>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericDivision {
    /// `c_i^(i)` for `i < steps`, least significant first.
    pub quotient_bits: Vec<BoolExpr>,
    pub trace: GenericTrace,
}

impl GenericDivision {
    /// `(c^(steps) = borrows^(steps))`, true exactly where the remainder vanishes.
    pub fn remainder_vanishes(&self) -> Result<BoolExpr> {
        let (c, b) = self.trace.last();
        match c.mode() {
            Mode::Exact => c.equiv(b),
            Mode::Truncated => Ok(c.equiv_window(b, 0..c.width())),
        }
    }

    pub fn quotient(&self) -> GenericInt {
        GenericInt::truncated(self.quotient_bits.clone())
    }

    /// Largest number of ANF terms held by any row of the tableau.
    pub fn peak_terms(&self) -> usize {
        self.trace
            .steps
            .iter()
            .map(|s| {
                s.c.term_count() + s.borrows.term_count() + s.subtrahend.as_ref().map_or(0, GenericInt::term_count)
            })
            .max()
            .unwrap_or(0)
    }
}

/// Divides `a` by the odd generic integer `x` for `steps` steps.
///
/// Exact operands are held at a fixed working width of
/// `max(2 width(a) + 2, steps + width(x) + 1)`; a truncated operand fixes the
/// width to its own and the division runs modulo `2^width`.
pub fn g_lopsided_divide(a: &GenericInt, x: &GenericInt, steps: usize) -> Result<GenericDivision> {
    g_lopsided_divide_with_width(a, x, steps, None)
}

pub fn g_lopsided_divide_with_width(
    a: &GenericInt,
    x: &GenericInt,
    steps: usize,
    width: Option<usize>,
) -> Result<GenericDivision> {
    if !x.coeff(0).is_one() {
        return Err(Error::EvenDivisor);
    }
    let truncated = [a, x].iter().filter(|g| !g.is_exact()).map(|g| g.width()).min();
    let (width, mode) = match truncated {
        Some(w) => (width.unwrap_or(w).min(w), Mode::Truncated),
        None => {
            let needed = steps + x.width() + 1;
            let w = width.unwrap_or((2 * a.width() + 2).max(needed));
            if steps + x.width() > w {
                return Err(Error::WidthExhausted {
                    needed: steps + x.width(),
                    width: w,
                });
            }
            (w, Mode::Exact)
        }
    };
    if steps > width {
        return Err(Error::WidthExhausted { needed: steps, width });
    }
    let fit = |g: &GenericInt| match mode {
        Mode::Exact => g.resized(width),
        Mode::Truncated => g.truncate(width),
    };
    let (a, x) = (fit(a)?, fit(x)?);
    let mut c = a.clone();
    let mut borrows = fit(&GenericInt::zero())?;
    let mut w = x.clone();
    let mut rows = Vec::with_capacity(steps + 1);
    let mut quotient_bits = Vec::with_capacity(steps);
    for l in 0..steps {
        if l > 0 {
            w = w.shl_within(1, width)?;
        }
        let q = c.coeff(l).clone();
        let t = w.scalar(&q);
        let t = fit(&t)?;
        let (s1, _) = GenericInt::sigma12(&c, &borrows, &t);
        let (_, s2) = GenericInt::sigma12(&c.complement(), &borrows, &t);
        let next_c = fit(&s1)?;
        let next_borrows = fit(&s2.shl_within(1, width)?)?;
        quotient_bits.push(q);
        rows.push(DivisionStep {
            c: std::mem::replace(&mut c, next_c),
            borrows: std::mem::replace(&mut borrows, next_borrows),
            subtrahend: Some(t),
        });
    }
    rows.push(DivisionStep {
        c,
        borrows,
        subtrahend: None,
    });
    Ok(GenericDivision {
        quotient_bits: quotient_bits.clone(),
        trace: DivisionTrace {
            dividend: a,
            divisor: x,
            gamma: steps,
            steps: rows,
            quotient_bits,
            exact: None,
        },
    })
}
