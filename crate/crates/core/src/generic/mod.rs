//! Generic integers: binary expansions whose digits are Boolean expressions.
//!
//! Exact values hold `coeffs[0..width]` and a `tail` that repeats forever
//! above the width; truncated values are residues modulo `2^width`. Every
//! operation commutes with instantiation, so evaluating the result under an
//! assignment gives the same integer as evaluating the operands first.

mod division;
mod symmetric;
mod text;

use crate::boolring::{BoolExpr, Instantiation, VarSet};
use crate::dyadic::DyadicInt;
use crate::error::{Error, Result};
use crate::Mode;

pub use division::{g_lopsided_divide, g_lopsided_divide_with_width, GenericDivision, GenericTrace};
pub use symmetric::{g_mul_sym, hamming_weight_sym, sym_elementary, SymMatrix};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GenericInt {
    coeffs: Vec<BoolExpr>,
    tail: BoolExpr,
    mode: Mode,
}

impl GenericInt {
    /// Builds a value from coefficients listed least significant first.
    ///
    /// Exact values are normalised by dropping high coefficients equal to
    /// the tail; truncated values ignore `tail`.
    pub fn new(coeffs: Vec<BoolExpr>, tail: BoolExpr, mode: Mode) -> GenericInt {
        let mut g = match mode {
            Mode::Exact => GenericInt { coeffs, tail, mode },
            Mode::Truncated => GenericInt {
                coeffs,
                tail: BoolExpr::zero(),
                mode,
            },
        };
        g.normalize();
        g
    }

    pub fn exact(coeffs: Vec<BoolExpr>, tail: BoolExpr) -> GenericInt {
        GenericInt::new(coeffs, tail, Mode::Exact)
    }

    pub fn truncated(coeffs: Vec<BoolExpr>) -> GenericInt {
        GenericInt::new(coeffs, BoolExpr::zero(), Mode::Truncated)
    }

    pub fn zero() -> GenericInt {
        GenericInt::from_int(0)
    }

    pub fn one() -> GenericInt {
        GenericInt::from_int(1)
    }

    pub fn from_int(value: i128) -> GenericInt {
        GenericInt::from_dyadic(&DyadicInt::from_int(value))
    }

    /// `value mod 2^width` as a truncated constant.
    pub fn truncated_int(value: u128, width: usize) -> GenericInt {
        GenericInt::from_dyadic(&DyadicInt::truncated(value, width))
    }

    pub fn from_dyadic(d: &DyadicInt) -> GenericInt {
        let coeffs = (0..d.width()).map(|j| BoolExpr::constant(d.bit(j))).collect();
        GenericInt::new(coeffs, BoolExpr::constant(d.tail()), d.mode())
    }

    fn normalize(&mut self) {
        if self.mode == Mode::Exact {
            while self.coeffs.len() > 1 && self.coeffs.last() == Some(&self.tail) {
                self.coeffs.pop();
            }
            if self.coeffs.is_empty() {
                self.coeffs.push(self.tail.clone());
            }
        }
    }

    pub fn width(&self) -> usize {
        self.coeffs.len()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_exact(&self) -> bool {
        self.mode == Mode::Exact
    }

    pub fn tail(&self) -> &BoolExpr {
        &self.tail
    }

    /// Coefficients, least significant first.
    pub fn coeffs(&self) -> &[BoolExpr] {
        &self.coeffs
    }

    /// Coefficient of `2^j`; the tail above the width, or 0 when truncated.
    pub fn coeff(&self, j: usize) -> &BoolExpr {
        self.coeffs.get(j).unwrap_or(&self.tail)
    }

    pub fn vars(&self) -> VarSet {
        self.coeffs
            .iter()
            .chain(std::iter::once(&self.tail))
            .fold(VarSet::EMPTY, |acc, c| acc.union(c.vars()))
    }

    /// Total number of ANF terms over all coefficients and the tail.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().map(BoolExpr::num_terms).sum::<usize>() + self.tail.num_terms()
    }

    /// Coefficients `0..width`, sign-extending exact values.
    fn extended(&self, width: usize) -> Vec<BoolExpr> {
        (0..width).map(|j| self.coeff(j).clone()).collect()
    }

    /// The same value stored at `width` coefficients without normalising.
    /// Exact values sign-extend; shrinking fails unless the dropped
    /// coefficients equal the tail. Truncated values may only shrink.
    pub fn resized(&self, width: usize) -> Result<GenericInt> {
        match self.mode {
            Mode::Exact => {
                if self.coeffs.len() > width {
                    return Err(Error::WidthExhausted {
                        needed: self.coeffs.len(),
                        width,
                    });
                }
            }
            Mode::Truncated => {
                if width > self.coeffs.len() {
                    return Err(Error::Truncated);
                }
            }
        }
        Ok(GenericInt {
            coeffs: self.extended(width),
            tail: self.tail.clone(),
            mode: self.mode,
        })
    }

    /// Residue modulo `2^width`.
    pub fn truncate(&self, width: usize) -> Result<GenericInt> {
        if self.mode == Mode::Truncated && width > self.coeffs.len() {
            return Err(Error::Truncated);
        }
        Ok(GenericInt::truncated(self.extended(width)))
    }

    /// Common width and mode for a binary operation: truncated at the
    /// smallest truncated width if either side is truncated, otherwise exact
    /// at `max(widths) + extra`. The stored width excludes the sign, so an
    /// exact value of width `w` lies in `[-2^w, 2^w)`.
    fn shape(&self, other: &GenericInt, extra: usize) -> (usize, Mode) {
        match (self.mode, other.mode) {
            (Mode::Exact, Mode::Exact) => (self.width().max(other.width()) + extra, Mode::Exact),
            (Mode::Truncated, Mode::Truncated) => (self.width().min(other.width()), Mode::Truncated),
            (Mode::Truncated, Mode::Exact) => (self.width(), Mode::Truncated),
            (Mode::Exact, Mode::Truncated) => (other.width(), Mode::Truncated),
        }
    }

    fn zip(&self, other: &GenericInt, f: impl Fn(&BoolExpr, &BoolExpr) -> BoolExpr) -> GenericInt {
        let (width, mode) = self.shape(other, 0);
        let coeffs = (0..width).map(|j| f(self.coeff(j), other.coeff(j))).collect();
        GenericInt::new(coeffs, f(&self.tail, &other.tail), mode)
    }

    pub fn xor(&self, other: &GenericInt) -> GenericInt {
        self.zip(other, BoolExpr::add)
    }

    pub fn and(&self, other: &GenericInt) -> GenericInt {
        self.zip(other, BoolExpr::mul)
    }

    /// `1 + a_j` at every position, including the tail.
    pub fn complement(&self) -> GenericInt {
        let coeffs = self.coeffs.iter().map(BoolExpr::complement).collect();
        GenericInt::new(coeffs, self.tail.complement(), self.mode)
    }

    /// The scalar product `alpha * a`, taken at every position.
    pub fn scalar(&self, alpha: &BoolExpr) -> GenericInt {
        let coeffs = self.coeffs.iter().map(|c| alpha.mul(c)).collect();
        GenericInt::new(coeffs, alpha.mul(&self.tail), self.mode)
    }

    /// `S^k a`. Exact values grow by `k` coefficients; truncated values drop
    /// the top `k`.
    pub fn shl(&self, k: usize) -> GenericInt {
        let width = match self.mode {
            Mode::Exact => self.width() + k,
            Mode::Truncated => self.width(),
        };
        let coeffs = (0..width)
            .map(|j| {
                if j < k {
                    BoolExpr::zero()
                } else {
                    self.coeff(j - k).clone()
                }
            })
            .collect();
        GenericInt::new(coeffs, self.tail.clone(), self.mode)
    }

    /// `S^k a` at a fixed width. Exact values fail when a coefficient that
    /// differs from the tail would be pushed out.
    pub fn shl_within(&self, k: usize, width: usize) -> Result<GenericInt> {
        if self.mode == Mode::Exact {
            let lo = width.saturating_sub(k);
            if (lo..self.width().max(width)).any(|j| self.coeff(j) != &self.tail) {
                return Err(Error::WidthExhausted {
                    needed: self.width() + k,
                    width,
                });
            }
        }
        let coeffs = (0..width)
            .map(|j| {
                if j < k {
                    BoolExpr::zero()
                } else {
                    self.coeff(j - k).clone()
                }
            })
            .collect();
        Ok(GenericInt {
            coeffs,
            tail: self.tail.clone(),
            mode: self.mode,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.tail.is_zero() && self.coeffs.iter().all(BoolExpr::is_zero)
    }

    /// Componentwise `(sigma_1, sigma_2)` of three generic integers.
    pub fn sigma12(u: &GenericInt, v: &GenericInt, w: &GenericInt) -> (GenericInt, GenericInt) {
        let (width, mode) = shape_of(&[u, v, w]);
        let s1 = |a: &BoolExpr, b: &BoolExpr, c: &BoolExpr| a.add(b).add(c);
        let s2 = |a: &BoolExpr, b: &BoolExpr, c: &BoolExpr| a.mul(b).add(&b.mul(c)).add(&c.mul(a));
        let at = |j: usize| (u.coeff(j), v.coeff(j), w.coeff(j));
        let (mut c1, mut c2) = (Vec::with_capacity(width), Vec::with_capacity(width));
        for j in 0..width {
            let (a, b, c) = at(j);
            c1.push(s1(a, b, c));
            c2.push(s2(a, b, c));
        }
        (
            GenericInt::new(c1, s1(&u.tail, &v.tail, &w.tail), mode),
            GenericInt::new(c2, s2(&u.tail, &v.tail, &w.tail), mode),
        )
    }

    pub fn add(&self, other: &GenericInt) -> Result<GenericInt> {
        let (width, mode) = self.shape(other, 2);
        a_fixpoint(self.extended(width), other.extended(width), mode)
    }

    /// `-a` as the fixpoint of the carry iteration started at `(a*, 1)`.
    pub fn negate(&self) -> Result<GenericInt> {
        let width = match self.mode {
            Mode::Exact => self.width() + 2,
            Mode::Truncated => self.width(),
        };
        let mut one = vec![BoolExpr::zero(); width];
        if width > 0 {
            one[0] = BoolExpr::one();
        }
        a_fixpoint(self.complement().extended(width), one, self.mode)
    }

    /// `a - b` as the fixpoint of the carry iteration started at
    /// `(a + b* + 1, S(a b* + a_0 + b_0*))`, the carry-save form of
    /// `a + b* + 1`.
    pub fn sub(&self, other: &GenericInt) -> Result<GenericInt> {
        let (width, mode) = self.shape(other, 2);
        let a = self.extended(width);
        let b_star: Vec<BoolExpr> = other.extended(width).iter().map(BoolExpr::complement).collect();
        let mut c: Vec<BoolExpr> = a.iter().zip(&b_star).map(|(x, y)| x.add(y)).collect();
        let mut pre: Vec<BoolExpr> = a.iter().zip(&b_star).map(|(x, y)| x.mul(y)).collect();
        if width > 0 {
            c[0] = c[0].complement();
            pre[0] = pre[0].add(&a[0]).add(&b_star[0]);
        }
        a_fixpoint(c, shift_vec(&pre), mode)
    }

    /// `a * b = sum_i b_i * S^i a`.
    pub fn mul(&self, other: &GenericInt) -> Result<GenericInt> {
        let (width, mode) = match (self.mode, other.mode) {
            (Mode::Exact, Mode::Exact) => (self.width() + other.width() + 2, Mode::Exact),
            _ => self.shape(other, 0),
        };
        let a = self.extended(width);
        let mut acc = vec![BoolExpr::zero(); width];
        for i in 0..width {
            let bi = other.coeff(i);
            if bi.is_zero() {
                continue;
            }
            let term: Vec<BoolExpr> = (0..width)
                .map(|j| if j < i { BoolExpr::zero() } else { bi.mul(&a[j - i]) })
                .collect();
            acc = a_fixpoint(acc, term, Mode::Truncated)?.coeffs;
            acc.resize(width, BoolExpr::zero());
        }
        Ok(finish(acc, mode))
    }

    /// `(u = v)`: the product of `1 + u_j + v_j` over all positions and the
    /// tails. True under an instantiation exactly when both sides agree.
    pub fn equiv(&self, other: &GenericInt) -> Result<BoolExpr> {
        if !self.is_exact() || !other.is_exact() {
            return Err(Error::Truncated);
        }
        let width = self.width().max(other.width());
        let mut e = self.tail.add(&other.tail).complement();
        for j in 0..width {
            if e.is_zero() {
                break;
            }
            e = e.mul(&self.coeff(j).add(other.coeff(j)).complement());
        }
        Ok(e)
    }

    /// `(u = v)` restricted to positions `range`; usable on truncated values.
    pub fn equiv_window(&self, other: &GenericInt, range: std::ops::Range<usize>) -> BoolExpr {
        let mut e = BoolExpr::one();
        for j in range {
            if e.is_zero() {
                break;
            }
            e = e.mul(&self.coeff(j).add(other.coeff(j)).complement());
        }
        e
    }

    /// `Phi(a)` as a two's complement integer.
    pub fn instantiate(&self, phi: &Instantiation) -> Result<i128> {
        if !self.is_exact() {
            return Err(Error::Truncated);
        }
        self.to_dyadic(phi).to_i128()
    }

    /// `Phi(a) mod 2^width`.
    pub fn instantiate_mod(&self, phi: &Instantiation) -> Result<u128> {
        self.to_dyadic(phi).to_u128_mod()
    }

    /// Evaluates every coefficient, keeping width and mode.
    pub fn to_dyadic(&self, phi: &Instantiation) -> DyadicInt {
        let bits: Vec<bool> = self.coeffs.iter().map(|c| c.evaluate(phi)).collect();
        DyadicInt::from_bits(&bits, self.tail.evaluate(phi), self.mode)
    }

    /// Replaces `x_i` by a constant in every coefficient.
    pub fn substitute(&self, i: usize, value: bool) -> GenericInt {
        let coeffs = self.coeffs.iter().map(|c| c.substitute(i, value)).collect();
        GenericInt::new(coeffs, self.tail.substitute(i, value), self.mode)
    }

    /// Whether both sides instantiate to the same value everywhere.
    pub fn semantically_eq(&self, other: &GenericInt) -> bool {
        if self.mode != other.mode {
            return false;
        }
        match self.mode {
            Mode::Exact => self.equiv(other).map(|e| e.is_one()).unwrap_or(false),
            Mode::Truncated => self.width() == other.width() && self == other,
        }
    }
}

/// Shape shared by several operands: exact at the largest width when all
/// are exact, otherwise truncated at the smallest truncated width.
fn shape_of(items: &[&GenericInt]) -> (usize, Mode) {
    let truncated = items.iter().filter(|g| !g.is_exact()).map(|g| g.width()).min();
    match truncated {
        Some(w) => (w, Mode::Truncated),
        None => (items.iter().map(|g| g.width()).max().unwrap_or(1), Mode::Exact),
    }
}

fn shift_vec(v: &[BoolExpr]) -> Vec<BoolExpr> {
    let mut out = Vec::with_capacity(v.len());
    if !v.is_empty() {
        out.push(BoolExpr::zero());
        out.extend(v[..v.len() - 1].iter().cloned());
    }
    out
}

/// Iterates `(c, carries) -> (c + carries, S(c * carries))` modulo
/// `2^width` until the carries vanish.
fn a_fixpoint(mut c: Vec<BoolExpr>, mut carries: Vec<BoolExpr>, mode: Mode) -> Result<GenericInt> {
    debug_assert_eq!(c.len(), carries.len());
    let width = c.len();
    let mut iterations = 0;
    while carries.iter().any(|x| !x.is_zero()) {
        if iterations > width + 1 {
            return Err(Error::NoConvergence { iterations });
        }
        let next: Vec<BoolExpr> = c.iter().zip(&carries).map(|(a, b)| a.mul(b)).collect();
        for (a, b) in c.iter_mut().zip(&carries) {
            *a = a.add(b);
        }
        carries = shift_vec(&next);
        iterations += 1;
    }
    Ok(finish(c, mode))
}

/// Reads a fixed-width two's complement result back as a generic integer.
fn finish(c: Vec<BoolExpr>, mode: Mode) -> GenericInt {
    match mode {
        Mode::Exact => {
            let tail = c.last().cloned().unwrap_or_default();
            GenericInt::exact(c, tail)
        }
        Mode::Truncated => GenericInt::truncated(c),
    }
}
