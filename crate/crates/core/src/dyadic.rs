//! Concrete 2-adic integers and lopsided division.
//!
//! A [`DyadicInt`] stores the low `width` bits of a dyadic expansion. In
//! exact mode every bit at or above `width` equals `tail`, so negative
//! rational integers appear as infinite two's complements (`-3 = ...11101`).
//! In truncated mode only the stored bits mean anything.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::trace::{DivisionStep, DivisionTrace};
use crate::Mode;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DyadicInt {
    words: Vec<u64>,
    width: usize,
    tail: bool,
    mode: Mode,
}

fn word_count(width: usize) -> usize {
    width.div_ceil(64).max(1)
}

impl DyadicInt {
    fn raw(width: usize, tail: bool, mode: Mode) -> DyadicInt {
        DyadicInt {
            words: vec![0; word_count(width)],
            width,
            tail,
            mode,
        }
    }

    /// Exact zero of the given width.
    pub fn zero(width: usize) -> DyadicInt {
        DyadicInt::raw(width, false, Mode::Exact)
    }

    /// Exact value, stored with at least `width` bits (more if needed).
    pub fn from_i128(value: i128, width: usize) -> DyadicInt {
        let needed = if value >= 0 {
            128 - value.leading_zeros() as usize
        } else {
            128 - value.leading_ones() as usize
        };
        let width = width.max(needed).max(1);
        let mut d = DyadicInt::raw(width, value < 0, Mode::Exact);
        for j in 0..width {
            let bit = if j < 128 { value >> j & 1 == 1 } else { value < 0 };
            d.set(j, bit);
        }
        d
    }

    /// Exact value with the minimal width that holds it.
    pub fn from_int(value: i128) -> DyadicInt {
        DyadicInt::from_i128(value, 1)
    }

    /// The residue `value mod 2^width`.
    pub fn truncated(value: u128, width: usize) -> DyadicInt {
        let mut d = DyadicInt::raw(width, false, Mode::Truncated);
        for j in 0..width.min(128) {
            d.set(j, value >> j & 1 == 1);
        }
        d
    }

    /// Builds a value from bits listed least significant first.
    pub fn from_bits(bits: &[bool], tail: bool, mode: Mode) -> DyadicInt {
        let mut d = DyadicInt::raw(bits.len(), tail && mode == Mode::Exact, mode);
        for (j, &b) in bits.iter().enumerate() {
            d.set(j, b);
        }
        d
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn tail(&self) -> bool {
        self.tail
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_exact(&self) -> bool {
        self.mode == Mode::Exact
    }

    /// Bit `j`; at or above the width this is the tail in exact mode and 0
    /// in truncated mode.
    pub fn bit(&self, j: usize) -> bool {
        if j >= self.width {
            return self.tail;
        }
        self.words[j / 64] >> (j % 64) & 1 == 1
    }

    fn set(&mut self, j: usize, value: bool) {
        let (w, b) = (j / 64, j % 64);
        if value {
            self.words[w] |= 1 << b;
        } else {
            self.words[w] &= !(1 << b);
        }
    }

    fn clear_padding(&mut self) {
        let used = self.width % 64;
        if used != 0 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << used) - 1;
        } else if self.width == 0 {
            self.words[0] = 0;
        }
    }

    pub fn is_odd(&self) -> bool {
        self.bit(0)
    }

    pub fn is_zero(&self) -> bool {
        !self.tail && self.words.iter().all(|&w| w == 0)
    }

    /// Positive rational integer: exact, non-negative tail, not zero.
    pub fn is_positive(&self) -> bool {
        self.is_exact() && !self.tail && !self.is_zero()
    }

    /// Same value stored at a different width.
    ///
    /// Exact values sign-extend and may only shrink while the dropped bits
    /// equal the tail; truncated values may only shrink.
    pub fn resized(&self, width: usize) -> Result<DyadicInt> {
        match self.mode {
            Mode::Exact => {
                if (width..self.width).any(|j| self.bit(j) != self.tail) {
                    return Err(Error::WidthExhausted {
                        needed: self.significant_width(),
                        width,
                    });
                }
            }
            Mode::Truncated => {
                if width > self.width {
                    return Err(Error::Truncated);
                }
            }
        }
        Ok(self.with_width(width, self.mode))
    }

    /// Low `width` bits as a residue modulo `2^width`.
    pub fn truncate(&self, width: usize) -> Result<DyadicInt> {
        if self.mode == Mode::Truncated && width > self.width {
            return Err(Error::Truncated);
        }
        Ok(self.with_width(width, Mode::Truncated))
    }

    fn with_width(&self, width: usize, mode: Mode) -> DyadicInt {
        let mut d = DyadicInt::raw(width, self.tail && mode == Mode::Exact, mode);
        for j in 0..width {
            d.set(j, self.bit(j));
        }
        d
    }

    /// Smallest width that still represents the value exactly.
    pub fn significant_width(&self) -> usize {
        let mut w = self.width;
        while w > 0 && self.bit(w - 1) == self.tail {
            w -= 1;
        }
        w
    }

    /// One plus the index of the highest set bit of a positive integer.
    pub fn lgth(&self) -> Result<usize> {
        if !self.is_positive() {
            return Err(if self.is_exact() {
                Error::NotPositive
            } else {
                Error::Truncated
            });
        }
        Ok(self.significant_width())
    }

    /// Two's complement value of an exact integer.
    pub fn to_i128(&self) -> Result<i128> {
        if !self.is_exact() {
            return Err(Error::Truncated);
        }
        let w = self.significant_width();
        if w >= 128 {
            return Err(Error::Overflow { width: w });
        }
        let mut v: i128 = if self.tail { -1 } else { 0 };
        for j in (0..w).rev() {
            v = (v << 1) | self.bit(j) as i128;
        }
        Ok(v)
    }

    /// The stored bits read as an unsigned residue modulo `2^width`.
    pub fn to_u128_mod(&self) -> Result<u128> {
        if self.width > 128 {
            return Err(Error::Overflow { width: self.width });
        }
        Ok((0..self.width).fold(0u128, |v, j| v | (self.bit(j) as u128) << j))
    }

    fn check_same_shape(&self, other: &DyadicInt) -> Result<()> {
        if self.width != other.width || self.mode != other.mode {
            return Err(Error::OutOfRange(format!(
                "operands differ in shape ({} {:?} vs {} {:?})",
                self.width, self.mode, other.width, other.mode
            )));
        }
        Ok(())
    }

    fn zip(&self, other: &DyadicInt, f: impl Fn(u64, u64) -> u64, tail: bool) -> DyadicInt {
        let mut out = DyadicInt {
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect(),
            width: self.width,
            tail: tail && self.mode == Mode::Exact,
            mode: self.mode,
        };
        out.clear_padding();
        out
    }

    pub fn xor(&self, other: &DyadicInt) -> Result<DyadicInt> {
        self.check_same_shape(other)?;
        Ok(self.zip(other, |a, b| a ^ b, self.tail ^ other.tail))
    }

    pub fn and(&self, other: &DyadicInt) -> Result<DyadicInt> {
        self.check_same_shape(other)?;
        Ok(self.zip(other, |a, b| a & b, self.tail & other.tail))
    }

    /// Bitwise complement `1 + a` in every position, including the tail.
    pub fn complement(&self) -> DyadicInt {
        let mut out = DyadicInt {
            words: self.words.iter().map(|w| !w).collect(),
            width: self.width,
            tail: !self.tail && self.mode == Mode::Exact,
            mode: self.mode,
        };
        out.clear_padding();
        out
    }

    /// `bit * a` in every position.
    pub fn gate(&self, bit: bool) -> DyadicInt {
        if bit {
            self.clone()
        } else {
            DyadicInt::raw(self.width, false, self.mode)
        }
    }

    /// Left shift by `k` at fixed width.
    ///
    /// Truncated values drop the high bits. Exact values fail if a dropped
    /// bit differs from the tail, since the result would no longer fit.
    pub fn shl(&self, k: usize) -> Result<DyadicInt> {
        if self.mode == Mode::Exact {
            let lo = self.width.saturating_sub(k);
            if (lo..self.width).any(|j| self.bit(j) != self.tail) {
                return Err(Error::WidthExhausted {
                    needed: self.significant_width() + k,
                    width: self.width,
                });
            }
        }
        let mut out = DyadicInt::raw(self.width, self.tail, self.mode);
        for j in k..self.width {
            out.set(j, self.bit(j - k));
        }
        Ok(out)
    }
}

/// `(sigma_1, sigma_2)` of three dyadic integers, bit by bit: the parity
/// `a + b + c` and the second elementary symmetric function
/// `ab + bc + ca` (the majority).
pub fn bitwise_sigma(a: &DyadicInt, b: &DyadicInt, c: &DyadicInt) -> Result<(DyadicInt, DyadicInt)> {
    a.check_same_shape(b)?;
    a.check_same_shape(c)?;
    let exact = a.mode == Mode::Exact;
    let mut s1 = DyadicInt::raw(a.width, exact && (a.tail ^ b.tail ^ c.tail), a.mode);
    let mut s2 = DyadicInt::raw(
        a.width,
        exact && ((a.tail & b.tail) ^ (b.tail & c.tail) ^ (c.tail & a.tail)),
        a.mode,
    );
    for w in 0..a.words.len() {
        let (x, y, z) = (a.words[w], b.words[w], c.words[w]);
        s1.words[w] = x ^ y ^ z;
        s2.words[w] = (x & y) ^ (y & z) ^ (z & x);
    }
    Ok((s1, s2))
}

/// Result of [`lopsided_divide`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    /// Quotient bits `c_0^(0) .. c_{steps-1}^(steps-1)` as a residue.
    pub quotient: DyadicInt,
    /// `c^(steps) == borrows^(steps)`: the remainder vanished.
    pub exact: bool,
    pub trace: DyadicTrace,
}

pub type DyadicTrace = DivisionTrace<DyadicInt, bool>;

/// Default working width for dividing `a`: room for the dividend, the
/// borrows that ripple past it, and one spare bit.
pub fn default_width(a: &DyadicInt) -> usize {
    2 * a.significant_width() + 2
}

/// Step count for testing exact divisibility: `1 + lgth(a) - lgth(b)`.
pub fn gamma(a: &DyadicInt, b: &DyadicInt) -> Result<usize> {
    let (la, lb) = (a.lgth()?, b.lgth()?);
    Ok((1 + la).saturating_sub(lb))
}

/// Lopsided division of `a` by odd `b` for `steps` steps.
///
/// Each step gates the shifted divisor by the current quotient bit and
/// subtracts it in borrow-save form:
/// `c' = sigma_1(c, borrows, t)`, `borrows' = S sigma_2(c*, borrows, t)`
/// with `t = c_i * S^i b`.
pub fn lopsided_divide(a: &DyadicInt, b: &DyadicInt, steps: usize) -> Result<Division> {
    lopsided_divide_with_width(a, b, steps, None)
}

pub fn lopsided_divide_with_width(
    a: &DyadicInt,
    b: &DyadicInt,
    steps: usize,
    width: Option<usize>,
) -> Result<Division> {
    if !a.is_exact() || !b.is_exact() {
        return Err(Error::Truncated);
    }
    if !b.is_odd() {
        return Err(Error::EvenDivisor);
    }
    let needed = steps + b.significant_width().max(1);
    let width = width.unwrap_or_else(|| default_width(a).max(needed + 1).max(a.width).max(b.width));
    if needed > width {
        return Err(Error::WidthExhausted { needed, width });
    }
    let trace = run(a.resized(width)?, b.resized(width)?, steps)?;
    let (c, borrows) = trace.last();
    let exact = c == borrows;
    let quotient = DyadicInt::from_bits(&trace.quotient_bits, false, Mode::Truncated);
    let mut trace = trace;
    trace.exact = Some(exact);
    Ok(Division { quotient, exact, trace })
}

/// Divides with the step count `max(1, 1 + lgth(a) - lgth(b))` and reports
/// whether `b` divides `a` exactly. Both operands must be positive.
pub fn divides_exactly(a: &DyadicInt, b: &DyadicInt) -> Result<Division> {
    let steps = gamma(a, b)?.max(1);
    lopsided_divide(a, b, steps)
}

fn run(a: DyadicInt, b: DyadicInt, steps: usize) -> Result<DyadicTrace> {
    let zero = DyadicInt::raw(a.width, false, a.mode);
    let mut c = a.clone();
    let mut borrows = zero.clone();
    let mut shifted = b.clone();
    let mut rows = Vec::with_capacity(steps + 1);
    let mut quotient_bits = Vec::with_capacity(steps);
    for i in 0..steps {
        if i > 0 {
            shifted = shifted.shl(1)?;
        }
        let q = c.bit(i);
        quotient_bits.push(q);
        let t = shifted.gate(q);
        let (s1, _) = bitwise_sigma(&c, &borrows, &t)?;
        let (_, s2) = bitwise_sigma(&c.complement(), &borrows, &t)?;
        let next_borrows = s2.shl(1)?;
        rows.push(DivisionStep {
            c: std::mem::replace(&mut c, s1),
            borrows: std::mem::replace(&mut borrows, next_borrows),
            subtrahend: Some(t),
        });
    }
    rows.push(DivisionStep {
        c,
        borrows,
        subtrahend: None,
    });
    Ok(DivisionTrace {
        dividend: a,
        divisor: b,
        gamma: steps,
        steps: rows,
        quotient_bits,
        exact: None,
    })
}

/// The inverse of odd `b` modulo `2^width`, by lopsided division of 1 by `b`.
pub fn dyadic_inverse(b: &DyadicInt, width: usize) -> Result<DyadicInt> {
    if !b.is_odd() {
        return Err(Error::EvenDivisor);
    }
    if width == 0 {
        return Err(Error::OutOfRange("inverse width must be positive".into()));
    }
    let b = b.truncate(width)?;
    let one = DyadicInt::truncated(1, width);
    let trace = run(one, b, width)?;
    Ok(DyadicInt::from_bits(&trace.quotient_bits, false, Mode::Truncated))
}

/// Exact values print as `...` followed by the tail bit and the stored bits,
/// most significant first (`-3` at width 4 is `...11101`). Truncated values
/// print the stored bits only.
impl fmt::Display for DyadicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "…{}", self.tail as u8)?;
        }
        for j in (0..self.width).rev() {
            f.write_str(if self.bit(j) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyadicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyadicInt({self})")
    }
}

impl FromStr for DyadicInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            what: "dyadic integer",
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (mode, digits) = match s.strip_prefix('…').or_else(|| s.strip_prefix("...")) {
            Some(rest) => (Mode::Exact, rest),
            None => (Mode::Truncated, s),
        };
        if !digits.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(err("expected binary digits"));
        }
        let mut bits: Vec<bool> = digits.bytes().rev().map(|b| b == b'1').collect();
        let tail = match mode {
            Mode::Exact => bits.pop().ok_or_else(|| err("missing tail bit"))?,
            Mode::Truncated => false,
        };
        Ok(DyadicInt::from_bits(&bits, tail, mode))
    }
}

impl Serialize for DyadicInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DyadicInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(v: i128) -> DyadicInt {
        DyadicInt::from_int(v)
    }

    /// Modular inverse of odd `b` mod `2^k` by the extended Euclidean algorithm.
    fn inverse_by_euclid(b: i128, k: u32) -> i128 {
        let m = 1i128 << k;
        let (mut r0, mut r1) = (m, b.rem_euclid(m));
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        assert_eq!(r0, 1);
        s0.rem_euclid(m)
    }

    #[test]
    fn two_complement_expansions() {
        let expected = [
            (5, "…00101"),
            (4, "…00100"),
            (3, "…00011"),
            (0, "…00000"),
            (-1, "…11111"),
            (-2, "…11110"),
            (-3, "…11101"),
            (-5, "…11011"),
        ];
        for (v, text) in expected {
            assert_eq!(DyadicInt::from_i128(v, 4).to_string(), text);
            let back: DyadicInt = text.parse().unwrap();
            assert_eq!(back.to_i128().unwrap(), v);
        }
    }

    #[test]
    fn lgth_examples() {
        assert_eq!(d(209).lgth().unwrap(), 8);
        assert_eq!(d(19).lgth().unwrap(), 5);
        assert_eq!(d(1).lgth().unwrap(), 1);
        assert_eq!(d(0).lgth(), Err(Error::NotPositive));
        assert_eq!(d(-4).lgth(), Err(Error::NotPositive));
        assert_eq!(DyadicInt::truncated(3, 4).lgth(), Err(Error::Truncated));
    }

    #[test]
    fn sigma_examples() {
        let ones = DyadicInt::truncated(0b111, 3);
        let (s1, s2) = bitwise_sigma(&ones, &ones, &ones).unwrap();
        assert_eq!((s1.to_u128_mod().unwrap(), s2.to_u128_mod().unwrap()), (7, 7));
        let a = DyadicInt::truncated(0b101, 3);
        let z = DyadicInt::truncated(0, 3);
        let (s1, s2) = bitwise_sigma(&a, &z, &z).unwrap();
        assert_eq!((s1, s2), (a.clone(), z.clone()));
        let (s1, s2) = bitwise_sigma(&ones, &ones, &z).unwrap();
        assert_eq!((s1.to_u128_mod().unwrap(), s2.to_u128_mod().unwrap()), (0, 7));
        assert!(bitwise_sigma(&ones, &DyadicInt::truncated(0, 4), &z).is_err());
    }

    #[test]
    fn divide_209_by_19_matches_tableau() {
        let div = divides_exactly(&d(209), &d(19)).unwrap();
        assert_eq!(div.trace.gamma, 4);
        assert!(div.exact);
        assert_eq!(div.quotient.to_u128_mod().unwrap(), 11);
        let t = &div.trace;
        // Each tableau row shows a five-bit window starting at bit i.
        let window = |v: &DyadicInt, lo: usize| (v.to_u128_mod().unwrap() >> lo) & 0b11111;
        assert_eq!(window(&t.steps[1].c, 0), 0b00010);
        assert_eq!(window(&t.steps[2].c, 1), 0b10000);
        assert_eq!(window(&t.steps[3].c, 2), 0b01010);
        assert_eq!(window(&t.steps[4].c, 3), 0b00100);
        assert_eq!(t.steps[1].borrows.to_u128_mod().unwrap(), 0b100);
        assert_eq!(t.steps[2].borrows.to_u128_mod().unwrap(), 0b1001000);
        assert_eq!(t.steps[3].borrows.to_u128_mod().unwrap(), 0b10000);
        assert_eq!(t.steps[4].borrows.to_u128_mod().unwrap(), 0b100000);
        let (c, b) = t.last();
        assert_eq!(c, b);
        assert_eq!(c.to_u128_mod().unwrap(), 0b100000);
    }

    #[test]
    fn divide_inexact_examples() {
        let div = divides_exactly(&d(209), &d(21)).unwrap();
        assert_eq!(div.trace.gamma, 4);
        assert!(!div.exact);
        assert_eq!(div.quotient.to_u128_mod().unwrap(), 0b1101);
        let div = divides_exactly(&d(209), &d(17)).unwrap();
        assert!(!div.exact);
        assert_eq!(div.quotient.to_u128_mod().unwrap(), 0b0001);
    }

    #[test]
    fn divide_513_by_27() {
        let div = divides_exactly(&d(513), &d(27)).unwrap();
        assert_eq!(div.trace.gamma, 6);
        assert!(div.exact);
        assert_eq!(div.quotient.to_u128_mod().unwrap(), 19);
    }

    #[test]
    fn divide_errors() {
        assert_eq!(lopsided_divide(&d(10), &d(4), 2).unwrap_err(), Error::EvenDivisor);
        assert!(matches!(
            lopsided_divide_with_width(&d(10), &d(3), 40, Some(16)),
            Err(Error::WidthExhausted { .. })
        ));
        assert_eq!(
            lopsided_divide(&DyadicInt::truncated(9, 8), &d(3), 2).unwrap_err(),
            Error::Truncated
        );
    }

    #[test]
    fn division_by_one_copies_the_dividend() {
        let div = lopsided_divide(&d(7), &d(1), 3).unwrap();
        assert!(div.exact);
        assert_eq!(div.quotient.to_u128_mod().unwrap(), 7);
    }

    #[test]
    fn negative_dividend_is_a_dyadic_quotient() {
        // -1/3 = ...0101010101 since 3 * ...01010101 = ...11111
        let div = lopsided_divide(&d(-1), &d(3), 6).unwrap();
        assert_eq!(div.quotient.to_u128_mod().unwrap(), 0b010101);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(dyadic_inverse(&d(1), 8).unwrap().to_u128_mod().unwrap(), 1);
        assert_eq!(inverse_by_euclid(3, 8), 171);
        assert_eq!(dyadic_inverse(&d(3), 8).unwrap().to_u128_mod().unwrap(), 171);
        let r = dyadic_inverse(&d(19), 8).unwrap().to_u128_mod().unwrap();
        assert_eq!(r as i128, inverse_by_euclid(19, 8));
        assert_eq!(19 * r % 256, 1);
        assert_eq!(dyadic_inverse(&d(6), 8).unwrap_err(), Error::EvenDivisor);
    }

    #[test]
    fn inverse_property_exhaustive() {
        for b in (1..512).step_by(2) {
            for width in 1..=20u32 {
                let r = dyadic_inverse(&d(b), width as usize).unwrap().to_u128_mod().unwrap();
                let m = 1u128 << width;
                assert_eq!((b as u128 * r) % m, 1 % m, "b={b} width={width}");
                assert_eq!(r as i128, inverse_by_euclid(b, width));
            }
        }
    }

    #[test]
    fn bits_beyond_64_survive_shifts() {
        let v = DyadicInt::from_i128(1 << 70 | 5, 80);
        let s = v.shl(3).unwrap();
        assert_eq!(s.to_i128().unwrap(), (1 << 73) | 40);
        assert!(DyadicInt::from_i128(1 << 79, 80).shl(1).is_err());
        assert_eq!(DyadicInt::from_i128(-1, 80).shl(2).unwrap().to_i128().unwrap(), -4);
    }

    proptest! {
        #[test]
        fn quotient_bits_are_a_stable_prefix(a in 1i128..5000, b in (0i128..200).prop_map(|k| 2 * k + 1), extra in 1usize..4) {
            let steps = gamma(&d(a), &d(b)).unwrap().max(1);
            let short = lopsided_divide(&d(a), &d(b), steps).unwrap();
            let long = lopsided_divide(&d(a), &d(b), steps + extra).unwrap();
            prop_assert_eq!(&long.trace.quotient_bits[..steps], &short.trace.quotient_bits[..]);
        }

        #[test]
        fn remainder_is_tracked_in_borrow_save_form(a in 1i128..5000, b in (0i128..200).prop_map(|k| 2 * k + 1)) {
            // c^(i) - borrows^(i) = a - q_{<i} * b at every step.
            let div = divides_exactly(&d(a), &d(b)).unwrap();
            let mut q = 0i128;
            for (i, step) in div.trace.steps.iter().enumerate() {
                let c = step.c.to_i128().unwrap();
                let borrows = step.borrows.to_i128().unwrap();
                prop_assert_eq!(c - borrows, a - q * b);
                if i < div.trace.quotient_bits.len() && div.trace.quotient_bits[i] {
                    q += 1 << i;
                }
            }
        }

        #[test]
        fn text_round_trip(v in any::<i64>(), w in 1usize..90) {
            let x = DyadicInt::from_i128(v as i128, w);
            let back: DyadicInt = x.to_string().parse().unwrap();
            prop_assert_eq!(&back, &x);
            let t = x.truncate(w).unwrap();
            prop_assert_eq!(t.to_string().parse::<DyadicInt>().unwrap(), t);
        }
    }
}
