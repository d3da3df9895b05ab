//! The free Boolean ring `B<x0, ..., x63>` in algebraic normal form.
//!
//! An element is stored as its canonical expression: a strictly ascending
//! list of distinct terms, where a term is a product of distinct variables
//! and the empty product is `1`. Because the form is canonical, structural
//! equality is ring equality.

mod dense;
mod text;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Not};

use crate::error::{Error, Result};

/// Number of variables a term can mention.
pub const MAX_VARS: usize = 64;

/// Default cap on the number of variables enumerated by [`BoolExpr::count_solutions`].
pub const COUNT_THRESHOLD: usize = 24;

/// A product of distinct variables, stored as a bit set of variable indices.
///
/// Terms are ordered lexicographically on their ascending index sequences,
/// so the constant term `1` is the smallest and `x1 < x1*x2 < x1*x3 < x2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Term(u64);

impl Term {
    pub const ONE: Term = Term(0);

    /// The single-variable term `x_i`. Panics if `i >= MAX_VARS`.
    pub fn var(i: usize) -> Term {
        assert!(i < MAX_VARS, "variable index {i} out of range");
        Term(1 << i)
    }

    pub fn from_vars<I: IntoIterator<Item = usize>>(vars: I) -> Term {
        vars.into_iter().fold(Term::ONE, |t, i| t * Term::var(i))
    }

    pub fn from_mask(mask: u64) -> Term {
        Term(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn vars(self) -> VarIter {
        VarIter(self.0)
    }

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_VARS && self.0 >> i & 1 == 1
    }
}

impl Mul for Term {
    type Output = Term;
    // idempotent: x*x = x
    fn mul(self, rhs: Term) -> Term {
        Term(self.0 | rhs.0)
    }
}

fn lex_cmp(a: u64, b: u64) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let diff = a ^ b;
    let low = diff & diff.wrapping_neg();
    let above = !(low.wrapping_shl(1).wrapping_sub(1)) & !low;
    // The sequence holding the lowest differing index is smaller unless the
    // other sequence ends right there.
    let (owner_is_a, other) = if a & low != 0 { (true, b) } else { (false, a) };
    let owner_smaller = other & above != 0;
    match (owner_is_a, owner_smaller) {
        (true, true) | (false, false) => Ordering::Less,
        _ => Ordering::Greater,
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp(self.0, other.0)
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Ascending iterator over the indices in a variable bit set.
#[derive(Clone)]
pub struct VarIter(u64);

impl Iterator for VarIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VarIter {}

/// A set of variable indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Debug)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn from_mask(mask: u64) -> VarSet {
        VarSet(mask)
    }

    /// Variables `lo..hi`.
    pub fn range(lo: usize, hi: usize) -> VarSet {
        assert!(hi <= MAX_VARS);
        (lo..hi).fold(VarSet::EMPTY, |s, i| s.with(i))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn with(self, i: usize) -> VarSet {
        assert!(i < MAX_VARS, "variable index {i} out of range");
        VarSet(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> VarSet {
        if i < MAX_VARS {
            VarSet(self.0 & !(1 << i))
        } else {
            self
        }
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_VARS && self.0 >> i & 1 == 1
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn difference(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> VarIter {
        VarIter(self.0)
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VarSet::EMPTY, VarSet::with)
    }
}

/// Which cofactor to test in [`BoolExpr::cofactor_is_zero`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    /// `x_i * e`
    Pos,
    /// `(1 + x_i) * e`
    Neg,
}

/// A total assignment of `nvars` variables to bits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Instantiation {
    bits: u64,
    nvars: usize,
}

impl Instantiation {
    /// All variables set to 0.
    pub fn zeros(nvars: usize) -> Instantiation {
        assert!(nvars <= MAX_VARS);
        Instantiation { bits: 0, nvars }
    }

    /// Bit `i` of `bits` is the value of `x_i`.
    pub fn from_bits(nvars: usize, bits: u64) -> Instantiation {
        assert!(nvars <= MAX_VARS);
        let keep = if nvars == MAX_VARS {
            u64::MAX
        } else {
            (1u64 << nvars) - 1
        };
        Instantiation {
            bits: bits & keep,
            nvars,
        }
    }

    pub fn from_pairs(nvars: usize, pairs: &[(usize, bool)]) -> Instantiation {
        pairs
            .iter()
            .fold(Instantiation::zeros(nvars), |phi, &(i, v)| phi.with(i, v))
    }

    /// Every assignment of `nvars` variables, in increasing order of `bits`.
    pub fn all(nvars: usize) -> impl Iterator<Item = Instantiation> {
        assert!(nvars < MAX_VARS);
        (0..1u64 << nvars).map(move |bits| Instantiation { bits, nvars })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.nvars, "instantiation is not defined on x{i}");
        self.bits >> i & 1 == 1
    }

    pub fn with(mut self, i: usize, value: bool) -> Instantiation {
        assert!(i < self.nvars, "instantiation is not defined on x{i}");
        if value {
            self.bits |= 1 << i;
        } else {
            self.bits &= !(1 << i);
        }
        self
    }

    fn domain(&self) -> u64 {
        if self.nvars == MAX_VARS {
            u64::MAX
        } else {
            (1u64 << self.nvars) - 1
        }
    }
}

/// An element of the free Boolean ring in canonical algebraic normal form.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BoolExpr {
    terms: Vec<Term>,
}

impl BoolExpr {
    pub fn zero() -> BoolExpr {
        BoolExpr { terms: Vec::new() }
    }

    pub fn one() -> BoolExpr {
        BoolExpr { terms: vec![Term::ONE] }
    }

    pub fn constant(bit: bool) -> BoolExpr {
        if bit {
            BoolExpr::one()
        } else {
            BoolExpr::zero()
        }
    }

    pub fn var(i: usize) -> BoolExpr {
        BoolExpr::term(Term::var(i))
    }

    pub fn term(t: Term) -> BoolExpr {
        BoolExpr { terms: vec![t] }
    }

    /// Sums the given terms; repeated terms cancel in pairs.
    pub fn from_terms<I: IntoIterator<Item = Term>>(terms: I) -> BoolExpr {
        BoolExpr::from_masks(terms.into_iter().map(Term::mask).collect())
    }

    fn from_masks(mut masks: Vec<u64>) -> BoolExpr {
        masks.sort_unstable_by(|a, b| lex_cmp(*a, *b));
        let mut terms = Vec::with_capacity(masks.len());
        let mut i = 0;
        while i < masks.len() {
            let mut j = i + 1;
            while j < masks.len() && masks[j] == masks[i] {
                j += 1;
            }
            if (j - i) % 2 == 1 {
                terms.push(Term(masks[i]));
            }
            i = j;
        }
        BoolExpr { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0] == Term::ONE
    }

    /// `Some(bit)` when the expression is a constant.
    pub fn as_constant(&self) -> Option<bool> {
        match self.terms.as_slice() {
            [] => Some(false),
            [t] if *t == Term::ONE => Some(true),
            _ => None,
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.degree()).max().unwrap_or(0)
    }

    /// The variables appearing in the canonical expression.
    pub fn vars(&self) -> VarSet {
        VarSet(self.terms.iter().fold(0, |m, t| m | t.0))
    }

    /// Exclusive or: the symmetric difference of the term sets.
    pub fn add(&self, other: &BoolExpr) -> BoolExpr {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        BoolExpr { terms: out }
    }

    /// Logical and.
    pub fn mul(&self, other: &BoolExpr) -> BoolExpr {
        if self.is_zero() || other.is_zero() {
            return BoolExpr::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() || self == other {
            return self.clone();
        }
        let support = self.vars().union(other.vars());
        let n = support.len();
        let sparse_cost = self.terms.len() * other.terms.len();
        if n <= dense::MAX_DENSE_VARS {
            let dense_cost = (n + 4) * dense::words_for(n) * 2 + self.terms.len() + other.terms.len();
            if dense_cost < sparse_cost {
                return self.mul_dense(other, support);
            }
        }
        let mut masks = Vec::with_capacity(sparse_cost);
        for a in &self.terms {
            for b in &other.terms {
                masks.push(a.0 | b.0);
            }
        }
        BoolExpr::from_masks(masks)
    }

    fn mul_dense(&self, other: &BoolExpr, support: VarSet) -> BoolExpr {
        let s = dense::Support::new(support.mask());
        let n = s.len();
        let mut ta = s.table(self.terms.iter().map(|t| t.0));
        let mut tb = s.table(other.terms.iter().map(|t| t.0));
        dense::moebius(&mut ta, n);
        dense::moebius(&mut tb, n);
        for (a, b) in ta.iter_mut().zip(&tb) {
            *a &= *b;
        }
        dense::moebius(&mut ta, n);
        let mut masks = s.terms(&ta);
        masks.sort_unstable_by(|a, b| lex_cmp(*a, *b));
        BoolExpr {
            terms: masks.into_iter().map(Term).collect(),
        }
    }

    /// `1 + self`.
    pub fn complement(&self) -> BoolExpr {
        self.add(&BoolExpr::one())
    }

    /// Product of all items; the empty product is `1`.
    pub fn product<'a, I: IntoIterator<Item = &'a BoolExpr>>(items: I) -> BoolExpr {
        let mut acc = BoolExpr::one();
        for e in items {
            if acc.is_zero() {
                break;
            }
            acc = acc.mul(e);
        }
        acc
    }

    /// Sum of all items; the empty sum is `0`.
    pub fn sum<'a, I: IntoIterator<Item = &'a BoolExpr>>(items: I) -> BoolExpr {
        items.into_iter().fold(BoolExpr::zero(), |acc, e| acc.add(e))
    }

    pub fn evaluate(&self, phi: &Instantiation) -> bool {
        assert!(
            self.vars().0 & !phi.domain() == 0,
            "instantiation over {} variables does not cover {}",
            phi.nvars,
            self
        );
        self.terms.iter().fold(false, |acc, t| acc ^ (t.0 & !phi.bits == 0))
    }

    /// Replaces `x_i` by a constant.
    pub fn substitute(&self, i: usize, value: bool) -> BoolExpr {
        if !self.vars().contains(i) {
            return self.clone();
        }
        let bit = 1u64 << i;
        if value {
            BoolExpr::from_masks(self.terms.iter().map(|t| t.0 & !bit).collect())
        } else {
            // Dropping terms keeps the remaining order intact.
            BoolExpr {
                terms: self.terms.iter().copied().filter(|t| t.0 & bit == 0).collect(),
            }
        }
    }

    /// Applies every assignment of `phi` restricted to the variables in `which`.
    pub fn substitute_all(&self, which: VarSet, phi: &Instantiation) -> BoolExpr {
        which.iter().fold(self.clone(), |e, i| e.substitute(i, phi.get(i)))
    }

    /// Whether `x_i * self` (`Pos`) or `(1 + x_i) * self` (`Neg`) vanishes.
    ///
    /// A vanishing positive cofactor forces `x_i = 0` in every solution of
    /// `self = 1`; a vanishing negative cofactor forces `x_i = 1`.
    pub fn cofactor_is_zero(&self, i: usize, polarity: Polarity) -> bool {
        match polarity {
            Polarity::Pos => self.substitute(i, true).is_zero(),
            Polarity::Neg => self.substitute(i, false).is_zero(),
        }
    }

    /// Number of assignments of `universe` that make the expression 1.
    pub fn count_solutions(&self, universe: VarSet) -> Result<u128> {
        self.count_solutions_with_threshold(universe, COUNT_THRESHOLD)
    }

    pub fn count_solutions_with_threshold(&self, universe: VarSet, threshold: usize) -> Result<u128> {
        let vars = self.vars();
        if !vars.is_subset(universe) {
            let stray = vars.difference(universe).iter().next().unwrap_or(0);
            return Err(Error::OutOfRange(format!(
                "x{stray} appears in the expression but not in the universe"
            )));
        }
        let n = vars.len();
        if n > threshold.min(dense::MAX_DENSE_VARS) {
            return Err(Error::EnumerationLimit {
                vars: n,
                threshold: threshold.min(dense::MAX_DENSE_VARS),
            });
        }
        let ones = self.truth_table_popcount(vars);
        Ok((ones as u128) << (universe.len() - n))
    }

    fn truth_table_popcount(&self, support: VarSet) -> u64 {
        let s = dense::Support::new(support.mask());
        let mut t = s.table(self.terms.iter().map(|t| t.0));
        dense::moebius(&mut t, s.len());
        t.iter().map(|w| w.count_ones() as u64).sum()
    }
}

impl Add for &BoolExpr {
    type Output = BoolExpr;
    fn add(self, rhs: &BoolExpr) -> BoolExpr {
        BoolExpr::add(self, rhs)
    }
}

impl AddAssign<&BoolExpr> for BoolExpr {
    fn add_assign(&mut self, rhs: &BoolExpr) {
        *self = BoolExpr::add(self, rhs);
    }
}

impl Mul for &BoolExpr {
    type Output = BoolExpr;
    fn mul(self, rhs: &BoolExpr) -> BoolExpr {
        BoolExpr::mul(self, rhs)
    }
}

impl MulAssign<&BoolExpr> for BoolExpr {
    fn mul_assign(&mut self, rhs: &BoolExpr) {
        *self = BoolExpr::mul(self, rhs);
    }
}

impl Not for &BoolExpr {
    type Output = BoolExpr;
    fn not(self) -> BoolExpr {
        self.complement()
    }
}

impl From<bool> for BoolExpr {
    fn from(bit: bool) -> Self {
        BoolExpr::constant(bit)
    }
}
