//! Multiplication through elementary symmetric functions.
//!
//! The partial products `a_{j-i} b_i` are laid out in a staircase matrix,
//! one row per multiplier bit. The map `Omega` replaces each column by its
//! symmetric functions `sigma_1, sigma_2, sigma_4, ...`, putting
//! `sigma_{2^r}` of column `j` into row `r`, column `j + r`. Since the weight
//! of a column equals `sum_r sigma_{2^r} 2^r`, this keeps the value of the
//! matrix fixed while the column heights shrink, until only the first row
//! is left.

use super::GenericInt;
use crate::boolring::BoolExpr;
use crate::error::{Error, Result};

/// Elementary symmetric functions `sigma_0 ..= sigma_kmax` of `items`.
fn elementary_upto(items: &[&BoolExpr], kmax: usize) -> Vec<BoolExpr> {
    let mut e = vec![BoolExpr::zero(); kmax + 1];
    e[0] = BoolExpr::one();
    for (n, item) in items.iter().enumerate() {
        for k in (1..=kmax.min(n + 1)).rev() {
            let t = item.mul(&e[k - 1]);
            e[k] = e[k].add(&t);
        }
    }
    e
}

/// `sigma_k(items)`, the sum of all products of `k` distinct items.
pub fn sym_elementary(k: usize, items: &[BoolExpr]) -> Result<BoolExpr> {
    if k == 0 || k > items.len() {
        return Err(Error::OutOfRange(format!("sigma_{k} needs 1 <= k <= {}", items.len())));
    }
    let refs: Vec<&BoolExpr> = items.iter().collect();
    Ok(elementary_upto(&refs, k).swap_remove(k))
}

/// Hamming weight as `sum_j sigma_{2^j}(s) 2^j` with each `sigma` evaluated
/// over F2, for `j = 0 ..= floor(lg m)`.
pub fn hamming_weight_sym(s: &[bool]) -> u64 {
    if s.is_empty() {
        return 0;
    }
    let top = usize::BITS - 1 - s.len().leading_zeros();
    let kmax = 1usize << top;
    let mut e = vec![false; kmax + 1];
    e[0] = true;
    for (n, &bit) in s.iter().enumerate() {
        for k in (1..=kmax.min(n + 1)).rev() {
            e[k] ^= bit & e[k - 1];
        }
    }
    (0..=top).map(|j| (e[1 << j] as u64) << j).sum()
}

/// Staircase matrix of Boolean expressions, `rows[i][j] == 0` for `i > j`,
/// truncated to `width` columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    width: usize,
    rows: Vec<Vec<BoolExpr>>,
}

impl SymMatrix {
    /// `M_0` with entries `a_{j-i} b_i`.
    pub fn partial_products(a: &GenericInt, b: &GenericInt, width: usize) -> SymMatrix {
        let rows = (0..width)
            .map(|i| {
                (0..width)
                    .map(|j| {
                        if j < i {
                            BoolExpr::zero()
                        } else {
                            a.coeff(j - i).mul(b.coeff(i))
                        }
                    })
                    .collect()
            })
            .collect();
        let mut m = SymMatrix { width, rows };
        m.trim();
        m
    }

    fn trim(&mut self) {
        while self.rows.len() > 1 && self.rows.last().is_some_and(|r| r.iter().all(BoolExpr::is_zero)) {
            self.rows.pop();
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[Vec<BoolExpr>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &BoolExpr {
        &self.rows[i][j]
    }

    /// Whether every row other than the first is zero.
    pub fn is_converged(&self) -> bool {
        self.rows.iter().skip(1).all(|r| r.iter().all(BoolExpr::is_zero))
    }

    pub fn first_row(&self) -> &[BoolExpr] {
        &self.rows[0]
    }

    pub fn omega(&self) -> SymMatrix {
        let mut rows: Vec<Vec<BoolExpr>> = vec![vec![BoolExpr::zero(); self.width]];
        for j in 0..self.width {
            let column: Vec<&BoolExpr> = self.rows.iter().map(|r| &r[j]).filter(|e| !e.is_zero()).collect();
            if column.is_empty() {
                continue;
            }
            let top = (usize::BITS - 1 - column.len().leading_zeros()) as usize;
            let sigma = elementary_upto(&column, 1 << top);
            for r in 0..=top {
                if j + r >= self.width {
                    break;
                }
                let s = &sigma[1 << r];
                if s.is_zero() {
                    continue;
                }
                while rows.len() <= r {
                    rows.push(vec![BoolExpr::zero(); self.width]);
                }
                rows[r][j + r] = s.clone();
            }
        }
        let mut m = SymMatrix {
            width: self.width,
            rows,
        };
        m.trim();
        m
    }
}

/// `a * b` read off the first row of `Omega^k(M_0)` once the other rows vanish.
///
/// Both operands must be exact and non-negative (zero tail).
pub fn g_mul_sym(a: &GenericInt, b: &GenericInt) -> Result<GenericInt> {
    if !a.is_exact() || !b.is_exact() {
        return Err(Error::Truncated);
    }
    if !a.tail().is_zero() || !b.tail().is_zero() {
        return Err(Error::NotPositive);
    }
    let width = a.width() + b.width();
    let mut m = SymMatrix::partial_products(a, b, width);
    let limit = 2 * width + 2;
    let mut iterations = 0;
    while !m.is_converged() {
        if iterations >= limit {
            return Err(Error::NoConvergence { iterations });
        }
        m = m.omega();
        iterations += 1;
    }
    Ok(GenericInt::exact(m.first_row().to_vec(), BoolExpr::zero()))
}
