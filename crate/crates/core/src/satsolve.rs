//! Solving scarcely satisfiable equations `e = 1`.
//!
//! Variables outside `e` are free (step 1). A variable whose negative
//! cofactor vanishes must be 1 in every solution, one whose positive cofactor
//! vanishes must be 0 (steps 2 and 3); these are substituted until nothing
//! new is forced. The remaining variables are enumerated exhaustively under
//! a budget (step 4).

use std::collections::BTreeMap;

use crate::boolring::{BoolExpr, Instantiation, Polarity, VarSet, MAX_VARS};
use crate::error::{Error, Result};

/// Default step-4 budget, in assignments.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    /// Satisfying assignments over the universe, ordered lexicographically
    /// by `(x_lo, ..., x_hi)` with the lowest index compared first.
    pub solutions: Vec<Instantiation>,
    pub universe: VarSet,
    pub forced: BTreeMap<usize, bool>,
    /// Universe variables absent from `e`.
    pub free_unmentioned: VarSet,
    /// Variables enumerated in step 4.
    pub residual: VarSet,
    pub mu: usize,
    pub budget_used: u64,
    /// The budget ran out before step 4 finished; `solutions` is partial.
    pub exhausted: bool,
    pub scarce: bool,
}

/// Whether `e = 1` has at least one but fewer than `|vars(e)|` solutions
/// over the variables of `e`.
///
/// Expressions too wide to count are reported as not scarce.
pub fn is_scarce(e: &BoolExpr) -> bool {
    let vars = e.vars();
    match e.count_solutions_with_threshold(vars, MAX_VARS) {
        Ok(n) => n > 0 && n < vars.len() as u128,
        Err(_) => false,
    }
}

/// Single pass of steps 2 and 3 over the variables of `e`.
pub fn forced_assignments(e: &BoolExpr) -> Result<BTreeMap<usize, bool>> {
    if e.is_zero() {
        return Err(Error::Unsatisfiable);
    }
    let mut forced = BTreeMap::new();
    for i in e.vars().iter() {
        let neg = e.cofactor_is_zero(i, Polarity::Neg);
        let pos = e.cofactor_is_zero(i, Polarity::Pos);
        match (neg, pos) {
            (true, true) => return Err(Error::Unsatisfiable),
            (true, false) => {
                forced.insert(i, true);
            }
            (false, true) => {
                forced.insert(i, false);
            }
            (false, false) => {}
        }
    }
    Ok(forced)
}

/// Product of all constraints; 1 for none.
pub fn conjoin<'a, I: IntoIterator<Item = &'a BoolExpr>>(constraints: I) -> BoolExpr {
    BoolExpr::product(constraints)
}

/// Solves `e = 1` over `universe`.
///
/// Unmentioned variables default to 0, or take both values when `expand`
/// is set. Step 4 tries at most `budget` assignments; when that is not
/// enough the outcome is marked `exhausted` and holds the solutions found
/// among the assignments tried.
pub fn solve_scarce(e: &BoolExpr, universe: VarSet, budget: u64, expand: bool) -> Result<SolveOutcome> {
    let mentioned = e.vars();
    if !mentioned.is_subset(universe) {
        let stray = mentioned.difference(universe).iter().next().unwrap_or(0);
        return Err(Error::OutOfRange(format!(
            "x{stray} appears in the expression but not in the universe"
        )));
    }
    let nvars = universe.iter().last().map_or(0, |i| i + 1);
    let free_unmentioned = universe.difference(mentioned);
    let mut outcome = SolveOutcome {
        solutions: Vec::new(),
        universe,
        forced: BTreeMap::new(),
        free_unmentioned,
        residual: VarSet::EMPTY,
        mu: 0,
        budget_used: 0,
        exhausted: false,
        scarce: is_scarce(e),
    };
    if e.is_zero() {
        return Ok(outcome);
    }

    let mut current = e.clone();
    loop {
        let step = match forced_assignments(&current) {
            Ok(f) => f,
            Err(Error::Unsatisfiable) => return Ok(outcome),
            Err(err) => return Err(err),
        };
        let fresh: Vec<(usize, bool)> = step
            .into_iter()
            .filter(|(i, _)| !outcome.forced.contains_key(i))
            .collect();
        if fresh.is_empty() {
            break;
        }
        for (i, bit) in fresh {
            current = current.substitute(i, bit);
            outcome.forced.insert(i, bit);
        }
        if current.is_zero() {
            return Ok(outcome);
        }
        if current.is_one() {
            break;
        }
    }

    let forced_set: VarSet = outcome.forced.keys().copied().collect();
    let residual = mentioned.difference(forced_set);
    outcome.residual = residual;
    outcome.mu = residual.len();
    let base = outcome
        .forced
        .iter()
        .fold(Instantiation::zeros(nvars), |phi, (&i, &bit)| phi.with(i, bit));

    let residual_vars: Vec<usize> = residual.iter().collect();
    let total: u128 = 1u128 << outcome.mu;
    let tries = total.min(budget as u128) as u64;
    outcome.exhausted = (tries as u128) < total;
    outcome.budget_used = tries;
    let mu = outcome.mu;
    let mut found = Vec::new();
    for k in 0..tries {
        // The lowest-index residual variable is the most significant bit of k.
        let phi = residual_vars
            .iter()
            .enumerate()
            .fold(base, |phi, (p, &i)| phi.with(i, k >> (mu - 1 - p) & 1 == 1));
        if current.evaluate(&phi) {
            found.push(phi);
        }
    }

    let extra: Vec<usize> = if expand {
        free_unmentioned.iter().collect()
    } else {
        Vec::new()
    };
    for phi in found {
        for k in 0..1u64 << extra.len() {
            let full = extra
                .iter()
                .enumerate()
                .fold(phi, |phi, (p, &i)| phi.with(i, k >> p & 1 == 1));
            outcome.solutions.push(full);
        }
    }
    let order: Vec<usize> = universe.iter().collect();
    outcome
        .solutions
        .sort_by_key(|phi| order.iter().map(|&i| phi.get(i)).collect::<Vec<bool>>());
    Ok(outcome)
}
