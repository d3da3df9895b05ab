//! Step-by-step records of lopsided division, shared by the concrete and
//! generic implementations.

use serde::{Deserialize, Serialize};

/// One row group of the division tableau.
///
/// `subtrahend` is `c_i^(i) * S^i b`, the shifted divisor gated by the
/// emitted quotient bit. The last step of a trace has no subtrahend.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisionStep<V> {
    pub c: V,
    pub borrows: V,
    #[serde(default = "Option::default", skip_serializing_if = "Option::is_none")]
    pub subtrahend: Option<V>,
}

/// A full lopsided-division tableau.
///
/// `steps[i]` holds `c^(i)` and `borrows^(i)` for `i = 0..=gamma`;
/// `quotient_bits[i]` is `c_i^(i)`, least significant first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DivisionTrace<V, Q> {
    pub dividend: V,
    pub divisor: V,
    pub gamma: usize,
    pub steps: Vec<DivisionStep<V>>,
    pub quotient_bits: Vec<Q>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<bool>,
}

impl<V, Q> DivisionTrace<V, Q> {
    /// `(c^(gamma), borrows^(gamma))`.
    pub fn last(&self) -> (&V, &V) {
        let s = self.steps.last().expect("trace always holds the initial step");
        (&s.c, &s.borrows)
    }

    pub fn step(&self, i: usize) -> &DivisionStep<V> {
        &self.steps[i]
    }
}
