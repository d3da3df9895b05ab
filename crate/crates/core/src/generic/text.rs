//! Text form `…0, x2, x1, 1` (high coefficient first, tail after `…`;
//! truncated values omit the tail) and a JSON form with the same ordering.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::GenericInt;
use crate::boolring::BoolExpr;
use crate::error::Error;
use crate::Mode;

impl fmt::Display for GenericInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if self.is_exact() {
            write!(f, "…{}", self.tail)?;
            first = false;
        }
        for c in self.coeffs.iter().rev() {
            if !first {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for GenericInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GenericInt({self})")
    }
}

impl FromStr for GenericInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let (tail, rest) = match parts[0].strip_prefix('…').or_else(|| parts[0].strip_prefix("...")) {
            Some(t) => (Some(t.parse::<BoolExpr>()?), &parts[1..]),
            None => (None, &parts[..]),
        };
        let mut coeffs = rest
            .iter()
            .map(|p| p.parse::<BoolExpr>())
            .collect::<Result<Vec<_>, _>>()?;
        coeffs.reverse();
        match tail {
            Some(t) => Ok(GenericInt::exact(coeffs, t)),
            None if coeffs.is_empty() => Err(Error::Parse {
                what: "generic integer",
                input: s.to_string(),
                reason: "no coefficients".into(),
            }),
            None => Ok(GenericInt::truncated(coeffs)),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Repr {
    coeffs: Vec<BoolExpr>,
    tail: BoolExpr,
    mode: Mode,
}

impl Serialize for GenericInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        Repr {
            coeffs: self.coeffs.iter().rev().cloned().collect(),
            tail: self.tail.clone(),
            mode: self.mode,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GenericInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let mut r = Repr::deserialize(deserializer)?;
        r.coeffs.reverse();
        Ok(GenericInt::new(r.coeffs, r.tail, r.mode))
    }
}
