//! ANF text form: `0`, or terms joined by `+`, each term `1` or `x<i>` joined by `*`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{BoolExpr, Term, MAX_VARS};
use crate::error::Error;

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Term::ONE {
            return f.write_str("1");
        }
        for (k, i) in self.vars().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

impl fmt::Display for BoolExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BoolExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoolExpr({self})")
    }
}

fn parse_error(input: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        what: "ANF expression",
        input: input.to_string(),
        reason: reason.into(),
    }
}

fn parse_factor(input: &str, factor: &str) -> Result<Option<Term>, Error> {
    match factor {
        "1" => Ok(None),
        "0" => Err(parse_error(input, "0 cannot appear inside a product")),
        _ => {
            let digits = factor
                .strip_prefix('x')
                .ok_or_else(|| parse_error(input, format!("unexpected factor {factor:?}")))?;
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(parse_error(input, format!("bad variable {factor:?}")));
            }
            let index: usize = digits
                .parse()
                .map_err(|_| parse_error(input, format!("bad variable {factor:?}")))?;
            if index >= MAX_VARS {
                return Err(Error::TooManyVariables { index, max: MAX_VARS });
            }
            Ok(Some(Term::var(index)))
        }
    }
}

/// Parses any sum of products; the result is canonicalised, so inputs need
/// not be in canonical order and may repeat terms.
impl FromStr for BoolExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(parse_error(s, "empty input"));
        }
        if compact == "0" {
            return Ok(BoolExpr::zero());
        }
        let mut terms = Vec::new();
        for summand in compact.split('+') {
            if summand.is_empty() {
                return Err(parse_error(s, "empty summand"));
            }
            if summand == "0" {
                continue;
            }
            let mut t = Term::ONE;
            for factor in summand.split('*') {
                if let Some(v) = parse_factor(s, factor)? {
                    t = t * v;
                }
            }
            terms.push(t);
        }
        Ok(BoolExpr::from_terms(terms))
    }
}

impl Serialize for BoolExpr {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BoolExpr {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_printing() {
        let e: BoolExpr = "x3*x1 + x1*x2".parse().unwrap();
        assert_eq!(e.to_string(), "x1*x2+x1*x3");
        assert_eq!(BoolExpr::zero().to_string(), "0");
        assert_eq!(BoolExpr::one().to_string(), "1");
        let e: BoolExpr = "x2+x1*x2".parse().unwrap();
        assert_eq!(e.to_string(), "x1*x2+x2");
    }

    #[test]
    fn repeated_terms_cancel() {
        let e: BoolExpr = "x1+x2+x1+1*x1".parse().unwrap();
        assert_eq!(e.to_string(), "x1+x2");
        let e: BoolExpr = "x1*x1".parse().unwrap();
        assert_eq!(e.to_string(), "x1");
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "+", "x", "y1", "x1++x2", "x1*0", "x-1", "x99"] {
            assert!(bad.parse::<BoolExpr>().is_err(), "{bad:?}");
        }
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(masks in prop::collection::vec(any::<u64>(), 0..10)) {
            let e = BoolExpr::from_terms(masks.into_iter().map(Term::from_mask));
            let back: BoolExpr = e.to_string().parse().unwrap();
            prop_assert_eq!(back, e);
        }
    }
}
