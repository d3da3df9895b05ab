use thiserror::Error;

/// Errors raised by the arithmetic, factoring and solving routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("variable index {index} exceeds the supported universe of {max} variables")]
    TooManyVariables { index: usize, max: usize },

    #[error("{vars} variables exceed the enumeration threshold of {threshold}")]
    EnumerationLimit { vars: usize, threshold: usize },

    #[error("operand must be a positive exact integer")]
    NotPositive,

    #[error("operation is undefined on truncated operands")]
    Truncated,

    #[error("divisor must be odd")]
    EvenDivisor,

    #[error("working width {width} exhausted (needs at least {needed})")]
    WidthExhausted { needed: usize, width: usize },

    #[error("fixpoint iteration did not stabilise within {iterations} steps")]
    NoConvergence { iterations: usize },

    #[error("{0}")]
    OutOfRange(String),

    #[error("integer image does not fit in 128 bits (width {width})")]
    Overflow { width: usize },

    #[error("the equation has no solutions")]
    Unsatisfiable,

    #[error("solver budget of {budget} assignments exceeded (needs {needed})")]
    BudgetExceeded { budget: u64, needed: u128 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
