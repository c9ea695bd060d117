use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("the reciprocal of the zero polynomial is undefined")]
    ZeroReciprocal,

    #[error("cannot factor a constant or zero polynomial")]
    ConstantFactor,

    #[error("{0} must be positive")]
    NonPositive(&'static str),

    #[error("{what} must be odd, got {value}")]
    NotOdd { what: &'static str, value: usize },

    #[error("length mismatch: expected (alpha, beta) = ({expected:?}), got ({found:?})")]
    LengthMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },

    #[error(
        "ambient space has 2^{bits} elements, over the budget of {budget}; use smaller alpha/beta or raise the budget"
    )]
    BudgetExceeded { bits: u32, budget: u64 },

    #[error("ambient lengths alpha={alpha}, beta={beta} are out of range (need alpha + 2*beta <= 64)")]
    AmbientTooLarge { alpha: usize, beta: usize },

    #[error("invalid code spec: {0}")]
    InvalidSpec(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("set is not closed under addition")]
    NotAdditive,

    #[error("{0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
