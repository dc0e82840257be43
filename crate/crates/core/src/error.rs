use thiserror::Error;

use crate::ring::Monomial;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{divisor} does not divide {dividend}")]
    NonDivisor { dividend: Monomial, divisor: Monomial },

    #[error("monomial set is not decreasing: {lower} precedes {upper} but is missing")]
    NotDecreasing { lower: Monomial, upper: Monomial },

    #[error("row index {row} is out of range for m = {m}")]
    IndexOutOfRange { row: u64, m: u32 },

    #[error("duplicate row index {0}")]
    DuplicateRow(u32),

    #[error("the code has no generating monomials")]
    EmptyCode,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} is too large ({size} exceeds the limit {limit})")]
    TooLarge { what: &'static str, size: u128, limit: u128 },

    #[error("{0} is not a degree-2 monomial")]
    NotDegreeTwo(Monomial),

    #[error("{0} and {1} are not coprime")]
    NotCoprime(Monomial, Monomial),

    #[error("({f}, {g}) is not a valid pair: {reason}")]
    BadPair { f: Monomial, g: Monomial, reason: String },

    #[error("row {0} is not a maximum-degree row of the code")]
    RowNotMaxDegree(u32),

    #[error("count 2^{0} does not fit in 128 bits")]
    Overflow(u32),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

/// `2^exp` as an exact 128-bit count.
pub fn pow2(exp: u32) -> Result<u128> {
    1u128.checked_shl(exp).ok_or(Error::Overflow(exp))
}
