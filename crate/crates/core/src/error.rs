use core::fmt;

use crate::Int;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The generator list was empty.
    EmptyGenerators,
    /// A generator was zero or negative.
    NonPositiveGenerator(Int),
    /// The generators (or family parameters) share a common factor.
    NotCoprime { gcd: Int },
    /// The Apéry base is not an element of the semigroup.
    BaseNotInSemigroup(Int),
    /// The Apéry base is zero, negative or too large to index.
    InvalidBase(Int),
    /// A checked 128-bit operation overflowed.
    Overflow,
    /// Parameters outside the documented domain of an operation.
    InvalidParameter(&'static str),
    /// A closed form was requested outside the hypothesis it is proven under.
    HypothesisViolated(&'static str),
    /// Vectors of different arity were compared.
    LengthMismatch { left: usize, right: usize },
    /// Coin denominations must start at 1 and strictly increase.
    InvalidCoinSystem(&'static str),
    /// An identity that must hold exactly did not. Indicates a bug.
    Internal(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyGenerators => write!(f, "generator list is empty"),
            Error::NonPositiveGenerator(g) => write!(f, "generator {g} is not positive"),
            Error::NotCoprime { gcd } => write!(f, "generators are not coprime (gcd = {gcd})"),
            Error::BaseNotInSemigroup(b) => write!(f, "base {b} is not an element of the semigroup"),
            Error::InvalidBase(b) => write!(f, "invalid Apery base {b}"),
            Error::Overflow => write!(f, "integer overflow in 128-bit arithmetic"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::HypothesisViolated(msg) => write!(f, "hypothesis violated: {msg}"),
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::InvalidCoinSystem(msg) => write!(f, "invalid coin system: {msg}"),
            Error::Internal(msg) => write!(f, "internal consistency check failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
