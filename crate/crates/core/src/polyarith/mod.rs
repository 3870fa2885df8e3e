//! Exact univariate polynomial and rational-function arithmetic over the
//! rationals. Everything else in the crate is built on these types.

mod poly;
mod ratfunc;
mod roots;

use thiserror::Error;

pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;

pub use poly::{falling_factorial, Degree, Polynomial};
pub use ratfunc::RationalFunction;
pub use roots::{integer_roots, interpolate, resultant, shift_resultant};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial division is not exact")]
    DivisionNotExact,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("the zero polynomial has no finite root set")]
    ZeroPolynomial,
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `num/den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
