//! Exact arithmetic kernel.
//!
//! Integers are arbitrary-precision ([`Int`]), rationals are always kept in
//! lowest terms with a positive denominator ([`Rat`]). On top of those sit
//! dense univariate polynomials ([`UniPoly`]), sparse multivariate
//! polynomials ([`MultiPoly`]), generic matrices over any commutative ring
//! ([`Matrix`]) and canonical rational functions ([`RationalFunction`]).

mod matrix;
mod multipoly;
mod poly;
mod ratfunc;

pub use matrix::{solve_linear_exact, Matrix, Ring, WeightRing};
pub use multipoly::MultiPoly;
pub use poly::UniPoly;
pub use ratfunc::{rf_normalize, rf_series, RationalFunction};

use core::fmt;

/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational, always reduced, denominator positive.
pub type Rat = num_rational::BigRational;

/// Shorthand for small integer constants.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Shorthand for small rational constants. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

/// Integer-valued rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Error type of the arithmetic kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactError {
    /// Division by the zero polynomial.
    DivisionByZeroPolynomial,
    /// Series expansion requested for a denominator vanishing at the origin.
    NoPowerSeriesAtZero,
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::DivisionByZeroPolynomial => write!(f, "division by zero polynomial"),
            ExactError::NoPowerSeriesAtZero => write!(f, "no power series at t=0"),
        }
    }
}

impl core::error::Error for ExactError {}
