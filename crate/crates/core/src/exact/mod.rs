//! Exact arithmetic substrate: rationals, sparse homogeneous polynomials and
//! sparse rational matrices with fraction-free rank computation.
//!
//! Nothing in this crate rounds. Every dimension reported elsewhere is either
//! a closed-form integer expression or the rank of a matrix built here.

mod matrix;
mod poly;

pub use matrix::RationalMatrix;
pub use poly::{monomial_basis, poly_mul, HomPoly};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("polynomials live in different rings ({left} vs {right} variables)")]
    VarCountMismatch { left: usize, right: usize },
    #[error("only 2 or 3 variables are supported, got {0}")]
    UnsupportedVarCount(usize),
    #[error("exponent vector {exponents:?} does not have total degree {degree}")]
    BadExponent { exponents: Vec<u32>, degree: i64 },
    #[error("cannot add polynomials of degree {left} and {right}")]
    DegreeMismatch { left: i64, right: i64 },
    #[error("matrix index ({row}, {col}) out of range for {rows}x{cols}")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("determinant requires a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Returns the value as an `i64` when it is an integer that fits.
pub fn to_integer(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}
