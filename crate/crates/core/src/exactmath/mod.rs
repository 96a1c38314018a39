//! Exact arithmetic: rationals, quadratic extensions, polynomials,
//! truncated power series and determinants.

mod field;
mod matrix;
mod poly;
mod rational;
mod ring;
mod series;

pub use field::{FieldScalar, FieldTag};
pub use matrix::{Matrix, ScalarMatrix};
pub use poly::UniPoly;
pub use rational::{format_rational, parse_rational, rat, Rational};
pub use ring::{Determinant, ExactDiv, Field, Ring};
pub use series::TruncatedSeries;

pub fn det_exact<T: Determinant>(m: &Matrix<T>) -> crate::Result<T> {
    T::determinant(m)
}
