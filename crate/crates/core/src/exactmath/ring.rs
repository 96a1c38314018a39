use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;

use super::matrix::Matrix;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Commutative ring with reference-based operations.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

pub trait Field: Ring {
    /// `None` exactly when `self` is zero.
    fn inv(&self) -> Option<Self>;
}

/// Division that is only defined when the quotient is exact.
pub trait ExactDiv: Ring {
    fn exact_div(&self, divisor: &Self) -> Option<Self>;
}

pub trait Determinant: Ring {
    fn determinant(m: &Matrix<Self>) -> Result<Self>;
}

macro_rules! num_ring {
    ($t:ty) => {
        impl Ring for $t {
            fn zero() -> Self {
                num_traits::Zero::zero()
            }
            fn one() -> Self {
                num_traits::One::one()
            }
            fn is_zero(&self) -> bool {
                num_traits::Zero::is_zero(self)
            }
            fn add(&self, other: &Self) -> Self {
                self + other
            }
            fn sub(&self, other: &Self) -> Self {
                self - other
            }
            fn mul(&self, other: &Self) -> Self {
                self * other
            }
            fn neg(&self) -> Self {
                -self
            }
        }
    };
}

num_ring!(Rational);
num_ring!(BigInt);

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        (!num_traits::Zero::is_zero(self)).then(|| self.recip())
    }
}

impl ExactDiv for BigInt {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if num_traits::Zero::is_zero(divisor) {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        num_traits::Zero::is_zero(&r).then_some(q)
    }
}

impl Determinant for Rational {
    fn determinant(m: &Matrix<Self>) -> Result<Self> {
        gauss_det(m)
    }
}

impl Determinant for BigInt {
    fn determinant(m: &Matrix<Self>) -> Result<Self> {
        bareiss_det(m)
    }
}

/// Gaussian elimination with a nonzero-pivot search.
pub(crate) fn gauss_det<T: Field>(m: &Matrix<T>) -> Result<T> {
    let n = m.square_size()?;
    let mut a: Vec<Vec<T>> = m.to_rows();
    let mut det = T::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(T::zero());
        };
        if p != k {
            a.swap(p, k);
            det = det.neg();
        }
        det = det.mul(&a[k][k]);
        let inv = a[k][k].inv().ok_or(Error::DivisionByZero)?;
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let f = a[r][k].mul(&inv);
            for c in k..n {
                let d = f.mul(&a[k][c]);
                a[r][c] = a[r][c].sub(&d);
            }
        }
    }
    Ok(det)
}

/// Fraction-free elimination over an integral domain.
pub(crate) fn bareiss_det<T: ExactDiv>(m: &Matrix<T>) -> Result<T> {
    let n = m.square_size()?;
    if n == 0 {
        return Ok(T::one());
    }
    let mut a: Vec<Vec<T>> = m.to_rows();
    let mut sign = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(T::zero());
            };
            a.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.exact_div(&prev).expect("Bareiss step divides exactly");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign { d.neg() } else { d })
}
