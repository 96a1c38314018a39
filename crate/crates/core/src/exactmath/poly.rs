use std::fmt;

use num_traits::Signed;

use super::matrix::Matrix;
use super::rational::{display_rational, Rational};
use super::ring::{Determinant, ExactDiv, Ring};
use crate::error::Result;

/// Univariate polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(
            cs.iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> Option<(UniPoly, UniPoly)> {
        let dd = d.degree()?;
        let lead = d.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); r.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = &r[r.len() - 1] / &lead;
            for (i, di) in d.coeffs.iter().enumerate() {
                r[k + i] -= &c * di;
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Some((UniPoly::new(q), UniPoly::new(r)))
    }
}

impl Ring for UniPoly {
    fn zero() -> Self {
        UniPoly::default()
    }
    fn one() -> Self {
        UniPoly::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
    fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return UniPoly::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
    fn neg(&self) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl ExactDiv for UniPoly {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d)?;
        r.is_zero().then_some(q)
    }
}

impl Determinant for UniPoly {
    fn determinant(m: &Matrix<Self>) -> Result<Self> {
        super::ring::bareiss_det(m)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let body = display_rational(&mag);
            match (k, mag == Rational::one()) {
                (0, _) => write!(f, "{body}")?,
                (1, true) => write!(f, "λ")?,
                (1, false) => write!(f, "{body}λ")?,
                (_, true) => write!(f, "λ^{k}")?,
                (_, false) => write!(f, "{body}λ^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn arithmetic() {
        let p = UniPoly::from_ints(&[1, 1]);
        assert_eq!(p.pow(3), UniPoly::from_ints(&[1, 3, 3, 1]));
        assert_eq!(p.sub(&p), UniPoly::zero());
        assert_eq!(UniPoly::zero().degree(), None);
        assert_eq!(p.pow(3).degree(), Some(3));
        assert_eq!(p.pow(2).eval(&rat(-1, 1)), rat(0, 1));
        assert_eq!(p.pow(3).to_string(), "1 + 3λ + 3λ^2 + λ^3");
        assert_eq!(UniPoly::from_ints(&[0, -2]).to_string(), "-2λ");
    }

    #[test]
    fn division() {
        let a = UniPoly::from_ints(&[1, 1]).mul(&UniPoly::from_ints(&[-2, 0, 3]));
        assert_eq!(
            a.exact_div(&UniPoly::from_ints(&[1, 1])),
            Some(UniPoly::from_ints(&[-2, 0, 3]))
        );
        assert_eq!(a.exact_div(&UniPoly::from_ints(&[2, 1])), None);
        assert_eq!(a.exact_div(&UniPoly::zero()), None);
    }
}
