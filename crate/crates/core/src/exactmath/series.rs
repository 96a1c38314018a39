use std::collections::BTreeMap;
use std::fmt;

use super::rational::Rational;
use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// Power series in `num_vars` variables truncated at total degree `max_degree`.
///
/// Only nonzero coefficients are stored.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<T: Ring = Rational> {
    num_vars: usize,
    max_degree: u32,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Ring> TruncatedSeries<T> {
    pub fn zero(num_vars: usize, max_degree: u32) -> Self {
        TruncatedSeries {
            num_vars,
            max_degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, max_degree: u32, c: T) -> Self {
        let mut s = Self::zero(num_vars, max_degree);
        s.add_term(vec![0; num_vars], c);
        s
    }

    pub fn one(num_vars: usize, max_degree: u32) -> Self {
        Self::constant(num_vars, max_degree, T::one())
    }

    /// The `i`-th variable.
    pub fn var(num_vars: usize, max_degree: u32, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Self::monomial(num_vars, max_degree, e, T::one())
    }

    pub fn monomial(num_vars: usize, max_degree: u32, exps: Vec<u32>, c: T) -> Self {
        assert_eq!(exps.len(), num_vars, "exponent vector length");
        let mut s = Self::zero(num_vars, max_degree);
        s.add_term(exps, c);
        s
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> T {
        self.terms.get(exps).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c·x^exps`, silently dropping it beyond the truncation degree.
    pub fn add_term(&mut self, exps: Vec<u32>, c: T) {
        if exps.iter().sum::<u32>() > self.max_degree || c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.num_vars != o.num_vars || self.max_degree != o.max_degree {
            return Err(Error::DegreeMismatch(format!(
                "({} vars, degree {}) vs ({} vars, degree {})",
                self.num_vars, self.max_degree, o.num_vars, o.max_degree
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.neg()))
            .collect();
        TruncatedSeries { terms, ..*self }
    }

    pub fn scale(&self, k: &T) -> Self {
        let mut out = Self::zero(self.num_vars, self.max_degree);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.mul(k));
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = Self::zero(self.num_vars, self.max_degree);
        let deg = |e: &Vec<u32>| e.iter().sum::<u32>();
        for (e1, c1) in &self.terms {
            let d1 = deg(e1);
            for (e2, c2) in &o.terms {
                if d1 + deg(e2) > self.max_degree {
                    continue;
                }
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.mul(c2));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::one(self.num_vars, self.max_degree);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// All coefficients of a univariate series, degrees `0..=max_degree`.
    pub fn univariate_coeffs(&self) -> Vec<T> {
        assert_eq!(self.num_vars, 1, "univariate series expected");
        (0..=self.max_degree).map(|k| self.coeff(&[k])).collect()
    }
}

impl<T: Field> TruncatedSeries<T> {
    /// Multiplicative inverse: `c·(1 - g)` inverts to `c⁻¹·Σ gᵏ`.
    pub fn invert(&self) -> Result<Self> {
        let zero = vec![0; self.num_vars];
        let c0 = self.coeff(&zero);
        let c0_inv = c0.inv().ok_or(Error::NonInvertibleConstantTerm)?;
        let mut g = self.scale(&c0_inv).neg();
        g.add_term(zero, T::one());
        let mut acc = Self::one(self.num_vars, self.max_degree);
        for _ in 0..self.max_degree {
            acc = Self::one(self.num_vars, self.max_degree).add(&acc.mul(&g)?)?;
        }
        Ok(acc.scale(&c0_inv))
    }
}

impl<T: Ring + fmt::Display> fmt::Display for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("x{i}")
                    } else {
                        format!("x{i}^{k}")
                    }
                })
                .collect();
            if mono.is_empty() {
                parts.push(format!("({c})"));
            } else {
                parts.push(format!("({c})*{}", mono.join("*")));
            }
        }
        write!(f, "{} + O(deg {})", parts.join(" + "), self.max_degree + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    type S = TruncatedSeries<Rational>;

    fn one_minus(s: &S) -> S {
        S::one(s.num_vars(), s.max_degree()).sub(s).unwrap()
    }

    #[test]
    fn geometric() {
        let u = S::var(1, 3, 0);
        let inv = one_minus(&u).invert().unwrap();
        assert_eq!(inv.univariate_coeffs(), vec![rat(1, 1); 4]);
        let one_plus = S::one(1, 2).add(&S::var(1, 2, 0)).unwrap();
        let one_minus2 = one_minus(&S::var(1, 2, 0));
        let p = one_plus.mul(&one_minus2).unwrap();
        assert_eq!(
            p.univariate_coeffs(),
            vec![rat(1, 1), rat(0, 1), rat(-1, 1)]
        );
    }

    #[test]
    fn two_variable_inverse() {
        let uz = S::var(2, 4, 0).mul(&S::var(2, 4, 1)).unwrap();
        let f = one_minus(&uz);
        let inv = f.invert().unwrap();
        let mut expect = S::zero(2, 4);
        for k in 0..=2 {
            expect.add_term(vec![k, k], rat(1, 1));
        }
        assert_eq!(inv, expect);
        assert_eq!(f.mul(&inv).unwrap(), S::one(2, 4));
        assert_eq!(inv.invert().unwrap(), f);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            S::var(1, 3, 0).invert(),
            Err(Error::NonInvertibleConstantTerm)
        ));
        assert!(matches!(
            S::one(1, 3).add(&S::one(1, 4)),
            Err(Error::DegreeMismatch(_))
        ));
        assert!(matches!(
            S::one(1, 3).mul(&S::one(2, 3)),
            Err(Error::DegreeMismatch(_))
        ));
    }
}
