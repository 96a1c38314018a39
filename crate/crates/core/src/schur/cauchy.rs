use num_traits::One;

use super::partition::Partition;
use super::tableau::schur_monomials;
use crate::error::{Error, Result};
use crate::exactmath::{Rational, TruncatedSeries};

/// `s_λ(w_1..w_m)·s_λ(z_1..z_n)` as a series in `m + n` variables.
fn schur_pair(lambda: &Partition, m: usize, n: usize, deg: u32) -> TruncatedSeries {
    let left = schur_monomials(lambda, m);
    let right = schur_monomials(lambda, n);
    let mut out = TruncatedSeries::zero(m + n, deg);
    for (a, ca) in &left {
        for (b, cb) in &right {
            let mut e = a.clone();
            e.extend_from_slice(b);
            out.add_term(e, Rational::from_integer((ca * cb).into()));
        }
    }
    out
}

/// `∏_{i,j} 1/(1 - w_i z_j)` in `m + n` variables.
pub fn cauchy_kernel(m: usize, n: usize, deg: u32) -> Result<TruncatedSeries> {
    let one = TruncatedSeries::one(m + n, deg);
    let mut acc = one.clone();
    for i in 0..m {
        for j in 0..n {
            let wz = TruncatedSeries::var(m + n, deg, i).mul(&TruncatedSeries::var(
                m + n,
                deg,
                m + j,
            ))?;
            acc = acc.mul(&one.sub(&wz)?.invert()?)?;
        }
    }
    Ok(acc)
}

/// Left side of the Cauchy identity summed over `|λ| ≤ d`.
pub fn cauchy_sum(m: usize, n: usize, d: u32) -> TruncatedSeries {
    let deg = 2 * d;
    let mut acc = TruncatedSeries::zero(m + n, deg);
    for total in 0..=d {
        for lam in Partition::all_of(total, m.min(n), total) {
            for (e, c) in schur_pair(&lam, m, n, deg).terms() {
                acc.add_term(e.clone(), c.clone());
            }
        }
    }
    acc
}

/// `Σ_λ s_λ(w) s_λ(z) = ∏ 1/(1 - w_i z_j)` up to total degree `2d`.
pub fn cauchy_check(m: usize, n: usize, d: u32) -> Result<bool> {
    if m == 0 || n == 0 || d == 0 {
        return Err(Error::InvalidArgument(
            "m, n and the degree must be at least 1".into(),
        ));
    }
    crate::exec::check_cap(m + n)?;
    Ok(cauchy_sum(m, n, d) == cauchy_kernel(m, n, 2 * d)?)
}

/// `(1 - wz)·Σ_{k<p} s_(k)(w) s_(k)(z) + (wz)^p = 1` in two variables.
pub fn cauchy_telescoping(p: u32) -> Result<bool> {
    let deg = 2 * p;
    let mut sum = TruncatedSeries::zero(2, deg);
    for k in 0..p {
        let lam = if k == 0 {
            Partition::empty()
        } else {
            Partition::new(vec![k])?
        };
        for (e, c) in schur_pair(&lam, 1, 1, deg).terms() {
            sum.add_term(e.clone(), c.clone());
        }
    }
    let one = TruncatedSeries::one(2, deg);
    let wz = TruncatedSeries::monomial(2, deg, vec![1, 1], Rational::one());
    let lhs = one.sub(&wz)?.mul(&sum)?.add(&wz.pow(p)?)?;
    Ok(lhs == one)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_case() {
        let s = cauchy_sum(1, 1, 3);
        for k in 0..=3 {
            assert_eq!(s.coeff(&[k, k]), Rational::one());
        }
        assert!(cauchy_check(1, 1, 3).unwrap());
    }

    #[test]
    fn small_cases() {
        assert!(cauchy_check(1, 2, 3).unwrap());
        assert!(cauchy_check(2, 2, 4).unwrap());
        assert!(cauchy_telescoping(6).unwrap());
    }

    #[test]
    fn dropping_a_shape_breaks_it() {
        let mut s = cauchy_sum(2, 2, 3);
        for (e, c) in schur_pair(&"2,1".parse().unwrap(), 2, 2, 6).terms() {
            s.add_term(e.clone(), -c.clone());
        }
        assert_ne!(s, cauchy_kernel(2, 2, 6).unwrap());
    }
}
