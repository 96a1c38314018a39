use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::partition::Partition;
use crate::error::{Error, Result};
use crate::exactmath::{det_exact, FieldScalar, Matrix, Rational, TruncatedSeries};
use crate::sixvertex::izergin;

/// `det(z_i^{λ_j + n - j}) / ∏_{i<j} (z_i - z_j)`.
pub fn schur_bialternant(lambda: &Partition, zs: &[FieldScalar]) -> Result<FieldScalar> {
    FieldScalar::common_tag(zs)?;
    let n = zs.len();
    for i in 0..n {
        for j in 0..i {
            if zs[i] == zs[j] {
                return Err(Error::RepeatedVariable(j + 1, i + 1));
            }
        }
    }
    if lambda.len() > n {
        return Ok(FieldScalar::int(0));
    }
    let lam = lambda.padded(n);
    let mut entries = Vec::with_capacity(n * n);
    for z in zs {
        for (j, &l) in lam.iter().enumerate() {
            entries.push(z.powi((l as usize + n - 1 - j) as i64)?);
        }
    }
    let m = Matrix::from_fn(n, n, |i, j| entries[i * n + j].clone());
    let mut vdm = FieldScalar::int(1);
    for i in 0..n {
        for j in i + 1..n {
            vdm = vdm * (&zs[i] - &zs[j]);
        }
    }
    Ok(det_exact(&m)? / vdm)
}

/// Complete homogeneous sums `h_0..=h_d` read off `∏ 1/(1 - u z_i)`.
pub fn complete_homogeneous(zs: &[FieldScalar], d: u32) -> Result<Vec<FieldScalar>> {
    FieldScalar::common_tag(zs)?;
    let one = TruncatedSeries::one(1, d);
    let u = TruncatedSeries::<FieldScalar>::var(1, d, 0);
    let mut acc = one.clone();
    for z in zs {
        let f = one.sub(&u.scale(z))?;
        acc = acc.mul(&f.invert()?)?;
    }
    Ok(acc.univariate_coeffs())
}

/// `det h_{λ_j - j + i}` with `h_k = 0` for `k < 0`.
pub fn schur_jacobi_trudi(lambda: &Partition, zs: &[FieldScalar]) -> Result<FieldScalar> {
    let n = lambda.len().max(1);
    let d = lambda.first() + n as u32 - 1;
    let h = complete_homogeneous(zs, d)?;
    let lam = lambda.padded(n);
    let m = Matrix::from_fn(n, n, |i, j| {
        let k = lam[j] as i64 - j as i64 + i as i64;
        if k < 0 {
            FieldScalar::int(0)
        } else {
            h[k as usize].clone()
        }
    });
    det_exact(&m)
}

/// `s_λ(1, …, 1)` with `n` ones: `∏_{i<j} (λ_i - i - λ_j + j) / (j - i)`.
pub fn dim_eval(lambda: &Partition, n: usize) -> BigInt {
    if lambda.len() > n {
        return BigInt::zero();
    }
    let lam = lambda.padded(n);
    let mut r = Rational::one();
    for i in 0..n {
        for j in i + 1..n {
            let num = lam[i] as i64 - i as i64 - lam[j] as i64 + j as i64;
            r *= Rational::new(num.into(), ((j - i) as i64).into());
        }
    }
    debug_assert!(r.is_integer());
    r.to_integer()
}

/// `(n-1, n-1, n-2, n-2, …, 1, 1)`.
pub fn staircase_lambda(n: usize) -> Partition {
    Partition::staircase_doubled(n)
}

/// `3^{-n(n-1)/2} · s_{(n-1,n-1,…,1,1)}(1, …, 1)` over `2n` ones.
pub fn asm_count(n: usize) -> BigInt {
    let d = dim_eval(&Partition::staircase_doubled(n), 2 * n);
    let p = BigInt::from(3).pow((n * n.saturating_sub(1) / 2) as u32);
    debug_assert!((&d % &p).is_zero());
    d / p
}

/// `∏_{i=0}^{n-1} (3i+1)! / (n+i)!`.
pub fn asm_product_formula(n: usize) -> BigInt {
    let fact = |k: usize| (1..=k).fold(BigInt::one(), |a, x| a * BigInt::from(x));
    let mut r = Rational::one();
    for i in 0..n {
        r *= Rational::new(fact(3 * i + 1), fact(n + i));
    }
    r.to_integer()
}

/// Right-hand side of the ice-point identification:
/// `∏ y_j · ω^{-n(n-1)/2} (ω - ω⁻¹)^n s_{λ⁽ⁿ⁾}(-ωx_1, …, -ωx_n, y_1, …, y_n)`.
pub fn ice_point_rhs(xs: &[FieldScalar], ys: &[FieldScalar]) -> Result<FieldScalar> {
    let n = xs.len();
    if ys.len() != n {
        return Err(Error::SizeMismatch(n, ys.len()));
    }
    let w = FieldScalar::omega();
    let mut vars: Vec<FieldScalar> = xs.iter().map(|x| -(&w * x)).collect();
    vars.extend(ys.iter().cloned());
    let s = schur_bialternant(&Partition::staircase_doubled(n), &vars).map_err(|e| match e {
        Error::RepeatedVariable(..) => {
            Error::DegenerateParameters("Schur variables coincide".into())
        }
        e => e,
    })?;
    let pre =
        w.powi(-((n * n.saturating_sub(1) / 2) as i64))? * (&w - &w.try_inv()?).powi(n as i64)?;
    let prod_y = ys.iter().fold(FieldScalar::int(1), |a, y| a * y);
    Ok(prod_y * pre * s)
}

/// Compares the determinant formula at `q = ω` with [`ice_point_rhs`].
pub fn ice_point_identification(xs: &[FieldScalar], ys: &[FieldScalar]) -> Result<bool> {
    for v in xs.iter().chain(ys) {
        v.embed(crate::exactmath::FieldTag::Qw)?;
    }
    let z = izergin(&FieldScalar::omega(), xs, ys)?;
    Ok(z == ice_point_rhs(xs, ys)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::schur_ssyt;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn fs(v: &[i64]) -> Vec<FieldScalar> {
        v.iter().map(|&x| FieldScalar::int(x)).collect()
    }

    #[test]
    fn basic_values() {
        let z = fs(&[2, 3]);
        assert_eq!(schur_bialternant(&p(""), &z).unwrap(), FieldScalar::int(1));
        assert_eq!(schur_bialternant(&p("1"), &z).unwrap(), FieldScalar::int(5));
        assert_eq!(
            schur_jacobi_trudi(&p("1,1"), &z).unwrap(),
            FieldScalar::int(6)
        );
        assert_eq!(
            schur_jacobi_trudi(&p("3"), &z).unwrap(),
            FieldScalar::int(8 + 12 + 18 + 27)
        );
        let z3 = fs(&[2, 3, 5]);
        assert_eq!(
            schur_bialternant(&p("2,1"), &z3).unwrap(),
            schur_ssyt(&p("2,1"), &z3).unwrap()
        );
        assert!(matches!(
            schur_bialternant(&p("1"), &fs(&[2, 2])),
            Err(Error::RepeatedVariable(1, 2))
        ));
        assert_eq!(
            schur_bialternant(&p("1,1,1"), &z).unwrap(),
            FieldScalar::int(0)
        );
    }

    #[test]
    fn asm_numbers() {
        let v: Vec<BigInt> = (1..=6).map(asm_count).collect();
        assert_eq!(v, [1, 2, 7, 42, 429, 7436].map(BigInt::from));
        for n in 1..=12 {
            assert_eq!(asm_count(n), asm_product_formula(n));
        }
        assert_eq!(dim_eval(&p("1,1"), 4), BigInt::from(6));
        assert_eq!(dim_eval(&p("2,1"), 3), BigInt::from(8));
    }

    #[test]
    fn ice_point_small() {
        let w = FieldScalar::omega();
        let y = FieldScalar::int(7);
        assert_eq!(
            ice_point_rhs(&fs(&[3]), std::slice::from_ref(&y)).unwrap(),
            (&w - &w.try_inv().unwrap()) * y
        );
        assert!(ice_point_identification(&fs(&[2, 3]), &fs(&[5, 7])).unwrap());
        assert!(ice_point_identification(&fs(&[2, 3, -4]), &fs(&[5, 7, 1])).unwrap());
    }
}
