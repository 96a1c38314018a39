use super::config::EdgeBoundary;
use super::enumerate::fold_configs;
use crate::error::{Error, Result};
use crate::exactmath::{Matrix, Rational, Ring, UniPoly};
use crate::exec::{check_cap, Exec};
use crate::representations::AsmMatrix;

/// `(ν, μ)`: `ν = Σ_{i ≤ i', j' < j} A_{ij} A_{i'j'}` and `μ` the number of
/// `-1` entries.
pub fn asm_statistics(a: &AsmMatrix) -> (i64, usize) {
    let n = a.n();
    let e = |i: usize, j: usize| a.get(i, j) as i64;
    let mut nu = 0;
    for i in 0..n {
        for j in 0..n {
            if e(i, j) == 0 {
                continue;
            }
            for i2 in i..n {
                for j2 in 0..j {
                    nu += e(i, j) * e(i2, j2);
                }
            }
        }
    }
    let mu = a.rows().iter().flatten().filter(|&&v| v == -1).count();
    (nu, mu)
}

/// `Σ_A λ^{ν(A)} (1+λ)^{μ(A)} ∏ M_{ij}^{A_{ij}}` over alternating sign matrices.
pub fn lambda_determinant(m: &Matrix<Rational>, exec: Exec) -> Result<UniPoly> {
    let n = m.square_size()?;
    if n == 0 {
        return Ok(UniPoly::one());
    }
    check_cap(n)?;
    let one_plus = UniPoly::from_ints(&[1, 1]);
    let acc: Result<UniPoly> = fold_configs(
        &EdgeBoundary::dwbc(n),
        exec,
        Ok(UniPoly::zero()),
        |acc, c| {
            let Ok(sum) = acc else { return };
            let a = AsmMatrix::from_config_unchecked(c);
            let mut coef = Rational::from_integer(1.into());
            for i in 0..n {
                for j in 0..n {
                    match a.get(i, j) {
                        1 => coef *= m.get(i, j),
                        -1 => {
                            if m.get(i, j).is_zero() {
                                *acc = Err(Error::ZeroEntryAtMinusOne(i + 1, j + 1));
                                return;
                            }
                            coef /= m.get(i, j);
                        }
                        _ => {}
                    }
                }
            }
            let (nu, mu) = asm_statistics(&a);
            let term = UniPoly::x()
                .pow(nu as u32)
                .mul(&one_plus.pow(mu as u32))
                .scale(&coef);
            *sum = sum.add(&term);
        },
        |a, b| match (a, b) {
            (Ok(x), Ok(y)) => Ok(x.add(&y)),
            (Err(e), _) | (_, Err(e)) => Err(e),
        },
    );
    acc
}
