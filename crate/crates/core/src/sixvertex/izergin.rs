use super::config::BoundarySpec;
use super::weights::{partition_function_brute, six_weights, WeightSystem};
use crate::error::{Error, Result};
use crate::exactmath::{det_exact, FieldScalar, FieldTag, Matrix};
use crate::exec::Exec;

fn distinct(label: &str, v: &[FieldScalar]) -> Result<()> {
    for i in 0..v.len() {
        for j in 0..i {
            if v[i] == v[j] {
                return Err(Error::DegenerateParameters(format!(
                    "{label}[{}] = {label}[{}]",
                    j + 1,
                    i + 1
                )));
            }
        }
    }
    Ok(())
}

fn check_inputs(q: &FieldScalar, xs: &[FieldScalar], ys: &[FieldScalar]) -> Result<FieldTag> {
    if xs.len() != ys.len() || xs.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "need n ≥ 1 row and column parameters, got {} and {}",
            xs.len(),
            ys.len()
        )));
    }
    let tag = FieldScalar::common_tag(std::iter::once(q).chain(xs).chain(ys))?;
    if q.is_zero_value() {
        return Err(Error::DegenerateParameters("q = 0".into()));
    }
    distinct("x", xs)?;
    distinct("y", ys)?;
    Ok(tag)
}

/// `∏_{i<j} (x_i - x_j)(y_j - y_i)`.
fn vandermonde(xs: &[FieldScalar], ys: &[FieldScalar]) -> FieldScalar {
    let n = xs.len();
    let mut v = FieldScalar::int(1);
    for i in 0..n {
        for j in i + 1..n {
            v = v * (&xs[i] - &xs[j]) * (&ys[j] - &ys[i]);
        }
    }
    v
}

fn prod(v: &[FieldScalar]) -> FieldScalar {
    v.iter().fold(FieldScalar::int(1), |acc, y| acc * y)
}

/// `(x - y)(qx - q⁻¹y)`, the product `b·a` of the weights at one site.
fn kernel_den(q: &FieldScalar, x: &FieldScalar, y: &FieldScalar) -> Result<FieldScalar> {
    let [a, _, b, ..] = six_weights(q, x, y)?;
    Ok(b * a)
}

/// Determinant formula for the domain-wall partition function.
///
/// Every `x_i - y_j` and `qx_i - q⁻¹y_j` must be nonzero, as must the
/// Vandermonde factors.
pub fn izergin(q: &FieldScalar, xs: &[FieldScalar], ys: &[FieldScalar]) -> Result<FieldScalar> {
    check_inputs(q, xs, ys)?;
    let n = xs.len();
    let d = q - &q.try_inv()?;
    let mut dens = Vec::with_capacity(n * n);
    for (i, x) in xs.iter().enumerate() {
        for (j, y) in ys.iter().enumerate() {
            let den = kernel_den(q, x, y)?;
            if den.is_zero_value() {
                return Err(Error::DegenerateParameters(format!(
                    "kernel denominator vanishes at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
            dens.push(den);
        }
    }
    let kernel = Matrix::from_fn(n, n, |i, j| &d / &dens[i * n + j]);
    let prefactor = prod(ys) * prod(&dens);
    Ok(prefactor * det_exact(&kernel)? / vandermonde(xs, ys))
}

/// The same formula with each kernel row multiplied through by its
/// denominators, so only the Vandermonde factors divide. Stays defined
/// when some `x_i = y_j`.
pub fn izergin_cleared(
    q: &FieldScalar,
    xs: &[FieldScalar],
    ys: &[FieldScalar],
) -> Result<FieldScalar> {
    check_inputs(q, xs, ys)?;
    let n = xs.len();
    let d = q - &q.try_inv()?;
    let mut dens = Vec::with_capacity(n * n);
    for x in xs {
        for y in ys {
            dens.push(kernel_den(q, x, y)?);
        }
    }
    let m = Matrix::from_fn(n, n, |i, j| {
        (0..n)
            .filter(|&k| k != j)
            .fold(d.clone(), |acc, k| acc * &dens[i * n + k])
    });
    Ok(prod(ys) * det_exact(&m)? / vandermonde(xs, ys))
}

/// Factorised value at `q = i`:
/// `(2i)^n (-1)^{n(n-1)/2} ∏ y_j ∏_{i<j} (x_i + x_j)(y_i + y_j)`.
pub fn free_fermion_z(xs: &[FieldScalar], ys: &[FieldScalar]) -> Result<FieldScalar> {
    if xs.len() != ys.len() {
        return Err(Error::SizeMismatch(xs.len(), ys.len()));
    }
    for v in xs.iter().chain(ys) {
        v.embed(FieldTag::Qi)?;
    }
    let n = xs.len();
    let two_i = FieldScalar::int(2) * FieldScalar::i();
    let mut z = two_i.powi(n as i64)?;
    if (n * n.saturating_sub(1) / 2) % 2 == 1 {
        z = -z;
    }
    for y in ys {
        z = z * y;
    }
    for i in 0..n {
        for j in i + 1..n {
            z = z * (&xs[i] + &xs[j]) * (&ys[i] + &ys[j]);
        }
    }
    Ok(z)
}

/// Which evaluator supplies both sides of the `x_n = y_n` recurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecurrenceOracle {
    Determinant,
    BruteForce(Exec),
}

/// Checks `Z_n|_{x_n = y_n} = c1(y_n, y_n) ∏_{i<n} a(x_i, y_n) ∏_{j<n} a(y_n, y_j) Z_{n-1}`.
///
/// `xs[n-1]` is ignored and replaced by `ys[n-1]`.
pub fn check_recurrence(
    q: &FieldScalar,
    xs: &[FieldScalar],
    ys: &[FieldScalar],
    oracle: RecurrenceOracle,
) -> Result<bool> {
    let n = xs.len();
    if n < 2 || ys.len() != n {
        return Err(Error::InvalidArgument(
            "recurrence needs n ≥ 2 and matching parameter lists".into(),
        ));
    }
    let mut xs_sub = xs.to_vec();
    xs_sub[n - 1] = ys[n - 1].clone();
    check_inputs(q, &xs_sub, ys)?;
    let yn = &ys[n - 1];
    let z = |xs: &[FieldScalar], ys: &[FieldScalar], cleared: bool| -> Result<FieldScalar> {
        match oracle {
            RecurrenceOracle::Determinant if cleared => izergin_cleared(q, xs, ys),
            RecurrenceOracle::Determinant => izergin(q, xs, ys),
            RecurrenceOracle::BruteForce(exec) => partition_function_brute(
                &WeightSystem::SixSymbolic {
                    q: q.clone(),
                    xs: xs.to_vec(),
                    ys: ys.to_vec(),
                },
                &BoundarySpec::Dwbc(xs.len()),
                exec,
            ),
        }
    };
    let lhs = z(&xs_sub, ys, true)?;
    let mut rhs = six_weights(q, yn, yn)?[4].clone();
    for x in &xs[..n - 1] {
        rhs = rhs * &six_weights(q, x, yn)?[0];
    }
    for y in &ys[..n - 1] {
        rhs = rhs * &six_weights(q, yn, y)?[0];
    }
    rhs = rhs * z(&xs[..n - 1], &ys[..n - 1], false)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(v: &[i64]) -> Vec<FieldScalar> {
        v.iter().map(|&x| FieldScalar::int(x)).collect()
    }

    fn brute(q: &FieldScalar, xs: &[FieldScalar], ys: &[FieldScalar]) -> FieldScalar {
        let w = WeightSystem::SixSymbolic {
            q: q.clone(),
            xs: xs.to_vec(),
            ys: ys.to_vec(),
        };
        partition_function_brute(&w, &BoundarySpec::Dwbc(xs.len()), Exec::Sequential).unwrap()
    }

    #[test]
    fn one_by_one() {
        let q = FieldScalar::int(3);
        let z = izergin(&q, &fs(&[2]), &fs(&[7])).unwrap();
        assert_eq!(z, (&q - &q.try_inv().unwrap()) * FieldScalar::int(7));
    }

    #[test]
    fn matches_brute_small() {
        let q = FieldScalar::int(3);
        let (xs, ys) = (fs(&[2, 5]), fs(&[7, 11]));
        assert_eq!(izergin(&q, &xs, &ys).unwrap(), brute(&q, &xs, &ys));
        assert_eq!(izergin_cleared(&q, &xs, &ys).unwrap(), brute(&q, &xs, &ys));
        let q = FieldScalar::frac(2, 5);
        let (xs, ys) = (fs(&[2, 5, -3]), fs(&[7, 11, 4]));
        assert_eq!(izergin(&q, &xs, &ys).unwrap(), brute(&q, &xs, &ys));
    }

    #[test]
    fn degenerate_inputs() {
        let q = FieldScalar::int(3);
        assert!(matches!(
            izergin(&q, &fs(&[2, 2]), &fs(&[7, 11])),
            Err(Error::DegenerateParameters(_))
        ));
        assert!(matches!(
            izergin(&q, &fs(&[2, 5]), &fs(&[2, 11])),
            Err(Error::DegenerateParameters(_))
        ));
        // x = y is fine once the kernel is cleared
        assert_eq!(
            izergin_cleared(&q, &fs(&[2, 5]), &fs(&[2, 11])).unwrap(),
            brute(&q, &fs(&[2, 5]), &fs(&[2, 11]))
        );
    }

    #[test]
    fn free_fermion_small() {
        let i = FieldScalar::i();
        let (xs, ys) = (fs(&[2, 5, 3]), fs(&[7, -1, 4]));
        assert_eq!(
            free_fermion_z(&xs[..1], &ys[..1]).unwrap(),
            FieldScalar::int(14) * &i
        );
        assert_eq!(
            free_fermion_z(&xs, &ys).unwrap(),
            izergin(&i, &xs, &ys).unwrap()
        );
        assert_eq!(free_fermion_z(&xs, &ys).unwrap(), brute(&i, &xs, &ys));
        assert!(free_fermion_z(&[FieldScalar::omega()], &fs(&[1])).is_err());
    }

    #[test]
    fn recurrence_both_oracles() {
        let q = FieldScalar::frac(3, 2);
        let (xs, ys) = (fs(&[2, 5, 9, 0]), fs(&[7, -1, 4, 6]));
        for n in 2..=4 {
            assert!(
                check_recurrence(&q, &xs[..n], &ys[..n], RecurrenceOracle::Determinant).unwrap()
            );
        }
        assert!(
            check_recurrence(&q, &xs, &ys, RecurrenceOracle::BruteForce(Exec::Sequential)).unwrap()
        );
    }
}
