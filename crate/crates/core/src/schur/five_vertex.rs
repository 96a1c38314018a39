use super::partition::Partition;
use super::tableau::Ssyt;
use crate::error::{Error, Result};
use crate::exactmath::{det_exact, FieldScalar, Matrix, TruncatedSeries};
use crate::exec::Exec;
use crate::sixvertex::{
    collect_configs, partition_function_brute, BoundarySpec, EdgeBoundary, SixVertexConfig,
    VertexType, WeightSystem,
};

fn check_vars(lambda: &Partition, n: usize, zs: &[FieldScalar]) -> Result<()> {
    if zs.len() != n {
        return Err(Error::SizeMismatch(n, zs.len()));
    }
    if lambda.len() > n {
        return Err(Error::InvalidArgument(format!(
            "partition {lambda} has more than {n} parts"
        )));
    }
    Ok(())
}

/// Partition function of the `n × p` lattice whose paths exit the top at
/// columns `n + 1 - i + λ_i`, with five-vertex row weights.
pub fn five_vertex_z(
    lambda: &Partition,
    n: usize,
    p: usize,
    zs: &[FieldScalar],
    alpha: &FieldScalar,
    exec: Exec,
) -> Result<FieldScalar> {
    check_vars(lambda, n, zs)?;
    let w = WeightSystem::FiveVertex {
        zs: zs.to_vec(),
        alpha: alpha.clone(),
    };
    partition_function_brute(
        &w,
        &BoundarySpec::PartialDwbc {
            lambda: lambda.clone(),
            n,
            p,
        },
        exec,
    )
}

/// Same weights on the lattice widened by `n` columns on the left, with
/// the paths entering from the bottom.
pub fn extended_five_vertex_z(
    lambda: &Partition,
    n: usize,
    p: usize,
    zs: &[FieldScalar],
    alpha: &FieldScalar,
    exec: Exec,
) -> Result<FieldScalar> {
    check_vars(lambda, n, zs)?;
    let w = WeightSystem::FiveVertex {
        zs: zs.to_vec(),
        alpha: alpha.clone(),
    };
    let b = EdgeBoundary::extended_partial_dwbc(lambda, n, p)?;
    partition_function_brute(&w, &BoundarySpec::Custom(b), exec)
}

/// `∏ (u + α z_i) / (1 - u z_i)` as a series in `u` to degree `d`.
pub fn h_alpha_series(
    zs: &[FieldScalar],
    alpha: &FieldScalar,
    d: u32,
) -> Result<TruncatedSeries<FieldScalar>> {
    FieldScalar::common_tag(zs.iter().chain([alpha]))?;
    let one = TruncatedSeries::one(1, d);
    let u = TruncatedSeries::<FieldScalar>::var(1, d, 0);
    let mut acc = one.clone();
    for z in zs {
        let num = u.add(&TruncatedSeries::constant(1, d, alpha * z))?;
        let den = one.sub(&u.scale(z))?;
        acc = acc.mul(&num)?.mul(&den.invert()?)?;
    }
    Ok(acc)
}

/// `h^{(α)}_k`: the coefficient of `u^{k+n}`, zero when `k + n < 0`.
pub fn h_alpha(series: &TruncatedSeries<FieldScalar>, n: usize, k: i64) -> Result<FieldScalar> {
    let idx = k + n as i64;
    if idx < 0 {
        return Ok(FieldScalar::int(0));
    }
    if idx as u32 > series.max_degree() {
        return Err(Error::TruncationTooSmall {
            have: series.max_degree(),
            need: idx as u32,
        });
    }
    Ok(series.coeff(&[idx as u32]))
}

/// Truncation degree needed by [`lgv_determinant`].
pub fn lgv_degree(lambda: &Partition, n: usize) -> u32 {
    lambda.first() + 2 * n as u32 - 1
}

/// `det h^{(α)}_{λ_j - j + i}` from a precomputed series.
pub fn lgv_from_series(
    lambda: &Partition,
    n: usize,
    series: &TruncatedSeries<FieldScalar>,
) -> Result<FieldScalar> {
    if n == 0 {
        return Ok(FieldScalar::int(1));
    }
    let need = lgv_degree(lambda, n);
    if series.max_degree() < need {
        return Err(Error::TruncationTooSmall {
            have: series.max_degree(),
            need,
        });
    }
    let lam = lambda.padded(n);
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for (j, &l) in lam.iter().enumerate() {
            entries.push(h_alpha(series, n, l as i64 - j as i64 + i as i64)?);
        }
    }
    det_exact(&Matrix::from_fn(n, n, |i, j| entries[i * n + j].clone()))
}

/// Non-intersecting path determinant for the extended lattice.
pub fn lgv_determinant(
    lambda: &Partition,
    zs: &[FieldScalar],
    alpha: &FieldScalar,
) -> Result<FieldScalar> {
    let n = zs.len();
    check_vars(lambda, n, zs)?;
    let series = h_alpha_series(zs, alpha, lgv_degree(lambda, n))?;
    lgv_from_series(lambda, n, &series)
}

/// A path configuration without straight vertical steps.
///
/// `turns[t - 1][k]` is the 1-based column where the path entering row
/// `t` (rows counted from the bottom) steps up out of row `t + k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathConfigFiveVertex {
    n: usize,
    p: usize,
    turns: Vec<Vec<usize>>,
}

impl PathConfigFiveVertex {
    pub fn new(n: usize, p: usize, turns: Vec<Vec<usize>>) -> Result<Self> {
        let c = PathConfigFiveVertex { n, p, turns };
        let back = Self::from_config(&c.to_config()?)?;
        if back != c {
            return Err(Error::InvalidConfig(
                "turn columns do not describe osculating paths".into(),
            ));
        }
        Ok(c)
    }

    pub fn from_config(c: &SixVertexConfig) -> Result<Self> {
        let (n, p) = (c.n_rows(), c.n_cols());
        let b = c.boundary();
        if b.left.iter().any(|&x| !x) || b.right.iter().any(|&x| x) || b.bottom.iter().any(|&x| x) {
            return Err(Error::InvalidConfig(
                "paths must enter on the left and leave through the top".into(),
            ));
        }
        if let Some(i) = c.vertices().iter().position(|&v| v == VertexType::B1) {
            return Err(Error::InvalidConfig(format!(
                "row {}, col {}: straight vertical step",
                i / p + 1,
                i % p + 1
            )));
        }
        let mut turns = vec![Vec::new(); n];
        for rho in 1..=n {
            let mut ups: Vec<usize> = (0..p)
                .filter(|&col| c.v_up(n - rho, col))
                .map(|col| col + 1)
                .collect();
            if ups.len() != rho {
                return Err(Error::InvalidConfig(format!(
                    "{} paths above row {rho} from the bottom",
                    ups.len()
                )));
            }
            ups.reverse();
            for (t, &col) in ups.iter().enumerate() {
                turns[t].push(col);
            }
        }
        Ok(PathConfigFiveVertex { n, p, turns })
    }

    pub fn to_config(&self) -> Result<SixVertexConfig> {
        let (n, p) = (self.n, self.p);
        if self.turns.len() != n || self.turns.iter().enumerate().any(|(t, v)| v.len() != n - t) {
            return Err(Error::InvalidConfig(
                "path t needs one turn per row from t to the top".into(),
            ));
        }
        let mut levels = vec![vec![false; p]; n + 1];
        for (t, row) in self.turns.iter().enumerate() {
            for (k, &col) in row.iter().enumerate() {
                let rho = t + 1 + k;
                if col == 0 || col > p {
                    return Err(Error::InvalidConfig(format!(
                        "turn column {col} outside 1..={p}"
                    )));
                }
                levels[n - rho][col - 1] = true;
            }
        }
        SixVertexConfig::from_levels(&vec![true; n], &levels)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn turns(&self) -> &[Vec<usize>] {
        &self.turns
    }

    /// Top boundary read back as a partition.
    pub fn shape(&self) -> Result<Partition> {
        let parts = self
            .turns
            .iter()
            .enumerate()
            .map(|(t, v)| (v[v.len() - 1] + t) as u32 - self.n as u32)
            .collect();
        Partition::new(parts)
    }
}

/// Row `t` of the tableau lists `ρ` once per horizontal step of path `t`
/// in row `ρ`.
pub fn path_to_ssyt(c: &PathConfigFiveVertex) -> Result<Ssyt> {
    let mut rows = Vec::with_capacity(c.n);
    for (t, row) in c.turns.iter().enumerate() {
        let mut prev = 0;
        let mut out = Vec::new();
        for (k, &col) in row.iter().enumerate() {
            if col <= prev {
                return Err(Error::InvalidConfig(format!(
                    "path {} does not move right in row {}",
                    t + 1,
                    t + 1 + k
                )));
            }
            out.extend(std::iter::repeat_n((t + 1 + k) as u32, col - prev - 1));
            prev = col;
        }
        rows.push(out);
    }
    Ssyt::new(rows)
}

pub fn ssyt_to_path(tab: &Ssyt, n: usize, p: usize) -> Result<PathConfigFiveVertex> {
    let rows = tab.rows();
    if rows.len() > n {
        return Err(Error::InvalidTableau(format!(
            "{} rows need more than {n} paths",
            rows.len()
        )));
    }
    let mut turns = Vec::with_capacity(n);
    for t in 1..=n {
        let row: &[u32] = rows.get(t - 1).map_or(&[], Vec::as_slice);
        if row.iter().any(|&v| v as usize > n || (v as usize) < t) {
            return Err(Error::InvalidTableau(format!(
                "row {t} has entries outside {t}..={n}"
            )));
        }
        let mut col = 0;
        let mut v = Vec::with_capacity(n - t + 1);
        for rho in t..=n {
            col += 1 + row.iter().filter(|&&x| x as usize == rho).count();
            v.push(col);
        }
        if col > p {
            return Err(Error::WidthTooSmall { p, need: col });
        }
        turns.push(v);
    }
    PathConfigFiveVertex::new(n, p, turns)
}

/// Every straight-step-free configuration for `λ` on an `n × p` lattice.
pub fn path_configs(
    lambda: &Partition,
    n: usize,
    p: usize,
    exec: Exec,
) -> Result<Vec<PathConfigFiveVertex>> {
    let b = EdgeBoundary::partial_dwbc(lambda, n, p)?;
    crate::exec::check_cap(n)?;
    collect_configs(&b, exec)
        .iter()
        .filter(|c| !c.vertices().contains(&VertexType::B1))
        .map(PathConfigFiveVertex::from_config)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::{schur_bialternant, schur_jacobi_trudi, ssyt_enumerate};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn fs(v: &[i64]) -> Vec<FieldScalar> {
        v.iter().map(|&x| FieldScalar::int(x)).collect()
    }

    fn pairs(zs: &[FieldScalar], alpha: &FieldScalar, strict: bool, ordered: bool) -> FieldScalar {
        let mut r = FieldScalar::int(1);
        for i in 0..zs.len() {
            for j in 0..zs.len() {
                if (!ordered && j < i) || (strict && i == j) {
                    continue;
                }
                r = r * (FieldScalar::int(1) + alpha * &zs[i] * &zs[j]);
            }
        }
        r
    }

    #[test]
    fn small_values() {
        let zero = FieldScalar::int(0);
        let z = fs(&[2, 3]);
        assert_eq!(
            five_vertex_z(&p(""), 2, 2, &z, &zero, Exec::Sequential).unwrap(),
            FieldScalar::int(1)
        );
        assert_eq!(
            five_vertex_z(&p("1"), 2, 3, &z, &zero, Exec::Sequential).unwrap(),
            FieldScalar::int(5)
        );
        let a = FieldScalar::int(1);
        let one_site = five_vertex_z(&p(""), 1, 1, &fs(&[3]), &a, Exec::Sequential).unwrap();
        assert_eq!(one_site, FieldScalar::int(10));
        assert!(matches!(
            five_vertex_z(&p("2"), 2, 3, &z, &zero, Exec::Sequential),
            Err(Error::WidthTooSmall { p: 3, need: 4 })
        ));
    }

    #[test]
    fn prefactors() {
        let z = vec![
            FieldScalar::frac(1, 2),
            FieldScalar::int(3),
            FieldScalar::frac(-2, 3),
        ];
        let a = FieldScalar::frac(2, 5);
        let lam = p("2,1");
        let s = schur_bialternant(&lam, &z).unwrap();
        let plain = five_vertex_z(&lam, 3, 5, &z, &a, Exec::Sequential).unwrap();
        assert_eq!(plain, pairs(&z, &a, false, false) * &s);
        let wide = five_vertex_z(&lam, 3, 7, &z, &a, Exec::Sequential).unwrap();
        assert_eq!(wide, plain);
        let ext = extended_five_vertex_z(&lam, 3, 5, &z, &a, Exec::Sequential).unwrap();
        assert_eq!(ext, pairs(&z, &a, false, true) * &s);
        assert_eq!(lgv_determinant(&lam, &z, &a).unwrap(), ext);
        assert_eq!(ext / plain, pairs(&z, &a, true, false));
    }

    #[test]
    fn lgv_reduces_to_jacobi_trudi() {
        let z = fs(&[2, -3, 5]);
        let lam = p("3,1");
        let zero = FieldScalar::int(0);
        assert_eq!(
            lgv_determinant(&lam, &z, &zero).unwrap(),
            schur_jacobi_trudi(&lam, &z).unwrap()
        );
        let z2 = fs(&[2, 3]);
        let one = FieldScalar::int(1);
        let want = FieldScalar::int(5 * 7 * 7 * 10 * 5);
        assert_eq!(lgv_determinant(&p("1"), &z2, &one).unwrap(), want);
        let s = h_alpha_series(&z2, &one, 2).unwrap();
        assert!(matches!(
            lgv_from_series(&p("1"), 2, &s),
            Err(Error::TruncationTooSmall { have: 2, need: 4 })
        ));
    }

    #[test]
    fn single_path() {
        let z = fs(&[3]);
        let a = FieldScalar::int(2);
        let series = h_alpha_series(&z, &a, 6).unwrap();
        for k in 0..5u32 {
            let lam = Partition::new(vec![k]).unwrap();
            let direct =
                extended_five_vertex_z(&lam, 1, 1 + k as usize, &z, &a, Exec::Sequential).unwrap();
            assert_eq!(h_alpha(&series, 1, k as i64).unwrap(), direct);
        }
    }

    #[test]
    fn bijection_with_tableaux() {
        let lam = p("2,1");
        let paths = path_configs(&lam, 3, 5, Exec::Sequential).unwrap();
        let mut tabs: Vec<Ssyt> = paths.iter().map(|c| path_to_ssyt(c).unwrap()).collect();
        tabs.sort();
        let mut want = ssyt_enumerate(&lam, 3);
        want.sort();
        assert_eq!(tabs, want);
        for c in &paths {
            assert_eq!(&ssyt_to_path(&path_to_ssyt(c).unwrap(), 3, 5).unwrap(), c);
            assert_eq!(c.shape().unwrap(), lam);
        }
        let empty = path_configs(&p(""), 2, 2, Exec::Sequential).unwrap();
        assert_eq!(empty.len(), 1);
        assert!(path_to_ssyt(&empty[0]).unwrap().rows().is_empty());
    }

    #[test]
    fn alpha_scaling() {
        let z = vec![FieldScalar::frac(1, 3), FieldScalar::int(2)];
        let t = FieldScalar::frac(3, 2);
        let lam = p("2,1");
        let lhs = five_vertex_z(&lam, 2, 4, &z, &(&t * &t), Exec::Sequential).unwrap();
        let tz: Vec<FieldScalar> = z.iter().map(|x| x * &t).collect();
        let rhs = five_vertex_z(&lam, 2, 4, &tz, &FieldScalar::int(1), Exec::Sequential).unwrap();
        assert_eq!(lhs, rhs * t.powi(-3).unwrap());
    }
}
