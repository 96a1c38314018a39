use super::config::{BoundarySpec, SixVertexConfig};
use super::enumerate::fold_configs;
use crate::error::{Error, Result};
use crate::exactmath::{FieldScalar, FieldTag};
use crate::exec::{check_cap, Exec};

/// Local Boltzmann weights, one table of six values per lattice site.
#[derive(Clone, Debug, PartialEq)]
pub enum WeightSystem {
    /// Trigonometric weights with row parameters `xs` and column parameters `ys`.
    SixSymbolic {
        q: FieldScalar,
        xs: Vec<FieldScalar>,
        ys: Vec<FieldScalar>,
    },
    /// Explicit weights `[a1, a2, b1, b2, c1, c2]` indexed `[row][col]`.
    SixExplicit(Vec<Vec<[FieldScalar; 6]>>),
    /// Five-vertex weights `a = 1, b1 = αz, b2 = z, c1 = 1 + αz², c2 = 1`.
    /// `zs[0]` belongs to the bottom row.
    FiveVertex {
        zs: Vec<FieldScalar>,
        alpha: FieldScalar,
    },
}

/// `[a, a, b, b, c1, c2]` with `a = qx - q⁻¹y`, `b = x - y`,
/// `c1 = (q - q⁻¹)y`, `c2 = (q - q⁻¹)x`.
pub fn six_weights(q: &FieldScalar, x: &FieldScalar, y: &FieldScalar) -> Result<[FieldScalar; 6]> {
    let qi = q
        .try_inv()
        .map_err(|_| Error::DegenerateParameters("q = 0".into()))?;
    let a = q.try_mul(x)?.try_sub(&qi.try_mul(y)?)?;
    let b = x.try_sub(y)?;
    let d = q.try_sub(&qi)?;
    let c1 = d.try_mul(y)?;
    let c2 = d.try_mul(x)?;
    Ok([a.clone(), a, b.clone(), b, c1, c2])
}

pub fn five_weights(z: &FieldScalar, alpha: &FieldScalar) -> Result<[FieldScalar; 6]> {
    let one = FieldScalar::int(1);
    let az = alpha.try_mul(z)?;
    let c1 = one.try_add(&az.try_mul(z)?)?;
    Ok([one.clone(), one.clone(), az, z.clone(), c1, one])
}

impl WeightSystem {
    pub fn uniform(n_rows: usize, n_cols: usize, w: [FieldScalar; 6]) -> Self {
        WeightSystem::SixExplicit(vec![vec![w; n_cols]; n_rows])
    }

    pub fn all_ones(n_rows: usize, n_cols: usize) -> Self {
        Self::uniform(n_rows, n_cols, std::array::from_fn(|_| FieldScalar::int(1)))
    }

    pub fn tag(&self) -> Result<FieldTag> {
        match self {
            WeightSystem::SixSymbolic { q, xs, ys } => {
                FieldScalar::common_tag(std::iter::once(q).chain(xs).chain(ys))
            }
            WeightSystem::SixExplicit(t) => FieldScalar::common_tag(t.iter().flatten().flatten()),
            WeightSystem::FiveVertex { zs, alpha } => {
                FieldScalar::common_tag(zs.iter().chain([alpha]))
            }
        }
    }

    /// Weight table for every site of an `n_rows × n_cols` lattice.
    pub fn site_table(&self, n_rows: usize, n_cols: usize) -> Result<Vec<[FieldScalar; 6]>> {
        self.tag()?;
        let shape_err = |what: &str, got: usize, want: usize| {
            Err(Error::InvalidArgument(format!(
                "{what}: got {got}, lattice needs {want}"
            )))
        };
        let mut out = Vec::with_capacity(n_rows * n_cols);
        match self {
            WeightSystem::SixSymbolic { q, xs, ys } => {
                if xs.len() != n_rows {
                    return shape_err("row parameters", xs.len(), n_rows);
                }
                if ys.len() != n_cols {
                    return shape_err("column parameters", ys.len(), n_cols);
                }
                for x in xs {
                    for y in ys {
                        out.push(six_weights(q, x, y)?);
                    }
                }
            }
            WeightSystem::SixExplicit(t) => {
                if t.len() != n_rows {
                    return shape_err("weight rows", t.len(), n_rows);
                }
                for row in t {
                    if row.len() != n_cols {
                        return shape_err("weight columns", row.len(), n_cols);
                    }
                    out.extend(row.iter().cloned());
                }
            }
            WeightSystem::FiveVertex { zs, alpha } => {
                if zs.len() != n_rows {
                    return shape_err("row parameters", zs.len(), n_rows);
                }
                for r in 0..n_rows {
                    let w = five_weights(&zs[n_rows - 1 - r], alpha)?;
                    out.extend(std::iter::repeat_n(w, n_cols));
                }
            }
        }
        Ok(out)
    }
}

/// Product of local weights over a configuration.
pub fn config_weight(c: &SixVertexConfig, table: &[[FieldScalar; 6]]) -> FieldScalar {
    c.vertices()
        .iter()
        .zip(table)
        .fold(FieldScalar::int(1), |acc, (v, w)| acc * &w[v.index()])
}

/// Sum of [`config_weight`] over every configuration with the given boundary.
pub fn partition_function_brute(
    weights: &WeightSystem,
    boundary: &BoundarySpec,
    exec: Exec,
) -> Result<FieldScalar> {
    let b = boundary.edges()?;
    check_cap(b.n_rows)?;
    let table = weights.site_table(b.n_rows, b.n_cols)?;
    Ok(fold_configs(
        &b,
        exec,
        FieldScalar::int(0),
        |acc, c| *acc = &*acc + &config_weight(c, &table),
        |a, b| a + b,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(n: i64) -> FieldScalar {
        FieldScalar::int(n)
    }

    #[test]
    fn single_vertex() {
        let (q, x, y) = (fs(3), fs(2), fs(7));
        let w = WeightSystem::SixSymbolic {
            q: q.clone(),
            xs: vec![x],
            ys: vec![y.clone()],
        };
        let z = partition_function_brute(&w, &BoundarySpec::Dwbc(1), Exec::Sequential).unwrap();
        assert_eq!(z, (&q - &q.try_inv().unwrap()) * y);
    }

    #[test]
    fn unit_weights_count() {
        for (n, want) in [(2, 2), (3, 7)] {
            let z = partition_function_brute(
                &WeightSystem::all_ones(n, n),
                &BoundarySpec::Dwbc(n),
                Exec::Parallel,
            )
            .unwrap();
            assert_eq!(z, fs(want));
        }
    }

    #[test]
    fn shape_and_tag_errors() {
        let w = WeightSystem::SixSymbolic {
            q: fs(2),
            xs: vec![fs(1)],
            ys: vec![fs(3), fs(4)],
        };
        assert!(partition_function_brute(&w, &BoundarySpec::Dwbc(2), Exec::Sequential).is_err());
        let w = WeightSystem::SixSymbolic {
            q: FieldScalar::i(),
            xs: vec![FieldScalar::omega()],
            ys: vec![fs(1)],
        };
        assert!(matches!(
            partition_function_brute(&w, &BoundarySpec::Dwbc(1), Exec::Sequential),
            Err(Error::TagMismatch(..))
        ));
    }
}
