use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sixvertex::SixVertexConfig;

/// Triangle whose row `k` lists, 1-based, the columns carrying an up
/// arrow above row `k + 1`; row 0 is `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct MonotoneTriangle {
    rows: Vec<Vec<usize>>,
}

impl MonotoneTriangle {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = MonotoneTriangle { rows };
        t.validate(true)?;
        Ok(t)
    }

    fn validate(&self, full_top: bool) -> Result<()> {
        let n = self.rows.len();
        if n == 0 {
            return Err(Error::InvalidTriangle("empty triangle".into()));
        }
        for (k, row) in self.rows.iter().enumerate() {
            if row.len() != n - k {
                return Err(Error::InvalidTriangle(format!(
                    "row {k} has length {}, expected {}",
                    row.len(),
                    n - k
                )));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTriangle(format!(
                    "row {k} is not strictly increasing"
                )));
            }
            if row.iter().any(|&v| v == 0 || v > n) {
                return Err(Error::InvalidTriangle(format!(
                    "row {k} has an entry outside 1..={n}"
                )));
            }
            if k > 0 {
                let up = &self.rows[k - 1];
                for (j, &v) in row.iter().enumerate() {
                    if v < up[j] || v > up[j + 1] {
                        return Err(Error::InvalidTriangle(format!(
                            "row {k} entry {} breaks interlacing",
                            j + 1
                        )));
                    }
                }
            }
        }
        if full_top && self.rows[0] != (1..=n).collect::<Vec<_>>() {
            return Err(Error::InvalidTriangle(format!("top row must be 1..={n}")));
        }
        Ok(())
    }

    pub fn from_config(c: &SixVertexConfig) -> Result<Self> {
        let n = c.require_dwbc()?;
        let rows = (0..n)
            .map(|l| {
                (0..n)
                    .filter(|&col| c.v_up(l, col))
                    .map(|col| col + 1)
                    .collect()
            })
            .collect();
        Ok(MonotoneTriangle { rows })
    }

    pub fn to_config(&self) -> SixVertexConfig {
        let n = self.n();
        let mut levels: Vec<Vec<bool>> = self
            .rows
            .iter()
            .map(|r| {
                let mut l = vec![false; n];
                for &c in r {
                    l[c - 1] = true;
                }
                l
            })
            .collect();
        levels.push(vec![false; n]);
        SixVertexConfig::from_levels(&vec![true; n], &levels)
            .expect("valid triangle gives a valid configuration")
    }

    /// Row `j` lists the rows, numbered from the bottom, whose horizontal
    /// edge between columns `j` and `j + 1` points right.
    pub fn column_triangle(c: &SixVertexConfig) -> Result<Self> {
        let n = c.require_dwbc()?;
        let rows = (0..n)
            .map(|j| {
                let mut v: Vec<usize> =
                    (0..n).filter(|&r| c.h_right(r, j)).map(|r| n - r).collect();
                v.sort_unstable();
                v
            })
            .collect();
        let t = MonotoneTriangle { rows };
        t.validate(true)?;
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }
}

impl TryFrom<Vec<Vec<usize>>> for MonotoneTriangle {
    type Error = Error;
    fn try_from(v: Vec<Vec<usize>>) -> Result<Self> {
        MonotoneTriangle::new(v)
    }
}

impl From<MonotoneTriangle> for Vec<Vec<usize>> {
    fn from(t: MonotoneTriangle) -> Self {
        t.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sixvertex::enumerate_dwbc;

    #[test]
    fn smallest() {
        let c = enumerate_dwbc(1).unwrap().next().unwrap();
        assert_eq!(
            MonotoneTriangle::from_config(&c).unwrap().rows(),
            &[vec![1]]
        );
    }

    #[test]
    fn rejects() {
        assert!(MonotoneTriangle::new(vec![vec![1, 2], vec![3]]).is_err());
        assert!(MonotoneTriangle::new(vec![vec![1, 3], vec![2]]).is_err());
        assert!(MonotoneTriangle::new(vec![vec![1, 2, 3], vec![1, 3], vec![3]]).is_ok());
        assert!(MonotoneTriangle::new(vec![vec![1, 2, 3], vec![2, 2], vec![2]]).is_err());
    }
}
