use serde::{Deserialize, Serialize};

use super::asm::AsmMatrix;
use crate::error::{Error, Result};
use crate::sixvertex::SixVertexConfig;

/// Height function on the faces of an `n × n` domain-wall lattice,
/// `(n+1) × (n+1)` entries indexed like a matrix, zero at the top left.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i32>>", into = "Vec<Vec<i32>>")]
pub struct HeightFunction {
    h: Vec<Vec<i32>>,
}

impl HeightFunction {
    pub fn new(h: Vec<Vec<i32>>) -> Result<Self> {
        let m = h.len();
        if m < 2 {
            return Err(Error::InvalidHeight("need at least a 2x2 grid".into()));
        }
        let n = m - 1;
        if let Some(r) = h.iter().position(|r| r.len() != m) {
            return Err(Error::InvalidHeight(format!(
                "row {r} has {} entries, expected {m}",
                h[r].len()
            )));
        }
        for k in 0..=n {
            let k32 = k as i32;
            let n32 = n as i32;
            if h[k][0] != k32 || h[0][k] != k32 || h[k][n] != n32 - k32 || h[n][k] != n32 - k32 {
                return Err(Error::InvalidHeight(format!(
                    "boundary value wrong at index {k}"
                )));
            }
        }
        for i in 0..=n {
            for j in 0..=n {
                if j < n && (h[i][j] - h[i][j + 1]).abs() != 1 {
                    return Err(Error::InvalidHeight(format!(
                        "({i},{j}) and ({i},{}) differ by more than 1",
                        j + 1
                    )));
                }
                if i < n && (h[i][j] - h[i + 1][j]).abs() != 1 {
                    return Err(Error::InvalidHeight(format!(
                        "({i},{j}) and ({},{j}) differ by more than 1",
                        i + 1
                    )));
                }
            }
        }
        Ok(HeightFunction { h })
    }

    /// Height rises by one across an up arrow (left to right) and across
    /// a right arrow (top to bottom).
    pub fn from_config(c: &SixVertexConfig) -> Result<Self> {
        let n = c.require_dwbc()?;
        let mut h = vec![vec![0i32; n + 1]; n + 1];
        for i in 0..=n {
            if i > 0 {
                h[i][0] = h[i - 1][0] + if c.h_right(i - 1, 0) { 1 } else { -1 };
            }
            for j in 1..=n {
                h[i][j] = h[i][j - 1] + if c.v_up(i, j - 1) { 1 } else { -1 };
            }
        }
        HeightFunction::new(h)
    }

    /// `h_{ij} = i + j - 2·Σ_{r<i, c<j} A_{rc}`.
    pub fn from_asm(a: &AsmMatrix) -> Self {
        let n = a.n();
        let mut s = vec![vec![0i32; n + 1]; n + 1];
        for i in 1..=n {
            for j in 1..=n {
                s[i][j] = s[i - 1][j] + s[i][j - 1] - s[i - 1][j - 1] + a.get(i - 1, j - 1) as i32;
            }
        }
        let h = (0..=n)
            .map(|i| (0..=n).map(|j| (i + j) as i32 - 2 * s[i][j]).collect())
            .collect();
        HeightFunction { h }
    }

    /// `A_{ij} = (h_{i,j-1} + h_{i-1,j} - h_{ij} - h_{i-1,j-1}) / 2`.
    pub fn to_asm(&self) -> AsmMatrix {
        let n = self.n();
        let h = &self.h;
        let rows = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| ((h[i][j - 1] + h[i - 1][j] - h[i][j] - h[i - 1][j - 1]) / 2) as i8)
                    .collect()
            })
            .collect();
        AsmMatrix::new(rows).expect("valid height function gives a valid ASM")
    }

    pub fn to_config(&self) -> SixVertexConfig {
        self.to_asm().to_config()
    }

    pub fn n(&self) -> usize {
        self.h.len() - 1
    }

    pub fn grid(&self) -> &[Vec<i32>] {
        &self.h
    }

    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.h[i][j]
    }

    fn combine(&self, o: &Self, f: fn(i32, i32) -> i32) -> Result<Self> {
        if self.n() != o.n() {
            return Err(Error::SizeMismatch(self.n(), o.n()));
        }
        let h = self
            .h
            .iter()
            .zip(&o.h)
            .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect())
            .collect();
        HeightFunction::new(h)
    }

    /// Pointwise minimum.
    pub fn meet(&self, o: &Self) -> Result<Self> {
        self.combine(o, i32::min)
    }

    /// Pointwise maximum.
    pub fn join(&self, o: &Self) -> Result<Self> {
        self.combine(o, i32::max)
    }

    pub fn le(&self, o: &Self) -> bool {
        self.h
            .iter()
            .flatten()
            .zip(o.h.iter().flatten())
            .all(|(a, b)| a <= b)
    }
}

impl TryFrom<Vec<Vec<i32>>> for HeightFunction {
    type Error = Error;
    fn try_from(v: Vec<Vec<i32>>) -> Result<Self> {
        HeightFunction::new(v)
    }
}

impl From<HeightFunction> for Vec<Vec<i32>> {
    fn from(h: HeightFunction) -> Self {
        h.h
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
            HeightFunction::from_config(&c).unwrap().grid(),
            &[vec![0, 1], vec![1, 0]]
        );
    }

    #[test]
    fn two_routes_agree() {
        for c in enumerate_dwbc(4).unwrap() {
            let a = AsmMatrix::from_config(&c).unwrap();
            let h = HeightFunction::from_config(&c).unwrap();
            assert_eq!(HeightFunction::from_asm(&a), h);
            assert_eq!(h.to_asm(), a);
            assert_eq!(h.to_config(), c);
        }
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(HeightFunction::new(vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(HeightFunction::new(vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 0]]).is_err());
    }
}
