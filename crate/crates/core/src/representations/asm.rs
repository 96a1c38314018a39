use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sixvertex::SixVertexConfig;

/// Alternating sign matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i8>>", into = "Vec<Vec<i8>>")]
pub struct AsmMatrix {
    entries: Vec<Vec<i8>>,
}

impl AsmMatrix {
    pub fn new(entries: Vec<Vec<i8>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidAsm("empty matrix".into()));
        }
        if let Some(r) = entries.iter().position(|r| r.len() != n) {
            return Err(Error::InvalidAsm(format!(
                "row {} has {} entries, expected {n}",
                r + 1,
                entries[r].len()
            )));
        }
        let check_line = |what: &str, k: usize, line: Vec<i8>| -> Result<()> {
            let mut partial = 0i32;
            for &v in &line {
                if !(-1..=1).contains(&v) {
                    return Err(Error::InvalidAsm(format!(
                        "{what} {}: entry {v} outside -1..1",
                        k + 1
                    )));
                }
                partial += v as i32;
                if !(0..=1).contains(&partial) {
                    return Err(Error::InvalidAsm(format!(
                        "{what} {}: signs do not alternate",
                        k + 1
                    )));
                }
            }
            if partial != 1 {
                return Err(Error::InvalidAsm(format!(
                    "{what} {} sums to {partial}",
                    k + 1
                )));
            }
            Ok(())
        };
        for i in 0..n {
            check_line("row", i, entries[i].clone())?;
            check_line("column", i, entries.iter().map(|r| r[i]).collect())?;
        }
        Ok(AsmMatrix { entries })
    }

    /// Reads `C1 ↦ 1`, `C2 ↦ -1`, others `↦ 0`.
    pub fn from_config(c: &SixVertexConfig) -> Result<Self> {
        c.require_dwbc()?;
        Ok(Self::from_config_unchecked(c))
    }

    pub(crate) fn from_config_unchecked(c: &SixVertexConfig) -> Self {
        AsmMatrix {
            entries: c
                .rows()
                .map(|r| r.iter().map(|v| v.asm_entry()).collect())
                .collect(),
        }
    }

    /// Up-arrows at level `l` are the columns whose partial sum over the
    /// first `l` rows is still zero.
    pub fn to_config(&self) -> SixVertexConfig {
        let n = self.n();
        let mut levels = vec![vec![true; n]];
        for i in 0..n {
            let prev = &levels[i];
            let next: Vec<bool> = (0..n)
                .map(|c| (prev[c] as i8 - self.entries[i][c]) == 1)
                .collect();
            levels.push(next);
        }
        SixVertexConfig::from_levels(&vec![true; n], &levels)
            .expect("valid ASM gives a valid configuration")
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.entries
    }

    pub fn is_permutation(&self) -> bool {
        self.entries.iter().flatten().all(|&v| v >= 0)
    }
}

impl TryFrom<Vec<Vec<i8>>> for AsmMatrix {
    type Error = Error;
    fn try_from(v: Vec<Vec<i8>>) -> Result<Self> {
        AsmMatrix::new(v)
    }
}

impl From<AsmMatrix> for Vec<Vec<i8>> {
    fn from(a: AsmMatrix) -> Self {
        a.entries
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(AsmMatrix::new(vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]).is_ok());
        assert!(AsmMatrix::new(vec![vec![1, 0], vec![1, 0]]).is_err());
        assert!(AsmMatrix::new(vec![vec![-1, 1, 1], vec![1, 0, 0], vec![1, 0, 0]]).is_err());
        assert!(serde_json::from_str::<AsmMatrix>("[[0,1],[1,0]]").is_ok());
        assert!(serde_json::from_str::<AsmMatrix>("[[2]]").is_err());
    }

    #[test]
    fn config_round_trip() {
        let a = AsmMatrix::new(vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]).unwrap();
        let c = a.to_config();
        assert!(c.is_dwbc());
        assert_eq!(AsmMatrix::from_config(&c).unwrap(), a);
    }
}
