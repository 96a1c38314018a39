use std::fmt;

use serde::{Deserialize, Serialize};

use super::asm::AsmMatrix;
use crate::error::{Error, Result};
use crate::sixvertex::SixVertexConfig;

/// Permutation in one-line notation, values `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(v: Vec<usize>) -> Result<Self> {
        let n = v.len();
        let mut seen = vec![false; n + 1];
        for &x in &v {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidArgument(format!(
                    "{v:?} is not a permutation"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation(v))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inversions(&self) -> usize {
        let v = &self.0;
        (0..v.len())
            .map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count())
            .sum()
    }

    /// `r[i][j] = #{k ≤ i : σ(k) ≤ j}`, 1-based `i, j`.
    pub fn rank_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut r = vec![vec![0; n + 1]; n + 1];
        for i in 1..=n {
            for j in 1..=n {
                r[i][j] = r[i - 1][j] + usize::from(self.0[i - 1] <= j);
            }
        }
        r
    }

    pub fn all(n: usize) -> Vec<Permutation> {
        fn go(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    go(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(n, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
        out
    }

    /// Permutation matrix with a 1 at `(i, σ(i))`.
    pub fn to_asm(&self) -> AsmMatrix {
        let n = self.len();
        let rows = (0..n)
            .map(|i| (1..=n).map(|j| i8::from(self.0[i] == j)).collect())
            .collect();
        AsmMatrix::new(rows).expect("permutation matrix")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() >= 10 { " " } else { "" };
        let s: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", s.join(sep))
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

/// The permutation of a configuration with one `C` vertex per row.
pub fn rook_structure(c: &SixVertexConfig) -> Result<Option<Permutation>> {
    let a = AsmMatrix::from_config(c)?;
    if !a.is_permutation() {
        return Ok(None);
    }
    let v = a
        .rows()
        .iter()
        .map(|r| r.iter().position(|&x| x == 1).expect("row has a 1") + 1)
        .collect();
    Ok(Some(Permutation(v)))
}

/// Bruhat order by rank matrices: `p ≤ q` iff `r_p ≥ r_q` entrywise.
pub fn bruhat_leq(p: &Permutation, q: &Permutation) -> bool {
    if p.len() != q.len() {
        return false;
    }
    let (rp, rq) = (p.rank_matrix(), q.rank_matrix());
    rp.iter()
        .flatten()
        .zip(rq.iter().flatten())
        .all(|(a, b)| a >= b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bruhat_basics() {
        let id = Permutation::new(vec![1, 2, 3]).unwrap();
        let w0 = Permutation::new(vec![3, 2, 1]).unwrap();
        for p in Permutation::all(3) {
            assert!(bruhat_leq(&id, &p));
            assert!(bruhat_leq(&p, &w0));
        }
        let a = Permutation::new(vec![2, 1, 3]).unwrap();
        let b = Permutation::new(vec![1, 3, 2]).unwrap();
        assert!(!bruhat_leq(&a, &b) && !bruhat_leq(&b, &a));
        assert_eq!(w0.inversions(), 3);
        assert!(Permutation::new(vec![1, 1]).is_err());
    }
}
