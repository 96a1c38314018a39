use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{Error, Result};
use crate::exactmath::FieldScalar;

/// Semistandard tableau, rows listed longest first: rows weakly
/// increase, columns strictly increase away from the first row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ssyt {
    rows: Vec<Vec<u32>>,
}

impl Ssyt {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        for (i, r) in rows.iter().enumerate() {
            if r.contains(&0) {
                return Err(Error::InvalidTableau("entries start at 1".into()));
            }
            if r.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!("row {} decreases", i + 1)));
            }
            if i > 0 {
                let up = &rows[i - 1];
                if r.len() > up.len() {
                    return Err(Error::InvalidTableau(format!(
                        "row {} is longer than the row before",
                        i + 1
                    )));
                }
                if r.iter().zip(up).any(|(a, b)| a <= b) {
                    return Err(Error::InvalidTableau(format!(
                        "column strictness fails in row {}",
                        i + 1
                    )));
                }
            }
        }
        Ok(Ssyt { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect()).expect("rows shrink")
    }

    /// `content[i]` counts the entries equal to `i + 1`.
    pub fn content(&self, n: usize) -> Vec<u32> {
        let mut c = vec![0; n];
        for &v in self.rows.iter().flatten() {
            c[v as usize - 1] += 1;
        }
        c
    }
}

impl fmt::Display for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Every tableau of shape `λ` with entries in `1..=n`, in row-reading
/// lexicographic order.
pub fn ssyt_enumerate(lambda: &Partition, n: usize) -> Vec<Ssyt> {
    let shape = lambda.parts().to_vec();
    let mut rows: Vec<Vec<u32>> = shape
        .iter()
        .map(|&l| Vec::with_capacity(l as usize))
        .collect();
    let mut out = Vec::new();
    fn go(shape: &[u32], n: u32, r: usize, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Ssyt>) {
        if r == shape.len() {
            out.push(Ssyt { rows: rows.clone() });
            return;
        }
        let c = rows[r].len();
        if c == shape[r] as usize {
            go(shape, n, r + 1, rows, out);
            return;
        }
        let lo_left = rows[r].last().copied().unwrap_or(1);
        let lo_up = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        for v in lo_left.max(lo_up)..=n {
            rows[r].push(v);
            go(shape, n, r, rows, out);
            rows[r].pop();
        }
    }
    go(&shape, n as u32, 0, &mut rows, &mut out);
    out
}

/// Monomial expansion `content ↦ number of tableaux`.
pub fn schur_monomials(lambda: &Partition, n: usize) -> BTreeMap<Vec<u32>, u64> {
    let mut m = BTreeMap::new();
    for t in ssyt_enumerate(lambda, n) {
        *m.entry(t.content(n)).or_insert(0) += 1;
    }
    m
}

/// `Σ_T ∏ z_i^{#i in T}`.
pub fn schur_ssyt(lambda: &Partition, zs: &[FieldScalar]) -> Result<FieldScalar> {
    FieldScalar::common_tag(zs)?;
    let mut total = FieldScalar::int(0);
    for (content, count) in schur_monomials(lambda, zs.len()) {
        let mut term = FieldScalar::int(count as i64);
        for (z, &e) in zs.iter().zip(&content) {
            term = term * z.powi(e as i64)?;
        }
        total = total + term;
    }
    Ok(total)
}

/// Kostka numbers by peeling horizontal strips, memoised on the sorted
/// content (they are symmetric in it).
#[derive(Default)]
pub struct Kostka {
    memo: HashMap<(Vec<u32>, Vec<u32>), u64>,
}

impl Kostka {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, lambda: &Partition, content: &[u32]) -> u64 {
        let mut c: Vec<u32> = content.iter().copied().filter(|&x| x > 0).collect();
        c.sort_unstable_by(|a, b| b.cmp(a));
        self.rec(lambda.parts().to_vec(), c)
    }

    fn rec(&mut self, shape: Vec<u32>, content: Vec<u32>) -> u64 {
        let size: u32 = shape.iter().sum();
        if size != content.iter().sum::<u32>() {
            return 0;
        }
        if content.is_empty() {
            return 1;
        }
        if shape.len() > content.len() {
            return 0;
        }
        let key = (shape, content);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let (shape, content) = key.clone();
        let last = *content.last().expect("nonempty");
        let rest = content[..content.len() - 1].to_vec();
        let mut total = 0;
        for inner in horizontal_strips(&shape, last) {
            total += self.rec(inner, rest.clone());
        }
        self.memo.insert(key, total);
        total
    }
}

/// Shapes `μ ⊆ λ` with `λ/μ` a horizontal strip of `k` boxes.
fn horizontal_strips(shape: &[u32], k: u32) -> Vec<Vec<u32>> {
    fn go(shape: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == shape.len() {
            if left == 0 {
                let mut v = cur.clone();
                while v.last() == Some(&0) {
                    v.pop();
                }
                out.push(v);
            }
            return;
        }
        let lo = shape.get(i + 1).copied().unwrap_or(0);
        for m in (lo..=shape[i]).rev() {
            let take = shape[i] - m;
            if take > left {
                break;
            }
            cur.push(m);
            go(shape, i + 1, left - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(shape, 0, k, &mut Vec::new(), &mut out);
    out
}
