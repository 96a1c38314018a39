//! Row-by-row depth-first enumeration of lattice fillings.
//!
//! A row is fixed by the arrows on its top edges and its left/right
//! boundary; the search walks rows top to bottom and, inside a row,
//! columns left to right, trying vertex types in [`VertexType::ALL`]
//! order. The resulting order is lexicographic in the row-major vertex
//! sequence and is the same for sequential and parallel traversal.

use super::config::{EdgeBoundary, SixVertexConfig};
use super::vertex::VertexType;
use crate::error::Result;
use crate::exec::{self, check_cap, Exec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowFill {
    pub vertices: Vec<VertexType>,
    pub bottom: Vec<bool>,
}

/// All fillings of row `row` under the given top arrows.
pub fn row_fills(b: &EdgeBoundary, row: usize, top: &[bool]) -> Vec<RowFill> {
    let last = row + 1 == b.n_rows;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(b.n_cols);
    fill_from(b, row, top, last, b.left[row], &mut cur, &mut out);
    out
}

fn fill_from(
    b: &EdgeBoundary,
    row: usize,
    top: &[bool],
    last: bool,
    h: bool,
    cur: &mut Vec<VertexType>,
    out: &mut Vec<RowFill>,
) {
    let c = cur.len();
    if c == b.n_cols {
        if h == b.right[row] {
            out.push(RowFill {
                vertices: cur.clone(),
                bottom: cur.iter().map(|v| v.bottom()).collect(),
            });
        }
        return;
    }
    for v in VertexType::ALL {
        if v.left() != h || v.top() != top[c] || (last && v.bottom() != b.bottom[c]) {
            continue;
        }
        cur.push(v);
        fill_from(b, row, top, last, v.right(), cur, out);
        cur.pop();
    }
}

/// Lazy iterator over every filling compatible with a boundary.
pub struct ConfigIter {
    boundary: EdgeBoundary,
    stack: Vec<(Vec<RowFill>, usize)>,
    fixed: usize,
    started: bool,
    done: bool,
}

impl ConfigIter {
    pub fn new(boundary: EdgeBoundary) -> Self {
        Self::with_prefix(boundary, Vec::new())
    }

    /// Only the fillings whose first rows are `prefix`.
    pub fn with_prefix(boundary: EdgeBoundary, prefix: Vec<RowFill>) -> Self {
        let fixed = prefix.len();
        let stack = prefix.into_iter().map(|f| (vec![f], 0)).collect();
        ConfigIter {
            boundary,
            stack,
            fixed,
            started: false,
            done: false,
        }
    }

    fn top_of_next(&self) -> Vec<bool> {
        match self.stack.last() {
            Some((fills, i)) => fills[*i].bottom.clone(),
            None => self.boundary.top.clone(),
        }
    }

    fn push_next_row(&mut self) {
        let top = self.top_of_next();
        let fills = row_fills(&self.boundary, self.stack.len(), &top);
        self.stack.push((fills, 0));
    }

    fn advance(&mut self) -> bool {
        loop {
            if self.stack.len() <= self.fixed {
                self.done = true;
                return false;
            }
            let (fills, i) = self.stack.last_mut().expect("nonempty stack");
            *i += 1;
            if *i < fills.len() {
                return true;
            }
            self.stack.pop();
        }
    }

    fn current(&self) -> SixVertexConfig {
        let vs = self
            .stack
            .iter()
            .flat_map(|(f, i)| f[*i].vertices.iter().copied())
            .collect();
        SixVertexConfig::from_raw(self.boundary.n_rows, self.boundary.n_cols, vs)
    }
}

impl Iterator for ConfigIter {
    type Item = SixVertexConfig;

    fn next(&mut self) -> Option<SixVertexConfig> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.stack.len() < self.boundary.n_rows {
                self.push_next_row();
            }
        } else if !self.advance() {
            return None;
        }
        loop {
            let (fills, i) = self.stack.last().expect("nonempty stack");
            if *i >= fills.len() {
                if !self.advance() {
                    return None;
                }
                continue;
            }
            if self.stack.len() == self.boundary.n_rows {
                return Some(self.current());
            }
            self.push_next_row();
        }
    }
}

/// Partial fillings of the first `depth` rows, in enumeration order.
pub fn prefixes(b: &EdgeBoundary, depth: usize) -> Vec<Vec<RowFill>> {
    fn go(b: &EdgeBoundary, depth: usize, cur: &mut Vec<RowFill>, out: &mut Vec<Vec<RowFill>>) {
        if cur.len() == depth {
            out.push(cur.clone());
            return;
        }
        let top = cur
            .last()
            .map_or_else(|| b.top.clone(), |f| f.bottom.clone());
        for f in row_fills(b, cur.len(), &top) {
            cur.push(f);
            go(b, depth, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(b, depth.min(b.n_rows), &mut Vec::new(), &mut out);
    out
}

const SPLIT_DEPTH: usize = 2;

/// Folds every configuration into an accumulator, one accumulator per
/// two-row prefix, then combines them with `reduce`.
pub fn fold_configs<T, F, R>(b: &EdgeBoundary, exec: Exec, identity: T, fold: F, reduce: R) -> T
where
    T: Send + Sync + Clone,
    F: Fn(&mut T, &SixVertexConfig) + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    let pre = prefixes(b, SPLIT_DEPTH);
    exec::map_reduce(
        &pre,
        exec,
        identity.clone(),
        |p| {
            let mut acc = identity.clone();
            for c in ConfigIter::with_prefix(b.clone(), p.clone()) {
                fold(&mut acc, &c);
            }
            acc
        },
        reduce,
    )
}

/// Every configuration, in enumeration order.
pub fn collect_configs(b: &EdgeBoundary, exec: Exec) -> Vec<SixVertexConfig> {
    let pre = prefixes(b, SPLIT_DEPTH);
    exec::map_collect(&pre, exec, |p| {
        ConfigIter::with_prefix(b.clone(), p.clone()).collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}

pub fn count_configs(b: &EdgeBoundary, exec: Exec) -> u64 {
    fold_configs(b, exec, 0u64, |acc, _| *acc += 1, |a, b| a + b)
}

/// Lazy stream of all domain-wall configurations of size `n`.
pub fn enumerate_dwbc(n: usize) -> Result<ConfigIter> {
    if n == 0 {
        return Err(crate::Error::InvalidArgument(
            "lattice size must be at least 1".into(),
        ));
    }
    check_cap(n)?;
    Ok(ConfigIter::new(EdgeBoundary::dwbc(n)))
}

/// All domain-wall configurations of size `n`, collected.
pub fn dwbc_configs(n: usize, exec: Exec) -> Result<Vec<SixVertexConfig>> {
    enumerate_dwbc(n)?;
    Ok(collect_configs(&EdgeBoundary::dwbc(n), exec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sixvertex::VertexType::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_dwbc(n).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 2, 7, 42, 429]);
        let only = enumerate_dwbc(1).unwrap().next().unwrap();
        assert_eq!(only.vertices(), &[C1]);
    }

    #[test]
    fn order_is_lexicographic_and_mode_independent() {
        let seq: Vec<_> = enumerate_dwbc(4).unwrap().collect();
        for w in seq.windows(2) {
            assert!(w[0].vertices() < w[1].vertices());
        }
        assert_eq!(collect_configs(&EdgeBoundary::dwbc(4), Exec::Parallel), seq);
        assert_eq!(
            collect_configs(&EdgeBoundary::dwbc(4), Exec::Sequential),
            seq
        );
        assert_eq!(count_configs(&EdgeBoundary::dwbc(5), Exec::Parallel), 429);
    }

    #[test]
    fn every_config_is_valid() {
        for c in enumerate_dwbc(4).unwrap() {
            let again = SixVertexConfig::from_grid(c.to_grid()).unwrap();
            assert!(again.is_dwbc());
            assert!(c.vertex_counts().satisfies_dwbc(4));
        }
    }

    #[test]
    fn zero_size_rejected() {
        assert!(enumerate_dwbc(0).is_err());
    }
}
