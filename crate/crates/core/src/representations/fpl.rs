use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{check_cap, Exec};
use crate::sixvertex::{fold_configs, EdgeBoundary, SixVertexConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Colour {
    Red,
    Blue,
}

/// Colour of vertex `(r, c)` (0-based, row 0 at the top): the top-left
/// vertex is red and colours alternate like a chessboard.
pub fn vertex_colour(r: usize, c: usize) -> Colour {
    if (r + c).is_multiple_of(2) {
        Colour::Red
    } else {
        Colour::Blue
    }
}

/// Fully packed loop colouring: every edge takes the colour of the vertex
/// its arrow points to (external vertices continue the chessboard).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fpl {
    pub n: usize,
    /// `horizontal[r][c]`: edge of row `r` left of column `c`, `c ∈ 0..=n`.
    pub horizontal: Vec<Vec<Colour>>,
    /// `vertical[l][c]`: edge of column `c` above row `l`, `l ∈ 0..=n`.
    pub vertical: Vec<Vec<Colour>>,
}

impl Fpl {
    pub fn from_config(c: &SixVertexConfig) -> Result<Self> {
        let n = c.require_dwbc()?;
        let colour_at = |r: isize, col: isize| {
            vertex_colour(r.rem_euclid(2) as usize, col.rem_euclid(2) as usize)
        };
        let horizontal = (0..n)
            .map(|r| {
                (0..=n)
                    .map(|e| {
                        let target = if c.h_right(r, e) {
                            e as isize
                        } else {
                            e as isize - 1
                        };
                        colour_at(r as isize, target)
                    })
                    .collect()
            })
            .collect();
        let vertical = (0..=n)
            .map(|l| {
                (0..n)
                    .map(|col| {
                        let target = if c.v_up(l, col) {
                            l as isize - 1
                        } else {
                            l as isize
                        };
                        colour_at(target, col as isize)
                    })
                    .collect()
            })
            .collect();
        Ok(Fpl {
            n,
            horizontal,
            vertical,
        })
    }

    /// The four edges at a vertex: left, right, top, bottom.
    fn around(&self, r: usize, c: usize) -> [(Edge, Colour); 4] {
        [
            (Edge::H(r, c), self.horizontal[r][c]),
            (Edge::H(r, c + 1), self.horizontal[r][c + 1]),
            (Edge::V(r, c), self.vertical[r][c]),
            (Edge::V(r + 1, c), self.vertical[r + 1][c]),
        ]
    }

    /// Every vertex touches two edges of each colour.
    pub fn is_fully_packed(&self) -> bool {
        (0..self.n).all(|r| {
            (0..self.n).all(|c| {
                self.around(r, c)
                    .iter()
                    .filter(|e| e.1 == Colour::Red)
                    .count()
                    == 2
            })
        })
    }

    /// External edges counterclockwise from the top of the West side:
    /// West top to bottom, South left to right, East bottom to top, North
    /// right to left.
    fn boundary_edges(&self) -> Vec<Edge> {
        let n = self.n;
        let mut v = Vec::with_capacity(4 * n);
        v.extend((0..n).map(|r| Edge::H(r, 0)));
        v.extend((0..n).map(|c| Edge::V(n, c)));
        v.extend((0..n).rev().map(|r| Edge::H(r, n)));
        v.extend((0..n).rev().map(|c| Edge::V(0, c)));
        v
    }

    fn colour(&self, e: Edge) -> Colour {
        match e {
            Edge::H(r, c) => self.horizontal[r][c],
            Edge::V(l, c) => self.vertical[l][c],
        }
    }

    /// Pairing of the red external edges, numbered `1..=2n` in the
    /// counterclockwise order of [`Fpl::boundary_edges`] restricted to red.
    pub fn link_pattern(&self) -> Result<LinkPattern> {
        let n = self.n;
        let red: Vec<Edge> = self
            .boundary_edges()
            .into_iter()
            .filter(|&e| self.colour(e) == Colour::Red)
            .collect();
        if red.len() != 2 * n {
            return Err(Error::InvalidConfig(format!(
                "{} red boundary edges, expected {}",
                red.len(),
                2 * n
            )));
        }
        let index = |e: Edge| red.iter().position(|&x| x == e);
        let mut pairs = Vec::with_capacity(n);
        let mut done = vec![false; 2 * n];
        for start in 0..2 * n {
            if done[start] {
                continue;
            }
            let mut e = red[start];
            let (mut r, mut c) = e.inner_vertex(n);
            let end = loop {
                let next = self
                    .around(r, c)
                    .into_iter()
                    .find(|&(x, col)| col == Colour::Red && x != e)
                    .map(|(x, _)| x)
                    .ok_or_else(|| {
                        Error::InvalidConfig(format!("red path dead-ends at ({r},{c})"))
                    })?;
                if let Some(k) = index(next) {
                    break k;
                }
                let (nr, nc) = next.other_vertex(r, c);
                e = next;
                r = nr;
                c = nc;
            };
            done[start] = true;
            done[end] = true;
            pairs.push((start.min(end) + 1, start.max(end) + 1));
        }
        LinkPattern::new(n, pairs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Edge {
    H(usize, usize),
    V(usize, usize),
}

impl Edge {
    fn inner_vertex(self, n: usize) -> (usize, usize) {
        match self {
            Edge::H(r, 0) => (r, 0),
            Edge::H(r, _) => (r, n - 1),
            Edge::V(0, c) => (0, c),
            Edge::V(_, c) => (n - 1, c),
        }
    }

    fn other_vertex(self, r: usize, c: usize) -> (usize, usize) {
        match self {
            Edge::H(rr, cc) => (rr, if cc == c { c - 1 } else { cc }),
            Edge::V(ll, cc) => (if ll == r { r - 1 } else { ll }, cc),
        }
    }
}

/// Noncrossing perfect matching of `1..=2n`, pairs sorted by first point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<(usize, usize)>", into = "Vec<(usize, usize)>")]
pub struct LinkPattern {
    pairs: Vec<(usize, usize)>,
}

impl LinkPattern {
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut pairs: Vec<(usize, usize)> = pairs
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        pairs.sort_unstable();
        let mut seen = vec![false; 2 * n + 1];
        if pairs.len() != n {
            return Err(Error::InvalidArgument(format!(
                "{} arcs, expected {n}",
                pairs.len()
            )));
        }
        for &(a, b) in &pairs {
            for x in [a, b] {
                if x == 0 || x > 2 * n || seen[x] {
                    return Err(Error::InvalidArgument(format!(
                        "point {x} missing or repeated"
                    )));
                }
                seen[x] = true;
            }
        }
        for &(a, b) in &pairs {
            for &(c, d) in &pairs {
                if a < c && c < b && b < d {
                    return Err(Error::InvalidArgument(format!(
                        "arcs ({a},{b}) and ({c},{d}) cross"
                    )));
                }
            }
        }
        Ok(LinkPattern { pairs })
    }

    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Shift every point by `k` positions around the circle.
    pub fn rotate(&self, k: usize) -> LinkPattern {
        let m = 2 * self.n();
        let f = |x: usize| (x - 1 + k) % m + 1;
        LinkPattern::new(
            self.n(),
            self.pairs.iter().map(|&(a, b)| (f(a), f(b))).collect(),
        )
        .expect("rotation keeps noncrossing")
    }

    /// All noncrossing matchings of `2n` points.
    pub fn all(n: usize) -> Vec<LinkPattern> {
        fn go(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
            if points.is_empty() {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for k in (1..points.len()).step_by(2) {
                for inner in go(&points[1..k]) {
                    for outer in go(&points[k + 1..]) {
                        let mut v = vec![(points[0], points[k])];
                        v.extend(inner.iter().copied());
                        v.extend(outer);
                        out.push(v);
                    }
                }
            }
            out
        }
        let pts: Vec<usize> = (1..=2 * n).collect();
        let mut v: Vec<LinkPattern> = go(&pts)
            .into_iter()
            .map(|p| LinkPattern::new(n, p).expect("noncrossing"))
            .collect();
        v.sort();
        v
    }
}

impl fmt::Display for LinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .pairs
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        write!(f, "{}", s.join(""))
    }
}

impl TryFrom<Vec<(usize, usize)>> for LinkPattern {
    type Error = Error;
    fn try_from(v: Vec<(usize, usize)>) -> Result<Self> {
        let n = v.len();
        LinkPattern::new(n, v)
    }
}

impl From<LinkPattern> for Vec<(usize, usize)> {
    fn from(l: LinkPattern) -> Self {
        l.pairs
    }
}

/// Number of configurations per link pattern, zeros included.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkCounts {
    pub n: usize,
    pub counts: BTreeMap<LinkPattern, u64>,
}

impl LinkCounts {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Counts are unchanged when every pattern is rotated by one point.
    pub fn rotation_invariant(&self) -> bool {
        self.counts
            .iter()
            .all(|(lp, &c)| self.counts.get(&lp.rotate(1)) == Some(&c))
    }

    /// Counts in decreasing order.
    pub fn sorted_values(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.counts.values().copied().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

pub fn link_counts(n: usize, exec: Exec) -> Result<LinkCounts> {
    check_cap(n)?;
    let init: BTreeMap<LinkPattern, u64> =
        LinkPattern::all(n).into_iter().map(|l| (l, 0)).collect();
    let counts = fold_configs(
        &EdgeBoundary::dwbc(n),
        exec,
        init,
        |acc, c| {
            let lp = Fpl::from_config(c)
                .and_then(|f| f.link_pattern())
                .expect("domain-wall FPL has a link pattern");
            *acc.get_mut(&lp).expect("every link pattern is listed") += 1;
        },
        |mut a, b| {
            for (k, v) in b {
                *a.get_mut(&k).expect("same key set") += v;
            }
            a
        },
    );
    Ok(LinkCounts { n, counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sixvertex::enumerate_dwbc;

    #[test]
    fn catalan() {
        let sizes: Vec<usize> = (1..=5).map(|n| LinkPattern::all(n).len()).collect();
        assert_eq!(sizes, vec![1, 2, 5, 14, 42]);
        assert!(LinkPattern::new(2, vec![(1, 3), (2, 4)]).is_err());
    }

    #[test]
    fn smallest() {
        let c = enumerate_dwbc(1).unwrap().next().unwrap();
        let f = Fpl::from_config(&c).unwrap();
        assert!(f.is_fully_packed());
        assert_eq!(f.link_pattern().unwrap().pairs(), &[(1, 2)]);
    }

    #[test]
    fn refined_counts_small() {
        let lc = link_counts(2, Exec::Sequential).unwrap();
        assert_eq!(lc.sorted_values(), vec![1, 1]);
        assert!(lc.rotation_invariant());
        let lc = link_counts(3, Exec::Parallel).unwrap();
        assert_eq!(lc.sorted_values(), vec![2, 2, 1, 1, 1]);
        assert!(lc.rotation_invariant());
    }
}
