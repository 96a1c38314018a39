use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::vertex::{VertexCounts, VertexType};
use crate::error::{Error, Result};
use crate::schur::Partition;

/// Orientations of the external edges of a rectangular lattice.
///
/// `left[r]`/`right[r]` are true when the arrow on that horizontal edge
/// points right; `top[c]`/`bottom[c]` are true when it points up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeBoundary {
    pub n_rows: usize,
    pub n_cols: usize,
    pub left: Vec<bool>,
    pub right: Vec<bool>,
    pub top: Vec<bool>,
    pub bottom: Vec<bool>,
}

impl EdgeBoundary {
    /// Horizontal arrows point inward, vertical arrows outward.
    pub fn dwbc(n: usize) -> Self {
        EdgeBoundary {
            n_rows: n,
            n_cols: n,
            left: vec![true; n],
            right: vec![false; n],
            top: vec![true; n],
            bottom: vec![false; n],
        }
    }

    /// `n` paths enter on the left, one per row, and leave through the top
    /// at columns `n + 1 - i + λ_i` (1-based) of an `n × p` grid.
    pub fn partial_dwbc(lambda: &Partition, n: usize, p: usize) -> Result<Self> {
        check_partial(lambda, n, p)?;
        let mut top = vec![false; p];
        for (i, l) in lambda.padded(n).into_iter().enumerate() {
            top[n - i - 1 + l as usize] = true;
        }
        Ok(EdgeBoundary {
            n_rows: n,
            n_cols: p,
            left: vec![true; n],
            right: vec![false; n],
            top,
            bottom: vec![false; p],
        })
    }

    /// The partial boundary with `n` extra columns on the left: the paths
    /// enter through the bottom at columns `1..=n` instead of the left side.
    pub fn extended_partial_dwbc(lambda: &Partition, n: usize, p: usize) -> Result<Self> {
        let inner = Self::partial_dwbc(lambda, n, p)?;
        let mut top = vec![false; n];
        top.extend(inner.top);
        let mut bottom = vec![true; n];
        bottom.extend(vec![false; p]);
        Ok(EdgeBoundary {
            n_rows: n,
            n_cols: n + p,
            left: vec![false; n],
            right: vec![false; n],
            top,
            bottom,
        })
    }

    pub fn is_dwbc(&self) -> bool {
        *self == Self::dwbc(self.n_rows)
    }
}

fn check_partial(lambda: &Partition, n: usize, p: usize) -> Result<()> {
    if lambda.len() > n {
        return Err(Error::InvalidArgument(format!(
            "partition {lambda} has more than {n} parts"
        )));
    }
    let need = n + lambda.first() as usize;
    if p < need {
        return Err(Error::WidthTooSmall { p, need });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundarySpec {
    Dwbc(usize),
    PartialDwbc {
        lambda: Partition,
        n: usize,
        p: usize,
    },
    Custom(EdgeBoundary),
}

impl BoundarySpec {
    pub fn edges(&self) -> Result<EdgeBoundary> {
        match self {
            BoundarySpec::Dwbc(n) => {
                if *n == 0 {
                    return Err(Error::InvalidArgument(
                        "lattice size must be at least 1".into(),
                    ));
                }
                Ok(EdgeBoundary::dwbc(*n))
            }
            BoundarySpec::PartialDwbc { lambda, n, p } => {
                EdgeBoundary::partial_dwbc(lambda, *n, *p)
            }
            BoundarySpec::Custom(b) => Ok(b.clone()),
        }
    }
}

/// A filled lattice, stored row-major with row 0 at the top.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SixVertexConfig {
    n_rows: usize,
    n_cols: usize,
    vertices: Vec<VertexType>,
}

impl SixVertexConfig {
    pub(crate) fn from_raw(n_rows: usize, n_cols: usize, vertices: Vec<VertexType>) -> Self {
        debug_assert_eq!(vertices.len(), n_rows * n_cols);
        SixVertexConfig {
            n_rows,
            n_cols,
            vertices,
        }
    }

    /// Validates that neighbouring vertices agree on every shared edge.
    pub fn from_grid(grid: Vec<Vec<VertexType>>) -> Result<Self> {
        let n_rows = grid.len();
        let n_cols = grid.first().map_or(0, Vec::len);
        if n_rows == 0 || n_cols == 0 {
            return Err(Error::InvalidConfig("empty grid".into()));
        }
        for (r, row) in grid.iter().enumerate() {
            if row.len() != n_cols {
                return Err(Error::InvalidConfig(format!(
                    "row {}: {} vertices, expected {n_cols}",
                    r + 1,
                    row.len()
                )));
            }
        }
        for r in 0..n_rows {
            for c in 0..n_cols {
                let v = grid[r][c];
                if c + 1 < n_cols && v.right() != grid[r][c + 1].left() {
                    return Err(Error::InvalidConfig(format!(
                        "row {}, col {}: {v} and {} disagree on their shared horizontal edge",
                        r + 1,
                        c + 1,
                        grid[r][c + 1]
                    )));
                }
                if r + 1 < n_rows && v.bottom() != grid[r + 1][c].top() {
                    return Err(Error::InvalidConfig(format!(
                        "row {}, col {}: {v} and {} below disagree on their shared vertical edge",
                        r + 1,
                        c + 1,
                        grid[r + 1][c]
                    )));
                }
            }
        }
        Ok(SixVertexConfig {
            n_rows,
            n_cols,
            vertices: grid.into_iter().flatten().collect(),
        })
    }

    /// Rebuilds a configuration from its left-boundary arrows and the
    /// up-arrow pattern at every horizontal level (level 0 is the top).
    pub fn from_levels(left: &[bool], levels: &[Vec<bool>]) -> Result<Self> {
        let n_rows = left.len();
        if levels.len() != n_rows + 1 {
            return Err(Error::InvalidConfig(format!(
                "{} levels for {n_rows} rows",
                levels.len()
            )));
        }
        let n_cols = levels[0].len();
        let mut vertices = Vec::with_capacity(n_rows * n_cols);
        for r in 0..n_rows {
            let mut h = left[r];
            for c in 0..n_cols {
                let (t, b) = (levels[r][c], levels[r + 1][c]);
                let right = h as i8 + b as i8 - t as i8;
                let v = match right {
                    0 | 1 => VertexType::from_edges([h, b, right == 1, t]),
                    _ => None,
                }
                .ok_or_else(|| {
                    Error::InvalidConfig(format!(
                        "row {}, col {}: arrow conservation fails",
                        r + 1,
                        c + 1
                    ))
                })?;
                vertices.push(v);
                h = right == 1;
            }
        }
        Ok(SixVertexConfig {
            n_rows,
            n_cols,
            vertices,
        })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    /// 0-based row and column.
    pub fn get(&self, r: usize, c: usize) -> VertexType {
        self.vertices[r * self.n_cols + c]
    }

    pub fn vertices(&self) -> &[VertexType] {
        &self.vertices
    }

    pub fn rows(&self) -> impl Iterator<Item = &[VertexType]> {
        self.vertices.chunks(self.n_cols)
    }

    pub fn to_grid(&self) -> Vec<Vec<VertexType>> {
        self.rows().map(<[VertexType]>::to_vec).collect()
    }

    /// Whether the horizontal edge of row `r` left of column `c` points
    /// right; `c = n_cols` is the right boundary edge.
    pub fn h_right(&self, r: usize, c: usize) -> bool {
        if c == 0 {
            self.get(r, 0).left()
        } else {
            self.get(r, c - 1).right()
        }
    }

    /// Whether the vertical edge of column `c` above row `level` points
    /// up; `level = n_rows` is the bottom boundary.
    pub fn v_up(&self, level: usize, c: usize) -> bool {
        if level == 0 {
            self.get(0, c).top()
        } else {
            self.get(level - 1, c).bottom()
        }
    }

    /// Up-arrow pattern at every level, top boundary first.
    pub fn levels(&self) -> Vec<Vec<bool>> {
        (0..=self.n_rows)
            .map(|l| (0..self.n_cols).map(|c| self.v_up(l, c)).collect())
            .collect()
    }

    pub fn boundary(&self) -> EdgeBoundary {
        EdgeBoundary {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            left: (0..self.n_rows).map(|r| self.h_right(r, 0)).collect(),
            right: (0..self.n_rows)
                .map(|r| self.h_right(r, self.n_cols))
                .collect(),
            top: (0..self.n_cols).map(|c| self.v_up(0, c)).collect(),
            bottom: (0..self.n_cols)
                .map(|c| self.v_up(self.n_rows, c))
                .collect(),
        }
    }

    pub fn is_dwbc(&self) -> bool {
        self.n_rows == self.n_cols && self.boundary().is_dwbc()
    }

    pub fn require_dwbc(&self) -> Result<usize> {
        if self.is_dwbc() {
            Ok(self.n_rows)
        } else {
            Err(Error::InvalidConfig(
                "not a domain-wall configuration".into(),
            ))
        }
    }

    pub fn vertex_counts(&self) -> VertexCounts {
        VertexCounts::from_vertices(&self.vertices)
    }

    /// Arrow picture: `>`/`<` on horizontal edges, `^`/`v` on vertical ones.
    pub fn render_ascii(&self) -> String {
        let mut out = String::new();
        for l in 0..=self.n_rows {
            let mut line = String::from("  ");
            for c in 0..self.n_cols {
                line.push_str(if self.v_up(l, c) { " ^  " } else { " v  " });
            }
            out.push_str(line.trim_end());
            out.push('\n');
            if l == self.n_rows {
                break;
            }
            let mut line = String::new();
            for c in 0..=self.n_cols {
                line.push_str(if self.h_right(l, c) { "> " } else { "< " });
                if c < self.n_cols {
                    line.push_str(self.get(l, c).name());
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct ConfigJson {
    n_rows: usize,
    n_cols: usize,
    vertices: Vec<Vec<VertexType>>,
}

impl Serialize for SixVertexConfig {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ConfigJson {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            vertices: self.to_grid(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SixVertexConfig {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = ConfigJson::deserialize(d)?;
        if j.vertices.len() != j.n_rows || j.vertices.iter().any(|r| r.len() != j.n_cols) {
            return Err(D::Error::custom(format!(
                "vertices grid does not match n_rows={} n_cols={}",
                j.n_rows, j.n_cols
            )));
        }
        SixVertexConfig::from_grid(j.vertices).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use VertexType::*;

    #[test]
    fn validation_reports_position() {
        let err = SixVertexConfig::from_grid(vec![vec![C1, A1], vec![B2, C1]]).unwrap_err();
        assert!(err.to_string().contains("row 1, col 1"), "{err}");
        let ok = SixVertexConfig::from_grid(vec![vec![C1, B1], vec![B2, C1]]).unwrap();
        assert!(ok.is_dwbc());
        assert_eq!(
            SixVertexConfig::from_levels(&ok.boundary().left, &ok.levels()).unwrap(),
            ok
        );
    }

    #[test]
    fn json_shape() {
        let c = SixVertexConfig::from_grid(vec![vec![C1]]).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"n_rows":1,"n_cols":1,"vertices":[["C1"]]}"#);
        assert_eq!(serde_json::from_str::<SixVertexConfig>(&s).unwrap(), c);
        assert!(serde_json::from_str::<SixVertexConfig>(
            r#"{"n_rows":2,"n_cols":1,"vertices":[["C1"]]}"#
        )
        .is_err());
    }

    #[test]
    fn partial_boundary_exits() {
        let lam: Partition = "2,1".parse().unwrap();
        let b = EdgeBoundary::partial_dwbc(&lam, 3, 5).unwrap();
        // exits at n + 1 - i + λ_i = 5, 3, 1
        assert_eq!(b.top, vec![true, false, true, false, true]);
        assert_eq!(
            EdgeBoundary::partial_dwbc(&lam, 3, 4),
            Err(Error::WidthTooSmall { p: 4, need: 5 })
        );
        let e = EdgeBoundary::extended_partial_dwbc(&lam, 3, 5).unwrap();
        assert_eq!(e.n_cols, 8);
        assert_eq!(e.bottom.iter().filter(|&&b| b).count(), 3);
    }
}
