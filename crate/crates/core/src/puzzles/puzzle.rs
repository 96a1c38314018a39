use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::boundary::BoundaryString;
use crate::error::{Error, Result};
use crate::exec::{map_collect, Exec};
use crate::schur::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Zero,
    One,
    Ten,
}

use Label::{One, Ten, Zero};

impl Label {
    pub fn name(self) -> &'static str {
        match self {
            Zero => "0",
            One => "1",
            Ten => "10",
        }
    }

    pub fn parse(s: &str) -> Result<Label> {
        match s {
            "0" => Ok(Zero),
            "1" => Ok(One),
            "10" => Ok(Ten),
            _ => Err(Error::Parse(format!(
                "edge label {s:?}: expected 0, 1 or 10"
            ))),
        }
    }

    fn from_bit(b: bool) -> Label {
        if b {
            One
        } else {
            Zero
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Allowed `(left, right, base)` labels of a unit triangle. An upward
/// triangle lists its sides as seen from its apex; a downward triangle
/// lists the side leaving its top-right corner, then the side leaving its
/// top-left corner, then its top edge.
pub const TRIANGLES: [(Label, Label, Label); 5] = [
    (Zero, Zero, Zero),
    (One, One, One),
    (One, Zero, Ten),
    (Zero, Ten, One),
    (Ten, One, Zero),
];

fn allowed(t: (Label, Label, Label)) -> bool {
    TRIANGLES.contains(&t)
}

/// Edge labels of a size-`N` triangle. Points are `(r, c)` with
/// `0 ≤ c ≤ r ≤ N`, row 0 at the apex.
///
/// * `ld[r][c]` joins `(r, c)` and `(r+1, c)`
/// * `rd[r][c]` joins `(r, c)` and `(r+1, c+1)`
/// * `h[r][c]` joins `(r, c)` and `(r, c+1)`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Puzzle {
    n: usize,
    ld: Vec<Vec<Label>>,
    rd: Vec<Vec<Label>>,
    h: Vec<Vec<Label>>,
}

#[derive(Clone, Debug)]
struct Strip {
    ld: Vec<Label>,
    rd: Vec<Label>,
    h: Vec<Label>,
}

/// Every labelling of the strip between rows `r` and `r+1` given the
/// labels above it and the two outer boundary edges.
fn strip_fills(r: usize, above: &[Label], west: Label, east: Label) -> Vec<Strip> {
    fn go(
        r: usize,
        c: usize,
        above: &[Label],
        east: Label,
        left: Label,
        cur: &mut Strip,
        out: &mut Vec<Strip>,
    ) {
        for &(l, rt, base) in &TRIANGLES {
            if l != left || (c == r && rt != east) {
                continue;
            }
            cur.ld.push(l);
            cur.rd.push(rt);
            cur.h.push(base);
            if c == r {
                out.push(cur.clone());
            } else {
                for &(next, dr, dh) in &TRIANGLES {
                    if dr == rt && dh == above[c] {
                        go(r, c + 1, above, east, next, cur, out);
                    }
                }
            }
            cur.ld.pop();
            cur.rd.pop();
            cur.h.pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = Strip {
        ld: Vec::new(),
        rd: Vec::new(),
        h: Vec::new(),
    };
    go(r, 0, above, east, west, &mut cur, &mut out);
    out
}

/// Puzzle boundaries: west side read from the apex down, east side read
/// from the bottom up, bottom read right to left.
#[derive(Clone, Debug)]
pub struct PuzzleBoundary {
    pub n: usize,
    pub west: Vec<Label>,
    pub east: Vec<Label>,
    pub bottom: Vec<Label>,
}

impl PuzzleBoundary {
    pub fn new(
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
        n: usize,
        k: usize,
    ) -> Result<Self> {
        let bottom = Self::bottom_labels(nu, n, k)?;
        let west = BoundaryString::encode(lambda, k, n)?
            .bits()
            .iter()
            .map(|&b| Label::from_bit(b))
            .collect();
        let east = BoundaryString::encode(mu, k, n)?
            .reversed()
            .bits()
            .iter()
            .map(|&b| Label::from_bit(b))
            .collect();
        Ok(PuzzleBoundary {
            n,
            west,
            east,
            bottom,
        })
    }

    /// Labels of the bottom row left to right for the partition `ν`.
    pub fn bottom_labels(nu: &Partition, n: usize, k: usize) -> Result<Vec<Label>> {
        Ok(BoundaryString::encode(nu, k, n)?
            .reversed()
            .bits()
            .iter()
            .map(|&b| Label::from_bit(b))
            .collect())
    }
}

/// Reads the partition off a bottom row, if it carries only 0s and 1s.
pub fn decode_bottom(h: &[Label]) -> Option<Partition> {
    let bits = h
        .iter()
        .rev()
        .map(|&l| if l == Ten { None } else { Some(l == One) })
        .collect::<Option<Vec<_>>>()?;
    Some(BoundaryString::new(bits).decode())
}

/// Number of puzzles for each bottom row, by a row-to-row transfer sweep.
pub fn bottom_counts(west: &[Label], east: &[Label], exec: Exec) -> BTreeMap<Vec<Label>, u64> {
    let n = west.len();
    let mut states: BTreeMap<Vec<Label>, u64> = BTreeMap::from([(Vec::new(), 1)]);
    for r in 0..n {
        let items: Vec<(Vec<Label>, u64)> = states.into_iter().collect();
        let parts = map_collect(&items, exec, |(above, count)| {
            strip_fills(r, above, west[r], east[r])
                .into_iter()
                .map(|s| (s.h, *count))
                .collect::<Vec<_>>()
        });
        states = BTreeMap::new();
        for (h, c) in parts.into_iter().flatten() {
            *states.entry(h).or_insert(0) += c;
        }
    }
    states
}

/// Puzzles with boundary `λ` (west), `μ` (east), `ν` (bottom) in a
/// size-`N` triangle whose sides carry `k` ones.
pub fn count_puzzles(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
    k: usize,
    exec: Exec,
) -> Result<u64> {
    let b = PuzzleBoundary::new(lambda, mu, nu, n, k)?;
    Ok(bottom_counts(&b.west, &b.east, exec)
        .get(&b.bottom)
        .copied()
        .unwrap_or(0))
}

/// Every puzzle with the given boundary, in a fixed order.
pub fn enumerate_puzzles(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
    k: usize,
) -> Result<Vec<Puzzle>> {
    let b = PuzzleBoundary::new(lambda, mu, nu, n, k)?;
    let mut out = Vec::new();
    let mut stack: Vec<Strip> = Vec::new();
    dfs(&b, &mut stack, &mut out);
    Ok(out)
}

fn dfs(b: &PuzzleBoundary, stack: &mut Vec<Strip>, out: &mut Vec<Puzzle>) {
    let r = stack.len();
    if r == b.n {
        let bottom = stack.last().map_or(&[][..], |s| &s.h[..]);
        if bottom == b.bottom.as_slice() {
            let mut h = vec![Vec::new()];
            h.extend(stack.iter().map(|s| s.h.clone()));
            out.push(Puzzle {
                n: b.n,
                ld: stack.iter().map(|s| s.ld.clone()).collect(),
                rd: stack.iter().map(|s| s.rd.clone()).collect(),
                h,
            });
        }
        return;
    }
    let above = stack.last().map(|s| s.h.clone()).unwrap_or_default();
    for s in strip_fills(r, &above, b.west[r], b.east[r]) {
        stack.push(s);
        dfs(b, stack, out);
        stack.pop();
    }
}

impl Puzzle {
    /// Validates every unit triangle.
    pub fn new(
        n: usize,
        ld: Vec<Vec<Label>>,
        rd: Vec<Vec<Label>>,
        h: Vec<Vec<Label>>,
    ) -> Result<Self> {
        let shape_ok = ld.len() == n
            && rd.len() == n
            && h.len() == n + 1
            && (0..n).all(|r| ld[r].len() == r + 1 && rd[r].len() == r + 1)
            && (0..=n).all(|r| h[r].len() == r);
        if !shape_ok {
            return Err(Error::InvalidConfig(format!(
                "edge arrays do not match a size-{n} triangle"
            )));
        }
        let p = Puzzle { n, ld, rd, h };
        for r in 0..n {
            for c in 0..=r {
                if !allowed((p.ld[r][c], p.rd[r][c], p.h[r + 1][c])) {
                    return Err(Error::InvalidConfig(format!(
                        "upward triangle ({r}, {c}) is not allowed"
                    )));
                }
                if c < r && !allowed((p.ld[r][c + 1], p.rd[r][c], p.h[r][c])) {
                    return Err(Error::InvalidConfig(format!(
                        "downward triangle ({r}, {c}) is not allowed"
                    )));
                }
            }
        }
        Ok(p)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn ld(&self, r: usize, c: usize) -> Label {
        self.ld[r][c]
    }

    pub fn rd(&self, r: usize, c: usize) -> Label {
        self.rd[r][c]
    }

    pub fn h(&self, r: usize, c: usize) -> Label {
        self.h[r][c]
    }

    /// West side from the apex down.
    pub fn west(&self) -> Vec<Label> {
        self.ld.iter().map(|v| v[0]).collect()
    }

    /// East side from the apex down.
    pub fn east(&self) -> Vec<Label> {
        self.rd.iter().enumerate().map(|(r, v)| v[r]).collect()
    }

    /// Bottom row left to right.
    pub fn bottom(&self) -> &[Label] {
        &self.h[self.n]
    }

    /// `(λ, μ, ν)` read off the three sides, when all are 0/1 words.
    pub fn boundary_partitions(&self) -> Option<(Partition, Partition, Partition)> {
        let word = |v: &[Label]| {
            v.iter()
                .map(|&l| if l == Ten { None } else { Some(l == One) })
                .collect::<Option<Vec<bool>>>()
        };
        let west: Vec<bool> = word(&self.west())?;
        let mut east: Vec<bool> = word(&self.east())?;
        east.reverse();
        Some((
            BoundaryString::new(west).decode(),
            BoundaryString::new(east).decode(),
            decode_bottom(self.bottom())?,
        ))
    }

    fn edge_list(&self) -> Vec<EdgeJson> {
        let mut out = Vec::new();
        for r in 0..=self.n {
            for (c, &l) in self.h[r].iter().enumerate() {
                out.push(EdgeJson {
                    pos: (r, c, "H".into()),
                    label: l.name().into(),
                });
            }
            if r < self.n {
                for c in 0..=r {
                    out.push(EdgeJson {
                        pos: (r, c, "L".into()),
                        label: self.ld[r][c].name().into(),
                    });
                    out.push(EdgeJson {
                        pos: (r, c, "R".into()),
                        label: self.rd[r][c].name().into(),
                    });
                }
            }
        }
        out
    }

    /// Triangle drawing with every edge label at its midpoint.
    pub fn render_ascii(&self) -> String {
        let n = self.n;
        let width = 8 * n + 6;
        let mut lines = Vec::new();
        let put = |line: &mut Vec<char>, x: usize, s: &str| {
            for (i, ch) in s.chars().enumerate() {
                if x + i < line.len() {
                    line[x + i] = ch;
                }
            }
        };
        for r in 0..=n {
            let x0 = 4 * (n - r) + 3;
            let mut pts = vec![' '; width];
            for c in 0..=r {
                put(&mut pts, x0 + 8 * c, "*");
                if c < r {
                    put(
                        &mut pts,
                        x0 + 8 * c + 3,
                        &format!("{:^3}", self.h[r][c].name()),
                    );
                }
            }
            lines.push(pts.into_iter().collect::<String>().trim_end().to_string());
            if r < n {
                let mut mid = vec![' '; width];
                for c in 0..=r {
                    let x = x0 + 8 * c;
                    let l = self.ld[r][c].name();
                    put(&mut mid, x - 1 - l.len(), l);
                    put(&mut mid, x + 2, self.rd[r][c].name());
                }
                lines.push(mid.into_iter().collect::<String>().trim_end().to_string());
            }
        }
        lines.join("\n")
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    pos: (usize, usize, String),
    label: String,
}

#[derive(Serialize, Deserialize)]
struct PuzzleJson {
    #[serde(rename = "N")]
    n: usize,
    edges: Vec<EdgeJson>,
}

impl Serialize for Puzzle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PuzzleJson {
            n: self.n,
            edges: self.edge_list(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Puzzle {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = PuzzleJson::deserialize(d)?;
        let n = j.n;
        let mut ld: Vec<Vec<Option<Label>>> = (0..n).map(|r| vec![None; r + 1]).collect();
        let mut rd = ld.clone();
        let mut h: Vec<Vec<Option<Label>>> = (0..=n).map(|r| vec![None; r]).collect();
        for e in j.edges {
            let (r, c, dir) = e.pos;
            let l = Label::parse(&e.label).map_err(D::Error::custom)?;
            let slot = match dir.as_str() {
                "H" => h.get_mut(r).and_then(|v| v.get_mut(c)),
                "L" => ld.get_mut(r).and_then(|v| v.get_mut(c)),
                "R" => rd.get_mut(r).and_then(|v| v.get_mut(c)),
                _ => {
                    return Err(D::Error::custom(format!(
                        "edge direction {dir:?}: expected H, L or R"
                    )))
                }
            }
            .ok_or_else(|| {
                D::Error::custom(format!("edge ({r}, {c}, {dir}) outside a size-{n} puzzle"))
            })?;
            *slot = Some(l);
        }
        let fill = |v: Vec<Vec<Option<Label>>>| -> std::result::Result<Vec<Vec<Label>>, D::Error> {
            v.into_iter()
                .map(|row| row.into_iter().collect::<Option<Vec<_>>>())
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| D::Error::custom("missing edge labels"))
        };
        Puzzle::new(n, fill(ld)?, fill(rd)?, fill(h)?).map_err(D::Error::custom)
    }
}
