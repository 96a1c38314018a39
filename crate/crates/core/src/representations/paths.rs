use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sixvertex::{SixVertexConfig, VertexType};

/// Osculating North/East paths: edges with right or up arrows are
/// occupied. Path `i` enters row `i` (from the top) on the West side;
/// its steps `E`/`N` include the entering and exiting boundary edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePaths {
    pub n: usize,
    pub paths: Vec<String>,
}

impl LatticePaths {
    /// At an `A1` vertex the path from the left turns up and the path
    /// from below turns right, so paths touch without crossing.
    pub fn from_config(c: &SixVertexConfig) -> Result<Self> {
        let n = c.require_dwbc()?;
        let mut paths = Vec::with_capacity(n);
        for start in 0..n {
            let (mut r, mut col) = (start, 0usize);
            let mut from_left = true;
            let mut s = String::from("E");
            loop {
                let v = c.get(r, col);
                let go_up = match v {
                    VertexType::A1 | VertexType::C1 => from_left,
                    VertexType::B1 => true,
                    VertexType::B2 | VertexType::C2 => false,
                    VertexType::A2 => unreachable!("empty vertex on a path"),
                };
                if go_up {
                    s.push('N');
                    if r == 0 {
                        break;
                    }
                    r -= 1;
                    from_left = false;
                } else {
                    s.push('E');
                    col += 1;
                    from_left = true;
                }
            }
            paths.push(s);
        }
        Ok(LatticePaths { n, paths })
    }

    pub fn to_config(&self) -> Result<SixVertexConfig> {
        let n = self.n;
        if self.paths.len() != n {
            return Err(Error::InvalidConfig(format!(
                "{} paths for size {n}",
                self.paths.len()
            )));
        }
        let mut levels = vec![vec![false; n]; n + 1];
        for (i, p) in self.paths.iter().enumerate() {
            let (mut r, mut col) = (i as isize, -1isize);
            for ch in p.chars() {
                match ch {
                    'E' => col += 1,
                    'N' => {
                        if !(0..n as isize).contains(&col) || r < 0 {
                            return Err(Error::InvalidConfig(format!(
                                "path {} leaves the grid",
                                i + 1
                            )));
                        }
                        let cell = &mut levels[r as usize][col as usize];
                        if *cell {
                            return Err(Error::InvalidConfig(format!(
                                "path {} reuses a vertical edge",
                                i + 1
                            )));
                        }
                        *cell = true;
                        r -= 1;
                    }
                    _ => return Err(Error::InvalidConfig(format!("bad step {ch:?}"))),
                }
                if col >= n as isize {
                    return Err(Error::InvalidConfig(format!(
                        "path {} leaves the grid",
                        i + 1
                    )));
                }
            }
            if r != -1 {
                return Err(Error::InvalidConfig(format!(
                    "path {} does not reach the top",
                    i + 1
                )));
            }
        }
        let c = SixVertexConfig::from_levels(&vec![true; n], &levels)?;
        if !c.is_dwbc() || LatticePaths::from_config(&c)? != *self {
            return Err(Error::InvalidConfig(
                "paths are not an osculating domain-wall family".into(),
            ));
        }
        Ok(c)
    }
}
