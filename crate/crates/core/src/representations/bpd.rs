use super::rook::Permutation;
use crate::error::Result;
use crate::sixvertex::{SixVertexConfig, VertexType};

/// Pipes on the edges with left or down arrows; pipes cross at `A2`
/// vertices instead of touching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BumplessPipeDream {
    config: SixVertexConfig,
}

impl BumplessPipeDream {
    pub fn from_config(c: &SixVertexConfig) -> Result<Self> {
        c.require_dwbc()?;
        Ok(BumplessPipeDream { config: c.clone() })
    }

    pub fn config(&self) -> &SixVertexConfig {
        &self.config
    }

    /// `σ(i)` is the South column reached by the pipe entering row `i`
    /// from the East.
    pub fn permutation(&self) -> Permutation {
        let c = &self.config;
        let n = c.n_rows();
        let mut out = Vec::with_capacity(n);
        for start in 0..n {
            let (mut r, mut col) = (start, n - 1);
            let mut heading_west = true;
            loop {
                let v = c.get(r, col);
                heading_west = match (v, heading_west) {
                    (VertexType::A2 | VertexType::B1, true) => true,
                    (VertexType::C1, true) => false,
                    (VertexType::A2 | VertexType::B2, false) => false,
                    (VertexType::C2, false) => true,
                    _ => unreachable!("pipe enters {v} from the wrong side"),
                };
                if heading_west {
                    col -= 1;
                } else if r + 1 == n {
                    out.push(col + 1);
                    break;
                } else {
                    r += 1;
                }
            }
        }
        Permutation::new(out).expect("pipes end in distinct columns")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representations::rook_structure;
    use crate::sixvertex::enumerate_dwbc;

    #[test]
    fn agrees_with_rooks() {
        for c in enumerate_dwbc(4).unwrap() {
            let p = BumplessPipeDream::from_config(&c).unwrap().permutation();
            if let Some(r) = rook_structure(&c).unwrap() {
                assert_eq!(p, r);
            }
        }
    }
}
