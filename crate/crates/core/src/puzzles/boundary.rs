use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::schur::Partition;

/// A 0/1 word of length `N` with `k` ones encoding a partition in a
/// `k × (N - k)` box: the `j`-th one from the left sits after
/// `λ_{k+1-j}` zeros. The empty partition is `1…10…0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundaryString {
    bits: Vec<bool>,
}

impl BoundaryString {
    pub fn new(bits: Vec<bool>) -> Self {
        BoundaryString { bits }
    }

    pub fn encode(lambda: &Partition, k: usize, n: usize) -> Result<Self> {
        if k > n || !lambda.fits_box(k, (n - k) as u32) {
            return Err(Error::DoesNotFitBox(
                lambda.to_string(),
                k,
                n.saturating_sub(k),
            ));
        }
        let lam = lambda.padded(k);
        let mut bits = vec![false; n];
        for j in 1..=k {
            bits[lam[k - j] as usize + j - 1] = true;
        }
        Ok(BoundaryString { bits })
    }

    pub fn decode(&self) -> Partition {
        let mut parts: Vec<u32> = self
            .bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .enumerate()
            .map(|(j, (p, _))| (p - j) as u32)
            .collect();
        parts.reverse();
        Partition::new(parts).expect("positions increase")
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn reversed(&self) -> Self {
        BoundaryString {
            bits: self.bits.iter().rev().copied().collect(),
        }
    }
}

impl fmt::Display for BoundaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BoundaryString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse(format!(
                    "boundary string {s:?}: expected only 0 and 1"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BoundaryString::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn round_trips() {
        let e = BoundaryString::encode(&Partition::empty(), 2, 4).unwrap();
        assert_eq!(e.to_string(), "1100");
        assert_eq!(e.decode(), Partition::empty());
        let one = BoundaryString::encode(&"1".parse().unwrap(), 2, 4).unwrap();
        assert_eq!(one.to_string(), "1010");
        assert_eq!(one.decode().to_string(), "1");
        let mut seen = HashSet::new();
        for lam in Partition::in_box(3, 3) {
            let s = BoundaryString::encode(&lam, 3, 6).unwrap();
            assert_eq!(s.decode(), lam);
            assert!(seen.insert(s));
        }
        assert_eq!(seen.len(), 20);
    }

    #[test]
    fn box_errors() {
        let lam: Partition = "3".parse().unwrap();
        assert!(matches!(
            BoundaryString::encode(&lam, 2, 4),
            Err(Error::DoesNotFitBox(..))
        ));
        assert!(matches!(
            BoundaryString::encode(&"1,1,1".parse().unwrap(), 2, 6),
            Err(Error::DoesNotFitBox(..))
        ));
        assert!("10x".parse::<BoundaryString>().is_err());
    }
}
