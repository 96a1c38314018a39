use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive parts; trailing zeros are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// `i`-th part, zero-padded (0-based).
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn padded(&self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.part(i)).collect()
    }

    pub fn conjugate(&self) -> Partition {
        Partition(
            (1..=self.first())
                .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }

    pub fn fits_box(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.first() <= cols
    }

    /// `(n-1, n-1, n-2, n-2, …, 1, 1)`.
    pub fn staircase_doubled(n: usize) -> Partition {
        Partition((1..n as u32).rev().flat_map(|k| [k, k]).collect())
    }

    /// All partitions of `total` with at most `max_len` parts, each at most
    /// `max_part`, in reverse lexicographic order.
    pub fn all_of(total: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
        fn go(rest: u32, cap: u32, len_left: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if len_left == 0 {
                return;
            }
            for p in (1..=cap.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, len_left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(total, max_part, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// Every partition inside a `rows × cols` box, by size then reverse lex.
    pub fn in_box(rows: usize, cols: u32) -> Vec<Partition> {
        (0..=rows as u32 * cols)
            .flat_map(|t| Partition::all_of(t, rows, cols))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-joined parts; the empty string or `∅`/`0` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_display() {
        let p: Partition = "3,1,1,0".parse().unwrap();
        assert_eq!(p.parts(), &[3, 1, 1]);
        assert_eq!(p.to_string(), "3,1,1");
        assert_eq!(p.conjugate().parts(), &[3, 1, 1]);
        assert_eq!(
            "2,2,1".parse::<Partition>().unwrap().conjugate().parts(),
            &[3, 2]
        );
        assert!("1,2".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().unwrap().is_empty());
    }

    #[test]
    fn counting() {
        assert_eq!(Partition::all_of(5, 5, 5).len(), 7);
        assert_eq!(Partition::in_box(3, 3).len(), 20);
        assert_eq!(Partition::staircase_doubled(3).parts(), &[2, 2, 1, 1]);
        assert!(Partition::staircase_doubled(1).is_empty());
    }
}
