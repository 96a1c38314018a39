use std::fmt;

use serde::{Deserialize, Serialize};

/// The six arrow configurations around a vertex.
///
/// Edges are read as occupied when the arrow points right (horizontal) or
/// up (vertical); conservation is `left + bottom = right + top`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VertexType {
    A1,
    A2,
    B1,
    B2,
    C1,
    C2,
}

impl VertexType {
    pub const ALL: [VertexType; 6] = [
        VertexType::A1,
        VertexType::A2,
        VertexType::B1,
        VertexType::B2,
        VertexType::C1,
        VertexType::C2,
    ];

    /// `[left→, bottom↑, right→, top↑]`.
    pub fn edges(self) -> [bool; 4] {
        match self {
            VertexType::A1 => [true, true, true, true],
            VertexType::A2 => [false, false, false, false],
            VertexType::B1 => [false, true, false, true],
            VertexType::B2 => [true, false, true, false],
            VertexType::C1 => [true, false, false, true],
            VertexType::C2 => [false, true, true, false],
        }
    }

    pub fn from_edges(e: [bool; 4]) -> Option<VertexType> {
        VertexType::ALL.into_iter().find(|v| v.edges() == e)
    }

    pub fn left(self) -> bool {
        self.edges()[0]
    }

    pub fn bottom(self) -> bool {
        self.edges()[1]
    }

    pub fn right(self) -> bool {
        self.edges()[2]
    }

    pub fn top(self) -> bool {
        self.edges()[3]
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// Entry of the associated alternating sign matrix.
    pub fn asm_entry(self) -> i8 {
        match self {
            VertexType::C1 => 1,
            VertexType::C2 => -1,
            _ => 0,
        }
    }

    pub fn name(self) -> &'static str {
        ["A1", "A2", "B1", "B2", "C1", "C2"][self.index()]
    }

    pub fn parse(s: &str) -> Option<VertexType> {
        VertexType::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Number of vertices of each type.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VertexCounts {
    counts: [usize; 6],
}

impl VertexCounts {
    pub fn from_vertices<'a>(vs: impl IntoIterator<Item = &'a VertexType>) -> Self {
        let mut counts = [0; 6];
        for v in vs {
            counts[v.index()] += 1;
        }
        VertexCounts { counts }
    }

    pub fn get(&self, v: VertexType) -> usize {
        self.counts[v.index()]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// The balance relations every domain-wall configuration of size `n` obeys.
    pub fn satisfies_dwbc(&self, n: usize) -> bool {
        use VertexType::*;
        self.get(A1) == self.get(A2)
            && self.get(B1) == self.get(B2)
            && self.get(C1) == self.get(C2) + n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conservation_and_uniqueness() {
        for v in VertexType::ALL {
            let [l, b, r, t] = v.edges();
            assert_eq!(l as u8 + b as u8, r as u8 + t as u8, "{v}");
            assert_eq!(VertexType::from_edges(v.edges()), Some(v));
            assert_eq!(VertexType::parse(v.name()), Some(v));
        }
        assert_eq!(VertexType::from_edges([true, true, false, false]), None);
    }
}
