//! Objects in bijection with domain-wall configurations, and the
//! two-to-one map to domino tilings.

mod asm;
mod bpd;
mod domino;
mod fpl;
mod height;
mod monotone;
mod paths;
mod rook;

pub use asm::AsmMatrix;
pub use bpd::BumplessPipeDream;
pub use domino::{domino_oracle, dt_weighted_count};
pub use fpl::{link_counts, vertex_colour, Colour, Fpl, LinkCounts, LinkPattern};
pub use height::HeightFunction;
pub use monotone::MonotoneTriangle;
pub use paths::LatticePaths;
pub use rook::{bruhat_leq, rook_structure, Permutation};
