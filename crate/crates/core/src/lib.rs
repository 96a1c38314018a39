//! Exact enumeration and identity checking for the six-vertex model with
//! domain wall boundary conditions, its combinatorial avatars, Schur
//! polynomials as lattice partition functions, and Littlewood-Richardson
//! puzzles.
//!
//! Every quantity is computed in exact arithmetic: rationals, Gaussian
//! rationals, or the Eisenstein-type field `Q(ω)` with `ω² = ω - 1`.

pub mod error;
pub mod exactmath;
pub mod exec;
pub mod puzzles;
pub mod random;
pub mod representations;
pub mod schur;
pub mod sixvertex;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Exec;
