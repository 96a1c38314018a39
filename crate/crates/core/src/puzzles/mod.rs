//! Littlewood-Richardson coefficients from 0/1/10 puzzles, with an
//! independent expansion through Kostka numbers.

mod boundary;
mod lr;
mod puzzle;

pub use boundary::BoundaryString;
pub use lr::{default_box, lr_oracle, product_rule, product_rule_in_box, LRResult, LR_CAP};
pub use puzzle::{
    bottom_counts, count_puzzles, decode_bottom, enumerate_puzzles, Label, Puzzle, PuzzleBoundary,
    TRIANGLES,
};
