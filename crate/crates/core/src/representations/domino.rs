use std::collections::HashSet;

use crate::error::Result;
use crate::exec::{check_cap, Exec};
use crate::sixvertex::{fold_configs, EdgeBoundary, VertexType};

/// `Σ 2^{#C1}` over domain-wall configurations.
pub fn dt_weighted_count(n: usize, exec: Exec) -> Result<u128> {
    check_cap(n)?;
    Ok(fold_configs(
        &EdgeBoundary::dwbc(n),
        exec,
        0u128,
        |acc, c| *acc += 1u128 << c.vertex_counts().get(VertexType::C1),
        |a, b| a + b,
    ))
}

/// Counts domino tilings of the Aztec diamond of order `n` directly.
///
/// Cells are unit squares `[x, x+1] × [y, y+1]` with
/// `|x + ½| + |y + ½| ≤ n`; the first free cell in scan order is covered
/// by a domino reaching right or up.
pub fn domino_oracle(n: usize) -> u64 {
    let n = n as i32;
    let mut cells: Vec<(i32, i32)> = Vec::new();
    for y in -n..n {
        for x in -n..n {
            if (2 * x + 1).abs() + (2 * y + 1).abs() <= 2 * n {
                cells.push((x, y));
            }
        }
    }
    let cell_set: HashSet<(i32, i32)> = cells.iter().copied().collect();
    let mut covered = HashSet::new();
    fn go(
        cells: &[(i32, i32)],
        set: &HashSet<(i32, i32)>,
        covered: &mut HashSet<(i32, i32)>,
        from: usize,
    ) -> u64 {
        let Some(k) = (from..cells.len()).find(|&k| !covered.contains(&cells[k])) else {
            return 1;
        };
        let (x, y) = cells[k];
        let mut total = 0;
        for other in [(x + 1, y), (x, y + 1)] {
            if set.contains(&other) && !covered.contains(&other) {
                covered.insert((x, y));
                covered.insert(other);
                total += go(cells, set, covered, k + 1);
                covered.remove(&(x, y));
                covered.remove(&other);
            }
        }
        total
    }
    go(&cells, &cell_set, &mut covered, 0)
}
