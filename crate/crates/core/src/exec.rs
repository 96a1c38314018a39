//! Sequential or data-parallel execution of independent work items.
//!
//! With the `parallel` feature off every call runs sequentially, whatever
//! [`Exec`] value is passed. Results never depend on the mode.

use std::sync::OnceLock;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

pub const DEFAULT_CAP: usize = 8;

/// Size cap for exhaustive enumeration, overridable through `VERTEXLAB_CAP`.
pub fn size_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("VERTEXLAB_CAP")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_CAP)
    })
}

pub fn check_cap(size: usize) -> Result<()> {
    let cap = size_cap();
    if size > cap {
        Err(Error::SizeTooLarge { size, cap })
    } else {
        Ok(())
    }
}

/// Order-preserving map.
pub fn map_collect<I, T, F>(items: &[I], exec: Exec, f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Exec::Parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Map every item and combine with an associative `reduce`.
pub fn map_reduce<I, T, F, R>(items: &[I], exec: Exec, identity: T, map: F, reduce: R) -> T
where
    I: Sync,
    T: Send + Sync + Clone,
    F: Fn(&I) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Exec::Parallel {
        use rayon::prelude::*;
        return items
            .par_iter()
            .map(map)
            .reduce(|| identity.clone(), &reduce);
    }
    let _ = exec;
    items.iter().map(map).fold(identity, reduce)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let xs: Vec<u64> = (1..=200).collect();
        for exec in [Exec::Sequential, Exec::Parallel] {
            assert_eq!(map_reduce(&xs, exec, 0, |x| x * x, |a, b| a + b), 2_686_700);
            assert_eq!(map_collect(&xs, exec, |x| x + 1)[..3], [2, 3, 4]);
        }
    }
}
