//! Seeded generation of small rational parameters.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactmath::{rat, FieldScalar, Rational};

/// Largest numerator or denominator drawn.
pub const MAX_ENTRY: i64 = 13;

pub struct ParamSampler {
    rng: ChaCha8Rng,
    rejected: usize,
}

impl ParamSampler {
    pub fn new(seed: u64) -> Self {
        ParamSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            rejected: 0,
        }
    }

    /// Nonzero rational with `|p|, q ≤ 13`.
    pub fn rational(&mut self) -> Rational {
        loop {
            let p = self.rng.gen_range(-MAX_ENTRY..=MAX_ENTRY);
            let q = self.rng.gen_range(1..=MAX_ENTRY);
            if p != 0 {
                return rat(p, q);
            }
        }
    }

    pub fn scalar(&mut self) -> FieldScalar {
        FieldScalar::rational(self.rational())
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    /// Draws until `accept` holds, counting rejected draws.
    pub fn sample_until<T>(
        &mut self,
        mut draw: impl FnMut(&mut Self) -> T,
        accept: impl Fn(&T) -> bool,
    ) -> T {
        loop {
            let v = draw(self);
            if accept(&v) {
                return v;
            }
            self.rejected += 1;
        }
    }

    /// `n` pairwise distinct scalars.
    pub fn distinct_scalars(&mut self, n: usize) -> Vec<FieldScalar> {
        self.sample_until(
            |s| (0..n).map(|_| s.scalar()).collect::<Vec<_>>(),
            |v| (0..v.len()).all(|i| (0..i).all(|j| v[i] != v[j])),
        )
    }

    pub fn rejected(&self) -> usize {
        self.rejected
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_is_reproducible() {
        let a: Vec<_> = (0..5)
            .map({
                let mut s = ParamSampler::new(7);
                move |_| s.rational()
            })
            .collect();
        let b: Vec<_> = (0..5)
            .map({
                let mut s = ParamSampler::new(7);
                move |_| s.rational()
            })
            .collect();
        assert_eq!(a, b);
        let v = ParamSampler::new(1).distinct_scalars(6);
        assert_eq!(v.len(), 6);
    }
}
