use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::puzzle::{bottom_counts, decode_bottom, PuzzleBoundary};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::schur::{Kostka, Partition};

/// Largest `|λ| + |μ|` accepted by [`lr_oracle`] and [`product_rule`].
pub const LR_CAP: u32 = 18;

/// Expansion `s_λ s_μ = Σ_ν c^ν_{λμ} s_ν`, zero coefficients omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LRResult {
    pub lambda: Partition,
    pub mu: Partition,
    pub expansion: BTreeMap<Partition, u64>,
}

impl LRResult {
    pub fn coefficient(&self, nu: &Partition) -> u64 {
        self.expansion.get(nu).copied().unwrap_or(0)
    }
}

fn check_lr_cap(lambda: &Partition, mu: &Partition) -> Result<()> {
    let size = lambda.size() + mu.size();
    if size > LR_CAP {
        return Err(Error::CapExceeded {
            size: size as usize,
            cap: LR_CAP as usize,
        });
    }
    Ok(())
}

/// Default box: `k = ℓ(λ) + ℓ(μ)` ones on sides of length `k + λ_1 + μ_1`.
pub fn default_box(lambda: &Partition, mu: &Partition) -> (usize, usize) {
    let k = lambda.len() + mu.len();
    (k + (lambda.first() + mu.first()) as usize, k)
}

/// Compositions `a` with `a ≤ bound` entrywise and `|a| = total`.
fn bounded_compositions(bound: &[u32], total: u32, out: &mut Vec<Vec<u32>>) {
    fn go(bound: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == bound.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest: u32 = bound[i + 1..].iter().sum();
        let lo = left.saturating_sub(rest);
        for a in lo..=bound[i].min(left) {
            cur.push(a);
            go(bound, i + 1, left - a, cur, out);
            cur.pop();
        }
    }
    go(bound, 0, total, &mut Vec::new(), out);
}

/// Expansion by leading-term subtraction on monomial coefficients.
///
/// The coefficient of `x^ν` in `s_λ s_μ` is `Σ_{a+b=ν} K_{λ,a} K_{μ,b}`;
/// shapes are peeled off from the lexicographically largest exponent down.
pub fn lr_oracle(lambda: &Partition, mu: &Partition) -> Result<LRResult> {
    check_lr_cap(lambda, mu)?;
    let n = (lambda.len() + mu.len()).max(1);
    let total = lambda.size() + mu.size();
    let mut shapes = Partition::all_of(total, n, total);
    shapes.sort_by(|a, b| b.cmp(a));
    let mut kostka = Kostka::new();
    let mut expansion: BTreeMap<Partition, u64> = BTreeMap::new();
    for nu in &shapes {
        let bound = nu.padded(n);
        let mut comps = Vec::new();
        bounded_compositions(&bound, lambda.size(), &mut comps);
        let mut coeff: i128 = 0;
        for a in comps {
            let ka = kostka.get(lambda, &a);
            if ka == 0 {
                continue;
            }
            let b: Vec<u32> = bound.iter().zip(&a).map(|(x, y)| x - y).collect();
            coeff += ka as i128 * kostka.get(mu, &b) as i128;
        }
        for (rho, &c) in &expansion {
            coeff -= c as i128 * kostka.get(rho, &bound) as i128;
        }
        if coeff < 0 {
            return Err(Error::InvalidArgument(format!(
                "negative remainder at {nu}"
            )));
        }
        if coeff > 0 {
            expansion.insert(nu.clone(), coeff as u64);
        }
    }
    Ok(LRResult {
        lambda: lambda.clone(),
        mu: mu.clone(),
        expansion,
    })
}

/// Expansion by counting puzzles in the default box.
pub fn product_rule(lambda: &Partition, mu: &Partition, exec: Exec) -> Result<LRResult> {
    let (n, k) = default_box(lambda, mu);
    product_rule_in_box(lambda, mu, n, k, exec)
}

pub fn product_rule_in_box(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    k: usize,
    exec: Exec,
) -> Result<LRResult> {
    check_lr_cap(lambda, mu)?;
    let mut expansion = BTreeMap::new();
    if n == 0 {
        expansion.insert(Partition::empty(), 1);
    } else {
        let b = PuzzleBoundary::new(lambda, mu, &Partition::empty(), n, k)?;
        for (bottom, c) in bottom_counts(&b.west, &b.east, exec) {
            if let Some(nu) = decode_bottom(&bottom) {
                *expansion.entry(nu).or_insert(0) += c;
            }
        }
    }
    Ok(LRResult {
        lambda: lambda.clone(),
        mu: mu.clone(),
        expansion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::dim_eval;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn exp(items: &[(&str, u64)]) -> BTreeMap<Partition, u64> {
        items.iter().map(|&(s, c)| (p(s), c)).collect()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            lr_oracle(&p("1"), &p("1")).unwrap().expansion,
            exp(&[("2", 1), ("1,1", 1)])
        );
        assert_eq!(
            lr_oracle(&p(""), &p("2,1")).unwrap().expansion,
            exp(&[("2,1", 1)])
        );
        assert_eq!(
            lr_oracle(&p("2,1"), &p("1")).unwrap().expansion,
            exp(&[("3,1", 1), ("2,2", 1), ("2,1,1", 1)])
        );
        assert_eq!(
            lr_oracle(&p("2,1"), &p("2,1")).unwrap().expansion,
            exp(&[
                ("4,2", 1),
                ("4,1,1", 1),
                ("3,3", 1),
                ("3,2,1", 2),
                ("3,1,1,1", 1),
                ("2,2,2", 1),
                ("2,2,1,1", 1)
            ])
        );
        assert!(matches!(
            lr_oracle(&p("10"), &p("9")),
            Err(Error::CapExceeded { size: 19, cap: 18 })
        ));
    }

    #[test]
    fn dimension_check() {
        for (l, m) in [("2,1", "1"), ("2", "1,1"), ("2,1", "2")] {
            let r = lr_oracle(&p(l), &p(m)).unwrap();
            let lhs: u64 = r
                .expansion
                .iter()
                .map(|(nu, c)| c * dim_eval(nu, 3).to_string().parse::<u64>().unwrap())
                .sum();
            let rhs = dim_eval(&p(l), 3) * dim_eval(&p(m), 3);
            assert_eq!(lhs.to_string(), rhs.to_string());
        }
    }

    #[test]
    fn puzzles_agree() {
        for (l, m) in [
            ("1", "1"),
            ("1,1", "1"),
            ("2", "2"),
            ("2,1", "1"),
            ("", "2,1"),
            ("", ""),
        ] {
            let (l, m) = (p(l), p(m));
            assert_eq!(
                product_rule(&l, &m, Exec::Sequential).unwrap(),
                lr_oracle(&l, &m).unwrap()
            );
        }
        let (l, m) = (p("2,1"), p("1"));
        let (n, k) = default_box(&l, &m);
        let wide = product_rule_in_box(&l, &m, n + 1, k, Exec::Sequential).unwrap();
        let taller = product_rule_in_box(&l, &m, n + 2, k + 1, Exec::Sequential).unwrap();
        assert_eq!(wide, taller);
        assert_eq!(wide, product_rule(&l, &m, Exec::Parallel).unwrap());
    }
}
