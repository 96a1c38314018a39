//! Exhaustive checks over every domain-wall configuration of small size.

use std::collections::{BTreeSet, HashSet};

use vertexlab::representations::{
    link_counts, AsmMatrix, Colour, Fpl, HeightFunction, LatticePaths, MonotoneTriangle,
};
use vertexlab::schur::asm_count;
use vertexlab::sixvertex::{dwbc_configs, SixVertexConfig};
use vertexlab::Exec;

fn configs(n: usize) -> Vec<SixVertexConfig> {
    dwbc_configs(n, Exec::default()).unwrap()
}

#[test]
fn hub_round_trips() {
    for n in 1..=5 {
        for c in configs(n) {
            let h = HeightFunction::from_config(&c).unwrap();
            let a = AsmMatrix::from_config(&c).unwrap();
            let t = MonotoneTriangle::from_config(&c).unwrap();
            assert_eq!(h.to_config(), c);
            assert_eq!(a.to_config(), c);
            assert_eq!(t.to_config(), c);
            assert_eq!(HeightFunction::from_asm(&a), h);
            assert_eq!(h.to_asm(), a);
            let p = LatticePaths::from_config(&c).unwrap();
            assert_eq!(p.to_config().unwrap(), c);
        }
    }
}

#[test]
fn equal_cardinalities() {
    for n in 1..=5 {
        let cs = configs(n);
        let heights: HashSet<_> = cs
            .iter()
            .map(|c| HeightFunction::from_config(c).unwrap())
            .collect();
        let asms: HashSet<_> = cs
            .iter()
            .map(|c| AsmMatrix::from_config(c).unwrap())
            .collect();
        let tris: HashSet<_> = cs
            .iter()
            .map(|c| MonotoneTriangle::from_config(c).unwrap())
            .collect();
        let expected: usize = asm_count(n).try_into().unwrap();
        assert_eq!(cs.len(), expected);
        assert_eq!(heights.len(), expected);
        assert_eq!(asms.len(), expected);
        assert_eq!(tris.len(), expected);
    }
}

#[test]
fn heights_form_a_lattice() {
    for n in 1..=4 {
        let hs: Vec<HeightFunction> = configs(n)
            .iter()
            .map(|c| HeightFunction::from_config(c).unwrap())
            .collect();
        let set: HashSet<&HeightFunction> = hs.iter().collect();
        for a in &hs {
            for b in &hs {
                let m = a.meet(b).unwrap();
                let j = a.join(b).unwrap();
                assert!(set.contains(&m) && set.contains(&j));
                assert!(m.le(a) && m.le(b) && a.le(&j) && b.le(&j));
            }
        }
    }
}

#[test]
fn loops_are_fully_packed_and_noncrossing() {
    for n in 1..=5 {
        for c in configs(n) {
            let f = Fpl::from_config(&c).unwrap();
            assert!(f.is_fully_packed());
            let reds = f
                .horizontal
                .iter()
                .chain(&f.vertical)
                .flatten()
                .filter(|&&x| x == Colour::Red)
                .count();
            assert_eq!(reds, n * (n + 1));
            let lp = f.link_pattern().unwrap();
            let pairs = lp.pairs();
            assert_eq!(pairs.len(), n);
            for &(a, b) in pairs {
                for &(c, d) in pairs {
                    assert!(!(a < c && c < b && b < d), "crossing in {lp}");
                }
            }
        }
    }
}

#[test]
fn refined_counts_sum_to_asm_numbers() {
    for n in 1..=5 {
        let lc = link_counts(n, Exec::default()).unwrap();
        assert_eq!(lc.total(), u64::try_from(asm_count(n)).unwrap());
        assert!(lc.rotation_invariant());
    }
}

#[test]
fn row_and_column_triangles_determine_the_configuration() {
    for n in 1..=4 {
        let mut seen = BTreeSet::new();
        let cs = configs(n);
        for c in &cs {
            let col = MonotoneTriangle::column_triangle(c).unwrap();
            let row = MonotoneTriangle::from_config(c).unwrap();
            seen.insert((row.rows().to_vec(), col.rows().to_vec()));
        }
        assert_eq!(seen.len(), cs.len());
    }
}
