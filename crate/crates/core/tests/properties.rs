use proptest::prelude::*;

use vertexlab::exactmath::{rat, FieldScalar, FieldTag};
use vertexlab::puzzles::{product_rule, BoundaryString};
use vertexlab::schur::{schur_bialternant, schur_ssyt, Partition};
use vertexlab::sixvertex::{izergin, partition_function_brute, BoundarySpec, WeightSystem};
use vertexlab::Exec;

fn small() -> impl Strategy<Value = (i64, i64)> {
    (-13i64..=13, 1i64..=13)
}

fn scalar(tag: FieldTag) -> impl Strategy<Value = FieldScalar> {
    (small(), small()).prop_map(move |((a, b), (c, d))| {
        let im = if tag == FieldTag::Q {
            rat(0, 1)
        } else {
            rat(c, d)
        };
        FieldScalar::new(tag, rat(a, b), im).unwrap()
    })
}

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn distinct(v: &[FieldScalar]) -> bool {
    (0..v.len()).all(|i| (0..i).all(|j| v[i] != v[j]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(tag in prop_oneof![Just(FieldTag::Qi), Just(FieldTag::Qw)],
                    seeds in proptest::collection::vec((small(), small()), 3)) {
        let v: Vec<FieldScalar> = seeds
            .iter()
            .map(|&((a, b), (c, d))| FieldScalar::new(tag, rat(a, b), rat(c, d)).unwrap())
            .collect();
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!((x + y) * z.clone(), x * z + y * z);
        prop_assert_eq!(x * y, y * x);
        prop_assert_eq!((x * y) * z.clone(), x * &(y * z));
        if !x.is_zero_value() {
            prop_assert_eq!(x * &x.try_inv().unwrap(), FieldScalar::int(1));
        }
        let back: FieldScalar = serde_json::from_str(&serde_json::to_string(x).unwrap()).unwrap();
        prop_assert_eq!(&back, x);
        prop_assert_eq!(&x.to_string().parse::<FieldScalar>().unwrap(), x);
    }

    #[test]
    fn partition_text_round_trip(p in partition(6, 9)) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn boundary_strings_round_trip(p in partition(4, 5)) {
        let k = 4;
        let s = BoundaryString::encode(&p, k, k + 5).unwrap();
        prop_assert_eq!(s.ones(), k);
        prop_assert_eq!(s.decode(), p.clone());
        prop_assert_eq!(s.to_string().parse::<BoundaryString>().unwrap(), s);
    }

    #[test]
    fn schur_is_symmetric(p in partition(3, 3), zs in proptest::collection::vec(scalar(FieldTag::Q), 3)) {
        prop_assume!(distinct(&zs));
        let mut rev = zs.clone();
        rev.reverse();
        let a = schur_bialternant(&p, &zs).unwrap();
        prop_assert_eq!(&a, &schur_bialternant(&p, &rev).unwrap());
        prop_assert_eq!(&a, &schur_ssyt(&p, &rev).unwrap());
    }

    #[test]
    fn partition_function_symmetric_in_rows(q in scalar(FieldTag::Q),
                                            xs in proptest::collection::vec(scalar(FieldTag::Q), 3),
                                            ys in proptest::collection::vec(scalar(FieldTag::Q), 3)) {
        prop_assume!(!q.is_zero_value());
        let brute = |xs: &[FieldScalar]| {
            let w = WeightSystem::SixSymbolic { q: q.clone(), xs: xs.to_vec(), ys: ys.clone() };
            partition_function_brute(&w, &BoundarySpec::Dwbc(3), Exec::Sequential).unwrap()
        };
        let swapped = [xs[1].clone(), xs[0].clone(), xs[2].clone()];
        let z = brute(&xs);
        prop_assert_eq!(&z, &brute(&swapped));
        if let Ok(det) = izergin(&q, &xs, &ys) {
            prop_assert_eq!(det, z);
        }
    }

    #[test]
    fn lr_is_commutative(l in partition(2, 3), m in partition(2, 2)) {
        let a = product_rule(&l, &m, Exec::Sequential).unwrap();
        let b = product_rule(&m, &l, Exec::Sequential).unwrap();
        prop_assert_eq!(a.expansion, b.expansion);
    }
}
