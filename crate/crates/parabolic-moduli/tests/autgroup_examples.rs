//! Worked examples for automorphism and isomorphism classification.

mod common;

use num::BigInt;
use parabolic_moduli::fixtures::{rank2_expected, rank2_swap_weights, rank3_weights};
use parabolic_moduli::prelude::*;
use rand::Rng;

fn t(perm: &[usize], sign: i64, tdeg: i64, hecke: &[i64]) -> NumTransform {
    NumTransform::new(
        perm.to_vec(),
        Sign::from_value(sign).unwrap(),
        tdeg,
        hecke.to_vec(),
    )
}

fn closed(classes: &[NumTransform], r: usize) -> bool {
    classes.iter().all(|a| {
        classes.contains(&inverse(a, r).unwrap())
            && classes
                .iter()
                .all(|b| classes.contains(&compose(a, b, r).unwrap()))
    })
}

#[test]
fn curve_data_validation() {
    assert!(CurveData::new(2, vec![(vec![1, 0], 1)]).is_err());
    assert!(CurveData::new(2, vec![(vec![0, 1], 0)]).is_err());
    assert!(CurveData::new(2, vec![(vec![0, 1], 1), (vec![0, 1], 2)]).is_err());
    assert!(CurveData::new(2, vec![(vec![0, 0], 1)]).is_err());
    let c = CurveData::new(2, vec![(vec![0, 1], 2), (vec![1, 0], 3)]).unwrap();
    assert_eq!((c.multiplicity(&[1, 0]), c.total_multiplicity()), (3, 5));
}

#[test]
fn candidate_examples() {
    assert_eq!(
        candidate_transforms(2, 1, 1, &CurveData::trivial(1, 2)),
        vec![NumTransform::identity(1)]
    );
    assert!(
        candidate_transforms(3, 1, -1, &CurveData::trivial(1, 2)).contains(&t(&[0], -1, 1, &[1]))
    );
    let c = candidate_transforms(2, 2, 0, &CurveData::trivial(2, 2));
    let hs: Vec<Vec<i64>> = c.iter().map(|x| x.hecke.clone()).collect();
    assert_eq!(hs, vec![vec![0, 0], vec![1, 1]]);
    for x in &c {
        assert!(is_in_st_plus(x));
        assert_eq!(apply_to_degree(x, 0, 2), 0);
    }
    let mut g = common::rng(31);
    for _ in 0..50 {
        let (r, n, d) = (g.gen_range(2..=4), g.gen_range(1..=3), g.gen_range(-6..=6));
        for x in candidate_transforms(r, n, d, &CurveData::trivial(n, 2)) {
            assert_eq!(apply_to_degree(&x, d, r), d);
            assert!(r != 2 || is_in_st_plus(&x));
        }
    }
}

#[test]
fn rank_two_odd_degree_concentrated() {
    let a = WeightSystem::parse(2, &[("x", &["1/5", "1/3"]), ("y", &["0", "1/9"])]).unwrap();
    assert!(is_concentrated(&a) && is_generic(&a).generic);
    for g in [2u32, 4] {
        let res = automorphism_group(2, 2, 1, g, &a, &CurveData::trivial(2, g)).unwrap();
        assert_eq!(res.classes, vec![NumTransform::identity(2)]);
        assert_eq!(res.order, num::pow(BigInt::from(2), 2 * g as usize));
    }
}

#[test]
fn rank_three_involution() {
    let a = rank3_weights(&q(1, 8)).unwrap();
    let g = 5;
    let res = automorphism_group(3, 1, -1, g, &a, &CurveData::trivial(1, g)).unwrap();
    let mut want = vec![NumTransform::identity(1), t(&[0], -1, 1, &[1])];
    want.sort();
    assert_eq!(res.classes, want);
    assert_eq!(
        res.order,
        BigInt::from(2) * num::pow(BigInt::from(3), 2 * g as usize)
    );
    assert!(closed(&res.classes, 3));
    assert_eq!(res.lift_validity_genus, 4);
}

#[test]
fn rank_two_swap_family() {
    let a = rank2_swap_weights(&q(1, 10), &q(7, 10)).unwrap();
    let curve = CurveData::new(3, vec![(vec![0, 1], 1), (vec![1, 0], 1)]).unwrap();
    let res = automorphism_group(2, 2, 0, 3, &a, &curve).unwrap();
    assert_eq!(res.classes, rank2_expected());
    assert_eq!(res.order, BigInt::from(2) * num::pow(BigInt::from(2), 6));
    assert!(res.relevant_wall.is_none());
    assert!(closed(&res.classes, 2));
}

#[test]
fn automorphism_classes_form_a_group() {
    let mut g = common::rng(32);
    for _ in 0..40 {
        let (r, n) = (g.gen_range(2..=3), g.gen_range(1..=2));
        let a = common::generic_weights(&mut g, r, n);
        let d = g.gen_range(-4..=4);
        let curve = if n == 2 {
            CurveData::new(2, vec![(vec![0, 1], 1), (vec![1, 0], 1)]).unwrap()
        } else {
            CurveData::trivial(1, 2)
        };
        let res = automorphism_group(r, n, d, 2, &a, &curve).unwrap();
        assert!(res.classes.contains(&NumTransform::identity(n)));
        assert!(closed(&res.classes, r), "{a:?} d = {d}: {:?}", res.classes);
        for x in &res.classes {
            assert_eq!(apply_to_degree(x, d, r), d);
            assert!(same_numerical_chamber(r, &apply_to_weights(x, &a).unwrap(), &a, d).unwrap());
        }
    }
}

#[test]
fn iso_examples() {
    let mut g = common::rng(33);
    for _ in 0..30 {
        let (r, n) = (g.gen_range(2..=3), g.gen_range(1..=2));
        let a = common::generic_weights(&mut g, r, n);
        let d = g.gen_range(-4..=4);
        let id: Vec<usize> = (0..n).collect();
        let same = iso_transforms(r, n, d, &a, d, &a, std::slice::from_ref(&id)).unwrap();
        assert!(same.contains(&NumTransform::identity(n)));
        let mut h = vec![0; n];
        h[0] = 1;
        let shx = NumTransform::hecke_only(h);
        let b = apply_to_weights(&shx, &a).unwrap();
        let found = iso_transforms(r, n, d, &a, d - 1, &b, &[id]).unwrap();
        assert!(found.contains(&shx));
    }
    for _ in 0..30 {
        let a = common::weights(&mut g, 2, 1);
        let b = common::weights(&mut g, 2, 1);
        let d1 = g.gen_range(-5..=5);
        let d2 = d1 + 2 * g.gen_range(-3..=3);
        assert!(!iso_transforms(2, 1, d1, &a, d2, &b, &[vec![0]])
            .unwrap()
            .is_empty());
    }
    let a = common::weights(&mut g, 2, 1);
    assert!(iso_transforms(2, 1, 0, &a, 0, &a, &[vec![1]]).is_err());
}

#[test]
fn concentrated_order_examples() {
    let o = concentrated_orders(2, 2, 3, 1).unwrap();
    assert_eq!(
        (o.aut.clone(), o.threebir.clone(), o.ratio.clone()),
        (16.into(), 64.into(), 4.into())
    );
    assert_eq!(
        concentrated_orders(2, 3, 1, 1).unwrap().ratio,
        BigInt::from(2)
    );
    assert_eq!(
        concentrated_orders(2, 2, 1, 1).unwrap().ratio,
        BigInt::from(1)
    );
    assert!(concentrated_orders(2, 1, 1, 1).is_err());
    // The ratio counts the degree-preserving classes with trivial point
    // symmetry when gcd(r, d) = 1.
    for r in 2..=4usize {
        for n in 1..=3usize {
            for d in [-3i64, -1, 1, 5] {
                if num::integer::gcd(r as i64, d) != 1 {
                    continue;
                }
                let count = candidate_transforms(r, n, d, &CurveData::trivial(n, 2)).len();
                assert_eq!(
                    BigInt::from(count),
                    concentrated_orders(2, r, n, 1).unwrap().ratio,
                    "(r, n, d) = ({r}, {n}, {d})"
                );
            }
        }
    }
}
