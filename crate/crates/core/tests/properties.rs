use proptest::prelude::*;

use delpezzo::classify::{enumerate_by_self_intersection, has_smooth_rational_representative};
use delpezzo::moduli::{dim_linear_system, dim_mor};
use delpezzo::weyl::{minus_one_classes, orbit, reflect, simple_roots};
use delpezzo::{DivisorClass, Surface};

fn class_on(r: usize, range: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = DivisorClass> {
    (range.clone(), prop::collection::vec(range, r)).prop_map(|(d, m)| DivisorClass::new(d, &m).unwrap())
}

fn surface_and_classes(n: usize) -> impl Strategy<Value = (Surface, Vec<DivisorClass>)> {
    (1usize..=8).prop_flat_map(move |r| {
        (
            Just(Surface::new(r as i64).unwrap()),
            prop::collection::vec(class_on(r, -50..=50), n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn intersection_is_symmetric_and_bilinear(
        (s, v) in surface_and_classes(3),
        k in -20i64..=20,
    ) {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(s.intersect(a, b).unwrap(), s.intersect(b, a).unwrap());
        let combo = a.add_scaled(k, b).unwrap();
        prop_assert_eq!(
            s.intersect(&combo, c).unwrap(),
            s.intersect(a, c).unwrap() + k * s.intersect(b, c).unwrap()
        );
    }

    #[test]
    fn reflections_are_involutive_isometries_fixing_k((s, v) in surface_and_classes(1)) {
        let beta = &v[0];
        let k = s.canonical_class();
        for root in simple_roots(&s) {
            let image = reflect(&s, &root, beta).unwrap();
            prop_assert_eq!(reflect(&s, &root, &image).unwrap(), *beta);
            prop_assert_eq!(s.self_intersection(&image).unwrap(), s.self_intersection(beta).unwrap());
            prop_assert_eq!(s.intersect(&k, &image).unwrap(), s.intersect(&k, beta).unwrap());
        }
    }

    #[test]
    fn adjunction_parity_holds((s, v) in surface_and_classes(1)) {
        let beta = &v[0];
        let sum = s.self_intersection(beta).unwrap() + s.intersect(&s.canonical_class(), beta).unwrap();
        prop_assert_eq!(sum.rem_euclid(2), 0);
        prop_assert!(s.arithmetic_genus(beta).is_ok());
    }

    #[test]
    fn parse_inverts_format((s, v) in surface_and_classes(1)) {
        let text = v[0].to_string();
        prop_assert_eq!(s.parse_class(&text).unwrap(), v[0]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn verdict_is_permutation_invariant(
        beta in class_on(6, -2..=9),
        perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let s = Surface::cubic();
        let a = has_smooth_rational_representative(&s, &beta).unwrap();
        let b = has_smooth_rational_representative(&s, &beta.permuted(&perm)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn verdict_implies_genus_zero(r in 1i64..=7, beta_seed in class_on(7, -2..=9)) {
        let s = Surface::new(r).unwrap();
        let beta = s.class(beta_seed.degree(), &beta_seed.multiplicities()[..r as usize]).unwrap();
        if has_smooth_rational_representative(&s, &beta).unwrap().smooth_rational {
            prop_assert_eq!(s.arithmetic_genus(&beta).unwrap(), 0);
        }
    }
}

#[test]
fn orbit_is_closed_under_simple_reflections() {
    for r in 3..=7 {
        let s = Surface::new(r).unwrap();
        for seed in [s.exceptional(0), s.hyperplane()] {
            let o = orbit(&s, &seed, 100_000).unwrap();
            for member in &o.representatives {
                for root in simple_roots(&s) {
                    let image = reflect(&s, &root, member).unwrap();
                    assert!(o.representatives.binary_search(&image).is_ok());
                }
            }
        }
    }
}

#[test]
fn every_minus_one_class_is_a_weyl_image_of_the_first_exceptional_class() {
    for r in 3..=8 {
        let s = Surface::new(r).unwrap();
        let o = orbit(&s, &s.exceptional(0), 1000).unwrap();
        assert_eq!(o.representatives, minus_one_classes(&s), "r = {r}");
    }
}

#[test]
fn three_way_dimension_identity() {
    for r in 1..=7 {
        let s = Surface::new(r).unwrap();
        for n in -1..=8 {
            for beta in enumerate_by_self_intersection(&s, n).unwrap() {
                let sq = s.self_intersection(&beta).unwrap();
                let anti = s.anticanonical_degree(&beta).unwrap();
                let dim = dim_mor(&s, &beta).unwrap();
                let lin = dim_linear_system(&s, &beta).unwrap();
                if sq < 0 {
                    assert_eq!((dim, lin), (3, 0), "{beta}");
                } else {
                    assert_eq!(dim, anti + 2, "{beta}");
                    assert_eq!(dim - 3, lin, "{beta}");
                    assert_eq!(lin, sq + 1, "{beta}");
                    assert_eq!(lin, anti - 1, "{beta}");
                }
            }
        }
    }
}

#[test]
fn enumeration_finds_every_qualifying_class_in_a_wide_box() {
    // Independent scan over all tuples (not just sorted ones, negatives
    // included) for small r.
    for r in 1..=4usize {
        let s = Surface::new(r as i64).unwrap();
        let width = 12i64; // m in [-2, 9]
        let mut found = std::collections::BTreeSet::new();
        for d in -2..=9 {
            for code in 0..width.pow(r as u32) {
                let mut c = code;
                let m: Vec<i64> = (0..r)
                    .map(|_| {
                        let v = c % width - 2;
                        c /= width;
                        v
                    })
                    .collect();
                let beta = s.class(d, &m).unwrap();
                if has_smooth_rational_representative(&s, &beta).unwrap().smooth_rational {
                    let sq = s.self_intersection(&beta).unwrap();
                    if (-1..=4).contains(&sq) {
                        found.insert(beta.sorted());
                    }
                }
            }
        }
        let listed: std::collections::BTreeSet<_> = (-1..=4)
            .flat_map(|n| enumerate_by_self_intersection(&s, n).unwrap())
            .filter(|c| c.degree() <= 9)
            .collect();
        assert_eq!(found, listed, "r = {r}");
    }
}

#[test]
fn seven_point_conic_classes_have_expected_dimension() {
    let s = Surface::new(7).unwrap();
    let conics = enumerate_by_self_intersection(&s, 0).unwrap();
    assert!(!conics.is_empty());
    for c in &conics {
        assert_eq!(dim_mor(&s, c).unwrap(), s.anticanonical_degree(c).unwrap() + 2);
    }
    // Spot check by hand: (1;1,0,...,0) has −K·β = 3 − 1 = 2, so dim = 4.
    let pencil = s.class(1, &[1, 0, 0, 0, 0, 0, 0]).unwrap();
    assert!(conics.contains(&pencil));
    assert_eq!(dim_mor(&s, &pencil).unwrap(), 4);
}
