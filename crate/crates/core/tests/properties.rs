use colored_eulerian::algebra::{class_sums_des, is_in_span, SpanCheck};
use colored_eulerian::poset::random_poset;
use colored_eulerian::ppartition::{count_ppartitions_bruteforce, omega_via_extensions};
use colored_eulerian::{ClassPartition, ColoredGroup, ColoredPermutation, Limits, QElement, Rational, Scalar};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn perm(r: u32, n: usize, rank: usize) -> ColoredPermutation {
    let order = ColoredGroup::new(r, n, &Limits::default()).unwrap().order();
    ColoredPermutation::unrank(r, n, rank % order).unwrap()
}

fn group_and_ranks() -> impl Strategy<Value = (u32, usize, usize, usize, usize)> {
    (1u32..=3, 0usize..=3, any::<usize>(), any::<usize>(), any::<usize>())
}

proptest! {
    #[test]
    fn associativity((r, n, a, b, c) in group_and_ranks()) {
        let (x, y, z) = (perm(r, n, a), perm(r, n, b), perm(r, n, c));
        let left = x.compose(&y).unwrap().compose(&z).unwrap();
        let right = x.compose(&y.compose(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_and_inverse((r, n, a, _, _) in group_and_ranks()) {
        let x = perm(r, n, a);
        let id = ColoredPermutation::identity(r, n).unwrap();
        prop_assert_eq!(&id.compose(&x).unwrap(), &x);
        prop_assert_eq!(&x.compose(&id).unwrap(), &x);
        prop_assert_eq!(&x.inverse().compose(&x).unwrap(), &id);
        prop_assert_eq!(&x.compose(&x.inverse()).unwrap(), &id);
    }

    #[test]
    fn text_and_json_round_trip((r, n, a, _, _) in group_and_ranks()) {
        let x = perm(r, n, a);
        prop_assert_eq!(&ColoredPermutation::parse(r, &x.to_string()).unwrap(), &x);
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(&serde_json::from_str::<ColoredPermutation>(&json).unwrap(), &x);
        prop_assert_eq!(ColoredPermutation::unrank(r, n, x.rank()).unwrap(), x);
    }

    #[test]
    fn standard_variant_matches_descent_set((r, n, a, _, _) in group_and_ranks()) {
        let x = perm(r, n, a);
        let variant = x.descent_set_variant(0, 1 % r).unwrap();
        if r > 1 {
            prop_assert_eq!(variant.clone(), x.descent_set());
        } else {
            let inner: Vec<usize> = variant.iter().copied().filter(|&i| i < n).collect();
            prop_assert_eq!(inner, x.descent_set());
        }
        prop_assert!(!variant.contains(&0));
    }

    #[test]
    fn descent_profile_is_consistent((r, n, a, _, _) in group_and_ranks()) {
        let x = perm(r, n, a);
        let p = x.descent_profile();
        prop_assert_eq!(p.des, p.descent_set.len());
        prop_assert_eq!(p.intdes, p.internal_descent_set.len());
        prop_assert_eq!(p.descent_set.contains(&n), n > 0 && x.at(n).color != 0);
        prop_assert_eq!(x.mr_key().total(), n);
    }

    #[test]
    fn convolution_is_bilinear_and_associative(
        (r, n) in (1u32..=2, 1usize..=3),
        coeffs in proptest::collection::vec((any::<usize>(), -5i64..=5), 1..6),
    ) {
        let l = Limits::default();
        let order = ColoredGroup::new(r, n, &l).unwrap().order();
        let third = coeffs.len() / 3 + 1;
        let make = |chunk: &[(usize, i64)]| {
            QElement::from_ranks(r, n, chunk.iter().map(|&(k, c)| (k % order, Rational::from_i64(c)))).unwrap()
        };
        let a = make(&coeffs[..third.min(coeffs.len())]);
        let b = make(&coeffs[third.min(coeffs.len())..]);
        let c = make(&coeffs);
        let ab_c = a.multiply(&b, &l).unwrap().multiply(&c, &l).unwrap();
        let a_bc = a.multiply(&b.multiply(&c, &l).unwrap(), &l).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let lhs = a.multiply(&b.add(&c).unwrap(), &l).unwrap();
        let rhs = a.multiply(&b, &l).unwrap().add(&a.multiply(&c, &l).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ppartition_oracle(seed in any::<u64>(), r in 1u32..=3, len in 0usize..=4, j in 0u32..=3) {
        let l = Limits::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_poset(&mut rng, r, len, 0.4).unwrap();
        prop_assert_eq!(count_ppartitions_bruteforce(&p, j, &l).unwrap(), omega_via_extensions(&p, j, &l).unwrap());
    }

    #[test]
    fn product_rule(seed in any::<u64>(), r in 1u32..=3, len1 in 0usize..=2, len2 in 0usize..=2, j in 0u32..=2) {
        let l = Limits::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p1 = random_poset(&mut rng, r, len1, 0.4).unwrap();
        let p2 = random_poset(&mut rng, r, len2, 0.4).unwrap().shift_values(len1 as u32).unwrap();
        let union = p1.disjoint_union(&p2).unwrap();
        let lhs = count_ppartitions_bruteforce(&union, j, &l).unwrap();
        let rhs = count_ppartitions_bruteforce(&p1, j, &l).unwrap() * count_ppartitions_bruteforce(&p2, j, &l).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn group_orders() {
    for (r, n, order) in [(1, 3, 6), (2, 2, 8), (5, 3, 750), (4, 5, 122880), (3, 0, 1)] {
        let g = ColoredGroup::new(r, n, &Limits::default()).unwrap();
        assert_eq!(g.order(), order);
        assert!(g.elements().windows(2).all(|w| w[0].rank() + 1 == w[1].rank()));
    }
}

#[test]
fn exhaustive_inverses() {
    for (r, n) in [(1, 3), (2, 3), (3, 3)] {
        let g = ColoredGroup::new(r, n, &Limits::default()).unwrap();
        for x in g.elements() {
            assert!(x.inverse().compose(x).unwrap().is_identity());
        }
    }
}

#[test]
fn descent_statistics_constant_on_colored_compositions() {
    for r in 1..=3 {
        for n in 0..=4 {
            let g = ColoredGroup::new(r, n, &Limits::default()).unwrap();
            let mr = ClassPartition::by_colored_composition(&g);
            for c in 0..mr.class_count() {
                let mut members = mr.members(c).map(|k| g.element(k).descent_profile());
                let first = members.next().unwrap();
                assert!(members.all(|p| p == first), "r={r} n={n} class {}", mr.classes()[c].key);
            }
        }
    }
}

#[test]
fn products_of_class_sums_lie_in_span() {
    let l = Limits::default();
    for (r, n) in [(1, 3), (2, 2), (3, 2), (2, 3)] {
        let g = ColoredGroup::new(r, n, &l).unwrap();
        let (part, sums) = class_sums_des::<Rational>(&g);
        for a in &sums {
            for b in &sums {
                let prod = a.multiply(b, &l).unwrap();
                assert!(matches!(is_in_span(&prod, &part).unwrap(), SpanCheck::InSpan(_)));
            }
        }
    }
}

#[test]
fn float_and_exact_convolution_agree() {
    let l = Limits::default();
    let g = ColoredGroup::new(2, 3, &l).unwrap();
    let (_, exact) = class_sums_des::<Rational>(&g);
    let (_, approx) = class_sums_des::<f64>(&g);
    let e = exact[1].multiply(&exact[2], &l).unwrap();
    let a = approx[1].multiply(&approx[2], &l).unwrap();
    for (rank, v) in e.terms() {
        let v = v.to_integer().to_string().parse::<f64>().unwrap();
        assert!((a.coefficient_at(rank) - v).abs() < 1e-9);
    }
    assert_eq!(e.support_len(), a.support_len());
}
