use num_traits::Zero;
use proptest::prelude::*;
use torilab_core::betti::stable_betti_gf;
use torilab_core::charpoly::{CharacterPolynomial, Monomial};
use torilab_core::coinvariant::{graded_char_truncated, GroupKind};
use torilab_core::exactmath::{rat, BigInt, BigRational, Poly, RationalFunction, TruncatedSeries};
use torilab_core::partitions::{enumerate_double_partitions, DoublePartition, Partition};
use torilab_core::tori::{asymptotic_limit, count_tori_at};

fn small_rat() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rat(), 0..5).prop_map(Poly::new)
}

fn ratfun() -> impl Strategy<Value = RationalFunction> {
    (poly(), poly())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RationalFunction::new(&n, &d).unwrap())
}

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=4, 0..=max).prop_map(|v| Partition::new(v).unwrap())
}

fn double_partition() -> impl Strategy<Value = DoublePartition> {
    (partition(3), partition(3)).prop_map(|(a, b)| DoublePartition::new(a, b))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((1usize..=3, any::<bool>(), 1u32..=2), 0..3).prop_map(|factors| {
        factors.into_iter().fold(Monomial::one(), |m, (r, is_x, e)| {
            m.mul(&if is_x { Monomial::x(r, e) } else { Monomial::y(r, e) })
        })
    })
}

fn char_poly() -> impl Strategy<Value = CharacterPolynomial> {
    prop::collection::vec((monomial(), small_rat()), 0..4).prop_map(CharacterPolynomial::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a);
    }

    #[test]
    fn ratfun_field_axioms(f in ratfun(), g in ratfun(), h in ratfun()) {
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        if !f.is_zero() {
            prop_assert_eq!(&f * &f.inverse().unwrap(), RationalFunction::one());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in ratfun(), g in ratfun()) {
        let seven = rat(7, 1);
        if let (Ok(a), Ok(b)) = (f.eval(&seven), g.eval(&seven)) {
            prop_assert_eq!((&f + &g).eval(&seven).unwrap(), &a + &b);
            prop_assert_eq!((&f * &g).eval(&seven).unwrap(), &a * &b);
        }
    }

    #[test]
    fn exp_turns_sums_into_products(a in prop::collection::vec(small_rat(), 1..6), b in prop::collection::vec(small_rat(), 1..6)) {
        let order = 6;
        let mut a = a;
        let mut b = b;
        a[0] = BigRational::zero();
        b[0] = BigRational::zero();
        let sa = TruncatedSeries::new(a, order);
        let sb = TruncatedSeries::new(b, order);
        let lhs = sa.exp().unwrap().mul(&sb.exp().unwrap());
        prop_assert_eq!(lhs, sa.add(&sb).exp().unwrap());
    }

    #[test]
    fn char_poly_evaluation_is_a_homomorphism(p in char_poly(), q in char_poly(), c in double_partition()) {
        prop_assert_eq!((&p * &q).evaluate(&c), p.evaluate(&c) * q.evaluate(&c));
        prop_assert_eq!((&p + &q).evaluate(&c), p.evaluate(&c) + q.evaluate(&c));
    }

    #[test]
    fn binomial_basis_round_trip(p in char_poly()) {
        let basis = p.to_binomial_basis();
        prop_assert_eq!(CharacterPolynomial::from_binomial_basis(&basis), p);
    }

    #[test]
    fn char_poly_text_round_trip(p in char_poly()) {
        prop_assert_eq!(p.to_string().parse::<CharacterPolynomial>().unwrap(), p);
    }

    #[test]
    fn double_partition_text_round_trip(c in double_partition()) {
        prop_assert_eq!(c.to_string().parse::<DoublePartition>().unwrap(), c);
    }

    #[test]
    fn betti_gf_is_linear(p in char_poly(), q in char_poly()) {
        let sum = stable_betti_gf(&(&p + &q));
        prop_assert_eq!(sum.gf(), &(stable_betti_gf(&p).gf() + stable_betti_gf(&q).gf()));
        sum.check_poles().unwrap();
    }

    #[test]
    fn asymptotic_limit_is_linear(p in char_poly(), q in char_poly()) {
        let sum = asymptotic_limit(GroupKind::BC, &(&p + &q)).unwrap();
        let parts = &asymptotic_limit(GroupKind::BC, &p).unwrap() + &asymptotic_limit(GroupKind::BC, &q).unwrap();
        prop_assert_eq!(sum, parts);
    }

    #[test]
    fn tori_counts_are_integers(c in double_partition(), q in 2i64..=9) {
        let v = count_tori_at(GroupKind::BC, &c, &rat(q, 1)).unwrap();
        prop_assert!(v.is_integer() && v > BigRational::zero());
    }

    #[test]
    fn graded_character_at_one_is_regular(n in 0usize..=5, pick in any::<prop::sample::Index>()) {
        // R_n is the regular representation: χ(1) = |B_n|, χ(σ) = 0 otherwise
        let classes = enumerate_double_partitions(n);
        let c = pick.get(&classes);
        let total: BigInt = graded_char_truncated(GroupKind::BC, c, n * n).into_iter().sum();
        let expected = if *c == DoublePartition::identity(n) { GroupKind::BC.group_order(n) } else { 0.into() };
        prop_assert_eq!(total, expected);
    }
}
