use num_bigint::BigInt;
use num_integer::{gcd, Integer};
use num_traits::{One, Zero};
use proptest::prelude::*;

use quadsym::chartab::CyclotomicRing;
use quadsym::ntheory::{
    factorize, fundamental_discriminant, is_discriminant, jacobi, kronecker, kronecker_factored, n_star,
};
use quadsym::reciprocity::{symbol_character, verify_group};
use quadsym::{conjugacy_classes, make_group, parse_group_spec, GroupSpec};

fn small_spec() -> impl Strategy<Value = GroupSpec> {
    let leaf = prop_oneof![
        (1u32..=40).prop_map(GroupSpec::Cyclic),
        (3u32..=16).prop_map(GroupSpec::Dihedral),
        (3u32..=5).prop_map(GroupSpec::Symmetric),
        (3u32..=5).prop_map(GroupSpec::Alternating),
        Just(GroupSpec::Quaternion8),
        Just(GroupSpec::Sl2(4)),
        prop::collection::vec(2u32..=6, 1..=3).prop_map(GroupSpec::Abelian),
    ];
    prop_oneof![
        3 => leaf.clone(),
        1 => (leaf.clone(), leaf).prop_filter_map("order cap", |(a, b)| {
            let spec = GroupSpec::Product(Box::new(a), Box::new(b));
            (spec.expected_order()? <= 240).then_some(spec)
        }),
    ]
}

fn odd_modulus() -> impl Strategy<Value = u64> {
    (0u64..500_000).prop_map(|k| 2 * k + 1)
}

/// A conductor and two elements of `Z[zeta_e]` as coefficient vectors.
fn ring_pair() -> impl Strategy<Value = (u32, Vec<i64>, Vec<i64>)> {
    prop::sample::select(vec![3u32, 4, 5, 8, 9, 12, 15]).prop_flat_map(|e| {
        let deg = CyclotomicRing::new(e).degree();
        (Just(e), prop::collection::vec(-5i64..=5, deg), prop::collection::vec(-5i64..=5, deg))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reciprocity_on_random_groups(spec in small_spec()) {
        let g = make_group(&spec).unwrap();
        let report = verify_group(&g);
        prop_assert!(report.passed(), "{:?}", report.failures());
    }

    #[test]
    fn symbol_is_a_character_mod_exponent(spec in small_spec()) {
        let g = make_group(&spec).unwrap();
        let chi = symbol_character(&g, &conjugacy_classes(&g));
        prop_assert_eq!(chi.multiplicativity_witness(), None);
        prop_assert!(chi.is_periodic_mod(g.exponent()));
        let n = g.order() as i64;
        for a in 0..n {
            prop_assert_eq!(chi.at(a) != 0, gcd(a, n) == 1);
        }
    }

    #[test]
    fn spec_display_round_trips(spec in small_spec()) {
        let text = spec.to_string();
        prop_assert_eq!(parse_group_spec(&text).unwrap(), spec.clone());
        let spaced = text.replace(':', " : ").replace('*', " * ");
        prop_assert_eq!(parse_group_spec(&spaced).unwrap(), spec);
    }

    #[test]
    fn jacobi_is_multiplicative(a in -10_000i64..10_000, b in -10_000i64..10_000, n in odd_modulus()) {
        let ab = jacobi(a * b, n).unwrap();
        prop_assert_eq!(ab, jacobi(a, n).unwrap() * jacobi(b, n).unwrap());
        prop_assert_eq!(jacobi(a, n).unwrap(), jacobi(a + n as i64, n).unwrap());
    }

    #[test]
    fn jacobi_is_kronecker_of_n_star(a in -1_000_000i64..1_000_000, n in odd_modulus()) {
        prop_assert_eq!(jacobi(a, n).unwrap(), kronecker(n_star(n).unwrap(), a).unwrap());
    }

    #[test]
    fn kronecker_periodic_in_a(d in -100_000i64..100_000, a in 1i64..1_000_000) {
        prop_assume!(d != 0 && is_discriminant(&d.into()));
        let k = kronecker(d, a).unwrap();
        prop_assert_eq!(k, kronecker(d, a + d.abs()).unwrap());
        prop_assert_eq!(k, kronecker_factored(&factorize(d).unwrap(), a).unwrap());
    }

    #[test]
    fn factorization_round_trip(n in any::<i64>()) {
        prop_assume!(n != 0);
        // Every machine integer factors completely.
        let f = factorize(n).unwrap();
        prop_assert_eq!(f.value(), BigInt::from(n));
        for &(p, _) in f.factors() {
            prop_assert!(quadsym::ntheory::is_prime_u64(p));
        }
    }

    #[test]
    fn factored_arithmetic(a in -1_000_000i64..1_000_000, b in -1_000_000i64..1_000_000, m in 1u64..1_000_000) {
        prop_assume!(a != 0 && b != 0);
        let (fa, fb) = (factorize(a).unwrap(), factorize(b).unwrap());
        let prod = fa.mul(&fb);
        prop_assert_eq!(prod.value(), BigInt::from(a) * BigInt::from(b));
        prop_assert_eq!(BigInt::from(prod.rem_u64(m)), (BigInt::from(a) * b).mod_floor(&BigInt::from(m)));
        prop_assert_eq!(fa.pow(3).value(), BigInt::from(a).pow(3));
    }

    #[test]
    fn fundamental_discriminant_round_trip(k in 1i64..1_000_000_000_000, neg in any::<bool>()) {
        let d = if neg { -(4 * k) + 1 } else { 4 * k };
        let f = fundamental_discriminant(&factorize(d).unwrap()).unwrap();
        let c = f.conductor_value();
        prop_assert_eq!(&f.d_k * &c * &c, BigInt::from(d));
        prop_assert!(is_discriminant(&f.d_k));
        let again = fundamental_discriminant(&factorize(f.d_k.clone()).unwrap()).unwrap();
        prop_assert_eq!(again.d_k, f.d_k);
        prop_assert!(again.conductor.is_one());
    }

    #[test]
    fn galois_is_a_ring_map((e, x, y) in ring_pair()) {
        let ring = CyclotomicRing::new(e);
        let to = |v: &[i64]| ring.element(v.iter().map(|&c| BigInt::from(c)).collect()).unwrap();
        let (x, y) = (to(&x), to(&y));
        for &a in ring.units() {
            let a = a as i64;
            let lhs = ring.galois(&ring.mul(&x, &y), a).unwrap();
            let rhs = ring.mul(&ring.galois(&x, a).unwrap(), &ring.galois(&y, a).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
        if !y.is_zero() {
            prop_assert_eq!(ring.exact_div(&ring.mul(&x, &y), &y).unwrap(), x);
        }
    }

    #[test]
    fn sum_of_roots_of_unity(e in 2u32..60) {
        let ring = CyclotomicRing::new(e);
        let total = (0..e as i64).fold(ring.zero(), |acc, k| ring.add(&acc, &ring.zeta_pow(k)));
        prop_assert!(total.is_zero());
        prop_assert_eq!(ring.zeta_pow(e as i64), ring.one());
        prop_assert_eq!(ring.one().as_integer().cloned(), Some(BigInt::one()));
        prop_assert!(ring.zero().as_integer().is_some_and(|v| v.is_zero()));
    }
}
