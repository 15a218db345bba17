use nilhecke::cartan::RootVector;
use nilhecke::ratfun::{CharFraction, FactoredRational, LaurentElement, MultiPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

// Positive roots of G2, a pool with enough coincidences to exercise cancellation.
const ROOTS: [[i64; 2]; 6] = [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]];

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn root(k: usize) -> RootVector {
    RootVector(ROOTS[k % ROOTS.len()].to_vec())
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec(((0u32..3, 0u32..3), -4i64..=4), 0..4)
        .prop_map(|terms| MultiPoly::from_terms(2, terms.into_iter().map(|((a, b), c)| (vec![a, b], rat(c)))))
}

fn factored() -> impl Strategy<Value = FactoredRational> {
    (poly(), proptest::collection::vec((0usize..6, 1u32..3), 0..3))
        .prop_map(|(p, den)| FactoredRational::new(p, den.into_iter().map(|(k, m)| (root(k), m))))
}

fn laurent() -> impl Strategy<Value = LaurentElement> {
    proptest::collection::vec(((-2i64..=2, -2i64..=2), -3i64..=3), 0..4)
        .prop_map(|terms| LaurentElement::from_terms(2, terms.into_iter().map(|((a, b), c)| (vec![a, b], rat(c)))))
}

fn charfrac() -> impl Strategy<Value = CharFraction> {
    (laurent(), proptest::collection::vec((0usize..6, 1u32..3, any::<bool>()), 0..3)).prop_map(|(n, den)| {
        CharFraction::new(
            n,
            den.into_iter().map(|(k, m, neg)| (if neg { root(k).neg() } else { root(k) }, m)),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn factored_ring_axioms(a in factored(), b in factored(), c in factored()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn factored_is_normalized(a in factored(), k in 0usize..6) {
        // Rebuilding from the normalized parts changes nothing.
        let rebuilt = FactoredRational::new(a.numerator().clone(), a.denominator().map(|(b, m)| (b.clone(), m)));
        prop_assert_eq!(&rebuilt, &a);
        prop_assert_eq!(a.multiply_by_root(&root(k)).divide_by_root(&root(k)), a.clone());
        prop_assert_eq!(a.divide_by_root(&root(k).neg()), -&a.divide_by_root(&root(k)));
    }

    #[test]
    fn charfrac_ring_axioms(a in charfrac(), b in charfrac(), c in charfrac()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(a.star().star(), a.clone());
    }

    #[test]
    fn lowest_term_is_multiplicative(a in charfrac(), b in charfrac()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let (la, lb) = (a.lowest_term().unwrap(), b.lowest_term().unwrap());
        prop_assert_eq!((&a * &b).lowest_term().unwrap(), &la * &lb);
        prop_assert_eq!(
            (&a * &b).pole_order().unwrap(),
            a.pole_order().unwrap() + b.pole_order().unwrap()
        );
    }

    #[test]
    fn laurent_division_round_trips(f in laurent(), k in 0usize..6) {
        let beta = root(k);
        let product = &f * &LaurentElement::one_minus_exp_neg(&beta);
        prop_assert_eq!(product.exact_divide_one_minus(&beta), Some(f));
    }
}
