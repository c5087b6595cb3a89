use abalg::division::{divide_linear, invert};
use abalg::json::ElementJson;
use abalg::oracle::{act, act_composed, PolySeries};
use abalg::parser::parse_element;
use abalg::{AlgebraElement, Coeff, Ordering};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

const N: u32 = 6;

fn coeff() -> impl Strategy<Value = Coeff> {
    (-6i64..=6, 1i64..=4, -2i64..=2).prop_map(|(n, d, im)| {
        Coeff::new(BigRational::new(BigInt::from(n), BigInt::from(d)), BigRational::from_integer(BigInt::from(im)))
    })
}

fn element() -> impl Strategy<Value = AlgebraElement> {
    let term = (0..=N).prop_flat_map(|d| (0..=d).prop_map(move |p| (p, d - p))).prop_flat_map(|(p, q)| coeff().prop_map(move |c| (p, q, c)));
    (prop::collection::vec(term, 0..8), any::<bool>()).prop_map(|(terms, left)| {
        AlgebraElement::from_terms(N, if left { Ordering::Left } else { Ordering::Right }, terms)
    })
}

fn same(x: &AlgebraElement, y: &AlgebraElement) -> bool {
    x.same_value(y).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(x in element(), y in element(), z in element()) {
        prop_assert!(same(&(&(&x * &y) * &z), &(&x * &(&y * &z))));
    }

    #[test]
    fn orderings_round_trip(x in element()) {
        prop_assert_eq!(x.to_left().to_right().to_left(), x.to_left());
        prop_assert_eq!(x.to_right().to_left().to_right(), x.to_right());
    }

    #[test]
    fn action_is_multiplicative(x in element(), y in element(), r in 0u32..5) {
        let f = PolySeries::monomial(r, Coeff::from(1), N + r);
        prop_assert_eq!(act(&(&x * &y), &f), act_composed(&x, &act_composed(&y, &f)));
    }

    #[test]
    fn units_invert(x in element(), c in coeff()) {
        prop_assume!(!c.is_zero());
        let u = &x.to_left() + &AlgebraElement::scalar(&c - &x.constant_term(), N);
        let v = invert(&u).unwrap();
        prop_assert!(same(&(&u * &v), &AlgebraElement::one(N)));
        prop_assert!(same(&(&v * &u), &AlgebraElement::one(N)));
    }

    #[test]
    fn linear_division_identity(x in element(), lambda in coeff()) {
        let (q, r) = divide_linear(&x, &lambda);
        let p = &AlgebraElement::a(N) - &AlgebraElement::b(N).scale(&lambda);
        prop_assert!(same(&(&(&q.with_order(N) * &p) + r.as_element()), &x));
        prop_assert!(r.as_element().a_degree().is_none_or(|d| d == 0));
    }

    #[test]
    fn tau_is_a_homomorphism(x in element(), y in element(), t in coeff()) {
        prop_assert!(same(&(&x * &y).tau(&t), &(&x.tau(&t) * &y.tau(&t))));
        prop_assert!(same(&x.tau(&t).tau(&-&t), &x));
    }

    #[test]
    fn anti_automorphism_reverses(x in element(), y in element()) {
        let lhs = (&x * &y).anti_f(Ordering::Left);
        let rhs = &y.anti_f(Ordering::Left) * &x.anti_f(Ordering::Left);
        prop_assert!(same(&lhs, &rhs));
    }

    #[test]
    fn text_and_json_round_trip(x in element()) {
        let back = parse_element(&x.to_string(), N).unwrap();
        prop_assert!(same(&back, &x));
        let json = serde_json::to_string(&ElementJson::from_element(&x)).unwrap();
        let parsed: ElementJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(parsed.to_element().unwrap(), x);
    }
}
