use loopalg::laurent::{laurent_arith, ArithOp, LaurentPoly, TwistedElement};
use loopalg::scalar::{q, Scalar, Q};
use loopalg::Error;
use proptest::prelude::*;

fn exact() -> impl Strategy<Value = LaurentPoly> {
    (-4i64..4, prop::collection::vec(-5i64..=5, 0..6))
        .prop_map(|(lo, cs)| LaurentPoly::from_terms(cs.into_iter().enumerate().map(|(i, c)| (lo + i as i64, q(c)))))
}

/// A truncated value with a nonzero leading coefficient at `lo`.
fn truncated() -> impl Strategy<Value = LaurentPoly> {
    (-4i64..4, 1i64..=5, prop::collection::vec(-5i64..=5, 0..5), 0i64..4).prop_map(|(lo, lead, cs, extra)| {
        let hi = lo + cs.len() as i64 + extra;
        let terms =
            std::iter::once((lo, q(lead))).chain(cs.into_iter().enumerate().map(|(i, c)| (lo + 1 + i as i64, q(c))));
        LaurentPoly::truncated(terms, lo, hi).unwrap()
    })
}

fn known_coeffs(p: &LaurentPoly) -> Vec<(i64, Q)> {
    let (lo, hi) = p.window();
    (lo..=hi.unwrap()).map(|k| (k, p.coeff(k).unwrap())).collect()
}

/// Exact polynomial agreeing with `p` on its window, followed by `tail`.
fn complete(p: &LaurentPoly, tail: &[i64]) -> LaurentPoly {
    let hi = p.window().1.unwrap();
    LaurentPoly::from_terms(
        known_coeffs(p).into_iter().chain(tail.iter().enumerate().map(|(i, &c)| (hi + 1 + i as i64, q(c)))),
    )
}

proptest! {
    #[test]
    fn ring_axioms(f in exact(), g in exact(), h in exact()) {
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        prop_assert!(f.sub(&f).is_zero());
        prop_assert_eq!(f.mul(&LaurentPoly::one()), f.clone());
    }

    #[test]
    fn truncated_products_agree_with_every_completion(
        f in truncated(),
        g in truncated(),
        tf in prop::collection::vec(-5i64..=5, 4),
        tg in prop::collection::vec(-5i64..=5, 4),
    ) {
        let prod = laurent_arith(&f, &g, ArithOp::Mul).unwrap();
        let exact = complete(&f, &tf).mul(&complete(&g, &tg));
        for (k, c) in known_coeffs(&prod) {
            prop_assert_eq!(exact.coeff(k).unwrap(), c);
        }
    }

    #[test]
    fn product_window_is_maximal(f in truncated(), g in truncated()) {
        // the first unknown coefficient of either factor reaches the product one
        // step above its window, so no larger window is determined
        let prod = f.mul(&g);
        let hi = prod.window().1.unwrap();
        let base = complete(&f, &[0]).mul(&complete(&g, &[0]));
        let bumped_f = complete(&f, &[1]).mul(&complete(&g, &[0]));
        let bumped_g = complete(&f, &[0]).mul(&complete(&g, &[1]));
        let moved = base.coeff(hi + 1).unwrap() != bumped_f.coeff(hi + 1).unwrap()
            || base.coeff(hi + 1).unwrap() != bumped_g.coeff(hi + 1).unwrap();
        prop_assert!(moved);
    }

    #[test]
    fn truncated_sums_agree_with_every_completion(
        f in truncated(),
        g in truncated(),
        tf in prop::collection::vec(-5i64..=5, 4),
        tg in prop::collection::vec(-5i64..=5, 4),
    ) {
        let sum = laurent_arith(&f, &g, ArithOp::Add).unwrap();
        let exact = complete(&f, &tf).add(&complete(&g, &tg));
        for (k, c) in known_coeffs(&sum) {
            prop_assert_eq!(exact.coeff(k).unwrap(), c);
        }
        prop_assert_eq!(sum.window().1, Some(f.window().1.unwrap().min(g.window().1.unwrap())));
    }

    #[test]
    fn exact_forms_have_zero_residue(f in exact()) {
        // d f = f' dt = (t f') dt/t
        prop_assert!(f.log_derivative().residue().unwrap().is_zero());
        prop_assert!(f.derivative().coeff(-1).unwrap().is_zero());
    }

    #[test]
    fn pullback_is_a_ring_homomorphism(f in exact(), g in exact(), h in 1u32..5) {
        prop_assert_eq!(f.mul(&g).ramified_pullback(h), f.ramified_pullback(h).mul(&g.ramified_pullback(h)));
        prop_assert_eq!(f.add(&g).ramified_pullback(h), f.ramified_pullback(h).add(&g.ramified_pullback(h)));
        prop_assert_eq!(LaurentPoly::one().ramified_pullback(h), LaurentPoly::one());
    }

    #[test]
    fn text_forms_round_trip(f in exact(), p in truncated()) {
        prop_assert_eq!(LaurentPoly::parse(&f.to_string()).unwrap(), f.clone());
        prop_assert_eq!(LaurentPoly::parse(&p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(LaurentPoly::from_pairs(&f.to_pairs()).unwrap(), f);
    }
}

#[test]
fn product_window_of_the_worked_example() {
    // [-2, 2] times [0, 3]: the t^2 coefficient pairs the t^-2 term of the
    // first factor with the unknown t^4 term of the second
    let f = LaurentPoly::truncated([(-2, q(1)), (2, q(1))], -2, 2).unwrap();
    let g = LaurentPoly::truncated([(0, q(1)), (3, q(1))], 0, 3).unwrap();
    assert_eq!(f.mul(&g).window(), (-2, Some(1)));
    let a = complete(&f, &[]).mul(&complete(&g, &[0]));
    let b = complete(&f, &[]).mul(&complete(&g, &[1]));
    assert_eq!(a.coeff(1).unwrap(), b.coeff(1).unwrap());
    assert_ne!(a.coeff(2).unwrap(), b.coeff(2).unwrap());
}

#[test]
fn reads_above_the_window_are_errors() {
    let f = LaurentPoly::truncated([(0, q(1))], 0, 2).unwrap();
    assert!(matches!(f.coeff(3), Err(Error::WindowUnderflow { .. })));
    assert!(f.invert_variable().is_err());
}

#[test]
fn listed_values() {
    let t = LaurentPoly::t_pow;
    assert_eq!(t(-1).add(&t(0)).mul(&t(1)), t(0).add(&t(1)));
    assert_eq!(t(3).sub(&t(5)).valuation().unwrap(), Some(3));
    assert_eq!(LaurentPoly::one().residue().unwrap(), q(1));
    assert_eq!(t(1).residue().unwrap(), q(0));
    let f = LaurentPoly::from_terms([(-2, q(3)), (0, q(5))]);
    assert_eq!(f.residue().unwrap(), q(5));
    assert_eq!(t(-1).ramified_pullback(2), t(-2));
    assert_eq!(t(0).add(&t(1)).ramified_pullback(3), t(0).add(&t(3)));
    let g = LaurentPoly::from_terms([(1, q(2)), (2, q(-1))]);
    let xi = TwistedElement::new(vec![g.clone()], 1);
    assert_eq!(xi.ramified_pullback(2), TwistedElement::new(vec![g.ramified_pullback(2).scale(&q(2))], 1));
    assert_ne!(TwistedElement::new(vec![g.clone()], 1), TwistedElement::new(vec![g], 2));
}
