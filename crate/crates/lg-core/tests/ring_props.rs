use lg_core::ring::*;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = T0T1Poly> {
    prop::collection::vec(((-3i32..=3, -3i32..=3), -5i64..=5), 0..6).prop_map(|v| T0T1Poly::from_int_terms(&v))
}

fn nonzero() -> impl Strategy<Value = T0T1Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        let (x, y, z) = (a.embed(), b.embed(), c.embed());
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert_eq!(x.mul(&LaurentBi::one()), x.clone());
        prop_assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn embedding_is_a_homomorphism(a in poly(), b in poly()) {
        prop_assert_eq!(a.mul(&b).embed(), a.embed().mul(&b.embed()));
    }

    #[test]
    fn embedding_round_trips(a in poly()) {
        prop_assert_eq!(to_t0t1(&a.embed()).unwrap(), a);
    }

    #[test]
    fn degrees_add(a in nonzero(), b in nonzero()) {
        let (x, y) = (a.embed(), b.embed());
        let xy = x.mul(&y);
        prop_assert_eq!(xy.deg_z(), Some(x.deg_z().unwrap() + y.deg_z().unwrap()));
        prop_assert_eq!(xy.deg_t(), Some(x.deg_t().unwrap() + y.deg_t().unwrap()));
    }

    #[test]
    fn span_is_shift_invariant(a in nonzero(), i in -4i32..=4, j in -4i32..=4) {
        let m = T0T1Poly::from_int_terms(&[((i, j), 1)]);
        prop_assert_eq!(a.mul(&m).span().unwrap(), a.span().unwrap());
        prop_assert_eq!(a.mul(&m).embed().span_q2alpha().unwrap(), a.embed().span_q2alpha().unwrap());
    }

    #[test]
    fn render_parses_back(a in poly()) {
        let x = a.embed();
        for st in [Style::Qqa, Style::Su, Style::T0T1] {
            let r = render(&x, st);
            prop_assert_eq!(parse_laurent(&r).unwrap(), x.clone(), "{}", r);
        }
    }

    #[test]
    fn fraction_field_inverse(a in nonzero()) {
        let x = FracBi::from_laurent(a.embed());
        prop_assert_eq!(x.mul(&x.inv().unwrap()), FracBi::one());
    }

    #[test]
    fn modular_evaluation_is_multiplicative(a in poly(), b in poly(), s in 2u64..1000, u in 2u64..1000) {
        let (s, u) = (Fp::<P61>::new(s), Fp::<P61>::new(u));
        let (x, y) = (a.embed(), b.embed());
        let lhs = x.mul(&y).eval(s, u);
        let rhs = x.eval(s, u).zip(y.eval(s, u)).map(|(p, q)| p.mul(&q));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn zero_has_no_span() {
    assert!(T0T1Poly::default().span().is_err());
    assert!(LaurentBi::zero().span_q2alpha().is_err());
}
