use lg_core::knots::lookup;
use lg_core::ring::{qqa, LaurentBi, Ring};
use lg_core::tangle::*;
use num_rational::Rational64;

#[test]
fn genus_one_surfaces_match_braids() {
    for (name, b) in [("trefoil", BottomTangle::trefoil()), ("figure-eight", BottomTangle::figure_eight())] {
        let r = surface_pipeline_checked(&b, &lookup(name).unwrap().braid()).unwrap();
        assert!(r.g.alpha_free(), "{name}");
        assert_eq!(r.rescale, qqa(0, 4));
        assert_eq!(r.dz, Some(Rational64::from_integer(8)), "{name}");
        assert_eq!(r.dt, Some(Rational64::from_integer(0)), "{name}");
        assert!(r.lg.value.span_q2alpha().unwrap() <= Rational64::from_integer(4));
    }
}

#[test]
fn untwisted_bands_bound_the_unknot() {
    for t in [0, 1] {
        let r = surface_pipeline(&BottomTangle::genus_one(t, 0, 1)).unwrap();
        assert_eq!(r.lg.value, LaurentBi::one(), "twist {t}");
    }
}

#[test]
fn empty_surface_is_unknot() {
    let r = surface_pipeline(&BottomTangle { genus: 0, ops: vec![] }).unwrap();
    assert_eq!(r.lg.value, LaurentBi::one());
    assert_eq!(r.g.coeffs.len(), 1);
}

#[test]
fn doubling_preserves_counts() {
    let b = BottomTangle::trefoil();
    let p = b.double().unwrap();
    assert!(p.source.is_empty());
    assert_eq!(p.target().unwrap().len(), 8);
    let crosses = p.slices.iter().filter(|s| matches!(s, Slice::Cross { .. })).count();
    assert_eq!(crosses, 4 + 2 + 2);
}

#[test]
fn endpoint_order_is_checked() {
    use BandOp::*;
    let swapped = BottomTangle { genus: 1, ops: vec![Arc { pos: 0 }, Arc { pos: 2 }] };
    assert!(matches!(swapped.endpoints(), Err(TangleError::NonComposable(_))));
    let short = BottomTangle { genus: 1, ops: vec![Arc { pos: 0 }] };
    assert!(short.endpoints().is_err());
    let far = BottomTangle { genus: 1, ops: vec![Arc { pos: 3 }] };
    assert!(far.endpoints().is_err());
    assert!(BottomTangle::from_json(r#"{"genus": 1, "ops": [{"op": "arc", "pos": 0}]}"#).is_err());
    let j = serde_json::to_string(&BottomTangle::trefoil()).unwrap();
    assert_eq!(BottomTangle::from_json(&j).unwrap(), BottomTangle::trefoil());
}

#[test]
fn surface_check_detects_wrong_reference() {
    let r = surface_pipeline_checked(&BottomTangle::trefoil(), &lookup("figure-eight").unwrap().braid());
    assert!(matches!(r, Err(TangleError::BoundViolated(_))));
}
