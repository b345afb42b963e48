use lg_core::ring::*;

#[test]
fn parse_render_roundtrip() {
    for src in [
        "q^-1*qa^2 - 3 + t0*t1",
        "[a]",
        "[a+1]^-1 * q^(3/2)",
        "(qa^(1/2)*q^(1/2))^2",
        "-q^-8 - q^-6 + 2*q^-4",
    ] {
        let v = parse_expr(src).unwrap();
        if let Ok(l) = v.to_laurent() {
            for st in [Style::Qqa, Style::Su, Style::T0T1] {
                let r = render(&l, st);
                let back = parse_laurent(&r).unwrap();
                assert_eq!(back, l, "{src} -> {r}");
            }
        }
    }
}

#[test]
fn bracket_identity() {
    let a = parse_expr("[a+1]").unwrap();
    let b = parse_expr("q^-1*[a] + qa").unwrap();
    let c = parse_expr("q*[a] + qa^-1").unwrap();
    assert_eq!(a, b);
    assert_eq!(a, c);
    assert!(a.to_laurent().is_ok());
}
