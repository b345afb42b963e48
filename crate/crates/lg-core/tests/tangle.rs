use lg_core::knots::lookup;
use lg_core::ring::{parse_laurent, to_t0t1, LaurentBi, Mat, Ring, T0T1Poly};
use lg_core::rmatrix::Color::{self, Down, Up};
use lg_core::tangle::*;

fn exact() -> EvalOptions {
    EvalOptions { mode: Mode::Exact, ..Default::default() }
}

fn trefoil_value() -> LaurentBi {
    parse_laurent("qa^-4 + qa^-2*(-q^2 - 1) + (2*q^2 + 1) + qa^2*(-q^4 - q^2) + qa^4*q^4").unwrap()
}

fn figure_eight_value() -> LaurentBi {
    parse_laurent("qa^-4*q^-2 + qa^-2*(-3 - 3*q^-2) + (2*q^2 + 7 + 2*q^-2) + qa^2*(-3*q^2 - 3) + qa^4*q^2").unwrap()
}

#[test]
fn braid_values() {
    assert_eq!(lg_from_braid(&lookup("unknot").unwrap().braid()).unwrap().value, LaurentBi::one());
    assert_eq!(lg_from_braid(&lookup("trefoil").unwrap().braid()).unwrap().value, trefoil_value());
    assert_eq!(lg_from_braid(&lookup("figure-eight").unwrap().braid()).unwrap().value, figure_eight_value());
}

#[test]
fn mirror_inverts_q() {
    let b = lookup("trefoil").unwrap().braid();
    let m = lg_from_braid(&b.mirror()).unwrap().value;
    let v = trefoil_value();
    assert_ne!(m, v);
    let (m, v) = (to_t0t1(&m).unwrap(), to_t0t1(&v).unwrap());
    let flipped = T0T1Poly::from_terms(v.terms().map(|(&(a, b), c)| ((-a, -b), c.clone())));
    assert_eq!(m, flipped);
}

#[test]
fn markov_stabilization() {
    for (n, w) in [(2, vec![1, 1, 1]), (3, vec![1, -2, 1, -2])] {
        let b = BraidWord::new(n, w.clone()).unwrap();
        let want = lg_exact(&b).unwrap();
        for s in [1, -1] {
            let mut w2 = w.clone();
            w2.push(s * n as i32);
            assert_eq!(lg_exact(&BraidWord::new(n + 1, w2).unwrap()).unwrap(), want);
        }
    }
}

#[test]
fn interpolation_matches_exact() {
    let b = lookup("figure-eight").unwrap().braid();
    assert_eq!(lg_interp(&b).unwrap(), lg_exact(&b).unwrap());
    let p = TangleProgram::braid_closure(&b);
    let opts = EvalOptions { mode: Mode::Interp, ..Default::default() };
    assert_eq!(lg_from_program(&p, &opts).unwrap().value, figure_eight_value());
}

#[test]
fn program_closure_matches_braid() {
    for name in ["trefoil", "figure-eight"] {
        let b = lookup(name).unwrap().braid();
        let p = TangleProgram::braid_closure(&b);
        assert_eq!(lg_from_program(&p, &exact()).unwrap().value, lg_exact(&b).unwrap(), "{name}");
    }
}

#[test]
fn sparse_and_dense_agree() {
    let mut p = TangleProgram::new(vec![Down, Up]);
    p.push(Slice::Cross { pos: 0, sign: 1 })
        .push(Slice::Cup { pos: 1, colors: [Down, Up] })
        .push(Slice::Cross { pos: 0, sign: -1 })
        .push(Slice::Cap { pos: 2 })
        .push(Slice::Cross { pos: 0, sign: -1 });
    let ops = laurent_ops().unwrap();
    assert_eq!(eval_program(&p, ops).unwrap(), eval_dense(&p, ops).unwrap());
}

#[test]
fn reidemeister_two_is_identity() {
    let ops = laurent_ops().unwrap();
    for x in [Down, Up] {
        for y in [Down, Up] {
            let mut p = TangleProgram::new(vec![x, y]);
            p.push(Slice::Cross { pos: 0, sign: 1 }).push(Slice::Cross { pos: 0, sign: -1 });
            assert_eq!(eval_program(&p, ops).unwrap(), Mat::identity(16), "{x:?}{y:?}");
        }
    }
}

#[test]
fn zigzags_are_identity() {
    let ops = laurent_ops().unwrap();
    for (x, y) in [(Down, Up), (Up, Down)] {
        let mut p = TangleProgram::new(vec![x]);
        p.push(Slice::Cup { pos: 1, colors: [y, x] }).push(Slice::Cap { pos: 0 });
        assert_eq!(eval_program(&p, ops).unwrap(), Mat::identity(4), "{x:?}");
    }
}

#[test]
fn closed_circle_vanishes() {
    let ops = laurent_ops().unwrap();
    for c in [[Down, Up], [Up, Down]] {
        let mut p = TangleProgram::new(vec![]);
        p.push(Slice::Cup { pos: 0, colors: c }).push(Slice::Cap { pos: 0 });
        assert!(eval_program(&p, ops).unwrap().get(0, 0).is_zero());
    }
}

#[test]
fn composition_is_functorial() {
    let ops = laurent_ops().unwrap();
    let mut a = TangleProgram::new(vec![Down, Down, Up]);
    a.push(Slice::Cross { pos: 0, sign: 1 }).push(Slice::Cross { pos: 1, sign: -1 });
    let mut b = TangleProgram::new(a.target().unwrap());
    b.push(Slice::Cap { pos: 1 }).push(Slice::Cup { pos: 0, colors: [Up, Down] });
    let ab = a.then(&b).unwrap();
    let m = eval_program(&b, ops).unwrap().mul(&eval_program(&a, ops).unwrap());
    assert_eq!(eval_program(&ab, ops).unwrap(), m);
    assert!(b.then(&a).is_err());
}

#[test]
fn malformed_programs_are_rejected() {
    let bad: [(Vec<Color>, Slice); 4] = [
        (vec![Down, Down], Slice::Cap { pos: 0 }),
        (vec![Down], Slice::Cross { pos: 0, sign: 1 }),
        (vec![Down, Up], Slice::Cross { pos: 0, sign: 2 }),
        (vec![Down], Slice::Cup { pos: 0, colors: [Up, Up] }),
    ];
    for (src, s) in bad {
        let mut p = TangleProgram::new(src);
        p.push(s);
        assert!(matches!(p.words(), Err(TangleError::NonComposable(_))));
    }
    assert!(matches!(TangleProgram::from_json("{\"source\": 3}"), Err(TangleError::Parse(_))));
    let two = TangleProgram::new(vec![Down, Up]);
    assert!(lg_from_program(&two, &exact()).is_err());
}

#[test]
fn program_json_roundtrip() {
    let p = TangleProgram::braid_closure(&lookup("figure-eight").unwrap().braid());
    let s = serde_json::to_string(&p).unwrap();
    assert!(s.contains("\"op\":\"cup\""));
    assert_eq!(TangleProgram::from_json(&s).unwrap(), p);
}

#[test]
fn strand_limit() {
    let b = lookup("conway").unwrap().braid();
    let opts = EvalOptions { max_strands: 3, ..Default::default() };
    assert!(matches!(lg_from_braid_with(&b, &opts), Err(TangleError::TooManyStrands(4, 3))));
}

#[test]
fn bad_braids() {
    assert!(BraidWord::new(2, vec![2]).is_err());
    assert!(BraidWord::new(2, vec![0]).is_err());
    assert!(matches!(BraidWord::from_json("[1, 2"), Err(TangleError::Parse(_))));
}
