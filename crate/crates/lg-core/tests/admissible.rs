use lg_core::knots::lookup;
use lg_core::ring::Ring;
use lg_core::tangle::*;
use num_rational::Rational64;

fn opts() -> EvalOptions {
    EvalOptions::default()
}

#[test]
fn knot_diagram_reproduces_braid_value() {
    for name in ["trefoil", "figure-eight"] {
        let b = lookup(name).unwrap().braid();
        let d = AdmissibleDiagram { disks: 1, strips: 2, boundaries: 1, pieces: 1, program: TangleProgram::braid_closure(&b) };
        assert_eq!(d.genus().unwrap(), 1);
        let r = admissible_eval(&d, &opts()).unwrap();
        assert_eq!(r.lg.value, lg_exact(&b).unwrap(), "{name}");
        assert!(r.span.unwrap() <= Rational64::from_integer(4));
    }
}

#[test]
fn unlink_vanishes() {
    let un = lookup("unknot").unwrap().braid();
    let d = AdmissibleDiagram { disks: 2, strips: 0, boundaries: 2, pieces: 2, program: cable(&un, 2).unwrap() };
    assert_eq!(d.genus().unwrap(), 0);
    let r = admissible_eval(&d, &opts()).unwrap();
    assert!(r.lg.value.is_zero());
    assert_eq!(r.span, None);
}

#[test]
fn trefoil_cable_is_a_boundary_link() {
    let t = lookup("trefoil").unwrap().braid();
    let d = AdmissibleDiagram { disks: 2, strips: 4, boundaries: 2, pieces: 2, program: cable(&t, 2).unwrap() };
    assert_eq!(d.genus().unwrap(), 2);
    let r = admissible_eval(&d, &opts()).unwrap();
    assert!(!r.lg.value.is_zero());
    assert!(r.span.unwrap() <= Rational64::from_integer(8));
    let cb = cable_braid(&t, 2).unwrap();
    assert_eq!(cb.num_components(), 2);
    assert_eq!(cb.writhe(), 2 * t.writhe());
}

#[test]
fn trivial_cable_is_identity() {
    let b = lookup("figure-eight").unwrap().braid();
    assert_eq!(cable_braid(&b, 1).unwrap(), b);
    assert!(cable_braid(&b, 0).is_err());
}

#[test]
fn inconsistent_counts_are_rejected() {
    let p = TangleProgram::braid_closure(&lookup("trefoil").unwrap().braid());
    let d = AdmissibleDiagram { disks: 1, strips: 1, boundaries: 1, pieces: 1, program: p };
    assert!(d.genus().is_err());
    assert!(admissible_eval(&d, &opts()).is_err());
}

#[test]
fn tight_strip_count_is_enforced() {
    let p = TangleProgram::braid_closure(&lookup("trefoil").unwrap().braid());
    let d = AdmissibleDiagram { disks: 1, strips: 0, boundaries: 1, pieces: 1, program: p };
    assert!(matches!(admissible_eval(&d, &opts()), Err(TangleError::BoundViolated(_))));
}
