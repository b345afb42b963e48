use lg_core::ring::{qqa, Fp, FracBi, Mat, Ring, P61};
use lg_core::rmatrix::*;

fn fr(a: i32, b: i32) -> FracBi {
    FracBi::from_laurent(qqa(a, b))
}

#[test]
fn projectors_decompose_identity() {
    let p = projectors().unwrap();
    let i16 = Mat::<FracBi>::identity(16);
    let mut sum = Mat::zeros(16, 16);
    for (a, x) in p.iter().enumerate() {
        assert_eq!(x.mat.mul(&x.mat), x.mat, "P{a} idempotent");
        assert_eq!(x.mat.rank(), x.dim);
        for (b, y) in p.iter().enumerate() {
            if a != b {
                assert!(x.mat.mul(&y.mat).is_zero(), "P{a} P{b}");
            }
        }
        sum = sum.add(&x.mat);
    }
    assert_eq!(sum, i16);
    assert_eq!(p.iter().map(|x| x.dim).sum::<usize>(), 16);
}

#[test]
fn commutant_is_spanned_by_projectors() {
    let d = commutant_dimension(1);
    assert_eq!(d, projectors().unwrap().len());
    assert_eq!(commutant_dimension(2), d);
    assert!(matches!(commutant(), Err(RMatrixError::CommutantDimension(3))));
}

#[test]
fn selected_braiding() {
    let b = braiding().unwrap();
    assert_eq!(b.coeffs, vec![fr(0, -2), FracBi::one().neg(), fr(2, 2)]);
    assert!(yb_residual(&b.r).is_zero());
    assert_eq!(b.r.mul(&b.rinv), Mat::identity(16));
    let w = closing_weights();
    assert_eq!(kink(&b.r, &w), Some(FracBi::one()));
    assert_eq!(kink(&b.rinv, &w), Some(FracBi::one()));
    assert!(b.laurent().is_some());
    assert_eq!(b.solutions.iter().filter(|s| s.verdict == "selected").count(), 1);
}

#[test]
fn rotated_crossings_satisfy_moves() {
    let b = braiding().unwrap();
    let c = rotated_crossings(b).unwrap();
    let checks = check_crossings(b, &c);
    assert!(checks.len() > 20);
    let bad: Vec<_> = checks.iter().filter(|x| !x.pass).map(|x| x.name.clone()).collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn perturbed_braiding_fails_yang_baxter() {
    let p = projectors().unwrap();
    let r = p[0].mat.scale(&fr(0, -2)).add(&p[1].mat.scale(&fr(1, 0))).add(&p[2].mat.scale(&fr(2, 2)));
    let (s, u) = (Fp::<P61>::new(1234567), Fp::<P61>::new(7654321));
    let r = r.eval_at(s, u).unwrap();
    assert!(!yb_residual(&r).is_zero());
}
