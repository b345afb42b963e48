use lg_core::algebra::*;
use lg_core::reps::*;

#[test]
fn v_alpha_relations() {
    let v = v_alpha();
    let r = check_relations(&v).unwrap();
    for f in r.failures() {
        eprintln!("{} {:?}", f.name, f.first_failure);
    }
    assert!(r.all_pass());
}

#[test]
fn dual_and_tensor_relations() {
    let v = v_alpha();
    let d = dual(&v);
    assert!(check_relations(&d).unwrap().all_pass());
    let t = tensor(&v, &d);
    let r = check_relations(&t).unwrap();
    for f in r.failures() {
        eprintln!("{} {:?}", f.name, f.first_failure);
    }
    assert!(r.all_pass());
}

use lg_core::ring::{qbracket, BracketArg, FracBi, Mat, Ring};

fn antipode_word(rep: &Rep, w: &[Gen]) -> Mat<FracBi> {
    let mut m = Mat::identity(rep.dim());
    for g in w.iter().rev() {
        m = m.mul(&antipode_sigma(*g).eval(rep));
    }
    m
}

fn swap(n: usize) -> Mat<FracBi> {
    Mat::from_fn(n * n, n * n, |i, j| if j == (i % n) * n + i / n { FracBi::one() } else { FracBi::zero() })
}

#[test]
fn antipode_is_anti_coalgebra_map() {
    let v = v_alpha();
    let vv = tensor(&v, &v);
    let p = swap(4);
    for g in Gen::all() {
        let mut lhs = Mat::zeros(16, 16);
        for (c, l, r) in &coproduct_sigma(g).terms {
            lhs = lhs.add(&antipode_word(&v, l).kron(&antipode_word(&v, r)).scale(c));
        }
        let rhs = p.mul(&antipode_sigma(g).eval(&vv)).mul(&p);
        assert_eq!(lhs, rhs, "{g}");
    }
}

#[test]
fn counit_axiom() {
    let v = v_alpha();
    for g in Gen::all() {
        let mut left = Mat::zeros(4, 4);
        let mut right = Mat::zeros(4, 4);
        for (c, l, r) in &coproduct_sigma(g).terms {
            let el: FracBi = l.iter().map(|x| counit(*x)).fold(FracBi::one(), |a, b| a.mul(&b));
            let er: FracBi = r.iter().map(|x| counit(*x)).fold(FracBi::one(), |a, b| a.mul(&b));
            left = left.add(&v.word(r).scale(&c.mul(&el)));
            right = right.add(&v.word(l).scale(&c.mul(&er)));
        }
        assert_eq!(&left, v.matrix(g), "(eps x id) {g}");
        assert_eq!(&right, v.matrix(g), "(id x eps) {g}");
    }
}

#[test]
fn derived_coproducts_match_products() {
    let v = v_alpha();
    let t = tensor(&v, &v);
    let q = FracBi::from_laurent(lg_core::ring::qqa(1, 0));
    let qi = FracBi::from_laurent(lg_core::ring::qqa(-1, 0));
    let (e21, e12, e32, e23) = (t.matrix(Gen::E21), t.matrix(Gen::E12), t.matrix(Gen::E32), t.matrix(Gen::E23));
    assert_eq!(t.matrix(Gen::E31), &e21.mul(e32).sub(&e32.mul(e21).scale(&qi)));
    assert_eq!(t.matrix(Gen::E13), &e23.mul(e12).sub(&e12.mul(e23).scale(&q)));
}

#[test]
fn counit_rep_passes_and_is_unit() {
    let e = counit_rep();
    assert!(check_relations(&e).unwrap().all_pass());
    let v = v_alpha();
    let ev = tensor(&e, &v);
    for g in Gen::all() {
        assert_eq!(ev.matrix(g), v.matrix(g), "{g}");
    }
}

#[test]
fn perturbed_e23_breaks_interchange() {
    let mut v = v_alpha();
    let mut m = v.matrix(Gen::E23).clone();
    m.set(1, 0, qbracket(BracketArg::Alpha(0)).add(&FracBi::one()));
    v.set_matrix(Gen::E23, m);
    let r = check_relations(&v).unwrap();
    assert!(r.failures().any(|f| f.name == "E32 E23 + E23 E32"));
}

#[test]
fn dimension_mismatch_is_an_error() {
    let mut v = v_alpha();
    v.set_matrix(Gen::E21, Mat::zeros(3, 3));
    assert!(check_relations(&v).is_err());
}

#[test]
fn sigma_matches_grading_everywhere() {
    let v = v_alpha();
    let d = dual(&v);
    assert!(v.sigma_matches_grading());
    assert!(d.sigma_matches_grading());
    assert!(tensor(&v, &d).sigma_matches_grading());
}
