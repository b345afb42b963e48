use lg_core::algebra::Gen;
use lg_core::basis::*;
use lg_core::ring::{parse_expr, qbracket, qqa, su, BracketArg, Field, FracBi, Mat, Ring};
use num_rational::Rational64;
use serde_json::Value;
use std::sync::OnceLock;

fn printed() -> &'static Value {
    static P: OnceLock<Value> = OnceLock::new();
    P.get_or_init(|| serde_json::from_str(include_str!("fixtures/printed.json")).unwrap())
}

fn parse_mat(v: &Value) -> Mat<FracBi> {
    let rows: Vec<Vec<FracBi>> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            r.as_array()
                .unwrap()
                .iter()
                .map(|e| match e.as_str() {
                    None => FracBi::zero(),
                    Some(s) => parse_expr(s).unwrap_or_else(|err| panic!("{s}: {err}")),
                })
                .collect()
        })
        .collect();
    Mat::from_rows(rows)
}

fn parse_deg(v: &Value) -> Vec<Vec<Option<Rational64>>> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|r| {
            r.as_array()
                .unwrap()
                .iter()
                .map(|e| e.as_str().map(|s| s.parse::<Rational64>().unwrap()))
                .collect()
        })
        .collect()
}

fn diffs(a: &Mat<FracBi>, b: &Mat<FracBi>) -> Vec<(usize, usize)> {
    a.entries().filter(|(i, j, x)| *x != b.get(*i, *j)).map(|(i, j, _)| (i, j)).collect()
}

fn fr(a: i32, b: i32) -> FracBi {
    FracBi::from_laurent(qqa(a, b))
}

#[test]
fn v_basis_examples() {
    let v = build_v_basis();
    let mut want = vec![FracBi::zero(); 16];
    want[pair_index(1, 2)] = FracBi::from_laurent(su(0, 1)).neg();
    assert_eq!(v[1], want);
    let c = fr(0, 2).mul(&qbracket(BracketArg::Alpha(0))).mul(&qbracket(BracketArg::Alpha(1)));
    for (i, x) in v[15].iter().enumerate() {
        let diag = i % 5 == 0;
        assert_eq!(*x, if diag { c.clone() } else { FracBi::zero() }, "entry {i}");
    }
    assert_eq!(matrix_a().mat.rank(), 16);
}

#[test]
fn a_matches_printed() {
    let a = matrix_a();
    let p = parse_mat(&printed()["a"]);
    assert_eq!(diffs(&a.displayed(), &p), vec![]);
    assert!(a.is_triangular());
    assert_eq!(*a.entry((1, 1), 8), fr(0, 1).mul(&qbracket(BracketArg::Alpha(0))));
    let want = fr(1, 0).mul(&FracBi::from_laurent(su(1, 0))).mul(&fr(0, 1)).mul(&qbracket(BracketArg::Alpha(0)));
    assert_eq!(*a.entry((3, 2), 7), want);
}

// The printed Ã differs from A F^{-1} in exactly two entries, and the printed
// values there break the module-map property.
#[test]
fn atilde_matches_printed_up_to_two_entries() {
    let at = matrix_atilde();
    let p = parse_mat(&printed()["a_tilde"]);
    let d = diffs(&at.displayed(), &p);
    let labels: Vec<((usize, usize), usize)> = d.iter().map(|&(i, j)| (ROW_ORDER[i], COLUMN_ORDER[j])).collect();
    assert_eq!(labels, vec![((2, 3), 7), ((3, 2), 10)]);
    assert_eq!(*at.entry((1, 1), 1), fr(0, -1));
    assert_eq!(*at.entry((2, 2), 8), fr(0, -2).mul(&qbracket(BracketArg::Alpha(0)).inv().unwrap()).neg());

    let pi = tensor_rep();
    let wd = theta_dual_rep().unwrap();
    let intertwines = |m: &Mat<FracBi>| wd.generators().all(|(g, x)| m.mul(x) == pi.matrix(*g).mul(m));
    assert!(intertwines(&at.mat));
    for &(i, j) in &d {
        let (b, c) = ROW_ORDER[i];
        let k = COLUMN_ORDER[j];
        let mut m = at.mat.clone();
        m.set(pair_index(b, c), k - 1, p.get(i, j).clone());
        assert!(!intertwines(&m), "printed entry ({b},{c}) v{k} is a module map");
    }
}

#[test]
fn a_tilde_is_a_f_inverse() {
    let a = &matrix_a().mat;
    let f = &matrix_f().mat;
    assert_eq!(matrix_atilde().mat.mul(f), *a);
}

#[test]
fn theta_is_alpha_free_representation() {
    let w = theta_rep().unwrap();
    let pi = tensor_rep();
    let a = &matrix_a().mat;
    for (g, x) in w.generators() {
        assert_eq!(a.mul(x), pi.matrix(*g).mul(a), "{g}");
        assert!(x.entries().all(|(_, _, e)| e.has_trivial_u()));
    }
    let col = |m: &Mat<FracBi>, k: usize| m.col_vec(k - 1);
    let unit = |k: usize, c: FracBi| {
        let mut v = vec![FracBi::zero(); 16];
        v[k - 1] = c;
        v
    };
    assert_eq!(col(w.matrix(Gen::E21), 2), unit(3, FracBi::one()));
    assert_eq!(col(w.matrix(Gen::E12), 5), unit(4, fr(-1, 0).neg()));
    assert!(w.matrix(Gen::Sigma).is_diagonal());
    assert!(w.sigma_matches_grading());
}

#[test]
fn theta_dual_is_alpha_free() {
    let w = theta_dual_rep().unwrap();
    assert!(w.generators().all(|(_, x)| x.entries().all(|(_, _, e)| e.has_trivial_u())));
}

#[test]
fn reductions_match_printed() {
    let r = reductions();
    for (key, m) in [("a_z", &r.a_z), ("a_t", &r.a_t), ("a_tilde_z", &r.atilde_z), ("a_tilde_t", &r.atilde_t)] {
        let want = parse_deg(&printed()[key]);
        let got = m.displayed();
        let bad: Vec<_> = (0..16)
            .flat_map(|i| (0..16).map(move |j| (i, j)))
            .filter(|&(i, j)| got[i][j] != want[i][j])
            .map(|(i, j)| (ROW_ORDER[i], COLUMN_ORDER[j], got[i][j], want[i][j]))
            .collect();
        assert!(bad.is_empty(), "{key}: {bad:?}");
    }
    let h = |n, d| Some(Rational64::new(n, d));
    assert_eq!(r.a_z.entry((1, 1), 8), h(2, 1));
    assert_eq!(r.atilde_z.entry((2, 2), 8), h(-2, 1));
    assert_eq!(r.a_t.entry((2, 1), 5), h(1, 2));
}

#[test]
fn weight_graphs_are_coherent() {
    let r = reductions();
    let rep = weight_coherence(&r.a_t, &r.atilde_t);
    assert!(rep.all_pass(), "{rep:?}");
    assert_eq!(max_box_weight(&r.a_z), Some(Rational64::from_integer(4)));
    assert_eq!(max_box_weight(&r.atilde_z), Some(Rational64::from_integer(0)));
}
