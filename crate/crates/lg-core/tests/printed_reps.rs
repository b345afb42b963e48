use lg_core::algebra::Gen;
use lg_core::basis::tensor_rep;
use lg_core::reps::*;
use lg_core::ring::{parse_expr, FracBi, Mat};
use serde_json::Value;

fn printed() -> Value {
    serde_json::from_str(include_str!("fixtures/printed.json")).unwrap()
}

fn parse_mat(v: &Value) -> Mat<FracBi> {
    Mat::from_rows(
        v.as_array()
            .unwrap()
            .iter()
            .map(|r| r.as_array().unwrap().iter().map(|e| parse_expr(e.as_str().unwrap()).unwrap()).collect())
            .collect(),
    )
}

fn gen(name: &str) -> Gen {
    match name {
        "Sigma" => Gen::Sigma,
        "K1" => Gen::K(1),
        "K2" => Gen::K(2),
        "K3" => Gen::K(3),
        _ => name.parse::<Gen>().unwrap(),
    }
}

fn check_all(rep: &Rep, table: &Value) {
    let obj = table.as_object().unwrap();
    assert!(!obj.is_empty());
    for (name, m) in obj {
        assert_eq!(*rep.matrix(gen(name)), parse_mat(m), "{name}");
    }
}

#[test]
fn v_alpha_matches_printed() {
    check_all(&v_alpha(), &printed()["pi"]);
}

#[test]
fn dual_matches_printed() {
    check_all(&dual(&v_alpha()), &printed()["pi_dual"]);
}

#[test]
fn tensor_matches_printed() {
    let p = printed();
    let t = tensor_rep();
    check_all(t, &p["tensor"]);
    for (name, d) in p["tensor_diag"].as_object().unwrap() {
        let want: Vec<FracBi> = d.as_array().unwrap().iter().map(|e| parse_expr(e.as_str().unwrap()).unwrap()).collect();
        assert_eq!(*t.matrix(gen(name)), Mat::diag(want), "{name}");
    }
}

#[test]
fn pivots_and_caps_match_printed() {
    let p = printed();
    let v = v_alpha();
    assert_eq!(pivot_g(&v), parse_mat(&p["pivot_g"]));
    assert_eq!(pivot_k(&v), parse_mat(&p["pivot_k"]));
    let c = caps_cups();
    assert_eq!(c.omega_minus.mat, parse_mat(&p["omega_minus"]));
    assert_eq!(c.omega_minus.mat, parse_mat(&p["appendix"]["omega_minus"]));
    assert_eq!(c.mho_minus.mat, parse_mat(&p["appendix"]["mho_minus"]));
}

#[test]
fn rescaled_caps_are_monomial_multiples() {
    let p = printed();
    let c = caps_cups();
    let om = parse_mat(&p["appendix"]["omega_minus_rescaled"]);
    let mo = parse_mat(&p["appendix"]["mho_minus_rescaled"]);
    let qa2 = parse_expr("qa^2").unwrap();
    assert_eq!(c.omega_minus.mat.scale(&qa2), om);
    assert_eq!(mo.scale(&qa2), c.mho_minus.mat);
    assert_eq!(rescaled_caps().0, om);
    assert_eq!(rescaled_caps().1, mo);
}
