//! Regression suites against the printed matrices and the structural identities.

use crate::algebra::{check_relations, Gen};
use crate::basis::{
    matrix_a, matrix_atilde, max_box_weight, reductions, tensor_rep, theta_dual_rep, theta_rep, weight_coherence, COLUMN_ORDER,
    ROW_ORDER,
};
use crate::reps::{caps_cups, dual, pivot_g, pivot_k, quantum_dimension, rescaled_caps, v_alpha, Rep};
use crate::ring::{parse_expr, Degree, FracBi, Mat, Ring};
use crate::rmatrix::{braiding, check_crossings, closing_weights, commutant_dimension, kink, rotated_crossings, yb_residual};
use serde::Serialize;
use serde_json::Value;
use std::str::FromStr;

const PRINTED: &str = include_str!("../tests/fixtures/printed.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Matrices,
    Relations,
    Braiding,
    Degrees,
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "matrices" => Ok(Suite::Matrices),
            "relations" => Ok(Suite::Relations),
            "braiding" => Ok(Suite::Braiding),
            "degrees" => Ok(Suite::Degrees),
            _ => Err(format!("unknown suite {s}")),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass, detail: detail.into() }
    }
}

pub fn printed() -> Value {
    serde_json::from_str(PRINTED).expect("bundled fixture parses")
}

fn parse_mat(v: &Value) -> Result<Mat<FracBi>, String> {
    let rows = v.as_array().ok_or("not a matrix")?;
    let mut out = Vec::new();
    for r in rows {
        let mut row = Vec::new();
        for e in r.as_array().ok_or("not a row")? {
            row.push(match e.as_str() {
                None => FracBi::zero(),
                Some(s) => parse_expr(s).map_err(|err| format!("{s}: {err}"))?,
            });
        }
        out.push(row);
    }
    Ok(Mat::from_rows(out))
}

fn parse_deg(v: &Value) -> Vec<Vec<Degree>> {
    v.as_array()
        .into_iter()
        .flatten()
        .map(|r| r.as_array().into_iter().flatten().map(|e| e.as_str().and_then(|s| s.parse().ok())).collect())
        .collect()
}

fn gen(name: &str) -> Option<Gen> {
    match name {
        "Sigma" => Some(Gen::Sigma),
        "K1" => Some(Gen::K(1)),
        "K2" => Some(Gen::K(2)),
        "K3" => Some(Gen::K(3)),
        _ => name.parse().ok(),
    }
}

fn mismatches(got: &Mat<FracBi>, want: &Mat<FracBi>) -> Vec<(usize, usize)> {
    if got.rows() != want.rows() || got.cols() != want.cols() {
        return vec![(usize::MAX, usize::MAX)];
    }
    (0..got.rows()).flat_map(|i| (0..got.cols()).map(move |j| (i, j))).filter(|&(i, j)| got.get(i, j) != want.get(i, j)).collect()
}

fn compare(name: &str, got: &Mat<FracBi>, want: Result<Mat<FracBi>, String>) -> Check {
    match want {
        Err(e) => Check::new(name, false, format!("fixture: {e}")),
        Ok(w) => {
            let d = mismatches(got, &w);
            match d.first() {
                None => Check::new(name, true, "exact"),
                Some(&(i, j)) => Check::new(name, false, format!("{} mismatches, first at ({i}, {j})", d.len())),
            }
        }
    }
}

fn rep_table(label: &str, rep: &Rep, table: &Value) -> Vec<Check> {
    let Some(obj) = table.as_object() else {
        return vec![Check::new(label, false, "fixture missing")];
    };
    obj.iter()
        .map(|(name, m)| {
            let n = format!("{label} {name}");
            match gen(name) {
                Some(g) => compare(&n, rep.matrix(g), parse_mat(m)),
                None => Check::new(n, false, "unknown generator"),
            }
        })
        .collect()
}

/// Every printed matrix against the one built from scratch.
pub fn matrices() -> Vec<Check> {
    let p = printed();
    let v = v_alpha();
    let mut out = rep_table("pi", &v, &p["pi"]);
    out.extend(rep_table("pi*", &dual(&v), &p["pi_dual"]));
    let t = tensor_rep();
    out.extend(rep_table("Pi", t, &p["tensor"]));
    for (name, d) in p["tensor_diag"].as_object().into_iter().flatten() {
        let want: Result<Vec<FracBi>, String> = d
            .as_array()
            .into_iter()
            .flatten()
            .map(|e| parse_expr(e.as_str().unwrap_or("?")).map_err(|x| x.to_string()))
            .collect();
        let n = format!("Pi {name}");
        match gen(name) {
            Some(g) => out.push(compare(&n, t.matrix(g), want.map(Mat::diag))),
            None => out.push(Check::new(n, false, "unknown generator")),
        }
    }
    let c = caps_cups();
    let (om, mo) = rescaled_caps();
    out.push(compare("pi(g)", &pivot_g(&v), parse_mat(&p["pivot_g"])));
    out.push(compare("pi(K)", &pivot_k(&v), parse_mat(&p["pivot_k"])));
    out.push(compare("Omega-", &c.omega_minus.mat, parse_mat(&p["omega_minus"])));
    out.push(compare("Omega- (appendix)", &c.omega_minus.mat, parse_mat(&p["appendix"]["omega_minus"])));
    out.push(compare("Mho- (appendix)", &c.mho_minus.mat, parse_mat(&p["appendix"]["mho_minus"])));
    out.push(compare("Omega- rescaled", &om, parse_mat(&p["appendix"]["omega_minus_rescaled"])));
    out.push(compare("Mho- rescaled", &mo, parse_mat(&p["appendix"]["mho_minus_rescaled"])));
    out.push(compare("A", &matrix_a().displayed(), parse_mat(&p["a"])));
    out.push(atilde_check(&p));
    let r = reductions();
    for (key, label, m) in [("a_z", "A_z", &r.a_z), ("a_t", "A_t", &r.a_t), ("a_tilde_z", "A~_z", &r.atilde_z), ("a_tilde_t", "A~_t", &r.atilde_t)] {
        let want = parse_deg(&p[key]);
        let got = m.displayed();
        let bad: Vec<String> = (0..16)
            .flat_map(|i| (0..16).map(move |j| (i, j)))
            .filter(|&(i, j)| want.get(i).and_then(|r| r.get(j)) != Some(&got[i][j]))
            .map(|(i, j)| format!("({:?}, v{})", ROW_ORDER[i], COLUMN_ORDER[j]))
            .collect();
        out.push(Check::new(label, bad.is_empty(), if bad.is_empty() { "exact".into() } else { bad.join(" ") }));
    }
    out
}

/// Ã against print, naming each differing entry and whether the printed value
/// would still be a module map.
fn atilde_check(p: &Value) -> Check {
    let at = matrix_atilde();
    let want = match parse_mat(&p["a_tilde"]) {
        Ok(w) => w,
        Err(e) => return Check::new("A~", false, e),
    };
    let d = mismatches(&at.displayed(), &want);
    if d.is_empty() {
        return Check::new("A~", true, "exact");
    }
    let pi = tensor_rep();
    let detail = match theta_dual_rep() {
        Err(e) => e.to_string(),
        Ok(wd) => d
            .iter()
            .map(|&(i, j)| {
                let (b, c) = ROW_ORDER[i];
                let k = COLUMN_ORDER[j];
                let mut m = at.mat.clone();
                m.set(crate::basis::pair_index(b, c), k - 1, want.get(i, j).clone());
                let ok = wd.generators().all(|(g, x)| m.mul(x) == pi.matrix(*g).mul(&m));
                let verdict = if ok { "printed value is also a module map" } else { "printed value breaks the module map" };
                format!("(({b},{c}), v{k}): {verdict}")
            })
            .collect::<Vec<_>>()
            .join("; "),
    };
    Check::new("A~", false, detail)
}

/// Defining relations on every representation, and zero u-support of Θ.
pub fn relations() -> Vec<Check> {
    let v = v_alpha();
    let mut out = Vec::new();
    let mut run = |name: &str, r: Result<Rep, String>| match r {
        Err(e) => out.push(Check::new(name, false, e)),
        Ok(rep) => match check_relations(&rep) {
            Err(e) => out.push(Check::new(name, false, e.to_string())),
            Ok(rep) => {
                let fails: Vec<String> = rep.failures().map(|c| c.name.clone()).collect();
                let n = rep.checks.len();
                out.push(Check::new(name, fails.is_empty(), if fails.is_empty() { format!("{n} relations") } else { fails.join(", ") }));
            }
        },
    };
    run("pi", Ok(v.clone()));
    run("pi*", Ok(dual(&v)));
    run("Pi", Ok(tensor_rep().clone()));
    run("Theta", theta_rep().map_err(|e| e.to_string()));
    run("Theta*", theta_dual_rep().map_err(|e| e.to_string()));
    for (name, r) in [("Theta", theta_rep()), ("Theta*", theta_dual_rep())] {
        let ok = r.map(|w| w.generators().all(|(_, x)| x.entries().all(|(_, _, e)| e.has_trivial_u())));
        out.push(match ok {
            Ok(ok) => Check::new(format!("{name} u-support"), ok, if ok { "zero" } else { "nonzero" }),
            Err(e) => Check::new(format!("{name} u-support"), false, e.to_string()),
        });
    }
    out
}

/// Commutant, Yang–Baxter, kinks, invertibility and mixed-orientation moves.
pub fn braiding_suite() -> Vec<Check> {
    let mut out = Vec::new();
    let d = commutant_dimension(1);
    out.push(Check::new("commutant dimension 4", d == 4, format!("dimension {d}")));
    let b = match braiding() {
        Ok(b) => b,
        Err(e) => {
            out.push(Check::new("braiding", false, e.to_string()));
            return out;
        }
    };
    let coeffs: Vec<String> = b.coeffs.iter().map(|c| c.to_string()).collect();
    out.push(Check::new("Yang-Baxter", yb_residual(&b.r).is_zero(), coeffs.join(", ")));
    let w = closing_weights();
    out.push(Check::new("positive kink = 1", kink(&b.r, &w) == Some(FracBi::one()), ""));
    out.push(Check::new("negative kink = 1", kink(&b.rinv, &w) == Some(FracBi::one()), ""));
    out.push(Check::new("R R^-1 = id", b.r.mul(&b.rinv) == Mat::identity(16), ""));
    match rotated_crossings(b) {
        Err(e) => out.push(Check::new("rotated crossings", false, e.to_string())),
        Ok(c) => out.extend(check_crossings(b, &c).into_iter().map(|x| Check::new(x.name, x.pass, ""))),
    }
    out.push(Check::new("quantum dimension 0", quantum_dimension().is_zero(), ""));
    out
}

/// Degree tables, weight-graph coherence and box weights.
pub fn degrees() -> Vec<Check> {
    let r = reductions();
    let rep = weight_coherence(&r.a_t, &r.atilde_t);
    let mut out = vec![
        Check::new("b and c share a weight graph", rep.same_graph, ""),
        Check::new("e2/e3 symmetry", rep.e2_e3_symmetric, ""),
        Check::new("weight coherence", rep.weight_coherent, ""),
        Check::new("orientation antisymmetry", rep.antisymmetric, ""),
    ];
    let four = Some(num_rational::Rational64::from_integer(4));
    let zero = Some(num_rational::Rational64::from_integer(0));
    let (bz, cz) = (max_box_weight(&r.a_z), max_box_weight(&r.atilde_z));
    out.push(Check::new("max z-weight of b is 4", bz == four, format!("{bz:?}")));
    out.push(Check::new("max z-weight of c is 0", cz == zero, format!("{cz:?}")));
    out
}

pub fn run(s: Suite) -> Vec<Check> {
    match s {
        Suite::Matrices => matrices(),
        Suite::Relations => relations(),
        Suite::Braiding => braiding_suite(),
        Suite::Degrees => degrees(),
    }
}
