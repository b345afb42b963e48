use std::path::PathBuf;
use std::process::{Command, Output};

fn lg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lg")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("lg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d.join(name)
}

#[test]
fn unknot_line() {
    let o = lg(&["unknot"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "LG = 1, span 0, genus ≥ 0");
}

#[test]
fn trefoil_alexander_report() {
    let o = lg(&["--braid", r#"{"strands":2,"word":[1,1,1]}"#, "--check-alexander"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("span 4, genus ≥ 1"), "{s}");
    assert_eq!(s.matches("  pass  ").count(), 2, "{s}");
}

#[test]
fn json_output_round_trips() {
    let o = lg(&["figure-eight", "--json", "--genus-bound"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for k in ["lg_qqa", "lg_t0t1", "span", "genus_lower_bound", "dz", "dt"] {
        assert!(v.get(k).is_some(), "{k}");
    }
    assert_eq!(v["span"], "4");
    assert_eq!(v["genus_lower_bound"], 1);
    let qqa = lg_core::ring::parse_laurent(v["lg_qqa"].as_str().unwrap()).unwrap();
    let t = lg_core::ring::parse_laurent(v["lg_t0t1"].as_str().unwrap()).unwrap();
    assert_eq!(qqa, t);
    let b = lg_core::knots::lookup("figure-eight").unwrap().braid();
    assert_eq!(qqa, lg_core::tangle::lg_exact(&b).unwrap());
}

#[test]
fn split_link_is_zero() {
    let o = lg(&["--braid", r#"{"strands":2,"word":[]}"#, "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lg_qqa"], "0");
    assert!(v["span"].is_null());
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(lg(&["no-such-knot"]).status.code(), Some(2));
    assert_eq!(lg(&["--braid", r#"{"strands":2,"word":[5]}"#]).status.code(), Some(2));
    assert_eq!(lg(&["--braid", "[1,"]).status.code(), Some(2));
    assert_eq!(lg(&["verify", "everything"]).status.code(), Some(2));
    let p = scratch("bad.json");
    std::fs::write(&p, r#"{"source": ["Down", "Down"], "slices": [{"op": "cap", "pos": 0}]}"#).unwrap();
    assert_eq!(lg(&[p.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn engine_errors_exit_3() {
    let o = lg(&["conway", "--max-strands", "3"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("too many strands"));
}

#[test]
fn file_inputs() {
    let p = scratch("surface.json");
    std::fs::write(&p, serde_json::to_string(&lg_core::tangle::BottomTangle::trefoil()).unwrap()).unwrap();
    let o = lg(&[p.to_str().unwrap(), "--style", "qqa"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("LG = qa^-4 + qa^-2*(-q^2 - 1)"), "{}", stdout(&o));

    let b = lg_core::knots::lookup("trefoil").unwrap().braid();
    let prog = lg_core::tangle::TangleProgram::braid_closure(&b);
    let p = scratch("program.json");
    std::fs::write(&p, serde_json::to_string(&prog).unwrap()).unwrap();
    let o = lg(&[p.to_str().unwrap()]);
    assert!(stdout(&o).contains("span 4, genus ≥ 1"));

    let d = lg_core::tangle::AdmissibleDiagram { disks: 1, strips: 2, boundaries: 1, pieces: 1, program: prog };
    let p = scratch("admissible.json");
    std::fs::write(&p, serde_json::to_string(&d).unwrap()).unwrap();
    let o = lg(&[p.to_str().unwrap()]);
    assert!(stdout(&o).contains("span 4, genus ≥ 1"));
}

#[test]
fn verify_suites() {
    for s in ["relations", "degrees"] {
        let o = lg(&["verify", s]);
        assert!(o.status.success(), "{s}: {}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
    let o = lg(&["verify", "braiding"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o).matches("FAIL").count(), 1);
    assert!(stdout(&o).contains("FAIL  commutant dimension 4  (dimension 3)"));
}

#[test]
fn braiding_cache_directory() {
    let dir = scratch("cache");
    let run = || Command::new(env!("CARGO_BIN_EXE_lg")).arg("trefoil").env("LG_CACHE_DIR", &dir).output().unwrap();
    let first = run();
    assert!(first.status.success());
    assert!(dir.join("braiding.json").exists());
    let second = run();
    assert_eq!(stdout(&first), stdout(&second));
}
