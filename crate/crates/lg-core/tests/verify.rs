use lg_core::verify::*;

fn failing(v: &[Check]) -> Vec<&str> {
    v.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect()
}

#[test]
fn matrices_suite() {
    let v = matrices();
    assert!(v.len() > 40);
    assert_eq!(failing(&v), vec!["A~"]);
    let at = v.iter().find(|c| c.name == "A~").unwrap();
    assert_eq!(at.detail.matches("breaks the module map").count(), 2, "{}", at.detail);
}

#[test]
fn relations_suite() {
    let v = relations();
    assert_eq!(v.len(), 7);
    assert!(failing(&v).is_empty(), "{v:?}");
}

#[test]
fn braiding_suite_reports_commutant() {
    let v = braiding_suite();
    assert_eq!(failing(&v), vec!["commutant dimension 4"]);
    assert_eq!(v[0].detail, "dimension 3");
}

#[test]
fn degrees_suite() {
    let v = degrees();
    assert!(failing(&v).is_empty(), "{v:?}");
}

#[test]
fn suite_names_parse() {
    for s in ["matrices", "relations", "braiding", "degrees"] {
        assert!(s.parse::<Suite>().is_ok());
    }
    assert!("other".parse::<Suite>().is_err());
}
