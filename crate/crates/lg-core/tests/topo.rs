use lg_core::knots::{lookup, TABLE};
use lg_core::ring::UniLaurent;
use lg_core::tangle::BraidWord;
use lg_core::topo::{alexander_from_braid, alexander_from_fox, alexander_from_seifert, AlexPoly};

fn alex(terms: &[(i32, i64)]) -> AlexPoly {
    AlexPoly::normalize(&UniLaurent::from_int_terms(terms))
}

#[test]
fn burau_trefoil_matches_seifert_matrix() {
    let seifert = alexander_from_seifert(&[vec![-1, 1], vec![0, -1]]).unwrap();
    let burau = alexander_from_braid(&lookup("trefoil").unwrap().braid()).unwrap();
    assert_eq!(seifert, burau);
    assert_eq!(burau, alex(&[(-1, 1), (0, -1), (1, 1)]));
}

#[test]
fn burau_agrees_with_fox_calculus_on_table() {
    for k in TABLE {
        let b = k.braid();
        assert_eq!(alexander_from_braid(&b).unwrap(), alexander_from_fox(&b).unwrap(), "{}", k.name);
    }
}

#[test]
fn known_alexander_polynomials() {
    let fig8 = alexander_from_braid(&lookup("figure-eight").unwrap().braid()).unwrap();
    assert_eq!(fig8, alex(&[(-1, -1), (0, 3), (1, -1)]));
    for name in ["unknot", "kinoshita-terasaka", "conway"] {
        let a = alexander_from_braid(&lookup(name).unwrap().braid()).unwrap();
        assert_eq!(a, alex(&[(0, 1)]), "{name}");
    }
}

#[test]
fn table_entries_are_knots() {
    for k in TABLE {
        assert!(k.braid().is_knot(), "{}", k.name);
    }
}

#[test]
fn mirror_preserves_alexander() {
    let b = BraidWord::new(3, vec![1, 1, 2, -1, 2, 2]).unwrap();
    assert_eq!(alexander_from_braid(&b).unwrap(), alexander_from_braid(&b.mirror()).unwrap());
}
