//! Built-in knots and the target polynomial used to validate the table.

use crate::rmatrix::{closing_weights, select_braiding, Braiding, RMatrixError};
use crate::ring::{su, to_t0t1_checked, Fp, LaurentBi, Ring, P61};
use crate::tangle::{closure_scalar, BraidWord};
use crate::topo::{alexander_from_braid, check_specializations};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A named knot with a braid representative.
#[derive(Clone, Debug)]
pub struct KnotEntry {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub strands: usize,
    pub word: &'static [i32],
    pub genus: Option<u32>,
}

impl KnotEntry {
    pub fn braid(&self) -> BraidWord {
        BraidWord::new(self.strands, self.word.to_vec()).expect("table braids validate")
    }
}

pub const TABLE: &[KnotEntry] = &[
    KnotEntry { name: "unknot", aliases: &["0_1"], strands: 1, word: &[], genus: Some(0) },
    KnotEntry { name: "trefoil", aliases: &["3_1"], strands: 2, word: &[1, 1, 1], genus: Some(1) },
    KnotEntry { name: "figure-eight", aliases: &["4_1"], strands: 3, word: &[1, -2, 1, -2], genus: Some(1) },
    KnotEntry {
        name: "kinoshita-terasaka",
        aliases: &["kt", "11n42"],
        strands: 4,
        word: &[-1, -1, -1, -1, 2, 2, 1, -3, 2, 2, -3, 2, -3],
        genus: Some(2),
    },
    KnotEntry {
        name: "conway",
        aliases: &["11n34"],
        strands: 4,
        word: &[-1, -1, 2, -1, 2, -1, 3, -2, -2, 3, 3],
        genus: Some(3),
    },
];

pub fn lookup(name: &str) -> Option<&'static KnotEntry> {
    let n = name.to_ascii_lowercase();
    TABLE.iter().find(|k| k.name == n || k.aliases.contains(&n.as_str()))
}

/// Published value for the Kinoshita–Terasaka and Conway knots:
/// (power of q^α, [(power of q, coefficient)]).
pub const KT_COEFFS: &[(i32, &[(i32, i64)])] = &[
    (-6, &[(-8, -1), (-6, -1), (-4, 2), (-2, 1), (0, -1)]),
    (-4, &[(-8, 1), (-6, 6), (-4, -3), (-2, -9), (0, 2), (2, 3)]),
    (-2, &[(-6, -7), (-4, -7), (-2, 18), (0, 9), (2, -11), (4, -2)]),
    (0, &[(-6, 2), (-4, 14), (-2, -8), (0, -23), (2, 6), (4, 10)]),
    (2, &[(-4, -7), (-2, -7), (0, 18), (2, 9), (4, -11), (6, -2)]),
    (4, &[(-4, 1), (-2, 6), (0, -3), (2, -9), (4, 2), (6, 3)]),
    (6, &[(-2, -1), (0, -1), (2, 2), (4, 1), (6, -1)]),
];

pub fn kt_polynomial() -> LaurentBi {
    let mut acc = LaurentBi::zero();
    for &(a, row) in KT_COEFFS {
        for &(e, c) in row {
            acc = acc.add(&su(2 * e, 2 * a).scale(&crate::ring::RatQ::from_int(c)));
        }
    }
    acc
}

/// Trefoil value must specialize to the Alexander polynomial.
pub fn trefoil_check(b: &Braiding) -> Result<(), String> {
    let br = lookup("trefoil").unwrap().braid();
    let w = closing_weights();
    let v = closure_scalar(&br, &b.r, &b.rinv, &w).map_err(|e| e.to_string())?;
    let l = v.to_laurent().map_err(|e| e.to_string())?;
    let t = to_t0t1_checked(&l).ok_or("value is off the (t0, t1) lattice")?;
    let alex = alexander_from_braid(&br).map_err(|e| e.to_string())?;
    let rep = check_specializations(&t, &alex);
    match rep.iter().find(|c| !c.status) {
        None => Ok(()),
        Some(c) => Err(format!("{}: {}", c.check, c.residual)),
    }
}

/// Kinoshita–Terasaka closure at a random point modulo p must match the
/// published value.
pub fn kt_check(b: &Braiding) -> Result<(), String> {
    let br = lookup("kinoshita-terasaka").unwrap().braid();
    let target = kt_polynomial();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..8 {
        let (s, u) = (Fp::<P61>::random(&mut rng), Fp::<P61>::random(&mut rng));
        let (Some(r), Some(ri)) = (b.r.eval_at(s, u), b.rinv.eval_at(s, u)) else { continue };
        let w: Option<Vec<Fp<P61>>> = closing_weights().iter().map(|x| x.eval(s, u)).collect();
        let Some(w) = w else { continue };
        let Some(t) = target.eval(s, u) else { continue };
        let v = closure_scalar(&br, &r, &ri, &w).map_err(|e| e.to_string())?;
        return if v == t { Ok(()) } else { Err("differs from the published value".into()) };
    }
    Err("no admissible sample point".into())
}

pub fn select_default_braiding() -> Result<Braiding, RMatrixError> {
    select_braiding(&trefoil_check, &kt_check)
}

