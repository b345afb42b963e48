//! Presentation of U_q gl(2|1) with the parity element σ adjoined.

use crate::reps::Rep;
use crate::ring::{qqa, Field, FracBi, Mat, Ring};
use std::fmt;
use thiserror::Error;

/// Generators. `K(i)` is q^{E_i^i}, `H(i)` its square root; the `*Inv`
/// variants are inverses. `E31` and `E13` are derived.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    K(u8),
    KInv(u8),
    H(u8),
    HInv(u8),
    E21,
    E12,
    E32,
    E23,
    E31,
    E13,
    Sigma,
}

use Gen::*;

impl Gen {
    pub const LADDERS: [Gen; 6] = [E21, E12, E32, E23, E31, E13];

    /// Generators the coproduct and antipode are defined on directly.
    pub fn elementary() -> Vec<Gen> {
        let mut v = Self::cartans();
        v.extend([E21, E12, E32, E23, Sigma]);
        v
    }

    pub fn cartans() -> Vec<Gen> {
        let mut v = Vec::new();
        for i in 1..=3 {
            v.extend([K(i), KInv(i), H(i), HInv(i)]);
        }
        v
    }

    /// All generator symbols, derived ones included.
    pub fn all() -> Vec<Gen> {
        let mut v = Self::elementary();
        v.extend([E31, E13]);
        v
    }

    /// The nine symbols of the presentation: three Cartans, six ladders, σ.
    pub fn nine() -> [Gen; 10] {
        [K(1), K(2), K(3), E21, E12, E32, E23, E31, E13, Sigma]
    }

    pub fn is_odd(self) -> bool {
        matches!(self, E32 | E23 | E31 | E13)
    }

    pub fn is_grouplike(self) -> bool {
        matches!(self, K(_) | KInv(_) | H(_) | HInv(_) | Sigma)
    }

    pub fn inverse(self) -> Option<Gen> {
        Some(match self {
            K(i) => KInv(i),
            KInv(i) => K(i),
            H(i) => HInv(i),
            HInv(i) => H(i),
            Sigma => Sigma,
            _ => return None,
        })
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            K(i) => write!(f, "qE{i}{i}"),
            KInv(i) => write!(f, "qE{i}{i}^-1"),
            H(i) => write!(f, "qE{i}{i}^1/2"),
            HInv(i) => write!(f, "qE{i}{i}^-1/2"),
            Sigma => write!(f, "sigma"),
            g => write!(f, "{g:?}"),
        }
    }
}

impl std::str::FromStr for Gen {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Gen::all().into_iter().find(|g| g.to_string() == s).ok_or_else(|| format!("unknown generator {s}"))
    }
}

/// A product of generators, read left to right.
pub type Word = Vec<Gen>;

/// Σ c · (left ⊗ right).
#[derive(Clone, Debug, PartialEq)]
pub struct TensorWord {
    pub terms: Vec<(FracBi, Word, Word)>,
}

/// Σ c · word.
#[derive(Clone, Debug, PartialEq)]
pub struct LinWord {
    pub terms: Vec<(FracBi, Word)>,
}

impl LinWord {
    pub fn single(c: FracBi, w: Word) -> Self {
        LinWord { terms: vec![(c, w)] }
    }

    /// Evaluate with a generator→matrix map.
    pub fn eval(&self, rep: &Rep) -> Mat<FracBi> {
        let n = rep.dim();
        let mut acc = Mat::zeros(n, n);
        for (c, w) in &self.terms {
            acc = acc.add(&rep.word(w).scale(c));
        }
        acc
    }
}

pub(crate) fn q() -> FracBi {
    FracBi::from_laurent(qqa(1, 0))
}

pub(crate) fn qinv() -> FracBi {
    FracBi::from_laurent(qqa(-1, 0))
}

/// q − q^{-1}.
pub(crate) fn qdiff() -> FracBi {
    q().sub(&qinv())
}

fn one() -> FracBi {
    FracBi::one()
}

/// Δ^σ(g).
pub fn coproduct_sigma(g: Gen) -> TensorWord {
    let terms = match g {
        _ if g.is_grouplike() => vec![(one(), vec![g], vec![g])],
        E21 | E12 => vec![
            (one(), vec![g], vec![HInv(1), H(2)]),
            (one(), vec![H(1), HInv(2)], vec![g]),
        ],
        E32 | E23 => vec![
            (one(), vec![g], vec![HInv(2), HInv(3)]),
            (one(), vec![H(2), H(3), Sigma], vec![g]),
        ],
        E13 => vec![
            (one(), vec![E13], vec![HInv(1), HInv(3)]),
            (one(), vec![H(1), H(3), Sigma], vec![E13]),
            (qdiff().neg(), vec![H(1), HInv(2), E23], vec![E12, HInv(2), HInv(3)]),
        ],
        E31 => vec![
            (one(), vec![E31], vec![HInv(1), HInv(3)]),
            (one(), vec![H(1), H(3), Sigma], vec![E31]),
            (qdiff(), vec![H(2), H(3), E21, Sigma], vec![E32, HInv(1), H(2)]),
        ],
        _ => unreachable!(),
    };
    TensorWord { terms }
}

/// S^σ(g).
pub fn antipode_sigma(g: Gen) -> LinWord {
    match g {
        _ if g.is_grouplike() => LinWord::single(one(), vec![g.inverse().unwrap()]),
        E21 => LinWord::single(qinv().neg(), vec![E21]),
        E12 => LinWord::single(q().neg(), vec![E12]),
        E32 | E23 => LinWord::single(one().neg(), vec![Sigma, g]),
        E31 => LinWord {
            terms: vec![
                (qinv(), vec![Sigma, E32, E21]),
                (qinv().mul(&qinv()).neg(), vec![Sigma, E21, E32]),
            ],
        },
        E13 => LinWord {
            terms: vec![(q(), vec![Sigma, E12, E23]), (q().mul(&q()).neg(), vec![Sigma, E23, E12])],
        },
        _ => unreachable!(),
    }
}

/// ε(g).
pub fn counit(g: Gen) -> FracBi {
    if g.is_grouplike() {
        one()
    } else {
        FracBi::zero()
    }
}

/// A defining identity Σ c·word = 0.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub lhs: LinWord,
}

fn lw(terms: Vec<(FracBi, Word)>) -> LinWord {
    LinWord { terms }
}

/// The full relation set.
pub fn relations() -> Vec<Relation> {
    let mut out = Vec::new();
    let mut push = |name: String, terms: Vec<(FracBi, Word)>| out.push(Relation { name, lhs: lw(terms) });
    let m1 = one().neg();
    let cart = Gen::cartans();
    for (i, &a) in cart.iter().enumerate() {
        for &b in &cart[i + 1..] {
            push(format!("[{a}, {b}] = 0"), vec![(one(), vec![a, b]), (m1.clone(), vec![b, a])]);
        }
    }
    for i in 1..=3u8 {
        push(format!("qE{i}{i}^1/2 squared"), vec![(one(), vec![H(i), H(i)]), (m1.clone(), vec![K(i)])]);
        push(format!("qE{i}{i} inverse"), vec![(one(), vec![K(i), KInv(i)]), (m1.clone(), vec![])]);
        push(format!("qE{i}{i}^1/2 inverse"), vec![(one(), vec![H(i), HInv(i)]), (m1.clone(), vec![])]);
    }
    // K_a X K_a^{-1} = q^{δ_ab − δ_ac} X for X = E^b_c.
    let ladders = [(E21, 1u8, 2u8), (E12, 2, 1), (E32, 2, 3), (E23, 3, 2), (E31, 1, 3), (E13, 3, 1)];
    for &(x, b, c) in &ladders {
        for a in 1..=3u8 {
            let k = (a == b) as i32 - (a == c) as i32;
            let f = FracBi::from_laurent(qqa(k, 0));
            push(
                format!("qE{a}{a} {x} qE{a}{a}^-1 = q^{k} {x}"),
                vec![(one(), vec![K(a), x, KInv(a)]), (f.neg(), vec![x])],
            );
        }
    }
    push("E23^2 = 0".into(), vec![(one(), vec![E23, E23])]);
    push("E32^2 = 0".into(), vec![(one(), vec![E32, E32])]);
    push("[E21, E23] = 0".into(), vec![(one(), vec![E21, E23]), (m1.clone(), vec![E23, E21])]);
    push("[E12, E32] = 0".into(), vec![(one(), vec![E12, E32]), (m1.clone(), vec![E32, E12])]);
    let dinv = qdiff().inv().unwrap();
    push(
        "E21 E12 - E12 E21".into(),
        vec![
            (one(), vec![E21, E12]),
            (m1.clone(), vec![E12, E21]),
            (dinv.neg(), vec![K(1), KInv(2)]),
            (dinv.clone(), vec![KInv(1), K(2)]),
        ],
    );
    push(
        "E32 E23 + E23 E32".into(),
        vec![
            (one(), vec![E32, E23]),
            (one(), vec![E23, E32]),
            (dinv.neg(), vec![K(2), K(3)]),
            (dinv.clone(), vec![KInv(2), KInv(3)]),
        ],
    );
    push("E21 E31 - q E31 E21".into(), vec![(one(), vec![E21, E31]), (q().neg(), vec![E31, E21])]);
    push("E13 E12 - q^-1 E12 E13".into(), vec![(one(), vec![E13, E12]), (qinv().neg(), vec![E12, E13])]);
    for g in Gen::all() {
        if g == Sigma {
            continue;
        }
        let s = if g.is_odd() { one() } else { m1.clone() };
        push(format!("sigma {g} sigma = (-1)^[{g}] {g}"), vec![(one(), vec![Sigma, g, Sigma]), (s, vec![g])]);
    }
    push("sigma^2 = 1".into(), vec![(one(), vec![Sigma, Sigma]), (m1, vec![])]);
    out
}

#[derive(Debug, Error, PartialEq)]
pub enum AlgebraError {
    #[error("generator {gen} has a {got}x{got2} matrix, expected {want}x{want}")]
    DimMismatch { gen: Gen, got: usize, got2: usize, want: usize },
    #[error("representation lacks generator {0}")]
    Missing(Gen),
}

/// Outcome of checking one relation.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub name: String,
    pub pass: bool,
    pub first_failure: Option<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Evaluate every relation on the matrices of `rep`.
pub fn check_relations(rep: &Rep) -> Result<RelationReport, AlgebraError> {
    let n = rep.dim();
    for g in Gen::all() {
        let m = rep.try_matrix(g).ok_or(AlgebraError::Missing(g))?;
        if m.rows() != n || m.cols() != n {
            return Err(AlgebraError::DimMismatch { gen: g, got: m.rows(), got2: m.cols(), want: n });
        }
    }
    let checks = relations()
        .into_iter()
        .map(|r| {
            let m = r.lhs.eval(rep);
            let first_failure = m.nonzeros().next().map(|(i, j, _)| (i, j));
            RelationCheck { name: r.name, pass: first_failure.is_none(), first_failure }
        })
        .collect();
    Ok(RelationReport { checks })
}

/// Image of a tensor word under r1 ⊗ r2.
pub fn eval_tensor(t: &TensorWord, r1: &Rep, r2: &Rep) -> Mat<FracBi> {
    let n = r1.dim() * r2.dim();
    let mut acc = Mat::zeros(n, n);
    for (c, l, r) in &t.terms {
        acc = acc.add(&r1.word(l).kron(&r2.word(r)).scale(c));
    }
    acc
}
