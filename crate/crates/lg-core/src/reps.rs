//! V_α, its dual, tensor products and the duality morphisms.

use crate::algebra::{antipode_sigma, coproduct_sigma, eval_tensor, Gen, Word};
use crate::ring::{qbracket, qqa, BracketArg, Field, FracBi, Mat, Ring};
use std::collections::BTreeMap;

/// A finite-dimensional module: generator matrices over the fraction field.
#[derive(Clone, Debug)]
pub struct Rep {
    pub label: String,
    grading: Vec<bool>,
    mats: BTreeMap<Gen, Mat<FracBi>>,
}

impl Rep {
    pub fn new(label: impl Into<String>, grading: Vec<bool>, mats: BTreeMap<Gen, Mat<FracBi>>) -> Self {
        Rep { label: label.into(), grading, mats }
    }

    pub fn dim(&self) -> usize {
        self.grading.len()
    }

    /// Parities of basis vectors (true = odd).
    pub fn grading(&self) -> &[bool] {
        &self.grading
    }

    pub fn matrix(&self, g: Gen) -> &Mat<FracBi> {
        &self.mats[&g]
    }

    pub fn try_matrix(&self, g: Gen) -> Option<&Mat<FracBi>> {
        self.mats.get(&g)
    }

    pub fn generators(&self) -> impl Iterator<Item = (&Gen, &Mat<FracBi>)> {
        self.mats.iter()
    }

    pub fn set_matrix(&mut self, g: Gen, m: Mat<FracBi>) {
        self.mats.insert(g, m);
    }

    /// Product of generator matrices, left to right.
    pub fn word(&self, w: &Word) -> Mat<FracBi> {
        let mut m = Mat::identity(self.dim());
        for g in w {
            m = m.mul(self.matrix(*g));
        }
        m
    }

    /// σ is diagonal ±1 and agrees with the grading.
    pub fn sigma_matches_grading(&self) -> bool {
        let s = self.matrix(Gen::Sigma);
        s.is_diagonal()
            && self.grading.iter().enumerate().all(|(i, &odd)| {
                *s.get(i, i) == if odd { FracBi::from_i64(-1) } else { FracBi::one() }
            })
    }
}

fn fr(x: crate::ring::LaurentBi) -> FracBi {
    FracBi::from_laurent(x)
}

fn diag(v: Vec<FracBi>) -> Mat<FracBi> {
    Mat::diag(v)
}

fn inv_diag(m: &Mat<FracBi>) -> Mat<FracBi> {
    Mat::diag((0..m.rows()).map(|i| m.get(i, i).inv().expect("invertible diagonal")).collect())
}

/// Fill in inverses of Cartans and the derived generators E31, E13.
fn complete(mats: &mut BTreeMap<Gen, Mat<FracBi>>) {
    for i in 1..=3 {
        for (g, gi) in [(Gen::K(i), Gen::KInv(i)), (Gen::H(i), Gen::HInv(i))] {
            if !mats.contains_key(&gi) {
                let m = inv_diag(&mats[&g]);
                mats.insert(gi, m);
            }
        }
    }
    let q = fr(qqa(1, 0));
    let qi = fr(qqa(-1, 0));
    let (e21, e12, e32, e23) = (&mats[&Gen::E21], &mats[&Gen::E12], &mats[&Gen::E32], &mats[&Gen::E23]);
    let e31 = e21.mul(e32).sub(&e32.mul(e21).scale(&qi));
    let e13 = e23.mul(e12).sub(&e12.mul(e23).scale(&q));
    mats.insert(Gen::E31, e31);
    mats.insert(Gen::E13, e13);
}

/// The typical 4-dimensional module V_α.
pub fn v_alpha() -> Rep {
    let one = FracBi::one;
    let q = |a, b| fr(qqa(a, b));
    let s = |a, b| fr(crate::ring::su(a, b));
    let mut mats = BTreeMap::new();
    mats.insert(Gen::K(1), diag(vec![one(), one(), q(-1, 0), q(-1, 0)]));
    mats.insert(Gen::K(2), diag(vec![one(), q(-1, 0), one(), q(-1, 0)]));
    mats.insert(Gen::K(3), diag(vec![q(0, 1), q(1, 1), q(1, 1), q(2, 1)]));
    mats.insert(Gen::H(1), diag(vec![one(), one(), s(-1, 0), s(-1, 0)]));
    mats.insert(Gen::H(2), diag(vec![one(), s(-1, 0), one(), s(-1, 0)]));
    mats.insert(Gen::H(3), diag(vec![s(0, 1), s(1, 1), s(1, 1), s(2, 1)]));
    let m1 = FracBi::from_i64(-1);
    let mut e = Mat::zeros(4, 4);
    e.set(1, 2, m1.clone());
    mats.insert(Gen::E21, e);
    let mut e = Mat::zeros(4, 4);
    e.set(2, 1, m1);
    mats.insert(Gen::E12, e);
    let mut e = Mat::zeros(4, 4);
    e.set(0, 1, one());
    e.set(2, 3, one());
    mats.insert(Gen::E32, e);
    let mut e = Mat::zeros(4, 4);
    e.set(1, 0, qbracket(BracketArg::Alpha(0)));
    e.set(3, 2, qbracket(BracketArg::Alpha(1)));
    mats.insert(Gen::E23, e);
    mats.insert(Gen::Sigma, diag(vec![one(), FracBi::from_i64(-1), FracBi::from_i64(-1), one()]));
    complete(&mut mats);
    Rep::new("V_alpha", vec![false, true, true, false], mats)
}

/// The one-dimensional module given by the counit.
pub fn counit_rep() -> Rep {
    let mut mats = BTreeMap::new();
    for g in Gen::all() {
        let v = if g.is_grouplike() { FracBi::one() } else { FracBi::zero() };
        mats.insert(g, Mat::diag(vec![v]));
    }
    Rep::new("trivial", vec![false], mats)
}

/// Dual module: x acts by the transpose of π(S^σ(x)).
pub fn dual(r: &Rep) -> Rep {
    let mut mats = BTreeMap::new();
    for g in Gen::elementary() {
        mats.insert(g, antipode_sigma(g).eval(r).transpose());
    }
    complete(&mut mats);
    Rep::new(format!("{}*", r.label), r.grading.clone(), mats)
}

/// Tensor product through Δ^σ; E31 and E13 use their three-term coproducts.
pub fn tensor(r1: &Rep, r2: &Rep) -> Rep {
    let mut mats = BTreeMap::new();
    for g in Gen::all() {
        mats.insert(g, eval_tensor(&coproduct_sigma(g), r1, r2));
    }
    let grading = r1
        .grading
        .iter()
        .flat_map(|&a| r2.grading.iter().map(move |&b| a ^ b))
        .collect();
    Rep::new(format!("{} (x) {}", r1.label, r2.label), grading, mats)
}

/// π(K) for the pivot K = q^{-2E33} q^{-2E22} σ.
pub fn pivot_k(r: &Rep) -> Mat<FracBi> {
    use Gen::*;
    r.word(&vec![KInv(3), KInv(3), KInv(2), KInv(2), Sigma])
}

/// π(g) for the pivot g = q^{-E11} q^{E22} q^{E33} σ.
pub fn pivot_g(r: &Rep) -> Mat<FracBi> {
    use Gen::*;
    r.word(&vec![KInv(1), K(2), K(3), Sigma])
}

/// A 4×4 pairing matrix. Caps read M[v][f] on the pair (v, f).
#[derive(Clone, Debug, PartialEq)]
pub struct Pairing {
    pub name: &'static str,
    pub mat: Mat<FracBi>,
}

/// Ω^±, ℧^± on V_α.
#[derive(Clone, Debug)]
pub struct CapsCups {
    pub omega_plus: Pairing,
    pub omega_minus: Pairing,
    pub mho_plus: Pairing,
    pub mho_minus: Pairing,
}

pub fn caps_cups() -> CapsCups {
    let k = pivot_k(&v_alpha());
    let ki = inv_diag(&k);
    CapsCups {
        omega_plus: Pairing { name: "Omega+", mat: Mat::identity(4) },
        omega_minus: Pairing { name: "Omega-", mat: k },
        mho_plus: Pairing { name: "Mho+", mat: Mat::identity(4) },
        mho_minus: Pairing { name: "Mho-", mat: ki },
    }
}

/// Quantum dimension Σ_i Ω^-_{ii} ℧^+_{ii}.
pub fn quantum_dimension() -> FracBi {
    let c = caps_cups();
    c.omega_minus.mat.mul(&c.mho_plus.mat).trace()
}

/// Vector of a pairing on V ⊗ V* (index v·4 + f).
pub fn pairing_vec(m: &Mat<FracBi>) -> Vec<FracBi> {
    (0..16).map(|k| m.get(k / 4, k % 4).clone()).collect()
}

/// True if the row vector `r` on the module `m` is invariant: r·x = ε(x) r.
pub fn is_invariant_form(r: &[FracBi], m: &Rep) -> bool {
    m.generators().all(|(g, x)| {
        let e = crate::algebra::counit(*g);
        (0..m.dim()).all(|l| {
            let mut acc = FracBi::zero();
            for (k, rk) in r.iter().enumerate() {
                if !rk.is_zero() && !x.get(k, l).is_zero() {
                    acc = acc.add(&rk.mul(x.get(k, l)));
                }
            }
            acc == e.mul(&r[l])
        })
    })
}

/// True if the column vector `c` spans a trivial submodule: x·c = ε(x) c.
pub fn is_invariant_vector(c: &[FracBi], m: &Rep) -> bool {
    m.generators().all(|(g, x)| {
        let e = crate::algebra::counit(*g);
        x.mul_vec(c).iter().zip(c).all(|(a, b)| *a == e.mul(b))
    })
}

/// Evaluation and coevaluation vectors of the four duality morphisms, indexed
/// by (first factor)·4 + (second factor).
///
/// `ev_l`: V*⊗V → 1, `coev_l`: 1 → V⊗V*, `ev_r`: V⊗V* → 1, `coev_r`: 1 → V*⊗V.
#[derive(Clone, Debug)]
pub struct DualityMaps {
    pub ev_l: Vec<FracBi>,
    pub coev_l: Vec<FracBi>,
    pub ev_r: Vec<FracBi>,
    pub coev_r: Vec<FracBi>,
}

pub fn duality_maps() -> DualityMaps {
    let c = caps_cups();
    let id = pairing_vec(&c.omega_plus.mat);
    let kinv = &c.mho_minus.mat;
    let k = &c.omega_minus.mat;
    DualityMaps {
        ev_l: id.clone(),
        coev_l: pairing_vec(&c.mho_plus.mat),
        ev_r: (0..16).map(|x| kinv.get(x % 4, x / 4).clone()).collect(),
        coev_r: (0..16).map(|x| k.get(x % 4, x / 4).clone()).collect(),
    }
}

/// q^{2α} Ω^- and q^{-2α} ℧^-: the α-free caps used for degree counting.
pub fn rescaled_caps() -> (Mat<FracBi>, Mat<FracBi>) {
    let c = caps_cups();
    (c.omega_minus.mat.scale(&fr(qqa(0, 2))), c.mho_minus.mat.scale(&fr(qqa(0, -2))))
}
