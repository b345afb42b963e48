//! The basis v_1..v_16 of V_α ⊗ V_α*, the α-free model W and its dual.

use crate::algebra::{check_relations, AlgebraError, Gen, Word};
use crate::reps::{dual, pivot_g, tensor, v_alpha, Rep};
use crate::ring::{qqa, Degree, FracBi, Mat, Ring};
use num_rational::Rational64;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BasisError {
    #[error("{0} is singular")]
    Singular(&'static str),
    #[error("{model}({gen}) has an entry with nonzero u-support at ({row}, {col})")]
    USupport { model: &'static str, gen: Gen, row: usize, col: usize },
    #[error("{model} fails relation {name}")]
    Relation { model: &'static str, name: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

use Gen::{E13, E23, E31, E32};

/// Operator words producing v_k from e1 ⊗ e1*, applied rightmost first.
pub const WORDS: [&[Gen]; 16] = [
    &[],
    &[E32],
    &[E31],
    &[E13],
    &[E23],
    &[E32, E31],
    &[E32, E13],
    &[E32, E23],
    &[E31, E13],
    &[E31, E23],
    &[E13, E23],
    &[E31, E13, E23],
    &[E32, E13, E23],
    &[E32, E31, E23],
    &[E32, E31, E13],
    &[E32, E31, E13, E23],
];

/// Display order of the columns (1-based basis labels).
pub const COLUMN_ORDER: [usize; 16] = [1, 8, 9, 16, 2, 5, 15, 12, 3, 4, 14, 13, 6, 11, 10, 7];

/// Display order of the rows, as (b, c) for e_b ⊗ e_c*.
pub const ROW_ORDER: [(usize, usize); 16] = [
    (1, 1),
    (2, 2),
    (3, 3),
    (4, 4),
    (1, 2),
    (2, 1),
    (3, 4),
    (4, 3),
    (1, 3),
    (3, 1),
    (2, 4),
    (4, 2),
    (1, 4),
    (4, 1),
    (2, 3),
    (3, 2),
];

/// Natural index of e_b ⊗ e_c*.
pub fn pair_index(b: usize, c: usize) -> usize {
    (b - 1) * 4 + (c - 1)
}

/// A 16×16 change of basis, stored with rows e_b ⊗ e_c* in lexicographic
/// order and columns v_1..v_16.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisChange {
    pub mat: Mat<FracBi>,
}

impl BasisChange {
    /// Entry at row e_b ⊗ e_c*, column v_k (1-based).
    pub fn entry(&self, row: (usize, usize), k: usize) -> &FracBi {
        self.mat.get(pair_index(row.0, row.1), k - 1)
    }

    /// The matrix in display order.
    pub fn displayed(&self) -> Mat<FracBi> {
        displayed(&self.mat)
    }

    pub fn scale(&self, c: &FracBi) -> BasisChange {
        BasisChange { mat: self.mat.scale(c) }
    }

    /// Block upper-triangular with nonzero diagonal in display order.
    pub fn is_triangular(&self) -> bool {
        let d = self.displayed();
        (0..16).all(|i| !d.get(i, i).is_zero()) && (0..16).all(|i| (0..i).all(|j| d.get(i, j).is_zero()))
    }
}

fn displayed<R: Ring>(m: &Mat<R>) -> Mat<R> {
    Mat::from_fn(16, 16, |i, j| {
        let (b, c) = ROW_ORDER[i];
        m.get(pair_index(b, c), COLUMN_ORDER[j] - 1).clone()
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegVar {
    Z,
    T,
}

/// Monomial reduction z^{deg_z} or t^{deg_t} of a matrix; `None` marks zero.
#[derive(Clone, Debug, PartialEq)]
pub struct DegMatrix {
    pub var: DegVar,
    entries: Vec<Vec<Degree>>,
}

impl DegMatrix {
    pub fn of(m: &BasisChange, var: DegVar) -> Self {
        let entries = (0..16)
            .map(|i| {
                (0..16)
                    .map(|j| match var {
                        DegVar::Z => m.mat.get(i, j).deg_z(),
                        DegVar::T => m.mat.get(i, j).deg_t(),
                    })
                    .collect()
            })
            .collect();
        DegMatrix { var, entries }
    }

    pub fn entry(&self, row: (usize, usize), k: usize) -> Degree {
        self.entries[pair_index(row.0, row.1)][k - 1]
    }

    /// Rows and columns in display order.
    pub fn displayed(&self) -> Vec<Vec<Degree>> {
        ROW_ORDER
            .iter()
            .map(|&(b, c)| COLUMN_ORDER.iter().map(|&k| self.entry((b, c), k)).collect())
            .collect()
    }
}

struct Cache {
    vv: Rep,
    a: BasisChange,
    a_inv: Mat<FracBi>,
    f: BasisChange,
    a_tilde: BasisChange,
}

fn cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(|| {
        let v = v_alpha();
        let vv = tensor(&v, &dual(&v));
        let cols = basis_vectors(&vv);
        let a = Mat::from_fn(16, 16, |i, j| cols[j][i].clone());
        let a_inv = a.inverse().expect("v_1..v_16 is a basis");
        let m = bilinear_form(&pivot_g(&v));
        let f = a.transpose().mul(&m).mul(&a).transpose();
        let f_inv = f.inverse().expect("F invertible");
        let a_tilde = a.mul(&f_inv);
        Cache {
            vv,
            a: BasisChange { mat: a },
            a_inv,
            f: BasisChange { mat: f },
            a_tilde: BasisChange { mat: a_tilde },
        }
    })
}

fn basis_vectors(vv: &Rep) -> Vec<Vec<FracBi>> {
    let mut e11 = vec![FracBi::zero(); 16];
    e11[0] = FracBi::one();
    WORDS
        .iter()
        .map(|w| {
            let w: Word = w.to_vec();
            vv.word(&w).mul_vec(&e11)
        })
        .collect()
}

/// The pairing (x, y) ↦ θ(Ψ_g x ⊗ y) on V ⊗ V*, with Ψ_g: V → V** given by π(g).
fn bilinear_form(gm: &Mat<FracBi>) -> Mat<FracBi> {
    let mut m = Mat::zeros(16, 16);
    for i in 0..4 {
        for j in 0..4 {
            for l in 0..4 {
                let g = gm.get(l, i);
                if !g.is_zero() {
                    m.set(i * 4 + j, j * 4 + l, g.clone());
                }
            }
        }
    }
    m
}

/// Π_α on V_α ⊗ V_α*.
pub fn tensor_rep() -> &'static Rep {
    &cache().vv
}

/// v_1..v_16 as vectors in the e_b ⊗ e_c* basis.
pub fn build_v_basis() -> Vec<Vec<FracBi>> {
    (0..16).map(|k| cache().a.mat.col_vec(k)).collect()
}

pub fn matrix_a() -> &'static BasisChange {
    &cache().a
}

pub fn matrix_f() -> &'static BasisChange {
    &cache().f
}

pub fn matrix_atilde() -> &'static BasisChange {
    &cache().a_tilde
}

fn conjugated(model: &'static str, p: &Mat<FracBi>, p_inv: &Mat<FracBi>, grading: Vec<bool>) -> Result<Rep, BasisError> {
    let vv = tensor_rep();
    let mut mats = BTreeMap::new();
    for (g, x) in vv.generators() {
        let t = p_inv.mul(x).mul(p);
        if let Some((row, col, _)) = t.nonzeros().find(|(_, _, e)| !e.has_trivial_u()) {
            return Err(BasisError::USupport { model, gen: *g, row, col });
        }
        mats.insert(*g, t);
    }
    let rep = Rep::new(model, grading, mats);
    let report = check_relations(&rep)?;
    if let Some(f) = report.failures().next() {
        return Err(BasisError::Relation { model, name: f.name.clone() });
    }
    Ok(rep)
}

fn w_grading() -> Vec<bool> {
    WORDS.iter().map(|w| w.iter().filter(|g| g.is_odd()).count() % 2 == 1).collect()
}

/// Θ(x) = A^{-1} Π_α(x) A; errors if any entry depends on q^α.
pub fn theta_rep() -> Result<Rep, BasisError> {
    let c = cache();
    conjugated("W", &c.a.mat, &c.a_inv, w_grading())
}

/// Θ*(x) = Ã^{-1} Π_α(x) Ã.
pub fn theta_dual_rep() -> Result<Rep, BasisError> {
    let c = cache();
    let inv = c.a_tilde.mat.inverse().ok_or(BasisError::Singular("Atilde"))?;
    conjugated("W*", &c.a_tilde.mat, &inv, w_grading())
}

/// q^α Ã, the form used in degree bounds.
pub fn atilde_rescaled() -> BasisChange {
    matrix_atilde().scale(&FracBi::from_laurent(qqa(0, 1)))
}

#[derive(Clone, Debug)]
pub struct Reductions {
    pub a_z: DegMatrix,
    pub a_t: DegMatrix,
    pub atilde_z: DegMatrix,
    pub atilde_t: DegMatrix,
}

/// A_z, A_t from A and Ã_z, Ã_t from q^α Ã.
pub fn reductions() -> Reductions {
    let a = matrix_a();
    let at = atilde_rescaled();
    Reductions {
        a_z: DegMatrix::of(a, DegVar::Z),
        a_t: DegMatrix::of(a, DegVar::T),
        atilde_z: DegMatrix::of(&at, DegVar::Z),
        atilde_t: DegMatrix::of(&at, DegVar::T),
    }
}

/// Transition multigraph of a box: entering state e_j with v_i gives e_k
/// with the degree of the entry at row e_k ⊗ e_j*, column i.
pub type WeightGraph = BTreeMap<(usize, usize), Vec<Rational64>>;

pub fn weight_graph(m: &DegMatrix) -> WeightGraph {
    let mut g: WeightGraph = BTreeMap::new();
    for j in 1..=4 {
        for k in 1..=4 {
            for i in 1..=16 {
                if let Some(w) = m.entry((k, j), i) {
                    g.entry((j, k)).or_default().push(w);
                }
            }
        }
    }
    for v in g.values_mut() {
        v.sort();
    }
    g
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceReport {
    pub same_graph: bool,
    pub e2_e3_symmetric: bool,
    pub weight_coherent: bool,
    pub antisymmetric: bool,
}

impl CoherenceReport {
    pub fn all_pass(&self) -> bool {
        self.same_graph && self.e2_e3_symmetric && self.weight_coherent && self.antisymmetric
    }
}

fn edge_set(g: &WeightGraph) -> BTreeSet<(usize, usize, Rational64)> {
    g.iter().flat_map(|(&(j, k), ws)| ws.iter().map(move |&w| (j, k, w))).collect()
}

fn swap23(i: usize) -> usize {
    match i {
        2 => 3,
        3 => 2,
        x => x,
    }
}

/// The four facts read off the t-degree graphs of the two boxes.
pub fn weight_coherence(b: &DegMatrix, c: &DegMatrix) -> CoherenceReport {
    let gb = weight_graph(b);
    let gc = weight_graph(c);
    let eb = edge_set(&gb);
    let same_graph = eb == edge_set(&gc);
    let e2_e3_symmetric = [&gb, &gc].iter().all(|g| {
        let e = edge_set(g);
        let s: BTreeSet<_> = e.iter().map(|&(j, k, w)| (swap23(j), swap23(k), w)).collect();
        e == s
    });
    let mut weights: BTreeMap<(usize, usize), BTreeSet<Rational64>> = BTreeMap::new();
    for (j, k, w) in eb.iter().chain(edge_set(&gc).iter()) {
        weights.entry((*j, *k)).or_default().insert(*w);
    }
    let weight_coherent = weights.values().all(|s| s.len() == 1);
    let antisymmetric = weight_coherent
        && weights.iter().all(|(&(j, k), s)| {
            let w = *s.iter().next().unwrap();
            weights.get(&(k, j)).is_none_or(|r| r.iter().next() == Some(&-w))
        });
    CoherenceReport { same_graph, e2_e3_symmetric, weight_coherent, antisymmetric }
}

/// Largest z-degree contributed by one box over all entering states.
pub fn max_box_weight(m: &DegMatrix) -> Option<Rational64> {
    weight_graph(m).values().flatten().copied().max()
}
