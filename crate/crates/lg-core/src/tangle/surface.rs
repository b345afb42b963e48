//! Seifert-surface evaluation: a bottom tangle B is doubled into G(K), whose
//! tensor is read in the W, W* coordinates and closed with boxes b and c.

use super::braid::BraidWord;
use super::program::{eval_sparse, exact_ops, Slice, TangleProgram};
use super::{LGValue, TangleError};
use crate::basis::{atilde_rescaled, matrix_a, pair_index};
use crate::rmatrix::Color;
use crate::ring::{qqa, Degree, FracBi, LaurentBi, Mat, Ring};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

/// One step of an undoubled bottom tangle. Positions count band ends.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum BandOp {
    /// A new component A → B with ends at `pos`, `pos + 1`.
    Arc { pos: usize },
    /// The band at `pos` crosses the band at `pos + 1`; positive puts the left one over.
    Cross { pos: usize, sign: i8 },
    /// Full twists of the band at `pos`.
    Twist { pos: usize, turns: i32 },
}

/// The (4g-0)-tangle B as a sequence of band moves on an empty start.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BottomTangle {
    pub genus: usize,
    pub ops: Vec<BandOp>,
}

/// End of a component: (component, is the start A).
type End = (usize, bool);

impl BottomTangle {
    pub fn from_json(s: &str) -> Result<Self, TangleError> {
        let b: BottomTangle = serde_json::from_str(s).map_err(|e| TangleError::Parse(e.to_string()))?;
        b.endpoints()?;
        Ok(b)
    }

    /// Two clasped bands with `t1`, `t2` full twists: the standard genus-1 surface.
    pub fn genus_one(t1: i32, t2: i32, clasp: i8) -> Self {
        use BandOp::*;
        BottomTangle {
            genus: 1,
            ops: vec![
                Arc { pos: 0 },
                Arc { pos: 2 },
                Cross { pos: 1, sign: clasp },
                Twist { pos: 0, turns: t1 },
                Twist { pos: 1, turns: t2 },
            ],
        }
    }

    pub fn trefoil() -> Self {
        Self::genus_one(-1, -1, 1)
    }

    pub fn figure_eight() -> Self {
        Self::genus_one(1, -1, 1)
    }

    /// Ends left to right; errors unless they read A_1, A_2, B_1, B_2, A_3, ...
    pub fn endpoints(&self) -> Result<Vec<End>, TangleError> {
        let bad = |m: String| TangleError::NonComposable(m);
        let mut ends: Vec<End> = Vec::new();
        let mut next = 0;
        for (k, op) in self.ops.iter().enumerate() {
            match *op {
                BandOp::Arc { pos } => {
                    if pos > ends.len() {
                        return Err(bad(format!("band op {k}: arc out of range")));
                    }
                    ends.splice(pos..pos, [(next, true), (next, false)]);
                    next += 1;
                }
                BandOp::Cross { pos, sign } => {
                    if pos + 1 >= ends.len() || sign.abs() != 1 {
                        return Err(bad(format!("band op {k}: bad crossing")));
                    }
                    ends.swap(pos, pos + 1);
                }
                BandOp::Twist { pos, .. } => {
                    if pos >= ends.len() {
                        return Err(bad(format!("band op {k}: twist out of range")));
                    }
                }
            }
        }
        if next != 2 * self.genus {
            return Err(bad(format!("{next} components for genus {}", self.genus)));
        }
        let mut label = BTreeMap::new();
        for (i, e) in ends.iter().enumerate() {
            if e.1 {
                label.insert(e.0, i / 4 * 2 + i % 2);
            }
        }
        let ok = ends.iter().enumerate().all(|(i, e)| {
            let want = i / 4 * 2 + i % 2;
            label[&e.0] == want && e.1 == (i % 4 < 2)
        });
        if !ok {
            return Err(bad("endpoints are not in the order A1 A2 B1 B2 ...".into()));
        }
        Ok(ends)
    }

    /// G(K): each band becomes an antiparallel pair of strands.
    pub fn double(&self) -> Result<TangleProgram, TangleError> {
        use Color::*;
        self.endpoints()?;
        let mut p = TangleProgram::new(vec![]);
        for op in &self.ops {
            match *op {
                BandOp::Arc { pos } => {
                    p.push(Slice::Cup { pos: 2 * pos, colors: [Down, Up] });
                    p.push(Slice::Cup { pos: 2 * pos + 1, colors: [Up, Down] });
                }
                BandOp::Cross { pos, sign } => {
                    for k in [2 * pos + 1, 2 * pos, 2 * pos + 2, 2 * pos + 1] {
                        p.push(Slice::Cross { pos: k, sign });
                    }
                }
                BandOp::Twist { pos, turns } => {
                    for _ in 0..2 * turns.unsigned_abs() {
                        p.push(Slice::Cross { pos: 2 * pos, sign: turns.signum() as i8 });
                    }
                }
            }
        }
        Ok(p)
    }
}

/// Coefficients λ of G(K) in (B* ⊗ B* ⊗ B ⊗ B)^{⊗g}, keyed by 0-based labels.
#[derive(Clone, Debug, PartialEq)]
pub struct GTensor {
    pub genus: usize,
    pub coeffs: BTreeMap<Vec<u8>, FracBi>,
}

impl GTensor {
    /// True if every coefficient lies in ℚ(q).
    pub fn alpha_free(&self) -> bool {
        self.coeffs.values().all(FracBi::has_trivial_u)
    }
}

#[derive(Clone, Debug)]
pub struct SurfaceResult {
    pub g: GTensor,
    pub lg: LGValue,
    /// Monomial m: the boxes close λ to m·LG, whose degrees are `dz`, `dt`.
    pub rescale: LaurentBi,
    pub dz: Degree,
    pub dt: Degree,
}

struct Frames {
    a: Mat<FracBi>,
    a_inv: Mat<FracBi>,
    c: Mat<FracBi>,
    c_inv: Mat<FracBi>,
}

fn frames() -> &'static Frames {
    static F: OnceLock<Frames> = OnceLock::new();
    F.get_or_init(|| {
        let a = matrix_a().mat.clone();
        let c = atilde_rescaled().mat;
        Frames { a_inv: a.inverse().unwrap(), c_inv: c.inverse().unwrap(), a, c }
    })
}

fn is_dual_slot(k: usize) -> bool {
    k % 4 < 2
}

/// Coordinates of a state on (V ⊗ V*)^{⊗4g}: W* slots through (q^α Ã)^{-1},
/// W slots through A^{-1}.
fn to_gtensor(genus: usize, state: &HashMap<u64, FracBi>) -> GTensor {
    let f = frames();
    let n = 4 * genus;
    let mut coeffs: BTreeMap<Vec<u8>, FracBi> = BTreeMap::new();
    for (idx, c) in state {
        let mut partial: Vec<(Vec<u8>, FracBi)> = vec![(Vec::with_capacity(n), c.clone())];
        for k in 0..n {
            let x = ((idx >> (4 * k)) & 3) as usize;
            let y = ((idx >> (4 * k + 2)) & 3) as usize;
            let inv = if is_dual_slot(k) { &f.c_inv } else { &f.a_inv };
            let col = pair_index(x + 1, y + 1);
            let mut next = Vec::new();
            for (key, v) in &partial {
                for w in 0..16 {
                    let m = inv.get(w, col);
                    if !m.is_zero() {
                        let mut key = key.clone();
                        key.push(w as u8);
                        next.push((key, v.mul(m)));
                    }
                }
            }
            partial = next;
        }
        for (key, v) in partial {
            match coeffs.get_mut(&key) {
                Some(x) => x.add_assign(&v),
                None => {
                    coeffs.insert(key, v);
                }
            }
        }
    }
    coeffs.retain(|_, v| !v.is_zero());
    GTensor { genus, coeffs }
}

/// Run e_in through the boxes, last slot first: box(v_w ⊗ e_j) = Σ_k M_w[k][j] e_k,
/// with M_w read off A (b) or q^α Ã (c).
pub fn close_with_boxes(g: &GTensor, e_in: usize) -> Vec<FracBi> {
    let f = frames();
    let mut out = vec![FracBi::zero(); 4];
    for (key, lam) in &g.coeffs {
        let mut v = vec![FracBi::zero(); 4];
        v[e_in] = lam.clone();
        for (k, &w) in key.iter().enumerate().rev() {
            let m = if is_dual_slot(k) { &f.c } else { &f.a };
            let mut nv = vec![FracBi::zero(); 4];
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                for (kk, slot) in nv.iter_mut().enumerate() {
                    let e = m.get(pair_index(kk + 1, j + 1), w as usize);
                    if !e.is_zero() {
                        slot.add_assign(&vj.mul(e));
                    }
                }
            }
            v = nv;
        }
        for (o, x) in out.iter_mut().zip(v) {
            o.add_assign(&x);
        }
    }
    out
}

/// Evaluate LG of ∂Σ for the surface built from `b`.
pub fn surface_pipeline(b: &BottomTangle) -> Result<SurfaceResult, TangleError> {
    let p = b.double()?;
    let state = eval_sparse(&p, exact_ops()?, HashMap::from([(0u64, FracBi::one())]))?;
    // Each K-weighted cup carries q^{-2α}; the tensor is α-free once these are removed.
    let cups = p.slices.iter().filter(|s| matches!(s, Slice::Cup { colors: [Color::Up, Color::Down], .. })).count();
    let rescale = qqa(0, 2 * cups as i32);
    let m = FracBi::from_laurent(rescale.clone());
    let state = state.into_iter().map(|(k, v)| (k, v.mul(&m))).collect();
    let g = to_gtensor(b.genus, &state);
    if let Some((k, v)) = g.coeffs.iter().find(|(_, v)| !v.has_trivial_u()) {
        return Err(TangleError::USupport(format!("lambda{k:?} = {v}")));
    }
    let out = close_with_boxes(&g, 0);
    if out[1..].iter().any(|x| !x.is_zero()) {
        return Err(TangleError::SchurFailure);
    }
    let scaled = out[0].to_laurent().map_err(|_| TangleError::NotLaurent(out[0].to_string()))?;
    let (dz, dt) = (scaled.deg_z(), scaled.deg_t());
    let v = scaled.mul(&qqa(0, -2 * cups as i32));
    Ok(SurfaceResult { g, lg: LGValue::new(v), rescale, dz, dt })
}

/// [`surface_pipeline`], erroring unless the value equals LG of `reference`.
pub fn surface_pipeline_checked(b: &BottomTangle, reference: &BraidWord) -> Result<SurfaceResult, TangleError> {
    let r = surface_pipeline(b)?;
    let want = super::lg_from_braid(reference)?;
    if r.lg.value != want.value {
        return Err(TangleError::BoundViolated(format!("surface value {} differs from braid value {}", r.lg.value, want.value)));
    }
    Ok(r)
}
