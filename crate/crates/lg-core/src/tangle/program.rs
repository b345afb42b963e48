//! Sliced oriented tangles and their evaluation.

use super::braid::BraidWord;
use super::TangleError;
use crate::ring::{Bounds, FracBi, LaurentBi, Mat, Ring};
use crate::reps::duality_maps;
use crate::rmatrix::{braiding, Braiding, Color, Crossings};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

/// One elementary morphism, tensored with identities on the other strands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum Slice {
    Id,
    /// Crossing of strands `pos`, `pos + 1`.
    Cross { pos: usize, sign: i8 },
    /// Cap on strands `pos`, `pos + 1`, which must have opposite colors.
    Cap { pos: usize },
    /// Cup creating two strands at `pos` with the given colors.
    Cup { pos: usize, colors: [Color; 2] },
}

/// Slices listed bottom to top, starting from the `source` word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangleProgram {
    pub source: Vec<Color>,
    pub slices: Vec<Slice>,
}

impl TangleProgram {
    pub fn new(source: Vec<Color>) -> Self {
        TangleProgram { source, slices: Vec::new() }
    }

    pub fn from_json(s: &str) -> Result<Self, TangleError> {
        let p: TangleProgram = serde_json::from_str(s).map_err(|e| TangleError::Parse(e.to_string()))?;
        p.words()?;
        Ok(p)
    }

    pub fn push(&mut self, s: Slice) -> &mut Self {
        self.slices.push(s);
        self
    }

    /// Object words before each slice and after the last one.
    pub fn words(&self) -> Result<Vec<Vec<Color>>, TangleError> {
        let mut cur = self.source.clone();
        let mut out = vec![cur.clone()];
        for (k, s) in self.slices.iter().enumerate() {
            let bad = |why: &str| TangleError::NonComposable(format!("slice {k}: {why}"));
            match *s {
                Slice::Id => {}
                Slice::Cross { pos, sign } => {
                    if pos + 1 >= cur.len() {
                        return Err(bad("crossing out of range"));
                    }
                    if sign != 1 && sign != -1 {
                        return Err(bad("crossing sign must be ±1"));
                    }
                    cur.swap(pos, pos + 1);
                }
                Slice::Cap { pos } => {
                    if pos + 1 >= cur.len() {
                        return Err(bad("cap out of range"));
                    }
                    if cur[pos] == cur[pos + 1] {
                        return Err(bad("cap joins strands of equal orientation"));
                    }
                    cur.drain(pos..pos + 2);
                }
                Slice::Cup { pos, colors } => {
                    if pos > cur.len() {
                        return Err(bad("cup out of range"));
                    }
                    if colors[0] == colors[1] {
                        return Err(bad("cup creates strands of equal orientation"));
                    }
                    cur.splice(pos..pos, colors);
                }
            }
            out.push(cur.clone());
        }
        Ok(out)
    }

    pub fn target(&self) -> Result<Vec<Color>, TangleError> {
        Ok(self.words()?.pop().unwrap())
    }

    /// `self` followed by `other` (other on top).
    pub fn then(&self, other: &TangleProgram) -> Result<TangleProgram, TangleError> {
        if self.target()? != other.source {
            return Err(TangleError::NonComposable("target and source words differ".into()));
        }
        let mut p = self.clone();
        p.slices.extend(other.slices.iter().cloned());
        Ok(p)
    }

    /// (1-1)-tangle whose closure is the closure of `b`: strands 2..n are
    /// closed on the right.
    pub fn braid_closure(b: &BraidWord) -> Self {
        use Color::*;
        let n = b.strands;
        let mut p = TangleProgram::new(vec![Down]);
        for k in 1..n {
            p.push(Slice::Cup { pos: k, colors: [Down, Up] });
        }
        for &g in b.word.iter().rev() {
            p.push(Slice::Cross { pos: g.unsigned_abs() as usize - 1, sign: g.signum() as i8 });
        }
        for k in (1..n).rev() {
            p.push(Slice::Cap { pos: k });
        }
        p
    }
}

/// Sparse columns of a 16×16 operator: (row, entry) per column.
type Columns<R> = Vec<Vec<(usize, R)>>;

/// Elementary operators over a coefficient ring.
#[derive(Clone, Debug)]
pub struct Elementary<R> {
    crossings: BTreeMap<(Color, Color, i8), Mat<R>>,
    columns: BTreeMap<(Color, Color, i8), Columns<R>>,
    /// Caps indexed by the colors they join.
    caps: BTreeMap<(Color, Color), Vec<R>>,
    /// Cups indexed by the colors they create.
    cups: BTreeMap<(Color, Color), Vec<R>>,
}

impl<R: Ring> Elementary<R> {
    /// Convert from the exact operators with `f`, failing if any entry does.
    pub fn convert<F: Fn(&FracBi) -> Option<R>>(c: &Crossings, f: F) -> Option<Self> {
        use Color::*;
        let d = duality_maps();
        let vec = |v: &[FracBi]| -> Option<Vec<R>> { v.iter().map(&f).collect() };
        let mut crossings = BTreeMap::new();
        let mut columns = BTreeMap::new();
        for (k, m) in c.iter() {
            let mut mm = Mat::zeros(16, 16);
            for (i, j, v) in m.nonzeros() {
                mm.set(i, j, f(v)?);
            }
            columns.insert(*k, super::braid::columns(&mm));
            crossings.insert(*k, mm);
        }
        let caps = BTreeMap::from([((Up, Down), vec(&d.ev_l)?), ((Down, Up), vec(&d.ev_r)?)]);
        let cups = BTreeMap::from([((Down, Up), vec(&d.coev_l)?), ((Up, Down), vec(&d.coev_r)?)]);
        Some(Elementary { crossings, columns, caps, cups })
    }

    pub fn crossing(&self, x: Color, y: Color, s: i8) -> &Mat<R> {
        &self.crossings[&(x, y, s)]
    }

    pub fn cap(&self, x: Color, y: Color) -> &[R] {
        &self.caps[&(x, y)]
    }

    pub fn cup(&self, x: Color, y: Color) -> &[R] {
        &self.cups[&(x, y)]
    }

    pub fn set_cap(&mut self, x: Color, y: Color, v: Vec<R>) {
        self.caps.insert((x, y), v);
    }

    pub fn set_cup(&mut self, x: Color, y: Color, v: Vec<R>) {
        self.cups.insert((x, y), v);
    }

    /// Entrywise image under `f`, failing if any entry does.
    pub fn map<S: Ring, F: Fn(&R) -> Option<S>>(&self, f: F) -> Option<Elementary<S>> {
        let mut crossings = BTreeMap::new();
        let mut columns = BTreeMap::new();
        for (k, m) in &self.crossings {
            let mut mm = Mat::zeros(16, 16);
            for (i, j, v) in m.nonzeros() {
                mm.set(i, j, f(v)?);
            }
            columns.insert(*k, super::braid::columns(&mm));
            crossings.insert(*k, mm);
        }
        let vecs = |t: &BTreeMap<(Color, Color), Vec<R>>| -> Option<BTreeMap<(Color, Color), Vec<S>>> {
            t.iter().map(|(k, v)| Some((*k, v.iter().map(&f).collect::<Option<Vec<S>>>()?))).collect()
        };
        Some(Elementary { crossings, columns, caps: vecs(&self.caps)?, cups: vecs(&self.cups)? })
    }
}

impl Elementary<FracBi> {
    pub fn exact(b: &Braiding) -> Result<Self, TangleError> {
        let c = crate::rmatrix::rotated_crossings(b)?;
        Ok(Self::convert(&c, |x| Some(x.clone())).unwrap())
    }
}

/// Operators for the selected braiding, over the fraction field.
pub fn exact_ops() -> Result<&'static Elementary<FracBi>, TangleError> {
    static OPS: OnceLock<Elementary<FracBi>> = OnceLock::new();
    if let Some(o) = OPS.get() {
        return Ok(o);
    }
    let o = Elementary::exact(braiding()?)?;
    Ok(OPS.get_or_init(|| o))
}

/// The same operators as Laurent polynomials.
pub fn laurent_ops() -> Result<&'static Elementary<LaurentBi>, TangleError> {
    static OPS: OnceLock<Elementary<LaurentBi>> = OnceLock::new();
    if let Some(o) = OPS.get() {
        return Ok(o);
    }
    let o = exact_ops()?
        .map(|x| x.to_laurent().ok())
        .ok_or_else(|| TangleError::NotLaurent("elementary operators".into()))?;
    Ok(OPS.get_or_init(|| o))
}

/// Operators with the K-weighted cap and cup replaced by their α-free
/// multiples q^{-2α}·ev_r and q^{2α}·coev_r.
pub fn rescaled_ops() -> Result<Elementary<LaurentBi>, TangleError> {
    let (om, mo) = crate::reps::rescaled_caps();
    let lift = |m: &Mat<FracBi>| -> Result<Vec<LaurentBi>, TangleError> {
        (0..16).map(|x| m.get(x % 4, x / 4).to_laurent().map_err(TangleError::from)).collect()
    };
    let mut o = laurent_ops()?.clone();
    o.set_cap(Color::Down, Color::Up, lift(&mo)?);
    o.set_cup(Color::Up, Color::Down, lift(&om)?);
    Ok(o)
}

/// Exponent of q^α picked up per slice when [`rescaled_ops`] replaces the exact ones.
pub fn rescaling_exponent(p: &TangleProgram) -> Result<i32, TangleError> {
    let words = p.words()?;
    Ok(p.slices
        .iter()
        .zip(&words)
        .map(|(s, w)| match *s {
            Slice::Cap { pos } if (w[pos], w[pos + 1]) == (Color::Down, Color::Up) => -2,
            Slice::Cup { colors: [Color::Up, Color::Down], .. } => 2,
            _ => 0,
        })
        .sum())
}

/// (s_lo, s_hi, u_lo, u_hi) of a list of entries.
fn entry_box<'a, I: IntoIterator<Item = &'a LaurentBi>>(it: I) -> Option<[i32; 4]> {
    let mut b = [i32::MAX, i32::MIN, i32::MAX, i32::MIN];
    for e in it {
        for (p, c) in e.terms() {
            b[2] = b[2].min(p);
            b[3] = b[3].max(p);
            for (r, _) in c.laurent_terms()? {
                b[0] = b[0].min(r);
                b[1] = b[1].max(r);
            }
        }
    }
    (b[0] <= b[1]).then_some(b)
}

/// A priori exponent box of every entry of the program's operator.
pub fn program_bounds(p: &TangleProgram, ops: &Elementary<LaurentBi>) -> Result<Bounds, TangleError> {
    let words = p.words()?;
    let mut acc = [0i32; 4];
    for (s, w) in p.slices.iter().zip(&words) {
        let b = match *s {
            Slice::Id => continue,
            Slice::Cross { pos, sign } => entry_box(ops.crossing(w[pos], w[pos + 1], sign).nonzeros().map(|(_, _, v)| v)),
            Slice::Cap { pos } => entry_box(ops.cap(w[pos], w[pos + 1])),
            Slice::Cup { colors, .. } => entry_box(ops.cup(colors[0], colors[1])),
        }
        .ok_or_else(|| TangleError::Interpolation("operator entries without a finite box".into()))?;
        for k in 0..4 {
            acc[k] += b[k];
        }
    }
    Ok(Bounds { s_lo: acc[0], s_hi: acc[1], u_lo: acc[2], u_hi: acc[3] })
}

/// Sparse vector on a tensor power: strand k is the base-4 digit k.
pub type SparseVec<R> = HashMap<u64, R>;

fn digit(idx: u64, k: usize) -> usize {
    ((idx >> (2 * k)) & 3) as usize
}

fn insert_pair(idx: u64, pos: usize, a: usize, b: usize) -> u64 {
    let low = idx & ((1u64 << (2 * pos)) - 1);
    let high = idx >> (2 * pos);
    low | ((a as u64) << (2 * pos)) | ((b as u64) << (2 * pos + 2)) | (high << (2 * pos + 4))
}

fn remove_pair(idx: u64, pos: usize) -> u64 {
    let low = idx & ((1u64 << (2 * pos)) - 1);
    let high = idx >> (2 * pos + 4);
    low | (high << (2 * pos))
}

fn replace_pair(idx: u64, pos: usize, a: usize, b: usize) -> u64 {
    let mask = !(0xFu64 << (2 * pos));
    (idx & mask) | ((a as u64) << (2 * pos)) | ((b as u64) << (2 * pos + 2))
}

fn accumulate<R: Ring>(out: &mut SparseVec<R>, k: u64, v: R) {
    match out.get_mut(&k) {
        Some(x) => x.add_assign(&v),
        None => {
            out.insert(k, v);
        }
    }
}

/// Apply the program to a sparse vector on its source word.
pub fn eval_sparse<R: Ring>(
    p: &TangleProgram,
    ops: &Elementary<R>,
    input: SparseVec<R>,
) -> Result<SparseVec<R>, TangleError> {
    let words = p.words()?;
    if words.iter().any(|w| w.len() > 31) {
        return Err(TangleError::TooManyStrands(words.iter().map(Vec::len).max().unwrap(), 31));
    }
    let mut state = input;
    for (s, w) in p.slices.iter().zip(&words) {
        let mut next: SparseVec<R> = HashMap::with_capacity(state.len());
        match *s {
            Slice::Id => continue,
            Slice::Cross { pos, sign } => {
                let cols = &ops.columns[&(w[pos], w[pos + 1], sign)];
                for (idx, c) in &state {
                    for (r, m) in &cols[digit(*idx, pos) * 4 + digit(*idx, pos + 1)] {
                        accumulate(&mut next, replace_pair(*idx, pos, r / 4, r % 4), c.mul(m));
                    }
                }
            }
            Slice::Cap { pos } => {
                let cap = ops.cap(w[pos], w[pos + 1]);
                for (idx, c) in &state {
                    let m = &cap[digit(*idx, pos) * 4 + digit(*idx, pos + 1)];
                    if !m.is_zero() {
                        accumulate(&mut next, remove_pair(*idx, pos), c.mul(m));
                    }
                }
            }
            Slice::Cup { pos, colors } => {
                let cup = ops.cup(colors[0], colors[1]);
                for (idx, c) in &state {
                    for (r, m) in cup.iter().enumerate() {
                        if !m.is_zero() {
                            accumulate(&mut next, insert_pair(*idx, pos, r / 4, r % 4), c.mul(m));
                        }
                    }
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        state = next;
    }
    Ok(state)
}

/// Packed index ↔ row-major index with the first strand most significant.
pub fn packed_to_dense(idx: u64, len: usize) -> usize {
    (0..len).fold(0, |acc, k| acc * 4 + digit(idx, k))
}

pub fn dense_to_packed(mut i: usize, len: usize) -> u64 {
    let mut idx = 0u64;
    for k in (0..len).rev() {
        idx |= ((i % 4) as u64) << (2 * k);
        i /= 4;
    }
    idx
}

/// Full operator of the program, built column by column from sparse runs.
pub fn eval_program<R: Ring>(p: &TangleProgram, ops: &Elementary<R>) -> Result<Mat<R>, TangleError> {
    let target = p.target()?;
    let (ns, nt) = (p.source.len(), target.len());
    let mut m = Mat::zeros(4usize.pow(nt as u32), 4usize.pow(ns as u32));
    for j in 0..m.cols() {
        let out = eval_sparse(p, ops, HashMap::from([(dense_to_packed(j, ns), R::one())]))?;
        for (idx, v) in out {
            m.set(packed_to_dense(idx, nt), j, v);
        }
    }
    Ok(m)
}

fn id_pow<R: Ring>(n: usize) -> Mat<R> {
    Mat::identity(4usize.pow(n as u32))
}

/// Reference evaluation composing dense Kronecker products.
pub fn eval_dense<R: Ring>(p: &TangleProgram, ops: &Elementary<R>) -> Result<Mat<R>, TangleError> {
    let words = p.words()?;
    let mut acc: Mat<R> = id_pow(p.source.len());
    for (s, w) in p.slices.iter().zip(&words) {
        let n = w.len();
        let step = match *s {
            Slice::Id => continue,
            Slice::Cross { pos, sign } => {
                id_pow::<R>(pos).kron(ops.crossing(w[pos], w[pos + 1], sign)).kron(&id_pow(n - pos - 2))
            }
            Slice::Cap { pos } => id_pow::<R>(pos)
                .kron(&Mat::row(ops.cap(w[pos], w[pos + 1]).to_vec()))
                .kron(&id_pow(n - pos - 2)),
            Slice::Cup { pos, colors } => id_pow::<R>(pos)
                .kron(&Mat::column(ops.cup(colors[0], colors[1]).to_vec()))
                .kron(&id_pow(n - pos)),
        };
        acc = step.mul(&acc);
    }
    Ok(acc)
}
