//! Braid words and their closures.

use super::TangleError;
use crate::ring::{Mat, Ring};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// A braid on `strands` strands; letter ±i is σ_i^{±1}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidWord {
    pub strands: usize,
    pub word: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self, TangleError> {
        if strands == 0 {
            return Err(TangleError::BadBraid("at least one strand required".into()));
        }
        for &g in &word {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(TangleError::BadBraid(format!("letter {g} out of range for {strands} strands")));
            }
        }
        Ok(BraidWord { strands, word })
    }

    pub fn from_json(s: &str) -> Result<Self, TangleError> {
        let b: BraidWord = serde_json::from_str(s).map_err(|e| TangleError::Parse(e.to_string()))?;
        Self::new(b.strands, b.word)
    }

    pub fn writhe(&self) -> i32 {
        self.word.iter().map(|g| g.signum()).sum()
    }

    /// Underlying permutation: position after the braid of the strand starting at i.
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &g in &self.word {
            let i = g.unsigned_abs() as usize - 1;
            for p in pos.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        pos
    }

    pub fn num_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut n = 0;
        for i in 0..self.strands {
            if !seen[i] {
                n += 1;
                let mut j = i;
                while !seen[j] {
                    seen[j] = true;
                    j = perm[j];
                }
            }
        }
        n
    }

    pub fn is_knot(&self) -> bool {
        self.num_components() == 1
    }

    pub fn mirror(&self) -> Self {
        BraidWord { strands: self.strands, word: self.word.iter().map(|g| -g).collect() }
    }
}

/// Nonzero entries of each column of a 16×16 operator.
pub(crate) fn columns<R: Ring>(m: &Mat<R>) -> Vec<Vec<(usize, R)>> {
    let mut cols = vec![Vec::new(); m.cols()];
    for (i, j, v) in m.nonzeros() {
        cols[j].push((i, v.clone()));
    }
    cols
}

fn digit(idx: u64, k: usize) -> usize {
    ((idx >> (2 * k)) & 3) as usize
}

fn set_digits(idx: u64, k: usize, a: usize, b: usize) -> u64 {
    let mask = !(0xFu64 << (2 * k));
    (idx & mask) | ((a as u64) << (2 * k)) | ((b as u64) << (2 * k + 2))
}

/// Apply the braid to one basis vector, rightmost letter first.
fn propagate<R: Ring>(
    start: u64,
    coeff: R,
    word: &[i32],
    pos: &[Vec<(usize, R)>],
    neg: &[Vec<(usize, R)>],
) -> HashMap<u64, R> {
    let mut state: HashMap<u64, R> = HashMap::from([(start, coeff)]);
    for &g in word.iter().rev() {
        let k = g.unsigned_abs() as usize - 1;
        let cols = if g > 0 { pos } else { neg };
        let mut next: HashMap<u64, R> = HashMap::with_capacity(state.len() * 2);
        for (idx, c) in state {
            let col = digit(idx, k) * 4 + digit(idx, k + 1);
            for (r, m) in &cols[col] {
                let ni = set_digits(idx, k, r / 4, r % 4);
                let v = c.mul(m);
                match next.get_mut(&ni) {
                    Some(x) => x.add_assign(&v),
                    None => {
                        next.insert(ni, v);
                    }
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        state = next;
    }
    state
}

/// Closure of strands 2..n with weights `kinv` (diagonal of π(K)^{-1}),
/// returned as the 4×4 operator left on strand 1. With `first_only`, only
/// column 0 is computed.
pub fn closure_operator<R: Ring>(
    b: &BraidWord,
    r: &Mat<R>,
    ri: &Mat<R>,
    kinv: &[R],
    first_only: bool,
) -> Mat<R> {
    let (pos, neg) = (columns(r), columns(ri));
    let n = b.strands;
    let starts: Vec<u64> = (0..4u64.pow(n as u32 - 1)).collect();
    let ncols = if first_only { 1 } else { 4 };
    let mut out = Mat::<R>::zeros(4, 4);
    for a in 0..ncols {
        let parts: Vec<[R; 4]> = starts
            .par_iter()
            .map(|&js| {
                let mut w = R::one();
                for k in 0..n - 1 {
                    w = w.mul(&kinv[digit(js, k)]);
                }
                let start = (js << 2) | a as u64;
                let st = propagate(start, w, &b.word, &pos, &neg);
                let mut acc = [R::zero(), R::zero(), R::zero(), R::zero()];
                for (bidx, slot) in acc.iter_mut().enumerate() {
                    if let Some(v) = st.get(&((js << 2) | bidx as u64)) {
                        *slot = v.clone();
                    }
                }
                acc
            })
            .collect();
        for p in parts {
            for (bidx, v) in p.into_iter().enumerate() {
                let cur = out.get(bidx, a).add(&v);
                out.set(bidx, a, cur);
            }
        }
    }
    out
}

/// Scalar of the closure, checking that the strand-1 operator is scalar.
pub fn closure_scalar<R: Ring>(b: &BraidWord, r: &Mat<R>, ri: &Mat<R>, kinv: &[R]) -> Result<R, TangleError> {
    let m = closure_operator(b, r, ri, kinv, false);
    m.scalar_value().ok_or(TangleError::SchurFailure)
}
