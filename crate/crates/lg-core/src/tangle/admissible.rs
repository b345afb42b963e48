//! Admissible diagrams of links bounding disks-with-strips, and cables.

use super::braid::BraidWord;
use super::lg::{program_scalar, EvalOptions};
use super::program::{rescaled_ops, rescaling_exponent, TangleProgram};
use super::{LGValue, TangleError};
use crate::ring::{qqa, LaurentBi, Ring};
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

/// A (1-1)-tangle presentation of a link bounding `pieces` surfaces built
/// from `disks` disks and `strips` strips, with `boundaries` link components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleDiagram {
    pub disks: usize,
    pub strips: usize,
    pub boundaries: usize,
    #[serde(default = "one")]
    pub pieces: usize,
    pub program: TangleProgram,
}

fn one() -> usize {
    1
}

impl AdmissibleDiagram {
    /// Total genus from the Euler characteristic: (2·pieces − disks + strips − boundaries) / 2.
    pub fn genus(&self) -> Result<usize, TangleError> {
        let twice = 2 * self.pieces as i64 - self.disks as i64 + self.strips as i64 - self.boundaries as i64;
        if twice < 0 || twice % 2 != 0 {
            return Err(TangleError::BadBraid(format!(
                "counts (disks {}, strips {}, boundaries {}, pieces {}) give no surface",
                self.disks, self.strips, self.boundaries, self.pieces
            )));
        }
        Ok(twice as usize / 2)
    }
}

#[derive(Clone, Debug)]
pub struct AdmissibleResult {
    pub lg: LGValue,
    /// `None` when LG vanishes.
    pub span: Option<Rational64>,
    /// Monomial relating the α-free-cap scalar to LG.
    pub rescale: LaurentBi,
}

/// Evaluate with the α-free replacement caps, undo the monomial and check
/// span ≤ 2·strips.
pub fn admissible_eval(d: &AdmissibleDiagram, opts: &EvalOptions) -> Result<AdmissibleResult, TangleError> {
    d.genus()?;
    let ops = rescaled_ops()?;
    let scaled = program_scalar(&d.program, &ops, opts)?;
    let e = rescaling_exponent(&d.program)?;
    let rescale = qqa(0, e);
    let v = scaled.mul(&qqa(0, -e));
    let span = if v.is_zero() { None } else { Some(v.span_q2alpha()?) };
    let bound = Rational64::from_integer(2 * d.strips as i64);
    if let Some(s) = span {
        if s > bound {
            return Err(TangleError::BoundViolated(format!("span {s} exceeds 2 x {} strips", d.strips)));
        }
    }
    Ok(AdmissibleResult { lg: LGValue::new(v), span, rescale })
}

/// Braid of the (n, 0)-cable: each strand becomes n parallel ones, each
/// crossing an n×n grid, then −writhe full twists restore framing 0.
pub fn cable_braid(b: &BraidWord, n: usize) -> Result<BraidWord, TangleError> {
    if n == 0 {
        return Err(TangleError::BadBraid("cable needs at least one strand".into()));
    }
    if !b.is_knot() {
        return Err(TangleError::NotKnot);
    }
    let mut word = Vec::new();
    for &g in &b.word {
        let p = (g.unsigned_abs() as usize - 1) * n;
        let sgn = g.signum();
        for j in 0..n {
            for k in (0..n).rev() {
                word.push(sgn * (p + j + k + 1) as i32);
            }
        }
    }
    let w = b.writhe();
    for _ in 0..w.unsigned_abs() {
        for _ in 0..n {
            for k in 1..n {
                word.push(-w.signum() * k as i32);
            }
        }
    }
    BraidWord::new(b.strands * n, word)
}

/// The (n, 0)-cable as a (1-1)-tangle program.
pub fn cable(b: &BraidWord, n: usize) -> Result<TangleProgram, TangleError> {
    Ok(TangleProgram::braid_closure(&cable_braid(b, n)?))
}
