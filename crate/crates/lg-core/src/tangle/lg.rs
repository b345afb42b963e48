//! The invariant of a braid closure, exactly or by modular interpolation.

use super::braid::{closure_scalar, BraidWord};
use super::program::{eval_program, eval_sparse, laurent_ops, program_bounds, Elementary, TangleProgram};
use super::{LGValue, TangleError};
use crate::ring::{
    interpolate_grid_stepped, lift_symmetric, su, Bounds, Fp, FracBi, LaurentBi, Mat, RatQ, Ring, P61, P62,
};
use crate::rmatrix::{braiding, closing_weights, Color};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashMap};

/// Evaluation strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Exact up to three strands, interpolation beyond.
    Auto,
    Exact,
    Interp,
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(Mode::Auto),
            "exact" => Ok(Mode::Exact),
            "interp" => Ok(Mode::Interp),
            _ => Err(format!("unknown mode {s}")),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct EvalOptions {
    pub mode: Mode,
    pub max_strands: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { mode: Mode::Auto, max_strands: 8 }
    }
}

pub fn lg_from_braid(b: &BraidWord) -> Result<LGValue, TangleError> {
    lg_from_braid_with(b, &EvalOptions::default())
}

pub fn lg_from_braid_with(b: &BraidWord, opts: &EvalOptions) -> Result<LGValue, TangleError> {
    if b.strands > opts.max_strands {
        return Err(TangleError::TooManyStrands(b.strands, opts.max_strands));
    }
    let exact = match opts.mode {
        Mode::Exact => true,
        Mode::Interp => false,
        Mode::Auto => b.strands <= 3,
    };
    let v = if exact { lg_exact(b)? } else { lg_interp(b)? };
    Ok(LGValue::new(v))
}

/// Exact closure over Laurent polynomials, or the fraction field if Ř has
/// non-polynomial entries.
pub fn lg_exact(b: &BraidWord) -> Result<LaurentBi, TangleError> {
    let br = braiding()?;
    let w = closing_weights();
    match br.laurent() {
        Some((r, ri)) => {
            let wl: Vec<LaurentBi> = w.iter().map(|x| x.to_laurent()).collect::<Result<_, _>>()?;
            closure_scalar(b, &r, &ri, &wl)
        }
        None => {
            let v = closure_scalar(b, &br.r, &br.rinv, &w)?;
            v.to_laurent().map_err(|_| TangleError::NotLaurent(v.to_string()))
        }
    }
}

/// (s_lo, s_hi, u_lo, u_hi) over the support of the entries.
fn support(entries: &[&LaurentBi]) -> Option<(i32, i32, i32, i32)> {
    let mut b = (i32::MAX, i32::MIN, i32::MAX, i32::MIN);
    for e in entries {
        for (p, c) in e.terms() {
            b.2 = b.2.min(p);
            b.3 = b.3.max(p);
            for (r, _) in c.laurent_terms()? {
                b.0 = b.0.min(r);
                b.1 = b.1.max(r);
            }
        }
    }
    (b.0 <= b.1).then_some(b)
}

fn mat_support(m: &Mat<LaurentBi>) -> Option<(i32, i32, i32, i32)> {
    support(&m.nonzeros().map(|(_, _, v)| v).collect::<Vec<_>>())
}

/// A priori exponent box for the closure of `b`.
pub fn closure_bounds(b: &BraidWord, r: &Mat<LaurentBi>, ri: &Mat<LaurentBi>, w: &[LaurentBi]) -> Option<Bounds> {
    let (pr, nr, wr) = (mat_support(r)?, mat_support(ri)?, support(&w.iter().collect::<Vec<_>>())?);
    let mut acc = [0i32; 4];
    let mut add = |x: (i32, i32, i32, i32), k: i32| {
        acc[0] += k * x.0;
        acc[1] += k * x.1;
        acc[2] += k * x.2;
        acc[3] += k * x.3;
    };
    let npos = b.word.iter().filter(|g| **g > 0).count() as i32;
    add(pr, npos);
    add(nr, b.word.len() as i32 - npos);
    add(wr, b.strands as i32 - 1);
    Some(Bounds { s_lo: acc[0], s_hi: acc[1], u_lo: acc[2], u_hi: acc[3] })
}

/// Something that can be evaluated at a point modulo a prime.
pub(crate) trait PointEval: Sync {
    fn at<const P: u64>(&self, s: Fp<P>, u: Fp<P>) -> Option<Fp<P>>;
}

struct BraidEval<'a> {
    b: &'a BraidWord,
    r: &'a Mat<LaurentBi>,
    ri: &'a Mat<LaurentBi>,
    w: &'a [LaurentBi],
}

impl PointEval for BraidEval<'_> {
    fn at<const P: u64>(&self, s: Fp<P>, u: Fp<P>) -> Option<Fp<P>> {
        let rp = self.r.eval_at(s, u)?;
        let rip = self.ri.eval_at(s, u)?;
        let wp: Vec<Fp<P>> = self.w.iter().map(|x| x.eval(s, u)).collect::<Option<_>>()?;
        closure_scalar(self.b, &rp, &rip, &wp).ok()
    }
}

fn reconstruct<const P: u64, E: PointEval>(e: &E, bounds: Bounds, step: u32, seed: u64) -> BTreeMap<(i32, i32), i128> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = |s, u| e.at::<P>(s, u);
    interpolate_grid_stepped(bounds, (step, step), &mut rng, f)
        .into_iter()
        .map(|(k, v)| (k, lift_symmetric(v)))
        .collect()
}

fn to_laurent(c: &BTreeMap<(i32, i32), i128>) -> Option<LaurentBi> {
    let mut acc = LaurentBi::zero();
    for (&(a, e), &v) in c {
        acc = acc.add(&su(a, e).scale(&RatQ::from_int(i64::try_from(v).ok()?)));
    }
    Some(acc)
}

fn shrink(b: Bounds, step: i32) -> Bounds {
    Bounds {
        s_lo: b.s_lo.div_euclid(step) + (b.s_lo.rem_euclid(step) != 0) as i32,
        s_hi: b.s_hi.div_euclid(step),
        u_lo: b.u_lo.div_euclid(step) + (b.u_lo.rem_euclid(step) != 0) as i32,
        u_hi: b.u_hi.div_euclid(step),
    }
}

/// Reconstruct from values modulo two primes inside the a priori exponent
/// box, trying the coarse (4ℤ)² lattice first, then confirm at fresh points.
pub(crate) fn interp_in_box<E: PointEval>(e: &E, bounds: Bounds) -> Result<LaurentBi, TangleError> {
    let mut last = String::new();
    for step in [4u32, 1] {
        let sb = shrink(bounds, step as i32);
        let c1 = reconstruct::<P61, E>(e, sb, step, 101);
        let c2 = reconstruct::<P62, E>(e, sb, step, 202);
        if c1 != c2 {
            last = format!("residues disagree between primes at step {step}");
            continue;
        }
        let Some(v) = to_laurent(&c1) else {
            last = "coefficient overflow".into();
            continue;
        };
        if confirm(e, &v) {
            return Ok(v);
        }
        last = format!("check at fresh points failed at step {step}");
    }
    Err(TangleError::Interpolation(last))
}

pub fn lg_interp(b: &BraidWord) -> Result<LaurentBi, TangleError> {
    let br = braiding()?;
    let (r, ri) = br.laurent().ok_or_else(|| TangleError::NotLaurent("braiding entries".into()))?;
    let w: Vec<LaurentBi> = closing_weights().iter().map(FracBi::to_laurent).collect::<Result<_, _>>()?;
    let bounds = closure_bounds(b, &r, &ri, &w).ok_or_else(|| TangleError::Interpolation("unbounded support".into()))?;
    interp_in_box(&BraidEval { b, r: &r, ri: &ri, w: &w }, bounds)
}

fn confirm<E: PointEval>(e: &E, v: &LaurentBi) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let mut checked = 0;
    while checked < 3 {
        let (s, u) = (Fp::<P61>::random(&mut rng), Fp::<P61>::random(&mut rng));
        let (Some(x), Some(y)) = (e.at::<P61>(s, u), v.eval(s, u)) else { continue };
        if x != y {
            return false;
        }
        checked += 1;
    }
    true
}

struct ProgramEval<'a> {
    p: &'a TangleProgram,
    ops: &'a Elementary<LaurentBi>,
}

impl ProgramEval<'_> {
    fn operator<const P: u64>(&self, s: Fp<P>, u: Fp<P>, inputs: usize) -> Option<Mat<Fp<P>>> {
        let ops = self.ops.map(|x| x.eval(s, u))?;
        let mut m = Mat::zeros(4, inputs);
        for a in 0..inputs {
            let out = eval_sparse(self.p, &ops, HashMap::from([(a as u64, Fp::<P>::one())])).ok()?;
            for (idx, v) in out {
                m.set(idx as usize, a, v);
            }
        }
        Some(m)
    }
}

impl PointEval for ProgramEval<'_> {
    fn at<const P: u64>(&self, s: Fp<P>, u: Fp<P>) -> Option<Fp<P>> {
        Some(*self.operator(s, u, 1)?.get(0, 0))
    }
}

fn check_one_one(p: &TangleProgram) -> Result<(), TangleError> {
    if p.source != [Color::Down] || p.target()? != [Color::Down] {
        return Err(TangleError::NonComposable("expected a (1-1)-tangle from V to V".into()));
    }
    Ok(())
}

/// The scalar of a (1-1)-tangle program with the given operators.
pub fn program_scalar(p: &TangleProgram, ops: &Elementary<LaurentBi>, opts: &EvalOptions) -> Result<LaurentBi, TangleError> {
    check_one_one(p)?;
    let width = p.words()?.iter().map(Vec::len).max().unwrap_or(1);
    if width > opts.max_strands {
        return Err(TangleError::TooManyStrands(width, opts.max_strands));
    }
    let exact = match opts.mode {
        Mode::Exact => true,
        Mode::Interp => false,
        Mode::Auto => width <= 4,
    };
    if exact {
        let m = eval_program(p, ops)?;
        return m.scalar_value().ok_or(TangleError::SchurFailure);
    }
    let e = ProgramEval { p, ops };
    let v = interp_in_box(&e, program_bounds(p, ops)?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let (s, u) = (Fp::<P61>::random(&mut rng), Fp::<P61>::random(&mut rng));
    if let Some(m) = e.operator(s, u, 4) {
        if m.scalar_value().is_none() {
            return Err(TangleError::SchurFailure);
        }
    }
    Ok(v)
}

/// LG of the closure of a (1-1)-tangle program.
pub fn lg_from_program(p: &TangleProgram, opts: &EvalOptions) -> Result<LGValue, TangleError> {
    Ok(LGValue::new(program_scalar(p, laurent_ops()?, opts)?))
}
