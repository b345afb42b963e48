//! Reconstruction of bivariate Laurent polynomials from values modulo a prime.

use super::{Field, Fp, Ring};
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Exponent box s^[s_lo, s_hi] × u^[u_lo, u_hi].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub s_lo: i32,
    pub s_hi: i32,
    pub u_lo: i32,
    pub u_hi: i32,
}

impl Bounds {
    pub fn s_len(&self) -> usize {
        (self.s_hi - self.s_lo + 1).max(0) as usize
    }

    pub fn u_len(&self) -> usize {
        (self.u_hi - self.u_lo + 1).max(0) as usize
    }
}

/// Coefficients (index = degree) of the polynomial through (xs[i], ys[i]).
pub fn interpolate_1d<F: Field>(xs: &[F], ys: &[F]) -> Vec<F> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            let num = dd[i].sub(&dd[i - 1]);
            let den = xs[i].sub(&xs[i - k]);
            dd[i] = num.mul(&den.inv().expect("distinct nodes"));
        }
    }
    let mut coeffs = vec![F::zero(); n];
    for k in (0..n).rev() {
        for j in (1..n).rev() {
            let t = coeffs[j - 1].sub(&coeffs[j].mul(&xs[k]));
            coeffs[j] = t;
        }
        coeffs[0] = dd[k].sub(&coeffs[0].mul(&xs[k]));
    }
    coeffs
}

/// Random base points whose k-th powers are distinct and nonzero.
fn distinct_points<const P: u64, R: Rng + ?Sized>(n: usize, k: u64, rng: &mut R) -> Vec<Fp<P>> {
    let mut v: Vec<Fp<P>> = Vec::with_capacity(n);
    let mut pw: Vec<Fp<P>> = Vec::with_capacity(n);
    while v.len() < n {
        let x = Fp::<P>::random(rng);
        let y = x.pow_u64(k);
        if !y.is_zero() && !pw.contains(&y) {
            v.push(x);
            pw.push(y);
        }
    }
    v.shuffle(rng);
    v
}

/// Recover the coefficients of f(s, u) = Σ c_{a,b} s^a u^b inside `bounds`
/// from evaluations on a random grid. Points where `f` returns `None` are
/// resampled.
pub fn interpolate_grid<const P: u64, R, F>(
    bounds: Bounds,
    rng: &mut R,
    f: F,
) -> BTreeMap<(i32, i32), Fp<P>>
where
    R: Rng + ?Sized,
    F: Fn(Fp<P>, Fp<P>) -> Option<Fp<P>> + Sync,
{
    interpolate_grid_stepped(bounds, (1, 1), rng, f)
}

/// As [`interpolate_grid`] for f supported on exponents divisible by
/// `steps`: `bounds` are given in units of the steps, and `f` is still called
/// with base points (s, u).
pub fn interpolate_grid_stepped<const P: u64, R, F>(
    bounds: Bounds,
    steps: (u32, u32),
    rng: &mut R,
    f: F,
) -> BTreeMap<(i32, i32), Fp<P>>
where
    R: Rng + ?Sized,
    F: Fn(Fp<P>, Fp<P>) -> Option<Fp<P>> + Sync,
{
    let ns = bounds.s_len();
    let nu = bounds.u_len();
    let mut out = BTreeMap::new();
    if ns == 0 || nu == 0 {
        return out;
    }
    let (vals, ss, us) = loop {
        let ss = distinct_points::<P, R>(ns, steps.0 as u64, rng);
        let us = distinct_points::<P, R>(nu, steps.1 as u64, rng);
        let grid: Vec<(usize, usize)> =
            (0..ns).flat_map(|i| (0..nu).map(move |j| (i, j))).collect();
        let vals: Option<Vec<Fp<P>>> = grid
            .par_iter()
            .map(|&(i, j)| {
                let v = f(ss[i], us[j])?;
                let sc = ss[i].powi(-(bounds.s_lo as i64) * steps.0 as i64)?;
                let uc = us[j].powi(-(bounds.u_lo as i64) * steps.1 as i64)?;
                Some(v.mul(&sc).mul(&uc))
            })
            .collect();
        if let Some(v) = vals {
            let ss: Vec<Fp<P>> = ss.iter().map(|x| x.pow_u64(steps.0 as u64)).collect();
            let us: Vec<Fp<P>> = us.iter().map(|x| x.pow_u64(steps.1 as u64)).collect();
            break (v, ss, us);
        }
    };
    // For each s node, interpolate in u.
    let rows: Vec<Vec<Fp<P>>> = (0..ns)
        .into_par_iter()
        .map(|i| interpolate_1d(&us, &vals[i * nu..(i + 1) * nu]))
        .collect();
    for b in 0..nu {
        let col: Vec<Fp<P>> = rows.iter().map(|r| r[b]).collect();
        let cs = interpolate_1d(&ss, &col);
        for (a, c) in cs.into_iter().enumerate() {
            if !c.is_zero() {
                out.insert(((bounds.s_lo + a as i32) * steps.0 as i32, (bounds.u_lo + b as i32) * steps.1 as i32), c);
            }
        }
    }
    out
}

/// Symmetric integer representative of x.
pub fn lift_symmetric<const P: u64>(x: Fp<P>) -> i128 {
    x.symmetric()
}
