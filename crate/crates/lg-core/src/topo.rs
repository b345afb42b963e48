//! Alexander polynomial oracles, specialization checks and genus bounds.

use crate::ring::{specialize, Field, Mat, RatQ, Ring, RingError, SPoly, SpecRule, T0T1Poly, UniLaurent};
use crate::tangle::BraidWord;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum TopoError {
    #[error("Burau determinant is not divisible by 1 + t + ... + t^(n-1)")]
    NotDivisible,
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Alexander polynomial in the symmetric normalization.
#[derive(Clone, Debug, PartialEq)]
pub struct AlexPoly {
    pub poly: UniLaurent,
    pub normalized: bool,
}

impl AlexPoly {
    /// Center the exponents (half-integral shifts are left as is) and make
    /// the value at t = 1 positive.
    pub fn normalize(p: &UniLaurent) -> Self {
        let (Some(lo), Some(hi)) = (p.min_exp(), p.max_exp()) else {
            return AlexPoly { poly: p.clone(), normalized: true };
        };
        let q = p.shift(-(lo + hi).div_euclid(2));
        let q = match q.eval_i64(1) {
            Some(v) if v.is_negative() => q.neg(),
            _ => q,
        };
        AlexPoly { poly: q, normalized: (lo + hi) % 2 == 0 }
    }

    pub fn breadth(&self) -> i32 {
        self.poly.breadth().unwrap_or(0)
    }
}

fn t_pow(k: i32) -> RatQ {
    RatQ::s_pow(k)
}

fn ratq_to_uni(x: &RatQ) -> Result<UniLaurent, TopoError> {
    let t = x.laurent_terms().ok_or(TopoError::NotDivisible)?;
    Ok(UniLaurent::from_terms(t))
}

fn burau_generator(n: usize, i: usize, inverse: bool) -> Mat<RatQ> {
    let m = n - 1;
    let mut b = Mat::<RatQ>::identity(m);
    let t = t_pow(1);
    let neg_t = t.neg();
    if m == 1 {
        b.set(0, 0, neg_t);
    } else {
        let k = i - 1;
        b.set(k, k, neg_t);
        if k > 0 {
            b.set(k - 1, k, t.clone());
        }
        if k + 1 < m {
            b.set(k + 1, k, RatQ::one());
        }
    }
    if inverse {
        b.inverse().expect("Burau generators are invertible")
    } else {
        b
    }
}

/// det(I − ψ(b)) / (1 + t + ... + t^{n−1}) with the reduced Burau
/// representation ψ, normalized.
pub fn alexander_from_braid(b: &BraidWord) -> Result<AlexPoly, TopoError> {
    let n = b.strands;
    if n == 1 {
        return Ok(AlexPoly::normalize(&UniLaurent::one()));
    }
    let mut m = Mat::<RatQ>::identity(n - 1);
    for &g in &b.word {
        m = m.mul(&burau_generator(n, g.unsigned_abs() as usize, g < 0));
    }
    let d = Mat::<RatQ>::identity(n - 1).sub(&m).det();
    let geom = RatQ::from_spoly(SPoly::from_terms((0..n as i32).map(|k| (k, BigInt::from(1)))));
    let q = d.div(&geom).ok_or(TopoError::NotDivisible)?;
    Ok(AlexPoly::normalize(&ratq_to_uni(&q)?))
}

/// det(V − tVᵀ) for an integer Seifert matrix V, normalized.
pub fn alexander_from_seifert(v: &[Vec<i64>]) -> Result<AlexPoly, TopoError> {
    let n = v.len();
    let t = t_pow(1);
    let m = Mat::from_fn(n, n, |i, j| RatQ::from_int(v[i][j]).sub(&t.mul(&RatQ::from_int(v[j][i]))));
    Ok(AlexPoly::normalize(&ratq_to_uni(&m.det())?))
}

type FreeWord = Vec<(usize, i8)>;

fn reduce(w: FreeWord) -> FreeWord {
    let mut out: FreeWord = Vec::with_capacity(w.len());
    for x in w {
        match out.last() {
            Some(&(g, e)) if g == x.0 && e == -x.1 => {
                out.pop();
            }
            _ => out.push(x),
        }
    }
    out
}

fn invert(w: &FreeWord) -> FreeWord {
    w.iter().rev().map(|&(g, e)| (g, -e)).collect()
}

/// Images of the free generators under the Artin action of the braid.
fn artin_images(b: &BraidWord) -> Vec<FreeWord> {
    let n = b.strands;
    let mut img: Vec<FreeWord> = (0..n).map(|i| vec![(i, 1)]).collect();
    for &g in b.word.iter().rev() {
        let i = g.unsigned_abs() as usize - 1;
        let (xi, xj) = (vec![(i, 1i8)], vec![(i + 1, 1i8)]);
        // σ_i: x_i ↦ x_i x_{i+1} x_i^{-1}, x_{i+1} ↦ x_i; σ_i^{-1} the inverse.
        let (ai, aj) = if g > 0 {
            ([xi.clone(), xj, invert(&xi)].concat(), xi)
        } else {
            (xj.clone(), [invert(&xj), xi, xj].concat())
        };
        img = img
            .into_iter()
            .map(|w| {
                let mut out = Vec::new();
                for (h, e) in w {
                    let base = if h == i {
                        ai.clone()
                    } else if h == i + 1 {
                        aj.clone()
                    } else {
                        vec![(h, 1)]
                    };
                    out.extend(if e > 0 { base } else { invert(&base) });
                }
                reduce(out)
            })
            .collect();
    }
    img
}

/// Abelianized Fox derivative ∂w/∂x_j with every generator mapped to t.
fn fox(w: &FreeWord, j: usize) -> RatQ {
    let mut acc = RatQ::zero();
    let mut prefix = 0i32;
    for &(g, e) in w {
        if e > 0 {
            if g == j {
                acc = acc.add(&t_pow(prefix));
            }
            prefix += 1;
        } else {
            prefix -= 1;
            if g == j {
                acc = acc.sub(&t_pow(prefix));
            }
        }
    }
    acc
}

/// Alexander polynomial from the Wirtinger-type presentation x_i = β(x_i) by
/// Fox calculus, deleting the last row and column.
pub fn alexander_from_fox(b: &BraidWord) -> Result<AlexPoly, TopoError> {
    let n = b.strands;
    if n == 1 {
        return Ok(AlexPoly::normalize(&UniLaurent::one()));
    }
    let img = artin_images(b);
    let m = Mat::from_fn(n - 1, n - 1, |i, j| {
        let d = fox(&img[i], j);
        if i == j {
            d.sub(&RatQ::one())
        } else {
            d
        }
    });
    Ok(AlexPoly::normalize(&ratq_to_uni(&m.det())?))
}

/// One line of a specialization report.
#[derive(Clone, Debug, Serialize)]
pub struct SpecCheck {
    pub check: String,
    pub status: bool,
    pub residual: String,
}

/// LG(t0, t0^{-1}) = Δ(t0)² and LG(t0, −t0^{-1}) = Δ(t0²), up to ±t^k.
pub fn check_specializations(lg: &T0T1Poly, alex: &AlexPoly) -> Vec<SpecCheck> {
    let d = &alex.poly;
    let cases = [
        ("LG(t0, t0^-1) = Delta(t0)^2", specialize(lg, SpecRule::Inverse), d.mul(d)),
        ("LG(t0, -t0^-1) = Delta(t0^2)", specialize(lg, SpecRule::NegInverse), d.compose_pow(2)),
    ];
    cases
        .into_iter()
        .map(|(name, lhs, rhs)| {
            let ok = lhs.equal_up_to_unit(&rhs);
            let residual = if ok {
                "0".to_string()
            } else {
                format!("lhs = {lhs}; rhs = {rhs}")
            };
            SpecCheck { check: name.into(), status: ok, residual }
        })
        .collect()
}

/// ⌈span/4⌉ for a knot invariant value.
pub fn genus_lower_bound(lg: &T0T1Poly) -> Result<i64, RingError> {
    let s = lg.span()?;
    Ok((s as i64 + 3).div_euclid(4))
}

/// Breadth of Δ in t doubled is at most the LG span.
pub fn improves_alexander(lg: &T0T1Poly, alex: &AlexPoly) -> Result<bool, RingError> {
    Ok(2 * alex.breadth() <= lg.span()?)
}

/// Integer coefficients of Δ, lowest exponent first.
pub fn integer_coeffs(a: &AlexPoly) -> Option<Vec<(i32, i64)>> {
    a.poly
        .terms()
        .map(|(e, c)| if c.is_integer() { c.to_integer().to_i64().map(|v| (*e, v)) } else { None })
        .collect()
}

