use super::laurent::LaurentBi;
use super::ratq::RatQ;
use super::spoly::SPoly;
use super::RingError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Σ c_{a,b} t0^a t1^b with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct T0T1Poly {
    terms: BTreeMap<(i32, i32), BigRational>,
}

impl T0T1Poly {
    pub fn from_terms<I: IntoIterator<Item = ((i32, i32), BigRational)>>(it: I) -> Self {
        let mut terms: BTreeMap<(i32, i32), BigRational> = BTreeMap::new();
        for (k, v) in it {
            *terms.entry(k).or_insert_with(BigRational::zero) += v;
        }
        terms.retain(|_, v| !v.is_zero());
        T0T1Poly { terms }
    }

    pub fn from_int_terms(it: &[((i32, i32), i64)]) -> Self {
        Self::from_terms(it.iter().map(|&(k, v)| (k, BigRational::from_integer(BigInt::from(v)))))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: i32, b: i32) -> BigRational {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|v| v.is_integer())
    }

    /// max(a − b) − min(a − b) over the support.
    pub fn span(&self) -> Result<i32, RingError> {
        let d: Vec<i32> = self.terms.keys().map(|(a, b)| a - b).collect();
        match (d.iter().min(), d.iter().max()) {
            (Some(lo), Some(hi)) => Ok(hi - lo),
            _ => Err(RingError::ZeroSpan),
        }
    }

    /// Image under t0 ↦ u^{-4}, t1 ↦ s^4 u^4.
    pub fn embed(&self) -> LaurentBi {
        let mut by_u: BTreeMap<i32, Vec<(i32, BigRational)>> = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            by_u.entry(4 * (b - a)).or_default().push((4 * b, c.clone()));
        }
        LaurentBi::from_terms(by_u.into_iter().map(|(p, v)| (p, rational_spoly(&v))))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Vec::new();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &o.terms {
                out.push(((a + x, b + y), c * d));
            }
        }
        Self::from_terms(out)
    }
}

fn rational_spoly(v: &[(i32, BigRational)]) -> RatQ {
    let den = v.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let num = SPoly::from_terms(v.iter().map(|(e, c)| (*e, c.numer() * (&den / c.denom()))));
    RatQ::new(num, SPoly::constant(den)).expect("nonzero denominator")
}

/// Decode a value on the (4ℤ, 4ℤ) lattice into t0, t1.
pub fn to_t0t1(x: &LaurentBi) -> Result<T0T1Poly, RingError> {
    let mut out = Vec::new();
    for (p, c) in x.terms() {
        let terms = c.laurent_terms().ok_or(RingError::NonRational(p))?;
        for (r, v) in terms {
            if p.rem_euclid(4) != 0 || r.rem_euclid(4) != 0 {
                return Err(RingError::OffLattice { p, r });
            }
            let b = r / 4;
            let a = b - p / 4;
            out.push(((a, b), v));
        }
    }
    Ok(T0T1Poly::from_terms(out))
}

/// Univariate Laurent polynomial in one variable with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniLaurent {
    terms: BTreeMap<i32, BigRational>,
}

impl UniLaurent {
    pub fn from_terms<I: IntoIterator<Item = (i32, BigRational)>>(it: I) -> Self {
        let mut terms: BTreeMap<i32, BigRational> = BTreeMap::new();
        for (k, v) in it {
            *terms.entry(k).or_insert_with(BigRational::zero) += v;
        }
        terms.retain(|_, v| !v.is_zero());
        UniLaurent { terms }
    }

    pub fn from_int_terms(it: &[(i32, i64)]) -> Self {
        Self::from_terms(it.iter().map(|&(k, v)| (k, BigRational::from_integer(BigInt::from(v)))))
    }

    pub fn one() -> Self {
        Self::from_int_terms(&[(0, 1)])
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i32, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn breadth(&self) -> Option<i32> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Vec::new();
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                out.push((a + b, c * d));
            }
        }
        Self::from_terms(out)
    }

    pub fn neg(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, -v.clone())))
    }

    /// Substitute t ↦ t^k.
    pub fn compose_pow(&self, k: i32) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, v)| (e * k, v.clone())))
    }

    pub fn shift(&self, k: i32) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, v)| (e + k, v.clone())))
    }

    /// Normalize up to units ±t^k: lowest exponent 0 and positive lowest coefficient.
    pub fn normalize_unit(&self) -> Self {
        let Some(lo) = self.min_exp() else {
            return self.clone();
        };
        let s = self.shift(-lo);
        if s.terms.values().next().is_some_and(|c| c < &BigRational::zero()) {
            s.neg()
        } else {
            s
        }
    }

    pub fn equal_up_to_unit(&self, o: &Self) -> bool {
        self.normalize_unit() == o.normalize_unit()
    }

    pub fn eval_i64(&self, t: i64) -> Option<BigRational> {
        let tq = BigRational::from_integer(BigInt::from(t));
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            if t == 0 && *e < 0 {
                return None;
            }
            let p = if *e >= 0 { num_traits::pow(tq.clone(), *e as usize) } else { num_traits::pow(tq.recip(), (-e) as usize) };
            acc += c * p;
        }
        Some(acc)
    }
}

impl std::fmt::Display for UniLaurent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c < &BigRational::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let one = a.is_one();
            match (*e, one) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{a}*t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Substitution rule for [`specialize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecRule {
    /// t1 := t0^{-1}
    Inverse,
    /// t1 := −t0^{-1}
    NegInverse,
}

pub fn specialize(x: &T0T1Poly, rule: SpecRule) -> UniLaurent {
    UniLaurent::from_terms(x.terms.iter().map(|(&(a, b), c)| {
        let sign = rule == SpecRule::NegInverse && b.rem_euclid(2) == 1;
        (a - b, if sign { -c.clone() } else { c.clone() })
    }))
}

impl std::fmt::Display for T0T1Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::render::render_t0t1(self))
    }
}

/// [`to_t0t1`] when the result has integer coefficients.
pub fn to_t0t1_checked(x: &LaurentBi) -> Option<T0T1Poly> {
    to_t0t1(x).ok().filter(|p| p.has_integer_coeffs())
}
