use super::laurent::LaurentBi;
use super::ratq::RatQ;
use super::upoly::{poly_divrem, poly_gcd};
use super::{Degree, Field, Fp, Ring, RingError};

/// Fraction of two [`LaurentBi`] values, reduced by the gcd in u over ℚ(s).
///
/// The denominator has lowest u-exponent 0 and leading u-coefficient 1, which
/// makes the representation canonical.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FracBi {
    num: LaurentBi,
    den: LaurentBi,
}

fn to_dense(x: &LaurentBi) -> (i32, Vec<RatQ>) {
    let lo = x.min_u().unwrap_or(0);
    let hi = x.max_u().unwrap_or(-1);
    let mut v = vec![RatQ::zero(); (hi - lo + 1).max(0) as usize];
    for (e, c) in x.terms() {
        v[(e - lo) as usize] = c.clone();
    }
    (lo, v)
}

fn from_dense(lo: i32, v: Vec<RatQ>) -> LaurentBi {
    LaurentBi::from_terms(v.into_iter().enumerate().map(|(i, c)| (lo + i as i32, c)))
}

impl FracBi {
    pub fn new(num: LaurentBi, den: LaurentBi) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let k = den.min_u().unwrap();
        let num = num.shift(-k);
        let den = den.shift(-k);
        if den.num_terms() == 1 {
            let ci = den.coeff(0).inv().unwrap();
            return Some(FracBi { num: num.scale(&ci), den: LaurentBi::one() });
        }
        let (nlo, nd) = to_dense(&num);
        let (_, dd) = to_dense(&den);
        let g = poly_gcd(&nd, &dd);
        let (nd, dd) = if g.len() > 1 {
            (poly_divrem(&nd, &g).0, poly_divrem(&dd, &g).0)
        } else {
            (nd, dd)
        };
        let li = dd.last().unwrap().inv().unwrap();
        let nd: Vec<RatQ> = nd.iter().map(|c| c.mul(&li)).collect();
        let dd: Vec<RatQ> = dd.iter().map(|c| c.mul(&li)).collect();
        Some(FracBi { num: from_dense(nlo, nd), den: from_dense(0, dd) })
    }

    pub fn from_laurent(x: LaurentBi) -> Self {
        FracBi { num: x, den: LaurentBi::one() }
    }

    pub fn from_ratq(x: RatQ) -> Self {
        Self::from_laurent(LaurentBi::from_ratq(x))
    }

    pub fn numer(&self) -> &LaurentBi {
        &self.num
    }

    pub fn denom(&self) -> &LaurentBi {
        &self.den
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_laurent(&self) -> Result<LaurentBi, RingError> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            Err(RingError::NotLaurent)
        }
    }

    /// The value as an element of ℚ(s) when its u-support is trivial.
    pub fn to_ratq(&self) -> Result<RatQ, RingError> {
        if !self.den.is_one() {
            return Err(RingError::HasUSupport);
        }
        self.num.as_ratq().ok_or(RingError::HasUSupport)
    }

    pub fn has_trivial_u(&self) -> bool {
        self.to_ratq().is_ok()
    }

    pub fn deg_z(&self) -> Degree {
        Some(self.num.deg_z()? - self.den.deg_z()?)
    }

    pub fn deg_t(&self) -> Degree {
        Some(self.num.deg_t()? - self.den.deg_t()?)
    }

    pub fn scale(&self, c: &RatQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FracBi { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Multiply by s^a u^b.
    pub fn shift(&self, a: i32, b: i32) -> Self {
        FracBi { num: self.num.shift(b).shift_s(a), den: self.den.clone() }
    }

    pub fn eval<const P: u64>(&self, s: Fp<P>, u: Fp<P>) -> Option<Fp<P>> {
        let n = self.num.eval(s, u)?;
        let d = self.den.eval(s, u)?;
        d.inv().map(|di| n.mul(&di))
    }
}

impl Ring for FracBi {
    fn zero() -> Self {
        Self::from_laurent(LaurentBi::zero())
    }

    fn one() -> Self {
        Self::from_laurent(LaurentBi::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return Self::from_laurent(self.num.add(&o.num));
            }
            return Self::new(self.num.add(&o.num), self.den.clone()).unwrap();
        }
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        Self::new(num, self.den.mul(&o.den)).unwrap()
    }

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_laurent(self.num.mul(&o.num));
        }
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den)).unwrap()
    }

    fn neg(&self) -> Self {
        FracBi { num: self.num.neg(), den: self.den.clone() }
    }

    fn from_i64(n: i64) -> Self {
        Self::from_laurent(LaurentBi::from_i64(n))
    }
}

impl Field for FracBi {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(i) = self.num.inv_unit() {
            return Some(FracBi { num: i, den: LaurentBi::one() }.mul_laurent(&self.den));
        }
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl FracBi {
    fn mul_laurent(&self, x: &LaurentBi) -> Self {
        if self.den.is_one() {
            Self::from_laurent(self.num.mul(x))
        } else {
            Self::new(self.num.mul(x), self.den.clone()).unwrap()
        }
    }
}

impl From<LaurentBi> for FracBi {
    fn from(x: LaurentBi) -> Self {
        Self::from_laurent(x)
    }
}

impl From<RatQ> for FracBi {
    fn from(x: RatQ) -> Self {
        Self::from_ratq(x)
    }
}

impl std::fmt::Display for FracBi {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
