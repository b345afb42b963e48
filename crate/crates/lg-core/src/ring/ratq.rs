use super::spoly::SPoly;
use super::{Field, Fp, Ring};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Element of ℚ(s), kept in canonical reduced form.
///
/// The denominator has lowest exponent 0, positive leading coefficient,
/// and shares no polynomial or integer factor with the numerator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatQ {
    num: SPoly,
    den: SPoly,
}

impl RatQ {
    pub fn from_spoly(p: SPoly) -> Self {
        RatQ { num: p, den: SPoly::one() }
    }

    pub fn s_pow(k: i32) -> Self {
        Self::from_spoly(SPoly::mono(1, k))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_spoly(SPoly::constant(BigInt::from(n)))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::new(SPoly::constant(r.numer().clone()), SPoly::constant(r.denom().clone()))
            .expect("nonzero denominator")
    }

    /// num/den reduced to canonical form, or `None` if den is zero.
    pub fn new(num: SPoly, den: SPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::from_spoly(SPoly::zero()));
        }
        let mut num = num.shift(-den.low());
        let mut den = den.core();
        if den.len() > 1 {
            let g = SPoly::gcd(&num, &den);
            if !g.is_one() {
                num = SPoly::div_exact(&num, &g).expect("gcd divides numerator");
                den = SPoly::div_exact(&den, &g).expect("gcd divides denominator");
                num = num.shift(-den.low());
                den = den.core();
            }
        }
        let mut c = den.content().gcd(&num.content());
        if den.lc().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_int(&c);
            den = den.div_int(&c);
        }
        Some(RatQ { num, den })
    }

    pub fn numer(&self) -> &SPoly {
        &self.num
    }

    pub fn denom(&self) -> &SPoly {
        &self.den
    }

    /// True when the denominator is 1.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// True when the value is a rational constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.is_zero() {
            return Some(BigRational::zero());
        }
        if self.num.len() == 1 && self.num.low() == 0 && self.den.len() == 1 {
            Some(BigRational::new(self.num.coeff(0), self.den.coeff(0)))
        } else {
            None
        }
    }

    /// Denominator is a rational constant: the value is a Laurent polynomial in s
    /// with rational coefficients.
    pub fn is_laurent_over_q(&self) -> bool {
        self.den.len() == 1
    }

    /// Coefficients (exponent, rational) when `is_laurent_over_q`.
    pub fn laurent_terms(&self) -> Option<Vec<(i32, BigRational)>> {
        if !self.is_laurent_over_q() {
            return None;
        }
        let d = self.den.coeff(0);
        Some(
            self.num
                .terms()
                .map(|(e, c)| (e, BigRational::new(c.clone(), d.clone())))
                .collect(),
        )
    }

    pub fn is_monomial(&self) -> bool {
        self.num.is_monomial() && self.den.is_one()
    }

    pub fn shift(&self, k: i32) -> Self {
        RatQ { num: self.num.shift(k), den: self.den.clone() }
    }

    pub fn eval<const P: u64>(&self, s: Fp<P>) -> Option<Fp<P>> {
        let n = eval_spoly(&self.num, s)?;
        let d = eval_spoly(&self.den, s)?;
        d.inv().map(|di| n.mul(&di))
    }
}

pub(crate) fn eval_spoly<const P: u64>(p: &SPoly, s: Fp<P>) -> Option<Fp<P>> {
    if p.is_zero() {
        return Some(Fp::zero());
    }
    let mut acc = Fp::<P>::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(&s).add(&Fp::from_bigint(c));
    }
    let sl = if p.low() >= 0 { s.pow(p.low() as u32) } else { s.inv()?.pow((-p.low()) as u32) };
    Some(acc.mul(&sl))
}

impl Ring for RatQ {
    fn zero() -> Self {
        Self::from_spoly(SPoly::zero())
    }

    fn one() -> Self {
        Self::from_spoly(SPoly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_spoly(self.num.add(&o.num));
        }
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone()).unwrap();
        }
        let g = SPoly::gcd(&self.den, &o.den);
        let a = SPoly::div_exact(&o.den, &g).unwrap();
        let b = SPoly::div_exact(&self.den, &g).unwrap();
        let num = self.num.mul(&a).add(&o.num.mul(&b));
        Self::new(num, self.den.mul(&a)).unwrap()
    }

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_spoly(self.num.mul(&o.num));
        }
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den)).unwrap()
    }

    fn neg(&self) -> Self {
        RatQ { num: self.num.neg(), den: self.den.clone() }
    }

    fn from_i64(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Field for RatQ {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.num.is_monomial() && self.den.is_one() {
            let c = self.num.coeff(self.num.low());
            let k = self.num.low();
            if c.is_one() {
                return Some(Self::s_pow(-k));
            }
            if (-&c).is_one() {
                return Some(Self::s_pow(-k).neg());
            }
        }
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl std::fmt::Display for RatQ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::render::render_ratq_s(self))
    }
}
