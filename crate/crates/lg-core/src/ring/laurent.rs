use super::ratq::RatQ;
use super::{Degree, Field, Fp, Ring, RingError};
use num_rational::Rational64;
use std::collections::BTreeMap;

/// Laurent polynomial in u with coefficients in ℚ(s).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentBi {
    terms: BTreeMap<i32, RatQ>,
}

impl LaurentBi {
    pub fn mono(c: RatQ, e: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentBi { terms }
    }

    pub fn from_ratq(c: RatQ) -> Self {
        Self::mono(c, 0)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, RatQ)>>(it: I) -> Self {
        let mut out = LaurentBi::default();
        for (e, c) in it {
            out.add_term(e, &c);
        }
        out
    }

    fn add_term(&mut self, e: i32, c: &RatQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.add(c);
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &RatQ)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i32) -> RatQ {
        self.terms.get(&e).cloned().unwrap_or_else(RatQ::zero)
    }

    pub fn min_u(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_u(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &RatQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentBi { terms: self.terms.iter().map(|(e, v)| (*e, v.mul(c))).collect() }
    }

    /// Multiply by u^k.
    pub fn shift(&self, k: i32) -> Self {
        LaurentBi { terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect() }
    }

    /// Multiply by s^k.
    pub fn shift_s(&self, k: i32) -> Self {
        LaurentBi { terms: self.terms.iter().map(|(e, v)| (*e, v.shift(k))).collect() }
    }

    /// Substitute u ↦ u^{-1}.
    pub fn invert_u(&self) -> Self {
        LaurentBi { terms: self.terms.iter().map(|(e, v)| (-e, v.clone())).collect() }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().is_monomial()
    }

    /// The value as an element of ℚ(s), if its u-support is {0} or empty.
    pub fn as_ratq(&self) -> Option<RatQ> {
        match self.terms.len() {
            0 => Some(RatQ::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn has_trivial_u(&self) -> bool {
        self.as_ratq().is_some()
    }

    /// Max u-exponent / 2, or −∞ for zero.
    pub fn deg_z(&self) -> Degree {
        self.max_u().map(|e| Rational64::new(e as i64, 2))
    }

    /// −(min u-exponent) / 2, or −∞ for zero.
    pub fn deg_t(&self) -> Degree {
        self.min_u().map(|e| Rational64::new(-e as i64, 2))
    }

    /// Breadth with respect to q^{2α}: (max − min u-exponent) / 4.
    pub fn span_q2alpha(&self) -> Result<Rational64, RingError> {
        match (self.min_u(), self.max_u()) {
            (Some(a), Some(b)) => Ok(Rational64::new((b - a) as i64, 4)),
            _ => Err(RingError::ZeroSpan),
        }
    }

    pub fn eval<const P: u64>(&self, s: Fp<P>, u: Fp<P>) -> Option<Fp<P>> {
        let mut acc = Fp::<P>::zero();
        let ui = u.inv()?;
        for (e, c) in &self.terms {
            let cv = c.eval(s)?;
            let up = if *e >= 0 { u.pow(*e as u32) } else { ui.pow((-*e) as u32) };
            acc = acc.add(&cv.mul(&up));
        }
        Some(acc)
    }

    pub fn map_coeffs<F: Fn(&RatQ) -> RatQ>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }
}

impl Ring for LaurentBi {
    fn zero() -> Self {
        LaurentBi::default()
    }

    fn one() -> Self {
        Self::mono(RatQ::one(), 0)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, o: &Self) -> Self {
        let (big, small) = if self.terms.len() >= o.terms.len() { (self, o) } else { (o, self) };
        let mut out = big.clone();
        for (e, c) in &small.terms {
            out.add_term(*e, c);
        }
        out
    }

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn mul(&self, o: &Self) -> Self {
        let mut out = LaurentBi::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(e1 + e2, &c1.mul(c2));
            }
        }
        out
    }

    fn neg(&self) -> Self {
        LaurentBi { terms: self.terms.iter().map(|(e, v)| (*e, v.neg())).collect() }
    }

    fn from_i64(n: i64) -> Self {
        Self::from_ratq(RatQ::from_int(n))
    }

    fn add_assign(&mut self, o: &Self) {
        for (e, c) in &o.terms {
            self.add_term(*e, c);
        }
    }
}

impl LaurentBi {
    /// Exact inverse when the value is a unit (a single term with invertible coefficient).
    pub fn inv_unit(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Some(Self::mono(c.inv()?, -e))
    }
}

impl std::fmt::Display for LaurentBi {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::render::render(self, super::render::Style::Su))
    }
}
