use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Laurent polynomial in s with integer coefficients.
///
/// Stored as s^low · (c[0] + c[1] s + ...). Both ends of `c` are nonzero;
/// the zero polynomial has an empty `c`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SPoly {
    low: i32,
    c: Vec<BigInt>,
}

impl SPoly {
    pub fn zero() -> Self {
        SPoly { low: 0, c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(v: BigInt) -> Self {
        Self::from_coeffs(0, vec![v])
    }

    pub fn mono(coef: i64, e: i32) -> Self {
        Self::from_coeffs(e, vec![BigInt::from(coef)])
    }

    pub fn from_coeffs(low: i32, c: Vec<BigInt>) -> Self {
        let mut p = SPoly { low, c };
        p.trim();
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, BigInt)>>(terms: I) -> Self {
        let terms: Vec<(i32, BigInt)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut c = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, v) in terms {
            c[(e - lo) as usize] += v;
        }
        Self::from_coeffs(lo, c)
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
        let lead = self.c.iter().take_while(|x| x.is_zero()).count();
        if lead > 0 {
            self.c.drain(..lead);
            self.low += lead as i32;
        }
        if self.c.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.c.len() == 1 && self.c[0].is_one()
    }

    /// Lowest exponent (0 for the zero polynomial).
    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest exponent (undefined for zero; returns `low - 1`).
    pub fn high(&self) -> i32 {
        self.low + self.c.len() as i32 - 1
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.c.len() == 1
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        let i = e - self.low;
        if i < 0 || i as usize >= self.c.len() {
            BigInt::zero()
        } else {
            self.c[i as usize].clone()
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigInt)> {
        let low = self.low;
        self.c
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(i, v)| (low + i as i32, v))
    }

    pub fn lc(&self) -> &BigInt {
        self.c.last().expect("nonzero polynomial")
    }

    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        SPoly { low: self.low + k, c: self.c.clone() }
    }

    /// Same coefficients with the lowest exponent moved to 0.
    pub fn core(&self) -> Self {
        SPoly { low: 0, c: self.c.clone() }
    }

    pub fn neg(&self) -> Self {
        SPoly { low: self.low, c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.low.min(o.low);
        let hi = self.high().max(o.high());
        let mut c = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, v) in self.c.iter().enumerate() {
            c[(self.low - lo) as usize + i] += v;
        }
        for (i, v) in o.c.iter().enumerate() {
            c[(o.low - lo) as usize + i] += v;
        }
        Self::from_coeffs(lo, c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(self.low + o.low, c)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        SPoly { low: self.low, c: self.c.iter().map(|x| x * k).collect() }
    }

    /// Exact division of every coefficient by `k`.
    pub fn div_int(&self, k: &BigInt) -> Self {
        SPoly { low: self.low, c: self.c.iter().map(|x| x / k).collect() }
    }

    /// Positive gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for x in &self.c {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        self.div_int(&g)
    }

    pub fn eval_i128(&self, s: i128) -> Option<i128> {
        let mut acc: i128 = 0;
        for x in self.c.iter().rev() {
            let v: i128 = x.try_into().ok()?;
            acc = acc.checked_mul(s)?.checked_add(v)?;
        }
        Some(acc)
    }

    /// Pseudo-remainder of a by b treating both as ordinary polynomials.
    fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut r: Vec<BigInt> = a.to_vec();
        let db = b.len() - 1;
        let lb = &b[db];
        while r.len() > db && !r.is_empty() {
            let d = r.len() - 1;
            let lr = r[d].clone();
            for x in r.iter_mut() {
                *x *= lb;
            }
            for (i, bv) in b.iter().enumerate() {
                r[d - db + i] -= &lr * bv;
            }
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        r
    }

    /// Gcd in ℤ[s, s^{-1}], normalized primitive with positive leading
    /// coefficient and lowest exponent 0.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.core().primitive();
        }
        if b.is_zero() {
            return a.core().primitive();
        }
        let mut x = a.core().primitive();
        let mut y = b.core().primitive();
        if x.c.len() < y.c.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            if y.c.len() == 1 {
                return SPoly::one();
            }
            let r = Self::prem(&x.c, &y.c);
            x = y;
            y = SPoly::from_coeffs(0, r);
            y = y.core().primitive();
        }
        x.primitive()
    }

    /// Exact quotient a / b in ℤ[s, s^{-1}], or `None` if b does not divide a.
    pub fn div_exact(a: &Self, b: &Self) -> Option<Self> {
        if b.is_zero() {
            return None;
        }
        if a.is_zero() {
            return Some(Self::zero());
        }
        let mut r = a.c.clone();
        let db = b.c.len() - 1;
        if r.len() <= db {
            return None;
        }
        let mut q = vec![BigInt::zero(); r.len() - db];
        let lb = b.lc();
        while r.len() > db {
            let d = r.len() - 1;
            let (qt, rem) = r[d].div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            for (i, bv) in b.c.iter().enumerate() {
                r[d - db + i] -= &qt * bv;
            }
            q[d - db] = qt;
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        if !r.is_empty() {
            return None;
        }
        Some(Self::from_coeffs(a.low - b.low, q))
    }

    pub fn cmp_key(&self, o: &Self) -> Ordering {
        (self.low, self.c.len()).cmp(&(o.low, o.c.len())).then_with(|| self.c.cmp(&o.c))
    }
}
