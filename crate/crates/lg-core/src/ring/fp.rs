use super::{Field, Ring};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rand::Rng;

pub const P61: u64 = (1u64 << 61) - 1;
pub const P62: u64 = 4_611_686_018_427_387_847;

/// Integers modulo a prime P < 2^63.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

pub type F61 = Fp<P61>;
pub type F62 = Fp<P62>;

impl<const P: u64> Fp<P> {
    pub const MODULUS: u64 = P;

    pub fn new(x: u64) -> Self {
        Fp(x % P)
    }

    pub fn from_i64(x: i64) -> Self {
        let r = x.rem_euclid(P as i64);
        Fp(r as u64)
    }

    pub fn from_bigint(x: &BigInt) -> Self {
        let p = BigInt::from(P);
        let mut r = x % &p;
        if r.is_negative() {
            r += &p;
        }
        Fp(r.to_u64().unwrap())
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// Representative in (−P/2, P/2].
    pub fn symmetric(self) -> i128 {
        if self.0 > P / 2 {
            self.0 as i128 - P as i128
        } else {
            self.0 as i128
        }
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp(rng.gen_range(2..P))
    }

    pub fn powi(self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow_u64(e as u64))
        } else {
            self.inv().map(|i| i.pow_u64((-e) as u64))
        }
    }

    pub fn pow_u64(self, mut e: u64) -> Self {
        let mut b = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Ring for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }

    fn one() -> Self {
        Fp(1)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    #[inline]
    fn add(&self, o: &Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= P { s - P } else { s })
    }

    #[inline]
    fn sub(&self, o: &Self) -> Self {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + P - o.0 })
    }

    #[inline]
    fn mul(&self, o: &Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }

    fn neg(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }

    fn from_i64(n: i64) -> Self {
        Fp::from_i64(n)
    }

    fn add_assign(&mut self, o: &Self) {
        *self = Ring::add(self, o);
    }
}

impl<const P: u64> Field for Fp<P> {
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow_u64(P - 2))
        }
    }
}
