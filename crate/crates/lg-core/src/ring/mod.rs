//! Exact scalar arithmetic.
//!
//! Scalars live in ℚ(s)[u, u^{-1}] and its fraction field, with s = q^{1/2}
//! and u = q^{α/2}. Every half power in the theory becomes an integer power.

mod expr;
mod fp;
mod frac;
mod interp;
mod laurent;
mod matrix;
mod ratq;
mod render;
mod spoly;
mod t0t1;
mod upoly;

use std::fmt;

pub use expr::{parse_expr, parse_laurent, ParseError};
pub use fp::{Fp, F61, F62, P61, P62};
pub use frac::FracBi;
pub use interp::{interpolate_1d, interpolate_grid, interpolate_grid_stepped, lift_symmetric, Bounds};
pub use laurent::LaurentBi;
pub use matrix::Mat;
pub use ratq::RatQ;
pub use render::{render, Style};
pub use spoly::SPoly;
pub use t0t1::{specialize, to_t0t1, to_t0t1_checked, SpecRule, T0T1Poly, UniLaurent};
pub use upoly::{poly_divrem, poly_eval, poly_gcd, poly_mul, poly_powmod, poly_roots_fp, poly_sub};

use num_rational::Rational64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RingError {
    #[error("zero polynomial has no span")]
    ZeroSpan,
    #[error("off-lattice monomial s^{r} u^{p}")]
    OffLattice { p: i32, r: i32 },
    #[error("coefficient of u^{0} is not a Laurent polynomial in s with rational coefficients")]
    NonRational(i32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("value has nonzero u-support")]
    HasUSupport,
    #[error("value is not a Laurent polynomial in u")]
    NotLaurent,
}

/// Commutative ring with unit.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_i64(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add_assign(&mut self, o: &Self) {
        *self = self.add(o);
    }

    fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul(&i))
    }
}

/// Degree in half-steps of z = q^α, or `None` for −∞.
pub type Degree = Option<Rational64>;

/// Symbolic exponent for [`qbracket`]: either an integer n or α + n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BracketArg {
    Int(i32),
    Alpha(i32),
}

/// The q-bracket (q^x − q^{−x})/(q − q^{−1}).
pub fn qbracket(x: BracketArg) -> FracBi {
    let denom = RatQ::from_spoly(SPoly::mono(1, 2).sub(&SPoly::mono(1, -2)));
    let dinv = denom.inv().expect("q - 1/q is nonzero");
    match x {
        BracketArg::Int(n) => {
            let num = RatQ::from_spoly(SPoly::mono(1, 2 * n).sub(&SPoly::mono(1, -2 * n)));
            FracBi::from_ratq(num.mul(&dinv))
        }
        BracketArg::Alpha(n) => {
            let a = LaurentBi::mono(RatQ::s_pow(2 * n), 2);
            let b = LaurentBi::mono(RatQ::s_pow(-2 * n), -2);
            FracBi::from_laurent(a.sub(&b).scale(&dinv))
        }
    }
}

/// s^a u^b as a Laurent scalar.
pub fn su(a: i32, b: i32) -> LaurentBi {
    LaurentBi::mono(RatQ::s_pow(a), b)
}

/// q^a q^{bα}, i.e. s^{2a} u^{2b}.
pub fn qqa(a: i32, b: i32) -> LaurentBi {
    su(2 * a, 2 * b)
}
