//! Exact scalar rings used as coefficient types of [`crate::exterior::GradedForm`].
//!
//! Everything in this crate is computed over exact rings; there is no
//! floating-point mode. The base ring is the arbitrary-precision rational
//! [`Rat`]; polynomial and trigonometric coefficient rings live in
//! [`crate::poly`] and [`crate::trig`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Arbitrary-precision rational number, the base scalar of the crate.
pub type Rat = BigRational;

/// Convenience constructor for a rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience constructor for an integer rational.
pub fn rat_int(num: i64) -> Rat {
    Rat::from(BigInt::from(num))
}

/// An exact commutative ring with decidable equality.
///
/// The rational constants of the ambient symplectic structure (entries of
/// the coefficient matrix of omega, factorials) act on every coefficient
/// ring through [`Ring::from_rat`].
pub trait Ring:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_rat(r: &Rat) -> Self;
}

impl Ring for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

/// A coefficient ring carrying partial derivatives in the chart variables.
///
/// Implemented by the polynomial ring of a Darboux chart and the
/// trigonometric-polynomial ring of a torus; both differentiate with respect
/// to the coordinate dual to generator `var`.
pub trait DifferentialRing: Ring {
    fn partial(&self, var: usize) -> Self;
}

/// A rational multiple of a formal power of the torus period `τ = 2π`.
///
/// Integral values on the torus live in `ℚ·τ^m`; keeping the period formal
/// keeps all cocycle arithmetic exact. Addition is only defined between
/// values of equal exponent (or with zero), which is an invariant of every
/// computation in this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauValue {
    coeff: Rat,
    exponent: i64,
}

impl TauValue {
    pub fn new(coeff: Rat, exponent: i64) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            TauValue { coeff, exponent }
        }
    }

    pub fn zero() -> Self {
        TauValue {
            coeff: Rat::zero(),
            exponent: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn from_rat(r: Rat) -> Self {
        Self::new(r, 0)
    }

    pub fn coeff(&self) -> &Rat {
        &self.coeff
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self::new(&self.coeff * r, self.exponent)
    }
}

impl Add for TauValue {
    type Output = TauValue;
    fn add(self, rhs: TauValue) -> TauValue {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        assert_eq!(
            self.exponent, rhs.exponent,
            "cannot add τ^{} to τ^{}",
            self.exponent, rhs.exponent
        );
        TauValue::new(self.coeff + rhs.coeff, self.exponent)
    }
}

impl Sub for TauValue {
    type Output = TauValue;
    fn sub(self, rhs: TauValue) -> TauValue {
        self + (-rhs)
    }
}

impl Neg for TauValue {
    type Output = TauValue;
    fn neg(self) -> TauValue {
        TauValue::new(-self.coeff, self.exponent)
    }
}

impl Mul for TauValue {
    type Output = TauValue;
    fn mul(self, rhs: TauValue) -> TauValue {
        TauValue::new(self.coeff * rhs.coeff, self.exponent + rhs.exponent)
    }
}

impl fmt::Display for TauValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "{}·τ", self.coeff),
            e => write!(f, "{}·τ^{}", self.coeff, e),
        }
    }
}

/// Exact n! as a rational.
pub fn factorial(n: usize) -> Rat {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rat::from(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_arithmetic() {
        let a = TauValue::new(rat(1, 2), 2);
        let b = TauValue::new(rat(1, 3), 2);
        assert_eq!(a.clone() + b, TauValue::new(rat(5, 6), 2));
        assert_eq!(
            a.clone() * TauValue::new(rat(2, 1), 1),
            TauValue::new(rat_int(1), 3)
        );
        assert!((a.clone() - a).is_zero());
        // zero is absorbed regardless of exponent
        assert_eq!(TauValue::zero() + TauValue::new(rat_int(3), 4), TauValue::new(rat_int(3), 4));
    }

    #[test]
    #[should_panic]
    fn tau_mixed_exponents_panic() {
        let _ = TauValue::new(rat_int(1), 1) + TauValue::new(rat_int(1), 2);
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), rat_int(1));
        assert_eq!(factorial(4), rat_int(24));
    }
}
