//! Arbitrary-precision rational coefficients, always normalized.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number with an arbitrary-precision numerator and a positive
/// denominator. `BigRational` keeps the value reduced, which gives us the
/// `gcd(|num|, den) = 1`, `den >= 1` invariants for free.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        Rational(BigRational::new(numer, denom))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// 2^e for any integer e, including negative exponents.
    pub fn pow2(e: i64) -> Self {
        let mag = BigInt::one() << e.unsigned_abs();
        if e >= 0 {
            Rational(BigRational::from_integer(mag))
        } else {
            Rational(BigRational::new(BigInt::one(), mag))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Image of the rational in Z/p for prime p. Fails when p divides the
    /// denominator.
    pub fn residue_mod(&self, p: u64) -> Result<u64> {
        let pb = BigInt::from(p);
        let den = self.denom().mod_floor(&pb).to_u64().expect("p fits u64");
        if den == 0 {
            return Err(Error::BadPrime {
                p,
                coeff: self.to_string(),
            });
        }
        let num = self.numer().mod_floor(&pb).to_u64().expect("p fits u64");
        Ok(crate::fmzv_engine::mul_mod(num, crate::fmzv_engine::inverse_mod(den, p), p))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }
}

impl From<BigUint> for Rational {
    fn from(n: BigUint) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl fmt::Display for Rational {
    /// `n` when the denominator is 1, `n/d` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }

        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_elides_unit_denominator() {
        assert_eq!(Rational::from(5i64).to_string(), "5");
        assert_eq!(Rational::new(BigInt::from(3), BigInt::from(4)).to_string(), "3/4");
        assert_eq!(Rational::new(BigInt::from(-6), BigInt::from(4)).to_string(), "-3/2");
    }

    #[test]
    fn pow2_handles_negative_exponents() {
        assert_eq!(Rational::pow2(0), Rational::one());
        assert_eq!(Rational::pow2(5), Rational::from(32i64));
        assert_eq!(
            Rational::pow2(-1),
            Rational::new(BigInt::from(1), BigInt::from(2))
        );
        assert_eq!(&Rational::pow2(-3) * &Rational::pow2(3), Rational::one());
    }

    #[test]
    fn residue_mod_reduces_coefficients() {
        // 3/4 mod 7: 4^{-1} = 2, so 3 * 2 = 6.
        assert_eq!(Rational::new(3.into(), 4.into()).residue_mod(7).unwrap(), 6);
        // -1 mod 5 = 4.
        assert_eq!(Rational::from(-1i64).residue_mod(5).unwrap(), 4);
        // 1/2 mod 2 is rejected, naming the coefficient.
        let err = Rational::new(1.into(), 2.into()).residue_mod(2).unwrap_err();
        assert_eq!(
            err,
            Error::BadPrime {
                p: 2,
                coeff: "1/2".into()
            }
        );
    }
}
