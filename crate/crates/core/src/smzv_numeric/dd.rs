//! Double-double arithmetic: an unevaluated sum of two f64s giving roughly
//! 32 significant decimal digits. The usual error-free transformations
//! (two-sum, fused two-product) keep every operation exactly rounded to the
//! combined precision, which is what the truncated-series accumulation
//! contract needs.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, Default)]
pub struct DoubleDouble {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    debug_assert!(a == 0.0 || a.abs() >= b.abs() || !b.is_finite());
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl DoubleDouble {
    pub const ZERO: DoubleDouble = DoubleDouble { hi: 0.0, lo: 0.0 };
    pub const ONE: DoubleDouble = DoubleDouble { hi: 1.0, lo: 0.0 };

    pub fn new(hi: f64, lo: f64) -> Self {
        let (hi, lo) = quick_two_sum(hi, lo);
        DoubleDouble { hi, lo }
    }

    pub fn from_f64(x: f64) -> Self {
        DoubleDouble { hi: x, lo: 0.0 }
    }

    pub fn from_u64(n: u64) -> Self {
        // u64 may exceed the 53-bit mantissa; split exactly.
        let hi = (n >> 32) as f64 * 4294967296.0;
        let lo = (n & 0xffff_ffff) as f64;
        DoubleDouble::from_f64(hi) + DoubleDouble::from_f64(lo)
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    pub fn is_zero(self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }

    pub fn recip(self) -> Self {
        DoubleDouble::ONE / self
    }

    /// Integer power by binary exponentiation.
    pub fn powi(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = DoubleDouble::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl Add for DoubleDouble {
    type Output = DoubleDouble;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        DoubleDouble { hi, lo }
    }
}

impl Sub for DoubleDouble {
    type Output = DoubleDouble;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for DoubleDouble {
    type Output = DoubleDouble;
    #[inline]
    fn neg(self) -> Self {
        DoubleDouble {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Mul for DoubleDouble {
    type Output = DoubleDouble;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (hi, lo) = quick_two_sum(p, e);
        DoubleDouble { hi, lo }
    }
}

impl Div for DoubleDouble {
    type Output = DoubleDouble;
    fn div(self, rhs: Self) -> Self {
        // Long division with two refinement steps.
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * DoubleDouble::from_f64(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * DoubleDouble::from_f64(q2);
        let q3 = r.hi / rhs.hi;
        let (s, e) = quick_two_sum(q1, q2);
        DoubleDouble::new(s, e + q3)
    }
}

impl PartialEq for DoubleDouble {
    fn eq(&self, other: &Self) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{Signed, ToPrimitive, Zero};
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn dd_vs_rational(x: DoubleDouble, r: &BigRational) -> f64 {
        let approx = BigRational::from_float(x.hi).unwrap() + BigRational::from_float(x.lo).unwrap();
        let diff = (&approx - r).abs();
        if r.is_zero() {
            diff.to_f64().unwrap()
        } else {
            (diff / r.abs()).to_f64().unwrap()
        }
    }

    #[test]
    fn one_third_to_thirty_digits() {
        let third = DoubleDouble::from_u64(1) / DoubleDouble::from_u64(3);
        assert!(dd_vs_rational(third, &rat(1, 3)) < 1e-31);
    }

    #[test]
    fn harmonic_sum_matches_exact_rational() {
        // sum_{n=1}^{200} 1/n^3 in double-double vs exact rationals.
        let mut dd = DoubleDouble::ZERO;
        let mut exact = BigRational::zero();
        for n in 1u64..=200 {
            dd = dd + DoubleDouble::from_u64(n * n * n).recip();
            exact += BigRational::new(BigInt::from(1), BigInt::from(n).pow(3));
        }
        assert!(dd_vs_rational(dd, &exact) < 1e-30);
    }

    #[test]
    fn powi_and_from_u64() {
        let big = DoubleDouble::from_u64(u64::MAX);
        assert_eq!(big.to_f64(), u64::MAX as f64);
        let cube = DoubleDouble::from_u64(97).powi(3);
        assert!(dd_vs_rational(cube, &rat(912_673, 1)) < 1e-30);
        assert_eq!(DoubleDouble::from_u64(5).powi(0).to_f64(), 1.0);
    }

    proptest! {
        #[test]
        fn field_ops_match_exact_rationals(
            an in -10_000i64..10_000, ad in 1i64..999,
            bn in -10_000i64..10_000, bd in 1i64..999,
        ) {
            let a = DoubleDouble::from_f64(an as f64) / DoubleDouble::from_f64(ad as f64);
            let b = DoubleDouble::from_f64(bn as f64) / DoubleDouble::from_f64(bd as f64);
            let ar = rat(an, ad);
            let br = rat(bn, bd);
            prop_assert!(dd_vs_rational(a + b, &(&ar + &br)) < 1e-29);
            prop_assert!(dd_vs_rational(a - b, &(&ar - &br)) < 1e-29);
            prop_assert!(dd_vs_rational(a * b, &(&ar * &br)) < 1e-29);
            if bn != 0 {
                prop_assert!(dd_vs_rational(a / b, &(&ar / &br)) < 1e-29);
            }
        }
    }
}
