//! Residues mod a prime, batch inverse tables, and prime enumeration.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (u128::from(a) * u128::from(b) % u128::from(p)) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    base %= p;
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of `n` mod prime `p` by Fermat's little theorem.
pub fn inverse_mod(n: u64, p: u64) -> u64 {
    debug_assert!(n % p != 0);
    pow_mod(n, p - 2, p)
}

/// A residue in [0, p) carrying its prime modulus. Mixing moduli is a
/// programming error and panics eagerly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeFieldValue {
    modulus: u64,
    residue: u64,
}

impl PrimeFieldValue {
    pub fn new(residue: u64, modulus: u64) -> Self {
        PrimeFieldValue {
            modulus,
            residue: residue % modulus,
        }
    }

    pub fn zero(modulus: u64) -> Self {
        Self::new(0, modulus)
    }

    pub fn one(modulus: u64) -> Self {
        Self::new(1, modulus)
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    pub fn inverse(&self) -> Self {
        assert!(self.residue != 0, "inverse of 0 mod {}", self.modulus);
        Self::new(inverse_mod(self.residue, self.modulus), self.modulus)
    }

    pub fn pow(&self, exp: u64) -> Self {
        Self::new(pow_mod(self.residue, exp, self.modulus), self.modulus)
    }

    fn check(self, rhs: &Self) -> Self {
        assert_eq!(
            self.modulus, rhs.modulus,
            "mismatched moduli {} and {}",
            self.modulus, rhs.modulus
        );
        self
    }
}

impl Add for PrimeFieldValue {
    type Output = PrimeFieldValue;
    fn add(self, rhs: Self) -> Self {
        let lhs = self.check(&rhs);
        Self::new(lhs.residue + rhs.residue, lhs.modulus)
    }
}

impl Sub for PrimeFieldValue {
    type Output = PrimeFieldValue;
    fn sub(self, rhs: Self) -> Self {
        let lhs = self.check(&rhs);
        Self::new(lhs.residue + lhs.modulus - rhs.residue, lhs.modulus)
    }
}

impl Mul for PrimeFieldValue {
    type Output = PrimeFieldValue;
    fn mul(self, rhs: Self) -> Self {
        let lhs = self.check(&rhs);
        Self::new(mul_mod(lhs.residue, rhs.residue, lhs.modulus), lhs.modulus)
    }
}

impl Neg for PrimeFieldValue {
    type Output = PrimeFieldValue;
    fn neg(self) -> Self {
        Self::new(self.modulus - self.residue, self.modulus)
    }
}

impl fmt::Display for PrimeFieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.residue, self.modulus)
    }
}

/// All primes in `[lo, hi]`, ascending, by a sieve of Eratosthenes.
pub fn primes_in(lo: u64, hi: u64) -> Result<Vec<u64>> {
    if lo < 2 || lo > hi {
        return Err(Error::BadPrimeRange { lo, hi });
    }
    let hi_us = usize::try_from(hi).expect("prime bound fits usize");
    let mut sieve = vec![true; hi_us + 1];
    sieve[0] = false;
    if hi_us >= 1 {
        sieve[1] = false;
    }
    let mut n = 2usize;
    while n * n <= hi_us {
        if sieve[n] {
            let mut m = n * n;
            while m <= hi_us {
                sieve[m] = false;
                m += n;
            }
        }
        n += 1;
    }
    Ok((lo..=hi).filter(|&p| sieve[p as usize]).collect())
}

/// Table `t` with `n * t[n] = 1 (mod p)` for all `1 <= n < p`, computed in
/// O(p) total via `t[n] = -(p/n) * t[p mod n]`. Slot 0 is unused.
pub fn inverse_table(p: u64) -> Vec<u64> {
    let len = usize::try_from(p).expect("prime fits usize");
    let mut t = vec![0u64; len.max(2)];
    t[1] = 1 % p;
    for n in 2..len {
        let n64 = n as u64;
        t[n] = mul_mod(p - p / n64, t[(p % n64) as usize], p);
    }
    t.truncate(len);
    t
}
