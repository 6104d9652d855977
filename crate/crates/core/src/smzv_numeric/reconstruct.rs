//! Rational reconstruction from floating-point values by continued-fraction
//! convergents.

use num_bigint::BigInt;

use crate::rational::Rational;

/// The continued-fraction convergent p/q of `x` with `q <= max_den` and
/// `|x - p/q| <= tol`, if one exists. Absence is a value, not an error.
pub fn rational_reconstruct(x: f64, max_den: u64, tol: f64) -> Option<Rational> {
    assert!(max_den >= 1 && tol > 0.0);
    if !x.is_finite() {
        return None;
    }
    // Convergents p_j/q_j of the continued fraction of x; the last one with
    // a small enough denominator is the best rational approximation.
    let mut p_prev = BigInt::from(1);
    let mut q_prev = BigInt::from(0);
    let mut p = BigInt::from(x.floor() as i64);
    let mut q = BigInt::from(1);
    let mut frac = x - x.floor();

    for _ in 0..64 {
        // A tail this small only refines digits beyond f64 resolution.
        if frac.abs() < 1e-15 {
            break;
        }
        let y = 1.0 / frac;
        let a = y.floor();
        frac = y - a;
        let a = BigInt::from(a as i64);
        let p_next = &a * &p + &p_prev;
        let q_next = &a * &q + &q_prev;
        if q_next > BigInt::from(max_den) {
            break;
        }
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
    }

    let candidate = Rational::new(p, q);
    if (x - candidate.to_f64()).abs() <= tol {
        Some(candidate)
    } else {
        None
    }
}
