//! Truncated multiple zeta(-star) sums over the reals, and the zeta(2),
//! zeta(3) reference constants.

use std::collections::HashMap;

use crate::index_algebra::Index;
use crate::smzv_numeric::DoubleDouble;

/// The finite sum `sum_{0 < n_1 < ... < n_r <= M} prod n_j^{-k_j}` (weak
/// inequalities for the star variant), accumulated in double-double.
#[derive(Clone, Debug)]
pub struct TruncatedValue {
    pub index: Index,
    pub cutoff: u64,
    pub star: bool,
    value: DoubleDouble,
}

impl TruncatedValue {
    pub fn value(&self) -> f64 {
        self.value.to_f64()
    }

    pub fn value_dd(&self) -> DoubleDouble {
        self.value
    }
}

/// Truncated multiple zeta value: the same rolling recurrences as the mod-p
/// engine, run over the reals in ascending n. The empty index gives 1; any
/// index with depth above the cutoff gives 0.
pub fn truncated_mzv(k: &Index, cutoff: u64, star: bool) -> TruncatedValue {
    TruncatedValue {
        index: k.clone(),
        cutoff,
        star,
        value: truncated_dd(k, cutoff, star),
    }
}

pub(crate) fn truncated_dd(k: &Index, cutoff: u64, star: bool) -> DoubleDouble {
    let r = k.depth();
    if r == 0 {
        return DoubleDouble::ONE;
    }
    let mut state = vec![DoubleDouble::ZERO; r + 1];
    state[0] = DoubleDouble::ONE;
    for n in 1..=cutoff {
        let inv_n = DoubleDouble::from_u64(n).recip();
        if star {
            for j in 1..=r {
                let t = inv_n.powi(k.entries()[j - 1]);
                state[j] = state[j] + state[j - 1] * t;
            }
        } else {
            for j in (1..=r).rev() {
                let t = inv_n.powi(k.entries()[j - 1]);
                state[j] = state[j] + state[j - 1] * t;
            }
        }
    }
    state[r]
}

/// Memo table for non-star truncated values at one fixed cutoff; the
/// symmetric sums reuse the same prefixes and reversed suffixes heavily.
pub(crate) struct TruncatedTable {
    cutoff: u64,
    memo: HashMap<Index, DoubleDouble>,
}

impl TruncatedTable {
    pub fn new(cutoff: u64) -> Self {
        TruncatedTable {
            cutoff,
            memo: HashMap::new(),
        }
    }

    pub fn get(&mut self, k: &Index) -> DoubleDouble {
        if k.is_empty() {
            return DoubleDouble::ONE;
        }
        if let Some(&v) = self.memo.get(k) {
            return v;
        }
        let v = truncated_dd(k, self.cutoff, false);
        self.memo.insert(k.clone(), v);
        v
    }
}

/// zeta(2) and zeta(3) to well beyond the tolerances in play, from the same
/// truncated summation at `100 * cutoff` plus an Euler-Maclaurin tail
/// estimate. Computed internally rather than hard-coded so the module is
/// self-contained; memoized per cutoff since the long summation dominates
/// the cost of a weighted-sum sweep.
pub fn reference_zeta2_zeta3(cutoff: u64) -> (DoubleDouble, DoubleDouble) {
    use std::collections::HashMap;
    use std::sync::Mutex;
    static MEMO: Mutex<Option<HashMap<u64, (DoubleDouble, DoubleDouble)>>> = Mutex::new(None);

    if let Some(hit) = MEMO
        .lock()
        .expect("reference memo")
        .get_or_insert_with(HashMap::new)
        .get(&cutoff)
    {
        return *hit;
    }
    let pair = compute_references(cutoff);
    MEMO.lock()
        .expect("reference memo")
        .get_or_insert_with(HashMap::new)
        .insert(cutoff, pair);
    pair
}

fn compute_references(cutoff: u64) -> (DoubleDouble, DoubleDouble) {
    let big = 100 * cutoff.max(1);
    let nf = DoubleDouble::from_u64(big);
    let inv = nf.recip();
    let inv2 = inv * inv;
    let inv3 = inv2 * inv;
    let inv4 = inv2 * inv2;

    // tail of sum n^{-2} beyond N: 1/N - 1/(2N^2) + 1/(6N^3) - 1/(30N^5) ...
    let zeta2_tail = inv - inv2 * DoubleDouble::from_f64(0.5)
        + inv3 / DoubleDouble::from_f64(6.0)
        - inv4 * inv / DoubleDouble::from_f64(30.0);
    // tail of sum n^{-3} beyond N: 1/(2N^2) - 1/(2N^3) + 1/(4N^4) - 1/(12N^6)
    let zeta3_tail = inv2 * DoubleDouble::from_f64(0.5) - inv3 * DoubleDouble::from_f64(0.5)
        + inv4 * DoubleDouble::from_f64(0.25)
        - inv4 * inv2 / DoubleDouble::from_f64(12.0);

    let two = truncated_dd(&Index::new(vec![2]).unwrap(), big, false) + zeta2_tail;
    let three = truncated_dd(&Index::new(vec![3]).unwrap(), big, false) + zeta3_tail;
    (two, three)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{Signed, ToPrimitive, Zero};

    fn idx(s: &str) -> Index {
        s.parse().unwrap()
    }

    /// Literal nested-loop rational evaluation, independent of the DP.
    fn exact_truncated(k: &Index, cutoff: u64, star: bool) -> BigRational {
        fn rec(entries: &[u32], lo: u64, cutoff: u64, star: bool) -> BigRational {
            match entries.split_first() {
                None => BigRational::from_integer(1.into()),
                Some((&k0, rest)) => {
                    let mut acc = BigRational::zero();
                    let start = if star { lo.max(1) } else { lo + 1 };
                    for n in start..=cutoff {
                        let term = BigRational::new(BigInt::from(1), BigInt::from(n).pow(k0));
                        acc += term * rec(rest, n, cutoff, star);
                    }
                    acc
                }
            }
        }
        rec(k.entries(), 0, cutoff, star)
    }

    #[test]
    fn dp_matches_exact_rationals_at_small_cutoffs() {
        for s in ["1", "2", "1,2", "2,1", "1,1,2", "3,1"] {
            for star in [false, true] {
                let k = idx(s);
                let got = truncated_mzv(&k, 40, star);
                let exact = exact_truncated(&k, 40, star);
                let approx = BigRational::from_float(got.value_dd().to_f64()).unwrap();
                let rel = ((&approx - &exact).abs() / exact.abs()).to_f64().unwrap();
                assert!(rel < 1e-15, "{s} star={star}: rel {rel}");
            }
        }
    }

    #[test]
    fn edge_cases() {
        assert_eq!(truncated_mzv(&idx("1"), 1, false).value(), 1.0);
        assert_eq!(truncated_mzv(&Index::empty(), 10, false).value(), 1.0);
        // depth above the cutoff leaves an empty range
        assert_eq!(truncated_mzv(&idx("1,1,1"), 2, false).value(), 0.0);
        // star variant allows repeats, so it is nonzero there
        assert!(truncated_mzv(&idx("1,1,1"), 2, true).value() > 0.0);
    }

    #[test]
    fn converges_to_classical_values() {
        // zeta(2) = 1.6449340668..., truncation tail ~ 1/M
        let z2 = truncated_mzv(&idx("2"), 1_000_000, false).value();
        assert!((z2 - 1.644_934_066_848_226_4).abs() < 2e-6);
        // zeta(3) = 1.2020569031..., tail ~ 1/(2M^2)
        let z3 = truncated_mzv(&idx("3"), 1_000_000, false).value();
        assert!((z3 - 1.202_056_903_159_594_3).abs() < 1e-9);
    }

    /// Reads a decimal literal into double-double, digit by digit.
    fn dd_parse(digits: &str) -> DoubleDouble {
        let (int_part, frac_part) = digits.split_once('.').unwrap();
        let ten = DoubleDouble::from_f64(10.0);
        let mut acc = DoubleDouble::ZERO;
        for ch in int_part.chars().chain(frac_part.chars()) {
            acc = acc * ten + DoubleDouble::from_f64(f64::from(ch.to_digit(10).unwrap()));
        }
        acc / ten.powi(frac_part.len() as u32)
    }

    #[test]
    fn reference_constants_hit_literature_digits() {
        let (z2, z3) = reference_zeta2_zeta3(100_000);
        let z2_target = dd_parse("1.64493406684822643647241516664602518922");
        let z3_target = dd_parse("1.20205690315959428539973816151144999076");
        assert!((z2 - z2_target).abs().to_f64() < 1e-20);
        assert!((z3 - z3_target).abs().to_f64() < 1e-20);
    }
}
