//! Numeric-module invariants that are monitored rather than proved: the
//! Cauchy behavior of the truncated symmetric sums and the exact odd-ones
//! cancellation.

use mzv_core::index_algebra::indices_up_to_weight;
use mzv_core::smzv_numeric::smzv_star_approx;
use mzv_core::Index;

/// `|approx(2M) - approx(M)|` shrinks by at least 1.5x per doubling of M
/// across M = 2^10 .. 2^17, for every index of weight <= 5. Identically-zero
/// values have zero gaps throughout, which the bound accepts; the small
/// absolute allowance covers double-double roundoff on fast-converging
/// indices.
#[test]
fn cauchy_gap_shrinks_when_cutoff_doubles() {
    for k in indices_up_to_weight(5) {
        let gaps: Vec<f64> = (11..=17)
            .map(|e| smzv_star_approx(&k, 1 << e).unwrap().cauchy_gap)
            .collect();
        for w in gaps.windows(2) {
            assert!(
                w[1] <= w[0] / 1.5 + 1e-24,
                "gap did not shrink for {k}: {gaps:?}"
            );
        }
    }
}

/// The symmetric sum over ({1}^r) cancels pairwise for odd r, at every
/// cutoff, to accumulation error.
#[test]
fn odd_ones_cancel_exactly() {
    for r in [1usize, 3, 5, 7] {
        for m in [1u64, 64, 1 << 10, 1 << 14] {
            let a = smzv_star_approx(&Index::ones(r), m).unwrap();
            assert!(
                a.value().abs() <= 1e-12,
                "({{1}}^{r}) at M = {m}: {}",
                a.value()
            );
        }
    }
}
