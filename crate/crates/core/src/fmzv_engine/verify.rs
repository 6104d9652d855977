//! Prime sweeps over the mod-p identities, with deterministic reports.
//!
//! Each identity here is a theorem in the ring A, i.e. an equality of
//! residues for all sufficiently large primes. A prime can only degenerate
//! when p - 1 divides an exponent sum in play (Fermat/Wilson), which needs
//! p <= weight + 1, so sweeps assert residues for p > weight + 1 and merely
//! record rows at or below that bound. The antipode relation is exact at
//! every truncation, hence asserted at every prime.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fmzv_engine::{
    composition_values_mod_p, eval_combination_mod_p, harmonic_mod_p, mul_mod, pow_mod,
};
use crate::index_algebra::{build_g, phi, Index};
use crate::parallel;

/// One prime's outcome; `pass` iff the residue is zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub p: u64,
    pub residue: u64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub all_pass: bool,
    pub first_failure: Option<u64>,
    /// Primes strictly above this bound are asserted; rows at or below it
    /// are recorded without affecting `all_pass`.
    pub asserted_above: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub star: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeRange {
    pub lo: u64,
    pub hi: u64,
}

/// Structured outcome of one identity swept over a prime list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeSweepReport {
    pub identity: String,
    pub params: SweepParams,
    pub primes: PrimeRange,
    pub results: Vec<SweepRow>,
    pub summary: SweepSummary,
}

impl PrimeSweepReport {
    fn assemble(
        identity: &str,
        params: SweepParams,
        primes: &[u64],
        asserted_above: u64,
        rows: Vec<SweepRow>,
    ) -> Self {
        debug_assert!(rows.windows(2).all(|w| w[0].p < w[1].p));
        let first_failure = rows
            .iter()
            .find(|row| row.p > asserted_above && !row.pass)
            .map(|row| row.p);
        PrimeSweepReport {
            identity: identity.to_string(),
            params,
            primes: PrimeRange {
                lo: primes.first().copied().unwrap_or(0),
                hi: primes.last().copied().unwrap_or(0),
            },
            results: rows,
            summary: SweepSummary {
                all_pass: first_failure.is_none(),
                first_failure,
                asserted_above,
            },
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.all_pass
    }

    /// Residues of every recorded row, including unasserted small primes.
    pub fn residues(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.results.iter().map(|row| (row.p, row.residue))
    }
}

fn sweep<F>(primes: &[u64], residue_at: F) -> Vec<SweepRow>
where
    F: Fn(u64) -> u64 + Send + Sync,
{
    parallel::map_collect(primes.to_vec(), |p| {
        let residue = residue_at(p);
        SweepRow {
            p,
            residue,
            pass: residue == 0,
        }
    })
}

/// `zeta_p(k) = zeta_p(phi(k))` for each prime.
pub fn verify_phi_duality(k: &Index, primes: &[u64]) -> Result<PrimeSweepReport> {
    let ph = phi(k)?;
    let rows = sweep(primes, |p| {
        let lhs = harmonic_mod_p(k, p, false);
        let rhs = eval_combination_mod_p(&ph, p, false).expect("integer coefficients");
        (lhs - rhs).residue()
    });
    Ok(PrimeSweepReport::assemble(
        "phi-duality",
        SweepParams {
            index: Some(k.to_string()),
            ..Default::default()
        },
        primes,
        u64::from(k.weight()) + 1,
        rows,
    ))
}

/// `zeta_p(G(k, l)) = 0` for each prime.
pub fn verify_oyama(k: &Index, l: u32, primes: &[u64]) -> Result<PrimeSweepReport> {
    let g = build_g(k, l)?;
    let rows = sweep(primes, |p| {
        eval_combination_mod_p(&g, p, false)
            .expect("integer coefficients")
            .residue()
    });
    Ok(PrimeSweepReport::assemble(
        "oyama",
        SweepParams {
            index: Some(k.to_string()),
            l: Some(l),
            ..Default::default()
        },
        primes,
        u64::from(k.weight() + l) + 1,
        rows,
    ))
}

/// `sum_{l=0}^{r} (-1)^l zeta*_p(k_1..k_l) zeta_p(k_r..k_{l+1}) = 0`; exact
/// at every prime, with the empty-index convention value 1 on both factors.
pub fn verify_antipode(k: &Index, primes: &[u64]) -> Result<PrimeSweepReport> {
    if k.is_empty() {
        return Err(Error::EmptyIndex);
    }
    let rows = sweep(primes, |p| {
        let mut acc = crate::fmzv_engine::PrimeFieldValue::zero(p);
        for l in 0..=k.depth() {
            let star_part = harmonic_mod_p(&k.prefix(l), p, true);
            let plain_part = harmonic_mod_p(&k.reversed_suffix(l), p, false);
            let term = star_part * plain_part;
            acc = if l % 2 == 0 { acc + term } else { acc - term };
        }
        acc.residue()
    });
    Ok(PrimeSweepReport::assemble(
        "antipode",
        SweepParams {
            index: Some(k.to_string()),
            ..Default::default()
        },
        primes,
        0,
        rows,
    ))
}

/// `sum_{sigma in S_r} zeta_p(k_sigma(1), ..., k_sigma(r)) = 0`, permutations
/// counted with multiplicity. Depth is capped at 8 against factorial blowup.
pub fn verify_symmetric_sum(k: &Index, primes: &[u64], star: bool) -> Result<PrimeSweepReport> {
    if k.is_empty() {
        return Err(Error::EmptyIndex);
    }
    if k.depth() > 8 {
        return Err(Error::DepthLimit(k.depth()));
    }
    let perms = permutations_with_multiplicity(k.entries());
    let rows = sweep(primes, |p| {
        let mut acc = crate::fmzv_engine::PrimeFieldValue::zero(p);
        for perm in &perms {
            acc = acc + harmonic_mod_p(perm, p, star);
        }
        acc.residue()
    });
    Ok(PrimeSweepReport::assemble(
        "symsum",
        SweepParams {
            index: Some(k.to_string()),
            star: Some(star),
            ..Default::default()
        },
        primes,
        u64::from(k.weight()) + 1,
        rows,
    ))
}

/// The weighted sum formula: `sum over compositions of k into r parts of
/// 2^{k_i} zeta_p(k_1, ..., k_r) = 0` (or the star variant). Only primes
/// p > k enter the report; r must be odd.
pub fn verify_weighted_sum(
    k: u32,
    r: u32,
    i: u32,
    primes: &[u64],
    star: bool,
) -> Result<PrimeSweepReport> {
    crate::index_algebra::check_triple(k, r, i)?;
    if r % 2 == 0 {
        return Err(Error::EvenDepth(r));
    }
    let swept: Vec<u64> = primes.iter().copied().filter(|&p| p > u64::from(k)).collect();
    let rows = sweep(&swept, |p| weighted_sum_residue(k, r, i, p, star));
    Ok(PrimeSweepReport::assemble(
        "fmzv-wsf",
        SweepParams {
            k: Some(k),
            r: Some(r),
            i: Some(i),
            star: Some(star),
            ..Default::default()
        },
        &swept,
        u64::from(k) + 1,
        rows,
    ))
}

/// Residue of the weighted sum at a single prime, via the prefix-sharing
/// composition sweep.
pub fn weighted_sum_residue(k: u32, r: u32, i: u32, p: u64, star: bool) -> u64 {
    let values = composition_values_mod_p(k, r, p, star).expect("1 <= r <= k");
    let mut acc = 0u64;
    for (c, v) in values {
        let weight = pow_mod(2, u64::from(c.entries()[i as usize - 1]), p);
        acc = (acc + mul_mod(weight, v.residue(), p)) % p;
    }
    acc
}

/// All `r!` arrangements of the entries, repeats included.
fn permutations_with_multiplicity(entries: &[u32]) -> Vec<Index> {
    let mut scratch = entries.to_vec();
    let mut out = Vec::new();
    heap_permute(scratch.len(), &mut scratch, &mut out);
    out
}

fn heap_permute(n: usize, scratch: &mut Vec<u32>, out: &mut Vec<Index>) {
    if n <= 1 {
        out.push(Index::new(scratch.clone()).expect("positive entries"));
        return;
    }
    for j in 0..n {
        heap_permute(n - 1, scratch, out);
        if n % 2 == 0 {
            scratch.swap(j, n - 1);
        } else {
            scratch.swap(0, n - 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fmzv_engine::primes_in;

    fn idx(s: &str) -> Index {
        s.parse().unwrap()
    }

    #[test]
    fn phi_duality_small_sweeps() {
        let primes = primes_in(3, 50).unwrap();
        for s in ["2", "1", "1,2"] {
            let report = verify_phi_duality(&idx(s), &primes).unwrap();
            assert!(report.all_pass(), "{s}");
            assert!(report.results.iter().all(|row| row.pass), "{s}");
        }
    }

    #[test]
    fn oyama_examples() {
        let r = verify_oyama(&idx("2"), 1, &[5]).unwrap();
        assert!(r.all_pass());
        // l = 0 makes G vanish identically.
        let r = verify_oyama(&idx("3,1"), 0, &[7, 11]).unwrap();
        assert!(r.results.iter().all(|row| row.residue == 0));
        let r = verify_oyama(&idx("1,2"), 2, &primes_in(5, 100).unwrap()).unwrap();
        assert!(r.all_pass());
    }

    #[test]
    fn antipode_examples() {
        // Depth 1 passes identically.
        let r = verify_antipode(&idx("4"), &primes_in(2, 30).unwrap()).unwrap();
        assert!(r.results.iter().all(|row| row.residue == 0));
        // zeta(2,1) - zeta*(1) zeta(2) + zeta*(1,2) = 4 - 0 + 1 = 0 mod 5.
        let r = verify_antipode(&idx("1,2"), &[5]).unwrap();
        assert!(r.all_pass());
        let r = verify_antipode(&idx("2,2,1"), &primes_in(5, 100).unwrap()).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.summary.asserted_above, 0);
    }

    #[test]
    fn symmetric_sum_examples() {
        // zeta(1,2) + zeta(2,1) = 1 + 4 = 0 mod 5.
        let r = verify_symmetric_sum(&idx("1,2"), &[5], false).unwrap();
        assert!(r.all_pass());
        let r = verify_symmetric_sum(&idx("1,1,2"), &primes_in(7, 100).unwrap(), true).unwrap();
        assert!(r.all_pass());
        assert!(verify_symmetric_sum(&Index::ones(9), &[5], false).is_err());
    }

    #[test]
    fn weighted_sum_examples() {
        // (3,3,1) at p=5: 2 * zeta(1,1,1) = 0.
        assert_eq!(weighted_sum_residue(3, 3, 1, 5, false), 0);
        let r = verify_weighted_sum(4, 3, 1, &primes_in(2, 200).unwrap(), false).unwrap();
        // Rows start above k = 4.
        assert_eq!(r.results.first().map(|row| row.p), Some(5));
        // p = 5 = k + 1 is the Wilson prime: residue -1, recorded, unasserted.
        assert_eq!(r.results[0].residue, 4);
        assert!(!r.results[0].pass);
        // Everything strictly above k + 1 passes, so the sweep passes.
        assert!(r.all_pass());
        assert_eq!(r.summary.first_failure, None);
        let r = verify_weighted_sum(6, 3, 2, &primes_in(7, 200).unwrap(), true).unwrap();
        assert!(r.all_pass());
    }

    #[test]
    fn weighted_sum_rejects_even_r() {
        assert_eq!(
            verify_weighted_sum(8, 2, 1, &[11], false).unwrap_err(),
            Error::EvenDepth(2)
        );
        assert!(verify_weighted_sum(3, 5, 1, &[11], false).is_err());
    }

    #[test]
    fn permutation_multiplicity() {
        assert_eq!(permutations_with_multiplicity(&[1, 1, 2]).len(), 6);
        assert_eq!(permutations_with_multiplicity(&[3]).len(), 1);
    }

    #[test]
    fn report_serialization_is_stable() {
        let r = verify_weighted_sum(3, 3, 1, &[5, 7], false).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"identity\":\"fmzv-wsf\""));
        assert!(json.contains("\"primes\":{\"lo\":5,\"hi\":7}"));
        assert!(json.contains("\"all_pass\":true"));
    }
}
