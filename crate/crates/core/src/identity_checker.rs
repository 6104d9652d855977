//! Exact symbolic verification of the key lemma, its two supporting counting
//! lemmas, the binomial identity inside their proofs, and the involution
//! sanity checks, over bounded parameter grids.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::index_algebra::{
    build_f, build_g1, build_g2, build_h, check_triple, hoffman_dual, indices_up_to_weight, phi,
    phi_combination, Index, IndexCombination,
};
use crate::parallel;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    Lemma1,
    Lemma2,
    KeyLemma,
    BinomialIdentity,
    MultiplicityA,
    MultiplicityB,
    PhiInvolution,
    DualInvolution,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LemmaParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_weight: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
}

impl LemmaParams {
    fn triple(k: u32, r: u32, i: u32) -> Self {
        LemmaParams {
            k: Some(k),
            r: Some(r),
            i: Some(i),
            ..Default::default()
        }
    }
}

/// Outcome of one exact check. `pass` holds exactly when the residual
/// combination (LHS - RHS) is empty; the residual is kept in full so a
/// failure is an actionable counterexample, not just a boolean.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaCheckResult {
    pub lemma: LemmaId,
    pub params: LemmaParams,
    pub pass: bool,
    #[serde(serialize_with = "serialize_combination")]
    pub residual: IndexCombination,
}

fn serialize_combination<S: serde::Serializer>(
    c: &IndexCombination,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(c)
}

impl LemmaCheckResult {
    fn from_residual(lemma: LemmaId, params: LemmaParams, residual: IndexCombination) -> Self {
        LemmaCheckResult {
            lemma,
            params,
            pass: residual.is_zero(),
            residual,
        }
    }
}

/// `sum_{l=1}^{k-r-1} 2^{l-1} G_1(({1}^{i-1}, l+1, {1}^{r-i}), k-r-l) +
/// G_1(({1}^r), k-r)`, the combination called A in the first counting
/// argument. Built term by term, with no algebraic shortcut.
pub fn lemma_sum_g1(k: u32, r: u32, i: u32) -> Result<IndexCombination> {
    check_triple(k, r, i)?;
    let mut acc = IndexCombination::zero();
    if k >= r + 2 {
        for l in 1..=k - r - 1 {
            let base = Index::sandwich(r, i, l + 1);
            acc.add_assign(&build_g1(&base, k - r - l)?.scale(&Rational::pow2(i64::from(l) - 1)));
        }
    }
    acc.add_assign(&build_g1(&Index::ones(r as usize), k - r)?);
    Ok(acc)
}

/// The G_2 counterpart, the combination called B in the second counting
/// argument.
pub fn lemma_sum_g2(k: u32, r: u32, i: u32) -> Result<IndexCombination> {
    check_triple(k, r, i)?;
    let mut acc = IndexCombination::zero();
    if k >= r + 2 {
        for l in 1..=k - r - 1 {
            let base = Index::sandwich(r, i, l + 1);
            acc.add_assign(&build_g2(&base, k - r - l)?.scale(&Rational::pow2(i64::from(l) - 1)));
        }
    }
    acc.add_assign(&build_g2(&Index::ones(r as usize), k - r)?);
    Ok(acc)
}

/// First counting lemma: `F(k,r,i) - A = 2^{k-r-1} ({1}^{i-1}, k-r+1,
/// {1}^{r-i})` for k > r. The k = r boundary is outside the closed form
/// (its coefficient would be 2^{-1}); there the check pins the separately
/// asserted identity `F(r,r,i) = ({1}^r)` instead.
pub fn check_lemma1(k: u32, r: u32, i: u32) -> Result<LemmaCheckResult> {
    check_triple(k, r, i)?;
    let residual = if k == r {
        build_f(k, r, i)? - IndexCombination::from_index(Index::ones(r as usize))
    } else {
        let lhs = build_f(k, r, i)? - lemma_sum_g1(k, r, i)?;
        let rhs = IndexCombination::term(
            Index::sandwich(r, i, k - r + 1),
            Rational::pow2(i64::from(k - r) - 1),
        );
        lhs - rhs
    };
    Ok(LemmaCheckResult::from_residual(
        LemmaId::Lemma1,
        LemmaParams::triple(k, r, i),
        residual,
    ))
}

/// Number of copies of the composition `a` inside A, by brute-force
/// coefficient lookup and by the closed form `2^{a_i-1}` (for `a_i <= k-r`)
/// or `2^{k-r-1}` (for `a_i = k-r+1`). Requires k > r so the closed form is
/// an integer.
pub fn multiplicity_oracle_a(k: u32, r: u32, i: u32, a: &Index) -> Result<(u64, u64)> {
    check_triple(k, r, i)?;
    if k == r {
        return Err(Error::DegenerateWeight(k));
    }
    if a.weight() != k || a.depth() != r as usize {
        return Err(Error::NotAComposition {
            index: a.to_string(),
            k,
            r,
        });
    }
    let combination = lemma_sum_g1(k, r, i)?;
    Ok((
        coefficient_as_count(&combination, a),
        closed_form_a(k, r, a.entries()[i as usize - 1]),
    ))
}

fn closed_form_a(k: u32, r: u32, a_i: u32) -> u64 {
    if a_i <= k - r {
        1 << (a_i - 1)
    } else {
        1 << (k - r - 1)
    }
}

/// Per-target multiplicity check packaged as a lemma result.
pub fn check_multiplicity_a(k: u32, r: u32, i: u32, a: &Index) -> Result<LemmaCheckResult> {
    let (brute, closed) = multiplicity_oracle_a(k, r, i, a)?;
    Ok(count_result(LemmaId::MultiplicityA, k, r, i, a, brute, closed))
}

/// Second counting lemma: `B + phi(B)` against `-2^{k-r-1} (Y + phi(Y))`,
/// plus `({1}^k)` when k is even, with Y the one-bump sandwich index.
/// Stated for odd r; k = r stays exact because `Y + phi(Y)` vanishes there.
pub fn check_lemma2(k: u32, r: u32, i: u32) -> Result<LemmaCheckResult> {
    check_triple(k, r, i)?;
    if r % 2 == 0 {
        return Err(Error::EvenDepth(r));
    }
    let b = lemma_sum_g2(k, r, i)?;
    let lhs = b.clone() + phi_combination(&b)?;
    let residual = lhs - lemma2_rhs(k, r, i)?;
    Ok(LemmaCheckResult::from_residual(
        LemmaId::Lemma2,
        LemmaParams::triple(k, r, i),
        residual,
    ))
}

fn lemma2_rhs(k: u32, r: u32, i: u32) -> Result<IndexCombination> {
    let bump = Index::sandwich(r, i, k - r + 1);
    let bump_comb = IndexCombination::from_index(bump.clone());
    let mut rhs =
        (bump_comb + phi(&bump)?).scale(&-Rational::pow2(i64::from(k - r) - 1));
    if k % 2 == 0 {
        rhs.add_assign(&IndexCombination::from_index(Index::ones(k as usize)));
    }
    Ok(rhs)
}

/// Number of copies of `a` inside `B + phi(B)`: `2^{k-r-1}` for the interior
/// sandwich shapes, and `2^{k-r-1} + 1` (k even) or `2^{k-r-1}` (k odd) for
/// `({1}^k)`.
pub fn multiplicity_oracle_b(k: u32, r: u32, i: u32, a: &Index) -> Result<(u64, u64)> {
    check_triple(k, r, i)?;
    if r % 2 == 0 {
        return Err(Error::EvenDepth(r));
    }
    if k == r {
        return Err(Error::DegenerateWeight(k));
    }
    let expected = expected_count_b(k, r, i, a)?;
    let b = lemma_sum_g2(k, r, i)?;
    let full = b.clone() + phi_combination(&b)?;
    Ok((coefficient_as_count(&full, a), expected))
}

fn expected_count_b(k: u32, r: u32, i: u32, a: &Index) -> Result<u64> {
    let base = 1u64 << (k - r - 1);
    if *a == Index::ones(k as usize) {
        return Ok(if k % 2 == 0 { base + 1 } else { base });
    }
    let shape_err = || Error::BadTargetShape(a.to_string());
    if a.weight() != k {
        return Err(shape_err());
    }
    let d = (a.depth() + 1).checked_sub(r as usize).ok_or_else(shape_err)?;
    if d < 2 || d as u32 > k - r {
        return Err(shape_err());
    }
    let entries = a.entries();
    let lead = i as usize - 1;
    let trail = (r - i) as usize;
    if entries[..lead].iter().any(|&x| x != 1)
        || entries[entries.len() - trail..].iter().any(|&x| x != 1)
    {
        return Err(shape_err());
    }
    let mid: u32 = entries[lead..lead + d].iter().sum();
    if mid != k - r + 1 {
        return Err(shape_err());
    }
    Ok(base)
}

/// Per-target multiplicity check packaged as a lemma result.
pub fn check_multiplicity_b(k: u32, r: u32, i: u32, a: &Index) -> Result<LemmaCheckResult> {
    let (brute, closed) = multiplicity_oracle_b(k, r, i, a)?;
    Ok(count_result(LemmaId::MultiplicityB, k, r, i, a, brute, closed))
}

fn count_result(
    lemma: LemmaId,
    k: u32,
    r: u32,
    i: u32,
    a: &Index,
    brute: u64,
    closed: u64,
) -> LemmaCheckResult {
    let mut params = LemmaParams::triple(k, r, i);
    params.target = Some(a.to_string());
    let diff = Rational::from(brute) - Rational::from(closed);
    LemmaCheckResult::from_residual(lemma, params, IndexCombination::scalar(diff))
}

/// `sum_{l=0}^{d-2} (-2)^l C(d-1, l) = (-1)^{d-1} - (-2)^{d-1}`, checked in
/// exact integer arithmetic.
pub fn check_binomial_identity(d: u32) -> LemmaCheckResult {
    assert!(d >= 2, "stated for d >= 2");
    let mut lhs = BigInt::zero();
    for l in 0..=d - 2 {
        lhs += neg_two_pow(l) * binomial(d - 1, l);
    }
    let rhs = neg_one_pow(d - 1) - neg_two_pow(d - 1);
    let residual = IndexCombination::scalar(Rational::from(lhs - rhs));
    LemmaCheckResult::from_residual(
        LemmaId::BinomialIdentity,
        LemmaParams {
            d: Some(d),
            ..Default::default()
        },
        residual,
    )
}

fn neg_two_pow(e: u32) -> BigInt {
    let mag = BigInt::one() << e;
    if e % 2 == 0 {
        mag
    } else {
        -mag
    }
}

fn neg_one_pow(e: u32) -> BigInt {
    if e % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 1..=k {
        acc = acc * BigInt::from(n - k + j) / BigInt::from(j);
    }
    acc
}

/// Residual of the key lemma without the parity precondition, so the r-odd
/// hypothesis can be exercised as a negative control.
pub fn key_lemma_residual(k: u32, r: u32, i: u32) -> Result<IndexCombination> {
    let h = build_h(k, r, i)?;
    let mut residual = h.clone() + phi_combination(&h)?;
    if k % 2 == 0 {
        residual.sub_assign(&IndexCombination::from_index(Index::ones(k as usize)));
    }
    Ok(residual)
}

/// Key lemma: `H + phi(H)` equals `({1}^k)` for even k and vanishes for odd
/// k, for odd r.
pub fn check_key_lemma(k: u32, r: u32, i: u32) -> Result<LemmaCheckResult> {
    check_triple(k, r, i)?;
    if r % 2 == 0 {
        return Err(Error::EvenDepth(r));
    }
    Ok(LemmaCheckResult::from_residual(
        LemmaId::KeyLemma,
        LemmaParams::triple(k, r, i),
        key_lemma_residual(k, r, i)?,
    ))
}

/// phi composed with itself is the identity on every nonempty index of
/// weight at most `max_weight`.
pub fn check_phi_involution(max_weight: u32) -> LemmaCheckResult {
    involution_check(LemmaId::PhiInvolution, max_weight, |k| {
        let twice = phi_combination(&phi(k).expect("nonempty")).expect("nonempty");
        twice - IndexCombination::from_index(k.clone())
    })
}

/// Hoffman's dual composed with itself is the identity on every nonempty
/// index of weight at most `max_weight`.
pub fn check_dual_involution(max_weight: u32) -> LemmaCheckResult {
    involution_check(LemmaId::DualInvolution, max_weight, |k| {
        let twice = hoffman_dual(&hoffman_dual(k).expect("nonempty")).expect("nonempty");
        IndexCombination::from_index(twice) - IndexCombination::from_index(k.clone())
    })
}

fn involution_check<F>(lemma: LemmaId, max_weight: u32, diff: F) -> LemmaCheckResult
where
    F: Fn(&Index) -> IndexCombination + Send + Sync,
{
    assert!(max_weight >= 1);
    let diffs = parallel::map_collect(indices_up_to_weight(max_weight), |k| {
        let d = diff(&k);
        (k, d)
    });
    let failure = diffs.into_iter().find(|(_, d)| !d.is_zero());
    let mut params = LemmaParams {
        max_weight: Some(max_weight),
        ..Default::default()
    };
    let residual = match failure {
        Some((k, d)) => {
            params.target = Some(k.to_string());
            d
        }
        None => IndexCombination::zero(),
    };
    LemmaCheckResult::from_residual(lemma, params, residual)
}

fn coefficient_as_count(c: &IndexCombination, a: &Index) -> u64 {
    let coeff = c.coefficient(a);
    debug_assert!(coeff.is_integer() && !coeff.numer().is_negative());
    coeff.numer().to_u64().expect("count fits u64")
}

// --- grid sweeps -----------------------------------------------------------

/// All (k, r, i) with odd r and 1 <= i <= r <= k <= max_k, in canonical
/// order.
pub fn odd_triples(max_k: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for k in 1..=max_k {
        for r in (1..=k).step_by(2) {
            for i in 1..=r {
                out.push((k, r, i));
            }
        }
    }
    out
}

/// All (k, r, i) with 1 <= i <= r <= k <= max_k, any parity.
pub fn all_triples(max_k: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for k in 1..=max_k {
        for r in 1..=k {
            for i in 1..=r {
                out.push((k, r, i));
            }
        }
    }
    out
}

pub fn key_lemma_grid(max_k: u32) -> Vec<LemmaCheckResult> {
    parallel::map_collect(odd_triples(max_k), |(k, r, i)| {
        check_key_lemma(k, r, i).expect("valid grid point")
    })
}

pub fn lemma1_grid(max_k: u32) -> Vec<LemmaCheckResult> {
    parallel::map_collect(all_triples(max_k), |(k, r, i)| {
        check_lemma1(k, r, i).expect("valid grid point")
    })
}

pub fn lemma2_grid(max_k: u32) -> Vec<LemmaCheckResult> {
    parallel::map_collect(odd_triples(max_k), |(k, r, i)| {
        check_lemma2(k, r, i).expect("valid grid point")
    })
}

pub fn binomial_grid(max_d: u32) -> Vec<LemmaCheckResult> {
    parallel::map_collect((2..=max_d).collect(), check_binomial_identity)
}

/// Every admissible target of the first multiplicity count: each composition
/// of k into r parts, for all k <= max_k, r < k, i <= r.
pub fn multiplicity_a_grid(max_k: u32) -> Vec<LemmaCheckResult> {
    let tuples: Vec<(u32, u32, u32)> = all_triples(max_k)
        .into_iter()
        .filter(|&(k, r, _)| r < k)
        .collect();
    let per_tuple = parallel::map_collect(tuples, |(k, r, i)| {
        let combination = lemma_sum_g1(k, r, i).expect("valid grid point");
        crate::index_algebra::compositions(k, r)
            .expect("r <= k")
            .into_iter()
            .map(|a| {
                let brute = coefficient_as_count(&combination, &a);
                let closed = closed_form_a(k, r, a.entries()[i as usize - 1]);
                count_result(LemmaId::MultiplicityA, k, r, i, &a, brute, closed)
            })
            .collect::<Vec<_>>()
    });
    per_tuple.into_iter().flatten().collect()
}

/// Every admissible target of the second multiplicity count: the interior
/// sandwich shapes and ({1}^k), for odd r < k <= max_k.
pub fn multiplicity_b_grid(max_k: u32) -> Vec<LemmaCheckResult> {
    let tuples: Vec<(u32, u32, u32)> = odd_triples(max_k)
        .into_iter()
        .filter(|&(k, r, _)| r < k)
        .collect();
    let per_tuple = parallel::map_collect(tuples, |(k, r, i)| {
        let b = lemma_sum_g2(k, r, i).expect("valid grid point");
        let full = b.clone() + phi_combination(&b).expect("nonempty terms");
        let mut results = Vec::new();
        for a in admissible_b_targets(k, r, i) {
            let brute = coefficient_as_count(&full, &a);
            let closed = expected_count_b(k, r, i, &a).expect("admissible by construction");
            results.push(count_result(LemmaId::MultiplicityB, k, r, i, &a, brute, closed));
        }
        results
    });
    per_tuple.into_iter().flatten().collect()
}

fn admissible_b_targets(k: u32, r: u32, i: u32) -> Vec<Index> {
    let mut out = Vec::new();
    for d in 2..=k.saturating_sub(r) {
        for mid in crate::index_algebra::compositions(k - r + 1, d).expect("d <= k-r+1") {
            let mut entries = vec![1u32; i as usize - 1];
            entries.extend_from_slice(mid.entries());
            entries.extend(std::iter::repeat_n(1, (r - i) as usize));
            out.push(Index::new(entries).expect("positive entries"));
        }
    }
    out.push(Index::ones(k as usize));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(s: &str) -> Index {
        s.parse().unwrap()
    }

    #[test]
    fn lemma1_examples() {
        assert!(check_lemma1(5, 3, 2).unwrap().pass);
        assert!(check_lemma1(3, 3, 1).unwrap().pass); // k = r convention
        assert!(check_lemma1(8, 3, 3).unwrap().pass);
        assert!(check_lemma1(3, 2, 3).is_err());
    }

    #[test]
    fn multiplicity_a_examples() {
        assert_eq!(
            multiplicity_oracle_a(6, 3, 1, &idx("2,2,2")).unwrap(),
            (2, 2)
        );
        assert_eq!(
            multiplicity_oracle_a(6, 3, 1, &idx("4,1,1")).unwrap(),
            (4, 4)
        );
        // a_2 = 2 = k-r+1 here, so the closed form's boundary branch gives 1.
        assert_eq!(
            multiplicity_oracle_a(4, 3, 2, &idx("1,2,1")).unwrap(),
            (1, 1)
        );
        assert!(multiplicity_oracle_a(6, 3, 1, &idx("2,2")).is_err());
        assert!(multiplicity_oracle_a(3, 3, 1, &idx("1,1,1")).is_err());
    }

    #[test]
    fn lemma2_examples() {
        assert!(check_lemma2(5, 3, 1).unwrap().pass);
        assert!(check_lemma2(6, 3, 2).unwrap().pass);
        assert!(check_lemma2(3, 3, 1).unwrap().pass); // degenerate: B = ({1}^3)
        assert_eq!(check_lemma2(5, 2, 1).unwrap_err(), Error::EvenDepth(2));
    }

    #[test]
    fn multiplicity_b_examples() {
        assert_eq!(
            multiplicity_oracle_b(6, 3, 1, &idx("2,2,1,1")).unwrap(),
            (4, 4)
        );
        assert_eq!(
            multiplicity_oracle_b(6, 3, 1, &Index::ones(6)).unwrap(),
            (5, 5)
        );
        assert_eq!(
            multiplicity_oracle_b(5, 3, 1, &Index::ones(5)).unwrap(),
            (2, 2)
        );
        // Wrong sandwich position for i = 2.
        assert!(multiplicity_oracle_b(6, 3, 2, &idx("2,2,1,1")).is_err());
        assert!(multiplicity_oracle_b(6, 2, 1, &idx("2,2,1,1")).is_err());
    }

    #[test]
    fn binomial_examples() {
        assert!(check_binomial_identity(2).pass);
        assert!(check_binomial_identity(3).pass);
        assert!(check_binomial_identity(5).pass);
        assert!(check_binomial_identity(64).pass);
        assert!(check_binomial_identity(80).pass);
    }

    #[test]
    fn key_lemma_examples() {
        let r331 = check_key_lemma(3, 3, 1).unwrap();
        assert!(r331.pass); // H = (1,1,1), phi flips the sign, k odd
        let r432 = check_key_lemma(4, 3, 2).unwrap();
        assert!(r432.pass);
        let r753 = check_key_lemma(7, 5, 3).unwrap();
        assert!(r753.pass);
        assert_eq!(check_key_lemma(5, 2, 1).unwrap_err(), Error::EvenDepth(2));
    }

    #[test]
    fn even_r_is_a_real_hypothesis() {
        // With r = 2 the key-lemma shape must break for some i at k = 5.
        let broken = (1..=2).any(|i| !key_lemma_residual(5, 2, i).unwrap().is_zero());
        assert!(broken);
    }

    #[test]
    fn involution_checks() {
        assert!(check_phi_involution(1).pass);
        assert!(check_phi_involution(6).pass);
        assert!(check_dual_involution(6).pass);
    }

    #[test]
    fn grids_are_clean_at_small_bounds() {
        assert!(key_lemma_grid(7).iter().all(|r| r.pass));
        assert!(lemma1_grid(7).iter().all(|r| r.pass));
        assert!(lemma2_grid(7).iter().all(|r| r.pass));
        assert!(binomial_grid(16).iter().all(|r| r.pass));
        assert!(multiplicity_a_grid(7).iter().all(|r| r.pass));
        assert!(multiplicity_b_grid(7).iter().all(|r| r.pass));
    }

    #[test]
    fn result_serializes_with_text_residual() {
        let r = check_key_lemma(4, 3, 1).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"lemma\":\"key-lemma\""));
        assert!(json.contains("\"residual\":\"0\""));
    }
}
