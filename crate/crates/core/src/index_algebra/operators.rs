//! The operators on indices: Hoffman's dual, the phi-map, star expansion,
//! and the F/G/H constructions.

use crate::error::{Error, Result};
use crate::index_algebra::{compositions, weak_compositions, Index, IndexCombination};
use crate::rational::Rational;

/// Hoffman's dual index. The index is written as a string of 1s joined by
/// `+` inside each block and `,` between blocks; every `,` is swapped with
/// `+` and the word is reparsed. An involution on nonempty indices that
/// preserves weight.
pub fn hoffman_dual(k: &Index) -> Result<Index> {
    if k.is_empty() {
        return Err(Error::EmptyIndex);
    }
    let w = k.weight() as usize;
    // separators[t] covers the gap between the (t+1)-st and (t+2)-nd `1`;
    // true means comma. Commas sit exactly at the block boundaries.
    let mut comma = vec![false; w - 1];
    let mut pos = 0usize;
    for &x in &k.entries()[..k.depth() - 1] {
        pos += x as usize;
        comma[pos - 1] = true;
    }
    // Swap and reparse: blocks are maximal runs between commas.
    let mut entries = Vec::new();
    let mut run = 1u32;
    for c in comma {
        if !c {
            // was a plus before the swap, now a comma
            entries.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    entries.push(run);
    Index::new(entries)
}

/// The phi-map on one index: `(-1)^{dep(k)}` times the sum over all ways of
/// writing each block `k_j` as `1 [] 1 [] ... [] 1` with every box a comma or
/// a plus. Every resulting index has the same weight, and there are
/// `2^{wt(k) - dep(k)}` of them.
pub fn phi(k: &Index) -> Result<IndexCombination> {
    if k.is_empty() {
        return Err(Error::EmptyIndex);
    }
    let sign = if k.depth() % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    };
    // Choosing commas and pluses inside a block of x ones is the same as
    // choosing a composition of x, so expand block by block.
    let block_options: Vec<Vec<Index>> = k
        .entries()
        .iter()
        .map(|&x| (1..=x).flat_map(|d| compositions(x, d).expect("1 <= d <= x")).collect())
        .collect();
    let mut out = IndexCombination::zero();
    let mut acc: Vec<u32> = Vec::with_capacity(k.weight() as usize);
    fn rec(
        blocks: &[Vec<Index>],
        acc: &mut Vec<u32>,
        sign: &Rational,
        out: &mut IndexCombination,
    ) {
        match blocks.split_first() {
            None => out.add_term(
                Index::new(acc.clone()).expect("positive entries"),
                sign.clone(),
            ),
            Some((first, rest)) => {
                for c in first {
                    let len = acc.len();
                    acc.extend_from_slice(c.entries());
                    rec(rest, acc, sign, out);
                    acc.truncate(len);
                }
            }
        }
    }
    rec(&block_options, &mut acc, &sign, &mut out);
    Ok(out)
}

/// Q-linear extension of the phi-map to combinations.
pub fn phi_combination(c: &IndexCombination) -> Result<IndexCombination> {
    let mut out = IndexCombination::zero();
    for (idx, coeff) in c.iter() {
        out.add_assign(&phi(idx)?.scale(coeff));
    }
    Ok(out)
}

/// The sum over all `2^{dep(k)-1}` contractions `k_1 [] ... [] k_r` with
/// every box a comma or a plus, each contraction with coefficient +1.
pub fn star_expand(k: &Index) -> Result<IndexCombination> {
    if k.is_empty() {
        return Err(Error::EmptyIndex);
    }
    let entries = k.entries();
    let r = entries.len();
    let mut out = IndexCombination::zero();
    for mask in 0u64..(1u64 << (r - 1)) {
        let mut acc = vec![entries[0]];
        for (j, &x) in entries.iter().enumerate().skip(1) {
            if mask >> (j - 1) & 1 == 1 {
                *acc.last_mut().unwrap() += x; // plus: merge into the previous part
            } else {
                acc.push(x);
            }
        }
        out.add_term(Index::new(acc).expect("positive entries"), Rational::one());
    }
    Ok(out)
}

/// `F(k, r, i)`: the sum over compositions of `k` into `r` positive parts of
/// `2^{k_i - 1} * (k_1, ..., k_r)`.
pub fn build_f(k: u32, r: u32, i: u32) -> Result<IndexCombination> {
    check_triple(k, r, i)?;
    let mut out = IndexCombination::zero();
    for c in compositions(k, r)? {
        let ki = c.entries()[i as usize - 1];
        out.add_term(c, Rational::pow2(i64::from(ki) - 1));
    }
    Ok(out)
}

/// `G_1(k, l)`: the sum of `k (+) e` over all nonnegative sequences `e` of
/// length `dep(k)` and weight `l`. Coefficients accumulate multiplicity.
pub fn build_g1(k: &Index, l: u32) -> Result<IndexCombination> {
    if k.is_empty() {
        return Err(Error::EmptyIndex);
    }
    let mut out = IndexCombination::zero();
    for e in weak_compositions(l, k.depth()) {
        out.add_term(k.oplus(&e)?, Rational::one());
    }
    Ok(out)
}

/// `G_2(k, l)`: the sum of `(k^v (+) e)^v` over all nonnegative sequences `e`
/// of length `dep(k^v)` and weight `l`.
pub fn build_g2(k: &Index, l: u32) -> Result<IndexCombination> {
    let dual = hoffman_dual(k)?;
    let mut out = IndexCombination::zero();
    for e in weak_compositions(l, dual.depth()) {
        out.add_term(hoffman_dual(&dual.oplus(&e)?)?, Rational::one());
    }
    Ok(out)
}

/// `G(k, l) = G_1(k, l) - G_2(k, l)`.
pub fn build_g(k: &Index, l: u32) -> Result<IndexCombination> {
    Ok(build_g1(k, l)? - build_g2(k, l)?)
}

/// `H(k, r, i) = F(k, r, i) - (sum_{l=1}^{k-r-1} 2^{l-1} G(({1}^{i-1}, l+1,
/// {1}^{r-i}), k-r-l) + G(({1}^r), k-r))`. The l-sum is empty when
/// `k - r - 1 < 1`.
pub fn build_h(k: u32, r: u32, i: u32) -> Result<IndexCombination> {
    check_triple(k, r, i)?;
    let mut out = build_f(k, r, i)?;
    if k >= r + 2 {
        for l in 1..=k - r - 1 {
            let base = Index::sandwich(r, i, l + 1);
            out.sub_assign(&build_g(&base, k - r - l)?.scale(&Rational::pow2(i64::from(l) - 1)));
        }
    }
    out.sub_assign(&build_g(&Index::ones(r as usize), k - r)?);
    Ok(out)
}

pub(crate) fn check_triple(k: u32, r: u32, i: u32) -> Result<()> {
    if i >= 1 && i <= r && r <= k {
        Ok(())
    } else {
        Err(Error::BadTriple { k, r, i })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(s: &str) -> Index {
        s.parse().unwrap()
    }

    fn comb(pairs: &[(&str, i64)]) -> IndexCombination {
        pairs
            .iter()
            .map(|(s, c)| (idx(s), Rational::from(*c)))
            .collect()
    }

    #[test]
    fn hoffman_dual_examples() {
        assert_eq!(hoffman_dual(&idx("2,1")).unwrap(), idx("1,2"));
        assert_eq!(hoffman_dual(&idx("2,3")).unwrap(), idx("1,2,1,1"));
        assert_eq!(hoffman_dual(&Index::ones(3)).unwrap(), idx("3"));
        assert_eq!(hoffman_dual(&idx("5")).unwrap(), Index::ones(5));
        assert_eq!(hoffman_dual(&Index::empty()).unwrap_err(), Error::EmptyIndex);
    }

    #[test]
    fn phi_matches_worked_example() {
        // phi(1,2,2) = -(1,2,2) - (1,1,1,2) - (1,2,1,1) - (1,1,1,1,1)
        let got = phi(&idx("1,2,2")).unwrap();
        let want = comb(&[
            ("1,2,2", -1),
            ("1,1,1,2", -1),
            ("1,2,1,1", -1),
            ("1,1,1,1,1", -1),
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn phi_small_cases() {
        assert_eq!(phi(&Index::ones(3)).unwrap(), comb(&[("1,1,1", -1)]));
        assert_eq!(phi(&idx("2")).unwrap(), comb(&[("2", -1), ("1,1", -1)]));
        assert!(phi(&Index::empty()).is_err());
    }

    #[test]
    fn phi_term_count_and_weight() {
        for k in crate::index_algebra::indices_up_to_weight(8) {
            let ph = phi(&k).unwrap();
            let expected = 1u64 << (k.weight() - k.depth() as u32);
            assert_eq!(ph.num_terms() as u64, expected, "k = {k}");
            assert_eq!(
                ph.coefficient_sum().abs(),
                Rational::from(expected),
                "multiplicity count for k = {k}"
            );
            assert!(ph.is_homogeneous_of_weight(k.weight()));
        }
    }

    #[test]
    fn star_expand_examples() {
        assert_eq!(
            star_expand(&idx("1,2")).unwrap(),
            comb(&[("1,2", 1), ("3", 1)])
        );
        assert_eq!(star_expand(&idx("4")).unwrap(), comb(&[("4", 1)]));
        assert_eq!(
            star_expand(&Index::ones(3)).unwrap(),
            comb(&[("1,1,1", 1), ("2,1", 1), ("1,2", 1), ("3", 1)])
        );
        for k in crate::index_algebra::indices_up_to_weight(8) {
            let st = star_expand(&k).unwrap();
            assert_eq!(st.num_terms(), 1 << (k.depth() - 1));
            assert!(st.is_homogeneous_of_weight(k.weight()));
        }
    }

    #[test]
    fn f_examples() {
        assert_eq!(
            build_f(3, 2, 1).unwrap(),
            comb(&[("1,2", 1), ("2,1", 2)])
        );
        assert_eq!(build_f(3, 3, 1).unwrap(), comb(&[("1,1,1", 1)]));
        assert_eq!(
            build_f(4, 2, 2).unwrap(),
            comb(&[("3,1", 1), ("2,2", 2), ("1,3", 4)])
        );
        assert!(build_f(3, 4, 1).is_err());
        assert!(build_f(3, 2, 0).is_err());
        assert!(build_f(3, 2, 3).is_err());
    }

    #[test]
    fn g1_examples() {
        assert_eq!(
            build_g1(&idx("2,3"), 1).unwrap(),
            comb(&[("3,3", 1), ("2,4", 1)])
        );
        assert_eq!(
            build_g1(&idx("2,3"), 0).unwrap(),
            IndexCombination::from_index(idx("2,3"))
        );
        assert_eq!(
            build_g1(&idx("1,1"), 2).unwrap(),
            comb(&[("3,1", 1), ("2,2", 1), ("1,3", 1)])
        );
        // C(l + dep - 1, l) terms, counted with multiplicity.
        let g = build_g1(&idx("1,2,1"), 4).unwrap();
        assert_eq!(g.coefficient_sum(), Rational::from(15i64)); // C(6, 4)
        assert!(g.is_homogeneous_of_weight(8));
    }

    #[test]
    fn g2_examples() {
        assert_eq!(
            build_g2(&idx("2,3"), 1).unwrap(),
            comb(&[("1,2,3", 1), ("2,1,3", 1), ("2,2,2", 1), ("2,3,1", 1)])
        );
        assert_eq!(
            build_g2(&idx("2,3"), 0).unwrap(),
            IndexCombination::from_index(idx("2,3"))
        );
        assert_eq!(
            build_g2(&idx("2"), 1).unwrap(),
            comb(&[("1,2", 1), ("2,1", 1)])
        );
    }

    #[test]
    fn g_examples() {
        assert!(build_g(&idx("2,3"), 0).unwrap().is_zero());
        assert!(build_g(&Index::ones(3), 0).unwrap().is_zero());
        assert_eq!(
            build_g(&idx("2"), 1).unwrap(),
            comb(&[("3", 1), ("1,2", -1), ("2,1", -1)])
        );
    }

    #[test]
    fn g_weight_shift() {
        for k in crate::index_algebra::indices_up_to_weight(5) {
            for l in 0..=3 {
                let g1 = build_g1(&k, l).unwrap();
                let g2 = build_g2(&k, l).unwrap();
                assert!(g1.is_homogeneous_of_weight(k.weight() + l));
                assert!(g2.is_homogeneous_of_weight(k.weight() + l));
            }
        }
    }

    #[test]
    fn h_examples() {
        assert_eq!(build_h(3, 3, 1).unwrap(), comb(&[("1,1,1", 1)]));
        // k = r forces the single composition and G(., 0) = 0.
        for i in 1..=4 {
            assert_eq!(
                build_h(4, 4, i).unwrap(),
                IndexCombination::from_index(Index::ones(4))
            );
        }
        // Worked through by hand: H(4,3,1) = (2,1,1) + (1,1,1,1).
        assert_eq!(
            build_h(4, 3, 1).unwrap(),
            comb(&[("2,1,1", 1), ("1,1,1,1", 1)])
        );
        assert!(build_h(3, 2, 3).is_err());
    }

    #[test]
    fn dual_involution_to_weight_12() {
        for k in crate::index_algebra::indices_up_to_weight(12) {
            let d = hoffman_dual(&k).unwrap();
            assert_eq!(d.weight(), k.weight());
            assert_eq!(hoffman_dual(&d).unwrap(), k);
        }
    }

    #[test]
    fn phi_involution_to_weight_8() {
        // The full weight-10 sweep lives in the acceptance suite.
        for k in crate::index_algebra::indices_up_to_weight(8) {
            let twice = phi_combination(&phi(&k).unwrap()).unwrap();
            assert_eq!(twice, IndexCombination::from_index(k));
        }
    }
}
