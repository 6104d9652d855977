//! Indices (compositions) and nonnegative integer sequences.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite sequence of positive integers. The empty index is a legal value
/// (it shows up as a boundary term of the antipode relation) but several
/// operators reject it explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Index(Vec<u32>);

impl Index {
    /// Builds an index, rejecting zero entries.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::ZeroEntry);
        }
        Ok(Index(entries))
    }

    pub fn empty() -> Self {
        Index(Vec::new())
    }

    /// `({1}^m)`.
    pub fn ones(m: usize) -> Self {
        Index(vec![1; m])
    }

    /// `({1}^{i-1}, mid, {1}^{r-i})`, the sandwich shape used by the F/G/H
    /// constructions. `i` is 1-based and must satisfy `1 <= i <= r`.
    pub fn sandwich(r: u32, i: u32, mid: u32) -> Self {
        assert!(i >= 1 && i <= r && mid >= 1);
        let mut v = vec![1u32; r as usize];
        v[i as usize - 1] = mid;
        Index(v)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// k_1 + ... + k_r; 0 for the empty index.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The number of entries.
    pub fn depth(&self) -> usize {
        self.0.len()
    }

    /// Entries in reverse order.
    pub fn reverse(&self) -> Self {
        Index(self.0.iter().rev().copied().collect())
    }

    pub fn prefix(&self, len: usize) -> Self {
        Index(self.0[..len].to_vec())
    }

    /// `(k_r, ..., k_{l+1})` for 0-based `from = l`.
    pub fn reversed_suffix(&self, from: usize) -> Self {
        Index(self.0[from..].iter().rev().copied().collect())
    }

    /// Componentwise sum with a nonnegative sequence of the same length.
    pub fn oplus(&self, e: &NonNegSeq) -> Result<Self> {
        if self.depth() != e.len() {
            return Err(Error::DepthMismatch {
                index_depth: self.depth(),
                seq_len: e.len(),
            });
        }
        Ok(Index(
            self.0.iter().zip(e.entries()).map(|(a, b)| a + b).collect(),
        ))
    }
}

/// Canonical order: by depth first, then lexicographically. This is the
/// iteration order of combinations and hence the serialization order.
impl Ord for Index {
    fn cmp(&self, other: &Self) -> Ordering {
        self.depth()
            .cmp(&other.depth())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Index {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Index {
    /// Comma-separated positive decimal integers, no whitespace: `1,2,2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Index {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::ParseIndex(s.into()));
        }
        let mut entries = Vec::new();
        for part in s.split(',') {
            let n: u32 = part
                .parse()
                .map_err(|_| Error::ParseIndex(s.into()))?;
            if n == 0 {
                return Err(Error::ParseIndex(s.into()));
            }
            entries.push(n);
        }
        Ok(Index(entries))
    }
}

/// A finite sequence of nonnegative integers, the `e` of the G-operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonNegSeq(Vec<u32>);

impl NonNegSeq {
    pub fn new(entries: Vec<u32>) -> Self {
        NonNegSeq(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }
}

/// All compositions of `k` into exactly `r` positive parts, in lexicographic
/// order. There are C(k-1, r-1) of them.
pub fn compositions(k: u32, r: u32) -> Result<Vec<Index>> {
    if r < 1 || r > k {
        return Err(Error::BadCompositionParams { k, r });
    }
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(r as usize);
    fn rec(remaining: u32, parts: u32, acc: &mut Vec<u32>, out: &mut Vec<Index>) {
        if parts == 1 {
            acc.push(remaining);
            out.push(Index(acc.clone()));
            acc.pop();
            return;
        }
        for first in 1..=remaining - parts + 1 {
            acc.push(first);
            rec(remaining - first, parts - 1, acc, out);
            acc.pop();
        }
    }
    rec(k, r, &mut acc, &mut out);
    Ok(out)
}

/// All sequences of `len` nonnegative integers with total `weight`, in
/// lexicographic order. There are C(weight + len - 1, weight) of them.
pub fn weak_compositions(weight: u32, len: usize) -> Vec<NonNegSeq> {
    assert!(len >= 1);
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(len);
    fn rec(remaining: u32, parts: usize, acc: &mut Vec<u32>, out: &mut Vec<NonNegSeq>) {
        if parts == 1 {
            acc.push(remaining);
            out.push(NonNegSeq(acc.clone()));
            acc.pop();
            return;
        }
        for first in 0..=remaining {
            acc.push(first);
            rec(remaining - first, parts - 1, acc, out);
            acc.pop();
        }
    }
    rec(weight, len, &mut acc, &mut out);
    out
}

/// All nonempty indices of weight `w`, in canonical order.
pub fn indices_of_weight(w: u32) -> Vec<Index> {
    let mut out = Vec::new();
    for r in 1..=w {
        out.extend(compositions(w, r).expect("1 <= r <= w"));
    }
    out
}

/// All nonempty indices of weight at most `max_weight`, in canonical order of
/// (weight, depth, entries).
pub fn indices_up_to_weight(max_weight: u32) -> Vec<Index> {
    (1..=max_weight).flat_map(indices_of_weight).collect()
}
