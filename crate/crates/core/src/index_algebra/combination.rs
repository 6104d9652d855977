//! Sparse exact-rational linear combinations of indices.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::index_algebra::Index;
use crate::rational::Rational;

/// An element of the Q-linear space spanned by the indices. Zero coefficients
/// are never stored, and iteration follows the canonical index order (depth,
/// then lexicographic), so equality and serialization are independent of how
/// a combination was assembled.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IndexCombination {
    terms: BTreeMap<Index, Rational>,
}

impl IndexCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_index(index: Index) -> Self {
        Self::term(index, Rational::one())
    }

    pub fn term(index: Index, coeff: Rational) -> Self {
        let mut c = Self::zero();
        c.add_term(index, coeff);
        c
    }

    /// A scalar, encoded as a multiple of the empty index.
    pub fn scalar(coeff: Rational) -> Self {
        Self::term(Index::empty(), coeff)
    }

    /// Accumulates `coeff * index`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, index: Index, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &IndexCombination) {
        for (idx, c) in &other.terms {
            self.add_term(idx.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &IndexCombination) {
        for (idx, c) in &other.terms {
            self.add_term(idx.clone(), -c);
        }
    }

    pub fn scale(&self, factor: &Rational) -> IndexCombination {
        if factor.is_zero() {
            return Self::zero();
        }
        IndexCombination {
            terms: self
                .terms
                .iter()
                .map(|(idx, c)| (idx.clone(), c * factor))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (distinct) indices.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Sum of all coefficients; counts terms with multiplicity when the
    /// coefficients are nonnegative integers.
    pub fn coefficient_sum(&self) -> Rational {
        let mut s = Rational::zero();
        for c in self.terms.values() {
            s += c;
        }
        s
    }

    /// Coefficient of `index`, zero when absent.
    pub fn coefficient(&self, index: &Index) -> Rational {
        self.terms.get(index).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Index, &Rational)> {
        self.terms.iter()
    }

    /// True when every stored index has weight `w`.
    pub fn is_homogeneous_of_weight(&self, w: u32) -> bool {
        self.terms.keys().all(|idx| idx.weight() == w)
    }
}

impl Add for IndexCombination {
    type Output = IndexCombination;
    fn add(mut self, rhs: IndexCombination) -> IndexCombination {
        self.add_assign(&rhs);
        self
    }
}

impl Sub for IndexCombination {
    type Output = IndexCombination;
    fn sub(mut self, rhs: IndexCombination) -> IndexCombination {
        self.sub_assign(&rhs);
        self
    }
}

impl Neg for IndexCombination {
    type Output = IndexCombination;
    fn neg(self) -> IndexCombination {
        IndexCombination {
            terms: self.terms.into_iter().map(|(idx, c)| (idx, -c)).collect(),
        }
    }
}

impl fmt::Display for IndexCombination {
    /// Terms `c*(i1,...,ir)` joined by ` + ` in canonical index order, with
    /// the coefficient elided for c = 1 and shortened to `-` for c = -1.
    /// The zero combination prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "({idx})")?;
            } else if (-c).is_one() {
                write!(f, "-({idx})")?;
            } else {
                write!(f, "{c}*({idx})")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl FromIterator<(Index, Rational)> for IndexCombination {
    fn from_iter<T: IntoIterator<Item = (Index, Rational)>>(iter: T) -> Self {
        let mut c = Self::zero();
        for (idx, coeff) in iter {
            c.add_term(idx, coeff);
        }
        c
    }
}
