use alloc::collections::btree_map::{self, BTreeMap, Entry};
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Scalar, Word};
use crate::{Error, Result};

/// Sparse element of `E^⊗n` with exact rational coefficients.
///
/// No stored coefficient is zero and every word has length `degree`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorVector {
    degree: usize,
    terms: BTreeMap<Word, Scalar>,
}

impl TensorVector {
    pub fn zero(degree: usize) -> Self {
        TensorVector {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_word(word: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(word, Scalar::one());
        TensorVector {
            degree: word.len(),
            terms,
        }
    }

    /// Builds a vector from `(word, coefficient)` pairs, summing repeated words.
    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, Scalar)>,
    {
        let mut v = TensorVector::zero(degree);
        for (w, c) in terms {
            if w.len() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: w.len(),
                });
            }
            v.add_term(w, c);
        }
        Ok(v)
    }

    /// Convenience for integer coefficients and digit words, e.g. `[(1, "121"), (-1, "211")]`.
    pub fn from_digit_terms(terms: &[(i64, &str)]) -> Result<Self> {
        let degree = terms.first().map_or(0, |t| t.1.len());
        Self::from_terms(
            degree,
            terms
                .iter()
                .map(|&(c, w)| Word::from_digits(w).map(|w| (w, Scalar::from_integer(c.into()))))
                .collect::<Result<alloc::vec::Vec<_>>>()?,
        )
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Option<&Scalar> {
        self.terms.get(w)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Word, Scalar> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    /// Greatest word in the support together with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.last_key_value()
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        debug_assert_eq!(w.len(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, factor: &Scalar, other: &TensorVector) {
        debug_assert_eq!(self.degree, other.degree);
        if factor.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(*w, factor * c);
        }
    }

    pub fn scale(&mut self, factor: &Scalar) {
        if factor.is_zero() {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c *= factor;
        }
    }

    pub fn scaled(&self, factor: &Scalar) -> TensorVector {
        let mut v = self.clone();
        v.scale(factor);
        v
    }

    /// Tensor product `self ⊗ other`, by concatenation of words.
    pub fn tensor(&self, other: &TensorVector) -> TensorVector {
        let mut out = TensorVector::zero(self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.concat(b), ca * cb);
            }
        }
        out
    }

    /// `prefix ⊗ self ⊗ suffix` for single words.
    pub fn wrap(&self, prefix: &Word, suffix: &Word) -> TensorVector {
        TensorVector {
            degree: self.degree + prefix.len() + suffix.len(),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (prefix.concat(w).concat(suffix), c.clone()))
                .collect(),
        }
    }

    /// Canonical pairing `⟨self, other⟩` of the self-dual word basis.
    pub fn pair(&self, other: &TensorVector) -> Scalar {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Scalar::zero();
        for (w, c) in &small.terms {
            if let Some(d) = large.terms.get(w) {
                acc += c * d;
            }
        }
        acc
    }

    /// Applies a letter relabelling `l ↦ map[l - 1]` to every word.
    pub fn relabel(&self, map: &[u8]) -> TensorVector {
        let mut out = TensorVector::zero(self.degree);
        for (w, c) in &self.terms {
            out.add_term(w.relabel(map), c.clone());
        }
        out
    }

    pub fn max_letter(&self) -> u8 {
        self.terms.keys().map(Word::max_letter).max().unwrap_or(0)
    }
}

impl<'a> IntoIterator for &'a TensorVector {
    type Item = (&'a Word, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, Word, Scalar>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl Add<&TensorVector> for &TensorVector {
    type Output = TensorVector;

    fn add(self, rhs: &TensorVector) -> TensorVector {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl Sub<&TensorVector> for &TensorVector {
    type Output = TensorVector;

    fn sub(self, rhs: &TensorVector) -> TensorVector {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), rhs);
        out
    }
}

impl Neg for &TensorVector {
    type Output = TensorVector;

    fn neg(self) -> TensorVector {
        self.scaled(&-Scalar::one())
    }
}

impl fmt::Display for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // Leading word first, matching the echelon convention.
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if abs.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{abs}*{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorVector[{}]({self})", self.degree)
    }
}
