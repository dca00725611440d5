use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Scalar, TensorVector, Word};
use crate::{Error, Result};

/// A subspace of `E^⊗n` held in fully reduced row-echelon form.
///
/// The pivot of a row is its greatest word; it carries coefficient 1 and is
/// absent from every other row. Rows are sorted by strictly decreasing pivot,
/// so two subspaces are equal exactly when their row lists are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    degree: usize,
    rows: Vec<TensorVector>,
    pivots: Vec<Word>,
}

impl core::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Subspace")
            .field("degree", &self.degree)
            .field("rows", &self.rows)
            .finish()
    }
}

/// Incremental reduced echelon form; rows stay fully reduced after each push.
struct Echelon {
    degree: usize,
    rows: Vec<TensorVector>,
    pivot_row: BTreeMap<Word, usize>,
}

impl Echelon {
    fn new(degree: usize) -> Self {
        Echelon {
            degree,
            rows: Vec::new(),
            pivot_row: BTreeMap::new(),
        }
    }

    fn reduce(&self, v: &TensorVector) -> TensorVector {
        reduce_with(v, &self.rows, |w| self.pivot_row.get(w).copied())
    }

    fn push(&mut self, v: &TensorVector) -> bool {
        let mut r = self.reduce(v);
        let (pivot, lead) = match r.leading() {
            Some((w, c)) => (*w, c.clone()),
            None => return false,
        };
        if !lead.is_one() {
            r.scale(&lead.recip());
        }
        for row in &mut self.rows {
            if let Some(c) = row.coeff(&pivot).cloned() {
                row.add_scaled(&-c, &r);
            }
        }
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push(r);
        true
    }

    fn finish(self) -> Subspace {
        let mut rows: Vec<(Word, TensorVector)> = self
            .rows
            .into_iter()
            .map(|r| (*r.leading().expect("nonzero row").0, r))
            .collect();
        rows.sort_by_key(|r| core::cmp::Reverse(r.0));
        let (pivots, rows) = rows.into_iter().unzip();
        Subspace {
            degree: self.degree,
            rows,
            pivots,
        }
    }
}

/// Subtracts from `v` the multiple of each row whose pivot occurs in `v`.
///
/// One pass suffices because the rows are fully reduced: subtracting a row
/// never reintroduces another row's pivot.
fn reduce_with<F>(v: &TensorVector, rows: &[TensorVector], pivot_of: F) -> TensorVector
where
    F: Fn(&Word) -> Option<usize>,
{
    let mut out = v.clone();
    for (w, c) in v {
        if let Some(i) = pivot_of(w) {
            out.add_scaled(&-c.clone(), &rows[i]);
        }
    }
    out
}

impl Subspace {
    pub fn zero(degree: usize) -> Self {
        Subspace {
            degree,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// The whole of `E^⊗n` for `dim E = generators`.
    pub fn full(generators: usize, degree: usize) -> Self {
        let mut words: Vec<Word> = Word::all(generators, degree).collect();
        words.reverse();
        Subspace {
            degree,
            rows: words.iter().map(|w| TensorVector::from_word(*w)).collect(),
            pivots: words,
        }
    }

    /// Row-reduced span of `vectors`, all of which must have degree `degree`.
    pub fn rref<'a, I>(degree: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a TensorVector>,
    {
        let mut ech = Echelon::new(degree);
        for v in vectors {
            if v.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: v.degree(),
                });
            }
            ech.push(v);
        }
        Ok(ech.finish())
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[TensorVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[Word] {
        &self.pivots
    }

    fn pivot_index(&self, w: &Word) -> Option<usize> {
        // Pivots are sorted decreasingly.
        self.pivots.binary_search_by(|p| w.cmp(p)).ok()
    }

    pub fn is_pivot(&self, w: &Word) -> bool {
        self.pivot_index(w).is_some()
    }

    /// Canonical remainder of `v` modulo this subspace: no term of the result
    /// is a pivot word, and it is zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &TensorVector) -> Result<TensorVector> {
        self.check_degree(v.degree())?;
        Ok(reduce_with(v, &self.rows, |w| self.pivot_index(w)))
    }

    pub fn contains(&self, v: &TensorVector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Every row of `other` reduces to zero here.
    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_degree(other.degree)?;
        for row in &other.rows {
            if !self.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of a member `v` in the row basis; `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &TensorVector) -> Result<Option<Vec<Scalar>>> {
        if !self.reduce(v)?.is_zero() {
            return Ok(None);
        }
        Ok(Some(
            self.pivots
                .iter()
                .map(|p| v.coeff(p).cloned().unwrap_or_else(Scalar::zero))
                .collect(),
        ))
    }

    /// `self + other`.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_degree(other.degree)?;
        let mut ech = Echelon::new(self.degree);
        for r in self.rows.iter().chain(&other.rows) {
            ech.push(r);
        }
        Ok(ech.finish())
    }

    /// Annihilator in the dual word basis, for `dim E = generators`.
    ///
    /// For every non-pivot word `u` the functional `u - Σ_i row_i[u] · pivot_i`
    /// kills each row; these are independent and number `D^n - dim`.
    pub fn annihilator(&self, generators: usize) -> Subspace {
        let mut column: BTreeMap<Word, Vec<(Word, Scalar)>> = BTreeMap::new();
        for (row, pivot) in self.rows.iter().zip(&self.pivots) {
            for (w, c) in row {
                if w != pivot {
                    column.entry(*w).or_default().push((*pivot, c.clone()));
                }
            }
        }
        let mut ech = Echelon::new(self.degree);
        for u in Word::all(generators, self.degree) {
            if self.is_pivot(&u) {
                continue;
            }
            let mut v = TensorVector::from_word(u);
            if let Some(entries) = column.get(&u) {
                for (p, c) in entries {
                    v.add_term(*p, -c.clone());
                }
            }
            ech.push(&v);
        }
        ech.finish()
    }

    /// `self ∩ other`, computed as `ann(ann(self) + ann(other))`.
    pub fn intersect(&self, other: &Subspace, generators: usize) -> Result<Subspace> {
        self.check_degree(other.degree)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.degree));
        }
        let constraints = self
            .annihilator(generators)
            .sum(&other.annihilator(generators))?;
        Ok(constraints.annihilator(generators))
    }

    /// Spanning set `{w1 ⊗ b ⊗ w2}` of `E^⊗r ⊗ self ⊗ E^⊗s`, of size `D^r · dim · D^s`.
    pub fn shifted_span(&self, generators: usize, left: usize, right: usize) -> Vec<TensorVector> {
        let lefts: Vec<Word> = Word::all(generators, left).collect();
        let rights: Vec<Word> = Word::all(generators, right).collect();
        let mut out = Vec::with_capacity(lefts.len() * self.dim() * rights.len());
        for l in &lefts {
            for row in &self.rows {
                for r in &rights {
                    out.push(row.wrap(l, r));
                }
            }
        }
        out
    }

    /// Row-reduced `E^⊗r ⊗ self ⊗ E^⊗s`.
    pub fn shifted(&self, generators: usize, left: usize, right: usize) -> Subspace {
        let span = self.shifted_span(generators, left, right);
        Subspace::rref(self.degree + left + right, &span).expect("uniform degree")
    }

    pub fn relabel(&self, map: &[u8]) -> Subspace {
        let rows: Vec<TensorVector> = self.rows.iter().map(|r| r.relabel(map)).collect();
        Subspace::rref(self.degree, &rows).expect("uniform degree")
    }

    fn check_degree(&self, found: usize) -> Result<()> {
        if found != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found,
            });
        }
        Ok(())
    }
}
