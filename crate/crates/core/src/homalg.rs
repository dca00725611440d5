//! Graded quotients `A = T(E)/(R)` computed one degree at a time.
//!
//! The ideal component `I_n` is the row-reduced span of all shifts
//! `E^⊗r ⊗ R ⊗ E^⊗s` with `r + s = n - N`; the normal basis `B_n` is the set of
//! words that are not pivots of `I_n`, so `dim A_n = D^n - dim I_n = |B_n|`.
//! The dual components `W_n = (A^!_n)^*` are intersections of the same shifts.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exactlin::{Matrix, Scalar, Subspace, TensorVector, Word};
use crate::{Error, Result};

/// Refuses degrees whose word count `D^n` exceeds a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MemoryGuard {
    pub max_words: u64,
}

impl Default for MemoryGuard {
    fn default() -> Self {
        MemoryGuard {
            max_words: 10_000_000,
        }
    }
}

impl MemoryGuard {
    pub fn check(&self, generators: usize, degree: usize) -> Result<()> {
        let words = (generators as u128).checked_pow(degree as u32).unwrap_or(u128::MAX);
        if words > self.max_words as u128 {
            return Err(Error::MemoryGuard {
                generators,
                degree,
                words,
                limit: self.max_words,
            });
        }
        if degree > Word::MAX_LEN {
            return Err(Error::WordTooLong {
                requested: degree,
                max: Word::MAX_LEN,
            });
        }
        Ok(())
    }
}

/// `A(E, R)`: `D` generators and a relation space `R ⊂ E^⊗N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: usize,
    degree: usize,
    relations: Subspace,
}

impl Presentation {
    pub fn new(generators: usize, degree: usize, relations: Subspace) -> Result<Self> {
        if generators == 0 || generators > u8::MAX as usize {
            return Err(Error::InvalidPresentation(format!(
                "generator count {generators} outside 1..=255"
            )));
        }
        if degree < 2 {
            return Err(Error::InvalidPresentation(format!(
                "relation degree {degree} must be at least 2"
            )));
        }
        if degree > Word::MAX_LEN {
            return Err(Error::WordTooLong {
                requested: degree,
                max: Word::MAX_LEN,
            });
        }
        if relations.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: relations.degree(),
            });
        }
        let top = relations
            .rows()
            .iter()
            .map(TensorVector::max_letter)
            .max()
            .unwrap_or(0);
        if top as usize > generators {
            return Err(Error::LetterOutOfRange {
                letter: top as u32,
                generators,
            });
        }
        Ok(Presentation {
            generators,
            degree,
            relations,
        })
    }

    /// Presentation whose relation space is the span of `vectors`.
    pub fn from_vectors(generators: usize, degree: usize, vectors: &[TensorVector]) -> Result<Self> {
        Self::new(generators, degree, Subspace::rref(degree, vectors)?)
    }

    /// The tensor algebra itself (`R = 0`).
    pub fn free(generators: usize, degree: usize) -> Result<Self> {
        Self::new(generators, degree, Subspace::zero(degree))
    }

    #[inline]
    pub fn generators(&self) -> usize {
        self.generators
    }

    /// The relation degree `N`.
    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// `A^! = A(E*, R^⊥)`, with `E*` identified with `E` through the dual basis.
    pub fn dual(&self) -> Presentation {
        Presentation {
            generators: self.generators,
            degree: self.degree,
            relations: self.relations.annihilator(self.generators),
        }
    }

    /// Renames generator `l` to `map[l - 1]`; `map` must be a permutation of `1..=D`.
    pub fn relabel(&self, map: &[u8]) -> Result<Presentation> {
        let mut seen = alloc::vec![false; self.generators];
        if map.len() != self.generators
            || !map.iter().all(|&l| {
                let ok = l >= 1 && (l as usize) <= self.generators && !seen[l as usize - 1];
                if ok {
                    seen[l as usize - 1] = true;
                }
                ok
            })
        {
            return Err(Error::Parameter(format!(
                "{map:?} is not a permutation of 1..={}",
                self.generators
            )));
        }
        Ok(Presentation {
            generators: self.generators,
            degree: self.degree,
            relations: self.relations.relabel(map),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Degreewise data of `A` up to a fixed maximum degree.
///
/// Everything is computed on construction and immutable afterwards, so a
/// `GradedAlgebra` can be shared freely between threads.
#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    presentation: Presentation,
    max_degree: usize,
    ideals: Vec<Subspace>,
    normal: Vec<Vec<Word>>,
    normal_index: Vec<BTreeMap<Word, usize>>,
    duals: Option<Vec<Subspace>>,
}

impl GradedAlgebra {
    /// Quotient and dual components through `max_degree`, under the default guard.
    pub fn new(presentation: Presentation, max_degree: usize) -> Result<Self> {
        Self::build(presentation, max_degree, MemoryGuard::default(), true)
    }

    /// Like [`GradedAlgebra::new`] with an explicit memory guard.
    pub fn with_guard(presentation: Presentation, max_degree: usize, guard: MemoryGuard) -> Result<Self> {
        Self::build(presentation, max_degree, guard, true)
    }

    /// Only the quotient; dual-component queries will fail.
    pub fn quotient_only(presentation: Presentation, max_degree: usize) -> Result<Self> {
        Self::build(presentation, max_degree, MemoryGuard::default(), false)
    }

    /// Like [`GradedAlgebra::quotient_only`] with an explicit memory guard.
    pub fn quotient_with_guard(presentation: Presentation, max_degree: usize, guard: MemoryGuard) -> Result<Self> {
        Self::build(presentation, max_degree, guard, false)
    }

    fn build(presentation: Presentation, max_degree: usize, guard: MemoryGuard, with_dual: bool) -> Result<Self> {
        let d = presentation.generators;
        guard.check(d, max_degree)?;
        let mut ideals = Vec::with_capacity(max_degree + 1);
        let mut normal = Vec::with_capacity(max_degree + 1);
        let mut normal_index = Vec::with_capacity(max_degree + 1);
        for n in 0..=max_degree {
            let ideal = ideal_component(&presentation, n);
            let basis: Vec<Word> = Word::all(d, n).filter(|w| !ideal.is_pivot(w)).collect();
            normal_index.push(basis.iter().enumerate().map(|(i, w)| (*w, i)).collect());
            normal.push(basis);
            ideals.push(ideal);
        }
        let duals = with_dual.then(|| {
            (0..=max_degree)
                .map(|n| dual_component(&presentation, n))
                .collect()
        });
        Ok(GradedAlgebra {
            presentation,
            max_degree,
            ideals,
            normal,
            normal_index,
            duals,
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    #[inline]
    pub fn generators(&self) -> usize {
        self.presentation.generators
    }

    /// The relation degree `N`.
    #[inline]
    pub fn relation_degree(&self) -> usize {
        self.presentation.degree
    }

    #[inline]
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn has_dual(&self) -> bool {
        self.duals.is_some()
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.max_degree {
            return Err(Error::DegreeNotComputed {
                requested: n,
                max: self.max_degree,
            });
        }
        Ok(())
    }

    /// `I_n = (R) ∩ E^⊗n`.
    pub fn ideal_component(&self, n: usize) -> Result<&Subspace> {
        self.check(n)?;
        Ok(&self.ideals[n])
    }

    /// `dim A_n`.
    pub fn component_dim(&self, n: usize) -> Result<usize> {
        self.check(n)?;
        Ok(self.normal[n].len())
    }

    pub fn normal_basis(&self, n: usize) -> Result<&[Word]> {
        self.check(n)?;
        Ok(&self.normal[n])
    }

    pub fn normal_position(&self, w: &Word) -> Option<usize> {
        self.normal_index.get(w.len())?.get(w).copied()
    }

    /// Coordinates of `v mod I_n` over the normal basis `B_n`.
    pub fn reduce_to_normal(&self, v: &TensorVector) -> Result<Vec<Scalar>> {
        let n = v.degree();
        self.check(n)?;
        let rem = self.ideals[n].reduce(v)?;
        let mut coords = alloc::vec![Scalar::zero(); self.normal[n].len()];
        for (w, c) in &rem {
            let i = self.normal_index[n][w];
            coords[i] = c.clone();
        }
        Ok(coords)
    }

    /// Normal-form coordinates of a single monomial, as a sparse list.
    pub fn reduce_word(&self, w: &Word) -> Result<Vec<(usize, Scalar)>> {
        let n = w.len();
        self.check(n)?;
        if let Some(i) = self.normal_index[n].get(w) {
            return Ok(alloc::vec![(*i, Scalar::one())]);
        }
        let rem = self.ideals[n].reduce(&TensorVector::from_word(*w))?;
        Ok(rem
            .iter()
            .map(|(u, c)| (self.normal_index[n][u], c.clone()))
            .collect())
    }

    /// Matrix of `a ↦ a·e_k` (right) or `a ↦ e_k·a` (left) from `A_n` to `A_{n+1}`.
    pub fn multiply_by_generator(&self, n: usize, k: u8, side: Side) -> Result<Matrix> {
        self.check(n + 1)?;
        if k == 0 || k as usize > self.generators() {
            return Err(Error::LetterOutOfRange {
                letter: k as u32,
                generators: self.generators(),
            });
        }
        let gen = Word::letter(k);
        let mut m = Matrix::zeros(self.normal[n + 1].len(), self.normal[n].len());
        for (j, b) in self.normal[n].iter().enumerate() {
            let w = match side {
                Side::Right => b.concat(&gen),
                Side::Left => gen.concat(b),
            };
            for (i, c) in self.reduce_word(&w)? {
                m[(i, j)] = c;
            }
        }
        Ok(m)
    }

    /// `W_n = (A^!_n)^*`.
    pub fn dual_component_space(&self, n: usize) -> Result<&Subspace> {
        self.check(n)?;
        let duals = self.duals.as_ref().ok_or(Error::DualNotComputed)?;
        Ok(&duals[n])
    }

    /// `dim A^!_n`.
    pub fn dual_dim(&self, n: usize) -> Result<usize> {
        Ok(self.dual_component_space(n)?.dim())
    }

    /// `I_{n-1} ⊗ E + E ⊗ I_{n-1}` (plus `R` when `n = N`): the incremental
    /// route to `I_n`, kept for cross-checking the direct one.
    pub fn incremental_ideal(&self, n: usize) -> Result<Subspace> {
        self.check(n)?;
        let d = self.generators();
        let nn = self.relation_degree();
        if n < nn {
            return Ok(Subspace::zero(n));
        }
        if n == nn {
            return Ok(self.presentation.relations.clone());
        }
        let prev = &self.ideals[n - 1];
        let mut span = prev.shifted_span(d, 1, 0);
        span.extend(prev.shifted_span(d, 0, 1));
        Subspace::rref(n, &span)
    }
}

fn ideal_component(p: &Presentation, n: usize) -> Subspace {
    let nn = p.degree;
    if n < nn {
        return Subspace::zero(n);
    }
    let mut span = Vec::new();
    for r in 0..=(n - nn) {
        span.extend(p.relations.shifted_span(p.generators, r, n - nn - r));
    }
    Subspace::rref(n, &span).expect("uniform degree")
}

fn dual_component(p: &Presentation, n: usize) -> Subspace {
    let (d, nn) = (p.generators, p.degree);
    if n < nn {
        return Subspace::full(d, n);
    }
    let mut acc = p.relations.shifted(d, 0, n - nn);
    for r in 1..=(n - nn) {
        if acc.is_zero() {
            break;
        }
        let next = p.relations.shifted(d, r, n - nn - r);
        acc = acc.intersect(&next, d).expect("uniform degree");
    }
    acc
}
