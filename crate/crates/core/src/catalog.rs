//! The cubic algebras studied here, and structural checks on their relations.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exactlin::{int, Scalar, Subspace, TensorVector, Word};
use crate::homalg::{GradedAlgebra, Presentation};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// Relations `[[x, y], z] = 0`.
    Parafermion { generators: usize },
    /// Relations `[{x, y}, z] = 0`.
    Paraboson { generators: usize },
    /// Knuth relations.
    Plactic { generators: usize },
    /// The two-generator cubic family `A_{q,r}`.
    ArtinSchelter { q: Scalar, r: Scalar },
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub family: Family,
    pub presentation: Presentation,
}

impl CatalogEntry {
    pub fn new(family: Family) -> Result<Self> {
        let presentation = match &family {
            Family::Parafermion { generators } => parafermion(*generators)?,
            Family::Paraboson { generators } => paraboson(*generators)?,
            Family::Plactic { generators } => plactic(*generators)?,
            Family::ArtinSchelter { q, r } => artin_schelter(q, r)?,
        };
        Ok(CatalogEntry { family, presentation })
    }

    pub fn name(&self) -> &'static str {
        match self.family {
            Family::Parafermion { .. } => "parafermion",
            Family::Paraboson { .. } => "paraboson",
            Family::Plactic { .. } => "plactic",
            Family::ArtinSchelter { .. } => "artin-schelter",
        }
    }
}

fn word3(i: u8, j: u8, k: u8) -> Word {
    Word::new(&[i, j, k]).expect("letters are positive")
}

fn cubic(generators: usize, vectors: Vec<TensorVector>) -> Result<Presentation> {
    Presentation::from_vectors(generators, 3, &vectors)
}

fn alphabet(generators: usize) -> Result<core::ops::RangeInclusive<u8>> {
    if generators == 0 || generators > u8::MAX as usize {
        return Err(Error::Parameter(format!("generator count {generators} outside 1..=255")));
    }
    Ok(1..=generators as u8)
}

/// `R_B = span{[[e_i, e_j], e_k]}`, each expanded as `ijk - jik - kij + kji`.
pub fn parafermion(generators: usize) -> Result<Presentation> {
    let letters = alphabet(generators)?;
    let mut vs = Vec::new();
    for i in letters.clone() {
        for j in letters.clone() {
            for k in letters.clone() {
                let v = TensorVector::from_terms(
                    3,
                    [
                        (word3(i, j, k), int(1)),
                        (word3(j, i, k), int(-1)),
                        (word3(k, i, j), int(-1)),
                        (word3(k, j, i), int(1)),
                    ],
                )?;
                vs.push(v);
            }
        }
    }
    cubic(generators, vs)
}

/// `span{[{e_i, e_j}, e_k]}`, each expanded as `ijk + jik - kij - kji`.
pub fn paraboson(generators: usize) -> Result<Presentation> {
    let letters = alphabet(generators)?;
    let mut vs = Vec::new();
    for i in letters.clone() {
        for j in letters.clone() {
            for k in letters.clone() {
                let v = TensorVector::from_terms(
                    3,
                    [
                        (word3(i, j, k), int(1)),
                        (word3(j, i, k), int(1)),
                        (word3(k, i, j), int(-1)),
                        (word3(k, j, i), int(-1)),
                    ],
                )?;
                vs.push(v);
            }
        }
    }
    cubic(generators, vs)
}

/// Knuth relations: `ℓmk - ℓkm` for `k < ℓ ≤ m`, and `kmℓ - mkℓ` for `k ≤ ℓ < m`.
pub fn plactic_relations(generators: usize) -> Result<Vec<TensorVector>> {
    let letters = alphabet(generators)?;
    let mut vs = Vec::new();
    for k in letters.clone() {
        for l in letters.clone() {
            for m in letters.clone() {
                if k < l && l <= m {
                    vs.push(TensorVector::from_terms(3, [(word3(l, m, k), int(1)), (word3(l, k, m), int(-1))])?);
                }
            }
        }
    }
    for k in letters.clone() {
        for l in letters.clone() {
            for m in letters.clone() {
                if k <= l && l < m {
                    vs.push(TensorVector::from_terms(3, [(word3(k, m, l), int(1)), (word3(m, k, l), int(-1))])?);
                }
            }
        }
    }
    Ok(vs)
}

pub fn plactic(generators: usize) -> Result<Presentation> {
    cubic(generators, plactic_relations(generators)?)
}

/// `A_{q,r}`: `e2e1e1 + qr·e1e1e2 - (q+r)·e1e2e1` and `e2e2e1 + qr·e1e2e2 - (q+r)·e2e1e2`.
pub fn artin_schelter(q: &Scalar, r: &Scalar) -> Result<Presentation> {
    let qr = q * r;
    let s = -(q + r);
    let w = |s: &str| Word::from_digits(s).expect("digit word");
    let a = TensorVector::from_terms(3, [(w("211"), int(1)), (w("112"), qr.clone()), (w("121"), s.clone())])?;
    let b = TensorVector::from_terms(3, [(w("221"), int(1)), (w("122"), qr), (w("212"), s)])?;
    cubic(2, alloc::vec![a, b])
}

/// Outcome of comparing `R^⊥` with an explicitly given dual span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualRelationsReport {
    pub relations_dim: usize,
    pub annihilator_dim: usize,
    pub explicit_dim: usize,
    pub annihilator_in_explicit: bool,
    pub explicit_in_annihilator: bool,
    /// `dim R + dim R^⊥ = D^3`.
    pub dimension_identity: bool,
}

impl DualRelationsReport {
    pub fn passed(&self) -> bool {
        self.annihilator_in_explicit && self.explicit_in_annihilator && self.dimension_identity
    }
}

/// `θ^⊗3` for `θ ∈ {-1, 0, 1}^D`; together these span the symmetric cubes.
fn symmetric_cubes(generators: usize) -> Vec<TensorVector> {
    let mut out = Vec::new();
    let mut coeffs = alloc::vec![-1i64; generators];
    loop {
        let theta = TensorVector::from_terms(
            1,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (Word::letter(i as u8 + 1), int(c))),
        )
        .expect("degree one");
        if !theta.is_zero() {
            out.push(theta.tensor(&theta).tensor(&theta));
        }
        let Some(pos) = coeffs.iter().position(|&c| c < 1) else {
            break;
        };
        coeffs[pos] += 1;
        for c in &mut coeffs[..pos] {
            *c = -1;
        }
    }
    out
}

/// Explicit span of `R_B^⊥`: `αβγ - γβα` together with all `θ^⊗3`.
pub fn parafermion_dual_span(generators: usize) -> Result<Vec<TensorVector>> {
    let letters = alphabet(generators)?;
    let mut vs = Vec::new();
    for i in letters.clone() {
        for j in letters.clone() {
            for k in letters.clone() {
                vs.push(TensorVector::from_terms(3, [(word3(i, j, k), int(1)), (word3(k, j, i), int(-1))])?);
            }
        }
    }
    vs.extend(symmetric_cubes(generators));
    Ok(vs)
}

/// Explicit span of `R_P^⊥` in the dual basis `θ^k`.
pub fn plactic_dual_span(generators: usize) -> Result<Vec<TensorVector>> {
    let letters = alphabet(generators)?;
    let mut vs = Vec::new();
    for i in letters.clone() {
        for j in letters.clone() {
            for k in letters.clone() {
                if i < j && j <= k {
                    vs.push(TensorVector::from_terms(3, [(word3(j, k, i), int(1)), (word3(j, i, k), int(1))])?);
                }
                if i <= j && j < k {
                    vs.push(TensorVector::from_terms(3, [(word3(i, k, j), int(1)), (word3(k, i, j), int(1))])?);
                }
                if i <= j && j <= k {
                    vs.push(TensorVector::from_word(word3(i, j, k)));
                }
                if i < j && j < k {
                    vs.push(TensorVector::from_word(word3(k, j, i)));
                }
            }
        }
    }
    Ok(vs)
}

/// Checks that `R^⊥` equals the known explicit dual span (parafermion or plactic).
pub fn dual_relations_check(entry: &CatalogEntry) -> Result<DualRelationsReport> {
    let explicit = match entry.family {
        Family::Parafermion { generators } => parafermion_dual_span(generators)?,
        Family::Plactic { generators } => plactic_dual_span(generators)?,
        _ => {
            return Err(Error::Inapplicable(format!(
                "no explicit dual span known for {}",
                entry.name()
            )))
        }
    };
    let p = &entry.presentation;
    let d = p.generators();
    let ann = p.relations().annihilator(d);
    let explicit = Subspace::rref(3, &explicit)?;
    Ok(DualRelationsReport {
        relations_dim: p.relations().dim(),
        annihilator_dim: ann.dim(),
        explicit_dim: explicit.dim(),
        annihilator_in_explicit: explicit.contains_subspace(&ann)?,
        explicit_in_annihilator: ann.contains_subspace(&explicit)?,
        dimension_identity: p.relations().dim() + ann.dim() == d.pow(3),
    })
}

/// Derivation of `E^⊗n` induced by the elementary matrix `e_from ↦ e_to`.
pub fn elementary_derivation(v: &TensorVector, to: u8, from: u8) -> TensorVector {
    let mut out = TensorVector::zero(v.degree());
    for (w, c) in v {
        for pos in 0..w.len() {
            if w.at(pos) == from {
                out.add_term(w.with_letter(pos, to), c.clone());
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceFailure {
    /// Image generator `i` of the derivation `e_j ↦ e_i`.
    pub to: u8,
    /// Source generator `j`.
    pub from: u8,
    /// Image of a basis row of `R` that falls outside `R`.
    pub witness: TensorVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceReport {
    pub derivations_checked: usize,
    pub failures: Vec<InvarianceFailure>,
}

impl InvarianceReport {
    pub fn invariant(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Infinitesimal `gl(D)` invariance: each derivation `e_j ↦ e_i` must map `R` into itself.
pub fn gl_invariance(relations: &Subspace, generators: usize) -> Result<InvarianceReport> {
    if relations.degree() != 3 {
        return Err(Error::DegreeMismatch {
            expected: 3,
            found: relations.degree(),
        });
    }
    let letters = alphabet(generators)?;
    let mut failures = Vec::new();
    for to in letters.clone() {
        for from in letters.clone() {
            for row in relations.rows() {
                let image = elementary_derivation(row, to, from);
                if !relations.contains(&image)? {
                    failures.push(InvarianceFailure { to, from, witness: image });
                    break;
                }
            }
        }
    }
    Ok(InvarianceReport {
        derivations_checked: generators * generators,
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralityReport {
    /// `c = e1e2 - q^{-1} e2e1`.
    pub element: TensorVector,
    /// `[c, e_k] = 0` in `A_3` for `k = 1, 2`.
    pub commutes_with_generators: bool,
    /// Highest degree `n` for which `c·b = b·c` was verified on every normal monomial of `A_{n-2}`.
    pub verified_through: usize,
    pub failure_degree: Option<usize>,
}

impl CentralityReport {
    pub fn central(&self) -> bool {
        self.commutes_with_generators && self.failure_degree.is_none()
    }
}

/// Checks that `e1e2 - q^{-1} e2e1` is central in `A` through degree `max_degree`.
pub fn centrality_check(algebra: &GradedAlgebra, q: &Scalar, max_degree: usize) -> Result<CentralityReport> {
    if q.is_zero() {
        return Err(Error::Inapplicable("e1e2 - q^-1 e2e1 needs q != 0".into()));
    }
    if algebra.generators() != 2 {
        return Err(Error::Parameter("centrality check needs two generators".into()));
    }
    if max_degree < 3 {
        return Err(Error::Parameter("centrality check needs max degree >= 3".into()));
    }
    if max_degree > algebra.max_degree() {
        return Err(Error::DegreeNotComputed {
            requested: max_degree,
            max: algebra.max_degree(),
        });
    }
    let w = |s: &str| Word::from_digits(s).expect("digit word");
    let c = TensorVector::from_terms(2, [(w("12"), Scalar::one()), (w("21"), -q.recip())])?;
    let commutator = |b: &Word| -> Result<bool> {
        let bv = TensorVector::from_word(*b);
        let x = &c.tensor(&bv) - &bv.tensor(&c);
        Ok(algebra.reduce_to_normal(&x)?.iter().all(Zero::is_zero))
    };
    let commutes_with_generators = commutator(&w("1"))? && commutator(&w("2"))?;
    let mut verified_through = 2;
    let mut failure_degree = None;
    for n in 3..=max_degree {
        let mut ok = true;
        for b in algebra.normal_basis(n - 2)? {
            if !commutator(b)? {
                ok = false;
                break;
            }
        }
        if !ok {
            failure_degree = Some(n);
            break;
        }
        verified_through = n;
    }
    Ok(CentralityReport {
        element: c,
        commutes_with_generators,
        verified_through,
        failure_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::ratio;

    fn v(terms: &[(i64, &str)]) -> TensorVector {
        TensorVector::from_digit_terms(terms).unwrap()
    }

    #[test]
    fn one_generator_has_no_relations() {
        assert!(parafermion(1).unwrap().relations().is_zero());
        assert!(paraboson(1).unwrap().relations().is_zero());
        assert!(plactic(1).unwrap().relations().is_zero());
    }

    #[test]
    fn relation_dimensions() {
        assert_eq!(parafermion(2).unwrap().relations().dim(), 2);
        assert_eq!(parafermion(3).unwrap().relations().dim(), 8);
        assert_eq!(paraboson(2).unwrap().relations().dim(), 2);
        assert_eq!(plactic_relations(3).unwrap().len(), 8);
        assert_eq!(plactic(3).unwrap().relations().dim(), 8);
    }

    #[test]
    fn paraboson_two_span() {
        let expected = Subspace::rref(3, &[v(&[(1, "112"), (-1, "211")]), v(&[(1, "122"), (-1, "221")])]).unwrap();
        assert_eq!(paraboson(2).unwrap().relations(), &expected);
    }

    #[test]
    fn plactic_two_relations() {
        let rels = plactic_relations(2).unwrap();
        assert_eq!(rels, [v(&[(1, "221"), (-1, "212")]), v(&[(1, "121"), (-1, "211")])]);
    }

    #[test]
    fn special_members_of_the_family() {
        let one = int(1);
        assert_eq!(artin_schelter(&one, &one).unwrap(), parafermion(2).unwrap());
        assert_eq!(artin_schelter(&int(-1), &one).unwrap(), paraboson(2).unwrap());
        assert_eq!(artin_schelter(&int(0), &one).unwrap(), plactic(2).unwrap());
        assert_eq!(
            artin_schelter(&int(2), &int(3)).unwrap(),
            artin_schelter(&int(3), &int(2)).unwrap()
        );
    }

    #[test]
    fn symmetric_cubes_span_sym3() {
        for d in 1..=3usize {
            let s = Subspace::rref(3, &symmetric_cubes(d)).unwrap();
            // C(D+2, 3)
            assert_eq!(s.dim(), d * (d + 1) * (d + 2) / 6);
        }
    }

    #[test]
    fn dual_checks_pass() {
        for entry in [
            Family::Parafermion { generators: 2 },
            Family::Parafermion { generators: 3 },
            Family::Plactic { generators: 2 },
            Family::Plactic { generators: 3 },
        ] {
            let e = CatalogEntry::new(entry).unwrap();
            let report = dual_relations_check(&e).unwrap();
            assert!(report.passed(), "{report:?}");
        }
        let e = CatalogEntry::new(Family::Paraboson { generators: 2 }).unwrap();
        assert!(dual_relations_check(&e).is_err());
    }

    #[test]
    fn plactic_is_not_gl_invariant() {
        let p = plactic(2).unwrap();
        let report = gl_invariance(p.relations(), 2).unwrap();
        assert!(!report.invariant());
        let w = report.failures.iter().find(|f| f.to == 2 && f.from == 1).unwrap();
        let target = v(&[(1, "122"), (-1, "212")]);
        assert!(w.witness == target || w.witness == -&target);
    }

    #[test]
    fn centrality_for_q_two() {
        let a = GradedAlgebra::new(artin_schelter(&int(2), &int(1)).unwrap(), 5).unwrap();
        let rep = centrality_check(&a, &int(2), 5).unwrap();
        assert!(rep.central());
        assert_eq!(rep.verified_through, 5);
        assert!(centrality_check(&a, &int(0), 5).is_err());
        // Not central with the wrong parameter.
        let rep = centrality_check(&a, &ratio(1, 3), 5).unwrap();
        assert!(!rep.central());
    }
}
