mod common;

use common::{binomial, dense_rank, vector, word};
use nhom_core::catalog::{
    self, centrality_check, dual_relations_check, elementary_derivation, gl_invariance, CatalogEntry, Family,
};
use nhom_core::exactlin::{int, ratio};
use nhom_core::{Error, GradedAlgebra, Subspace, TensorVector, Word};
use proptest::prelude::*;

#[test]
fn family_coincidences() {
    let a = |q: i64, r: i64| catalog::artin_schelter(&int(q), &int(r)).unwrap();
    assert_eq!(a(1, 1), catalog::parafermion(2).unwrap());
    assert_eq!(a(-1, 1), catalog::paraboson(2).unwrap());
    assert_eq!(a(0, 1), catalog::plactic(2).unwrap());
    for (q, r) in [(2, 3), (-1, 5), (0, 7), (4, -4)] {
        assert_eq!(a(q, r), a(r, q), "({q}, {r})");
    }
    let half = catalog::artin_schelter(&ratio(1, 2), &int(4)).unwrap();
    assert_eq!(half, catalog::artin_schelter(&int(4), &ratio(1, 2)).unwrap());
    assert_ne!(a(2, 3), a(2, 5));
}

#[test]
fn relation_dimensions() {
    for d in 2..=4usize {
        let expected = d * (d * d - 1) / 3;
        for p in [catalog::parafermion(d), catalog::paraboson(d), catalog::plactic(d)] {
            assert_eq!(p.unwrap().relations().dim(), expected, "D={d}");
        }
        let plactic_rows = catalog::plactic_relations(d).unwrap();
        assert_eq!(dense_rank(&plactic_rows, d, 3), expected);
    }
}

#[test]
fn knuth_relations_for_two_letters() {
    let expected = Subspace::rref(3, &[vector(&[(1, "121"), (-1, "211")]), vector(&[(1, "212"), (-1, "221")])]).unwrap();
    assert_eq!(catalog::plactic(2).unwrap().relations(), &expected);
}

#[test]
fn dual_relation_checks() {
    for family in [
        Family::Parafermion { generators: 2 },
        Family::Parafermion { generators: 3 },
        Family::Parafermion { generators: 4 },
        Family::Plactic { generators: 2 },
        Family::Plactic { generators: 3 },
    ] {
        let entry = CatalogEntry::new(family.clone()).unwrap();
        let report = dual_relations_check(&entry).unwrap();
        assert!(report.passed(), "{family:?}: {report:?}");
        let d = entry.presentation.generators();
        assert_eq!(report.relations_dim + report.annihilator_dim, d.pow(3));
        assert_eq!(report.explicit_dim, report.annihilator_dim);
    }
    let paraboson = CatalogEntry::new(Family::Paraboson { generators: 2 }).unwrap();
    assert!(matches!(dual_relations_check(&paraboson), Err(Error::Inapplicable(_))));
}

fn cube(theta: &[i64]) -> TensorVector {
    let t = TensorVector::from_terms(1, theta.iter().enumerate().map(|(i, &c)| (Word::letter(i as u8 + 1), int(c)))).unwrap();
    t.tensor(&t).tensor(&t)
}

#[test]
fn symmetric_cubes_lie_in_parafermion_dual() {
    for d in 1..=3usize {
        let mut cubes = Vec::new();
        for code in 0..3usize.pow(d as u32) {
            let theta: Vec<i64> = (0..d).map(|i| (code / 3usize.pow(i as u32) % 3) as i64 - 1).collect();
            if theta.iter().any(|&c| c != 0) {
                cubes.push(cube(&theta));
            }
        }
        assert_eq!(dense_rank(&cubes, d, 3) as i64, binomial(d as i64 + 2, 3));
        let dual = catalog::parafermion(d).unwrap().dual();
        assert!(cubes.iter().all(|c| dual.relations().contains(c).unwrap()));
        assert_eq!(dual.relations().dim(), d.pow(3) - d * (d * d - 1) / 3);
    }
}

#[test]
fn catalog_entries() {
    let entry = CatalogEntry::new(Family::ArtinSchelter { q: int(2), r: int(1) }).unwrap();
    assert_eq!(entry.name(), "artin-schelter");
    assert_eq!(entry.presentation.generators(), 2);
    assert!(CatalogEntry::new(Family::Plactic { generators: 0 }).is_err());
    assert!(catalog::parafermion(256).is_err());
}

#[test]
fn gl_invariance_of_bracket_families() {
    for d in [2usize, 3] {
        for p in [catalog::parafermion(d).unwrap(), catalog::paraboson(d).unwrap()] {
            let report = gl_invariance(p.relations(), d).unwrap();
            assert_eq!(report.derivations_checked, d * d);
            assert!(report.invariant(), "{:?}", report.failures);
        }
    }
}

#[test]
fn plactic_invariance_witness() {
    let report = gl_invariance(catalog::plactic(2).unwrap().relations(), 2).unwrap();
    assert!(!report.invariant());
    let target = vector(&[(1, "122"), (-1, "212")]);
    let negated = vector(&[(-1, "122"), (1, "212")]);
    assert!(report.failures.iter().any(|f| f.witness == target || f.witness == negated));
    for f in &report.failures {
        assert!(!catalog::plactic(2).unwrap().relations().contains(&f.witness).unwrap());
    }
    assert!(gl_invariance(&Subspace::full(2, 2), 2).is_err());
}

#[test]
fn centrality() {
    for q in [int(1), int(-1), int(2), ratio(1, 2)] {
        let a = GradedAlgebra::quotient_only(catalog::artin_schelter(&q, &int(1)).unwrap(), 5).unwrap();
        let report = centrality_check(&a, &q, 5).unwrap();
        assert!(report.central(), "q={q}: {report:?}");
        assert_eq!(report.verified_through, 5);
        assert_eq!(report.element, TensorVector::from_terms(2, [(word("12"), int(1)), (word("21"), -q.recip())]).unwrap());
    }
    let a = GradedAlgebra::quotient_only(catalog::artin_schelter(&int(2), &int(1)).unwrap(), 5).unwrap();
    assert!(!centrality_check(&a, &int(3), 5).unwrap().central());
    assert!(matches!(centrality_check(&a, &int(0), 5), Err(Error::Inapplicable(_))));
    assert!(matches!(centrality_check(&a, &int(2), 6), Err(Error::DegreeNotComputed { .. })));
}

fn arb_word(len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1u8..=3, len).prop_map(|ls| Word::new(&ls).unwrap())
}

proptest! {
    #[test]
    fn derivation_obeys_leibniz(u in arb_word(2), v in arb_word(1), to in 1u8..=3, from in 1u8..=3) {
        let uv = TensorVector::from_word(u.concat(&v));
        let (uu, vv) = (TensorVector::from_word(u), TensorVector::from_word(v));
        let lhs = elementary_derivation(&uv, to, from);
        let rhs = &elementary_derivation(&uu, to, from).tensor(&vv) + &uu.tensor(&elementary_derivation(&vv, to, from));
        prop_assert_eq!(lhs, rhs);
    }
}
