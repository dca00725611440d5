mod common;

use common::{dense_rank, dual_dims, parafermion_dims, vector, word};
use nhom_core::exactlin::int;
use nhom_core::{catalog, Error, GradedAlgebra, MemoryGuard, Presentation, Side, Subspace, TensorVector, Word};
use proptest::prelude::*;

/// `dim A_n` as `D^n` minus the dense rank of every `u ⊗ r ⊗ v`.
fn brute_dims(p: &Presentation, max: usize) -> Vec<usize> {
    let d = p.generators();
    let nn = p.degree();
    (0..=max)
        .map(|n| {
            let total = d.pow(n as u32);
            if n < nn {
                return total;
            }
            let span: Vec<TensorVector> =
                (0..=n - nn).flat_map(|r| p.relations().shifted_span(d, r, n - nn - r)).collect();
            total - dense_rank(&span, d, n)
        })
        .collect()
}

fn dims(a: &GradedAlgebra) -> Vec<usize> {
    (0..=a.max_degree()).map(|n| a.component_dim(n).unwrap()).collect()
}

fn dual_route_dims(a: &GradedAlgebra) -> Vec<usize> {
    (0..=a.max_degree()).map(|n| a.dual_dim(n).unwrap()).collect()
}

#[test]
fn catalog_dimensions_match_closed_form() {
    for (d, max) in [(2, 7), (3, 5)] {
        let expected = parafermion_dims(d, max);
        for p in [catalog::parafermion(d), catalog::paraboson(d), catalog::plactic(d)] {
            let a = GradedAlgebra::quotient_only(p.unwrap(), max).unwrap();
            assert_eq!(dims(&a), expected, "D={d}");
        }
    }
}

#[test]
fn dimensions_match_dense_oracle() {
    for p in [catalog::parafermion(2).unwrap(), catalog::plactic(2).unwrap(), catalog::parafermion(3).unwrap()] {
        let a = GradedAlgebra::quotient_only(p.clone(), 5).unwrap();
        assert_eq!(dims(&a), brute_dims(&p, 5));
    }
}

#[test]
fn cubic_ideal_dimension() {
    for (d, expected) in [(2, 2), (3, 8)] {
        let a = GradedAlgebra::quotient_only(catalog::parafermion(d).unwrap(), 3).unwrap();
        assert_eq!(a.ideal_component(3).unwrap().dim(), expected);
    }
}

#[test]
fn incremental_ideal_agrees() {
    for p in [catalog::parafermion(2).unwrap(), catalog::plactic(3).unwrap()] {
        let a = GradedAlgebra::quotient_only(p, 6).unwrap();
        for n in 0..=6 {
            assert_eq!(&a.incremental_ideal(n).unwrap(), a.ideal_component(n).unwrap(), "n={n}");
        }
    }
}

#[test]
fn ideal_is_two_sided() {
    let a = GradedAlgebra::quotient_only(catalog::plactic(2).unwrap(), 6).unwrap();
    for n in 3..6 {
        let next = a.ideal_component(n + 1).unwrap();
        let ideal = a.ideal_component(n).unwrap();
        assert!(next.contains_subspace(&ideal.shifted(2, 1, 0)).unwrap());
        assert!(next.contains_subspace(&ideal.shifted(2, 0, 1)).unwrap());
    }
}

#[test]
fn dual_dimensions_both_routes() {
    for (d, max) in [(2, 6), (3, 6), (4, 5)] {
        let expected = dual_dims(d, max);
        for p in [catalog::parafermion(d).unwrap(), catalog::plactic(d).unwrap()] {
            let intersections = GradedAlgebra::new(p.clone(), max).unwrap();
            let quotient = GradedAlgebra::quotient_only(p.dual(), max).unwrap();
            assert_eq!(dual_route_dims(&intersections), expected, "D={d}");
            assert_eq!(dims(&quotient), expected, "D={d}");
        }
    }
}

#[test]
fn parafermion_three_dual_components() {
    let a = GradedAlgebra::new(catalog::parafermion(3).unwrap(), 6).unwrap();
    assert_eq!(dual_route_dims(&a), [1, 3, 9, 8, 6, 0, 0]);
    assert_eq!(a.dual_component_space(3).unwrap(), a.presentation().relations());
}

#[test]
fn dual_components_are_annihilators_of_dual_ideal() {
    let p = catalog::plactic(2).unwrap();
    let a = GradedAlgebra::new(p.clone(), 5).unwrap();
    let dual = GradedAlgebra::quotient_only(p.dual(), 5).unwrap();
    for n in 0..=5 {
        assert_eq!(a.dual_component_space(n).unwrap(), &dual.ideal_component(n).unwrap().annihilator(2));
    }
}

#[test]
fn double_dual_is_identity() {
    for p in [catalog::parafermion(3).unwrap(), catalog::plactic(2).unwrap(), Presentation::free(2, 3).unwrap()] {
        assert_eq!(p.dual().dual(), p);
        assert_eq!(p.relations().dim() + p.dual().relations().dim(), p.generators().pow(3));
    }
}

#[test]
fn parafermion_dual_contains_antisymmetrised_brackets() {
    for d in [2usize, 3] {
        let dual = catalog::parafermion(d).unwrap().dual();
        for i in 1..=d as u8 {
            for j in 1..=d as u8 {
                for k in 1..=d as u8 {
                    let w = |a, b, c| Word::new(&[a, b, c]).unwrap();
                    let v = TensorVector::from_terms(3, [(w(i, j, k), int(1)), (w(k, j, i), int(-1))]).unwrap();
                    assert!(dual.relations().contains(&v).unwrap());
                }
            }
        }
    }
}

#[test]
fn right_multiplication_matrix() {
    let a = GradedAlgebra::quotient_only(catalog::parafermion(2).unwrap(), 3).unwrap();
    let m = a.multiply_by_generator(2, 1, Side::Right).unwrap();
    assert_eq!((m.rows(), m.cols()), (6, 4));
    assert_eq!(m.rank(), 4);
}

#[test]
fn left_and_right_multiplication_commute() {
    let a = GradedAlgebra::quotient_only(catalog::plactic(3).unwrap(), 5).unwrap();
    for n in 0..4 {
        for k in 1..=3 {
            for l in 1..=3 {
                let lr = a
                    .multiply_by_generator(n + 1, k, Side::Left)
                    .unwrap()
                    .mul(&a.multiply_by_generator(n, l, Side::Right).unwrap());
                let rl = a
                    .multiply_by_generator(n + 1, l, Side::Right)
                    .unwrap()
                    .mul(&a.multiply_by_generator(n, k, Side::Left).unwrap());
                assert_eq!(lr, rl);
            }
        }
    }
}

#[test]
fn relations_reduce_to_zero() {
    let a = GradedAlgebra::quotient_only(catalog::plactic(2).unwrap(), 5).unwrap();
    let r = vector(&[(1, "121"), (-1, "211")]);
    assert!(a.reduce_to_normal(&r).unwrap().iter().all(|c| *c == int(0)));
    let wrapped = r.wrap(&word("2"), &word("1"));
    assert!(a.reduce_to_normal(&wrapped).unwrap().iter().all(|c| *c == int(0)));
    let normal = a.normal_basis(3).unwrap();
    assert_eq!(normal.len(), 6);
    for (i, w) in normal.iter().enumerate() {
        assert_eq!(a.normal_position(w), Some(i));
        assert_eq!(a.reduce_word(w).unwrap(), vec![(i, int(1))]);
    }
}

#[test]
fn relabelling_preserves_dimensions() {
    let p = catalog::plactic(3).unwrap();
    let q = p.relabel(&[3, 2, 1]).unwrap();
    assert_ne!(p, q);
    let a = GradedAlgebra::new(p, 5).unwrap();
    let b = GradedAlgebra::new(q, 5).unwrap();
    assert_eq!(dims(&a), dims(&b));
    assert_eq!(dual_route_dims(&a), dual_route_dims(&b));
    assert!(catalog::plactic(2).unwrap().relabel(&[1, 1]).is_err());
}

#[test]
fn presentation_validation() {
    assert!(Presentation::free(2, 1).is_err());
    assert!(Presentation::free(0, 3).is_err());
    assert!(matches!(
        Presentation::from_vectors(2, 3, &[vector(&[(1, "131")])]),
        Err(Error::LetterOutOfRange { letter: 3, generators: 2 })
    ));
    assert!(matches!(
        Presentation::from_vectors(2, 3, &[vector(&[(1, "12")])]),
        Err(Error::DegreeMismatch { .. })
    ));
    let empty = Presentation::from_vectors(2, 3, &[]).unwrap();
    let free = GradedAlgebra::quotient_only(empty, 4).unwrap();
    assert_eq!(dims(&free), [1, 2, 4, 8, 16]);
}

#[test]
fn memory_guard_refuses_large_components() {
    let guard = MemoryGuard { max_words: 100 };
    let err = GradedAlgebra::with_guard(catalog::parafermion(3).unwrap(), 5, guard).unwrap_err();
    assert!(matches!(err, Error::MemoryGuard { degree: 5, words: 243, .. }));
    let a = GradedAlgebra::quotient_only(catalog::parafermion(2).unwrap(), 3).unwrap();
    assert!(matches!(a.component_dim(4), Err(Error::DegreeNotComputed { .. })));
    assert!(matches!(a.dual_dim(1), Err(Error::DualNotComputed)));
}

fn arb_presentation() -> impl Strategy<Value = Presentation> {
    (2usize..=3).prop_flat_map(|nn| {
        let words: Vec<Word> = Word::all(2, nn).collect();
        let count = words.len();
        prop::collection::vec(prop::collection::vec((0..count, -2i64..=2), 1..4), 0..4).prop_map(move |rels| {
            let vs: Vec<TensorVector> = rels
                .into_iter()
                .map(|terms| TensorVector::from_terms(nn, terms.into_iter().map(|(i, c)| (words[i], int(c)))).unwrap())
                .collect();
            Presentation::from_vectors(2, nn, &vs).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_presentations_match_oracle(p in arb_presentation()) {
        let a = GradedAlgebra::new(p.clone(), 5).unwrap();
        prop_assert_eq!(dims(&a), brute_dims(&p, 5));
        prop_assert_eq!(dual_route_dims(&a), brute_dims(&p.dual(), 5));
        for n in 0..=5 {
            prop_assert_eq!(&a.incremental_ideal(n).unwrap(), a.ideal_component(n).unwrap());
        }
    }

    #[test]
    fn dual_components_are_nested(p in arb_presentation()) {
        let a = GradedAlgebra::new(p.clone(), 5).unwrap();
        for n in 1..5 {
            let w = a.dual_component_space(n + 1).unwrap();
            let prev = a.dual_component_space(n).unwrap();
            prop_assert!(prev.shifted(2, 1, 0).contains_subspace(w).unwrap());
            prop_assert!(prev.shifted(2, 0, 1).contains_subspace(w).unwrap());
        }
        let full = Subspace::full(2, 1);
        prop_assert_eq!(a.dual_component_space(1).unwrap(), &full);
    }
}
