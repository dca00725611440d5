//! Oracles shared by the integration tests. None of these call into the
//! series or homalg code paths they are used to check.

#![allow(dead_code)]

use nhom_core::exactlin::int;
use nhom_core::{Matrix, Scalar, TensorVector, Word};

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Coefficient of `t^n` in `(1-t)^{-a} (1-t^2)^{-b}` by direct convolution of
/// the two negative-binomial expansions.
pub fn neg_binomial_product(a: i64, b: i64, n: usize) -> i64 {
    let n = n as i64;
    (0..=n / 2)
        .map(|k| {
            let first = if a == 0 { (n - 2 * k == 0) as i64 } else { binomial(n - 2 * k + a - 1, a - 1) };
            let second = if b == 0 { (k == 0) as i64 } else { binomial(k + b - 1, b - 1) };
            first * second
        })
        .sum()
}

/// Expected `dim B_n` from the closed form with `D` generators.
pub fn parafermion_dims(d: usize, max: usize) -> Vec<usize> {
    let pairs = (d * (d - 1) / 2) as i64;
    (0..=max).map(|n| neg_binomial_product(d as i64, pairs, n) as usize).collect()
}

/// `1, D, D², D(D²-1)/3, D²(D²-1)/12, 0, …`.
pub fn dual_dims(d: usize, max: usize) -> Vec<usize> {
    let closed = [1, d, d * d, d * (d * d - 1) / 3, d * d * (d * d - 1) / 12];
    (0..=max).map(|n| closed.get(n).copied().unwrap_or(0)).collect()
}

/// Dense coefficient matrix of a list of vectors over all words of a degree.
pub fn dense(vectors: &[TensorVector], d: usize, degree: usize) -> Matrix {
    let words: Vec<Word> = Word::all(d, degree).collect();
    Matrix::from_rows(
        vectors
            .iter()
            .map(|v| words.iter().map(|w| v.coeff(w).cloned().unwrap_or_else(|| int(0))).collect())
            .collect(),
    )
}

/// Rank of a list of vectors by plain dense elimination.
pub fn dense_rank(vectors: &[TensorVector], d: usize, degree: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    dense(vectors, d, degree).rank()
}

pub fn word(s: &str) -> Word {
    Word::from_digits(s).unwrap()
}

pub fn vector(terms: &[(i64, &str)]) -> TensorVector {
    TensorVector::from_digit_terms(terms).unwrap()
}

pub fn scalar(n: i64) -> Scalar {
    int(n)
}
