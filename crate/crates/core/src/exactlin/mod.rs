//! Exact linear algebra over ℚ on sparse vectors indexed by words.

mod matrix;
mod subspace;
mod vector;
mod word;

pub use matrix::Matrix;
pub use subspace::Subspace;
pub use vector::TensorVector;
pub use word::{AllWords, Word};

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Scalar = num_rational::BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

pub fn ratio(numer: i64, denom: i64) -> Scalar {
    Scalar::new(numer.into(), denom.into())
}
