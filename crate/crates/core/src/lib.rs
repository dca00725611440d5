//! Exact computations with N-homogeneous algebras `A = T(E)/(R)`.
//!
//! Everything here is degreewise linear algebra over the rationals: ideal
//! components, normal monomial bases, dual components, slices of the Koszul
//! complex and their homology, plus a Schensted-insertion oracle for the
//! plactic monoid. The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod error;

pub mod catalog;
pub mod exactlin;
pub mod homalg;
pub mod koszul;
pub mod plactic;
pub mod series;

pub use error::{Error, Result};
pub use exactlin::{Matrix, Scalar, Subspace, TensorVector, Word};
pub use homalg::{GradedAlgebra, MemoryGuard, Presentation, Side};
