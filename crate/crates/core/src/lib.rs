//! Exact computation of Orlik–Solomon algebras of simple matroids.
//!
//! The crate provides matroids (circuits, flats, Möbius/Whitney data, the
//! operations direct sum / parallel connection / truncation / cone), exact
//! linear algebra over ℚ and GF(p), the OS ideal with its k-adic
//! approximations, nbc/nbb monomial sets, affine OS algebras of pointed
//! matroids, and degree-one resonance varieties with their mod-p companions.
//!
//! Everything is exact: rationals are arbitrary-precision, finite fields are
//! prime fields with explicit arithmetic, and all ranks and dimensions come
//! from canonical echelon forms.  Ground sets are limited to 20 elements
//! (subsets are bitmask-indexed throughout).

pub mod error;
pub mod exterior;
pub mod field;
pub mod graded;
pub mod io;
pub mod linalg;
pub mod matroid;
pub mod os;
pub mod resonance;
pub mod subsets;

pub use error::{Error, Result};
