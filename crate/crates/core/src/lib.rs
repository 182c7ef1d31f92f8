//! Exact computation of equivariant Schubert classes on Grassmannians.
//!
//! Cohomology classes are factorial Schur polynomials and K-theory classes
//! are factorial Grothendieck polynomials. Both are obtained as pushforwards
//! of Bott-Samelson classes along three independent routes, and the library
//! ships the checks that cross-verify them against straightening rules and
//! fixed-point localization.
//!
//! All arithmetic is exact. Polynomials carry arbitrary-precision integer
//! coefficients; rational numbers only appear when evaluating at a point.

pub mod classes;
pub mod combinat;
mod error;
pub mod localize;
pub mod operators;
pub mod par;
pub mod poly;
pub mod random;
pub mod verify;

pub use error::{Error, Result};
