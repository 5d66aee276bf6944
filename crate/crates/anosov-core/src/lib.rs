//! Exact construction and certification of Anosov automorphisms of
//! nilpotent Lie algebras.
//!
//! A rational Lie algebra is *Anosov* when it admits a hyperbolic
//! automorphism (no eigenvalue of absolute value 1) whose matrix in some
//! basis is integral with determinant ±1. This crate builds such
//! automorphisms for doubled graded algebras and certifies candidates with
//! exact arithmetic throughout:
//!
//! - [`lie`] — rational Lie algebras given by sparse structure constants,
//!   with Jacobi/grading validation, central series, direct sums and exact
//!   basis changes;
//! - [`doubling`] — given a graded algebra `n` with integer structure
//!   constants and an integer `a ≥ 2`, constructs `n ⊕ n` in a basis where
//!   the degree automorphism becomes an integer block matrix of powers of
//!   `B = [[a, a²−1], [1, a]]`;
//! - [`hyperbolicity`] — exact unimodularity and unit-circle root exclusion
//!   for integer matrices (resultants plus Sturm sequences, no floating
//!   point on the certification path), bundled into [`hyperbolicity::Certificate`];
//! - [`catalog`] — generators for the example families: the Heisenberg
//!   algebra, filiform algebras, a seven-dimensional graded curve at
//!   rational parameter values, an eight-dimensional two-step algebra with
//!   a twisted pairing, and free-two-step wedge sums;
//! - [`quadext`] — exact arithmetic in the real quadratic extension
//!   `ℚ(√(a²−1))` used to tie the integer matrices back to their
//!   eigenvalue description.
//!
//! All scalars are arbitrary-precision rationals; every value is immutable
//! after construction and every operation is a pure function, so values may
//! be shared and evaluated across threads freely.
//!
//! Basis indices are 0-based throughout this API. File formats and
//! human-readable reports (see the companion CLI crate) are 1-based.
//!
//! ```
//! use anosov_core::catalog::heisenberg3;
//! use anosov_core::doubling::double_construction;
//! use anosov_core::hyperbolicity::certify;
//!
//! // Double the Heisenberg algebra with a = 2 and certify the result.
//! let result = double_construction(&heisenberg3(), 2).unwrap();
//! assert_eq!(result.doubled.dim(), 6);
//!
//! let cert = certify(&result.doubled, &result.matrix).unwrap();
//! assert!(cert.anosov);
//! let split = cert.splitting.unwrap();
//! assert_eq!((split.expanding, split.contracting), (3, 3));
//! ```

#![no_std]
#![forbid(unsafe_code)]

#[macro_use]
extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod doubling;
pub mod hyperbolicity;
pub mod lie;
pub mod matrix;
mod numeric;
pub mod poly;
pub mod quadext;
pub mod rational;
pub mod subspace;

pub use lie::LieAlgebra;
pub use matrix::Matrix;
pub use poly::IntPolynomial;
pub use rational::{Int, Rational};
