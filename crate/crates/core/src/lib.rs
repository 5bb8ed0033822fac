//! Exact computer algebra for the invariants of the `gl(1|1)` vacuum module.
//!
//! The crate is organised bottom-up:
//!
//! - [`superpoly`]: sparse supercommutative polynomials with exact rational
//!   coefficients, truncation, derivations and exact division.
//! - [`gl11`]: the `gl(1|1)[t]` action on the symmetric algebra of negative
//!   modes, the translation operator and generating series.
//! - [`ss_vectors`]: classical Segal-Sugawara symbols and their series,
//!   plus symbol-level Berezinian identities.
//! - [`schur`]: partitions, Schur polynomials and Littlewood-Richardson
//!   coefficients.
//! - [`invariant_basis`]: the `Y` family, `H`-module decomposition, the `F`
//!   and `A` generating series and the factorization identity.
//! - [`qseries`]: truncated integer q-series and combinatorial enumerators.
//! - [`susy`]: supersymmetric and affine supersymmetric polynomials, the
//!   Chevalley projection and the cancellation operator.
//! - [`acceptance`]: the end-to-end verification suites.

pub mod acceptance;
pub mod error;
pub mod gl11;
pub mod invariant_basis;
pub mod qseries;
pub mod schur;
pub mod ss_vectors;
pub mod superpoly;
pub mod susy;

pub use error::{Error, Result};
