//! Exact sparse polynomials over a graded alphabet of even and odd
//! (Grassmann) variables.
//!
//! Every variable carries a parity, an internal degree and an auxiliary
//! degree. Monomials are kept in canonical form (odd factors ascending by
//! variable id) and the Koszul sign of any reordering is folded into the
//! coefficient. Truncation is opt-in through [`Truncation`].

mod alphabet;
mod divide;
pub mod linalg;
mod monomial;
mod poly;
mod rational;
mod serial;

pub use alphabet::{Alphabet, Parity, VarId, VarSpec};
pub use monomial::Monomial;
pub use poly::{Grading, SuperPoly, Truncation};
pub use rational::ExactRational;
pub use serial::JsonTerm;
