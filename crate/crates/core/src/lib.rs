//! Exact computation in the Homfly skein model of the type A Hecke algebra.
//!
//! The crate covers the coefficient ring `Λ = Z[x^±1, v^±1, s^±1]`, Young
//! diagram combinatorics, permutations and braid words, the Hecke algebra
//! `H_n` with its quasi-idempotents `e_λ`, Markov closure, and the
//! hook-content formulas for `α_λ` and quantum dimensions.

pub mod braid;
pub mod coeff;
pub mod error;
pub mod guard;
pub mod hecke;
pub mod qdim;
pub mod verify;
pub mod young;

pub use braid::{BraidWord, Permutation};
pub use coeff::{qfact, qint, LaurentPoly, Monomial, RatFunc, UPoly};
pub use error::{Error, Result};
pub use guard::Guard;
pub use hecke::{HeckeElement, Root, Scalar};
pub use qdim::EvaluationContext;
pub use young::{Cell, YoungDiagram};
