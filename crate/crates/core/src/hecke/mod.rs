//! The Hecke algebra `H_n` in the positive permutation braid basis.
//!
//! Relations: braid relations and `x^-1 σ_i - x σ_i^-1 = z`, equivalently
//! `σ_i^2 = xz σ_i + x^2`.

mod closure;
mod element;
mod group;
mod idempotent;
mod scalar;

pub use closure::{closure_eval, homfly_of_braid, normalized_homfly, partial_closure, scaled_partial_closure};
pub use element::{HeckeElement, Root};
pub use idempotent::{
    a_n, a_n_recursive, b_n, b_n_recursive, e_lambda, splitplus_a, splitplus_b, yokota_denominator,
    yokota_epsilon, E_lambda,
};
pub use scalar::Scalar;
