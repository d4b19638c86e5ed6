//! The coefficient ring `Λ = Z[x^±1, v^±1, s^±1]`, its fraction field and
//! quantum integers.

mod monomial;
mod poly;
mod quantum;
mod ratfunc;

pub use monomial::Monomial;
pub use poly::{LaurentPoly, UPoly};
pub use quantum::{qfact, qint};
pub use ratfunc::RatFunc;
