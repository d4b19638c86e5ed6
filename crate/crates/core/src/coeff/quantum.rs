use super::{LaurentPoly, Monomial};
use crate::error::{Error, Result};

/// The quantum integer `[k] = s^(k-1) + s^(k-3) + ... + s^(1-k)`.
pub fn qint(k: i64) -> Result<LaurentPoly> {
    if k < 0 {
        return Err(Error::NegativeArgument(k));
    }
    let k = k as i32;
    Ok(LaurentPoly::from_terms(
        (0..k).map(|t| (Monomial::s(k - 1 - 2 * t), 1)),
    ))
}

/// `[k]! = [1][2]...[k]`, with `[0]! = 1`.
pub fn qfact(k: i64) -> Result<LaurentPoly> {
    if k < 0 {
        return Err(Error::NegativeArgument(k));
    }
    (1..=k).map(qint).product()
}
