use std::fmt;

use num_traits::{One, Signed};

use crate::coeff::{LaurentPoly, Monomial, RatFunc};

/// Coefficient ring of a [`HeckeElement`](super::HeckeElement): `Λ` itself
/// for constructions, or its fraction field once `δ` or `1/α` enters.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_poly(p: LaurentPoly) -> Self;
    fn to_ratfunc(&self) -> RatFunc;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn mul_poly(&self, p: &LaurentPoly) -> Self;
    fn mul_monomial(&self, m: Monomial, negate: bool) -> Self;
    /// `Some((m, negate))` when the value is `±m`.
    fn as_unit_monomial(&self) -> Option<(Monomial, bool)>;

    fn add_assign_ref(&mut self, rhs: &Self) {
        if !rhs.is_zero() {
            *self = self.add_ref(rhs);
        }
    }
}

fn unit_term(p: &LaurentPoly) -> Option<(Monomial, bool)> {
    let (m, c) = p.as_term()?;
    if c.abs().is_one() {
        Some((m, c.is_negative()))
    } else {
        None
    }
}

impl Scalar for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn from_poly(p: LaurentPoly) -> Self {
        p
    }
    fn to_ratfunc(&self) -> RatFunc {
        RatFunc::from_poly(self.clone())
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn mul_poly(&self, p: &LaurentPoly) -> Self {
        self * p
    }
    fn mul_monomial(&self, m: Monomial, negate: bool) -> Self {
        LaurentPoly::mul_monomial(self, m, negate)
    }
    fn as_unit_monomial(&self) -> Option<(Monomial, bool)> {
        unit_term(self)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
}

impl Scalar for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn from_poly(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
    fn to_ratfunc(&self) -> RatFunc {
        self.clone()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn mul_poly(&self, p: &LaurentPoly) -> Self {
        RatFunc::mul_poly(self, p)
    }
    fn mul_monomial(&self, m: Monomial, negate: bool) -> Self {
        RatFunc::mul_monomial(self, m, negate)
    }
    fn as_unit_monomial(&self) -> Option<(Monomial, bool)> {
        if self.den().is_one() {
            unit_term(self.num())
        } else {
            None
        }
    }
}
