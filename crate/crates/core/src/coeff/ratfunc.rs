use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Signed;

use super::{LaurentPoly, Monomial};
use crate::error::{Error, Result};

/// A quotient `num / den` of Laurent polynomials.
///
/// No gcd is ever taken. Two fractions are equal when `a·d = c·b`.
#[derive(Clone)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        // Keep the leading denominator coefficient positive.
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            RatFunc {
                num: -num,
                den: -den,
            }
        } else {
            RatFunc { num, den }
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    /// The unknot value `δ = (v^-1 - v)/z`.
    pub fn delta() -> Self {
        RatFunc {
            num: LaurentPoly::from_terms([(Monomial::v(-1), 1), (Monomial::v(1), -1)]),
            den: LaurentPoly::z(),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inverse(&self) -> Result<Self> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div_poly(&self, p: &LaurentPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.num.clone(), &self.den * p))
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        RatFunc {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial, negate: bool) -> Self {
        RatFunc {
            num: self.num.mul_monomial(m, negate),
            den: self.den.clone(),
        }
    }

    /// The polynomial `num / den` when the division is exact.
    pub fn to_poly(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        self.num.exact_div(&self.den).ok()
    }

    /// True when the value does not depend on `x`, i.e. it equals its own
    /// specialization at `x = 1`.
    pub fn is_x_free(&self) -> bool {
        let strip = |p: &LaurentPoly| {
            LaurentPoly::from_terms(p.terms().map(|(m, c)| (Monomial::new(0, m.v, m.s), c.clone())))
        };
        if !self.num.involves_x() && !self.den.involves_x() {
            return true;
        }
        let candidate = RatFunc {
            num: strip(&self.num),
            den: strip(&self.den),
        };
        !candidate.den.is_zero() && candidate == *self
    }

    pub fn substitute(&self, n: u32) -> (super::UPoly, super::UPoly) {
        (self.num.substitute(n), self.den.substitute(n))
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.num.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return RatFunc {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        if rhs.den.is_one() {
            return RatFunc {
                num: &self.num + &(&rhs.num * &self.den),
                den: self.den.clone(),
            };
        }
        if self.den.is_one() {
            return RatFunc {
                num: &(&self.num * &rhs.den) + &rhs.num,
                den: rhs.den.clone(),
            };
        }
        RatFunc::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFunc::zero();
        }
        let den = if rhs.den.is_one() {
            self.den.clone()
        } else if self.den.is_one() {
            rhs.den.clone()
        } else {
            &self.den * &rhs.den
        };
        RatFunc::normalized(&self.num * &rhs.num, den)
    }
}

/// Panics on division by zero, like integer division.
impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inverse().expect("division by zero RatFunc")
    }
}

impl fmt::Display for RatFunc {
    /// A polynomial when the quotient is exact, otherwise `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_poly() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc(({})/({}))", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn delta_rendering() {
        assert_eq!(RatFunc::delta().to_string(), "(-v + v^-1)/(s - s^-1)");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RatFunc::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn exact_quotient_renders_as_poly() {
        let z = LaurentPoly::z();
        let r = RatFunc::new(&z * &z, z.clone()).unwrap();
        assert_eq!(r.to_string(), "s - s^-1");
    }

    #[test]
    fn x_freeness() {
        let x = LaurentPoly::x();
        let r = RatFunc::new(&x * &LaurentPoly::s(), x.clone()).unwrap();
        assert!(r.is_x_free());
        let r = RatFunc::new(&x + &LaurentPoly::s(), LaurentPoly::one()).unwrap();
        assert!(!r.is_x_free());
    }

    fn small_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(((-1i32..=1, -2i32..=2, -2i32..=2), -3i64..=3), 1..4).prop_map(|ts| {
            LaurentPoly::from_terms(ts.into_iter().map(|((x, v, s), c)| (Monomial::new(x, v, s), c)))
        })
    }

    proptest! {
        #[test]
        fn scaling_by_a_monomial_preserves_value(
            a in small_poly(), b in small_poly(),
            e in (-2i32..=2, -2i32..=2, -2i32..=2), neg in any::<bool>()
        ) {
            prop_assume!(!b.is_zero());
            let m = Monomial::new(e.0, e.1, e.2);
            let r = RatFunc::new(a.clone(), b.clone()).unwrap();
            let scaled = RatFunc::new(a.mul_monomial(m, neg), b.mul_monomial(m, neg)).unwrap();
            prop_assert_eq!(&r, &scaled);
            prop_assert_eq!(&scaled, &r);
        }

        #[test]
        fn field_operations_are_consistent(a in small_poly(), b in small_poly(), c in small_poly(), d in small_poly()) {
            prop_assume!(!b.is_zero() && !d.is_zero());
            let p = RatFunc::new(a, b).unwrap();
            let q = RatFunc::new(c, d).unwrap();
            prop_assert_eq!(&(&p + &q) - &q, p.clone());
            prop_assert_eq!(&p * &q, &q * &p);
            if !q.is_zero() {
                prop_assert_eq!(&(&p * &q) / &q, p.clone());
            }
        }
    }
}
