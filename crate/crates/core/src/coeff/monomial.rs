use std::fmt;
use std::ops::{Div, Mul};

/// A Laurent monomial `x^a v^b s^c`.
///
/// Field order matters: the derived `Ord` is lexicographic on
/// `(s, v, x)`, which is the canonical term order of [`LaurentPoly`].
///
/// [`LaurentPoly`]: super::LaurentPoly
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub s: i32,
    pub v: i32,
    pub x: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { s: 0, v: 0, x: 0 };

    pub const fn new(x: i32, v: i32, s: i32) -> Self {
        Monomial { s, v, x }
    }

    pub const fn x(e: i32) -> Self {
        Monomial::new(e, 0, 0)
    }

    pub const fn v(e: i32) -> Self {
        Monomial::new(0, e, 0)
    }

    pub const fn s(e: i32) -> Self {
        Monomial::new(0, 0, e)
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::ONE
    }

    pub fn inverse(&self) -> Self {
        Monomial::new(-self.x, -self.v, -self.s)
    }

    pub fn pow(&self, e: i32) -> Self {
        Monomial::new(self.x * e, self.v * e, self.s * e)
    }

    pub(crate) fn exps(&self) -> [i32; 3] {
        [self.x, self.v, self.s]
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.x + rhs.x, self.v + rhs.v, self.s + rhs.s)
    }
}

impl Div for Monomial {
    type Output = Monomial;
    fn div(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.x - rhs.x, self.v - rhs.v, self.s - rhs.s)
    }
}

/// Renders as `x^a*v^b*s^c`, omitting zero exponents and `^1`. The unit
/// monomial renders as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, e) in [("x", self.x), ("v", self.v), ("s", self.s)] {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_s_then_v_then_x() {
        assert!(Monomial::s(1) > Monomial::new(5, 5, 0));
        assert!(Monomial::v(1) > Monomial::x(9));
        assert!(Monomial::new(0, -1, 2) > Monomial::new(0, 1, 1));
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::new(0, -1, 2).to_string(), "v^-1*s^2");
        assert_eq!(Monomial::new(1, -1, 0).to_string(), "x*v^-1");
        assert_eq!(Monomial::ONE.to_string(), "1");
    }
}
