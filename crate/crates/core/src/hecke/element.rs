use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::group::{digits, SymmetricGroup};
use super::Scalar;
use crate::braid::{BraidWord, Permutation};
use crate::coeff::{LaurentPoly, Monomial, RatFunc};
use crate::error::{Error, Result};

/// The roots of the quadratic relation, `a = -x s^-1` and `b = x s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Root {
    A,
    B,
}

impl Root {
    /// `(m, negate)` with `root = ±m`.
    pub fn monomial(self) -> (Monomial, bool) {
        match self {
            Root::A => (Monomial::new(1, 0, -1), true),
            Root::B => (Monomial::new(1, 0, 1), false),
        }
    }

    pub fn as_poly(self) -> LaurentPoly {
        let (m, neg) = self.monomial();
        LaurentPoly::term(m, if neg { -1 } else { 1 })
    }
}

/// An element of the Hecke algebra `H_n` in the positive permutation braid
/// basis `{ω_π}`.
///
/// Coefficients are stored densely, one slot per permutation.
#[derive(Clone)]
pub struct HeckeElement<S> {
    group: Arc<SymmetricGroup>,
    coeffs: Vec<S>,
}

const X2: Monomial = Monomial::new(2, 0, 0);
const X_S: Monomial = Monomial::new(1, 0, 1);
const X_SINV: Monomial = Monomial::new(1, 0, -1);
const XINV_S: Monomial = Monomial::new(-1, 0, 1);
const XINV_SINV: Monomial = Monomial::new(-1, 0, -1);
const XINV2: Monomial = Monomial::new(-2, 0, 0);

/// `c · xz = c·xs - c·xs^-1`.
fn times_xz<S: Scalar>(c: &S) -> S {
    c.mul_monomial(X_S, false).sub_ref(&c.mul_monomial(X_SINV, false))
}

/// `c · x^-1 z`.
fn times_xinv_z<S: Scalar>(c: &S) -> S {
    c.mul_monomial(XINV_S, false).sub_ref(&c.mul_monomial(XINV_SINV, false))
}

impl<S: Scalar> HeckeElement<S> {
    pub(crate) fn from_dense(group: Arc<SymmetricGroup>, coeffs: Vec<S>) -> Self {
        debug_assert_eq!(group.size(), coeffs.len());
        HeckeElement { group, coeffs }
    }

    pub fn zero(n: usize) -> Result<Self> {
        let group = SymmetricGroup::get(n)?;
        let coeffs = vec![S::zero(); group.size()];
        Ok(HeckeElement { group, coeffs })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut h = Self::zero(n)?;
        h.coeffs[0] = S::one();
        Ok(h)
    }

    /// `c · id`.
    pub fn scalar(n: usize, c: S) -> Result<Self> {
        let mut h = Self::zero(n)?;
        h.coeffs[0] = c;
        Ok(h)
    }

    /// The positive permutation braid `ω_π`.
    pub fn basis(pi: &Permutation) -> Result<Self> {
        let mut h = Self::zero(pi.degree())?;
        let r = h.group.rank(pi);
        h.coeffs[r] = S::one();
        Ok(h)
    }

    /// The generator `σ_i`, `1 ≤ i < n`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, size: n });
        }
        Self::identity(n)?.mul_generator(i)
    }

    /// `ω_π^-1`, expanded in the positive basis.
    pub fn basis_inverse(pi: &Permutation) -> Result<Self> {
        let mut h = Self::identity(pi.degree())?;
        for &l in pi.reduced_word().letters().iter().rev() {
            h = h.mul_generator_inverse(l as usize)?;
        }
        Ok(h)
    }

    /// The image of a braid word.
    pub fn from_braid(word: &BraidWord) -> Result<Self> {
        let mut h = Self::identity(word.strands())?;
        for &l in word.letters() {
            h = if l > 0 {
                h.mul_generator(l as usize)?
            } else {
                h.mul_generator_inverse(l.unsigned_abs() as usize)?
            };
        }
        Ok(h)
    }

    /// Build from `(π, c)` pairs; repeated permutations are summed.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, S)>) -> Result<Self> {
        let mut h = Self::zero(n)?;
        for (p, c) in terms {
            if p.degree() != n {
                return Err(Error::SizeMismatch(p.degree(), n));
            }
            let r = h.group.rank(&p);
            h.coeffs[r].add_assign_ref(&c);
        }
        Ok(h)
    }

    pub fn strands(&self) -> usize {
        self.group.n
    }

    pub fn coeff(&self, pi: &Permutation) -> S {
        if pi.degree() != self.strands() {
            return S::zero();
        }
        self.coeffs[self.group.rank(pi)].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(S::is_zero)
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Nonzero terms in lexicographic one-line order.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &S)> + '_ {
        self.group
            .lex_order
            .iter()
            .map(move |&r| (&self.group.perms[r as usize], &self.coeffs[r as usize]))
            .filter(|(_, c)| !c.is_zero())
    }

    pub(crate) fn dense(&self) -> &[S] {
        &self.coeffs
    }

    fn same_strands(&self, other: &Self) -> Result<()> {
        if self.strands() != other.strands() {
            return Err(Error::SizeMismatch(self.strands(), other.strands()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_strands(other)?;
        Ok(self.zip(other, S::add_ref))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_strands(other)?;
        Ok(self.zip(other, S::sub_ref))
    }

    fn zip(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect();
        HeckeElement::from_dense(self.group.clone(), coeffs)
    }

    pub fn scale(&self, c: &S) -> Self {
        let coeffs = match c.as_unit_monomial() {
            Some((m, neg)) => self.coeffs.iter().map(|a| a.mul_monomial(m, neg)).collect(),
            None => self
                .coeffs
                .iter()
                .map(|a| if a.is_zero() { S::zero() } else { a.mul_ref(c) })
                .collect(),
        };
        HeckeElement::from_dense(self.group.clone(), coeffs)
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        self.scale(&S::from_poly(p.clone()))
    }

    /// Right multiplication by `σ_i`.
    pub fn mul_generator(&self, i: usize) -> Result<Self> {
        self.check_generator(i)?;
        Ok(HeckeElement::from_dense(self.group.clone(), right_generator(&self.group, &self.coeffs, i)))
    }

    /// Right multiplication by `σ_i^-1 = x^-2 σ_i - x^-1 z`.
    pub fn mul_generator_inverse(&self, i: usize) -> Result<Self> {
        self.check_generator(i)?;
        let g = &self.group;
        let mut out = vec![S::zero(); g.size()];
        for r in 0..g.size() {
            if !g.ascent[i - 1][r] {
                continue;
            }
            let r2 = g.right[i - 1][r] as usize;
            let (lo, hi) = (&self.coeffs[r], &self.coeffs[r2]);
            if lo.is_zero() && hi.is_zero() {
                continue;
            }
            out[r] = hi.sub_ref(&times_xinv_z(lo));
            out[r2] = lo.mul_monomial(XINV2, false);
        }
        Ok(HeckeElement::from_dense(g.clone(), out))
    }

    fn check_generator(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.strands() {
            return Err(Error::IndexOutOfRange {
                index: i,
                size: self.strands(),
            });
        }
        Ok(())
    }

    /// Right multiplication by `ω_π`.
    pub fn mul_basis(&self, pi: &Permutation) -> Result<Self> {
        if pi.degree() != self.strands() {
            return Err(Error::SizeMismatch(self.strands(), pi.degree()));
        }
        let mut h = self.clone();
        for &l in pi.reduced_word().letters() {
            h = h.mul_generator(l as usize)?;
        }
        Ok(h)
    }

    /// Right multiplication by `ω_π^-1`.
    pub fn mul_basis_inverse(&self, pi: &Permutation) -> Result<Self> {
        if pi.degree() != self.strands() {
            return Err(Error::SizeMismatch(self.strands(), pi.degree()));
        }
        let mut h = self.clone();
        for &l in pi.reduced_word().letters().iter().rev() {
            h = h.mul_generator_inverse(l as usize)?;
        }
        Ok(h)
    }

    /// The product `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_strands(other)?;
        let g = &self.group;
        let n = g.n;
        let mut items: Vec<(Vec<usize>, usize)> = other
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(r, _)| (digits(r, n), r))
            .collect();
        // Group by d_2, then d_3, ... so that shared chain prefixes are
        // multiplied once.
        items.sort_by(|a, b| a.0[1..].cmp(&b.0[1..]));
        let mut acc = vec![S::zero(); g.size()];
        if !items.is_empty() {
            mul_rec(g, 2, &self.coeffs, &items, &other.coeffs, &mut acc);
        }
        Ok(HeckeElement::from_dense(g.clone(), acc))
    }

    /// Juxtaposition `self ⊗ other` on `n + m` strands.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let (n, m) = (self.strands(), other.strands());
        let mut out = Self::zero(n + m)?;
        for (r1, c1) in self.coeffs.iter().enumerate() {
            if c1.is_zero() {
                continue;
            }
            for (r2, c2) in other.coeffs.iter().enumerate() {
                if c2.is_zero() {
                    continue;
                }
                let p = self.group.perms[r1].direct_sum(&other.group.perms[r2]);
                let r = out.group.rank(&p);
                let c = c1.mul_ref(c2);
                out.coeffs[r].add_assign_ref(&c);
            }
        }
        Ok(out)
    }

    /// Place `self` on strands `offset+1 .. offset+m` of `H_n`.
    pub fn embed(&self, offset: usize, n: usize) -> Result<Self> {
        let m = self.strands();
        if offset + m > n {
            return Err(Error::EmbedRange { m, offset, n });
        }
        let mut out = Self::zero(n)?;
        for (r, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = self.group.perms[r].shifted(offset, n)?;
            let rr = out.group.rank(&p);
            out.coeffs[rr] = c.clone();
        }
        Ok(out)
    }

    /// The homomorphism `ω_π ↦ root^{l(π)}`.
    pub fn phi(&self, root: Root) -> S {
        let (m, neg) = root.monomial();
        let mut acc = S::zero();
        for (r, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let l = self.group.lengths[r] as i32;
            acc.add_assign_ref(&c.mul_monomial(m.pow(l), neg && l % 2 == 1));
        }
        acc
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> HeckeElement<T> {
        HeckeElement::from_dense(self.group.clone(), self.coeffs.iter().map(f).collect())
    }

    pub fn to_ratfunc(&self) -> HeckeElement<RatFunc> {
        self.map(S::to_ratfunc)
    }
}

fn right_generator<S: Scalar>(g: &SymmetricGroup, w: &[S], i: usize) -> Vec<S> {
    let mut out = vec![S::zero(); g.size()];
    let (asc, right) = (&g.ascent[i - 1], &g.right[i - 1]);
    for r in 0..g.size() {
        if !asc[r] {
            continue;
        }
        let r2 = right[r] as usize;
        let (lo, hi) = (&w[r], &w[r2]);
        if hi.is_zero() {
            out[r2] = lo.clone();
        } else {
            out[r] = hi.mul_monomial(X2, false);
            out[r2] = lo.add_ref(&times_xz(hi));
        }
    }
    out
}

fn mul_rec<S: Scalar>(
    g: &SymmetricGroup,
    level: usize,
    w: &[S],
    items: &[(Vec<usize>, usize)],
    y: &[S],
    acc: &mut [S],
) {
    if level > g.n {
        let c = &y[items[0].1];
        match c.as_unit_monomial() {
            Some((m, neg)) => {
                for (a, t) in acc.iter_mut().zip(w) {
                    if !t.is_zero() {
                        a.add_assign_ref(&t.mul_monomial(m, neg));
                    }
                }
            }
            None => {
                for (a, t) in acc.iter_mut().zip(w) {
                    if !t.is_zero() {
                        a.add_assign_ref(&t.mul_ref(c));
                    }
                }
            }
        }
        return;
    }
    let mut cur: Option<Vec<S>> = None;
    let mut cur_d = 0;
    let mut start = 0;
    while start < items.len() {
        let d = items[start].0[level - 1];
        let end = start + items[start..].iter().take_while(|it| it.0[level - 1] == d).count();
        while cur_d < d {
            let src = cur.as_deref().unwrap_or(w);
            cur = Some(right_generator(g, src, level - 1 - cur_d));
            cur_d += 1;
        }
        mul_rec(g, level + 1, cur.as_deref().unwrap_or(w), &items[start..end], y, acc);
        start = end;
    }
}

impl<S: Scalar> PartialEq for HeckeElement<S> {
    fn eq(&self, other: &Self) -> bool {
        self.strands() == other.strands() && self.coeffs == other.coeffs
    }
}

impl<S: Scalar> fmt::Display for HeckeElement<S> {
    /// `(c)*[1 2 3] + ...` in one-line order; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})*{p}")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for HeckeElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElement<H_{}>({self})", self.strands())
    }
}

macro_rules! panicking_op {
    ($tr:ident, $m:ident, $call:ident) => {
        /// Panics when the strand counts differ.
        impl<'a, S: Scalar> $tr<&'a HeckeElement<S>> for &'a HeckeElement<S> {
            type Output = HeckeElement<S>;
            fn $m(self, rhs: &HeckeElement<S>) -> HeckeElement<S> {
                self.$call(rhs).expect("strand counts differ")
            }
        }
    };
}

panicking_op!(Add, add, try_add);
panicking_op!(Sub, sub, try_sub);
panicking_op!(Mul, mul, mul);

impl<S: Scalar> Neg for &HeckeElement<S> {
    type Output = HeckeElement<S>;
    fn neg(self) -> HeckeElement<S> {
        self.map(|c| S::zero().sub_ref(c))
    }
}
