//! Markov partial closure and the framed Homfly polynomial of closures.

use super::element::HeckeElement;
use super::group::SymmetricGroup;
use super::Scalar;
use crate::braid::BraidWord;
use crate::coeff::{LaurentPoly, Monomial, RatFunc};
use crate::error::{Error, Result};
use crate::guard::Guard;

const V_INV: Monomial = Monomial::v(-1);
const V: Monomial = Monomial::v(1);
const XVINV_S: Monomial = Monomial::new(1, -1, 1);
const XVINV_SINV: Monomial = Monomial::new(1, -1, -1);

/// `z · ε_n(h)`: closes the last strand and multiplies by `z`, which keeps
/// coefficients in `Λ`. A basis element with `π(n) = n` goes to
/// `(v^-1 - v) ω_{π'}`, any other to `x v^-1 z ω_{π'} σ_{n-2} ... σ_j`.
pub fn scaled_partial_closure<S: Scalar>(h: &HeckeElement<S>) -> Result<HeckeElement<S>> {
    let n = h.strands();
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, size: 0 });
    }
    let small = SymmetricGroup::get(n - 1)?;
    let block = small.size();
    // parts[d] collects the terms whose last peel digit is d.
    let mut parts: Vec<Vec<S>> = (0..n).map(|_| vec![S::zero(); block]).collect();
    let mut used = vec![false; n];
    for (r, c) in h.dense().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (d, rest) = (r / block, r % block);
        parts[d][rest] = c.clone();
        used[d] = true;
    }
    let mut out = HeckeElement::<S>::zero(n - 1)?;
    for (d, coeffs) in parts.into_iter().enumerate() {
        if !used[d] {
            continue;
        }
        let mut e = HeckeElement::from_dense(small.clone(), coeffs);
        let term = if d == 0 {
            e.map(|c| c.mul_monomial(V_INV, false).sub_ref(&c.mul_monomial(V, false)))
        } else {
            for k in 1..d {
                e = e.mul_generator(n - 1 - k)?;
            }
            e.map(|c| c.mul_monomial(XVINV_S, false).sub_ref(&c.mul_monomial(XVINV_SINV, false)))
        };
        out = &out + &term;
    }
    Ok(out)
}

/// The Markov partial closure `ε_n : H_n → H_{n-1}`.
pub fn partial_closure<S: Scalar>(h: &HeckeElement<S>) -> Result<HeckeElement<RatFunc>> {
    let z = LaurentPoly::z();
    Ok(scaled_partial_closure(h)?.map(|c| c.to_ratfunc().div_poly(&z).expect("z is nonzero")))
}

/// The framed Homfly polynomial of the closure of `h`.
pub fn closure_eval<S: Scalar>(h: &HeckeElement<S>) -> Result<RatFunc> {
    let n = h.strands();
    let mut cur = h.clone();
    while cur.strands() > 0 {
        cur = scaled_partial_closure(&cur)?;
    }
    cur.dense()[0].to_ratfunc().div_poly(&LaurentPoly::z().pow(n as u32))
}

/// The framed Homfly polynomial of the closure of a braid word.
pub fn homfly_of_braid(word: &BraidWord, guard: &Guard) -> Result<RatFunc> {
    guard.check_strands(word.strands())?;
    closure_eval(&HeckeElement::<LaurentPoly>::from_braid(word)?)
}

/// `X / ((x v^-1)^w δ)`: the Homfly polynomial with the unknot at 1.
pub fn normalized_homfly(word: &BraidWord, guard: &Guard) -> Result<RatFunc> {
    let w = word.writhe() as i32;
    let framed = homfly_of_braid(word, guard)?;
    let scaled = framed.mul_monomial(Monomial::new(-w, w, 0), false);
    let r = scaled
        .mul_poly(&LaurentPoly::z())
        .div_poly(&LaurentPoly::from_terms([(V_INV, 1), (V, -1)]))?;
    if !r.is_x_free() {
        return Err(Error::UnexpectedX(r.to_string()));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::Permutation;
    use proptest::prelude::*;

    type H = HeckeElement<LaurentPoly>;

    fn xv(a: i32, b: i32) -> RatFunc {
        RatFunc::from_poly(LaurentPoly::monomial(Monomial::new(a, b, 0)))
    }

    #[test]
    fn two_strand_examples() {
        let delta = RatFunc::delta();
        let id = H::identity(2).unwrap();
        assert_eq!(partial_closure(&id).unwrap(), HeckeElement::scalar(1, delta.clone()).unwrap());
        let s = H::generator(2, 1).unwrap();
        assert_eq!(partial_closure(&s).unwrap(), HeckeElement::scalar(1, xv(1, -1)).unwrap());
        let si = H::identity(2).unwrap().mul_generator_inverse(1).unwrap();
        assert_eq!(partial_closure(&si).unwrap(), HeckeElement::scalar(1, xv(-1, 1)).unwrap());
    }

    #[test]
    fn closure_examples() {
        let delta = RatFunc::delta();
        assert_eq!(closure_eval(&H::identity(0).unwrap()).unwrap(), RatFunc::one());
        assert_eq!(closure_eval(&H::identity(1).unwrap()).unwrap(), delta);
        assert_eq!(closure_eval(&H::generator(2, 1).unwrap()).unwrap(), &xv(1, -1) * &delta);
        let s = H::generator(2, 1).unwrap();
        let t = &(&s * &s) * &s;
        // δ x^3 (v^-1 z^2 + 2 v^-1 - v)
        let z2 = LaurentPoly::z().pow(2);
        let inner = &(&z2.mul_monomial(V_INV, false) + &LaurentPoly::term(V_INV, 2)) - &LaurentPoly::monomial(V);
        let expect = &delta * &RatFunc::from_poly(inner.mul_monomial(Monomial::x(3), false));
        assert_eq!(closure_eval(&t).unwrap(), expect);
    }

    #[test]
    fn normalized_examples() {
        let g = Guard::default();
        let unknot = BraidWord::parse(1, "").unwrap();
        assert_eq!(normalized_homfly(&unknot, &g).unwrap(), RatFunc::one());
        let unlink = BraidWord::parse(2, "1 -1").unwrap();
        assert_eq!(normalized_homfly(&unlink, &g).unwrap(), RatFunc::delta());
        assert_eq!(homfly_of_braid(&unlink, &g).unwrap(), &RatFunc::delta() * &RatFunc::delta());
        let trefoil = BraidWord::parse(2, "1 1 1").unwrap();
        assert_eq!(normalized_homfly(&trefoil, &g).unwrap().to_string(), "v^2*s^2 - v^4 + v^2*s^-2");
        let mirror = BraidWord::parse(2, "-1 -1 -1").unwrap();
        assert_eq!(normalized_homfly(&mirror, &g).unwrap().to_string(), "v^-2*s^2 - v^-4 + v^-2*s^-2");
    }

    #[test]
    fn markov_moves() {
        // Stabilisation: closing β σ_n^{±1} multiplies the framed value by (x v^-1)^{±1}.
        let g = Guard::default();
        let base = BraidWord::parse(3, "1 -2 1 1").unwrap();
        let plus = BraidWord::parse(4, "1 -2 1 1 3").unwrap();
        let minus = BraidWord::parse(4, "1 -2 1 1 -3").unwrap();
        let b = homfly_of_braid(&base, &g).unwrap();
        assert_eq!(homfly_of_braid(&plus, &g).unwrap(), &b * &xv(1, -1));
        assert_eq!(homfly_of_braid(&minus, &g).unwrap(), &b * &xv(-1, 1));
    }

    fn small_element(n: usize) -> impl Strategy<Value = H> {
        prop::collection::vec((0usize..720, -2i32..=2, -1i32..=1, -2i64..=2), 1..4).prop_map(move |ts| {
            let perms: Vec<Permutation> = Permutation::all(n).collect();
            let len = perms.len();
            H::from_terms(
                n,
                ts.into_iter()
                    .map(|(r, a, b, c)| (perms[r % len].clone(), LaurentPoly::term(Monomial::new(a, b, 0), c))),
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn conditional_expectation(a in small_element(3), h in small_element(4), b in small_element(3)) {
            let lhs = partial_closure(&(&(&a.embed(0, 4).unwrap() * &h) * &b.embed(0, 4).unwrap())).unwrap();
            let mid = partial_closure(&h).unwrap();
            let rhs = &(&a.to_ratfunc() * &mid) * &b.to_ratfunc();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn trace_property(a in small_element(3), b in small_element(3)) {
            prop_assert_eq!(closure_eval(&(&a * &b)).unwrap(), closure_eval(&(&b * &a)).unwrap());
        }
    }
}
