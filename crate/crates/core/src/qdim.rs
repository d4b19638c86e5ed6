//! Closed-form scalars attached to Young diagrams: `α_λ`, Yokota's `m_λ`,
//! closure values, and quantum dimensions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::coeff::{qfact, qint, LaurentPoly, Monomial, RatFunc, UPoly};
use crate::error::{Error, Result};
use crate::young::YoungDiagram;

fn q(k: usize) -> LaurentPoly {
    qint(k as i64).expect("nonnegative")
}

fn qf(k: usize) -> LaurentPoly {
    qfact(k as i64).expect("nonnegative")
}

fn tri(k: usize) -> i32 {
    (k * k.saturating_sub(1) / 2) as i32
}

/// `α_λ = Π s^{content} [hook]`.
pub fn alpha(lambda: &YoungDiagram) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for c in lambda.cells() {
        let hook = lambda.hook_length(c).expect("cell of λ");
        acc = (&acc * &q(hook)).mul_monomial(Monomial::s(c.content() as i32), false);
    }
    acc
}

/// `α_{k,1} = s^{-k(k-1)/2} [k]!`, the scalar of `b_k`.
pub fn alpha_col(k: usize) -> LaurentPoly {
    qf(k).mul_monomial(Monomial::s(-tri(k)), false)
}

/// `α_{1,l} = s^{l(l-1)/2} [l]!`, the scalar of `a_l`.
pub fn alpha_row(l: usize) -> LaurentPoly {
    qf(l).mul_monomial(Monomial::s(tri(l)), false)
}

/// `Π α_{1,λ_i} · Π α_{λ^∨_j,1}`.
pub fn alpha_blocks(lambda: &YoungDiagram) -> LaurentPoly {
    let rows: LaurentPoly = lambda.rows().iter().map(|&l| alpha_row(l)).product();
    let cols: LaurentPoly = lambda.conjugate().rows().iter().map(|&k| alpha_col(k)).product();
    &rows * &cols
}

/// Yokota's scalar `m_λ` from its double product over `1 ≤ m ≤ n ≤ λ^∨_1`,
/// with `λ_{n+1} = 0` past the last row.
pub fn m_lambda(lambda: &YoungDiagram) -> RatFunc {
    let rows = lambda.rows();
    let part = |i: usize| rows.get(i - 1).copied().unwrap_or(0);
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for n in 1..=rows.len() {
        let (ln, ln1) = (part(n), part(n + 1));
        for m in 1..=n {
            let lm = part(m);
            den = &den * &q(n - m + 1).pow((ln - ln1) as u32);
            num = &num * &(&qf(lm - ln1 + n - m) * &qf(lm - ln));
            den = &den * &(&qf(lm - ln + n - m) * &qf(lm - ln1));
        }
    }
    RatFunc::new(num, den).expect("quantum factorials are nonzero")
}

/// `s^c (v^-1 s^c - v s^-c)`, the numerator of one cell's closure factor.
pub fn cell_closure_numerator(content: i64) -> LaurentPoly {
    let c = content as i32;
    LaurentPoly::from_terms([(Monomial::new(0, -1, 2 * c), 1), (Monomial::new(0, 1, 0), -1)])
}

/// The closure value `X(e_λ) = Π s^c (v^-1 s^c - v s^-c) / z`.
pub fn x_e_lambda(lambda: &YoungDiagram) -> RatFunc {
    let num: LaurentPoly = lambda.cells().map(|c| cell_closure_numerator(c.content())).product();
    RatFunc::new(num, LaurentPoly::z().pow(lambda.size() as u32)).expect("z is nonzero")
}

/// `X(Q_λ) = X(e_λ) / α_λ`, which never involves `x`.
pub fn x_q_lambda(lambda: &YoungDiagram) -> Result<RatFunc> {
    let r = x_e_lambda(lambda).div_poly(&alpha(lambda))?;
    if !r.is_x_free() {
        return Err(Error::UnexpectedX(r.to_string()));
    }
    Ok(r)
}

/// The rank parameter `N` of `sl(N)` and the substitution
/// `x = s^{-1/N}`, `v = s^{-N}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvaluationContext {
    n: u32,
}

impl EvaluationContext {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::NegativeArgument(0));
        }
        Ok(EvaluationContext { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The image of `r` in Laurent polynomials in `u = s^{1/N}`.
    pub fn evaluate(&self, r: &RatFunc) -> Result<UPoly> {
        let (num, den) = r.substitute(self.n);
        Ok(UPoly(num.as_poly().exact_div(den.as_poly())?))
    }
}

/// Quantum integers `[a]` in the numerator and denominator of the hook
/// formula after cancelling common factors and dropping `[1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookQuotient {
    pub numerator: Vec<usize>,
    pub denominator: Vec<usize>,
    pub vanishes: bool,
}

impl HookQuotient {
    pub fn new(lambda: &YoungDiagram, ctx: EvaluationContext) -> Self {
        let n = ctx.n() as i64;
        let mut num: Vec<i64> = lambda.cells().map(|c| n + c.content()).collect();
        let vanishes = num.iter().any(|&a| a <= 0);
        let mut den: Vec<i64> = lambda.cells().map(|c| lambda.hook_length(c).expect("cell") as i64).collect();
        num.sort_unstable();
        den.sort_unstable();
        let (mut i, mut j) = (0, 0);
        let (mut kn, mut kd) = (Vec::new(), Vec::new());
        while i < num.len() || j < den.len() {
            match (num.get(i), den.get(j)) {
                (Some(a), Some(b)) if a == b => {
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a < b => {
                    kn.push(*a);
                    i += 1;
                }
                (Some(a), None) => {
                    kn.push(*a);
                    i += 1;
                }
                (_, Some(b)) => {
                    kd.push(*b);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        let keep = |v: Vec<i64>| v.into_iter().filter(|&a| a != 1).map(|a| a as usize).collect();
        HookQuotient {
            numerator: keep(kn),
            denominator: keep(kd),
            vanishes,
        }
    }
}

impl std::fmt::Display for HookQuotient {
    /// `[3][5]`, `[4]/[2]`, `1` or `0`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.vanishes {
            return f.write_str("0");
        }
        let br = |v: &[usize]| v.iter().map(|a| format!("[{a}]")).collect::<String>();
        match (self.numerator.is_empty(), self.denominator.is_empty()) {
            (true, true) => f.write_str("1"),
            (false, true) => f.write_str(&br(&self.numerator)),
            (true, false) => write!(f, "1/{}", br(&self.denominator)),
            (false, false) => write!(f, "{}/{}", br(&self.numerator), br(&self.denominator)),
        }
    }
}

/// The quantum dimension `Π [N + c] / Π [hook]`, a Laurent polynomial in `s`.
pub fn qdim(lambda: &YoungDiagram, ctx: EvaluationContext) -> Result<LaurentPoly> {
    let n = ctx.n() as i64;
    if lambda.conjugate().rows().first().is_some_and(|&k| k as i64 > n) {
        return Ok(LaurentPoly::zero());
    }
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for c in lambda.cells() {
        num = &num * &qint(n + c.content())?;
        den = &den * &q(lambda.hook_length(c)?);
    }
    num.exact_div(&den)
        .map_err(|_| Error::Internal(format!("hook formula for {lambda} at N={n} is not a polynomial")))
}

/// The classical dimension `Π (N + c) / Π hook`, in exact integers.
pub fn classical_dim(lambda: &YoungDiagram, n: u32) -> Result<BigInt> {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for c in lambda.cells() {
        num *= BigInt::from(n as i64 + c.content());
        den *= BigInt::from(lambda.hook_length(c)?);
    }
    if num.is_zero() {
        return Ok(num);
    }
    let (quot, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::Internal(format!("dimension of {lambda} at N={n} is not an integer")));
    }
    Ok(quot)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    fn ctx(n: u32) -> EvaluationContext {
        EvaluationContext::new(n).unwrap()
    }

    #[test]
    fn alpha_examples() {
        assert!(alpha(&yd(&[1])).is_one());
        assert!(alpha(&YoungDiagram::empty()).is_one());
        let nu = yd(&[4, 2, 1]);
        let expect = (&(&q(6) * &q(4)) * &(&q(3) * &q(2))).mul_monomial(Monomial::s(3), false);
        assert_eq!(alpha(&nu), expect);
        for k in 0..=6 {
            assert_eq!(alpha(&YoungDiagram::column(k)), alpha_col(k));
            assert_eq!(alpha(&YoungDiagram::row(k)), alpha_row(k));
        }
    }

    #[test]
    fn block_scalars() {
        assert!(alpha_col(1).is_one() && alpha_row(1).is_one());
        assert_eq!(alpha_row(2).to_string(), "s^2 + 1");
        assert_eq!(alpha_col(2).to_string(), "1 + s^-2");
    }

    #[test]
    fn m_lambda_small() {
        assert_eq!(m_lambda(&yd(&[1])), RatFunc::one());
        // A single row: ε is a genuine idempotent, so m = α_λ / α_{1,2} = 1.
        assert_eq!(m_lambda(&yd(&[2])), RatFunc::one());
        assert_eq!(m_lambda(&yd(&[1, 1])), RatFunc::one());
        let not_m = RatFunc::new(LaurentPoly::one(), &LaurentPoly::s_pow(2) + &LaurentPoly::one()).unwrap();
        assert_ne!(m_lambda(&yd(&[2])), not_m);
    }

    #[test]
    fn m_lambda_matches_alpha_quotient() {
        for lambda in YoungDiagram::partitions_up_to(8) {
            let lhs = m_lambda(&lambda).mul_poly(&alpha_blocks(&lambda));
            assert_eq!(lhs, RatFunc::from_poly(alpha(&lambda)), "{lambda}");
        }
    }

    #[test]
    fn alpha_conjugation_symmetry() {
        for lambda in YoungDiagram::partitions_up_to(8) {
            assert_eq!(alpha(&lambda.conjugate()), alpha(&lambda).invert_s(), "{lambda}");
        }
    }

    #[test]
    fn closure_products() {
        assert_eq!(x_e_lambda(&yd(&[1])), RatFunc::delta());
        let cell = RatFunc::new(
            LaurentPoly::from_terms([(Monomial::new(0, -1, 2), 1), (Monomial::new(0, 1, 0), -1)]),
            LaurentPoly::z(),
        )
        .unwrap();
        assert_eq!(x_e_lambda(&yd(&[2])), &RatFunc::delta() * &cell);
        assert_eq!(x_q_lambda(&yd(&[1])).unwrap(), RatFunc::delta());
        let two = RatFunc::new(
            LaurentPoly::from_terms([(Monomial::new(0, -1, 1), 1), (Monomial::new(0, 1, -1), -1)]),
            &LaurentPoly::z() * &q(2),
        )
        .unwrap();
        assert_eq!(x_q_lambda(&yd(&[2])).unwrap(), &RatFunc::delta() * &two);
    }

    #[test]
    fn x_q_per_cell_form() {
        for lambda in YoungDiagram::partitions_up_to(6) {
            let mut num = LaurentPoly::one();
            let mut den = LaurentPoly::one();
            for c in lambda.cells() {
                let k = c.content() as i32;
                num = &num * &LaurentPoly::from_terms([(Monomial::new(0, -1, k), 1), (Monomial::new(0, 1, -k), -1)]);
                den = &den * &(&LaurentPoly::z() * &q(lambda.hook_length(c).unwrap()));
            }
            assert_eq!(x_q_lambda(&lambda).unwrap(), RatFunc::new(num, den).unwrap(), "{lambda}");
        }
    }

    #[test]
    fn qdim_examples() {
        for n in 1..=5 {
            assert_eq!(qdim(&yd(&[1]), ctx(n)).unwrap(), q(n as usize));
        }
        assert_eq!(qdim(&yd(&[2]), ctx(2)).unwrap(), q(3));
        assert_eq!(qdim(&yd(&[4, 2, 1]), ctx(3)).unwrap(), &q(3) * &q(5));
        assert!(qdim(&yd(&[1, 1, 1]), ctx(2)).unwrap().is_zero());
        assert_eq!(HookQuotient::new(&yd(&[4, 2, 1]), ctx(3)).to_string(), "[3][5]");
        assert_eq!(HookQuotient::new(&yd(&[1, 1, 1]), ctx(2)).to_string(), "0");
        assert_eq!(HookQuotient::new(&yd(&[1]), ctx(1)).to_string(), "1");
    }

    #[test]
    fn classical_examples() {
        assert_eq!(classical_dim(&yd(&[1]), 7).unwrap(), BigInt::from(7));
        assert_eq!(classical_dim(&yd(&[2, 1]), 3).unwrap(), BigInt::from(8));
        assert_eq!(classical_dim(&yd(&[4, 2, 1]), 3).unwrap(), BigInt::from(15));
        assert_eq!(classical_dim(&yd(&[1, 1, 1]), 2).unwrap(), BigInt::zero());
    }

    #[test]
    fn qdim_properties() {
        for lambda in YoungDiagram::partitions_up_to(6) {
            for n in 1..=5 {
                let p = qdim(&lambda, ctx(n)).unwrap();
                assert_eq!(p.invert_s(), p, "{lambda} N={n}");
                assert_eq!(p.eval_s1().unwrap(), classical_dim(&lambda, n).unwrap(), "{lambda} N={n}");
                // The v = s^-N route through X(Q_λ) agrees with the hook formula.
                let via_v = ctx(n).evaluate(&x_q_lambda(&lambda).unwrap()).unwrap();
                assert_eq!(via_v, p.substitute(n), "{lambda} N={n}");
            }
        }
    }
}
