//! Row and column quasi-idempotents and the elements built from them.

use super::element::{HeckeElement, Root};
use super::group::SymmetricGroup;
use crate::coeff::{qint, LaurentPoly, Monomial, RatFunc};
use crate::error::{Error, Result};
use crate::guard::Guard;
use crate::qdim::{alpha_col, alpha_row};
use crate::young::YoungDiagram;

type H = HeckeElement<LaurentPoly>;

fn direct_sum(n: usize, root: Root, guard: &Guard) -> Result<H> {
    guard.check_direct_sum(n)?;
    let g = SymmetricGroup::get(n)?;
    let coeffs = g
        .lengths
        .iter()
        .map(|&l| {
            let l = l as i32;
            match root {
                Root::A => LaurentPoly::monomial(Monomial::new(-l, 0, l)),
                Root::B => LaurentPoly::term(Monomial::new(-l, 0, -l), if l % 2 == 0 { 1 } else { -1 }),
            }
        })
        .collect();
    Ok(HeckeElement::from_dense(g, coeffs))
}

/// `a_n = Σ_π (x^-1 s)^{l(π)} ω_π`.
pub fn a_n(n: usize, guard: &Guard) -> Result<H> {
    direct_sum(n, Root::A, guard)
}

/// `b_n = Σ_π (-x^-1 s^-1)^{l(π)} ω_π`.
pub fn b_n(n: usize, guard: &Guard) -> Result<H> {
    direct_sum(n, Root::B, guard)
}

fn recursive(n: usize, weight: Monomial, negate: bool, guard: &Guard) -> Result<H> {
    guard.check_strands(n)?;
    let mut prev = H::identity(1)?;
    if n == 0 {
        return H::identity(0);
    }
    for m in 2..=n {
        let mut w = prev.embed(0, m)?;
        let mut acc = w.clone();
        for i in 0..m - 1 {
            w = w.mul_generator(m - 1 - i)?;
            let k = (i + 1) as i32;
            acc = &acc + &w.scale(&LaurentPoly::term(weight.pow(k), if negate && k % 2 == 1 { -1 } else { 1 }));
        }
        prev = acc;
    }
    Ok(prev)
}

/// `a_n` rebuilt from `a_{n-1}` by peeling the last strand.
pub fn a_n_recursive(n: usize, guard: &Guard) -> Result<H> {
    recursive(n, Monomial::new(-1, 0, 1), false, guard)
}

/// `b_n` rebuilt from `b_{n-1}` by peeling the last strand.
pub fn b_n_recursive(n: usize, guard: &Guard) -> Result<H> {
    recursive(n, Monomial::new(-1, 0, -1), true, guard)
}

/// `a_{λ_1} ⊗ a_{λ_2} ⊗ ...` (root `A`) or the same with `b` blocks.
#[allow(non_snake_case)]
pub fn E_lambda(lambda: &YoungDiagram, root: Root, guard: &Guard) -> Result<H> {
    guard.check_strands(lambda.size())?;
    let mut acc = H::identity(0)?;
    for &r in lambda.rows() {
        acc = acc.tensor(&direct_sum(r, root, guard)?)?;
    }
    Ok(acc)
}

/// `e_λ = E_λ(a) ω_{π_λ} E_{λ^∨}(b) ω_{π_λ}^-1`.
pub fn e_lambda(lambda: &YoungDiagram, guard: &Guard) -> Result<H> {
    guard.check_idempotent(lambda.size())?;
    let pi = lambda.pi_lambda();
    let ea = E_lambda(lambda, Root::A, guard)?;
    let eb = E_lambda(&lambda.conjugate(), Root::B, guard)?;
    ea.mul_basis(&pi)?.mul(&eb)?.mul_basis_inverse(&pi)
}

/// Column factor conjugated into row position: `ω_{π_λ} E_{λ^∨}(b) ω_{π_λ}^-1`.
fn column_block(lambda: &YoungDiagram, guard: &Guard) -> Result<H> {
    let pi = lambda.pi_lambda();
    let eb = E_lambda(&lambda.conjugate(), Root::B, guard)?;
    H::basis(&pi)?.mul(&eb)?.mul_basis_inverse(&pi)
}

/// Yokota's `ε_λ`: the row factor sandwiched between two column factors,
/// divided by `Π α_{1,λ_i} (Π α_{λ^∨_j,1})^2`.
pub fn yokota_epsilon(lambda: &YoungDiagram, guard: &Guard) -> Result<HeckeElement<RatFunc>> {
    guard.check_idempotent(lambda.size())?;
    let c = column_block(lambda, guard)?;
    let a = E_lambda(lambda, Root::A, guard)?;
    let body = c.mul(&a)?.mul(&c)?;
    let k = yokota_denominator(lambda);
    Ok(body.map(|p| RatFunc::new(p.clone(), k.clone()).expect("nonzero")))
}

/// `Π α_{1,λ_i} (Π α_{λ^∨_j,1})^2`.
pub fn yokota_denominator(lambda: &YoungDiagram) -> LaurentPoly {
    let rows: LaurentPoly = lambda.rows().iter().map(|&l| alpha_row(l)).product();
    let cols: LaurentPoly = lambda.conjugate().rows().iter().map(|&k| alpha_col(k)).product();
    &rows * &cols.pow(2)
}

/// `T σ_{m-1} T` for `T = h ⊗ 1` on `m = h.strands() + 1` strands.
fn sandwich(h: &H) -> Result<H> {
    let m = h.strands() + 1;
    let t = h.embed(0, m)?;
    t.mul_generator(m - 1)?.mul(&t)
}

/// `a_{l-1} ⊗ 1 + x^-1 s^{l-1} [l-1] / α_{1,l-1} · (a_{l-1}⊗1) σ_{l-1} (a_{l-1}⊗1)`.
pub fn splitplus_a(l: usize, guard: &Guard) -> Result<HeckeElement<RatFunc>> {
    if l < 2 {
        return Err(Error::IndexOutOfRange { index: l, size: 2 });
    }
    let prev = a_n(l - 1, guard)?;
    let k = l as i32 - 1;
    let coeff = RatFunc::new(
        qint(k as i64)?.mul_monomial(Monomial::new(-1, 0, k), false),
        alpha_row(l - 1),
    )?;
    let corr = sandwich(&prev)?.to_ratfunc().scale(&coeff);
    Ok(&prev.embed(0, l)?.to_ratfunc() + &corr)
}

/// `b_{k-1} ⊗ 1 - x^-1 s^{-(k-1)} [k-1] / α_{k-1,1} · (b_{k-1}⊗1) σ_{k-1} (b_{k-1}⊗1)`.
pub fn splitplus_b(k: usize, guard: &Guard) -> Result<HeckeElement<RatFunc>> {
    if k < 2 {
        return Err(Error::IndexOutOfRange { index: k, size: 2 });
    }
    let prev = b_n(k - 1, guard)?;
    let j = k as i32 - 1;
    let coeff = RatFunc::new(
        qint(j as i64)?.mul_monomial(Monomial::new(-1, 0, -j), false),
        alpha_col(k - 1),
    )?;
    let corr = sandwich(&prev)?.to_ratfunc().scale(&coeff);
    Ok(&prev.embed(0, k)?.to_ratfunc() - &corr)
}
