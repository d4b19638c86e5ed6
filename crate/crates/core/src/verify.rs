//! Brute-force checks of the closed formulas against direct Hecke
//! computation, grouped into named suites.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::coeff::RatFunc;
use crate::error::{Error, Result};
use crate::guard::Guard;
use crate::hecke;
use crate::qdim::{alpha, alpha_blocks, alpha_col, alpha_row, cell_closure_numerator, m_lambda, x_e_lambda};
use crate::young::{is_inseparable, separates, separating_permutations, YoungDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Idempotency,
    Orthogonality,
    Closure,
    Exclose,
    Nero,
    Split,
    Splitplus,
    Marel,
    Separability,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Idempotency,
        Check::Orthogonality,
        Check::Closure,
        Check::Exclose,
        Check::Nero,
        Check::Split,
        Check::Splitplus,
        Check::Marel,
        Check::Separability,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Idempotency => "idempotency",
            Check::Orthogonality => "orthogonality",
            Check::Closure => "closure",
            Check::Exclose => "exclose",
            Check::Nero => "nero",
            Check::Split => "split",
            Check::Splitplus => "splitplus",
            Check::Marel => "marel",
            Check::Separability => "separability",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Internal(format!("unknown check `{s}`")))
    }
}

/// Outcome of one suite: how many cases ran and which failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub check: Check,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} cases", self.check, self.cases)?;
        if !self.passed() {
            write!(f, "; failed: {}", self.failures.join(", "))?;
        }
        f.write_str(")")
    }
}

/// Evaluate `case` on every item in parallel; results keep input order.
fn run_cases<T: Sync>(
    check: Check,
    items: &[T],
    label: impl Fn(&T) -> String + Sync,
    case: impl Fn(&T) -> Result<bool> + Sync,
) -> Result<Report> {
    let outcomes: Vec<Result<bool>> = items.par_iter().map(&case).collect();
    let mut failures = Vec::new();
    for (item, outcome) in items.iter().zip(outcomes) {
        if !outcome? {
            failures.push(label(item));
        }
    }
    Ok(Report {
        check,
        cases: items.len(),
        failures,
    })
}

fn same_size_pairs(max_cells: usize) -> Vec<(YoungDiagram, YoungDiagram)> {
    let mut pairs = Vec::new();
    for n in 1..=max_cells {
        let parts = YoungDiagram::partitions(n);
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                pairs.push((parts[i].clone(), parts[j].clone()));
            }
        }
    }
    pairs
}

/// `e_λ^2 = α_λ e_λ`.
pub fn idempotency(lambda: &YoungDiagram, guard: &Guard) -> Result<bool> {
    let e = hecke::e_lambda(lambda, guard)?;
    Ok(e.mul(&e)? == e.scale(&alpha(lambda)))
}

/// `e_λ e_μ = 0 = e_μ e_λ`.
pub fn orthogonality(lambda: &YoungDiagram, mu: &YoungDiagram, guard: &Guard) -> Result<bool> {
    let a = hecke::e_lambda(lambda, guard)?;
    let b = hecke::e_lambda(mu, guard)?;
    Ok(a.mul(&b)?.is_zero() && b.mul(&a)?.is_zero())
}

/// The closure of `e_λ` equals the per-cell product.
pub fn closure(lambda: &YoungDiagram, guard: &Guard) -> Result<bool> {
    let e = hecke::e_lambda(lambda, guard)?;
    Ok(hecke::closure_eval(&e)? == x_e_lambda(lambda))
}

/// Closing the last strand of `e_λ` gives `s^c (v^-1 s^c - v s^-c)/z · e_μ`
/// where `μ` is `λ` without its last cell.
pub fn exclose(lambda: &YoungDiagram, guard: &Guard) -> Result<bool> {
    let cell = lambda
        .last_cell()
        .ok_or_else(|| Error::InvalidPartition("empty diagram has no last cell".into()))?;
    let mu = lambda.remove_cell(cell)?;
    let e = hecke::e_lambda(lambda, guard)?;
    let lhs = hecke::scaled_partial_closure(&e)?;
    let rhs = hecke::e_lambda(&mu, guard)?.scale(&cell_closure_numerator(cell.content()));
    Ok(lhs == rhs)
}

/// `a_n^2 = α_{1,n} a_n` and `b_n^2 = α_{n,1} b_n`.
pub fn nero(n: usize, guard: &Guard) -> Result<bool> {
    let a = hecke::a_n(n, guard)?;
    let b = hecke::b_n(n, guard)?;
    Ok(a.mul(&a)? == a.scale(&alpha_row(n)) && b.mul(&b)? == b.scale(&alpha_col(n)))
}

/// The peeled recursion reproduces the direct sums.
pub fn split(n: usize, guard: &Guard) -> Result<bool> {
    Ok(hecke::a_n_recursive(n, guard)? == hecke::a_n(n, guard)?
        && hecke::b_n_recursive(n, guard)? == hecke::b_n(n, guard)?)
}

/// `a_l` and `b_l` from one copy of the previous block plus a correction.
pub fn splitplus(l: usize, guard: &Guard) -> Result<bool> {
    Ok(hecke::splitplus_a(l, guard)? == hecke::a_n(l, guard)?.to_ratfunc()
        && hecke::splitplus_b(l, guard)? == hecke::b_n(l, guard)?.to_ratfunc())
}

/// `m_λ · Π α_{1,λ_i} · Π α_{λ^∨_j,1} = α_λ`.
pub fn marel(lambda: &YoungDiagram) -> bool {
    m_lambda(lambda).mul_poly(&alpha_blocks(lambda)) == RatFunc::from_poly(alpha(lambda))
}

/// `π_λ` separates `λ` from `λ^∨`, and the separating permutations are
/// exactly `R(λ) π_λ R(λ^∨)`.
pub fn separability(lambda: &YoungDiagram, guard: &Guard) -> Result<bool> {
    let conj = lambda.conjugate();
    let pi = lambda.pi_lambda();
    if !separates(&pi, lambda, &conj)? {
        return Ok(false);
    }
    let found: BTreeSet<_> = separating_permutations(lambda, &conj, guard)?.into_iter().collect();
    let right = conj.row_group();
    let mut coset = BTreeSet::new();
    for rho in lambda.row_group() {
        let left = rho.compose(&pi)?;
        for sigma in &right {
            coset.insert(left.compose(sigma)?);
        }
    }
    Ok(found == coset)
}

/// Run one suite on everything with at most `max_cells` cells or strands.
pub fn run(check: Check, max_cells: usize, guard: &Guard) -> Result<Report> {
    let parts = YoungDiagram::partitions_up_to(max_cells);
    let label = |l: &YoungDiagram| format!("({l})");
    match check {
        Check::Idempotency => run_cases(check, &parts, label, |l| idempotency(l, guard)),
        Check::Orthogonality => run_cases(
            check,
            &same_size_pairs(max_cells),
            |(a, b)| format!("({a})x({b})"),
            |(a, b)| orthogonality(a, b, guard),
        ),
        Check::Closure => run_cases(check, &parts, label, |l| closure(l, guard)),
        Check::Exclose => run_cases(check, &parts, label, |l| exclose(l, guard)),
        Check::Nero => {
            let ns: Vec<usize> = (1..=max_cells).collect();
            run_cases(check, &ns, |n| format!("n={n}"), |&n| nero(n, guard))
        }
        Check::Split => {
            let ns: Vec<usize> = (1..=max_cells).collect();
            run_cases(check, &ns, |n| format!("n={n}"), |&n| split(n, guard))
        }
        Check::Splitplus => {
            let ns: Vec<usize> = (2..=max_cells).collect();
            run_cases(check, &ns, |n| format!("l={n}"), |&n| splitplus(n, guard))
        }
        Check::Marel => run_cases(check, &parts, label, |l| Ok(marel(l))),
        Check::Separability => {
            let mut report = run_cases(check, &parts, label, |l| separability(l, guard))?;
            let two = YoungDiagram::row(2);
            report.cases += 1;
            if !is_inseparable(&two, &two, guard)? {
                report.failures.push("(2) vs (2)".into());
            }
            Ok(report)
        }
    }
}

/// Run several suites in order.
pub fn run_all(checks: &[Check], max_cells: usize, guard: &Guard) -> Result<Vec<Report>> {
    checks.iter().map(|&c| run(c, max_cells, guard)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("bogus".parse::<Check>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let g = Guard::default();
        for c in Check::ALL {
            let r = run(c, 3, &g).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
