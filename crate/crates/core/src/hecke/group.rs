//! Cached tables for `S_n`, indexed by a mixed-radix rank.
//!
//! Peeling the last strand repeatedly writes every `π ∈ S_n` uniquely as
//! `ω_π = c_2 c_3 ... c_n` with `c_m = σ_{m-1} σ_{m-2} ... σ_{m-d_m}` and
//! `0 ≤ d_m < m`. The rank of `π` is `Σ d_m (m-1)!`, so the identity has
//! rank 0, `l(π) = Σ d_m`, and `rank mod (n-1)!` is the rank of the peeled
//! permutation in `S_{n-1}`.

use std::sync::{Arc, OnceLock};

use crate::braid::Permutation;
use crate::error::{Error, Result};
use crate::guard::HARD_MAX_STRANDS;

pub(crate) struct SymmetricGroup {
    pub n: usize,
    pub perms: Vec<Permutation>,
    pub lengths: Vec<u16>,
    /// `right[i-1][r]` is the rank of `π_r s_i`.
    pub right: Vec<Vec<u32>>,
    /// `ascent[i-1][r]` iff `l(π_r s_i) > l(π_r)`.
    pub ascent: Vec<Vec<bool>>,
    /// Ranks in lexicographic one-line order.
    pub lex_order: Vec<u32>,
}

pub(crate) fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Digits `d_1..d_n` (index 0 holds `d_1`) of a rank.
pub(crate) fn digits(rank: usize, n: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(n);
    let mut r = rank;
    for m in 1..=n {
        out.push(r % m);
        r /= m;
    }
    out
}

pub(crate) fn rank_of(p: &Permutation) -> usize {
    let mut rank = 0;
    let mut cur = p.clone();
    while cur.degree() > 0 {
        let m = cur.degree();
        let (rest, j) = cur.peel_last_strand();
        rank += (m - j) * factorial(m - 1);
        cur = rest;
    }
    rank
}

fn build(n: usize) -> SymmetricGroup {
    let size = factorial(n);
    let mut perms = Vec::with_capacity(size);
    let mut lengths = Vec::with_capacity(size);
    for r in 0..size {
        let d = digits(r, n);
        let mut p = Permutation::identity(0);
        for m in 1..=n {
            let j = m - d[m - 1];
            p = p
                .extend(m)
                .expect("grows by one")
                .compose(&Permutation::cycle(m, j).expect("j in 1..=m"))
                .expect("same degree");
        }
        lengths.push(d.iter().sum::<usize>() as u16);
        perms.push(p);
    }
    let mut right = Vec::with_capacity(n.saturating_sub(1));
    let mut ascent = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let s = Permutation::transposition(n, i).expect("i < n");
        let (mut row, mut asc) = (Vec::with_capacity(size), Vec::with_capacity(size));
        for r in 0..size {
            let q = perms[r].compose(&s).expect("same degree");
            let rq = rank_of(&q);
            asc.push(lengths[rq] > lengths[r]);
            row.push(rq as u32);
        }
        right.push(row);
        ascent.push(asc);
    }
    let mut lex_order: Vec<u32> = (0..size as u32).collect();
    lex_order.sort_by(|&a, &b| perms[a as usize].cmp(&perms[b as usize]));
    SymmetricGroup {
        n,
        perms,
        lengths,
        right,
        ascent,
        lex_order,
    }
}

static TABLES: [OnceLock<Arc<SymmetricGroup>>; HARD_MAX_STRANDS + 1] =
    [const { OnceLock::new() }; HARD_MAX_STRANDS + 1];

impl SymmetricGroup {
    pub fn get(n: usize) -> Result<Arc<SymmetricGroup>> {
        let cell = TABLES.get(n).ok_or(Error::GuardExceeded {
            what: "symmetric group table",
            size: n,
            limit: HARD_MAX_STRANDS,
        })?;
        Ok(cell.get_or_init(|| Arc::new(build(n))).clone())
    }

    pub fn size(&self) -> usize {
        self.perms.len()
    }

    pub fn rank(&self, p: &Permutation) -> usize {
        debug_assert_eq!(p.degree(), self.n);
        rank_of(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_round_trip() {
        for n in 0..=5 {
            let g = SymmetricGroup::get(n).unwrap();
            assert_eq!(g.size(), factorial(n));
            for (r, p) in g.perms.iter().enumerate() {
                assert_eq!(rank_of(p), r);
                assert_eq!(g.lengths[r] as usize, p.length());
            }
            assert!(g.perms[0].is_identity());
        }
    }

    #[test]
    fn ascents_match_inversions() {
        let g = SymmetricGroup::get(4).unwrap();
        for i in 1..4 {
            for r in 0..g.size() {
                let p = &g.perms[r];
                // l(π s_i) > l(π) iff value i appears before value i+1.
                let imgs = p.images();
                let pos = |v: usize| imgs.iter().position(|&x| x == v).unwrap();
                assert_eq!(g.ascent[i - 1][r], pos(i) < pos(i + 1));
            }
        }
    }

    #[test]
    fn too_large() {
        assert!(SymmetricGroup::get(HARD_MAX_STRANDS + 1).is_err());
    }
}
