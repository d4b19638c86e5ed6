//! Size guards for the brute-force parts of the library.
//!
//! Direct sums over `S_n` and the Young-diagram idempotents grow like `n!`,
//! so every such entry point checks its input against a [`Guard`] and fails
//! with [`Error::GuardExceeded`] instead of running for hours.

use crate::error::{Error, Result};

/// Largest strand count for which symmetric-group tables are ever built.
pub const HARD_MAX_STRANDS: usize = 9;

/// Per-operation size limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    /// Strand count for generic Hecke elements (braid words, closures).
    pub strands: usize,
    /// `n` for the direct sums `a_n`, `b_n`.
    pub direct_sum: usize,
    /// Cells of `λ` for `E_λ`, `e_λ` and Yokota's `ε_λ`.
    pub idempotent: usize,
    /// `n` for the brute-force scan of `S_n` in separability checks.
    pub separability: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            strands: 7,
            direct_sum: 7,
            idempotent: 6,
            separability: 8,
        }
    }
}

impl Guard {
    /// Widens every limit to at least `max`, capped at [`HARD_MAX_STRANDS`]
    /// for the limits that build symmetric-group tables. Never narrows.
    pub fn widened(self, max: usize) -> Guard {
        let tables = max.min(HARD_MAX_STRANDS);
        Guard {
            strands: self.strands.max(tables),
            direct_sum: self.direct_sum.max(tables),
            idempotent: self.idempotent.max(tables),
            separability: self.separability.max(max.min(10)),
        }
    }

    pub(crate) fn check(limit: usize, what: &'static str, size: usize) -> Result<()> {
        if size > limit {
            return Err(Error::GuardExceeded { what, size, limit });
        }
        Ok(())
    }

    pub fn check_strands(&self, n: usize) -> Result<()> {
        Self::check(self.strands.min(HARD_MAX_STRANDS), "Hecke element", n)
    }

    pub fn check_direct_sum(&self, n: usize) -> Result<()> {
        Self::check(self.direct_sum.min(HARD_MAX_STRANDS), "direct sum over S_n", n)
    }

    pub fn check_idempotent(&self, cells: usize) -> Result<()> {
        Self::check(self.idempotent.min(HARD_MAX_STRANDS), "Young idempotent", cells)
    }

    pub fn check_separability(&self, n: usize) -> Result<()> {
        Self::check(self.separability.min(10), "separability scan", n)
    }
}
