//! Young diagrams: cells, contents, hooks, conjugation, extreme cells, the
//! row-major tableau `T(λ)`, the permutation `π_λ`, row groups and
//! separability.
//!
//! Cells are 1-indexed `(row, col)`.

use std::fmt;
use std::str::FromStr;

use crate::braid::Permutation;
use crate::error::{Error, Result};
use crate::guard::Guard;

/// A cell `(row, col)` of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// `j - i`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    pub fn transpose(&self) -> Cell {
        Cell::new(self.col, self.row)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A partition drawn as left-justified rows of weakly decreasing length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.iter().any(|&r| r == 0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{rows:?}")));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn empty() -> Self {
        YoungDiagram { rows: Vec::new() }
    }

    /// A single row of `n` cells.
    pub fn row(n: usize) -> Self {
        YoungDiagram {
            rows: if n == 0 { vec![] } else { vec![n] },
        }
    }

    /// A single column of `n` cells.
    pub fn column(n: usize) -> Self {
        YoungDiagram { rows: vec![1; n] }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// `λ_i` (1-based); zero past the last row.
    pub fn row_len(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.rows.get(i - 1).copied().unwrap_or(0)
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.rows.first().copied().unwrap_or(0);
        YoungDiagram {
            rows: (1..=width)
                .map(|j| self.rows.iter().filter(|&&r| r >= j).count())
                .collect(),
        }
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.row_len(c.row)
    }

    fn check(&self, c: Cell) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::CellOutside {
                row: c.row,
                col: c.col,
            })
        }
    }

    /// Cells in row-major order, i.e. in the order of `T(λ)`.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (1..=r).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn content(&self, c: Cell) -> Result<i64> {
        self.check(c)?;
        Ok(c.content())
    }

    /// `λ_i - j + λ^∨_j - i + 1`.
    pub fn hook_length(&self, c: Cell) -> Result<usize> {
        self.check(c)?;
        let col_len = self.rows.iter().filter(|&&r| r >= c.col).count();
        Ok(self.row_len(c.row) - c.col + col_len - c.row + 1)
    }

    /// Cells of hook length 1, i.e. those whose removal leaves a diagram.
    pub fn extreme_cells(&self) -> Vec<Cell> {
        self.rows
            .iter()
            .enumerate()
            .filter(|&(i, &r)| self.row_len(i + 2) < r)
            .map(|(i, &r)| Cell::new(i + 1, r))
            .collect()
    }

    pub fn is_extreme(&self, c: Cell) -> bool {
        self.contains(c) && c.col == self.row_len(c.row) && self.row_len(c.row + 1) < c.col
    }

    /// All cells weakly above and to the left of an extreme cell.
    pub fn extreme_rectangle(&self, c: Cell) -> Result<Vec<Cell>> {
        if !self.is_extreme(c) {
            return Err(Error::NotExtreme {
                row: c.row,
                col: c.col,
            });
        }
        Ok((1..=c.row)
            .flat_map(|i| (1..=c.col).map(move |j| Cell::new(i, j)))
            .collect())
    }

    /// `λ` with an extreme cell removed.
    pub fn remove_cell(&self, c: Cell) -> Result<Self> {
        if !self.is_extreme(c) {
            return Err(Error::NotExtreme {
                row: c.row,
                col: c.col,
            });
        }
        let mut rows = self.rows.clone();
        rows[c.row - 1] -= 1;
        if rows[c.row - 1] == 0 {
            rows.pop();
        }
        Ok(YoungDiagram { rows })
    }

    /// The last cell of `T(λ)`: end of the bottom row.
    pub fn last_cell(&self) -> Option<Cell> {
        self.rows.last().map(|&r| Cell::new(self.rows.len(), r))
    }

    /// Position of `c` in the row-major numbering `T(λ)`.
    pub fn tableau_index(&self, c: Cell) -> Result<usize> {
        self.check(c)?;
        Ok(self.rows[..c.row - 1].iter().sum::<usize>() + c.col)
    }

    /// Inverse of [`tableau_index`](Self::tableau_index).
    pub fn cell_of_index(&self, k: usize) -> Result<Cell> {
        let out_of_range = Error::IndexOutOfRange {
            index: k,
            size: self.size(),
        };
        if k == 0 {
            return Err(out_of_range);
        }
        let mut rest = k;
        for (i, &r) in self.rows.iter().enumerate() {
            if rest <= r {
                return Ok(Cell::new(i + 1, rest));
            }
            rest -= r;
        }
        Err(out_of_range)
    }

    /// Row of `T(λ)` holding the number `k`.
    fn row_of_index(&self, k: usize) -> usize {
        self.cell_of_index(k).expect("index in range").row
    }

    /// `π_λ(i)` is the number in `T(λ^∨)` of the transpose of cell `i` of
    /// `T(λ)`.
    pub fn pi_lambda(&self) -> Permutation {
        let conj = self.conjugate();
        let images: Vec<usize> = self
            .cells()
            .map(|c| conj.tableau_index(c.transpose()).expect("transpose lies in λ^∨"))
            .collect();
        Permutation::from_images(&images).expect("transposition is a bijection")
    }

    /// The `i` for which `i` and `i+1` share a row of `T(λ)`; the
    /// transpositions `(i i+1)` generate `R(λ)`.
    pub fn row_group_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut start = 1;
        for &r in &self.rows {
            gens.extend(start..start + r - 1);
            start += r;
        }
        gens
    }

    /// Every permutation preserving the rows of `T(λ)`.
    pub fn row_group(&self) -> Vec<Permutation> {
        let mut group = vec![Permutation::identity(0)];
        for &r in &self.rows {
            group = group
                .iter()
                .flat_map(|g| Permutation::all(r).map(move |p| g.direct_sum(&p)))
                .collect();
        }
        group
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn partitions(n: usize) -> Vec<YoungDiagram> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
            if rest == 0 {
                out.push(YoungDiagram {
                    rows: prefix.clone(),
                });
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                prefix.push(part);
                go(rest - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with `1 ≤ |λ| ≤ max`, by size.
    pub fn partitions_up_to(max: usize) -> Vec<YoungDiagram> {
        (1..=max).flat_map(Self::partitions).collect()
    }
}

/// True iff no two numbers sharing a row of `T(λ)` are sent by `π` into a
/// common row of `T(μ)`.
pub fn separates(pi: &Permutation, lambda: &YoungDiagram, mu: &YoungDiagram) -> Result<bool> {
    let n = pi.degree();
    if lambda.size() != n {
        return Err(Error::SizeMismatch(lambda.size(), n));
    }
    if mu.size() != n {
        return Err(Error::SizeMismatch(mu.size(), n));
    }
    let target_row: Vec<usize> = (1..=n).map(|k| mu.row_of_index(pi.image(k))).collect();
    let mut start = 0;
    for &r in lambda.rows() {
        let mut seen = vec![false; mu.num_rows() + 1];
        for &t in &target_row[start..start + r] {
            if seen[t] {
                return Ok(false);
            }
            seen[t] = true;
        }
        start += r;
    }
    Ok(true)
}

/// Brute-force scan of `S_n`: true iff no permutation separates `λ` from
/// `μ`.
pub fn is_inseparable(lambda: &YoungDiagram, mu: &YoungDiagram, guard: &Guard) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    let n = lambda.size();
    guard.check_separability(n)?;
    for pi in Permutation::all(n) {
        if separates(&pi, lambda, mu)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All separating permutations, in lexicographic order.
pub fn separating_permutations(
    lambda: &YoungDiagram,
    mu: &YoungDiagram,
    guard: &Guard,
) -> Result<Vec<Permutation>> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    guard.check_separability(lambda.size())?;
    let mut out = Vec::new();
    for pi in Permutation::all(lambda.size()) {
        if separates(&pi, lambda, mu)? {
            out.push(pi);
        }
    }
    Ok(out)
}

impl fmt::Display for YoungDiagram {
    /// Comma-separated rows, e.g. `4,2,1`; the empty diagram is `""`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(YoungDiagram::empty());
        }
        let rows = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        YoungDiagram::new(rows).map_err(|_| Error::InvalidPartition(s.to_string()))
    }
}
