//! Permutations of `{1..n}`, their lengths and reduced words, and braid
//! words.
//!
//! Composition is left to right, matching the stacking of braids: in
//! `p.compose(&q)` the strand starting at `i` ends at `q(p(i))`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `{1..n}`. Stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u8]>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// From the 1-based one-line notation `[π(1), ..., π(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for &i in images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&i| (i - 1) as u8).collect(),
        })
    }

    pub(crate) fn from_zero_based(images: Vec<u8>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(k, &v)| k == v as usize)
        });
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// From disjoint cycles in 1-based notation, e.g. `[[2, 4, 7, 3, 6, 5]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n || touched[a - 1] {
                    return Err(Error::InvalidPermutation(format!("cycles {cycles:?}")));
                }
                touched[a - 1] = true;
                images[a - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(&images)
    }

    /// The elementary transposition `(i i+1)` in `S_n`.
    pub fn transposition(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::InvalidPermutation(format!("s_{i} in S_{n}")));
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    /// The cycle `(j j+1 ... n)`: `k ↦ k+1` for `j ≤ k < n`, and `n ↦ j`.
    pub fn cycle(n: usize, j: usize) -> Result<Self> {
        if j == 0 || j > n {
            return Err(Error::InvalidPermutation(format!("cycle ({j}..{n})")));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        for k in j..n {
            images[k - 1] = k + 1;
        }
        images[n - 1] = j;
        Self::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `π(i)`, 1-based.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// One-line notation, 1-based.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &i)| k == i as usize)
    }

    /// Left-to-right composition: first `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::SizeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.degree()];
        for (k, &i) in self.images.iter().enumerate() {
            inv[i as usize] = k as u8;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// Number of inversions, equal to the crossing number of the positive
    /// permutation braid.
    pub fn length(&self) -> usize {
        let p = &self.images;
        (0..p.len())
            .map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count())
            .sum()
    }

    /// Writes `π = π' ∘ (j j+1 ... n)` with `j = π(n)` and `π'` fixing `n`;
    /// returns `π'` restricted to `S_{n-1}` together with `j`.
    ///
    /// # Panics
    /// On the empty permutation.
    pub fn peel_last_strand(&self) -> (Permutation, usize) {
        let n = self.degree();
        assert!(n >= 1, "cannot peel a strand from S_0");
        let j = self.images[n - 1] as usize + 1;
        // π' = π ∘ c^-1 where c^-1 sends k+1 ↦ k for j ≤ k < n and j ↦ n.
        let inv_cycle = |t: usize| -> usize {
            if t + 1 == j {
                n - 1
            } else if t + 1 > j {
                t - 1
            } else {
                t
            }
        };
        let rest: Vec<u8> = self.images[..n - 1]
            .iter()
            .map(|&t| inv_cycle(t as usize) as u8)
            .collect();
        (Permutation::from_zero_based(rest), j)
    }

    /// Extends by fixed points to degree `n`.
    pub fn extend(&self, n: usize) -> Result<Self> {
        self.shifted(0, n)
    }

    /// Acts on `{offset+1 .. offset+m}` inside `S_n`, fixing the rest.
    pub fn shifted(&self, offset: usize, n: usize) -> Result<Self> {
        let m = self.degree();
        if offset + m > n {
            return Err(Error::EmbedRange { m, offset, n });
        }
        let mut images: Vec<u8> = (0..n as u8).collect();
        for (k, &i) in self.images.iter().enumerate() {
            images[offset + k] = (offset + i as usize) as u8;
        }
        Ok(Permutation::from_zero_based(images))
    }

    /// Juxtaposition `self ⊕ other` on `m + k` strands.
    pub fn direct_sum(&self, other: &Permutation) -> Self {
        let m = self.degree();
        let mut images = self.images.to_vec();
        images.extend(other.images.iter().map(|&i| i + m as u8));
        Permutation::from_zero_based(images)
    }

    /// A positive word for the positive permutation braid of `self`.
    ///
    /// Built by peeling the last strand recursively: the word of `π` is the
    /// word of `π'` followed by `σ_{n-1} σ_{n-2} ... σ_j`.
    pub fn reduced_word(&self) -> BraidWord {
        let mut levels = Vec::with_capacity(self.degree());
        let mut p = self.clone();
        while p.degree() > 0 {
            let (rest, j) = p.peel_last_strand();
            levels.push((p.degree(), j));
            p = rest;
        }
        let mut letters = Vec::with_capacity(self.length());
        for &(n, j) in levels.iter().rev() {
            letters.extend((j..n).rev().map(|i| i as i32));
        }
        BraidWord {
            strands: self.degree(),
            letters,
        }
    }

    /// Cycle notation with fixed points omitted; `()` for the identity.
    pub fn cycle_notation(&self) -> String {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cyc.push((k + 1).to_string());
                k = self.images[k] as usize;
            }
            out.push_str(&format!("({})", cyc.join(" ")));
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    /// All of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some((0..n as u8).collect::<Vec<u8>>());
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut p = cur.clone();
            // Standard next-permutation step.
            if let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) {
                let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
                p.swap(i - 1, j);
                p[i..].reverse();
                next = Some(p);
            }
            Some(Permutation::from_zero_based(cur))
        })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images().iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

/// A word in the braid generators on `strands` strings. Letter `+i` is
/// `σ_i`, `-i` is `σ_i^-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidBraid("a braid needs at least one strand".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::InvalidBraid(format!(
                    "generator {l} is not in 1..{} (up to sign)",
                    strands - 1
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses whitespace-separated signed generator indices, e.g. `1 -2 1`.
    pub fn parse(strands: usize, word: &str) -> Result<Self> {
        let letters = word
            .split_whitespace()
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::InvalidBraid(format!("not a generator index: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of the crossing signs.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// The underlying permutation of the strands.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<u8> = (0..self.strands as u8).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as u8 - 1;
            for t in images.iter_mut() {
                if *t == i {
                    *t = i + 1;
                } else if *t == i + 1 {
                    *t = i;
                }
            }
        }
        Permutation::from_zero_based(images)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// One-line notation, whitespace or comma separated, optionally in
    /// brackets: `[1 4 6 7 2 5 3]`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let images = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(&images)
    }
}
