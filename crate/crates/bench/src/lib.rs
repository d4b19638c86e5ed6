//! Shared inputs for the benchmarks.

use skein_core::{BraidWord, YoungDiagram};

/// Partitions benchmarked for `e_λ`, one per shape family.
pub fn idempotent_shapes() -> Vec<YoungDiagram> {
    ["3", "2,1", "3,1", "2,2", "3,2", "2,2,1", "3,2,1"]
        .iter()
        .map(|s| s.parse().expect("valid partition"))
        .collect()
}

/// A few braids whose closures are standard knots and links.
pub fn braids() -> Vec<(&'static str, BraidWord)> {
    [
        ("trefoil", 2, "1 1 1"),
        ("figure-eight", 3, "1 -2 1 -2"),
        ("5_2", 3, "1 1 1 2 -1 2"),
        ("torus(3,4)", 3, "1 2 1 2 1 2 1 2"),
        ("4-strand", 4, "1 2 3 -1 2 -3 1 2 3"),
    ]
    .into_iter()
    .map(|(name, n, w)| (name, BraidWord::parse(n, w).expect("valid braid")))
    .collect()
}
