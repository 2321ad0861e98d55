//! Inputs shared by the criterion benches.

use maxmatch_core::families;
use maxmatch_core::{random_tree, Tree};

pub const SEED: u64 = 7;

/// Named trees of order `n` covering the DP's extremes: a deep path, a wide
/// star, and a random tree of typical shape.
pub fn shapes(n: usize) -> Vec<(&'static str, Tree)> {
    vec![
        ("path", families::path(n).expect("n >= 1").tree),
        ("star", families::star(n - 1).expect("n >= 2").tree),
        ("random", random_tree(n, SEED).expect("n >= 1")),
    ]
}
