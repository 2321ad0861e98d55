//! Exhaustive generation of unlabeled free trees.
//!
//! [`FreeTrees`] walks canonical level sequences in the style of Wright,
//! Richmond, Odlyzko and McKay: rooted trees are visited in decreasing
//! level-sequence order and every candidate that is not the centered
//! representative of its free tree is skipped in a single jump.
//! [`prufer_unlabeled_trees`] is the slow, obviously correct alternative used
//! to cross-check it.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{canonical_code, from_prufer, Tree, TreeError};

/// Largest order [`all_trees`] accepts by default.
pub const DEFAULT_TREE_CAP: usize = 16;

/// One representative per isomorphism class of free trees on `n` vertices.
pub fn all_trees(n: usize) -> Result<FreeTrees, TreeError> {
    all_trees_with_cap(n, DEFAULT_TREE_CAP)
}

pub fn all_trees_with_cap(n: usize, cap: usize) -> Result<FreeTrees, TreeError> {
    if n == 0 {
        return Err(TreeError::Empty);
    }
    if n > cap {
        return Err(TreeError::AboveCap { n, cap });
    }
    Ok(FreeTrees::new(n))
}

/// Iterator over free trees of a fixed order, each isomorphism class once.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    order: usize,
    layout: Option<Vec<usize>>,
}

impl FreeTrees {
    fn new(order: usize) -> Self {
        // The path rooted at its center is the first level sequence.
        let layout = (0..=order / 2).chain(1..order.div_ceil(2)).collect();
        FreeTrees {
            order,
            layout: Some(layout),
        }
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.order == 1 {
            return self.layout.take().map(|_| Tree::single_vertex());
        }
        let candidate = self.layout.take()?;
        let layout = next_centered(candidate)?;
        let tree = layout_to_tree(&layout);
        self.layout = next_rooted(layout, None);
        Some(tree)
    }
}

/// The next rooted level sequence in decreasing order, changing positions
/// from `p` onwards (by default the last entry greater than one).
fn next_rooted(mut seq: Vec<usize>, p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = seq.len() - 1;
            while seq[p] == 1 {
                if p == 0 {
                    return None;
                }
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while seq[q] + 1 != seq[p] {
        q -= 1;
    }
    for i in p..seq.len() {
        seq[i] = seq[i - p + q];
    }
    Some(seq)
}

/// Splits a level sequence into the first subtree of the root (levels shifted
/// down by one) and the remainder of the tree with the root kept.
fn split(seq: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = seq
        .iter()
        .enumerate()
        .skip(1)
        .filter(|&(_, &l)| l == 1)
        .nth(1)
        .map_or(seq.len(), |(i, _)| i);
    let left = seq[1..m].iter().map(|&l| l - 1).collect();
    let rest = std::iter::once(0).chain(seq[m..].iter().copied()).collect();
    (left, rest)
}

/// Returns `candidate` if it is the centered representative of its free tree,
/// otherwise jumps to the next sequence that is.
fn next_centered(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid
        && rest_height == left_height
        && (left.len() > rest.len() || (left.len() == rest.len() && left > rest))
    {
        valid = false;
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let wide = candidate[p] > 2;
    let mut next = next_rooted(candidate, Some(p))?;
    if wide {
        let (new_left, _) = split(&next);
        let height = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (slot, level) in next[len - height - 1..].iter_mut().zip(1..) {
            *slot = level;
        }
    }
    Some(next)
}

fn layout_to_tree(seq: &[usize]) -> Tree {
    let mut adjacency = vec![Vec::new(); seq.len()];
    let mut last_at_level: Vec<usize> = Vec::new();
    for (v, &level) in seq.iter().enumerate() {
        last_at_level.truncate(level);
        if let Some(&parent) = last_at_level.last() {
            adjacency[parent].push(v);
            adjacency[v].push(parent);
        }
        last_at_level.push(v);
    }
    for nbrs in &mut adjacency {
        nbrs.sort_unstable();
    }
    Tree::from_adjacency_unchecked(adjacency)
}

/// Free trees of order `n` obtained by decoding all `n^(n-2)` Prüfer
/// sequences and keeping one tree per canonical code. Sorted by code.
/// Exponential; meant for `n <= 9`.
pub fn prufer_unlabeled_trees(n: usize) -> Vec<Tree> {
    match n {
        0 => return Vec::new(),
        1 => return vec![Tree::single_vertex()],
        _ => {}
    }
    let len = n - 2;
    let total = (n as u64).pow(len as u32);
    let classes = (0..total)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc, mut code| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = (code % n as u64) as usize;
                    code /= n as u64;
                    d
                })
                .collect();
            let tree = from_prufer(&seq, n).expect("valid sequence");
            acc.entry(canonical_code(&tree)).or_insert(tree);
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                a.entry(k).or_insert(v);
            }
            a
        });
    classes.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_orders() {
        assert_eq!(all_trees(1).unwrap().count(), 1);
        assert_eq!(all_trees(2).unwrap().count(), 1);
        assert_eq!(all_trees(3).unwrap().count(), 1);
        let four: Vec<Tree> = all_trees(4).unwrap().collect();
        assert_eq!(four.len(), 2);
        let max_degree: HashSet<usize> = four
            .iter()
            .map(|t| (0..4).map(|v| t.degree(v)).max().unwrap())
            .collect();
        assert_eq!(max_degree, HashSet::from([2, 3]));
        assert_eq!(all_trees(7).unwrap().count(), 11);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            all_trees(17).unwrap_err(),
            TreeError::AboveCap { n: 17, cap: 16 }
        );
        assert_eq!(all_trees(0).unwrap_err(), TreeError::Empty);
        assert_eq!(all_trees_with_cap(17, 17).unwrap().count(), 48629);
    }

    #[test]
    fn prufer_dedupe_small() {
        let counts: Vec<usize> = (1..=7).map(|n| prufer_unlabeled_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11]);
    }

    #[test]
    fn layout_to_tree_builds_parent_links() {
        let t = layout_to_tree(&[0, 1, 2, 1, 1]);
        assert_eq!(t.edges(), vec![(0, 1), (0, 3), (0, 4), (1, 2)]);
    }
}
