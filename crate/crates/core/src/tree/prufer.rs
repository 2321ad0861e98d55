use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Tree, TreeError};

/// Decodes a Prüfer sequence into the labeled tree on `0..order`.
///
/// Linear time: the smallest current leaf is tracked with a forward pointer,
/// and a vertex that becomes a leaf below the pointer is used immediately.
pub fn from_prufer(seq: &[usize], order: usize) -> Result<Tree, TreeError> {
    if order < 2 || seq.len() != order - 2 {
        return Err(TreeError::PruferLength {
            order,
            expected: order.saturating_sub(2),
            got: seq.len(),
        });
    }
    if let Some(&entry) = seq.iter().find(|&&x| x >= order) {
        return Err(TreeError::PruferEntry { entry, order });
    }

    let mut degree = vec![1usize; order];
    for &x in seq {
        degree[x] += 1;
    }
    let mut adjacency = vec![Vec::new(); order];
    let mut link = |a: usize, b: usize| {
        adjacency[a].push(b);
        adjacency[b].push(a);
    };

    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &v in seq {
        link(leaf, v);
        degree[leaf] -= 1;
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    link(leaf, order - 1);

    for nbrs in &mut adjacency {
        nbrs.sort_unstable();
    }
    Ok(Tree::from_adjacency_unchecked(adjacency))
}

/// Inverse of [`from_prufer`]. Panics on a tree with fewer than two vertices.
pub fn to_prufer(tree: &Tree) -> Vec<usize> {
    let n = tree.order();
    assert!(n >= 2, "Prüfer codes need at least two vertices");
    let rooted = tree.root_at(n - 1);
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut seq = Vec::with_capacity(n - 2);

    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for _ in 0..n - 2 {
        let next = rooted.parent(leaf).expect("leaf below the root");
        seq.push(next);
        degree[leaf] -= 1;
        degree[next] -= 1;
        if degree[next] == 1 && next < ptr {
            leaf = next;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    seq
}

/// A uniformly random labeled tree on `order` vertices. Deterministic in
/// `(order, seed)`.
pub fn random_tree(order: usize, seed: u64) -> Result<Tree, TreeError> {
    match order {
        0 => Err(TreeError::Empty),
        1 => Ok(Tree::single_vertex()),
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let seq: Vec<usize> = (0..order - 2).map(|_| rng.random_range(0..order)).collect();
            from_prufer(&seq, order)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_hand_examples() {
        assert_eq!(from_prufer(&[], 2).unwrap().edges(), vec![(0, 1)]);
        assert_eq!(
            from_prufer(&[0, 0], 4).unwrap().edges(),
            vec![(0, 1), (0, 2), (0, 3)]
        );
        assert_eq!(
            from_prufer(&[1, 2], 4).unwrap().edges(),
            vec![(0, 1), (1, 2), (2, 3)]
        );
        // 3 turns into a leaf above the pointer, so the pointer walks onto it
        assert_eq!(
            from_prufer(&[3, 3, 3, 4], 6).unwrap().edges(),
            vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]
        );
    }

    #[test]
    fn rejects_bad_sequences() {
        assert!(matches!(
            from_prufer(&[0], 2),
            Err(TreeError::PruferLength {
                expected: 0,
                got: 1,
                ..
            })
        ));
        assert!(matches!(
            from_prufer(&[], 1),
            Err(TreeError::PruferLength { .. })
        ));
        assert_eq!(
            from_prufer(&[4, 0], 4),
            Err(TreeError::PruferEntry { entry: 4, order: 4 })
        );
    }

    #[test]
    fn round_trips_every_labeled_tree_up_to_eight() {
        for n in 2..=8usize {
            let len = n - 2;
            let total = n.pow(len as u32);
            let mut seq = vec![0usize; len];
            for mut code in 0..total {
                for slot in seq.iter_mut() {
                    *slot = code % n;
                    code /= n;
                }
                let t = from_prufer(&seq, n).unwrap();
                assert_eq!(t.edge_count(), n - 1);
                assert_eq!(to_prufer(&t), seq, "n={n}");
            }
        }
    }

    #[test]
    fn random_trees_are_deterministic() {
        assert_eq!(random_tree(1, 7).unwrap().order(), 1);
        assert_eq!(random_tree(2, 7).unwrap().edges(), vec![(0, 1)]);
        assert_eq!(random_tree(10, 1).unwrap(), random_tree(10, 1).unwrap());
        assert_ne!(random_tree(30, 1).unwrap(), random_tree(30, 2).unwrap());
        assert_eq!(random_tree(0, 1), Err(TreeError::Empty));
    }
}
