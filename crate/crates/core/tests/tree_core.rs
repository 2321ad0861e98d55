use std::collections::BTreeSet;

use maxmatch_core::tree::{
    all_trees, all_trees_with_cap, canonical_code, from_prufer, is_spider, leaf_slide,
    prufer_unlabeled_trees, random_tree, structural_predicates, to_prufer, Tree,
};
use maxmatch_core::verify::valid_slides;
use proptest::prelude::*;

/// Free tree counts for n = 1..=16 (OEIS A000055).
const FREE_TREES: [usize; 16] = [
    1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320,
];

#[test]
fn generator_agrees_with_prufer_dedupe() {
    for n in 1..=9 {
        let fast: BTreeSet<String> = all_trees(n).unwrap().map(|t| canonical_code(&t)).collect();
        let slow: BTreeSet<String> = prufer_unlabeled_trees(n)
            .iter()
            .map(canonical_code)
            .collect();
        assert_eq!(fast, slow, "n = {n}");
    }
}

#[test]
fn generator_counts_and_uniqueness_up_to_cap() {
    for n in 1..=16 {
        let codes: Vec<String> = all_trees(n).unwrap().map(|t| canonical_code(&t)).collect();
        let unique: BTreeSet<&String> = codes.iter().collect();
        assert_eq!(codes.len(), FREE_TREES[n - 1], "n = {n}");
        assert_eq!(unique.len(), codes.len(), "duplicate at n = {n}");
    }
    assert!(all_trees(17).is_err());
    assert_eq!(all_trees_with_cap(18, 18).unwrap().count(), 123_867);
}

#[test]
fn generated_trees_are_valid() {
    for n in 1..=12 {
        for t in all_trees(n).unwrap() {
            assert_eq!(t.order(), n);
            let rebuilt = Tree::from_edges(n, &t.edges()).unwrap();
            assert_eq!(rebuilt, t);
        }
    }
}

fn permutation(n: usize, seed: u64) -> Vec<usize> {
    // Fisher-Yates driven by a small LCG; good enough for shuffling labels
    let mut perm: Vec<usize> = (0..n).collect();
    let mut state = seed
        .wrapping_mul(6364136223846793005)
        .wrapping_add(1442695040888963407);
    for i in (1..n).rev() {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let j = (state >> 33) as usize % (i + 1);
        perm.swap(i, j);
    }
    perm
}

proptest! {
    #[test]
    fn canonical_code_ignores_labels(n in 1usize..40, seed in any::<u64>(), shuffle in any::<u64>()) {
        let t = random_tree(n, seed).unwrap();
        let relabeled = t.relabel(&permutation(n, shuffle));
        prop_assert_eq!(canonical_code(&t), canonical_code(&relabeled));
    }

    #[test]
    fn prufer_round_trip(n in 2usize..60, seed in any::<u64>()) {
        let t = random_tree(n, seed).unwrap();
        let seq = to_prufer(&t);
        prop_assert_eq!(seq.len(), n - 2);
        prop_assert_eq!(from_prufer(&seq, n).unwrap(), t);
    }

    #[test]
    fn slides_keep_a_tree(n in 3usize..30, seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let t = random_tree(n, seed).unwrap();
        let slides = valid_slides(&t);
        prop_assume!(!slides.is_empty());
        let (v1, v2, x) = slides[pick.index(slides.len())];
        let slid = leaf_slide(&t, v1, v2, x).unwrap();
        prop_assert_eq!(slid.order(), n);
        prop_assert_eq!(slid.edges().len(), n - 1);
        prop_assert!(slid.has_edge(v1, x) && !slid.has_edge(v1, v2));
    }
}

#[test]
fn spiders_from_subdivided_stars() {
    for m in 3..=50 {
        for t in 0..m {
            let inst = maxmatch_core::families::subdivided_star(m, t).unwrap();
            let legs = is_spider(&inst.tree).unwrap().legs;
            assert_eq!(legs.iter().filter(|&&l| l == 1).count(), t);
            assert_eq!(legs.iter().filter(|&&l| l == 2).count(), m - t);
            let p = structural_predicates(&inst.tree);
            assert_eq!(p.branch_vertices.len(), 1);
            assert_eq!(
                p.pendant_path_lengths.iter().filter(|&&l| l == 3).count(),
                m - t
            );
        }
    }
}
