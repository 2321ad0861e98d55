use maxmatch_core::oracle::{count_maximal_forest, DEFAULT_ORACLE_CAP};
use maxmatch_core::verify::{self, RandomTrials};
use maxmatch_core::{
    count_maximal, enumerate_maximal, is_maximal, psi, psi_forest, psi_split, random_tree,
    SearchConfig, Tree,
};
use proptest::prelude::*;

#[test]
fn sign_entries_match_their_meaning() {
    let report = verify::sign_semantics(9, &SearchConfig::default(), DEFAULT_ORACLE_CAP).unwrap();
    assert!(report.pass, "{:?}", report.violations);
    assert_eq!(report.checked, 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47);
}

#[test]
fn dp_matches_enumeration_on_random_mid_sized_trees() {
    let trials = RandomTrials {
        count: 10_000,
        min_order: 11,
        max_order: 18,
        seed: 11,
    };
    let report = verify::oracle_equivalence_random(&trials, DEFAULT_ORACLE_CAP);
    assert!(report.pass, "{:?}", report.violations);
    assert_eq!(report.checked, 10_000);
}

#[test]
fn vertex_deletion_characterized() {
    let report = verify::vertex_deletion(9, &SearchConfig::default()).unwrap();
    assert!(report.pass, "{:?}", report.violations);
}

fn arb_tree(max: usize) -> impl Strategy<Value = Tree> {
    (1..=max, any::<u64>()).prop_map(|(n, seed)| random_tree(n, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dp_equals_enumeration(t in arb_tree(16)) {
        prop_assert_eq!(psi(&t), count_maximal(&t).unwrap());
    }

    #[test]
    fn enumerated_matchings_are_maximal_and_sorted(t in arb_tree(12)) {
        let all: Vec<_> = enumerate_maximal(&t).unwrap().collect();
        for m in &all {
            prop_assert!(is_maximal(&t, m).unwrap());
        }
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), all.len());
    }

    #[test]
    fn split_is_root_independent(t in arb_tree(40), pick in any::<prop::sample::Index>()) {
        let root = pick.index(t.order());
        let (alpha, beta) = psi_split(&t, root);
        prop_assert_eq!(alpha + beta, psi(&t));
    }

    #[test]
    fn forest_count_is_a_product(t in arb_tree(14), pick in any::<prop::sample::Index>()) {
        let v = pick.index(t.order());
        let forest = t.remove_vertex(v);
        let expected: maxmatch_core::BigUint = forest.trees().map(psi).product();
        prop_assert_eq!(psi_forest(&forest), expected.clone());
        prop_assert_eq!(count_maximal_forest(&forest, DEFAULT_ORACLE_CAP).unwrap(), expected);
    }

    #[test]
    fn leaf_deletion_never_increases(t in arb_tree(60), pick in any::<prop::sample::Index>()) {
        prop_assume!(t.order() >= 2);
        let v = pick.index(t.order());
        prop_assert!(psi_forest(&t.remove_vertex(v)) <= psi(&t));
    }
}
