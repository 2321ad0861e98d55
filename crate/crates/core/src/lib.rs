//! Exact counting of maximal matchings in trees and forests.
//!
//! The count is computed by a bottom-up sign DP ([`signs`]) over arbitrary
//! precision integers and cross-checked against brute-force enumeration
//! ([`oracle`]). [`extremal`] searches all free trees of small order for the
//! trees with the fewest maximal matchings.
//!
//! ```
//! use maxmatch_core::{families, psi};
//!
//! let t = families::star_of_triples(2).unwrap();
//! assert_eq!(psi(&t.tree), 15u32.into());
//! ```

mod decimal;
pub mod extremal;
pub mod families;
pub mod oracle;
pub mod signs;
pub mod tree;
pub mod verify;

pub use extremal::{
    check_even_theorem, check_structural_theorems, min_psi_search, verify_lower_bound,
    ExtremalError, ExtremalReport, SearchConfig, Violation,
};
pub use families::{FamilyError, FamilyInstance, FamilyName, FamilySpec};
pub use num_bigint::BigUint;
pub use oracle::{
    count_maximal, covered_by_all, enumerate_maximal, is_maximal, Matching, OracleError,
    DEFAULT_ORACLE_CAP,
};
pub use signs::{compute_signs, psi, psi_forest, psi_split, Sign, SignTable};
pub use tree::{
    all_trees, canonical_code, parse_edge_list, random_tree, Forest, RootedTree, SpiderSpec, Tree,
    TreeError,
};
