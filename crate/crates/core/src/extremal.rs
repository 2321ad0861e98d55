//! Exhaustive search for trees with the fewest maximal matchings.
//!
//! Every free tree of order `n` is generated, counted with the sign DP, and
//! the minimizers are compared with the predicted spiders. The structural
//! checks cover the facts that force the shape of a minimizer for `n >= 8`.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::families::extremal_family;
use crate::signs::psi;
use crate::tree::{
    all_trees_with_cap, canonical_code, delete_leaf, is_spider, structural_predicates, Tree,
    TreeError, DEFAULT_TREE_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("order {n} outside {min}..={max}")]
    OutOfRange { n: usize, min: usize, max: usize },
    #[error(transparent)]
    Tree(#[from] TreeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest order handed to the tree generator.
    pub tree_cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            tree_cap: DEFAULT_TREE_CAP,
        }
    }
}

/// A reproducible failure: the canonical code of the offending tree and what
/// went wrong with it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub code: String,
    pub detail: String,
}

impl Violation {
    pub fn new(code: impl Into<String>, detail: impl Into<String>) -> Self {
        Violation {
            code: code.into(),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Achiever {
    pub code: String,
    pub legs: Option<Vec<usize>>,
}

impl Achiever {
    fn of(tree: &Tree) -> Self {
        Achiever {
            code: canonical_code(tree),
            legs: is_spider(tree).map(|s| s.legs),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralFlags {
    pub code: String,
    pub branch_vertices: usize,
    pub max_leaf_siblings: usize,
    pub pendant_star_sizes: Vec<usize>,
    pub max_pendant_path: usize,
}

impl StructuralFlags {
    fn of(tree: &Tree) -> Self {
        let p = structural_predicates(tree);
        StructuralFlags {
            code: canonical_code(tree),
            branch_vertices: p.branch_vertices.len(),
            max_leaf_siblings: p.max_leaf_siblings,
            max_pendant_path: p.max_pendant_path(),
            pendant_star_sizes: p.pendant_star_sizes,
        }
    }
}

/// Outcome of [`min_psi_search`]. `pass` holds exactly when the minimum equals
/// `ceil(n/2)` and the minimizers are exactly the predicted trees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub min_psi: BigUint,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub bound: BigUint,
    pub trees: usize,
    pub achievers: Vec<Achiever>,
    pub predicted: Vec<String>,
    pub structural_flags: Vec<StructuralFlags>,
    pub pass: bool,
    pub violations: Vec<Violation>,
}

impl ExtremalReport {
    pub fn achiever_codes(&self) -> Vec<&str> {
        self.achievers.iter().map(|a| a.code.as_str()).collect()
    }
}

/// `ceil(n / 2)`.
pub fn lower_bound(n: usize) -> BigUint {
    BigUint::from(n.div_ceil(2))
}

fn trees_of_order(n: usize, cfg: &SearchConfig) -> Result<Vec<Tree>, ExtremalError> {
    Ok(all_trees_with_cap(n, cfg.tree_cap)?.collect())
}

fn check_range(n: usize, min: usize, cfg: &SearchConfig) -> Result<(), ExtremalError> {
    if n < min || n > cfg.tree_cap {
        return Err(ExtremalError::OutOfRange {
            n,
            min,
            max: cfg.tree_cap,
        });
    }
    Ok(())
}

/// Trees of order `n` minimizing the count, sorted by canonical code, with
/// the minimum itself.
fn minimizers(n: usize, cfg: &SearchConfig) -> Result<(BigUint, Vec<Tree>, usize), ExtremalError> {
    let trees = trees_of_order(n, cfg)?;
    let total = trees.len();
    let counted: Vec<(BigUint, Tree)> = trees.into_par_iter().map(|t| (psi(&t), t)).collect();
    let min = counted
        .iter()
        .map(|(p, _)| p)
        .min()
        .cloned()
        .expect("at least one tree");
    let mut best: Vec<(String, Tree)> = counted
        .into_iter()
        .filter(|(p, _)| *p == min)
        .map(|(_, t)| (canonical_code(&t), t))
        .collect();
    best.sort_by(|a, b| a.0.cmp(&b.0));
    Ok((min, best.into_iter().map(|(_, t)| t).collect(), total))
}

pub fn min_psi_search(n: usize) -> Result<ExtremalReport, ExtremalError> {
    min_psi_search_with(n, &SearchConfig::default())
}

pub fn min_psi_search_with(n: usize, cfg: &SearchConfig) -> Result<ExtremalReport, ExtremalError> {
    check_range(n, 2, cfg)?;
    let (min_psi, best, trees) = minimizers(n, cfg)?;
    let bound = lower_bound(n);

    let predicted_trees: Vec<Tree> = extremal_family(n)
        .expect("n >= 2")
        .into_iter()
        .map(|inst| inst.tree)
        .collect();
    let mut predicted: Vec<String> = predicted_trees.iter().map(canonical_code).collect();
    predicted.sort();

    let achievers: Vec<Achiever> = best.iter().map(Achiever::of).collect();
    let structural_flags = best.iter().map(StructuralFlags::of).collect();

    let mut violations = Vec::new();
    if min_psi != bound {
        violations.push(Violation::new(
            achievers[0].code.clone(),
            format!("minimum {min_psi} differs from bound {bound}"),
        ));
    }
    for a in &achievers {
        if !predicted.contains(&a.code) {
            violations.push(Violation::new(a.code.clone(), "minimizer not predicted"));
        }
    }
    for (code, tree) in predicted.iter().zip(sorted_by_code(predicted_trees)) {
        if !achievers.iter().any(|a| &a.code == code) {
            violations.push(Violation::new(
                code.clone(),
                format!("predicted tree has {} maximal matchings", psi(&tree)),
            ));
        }
    }

    Ok(ExtremalReport {
        n,
        min_psi,
        bound,
        trees,
        achievers,
        predicted,
        structural_flags,
        pass: violations.is_empty(),
        violations,
    })
}

fn sorted_by_code(trees: Vec<Tree>) -> Vec<Tree> {
    let mut keyed: Vec<(String, Tree)> =
        trees.into_iter().map(|t| (canonical_code(&t), t)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, t)| t).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub name: &'static str,
    pub pass: bool,
    pub counterexamples: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub n: usize,
    pub minimizers: Vec<String>,
    pub checks: Vec<TheoremCheck>,
    pub pass: bool,
}

pub fn check_structural_theorems(n: usize) -> Result<StructureReport, ExtremalError> {
    check_structural_theorems_with(n, &SearchConfig::default())
}

/// For every minimizer of order `n >= 8`: no vertex with three or more leaf
/// neighbors, no pendant star `K_{1,d}` with `d >= 3`, no pendant path on four
/// or more vertices, and exactly one branch vertex.
pub fn check_structural_theorems_with(
    n: usize,
    cfg: &SearchConfig,
) -> Result<StructureReport, ExtremalError> {
    check_range(n, 8, cfg)?;
    let (_, best, _) = minimizers(n, cfg)?;
    type Rule = fn(&crate::tree::StructuralPredicates) -> bool;
    let rules: [(&'static str, Rule); 4] = [
        ("no_vertex_with_three_leaves", |p| p.max_leaf_siblings < 3),
        ("no_pendant_star", |p| p.pendant_star_sizes.is_empty()),
        ("no_pendant_path_of_four", |p| p.max_pendant_path() < 4),
        ("one_branch_vertex", |p| p.branch_vertices.len() == 1),
    ];
    let analysed: Vec<(String, crate::tree::StructuralPredicates)> = best
        .iter()
        .map(|t| (canonical_code(t), structural_predicates(t)))
        .collect();
    let checks: Vec<TheoremCheck> = rules
        .iter()
        .map(|&(name, rule)| {
            let counterexamples: Vec<String> = analysed
                .iter()
                .filter(|(_, p)| !rule(p))
                .map(|(c, _)| c.clone())
                .collect();
            TheoremCheck {
                name,
                pass: counterexamples.is_empty(),
                counterexamples,
            }
        })
        .collect();
    Ok(StructureReport {
        n,
        minimizers: analysed.into_iter().map(|(c, _)| c).collect(),
        pass: checks.iter().all(|c| c.pass),
        checks,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvenReport {
    pub n: usize,
    /// Trees whose count is unchanged by deleting any single leaf.
    pub qualifying: Vec<String>,
    pub pass: bool,
    pub violations: Vec<Violation>,
}

/// Whether deleting any one leaf leaves the count unchanged.
pub fn leaf_stable(tree: &Tree) -> bool {
    let total = psi(tree);
    tree.leaves().all(|x| {
        let (smaller, _) = delete_leaf(tree, x).expect("x is a leaf");
        psi(&smaller) == total
    })
}

pub fn check_even_theorem(n: usize) -> Result<EvenReport, ExtremalError> {
    check_even_theorem_with(n, &SearchConfig::default())
}

/// Finds the leaf-stable trees of order `n` and checks that the order is even
/// and that every inner vertex has exactly one leaf neighbor.
pub fn check_even_theorem_with(n: usize, cfg: &SearchConfig) -> Result<EvenReport, ExtremalError> {
    check_range(n, 3, cfg)?;
    let trees = trees_of_order(n, cfg)?;
    let mut qualifying: Vec<(String, Tree)> = trees
        .into_par_iter()
        .filter(leaf_stable)
        .map(|t| (canonical_code(&t), t))
        .collect();
    qualifying.sort_by(|a, b| a.0.cmp(&b.0));

    let mut violations = Vec::new();
    for (code, t) in &qualifying {
        if n % 2 == 1 {
            violations.push(Violation::new(
                code.clone(),
                "leaf-stable tree of odd order",
            ));
        }
        let bad_inner = (0..n).find(|&v| {
            !t.is_leaf(v) && t.neighbors(v).iter().filter(|&&w| t.is_leaf(w)).count() != 1
        });
        if let Some(v) = bad_inner {
            violations.push(Violation::new(
                code.clone(),
                format!("inner vertex {v} does not have exactly one leaf neighbor"),
            ));
        }
    }
    Ok(EvenReport {
        n,
        qualifying: qualifying.into_iter().map(|(c, _)| c).collect(),
        pass: violations.is_empty(),
        violations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderSummary {
    pub n: usize,
    pub trees: usize,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub min_psi: BigUint,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub bound: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n_max: usize,
    pub trees_checked: usize,
    pub orders: Vec<OrderSummary>,
    pub pass: bool,
    pub violations: Vec<Violation>,
}

pub fn verify_lower_bound(n_max: usize) -> Result<BoundReport, ExtremalError> {
    verify_lower_bound_with(n_max, &SearchConfig::default())
}

/// Checks `psi(T) >= ceil(n/2)` for every free tree of every order `2..=n_max`.
pub fn verify_lower_bound_with(
    n_max: usize,
    cfg: &SearchConfig,
) -> Result<BoundReport, ExtremalError> {
    if n_max > cfg.tree_cap {
        return Err(ExtremalError::OutOfRange {
            n: n_max,
            min: 2,
            max: cfg.tree_cap,
        });
    }
    let mut orders = Vec::new();
    let mut violations = Vec::new();
    let mut trees_checked = 0;
    for n in 2..=n_max {
        let bound = lower_bound(n);
        let counted: Vec<(BigUint, Tree)> = trees_of_order(n, cfg)?
            .into_par_iter()
            .map(|t| (psi(&t), t))
            .collect();
        trees_checked += counted.len();
        for (p, t) in &counted {
            if *p < bound {
                violations.push(Violation::new(
                    canonical_code(t),
                    format!("{p} maximal matchings, below {bound}"),
                ));
            }
        }
        orders.push(OrderSummary {
            n,
            trees: counted.len(),
            min_psi: counted.iter().map(|(p, _)| p).min().cloned().unwrap(),
            bound,
        });
    }
    Ok(BoundReport {
        n_max,
        trees_checked,
        orders,
        pass: violations.is_empty(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_four_is_won_by_the_path() {
        let r = min_psi_search(4).unwrap();
        assert_eq!(r.min_psi, BigUint::from(2u32));
        assert_eq!(r.trees, 2);
        assert_eq!(r.achievers.len(), 1);
        assert_eq!(r.achievers[0].legs, Some(vec![1, 2]));
        assert!(r.pass, "{:?}", r.violations);
    }

    #[test]
    fn order_eight_and_nine() {
        let r = min_psi_search(8).unwrap();
        assert_eq!((r.trees, r.min_psi.clone()), (23, BigUint::from(4u32)));
        let legs: Vec<_> = r
            .achievers
            .iter()
            .map(|a| a.legs.clone().unwrap())
            .collect();
        assert_eq!(legs, vec![vec![1, 2, 2, 2]]);
        assert!(r.pass);

        let r = min_psi_search(9).unwrap();
        assert_eq!(r.min_psi, BigUint::from(5u32));
        let mut legs: Vec<_> = r
            .achievers
            .iter()
            .map(|a| a.legs.clone().unwrap())
            .collect();
        legs.sort();
        assert_eq!(legs, vec![vec![1, 1, 2, 2, 2], vec![2, 2, 2, 2]]);
        assert!(r.pass);
    }

    #[test]
    fn range_checks() {
        assert!(matches!(
            min_psi_search(1),
            Err(ExtremalError::OutOfRange { .. })
        ));
        assert!(matches!(
            min_psi_search(17),
            Err(ExtremalError::OutOfRange { .. })
        ));
        assert!(check_structural_theorems(7).is_err());
        assert!(check_even_theorem(2).is_err());
        assert!(verify_lower_bound(17).is_err());
    }

    #[test]
    fn structure_at_eight() {
        let r = check_structural_theorems(8).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.checks.len(), 4);
        assert_eq!(r.minimizers.len(), 1);
    }

    #[test]
    fn even_theorem_small() {
        let four = check_even_theorem(4).unwrap();
        let p4 = canonical_code(&Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap());
        assert!(four.qualifying.contains(&p4));
        assert!(four.pass);
        for n in [3, 5, 7] {
            assert!(check_even_theorem(n).unwrap().qualifying.is_empty());
        }
        assert!(check_even_theorem(6).unwrap().pass);
    }

    #[test]
    fn bound_up_to_ten() {
        let r = verify_lower_bound(10).unwrap();
        assert_eq!(r.trees_checked, 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106);
        assert!(r.pass);
        assert_eq!(r.orders[0].min_psi, BigUint::from(1u32));
        assert_eq!(r.orders[1].min_psi, BigUint::from(2u32));
    }
}
