//! Property suites that compare the sign DP with the enumeration oracle and
//! with the structural facts it is supposed to satisfy.
//!
//! Each suite returns a [`SuiteReport`]; a suite passes when it records no
//! violations.

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::extremal::{ExtremalError, SearchConfig, Violation};
use crate::families;
use crate::oracle::{count_maximal_forest, count_maximal_with_cap, enumerate_maximal_with_cap};
use crate::signs::{compute_signs, psi, psi_forest, SignTable};
use crate::tree::{all_trees_with_cap, canonical_code, leaf_slide, random_tree, Forest, Tree};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n_max: usize,
    pub checked: usize,
    pub pass: bool,
    pub violations: Vec<Violation>,
}

impl SuiteReport {
    fn new(suite: &str, n_max: usize, checked: usize, violations: Vec<Violation>) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            n_max,
            checked,
            pass: violations.is_empty(),
            violations,
        }
    }
}

/// Random trees drawn by Prüfer decoding, orders uniform in `min_order..=max_order`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomTrials {
    pub count: usize,
    pub min_order: usize,
    pub max_order: usize,
    pub seed: u64,
}

impl RandomTrials {
    fn trees(&self) -> impl Iterator<Item = Tree> + '_ {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.count).map(move |_| {
            let n = rng.random_range(self.min_order..=self.max_order);
            random_tree(n, rng.random()).expect("order >= 1")
        })
    }
}

fn exhaustive(n_max: usize, min: usize, cfg: &SearchConfig) -> Result<Vec<Tree>, ExtremalError> {
    let mut out = Vec::new();
    for n in min.max(1)..=n_max {
        out.extend(all_trees_with_cap(n, cfg.tree_cap)?);
    }
    Ok(out)
}

fn gather<F>(trees: Vec<Tree>, check: F) -> Vec<Violation>
where
    F: Fn(&Tree) -> Vec<Violation> + Sync + Send,
{
    trees.par_iter().flat_map_iter(check).collect()
}

/// DP count equals the enumeration count for every tree of order `1..=n_max`.
pub fn oracle_equivalence(
    n_max: usize,
    cfg: &SearchConfig,
    oracle_cap: usize,
) -> Result<SuiteReport, ExtremalError> {
    let trees = exhaustive(n_max, 1, cfg)?;
    let checked = trees.len();
    let violations = gather(trees, |t| match count_maximal_with_cap(t, oracle_cap) {
        Ok(expected) => {
            let got = psi(t);
            if got == expected {
                vec![]
            } else {
                vec![Violation::new(
                    canonical_code(t),
                    format!("dp {got}, enumeration {expected}"),
                )]
            }
        }
        Err(e) => vec![Violation::new(canonical_code(t), e.to_string())],
    });
    Ok(SuiteReport::new("oracle", n_max, checked, violations))
}

/// Same comparison over random trees.
pub fn oracle_equivalence_random(trials: &RandomTrials, oracle_cap: usize) -> SuiteReport {
    let trees: Vec<Tree> = trials.trees().collect();
    let checked = trees.len();
    let violations = gather(trees, |t| match count_maximal_with_cap(t, oracle_cap) {
        Ok(expected) if expected == psi(t) => vec![],
        Ok(expected) => vec![Violation::new(
            canonical_code(t),
            format!("enumeration {expected}"),
        )],
        Err(e) => vec![Violation::new(canonical_code(t), e.to_string())],
    });
    SuiteReport::new("oracle_random", trials.max_order, checked, violations)
}

/// A vertex is covered by every maximal matching iff it has a leaf neighbor.
pub fn leaf_neighbor_coverage(
    n_max: usize,
    cfg: &SearchConfig,
    oracle_cap: usize,
) -> Result<SuiteReport, ExtremalError> {
    let trees = exhaustive(n_max, 2, cfg)?;
    let checked = trees.iter().map(Tree::order).sum();
    let violations = gather(trees, |t| {
        let matchings: Vec<_> = match enumerate_maximal_with_cap(t, oracle_cap) {
            Ok(it) => it.collect(),
            Err(e) => return vec![Violation::new(canonical_code(t), e.to_string())],
        };
        (0..t.order())
            .filter(|&v| matchings.iter().all(|m| m.covers(v)) != t.has_leaf_neighbor(v))
            .map(|v| Violation::new(canonical_code(t), format!("coverage of vertex {v}")))
            .collect()
    });
    Ok(SuiteReport::new("coverage", n_max, checked, violations))
}

/// Inequalities every sign table satisfies, plus the equality case of
/// `alpha <= gamma`: it is tight exactly at childless vertices and at vertices
/// all of whose children have a childless child.
fn sign_table_violations(t: &Tree, table: &SignTable) -> Vec<String> {
    let rooted = t.root_at(table.root);
    let mut out = Vec::new();
    for v in 0..t.order() {
        let s = table.sign(v);
        let children = rooted.children(v);
        if s.alpha > s.gamma {
            out.push(format!("root {}: alpha > gamma at {v}", table.root));
        }
        if s.total() < s.gamma || s.gamma < BigUint::one() {
            out.push(format!(
                "root {}: alpha + beta >= gamma >= 1 fails at {v}",
                table.root
            ));
        }
        if !children.is_empty() && s.beta < BigUint::one() {
            out.push(format!("root {}: beta = 0 at inner vertex {v}", table.root));
        }
        let tight = children.is_empty()
            || children.iter().all(|&c| {
                rooted
                    .children(c)
                    .iter()
                    .any(|&g| rooted.children(g).is_empty())
            });
        if (s.alpha == s.gamma) != tight {
            out.push(format!(
                "root {}: alpha = gamma equality case wrong at {v}",
                table.root
            ));
        }
    }
    out
}

/// Sign inequalities and root invariance of the count, for every root of every
/// tree of order `1..=n_max`, then for `roots` random roots of random trees.
pub fn sign_invariants(
    n_max: usize,
    cfg: &SearchConfig,
    trials: Option<(&RandomTrials, usize)>,
) -> Result<SuiteReport, ExtremalError> {
    let mut trees = exhaustive(n_max, 1, cfg)?;
    let exhaustive_len = trees.len();
    if let Some((random, _)) = trials {
        trees.extend(random.trees());
    }
    let random_roots = trials.map_or(0, |(_, r)| r);
    let seed = trials.map_or(0, |(r, _)| r.seed);
    let checked = trees.len();
    let violations: Vec<Violation> = trees
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, t)| {
            let roots: Vec<usize> = if i < exhaustive_len {
                (0..t.order()).collect()
            } else {
                let mut rng =
                    ChaCha8Rng::seed_from_u64(seed ^ (i as u64).wrapping_mul(0x9E37_79B9));
                (0..random_roots)
                    .map(|_| rng.random_range(0..t.order()))
                    .collect()
            };
            let mut problems = Vec::new();
            let reference = psi(t);
            for r in roots {
                let table = compute_signs(&t.root_at(r));
                if table.psi() != reference {
                    problems.push(format!("root {r}: count {} != {reference}", table.psi()));
                }
                problems.extend(sign_table_violations(t, &table));
            }
            let code = if problems.is_empty() {
                String::new()
            } else {
                canonical_code(t)
            };
            problems
                .into_iter()
                .map(move |p| Violation::new(code.clone(), p))
        })
        .collect();
    Ok(SuiteReport::new("signs", n_max, checked, violations))
}

/// Each sign entry equals its enumerated meaning: for every root `u` and vertex
/// `v`, `alpha_v`/`beta_v` count maximal matchings of the subtree at `v` that
/// miss/cover `v`, and `gamma_v` counts those of the subtree minus `v`.
pub fn sign_semantics(
    n_max: usize,
    cfg: &SearchConfig,
    oracle_cap: usize,
) -> Result<SuiteReport, ExtremalError> {
    let trees = exhaustive(n_max, 1, cfg)?;
    let checked = trees.len();
    let violations = gather(trees, |t| {
        let mut out = Vec::new();
        for u in 0..t.order() {
            let rooted = t.root_at(u);
            let table = compute_signs(&rooted);
            for v in 0..t.order() {
                let below = rooted.descendants(v);
                let sub = t.induced_forest(&below);
                let sub_tree = &sub.components()[0].tree;
                let (mut missing, mut covering) = (0u64, 0u64);
                for m in enumerate_maximal_with_cap(sub_tree, oracle_cap).expect("below cap") {
                    if m.covers(0) {
                        covering += 1;
                    } else {
                        missing += 1;
                    }
                }
                let rest: Forest = sub_tree.remove_vertex(0);
                let gamma = count_maximal_forest(&rest, oracle_cap).expect("below cap");
                let s = table.sign(v);
                if s.alpha != BigUint::from(missing)
                    || s.beta != BigUint::from(covering)
                    || s.gamma != gamma
                {
                    out.push(Violation::new(
                        canonical_code(t),
                        format!(
                            "root {u}, vertex {v}: sign ({}, {}, {}) vs enumerated ({missing}, {covering}, {gamma})",
                            s.alpha, s.beta, s.gamma
                        ),
                    ));
                }
            }
        }
        out
    });
    Ok(SuiteReport::new(
        "sign_semantics",
        n_max,
        checked,
        violations,
    ))
}

/// Whether deleting `v` is predicted to leave the count unchanged: `v` is a
/// leaf and every other neighbor of its neighbor has a leaf neighbor.
pub fn deletion_keeps_count(t: &Tree, v: usize) -> bool {
    if !t.is_leaf(v) {
        return false;
    }
    let x = t.neighbors(v)[0];
    t.neighbors(x)
        .iter()
        .filter(|&&w| w != v)
        .all(|&w| t.has_leaf_neighbor(w))
}

/// `psi(T - v) <= psi(T)` for every vertex, with equality exactly as predicted
/// by [`deletion_keeps_count`]. Deleting an inner vertex yields a forest.
pub fn vertex_deletion(n_max: usize, cfg: &SearchConfig) -> Result<SuiteReport, ExtremalError> {
    let trees = exhaustive(n_max, 2, cfg)?;
    let checked = trees.iter().map(Tree::order).sum();
    let violations = gather(trees, |t| {
        let whole = psi(t);
        let mut out = Vec::new();
        for v in 0..t.order() {
            let after = psi_forest(&t.remove_vertex(v));
            if after > whole {
                out.push(Violation::new(
                    canonical_code(t),
                    format!("deleting {v} raises the count"),
                ));
            } else if (after == whole) != deletion_keeps_count(t, v) {
                out.push(Violation::new(
                    canonical_code(t),
                    format!("deleting {v}: equality case mismatch ({after} vs {whole})"),
                ));
            }
        }
        out
    });
    Ok(SuiteReport::new(
        "vertex_deletion",
        n_max,
        checked,
        violations,
    ))
}

/// Every valid `(v1, v2, x)` leaf slide of `t`.
pub fn valid_slides(t: &Tree) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for v1 in t.leaves() {
        let v2 = t.neighbors(v1)[0];
        if t.degree(v2) == 2 {
            let x = t.neighbors(v2).iter().copied().find(|&w| w != v1).unwrap();
            out.push((v1, v2, x));
        }
    }
    out
}

/// `psi` never drops under a leaf slide: `count` random valid slides on random
/// trees with orders in the trial range.
pub fn leaf_slide_monotonicity(trials: &RandomTrials) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(trials.seed);
    let mut cases = Vec::with_capacity(trials.count);
    while cases.len() < trials.count {
        let n = rng.random_range(trials.min_order.max(3)..=trials.max_order);
        let t = random_tree(n, rng.random()).expect("order >= 3");
        let slides = valid_slides(&t);
        if slides.is_empty() {
            continue;
        }
        let pick = slides[rng.random_range(0..slides.len())];
        cases.push((t, pick));
    }
    let violations: Vec<Violation> = cases
        .par_iter()
        .filter_map(|(t, (v1, v2, x))| {
            let slid = leaf_slide(t, *v1, *v2, *x).expect("valid slide");
            let (before, after) = (psi(t), psi(&slid));
            (after < before).then(|| {
                Violation::new(
                    canonical_code(t),
                    format!("slide ({v1},{v2},{x}) drops {before} to {after}"),
                )
            })
        })
        .collect();
    SuiteReport::new("leaf_slide", trials.max_order, cases.len(), violations)
}

/// `psi(P_n) = psi(P_{n-2}) + psi(P_{n-3})` from `P_1 = P_2 = 1`, `P_3 = 2`,
/// compared with the DP for every `n <= n_max` and with enumeration up to
/// `oracle_max`.
pub fn path_recurrence(n_max: usize, oracle_max: usize, oracle_cap: usize) -> SuiteReport {
    let mut expected: Vec<BigUint> = vec![BigUint::from(1u32); 4];
    expected[3] = BigUint::from(2u32);
    for n in 4..=n_max {
        let next = &expected[n - 2] + &expected[n - 3];
        expected.push(next);
    }
    let ns: Vec<usize> = (1..=n_max).collect();
    let violations: Vec<Violation> = ns
        .par_iter()
        .flat_map_iter(|&n| {
            let tree = families::path(n).expect("n >= 1").tree;
            let mut out = Vec::new();
            let got = psi(&tree);
            if got != expected[n] {
                out.push(Violation::new(
                    format!("P_{n}"),
                    format!("dp {got}, recurrence {}", expected[n]),
                ));
            }
            if n <= oracle_max {
                match count_maximal_with_cap(&tree, oracle_cap) {
                    Ok(e) if e == expected[n] => {}
                    Ok(e) => out.push(Violation::new(format!("P_{n}"), format!("enumeration {e}"))),
                    Err(e) => out.push(Violation::new(format!("P_{n}"), e.to_string())),
                }
            }
            out
        })
        .collect();
    SuiteReport::new("path_recurrence", n_max, n_max, violations)
}
