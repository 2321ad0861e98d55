//! Brute-force enumeration of maximal matchings.
//!
//! This is the ground truth the sign DP is checked against, so it shares no
//! code with it: a depth-first include/exclude search over the sorted edge
//! list with a final maximality check on every leaf of the search.

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::tree::{Forest, Tree};

/// Largest order the enumerator accepts by default.
pub const DEFAULT_ORACLE_CAP: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("order {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("not a matching: {0}")]
    NotAMatching(String),
}

/// A set of vertex-disjoint edges, stored as sorted `(u, v)` pairs with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Validates that `edges` are vertex-disjoint edges of `tree`.
    pub fn new(tree: &Tree, edges: &[(usize, usize)]) -> Result<Self, OracleError> {
        let mut covered = vec![false; tree.order()];
        let mut out = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if !tree.has_edge(a, b) {
                return Err(OracleError::NotAMatching(format!("{a}-{b} is not an edge")));
            }
            for v in [a, b] {
                if std::mem::replace(&mut covered[v], true) {
                    return Err(OracleError::NotAMatching(format!(
                        "vertex {v} is covered twice"
                    )));
                }
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        Ok(Matching { edges: out })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covers(&self, v: usize) -> bool {
        self.edges.iter().any(|&(a, b)| a == v || b == v)
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (a, b)) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}-{b}")?;
        }
        f.write_str("}")
    }
}

/// Whether no edge of `tree` can be added to `m`.
pub fn is_maximal(tree: &Tree, m: &Matching) -> Result<bool, OracleError> {
    // re-validate: a Matching built for another tree may not fit this one
    let m = Matching::new(tree, m.edges())?;
    let mut covered = vec![false; tree.order()];
    for &(a, b) in m.edges() {
        covered[a] = true;
        covered[b] = true;
    }
    Ok(tree.edges().iter().all(|&(a, b)| covered[a] || covered[b]))
}

/// Every maximal matching of `tree`, each once, in a fixed order.
pub fn enumerate_maximal(tree: &Tree) -> Result<MaximalMatchings, OracleError> {
    enumerate_maximal_with_cap(tree, DEFAULT_ORACLE_CAP)
}

pub fn enumerate_maximal_with_cap(
    tree: &Tree,
    cap: usize,
) -> Result<MaximalMatchings, OracleError> {
    check_cap(tree.order(), cap)?;
    Ok(MaximalMatchings::new(tree.order(), tree.edges()))
}

/// Maximal matchings of a forest, in forest vertex ids.
pub fn enumerate_maximal_forest(
    forest: &Forest,
    cap: usize,
) -> Result<MaximalMatchings, OracleError> {
    check_cap(forest.order(), cap)?;
    Ok(MaximalMatchings::new(forest.order(), forest.edges()))
}

pub fn count_maximal(tree: &Tree) -> Result<BigUint, OracleError> {
    count_maximal_with_cap(tree, DEFAULT_ORACLE_CAP)
}

pub fn count_maximal_with_cap(tree: &Tree, cap: usize) -> Result<BigUint, OracleError> {
    Ok(BigUint::from(
        enumerate_maximal_with_cap(tree, cap)?.count(),
    ))
}

pub fn count_maximal_forest(forest: &Forest, cap: usize) -> Result<BigUint, OracleError> {
    Ok(BigUint::from(
        enumerate_maximal_forest(forest, cap)?.count(),
    ))
}

/// Whether every maximal matching of `tree` covers `v`.
pub fn covered_by_all(tree: &Tree, v: usize) -> Result<bool, OracleError> {
    covered_by_all_with_cap(tree, v, DEFAULT_ORACLE_CAP)
}

pub fn covered_by_all_with_cap(tree: &Tree, v: usize, cap: usize) -> Result<bool, OracleError> {
    Ok(enumerate_maximal_with_cap(tree, cap)?.all(|m| m.covers(v)))
}

fn check_cap(n: usize, cap: usize) -> Result<(), OracleError> {
    if n > cap {
        Err(OracleError::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Include,
    Exclude,
    Done,
}

/// Depth-first search over include/exclude decisions for each edge in sorted
/// order, including before excluding.
///
/// A branch is abandoned once some edge has both endpoints free and neither
/// endpoint has an undecided incident edge left: nothing can ever block it.
#[derive(Debug, Clone)]
pub struct MaximalMatchings {
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    /// Index of the last edge touching each vertex.
    last_edge: Vec<Option<usize>>,
    /// Vertices whose last incident edge is edge `i`.
    closing: Vec<Vec<usize>>,
    covered: Vec<bool>,
    chosen: Vec<bool>,
    stack: Vec<(usize, Step)>,
}

impl MaximalMatchings {
    fn new(order: usize, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        let mut adjacency = vec![Vec::new(); order];
        let mut last_edge = vec![None; order];
        for (i, &(a, b)) in edges.iter().enumerate() {
            adjacency[a].push(b);
            adjacency[b].push(a);
            last_edge[a] = Some(i);
            last_edge[b] = Some(i);
        }
        let mut closing = vec![Vec::new(); edges.len()];
        for (v, last) in last_edge.iter().enumerate() {
            if let Some(i) = *last {
                closing[i].push(v);
            }
        }
        MaximalMatchings {
            chosen: vec![false; edges.len()],
            covered: vec![false; order],
            stack: vec![(0, Step::Include)],
            edges,
            adjacency,
            last_edge,
            closing,
        }
    }

    /// After deciding edge `i`: is there an edge that can no longer be blocked?
    fn dead_end(&self, i: usize) -> bool {
        self.closing[i].iter().any(|&w| {
            !self.covered[w]
                && self.adjacency[w]
                    .iter()
                    .any(|&x| !self.covered[x] && self.last_edge[x] <= Some(i))
        })
    }

    fn set(&mut self, i: usize, on: bool) {
        let (a, b) = self.edges[i];
        self.covered[a] = on;
        self.covered[b] = on;
        self.chosen[i] = on;
    }

    fn current(&self) -> Matching {
        Matching {
            edges: self
                .edges
                .iter()
                .zip(&self.chosen)
                .filter(|(_, &c)| c)
                .map(|(&e, _)| e)
                .collect(),
        }
    }

    fn complete_and_maximal(&self) -> bool {
        self.edges
            .iter()
            .all(|&(a, b)| self.covered[a] || self.covered[b])
    }
}

impl Iterator for MaximalMatchings {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        loop {
            let &(i, step) = self.stack.last()?;
            if i == self.edges.len() {
                self.stack.pop();
                if self.complete_and_maximal() {
                    return Some(self.current());
                }
                continue;
            }
            match step {
                Step::Include => {
                    self.stack.last_mut().unwrap().1 = Step::Exclude;
                    let (a, b) = self.edges[i];
                    if !self.covered[a] && !self.covered[b] {
                        self.set(i, true);
                        if self.dead_end(i) {
                            self.set(i, false);
                        } else {
                            self.stack.push((i + 1, Step::Include));
                        }
                    }
                }
                Step::Exclude => {
                    self.stack.last_mut().unwrap().1 = Step::Done;
                    if self.chosen[i] {
                        self.set(i, false);
                    }
                    if !self.dead_end(i) {
                        self.stack.push((i + 1, Step::Include));
                    }
                }
                Step::Done => {
                    self.stack.pop();
                }
            }
        }
    }
}
