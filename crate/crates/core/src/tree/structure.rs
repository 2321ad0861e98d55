use serde::Serialize;

use super::{Tree, TreeError};

/// Leg lengths (in edges) of a tree with at most one branch vertex, sorted
/// ascending. The implied order is `1 + legs.sum()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SpiderSpec {
    pub legs: Vec<usize>,
}

impl SpiderSpec {
    pub fn new(mut legs: Vec<usize>) -> Self {
        legs.sort_unstable();
        SpiderSpec { legs }
    }

    pub fn order(&self) -> usize {
        1 + self.legs.iter().sum::<usize>()
    }
}

/// Leg lengths if `tree` has at most one vertex of degree at least three.
///
/// Paths have no branch vertex; they are measured from the vertex at index
/// `(n - 1) / 2` along the path, so `P_4` reads as `{1, 2}` and `P_5` as
/// `{2, 2}`.
pub fn is_spider(tree: &Tree) -> Option<SpiderSpec> {
    let n = tree.order();
    let mut branches = (0..n).filter(|&v| tree.degree(v) >= 3);
    match (branches.next(), branches.next()) {
        (Some(center), None) => {
            let legs = tree
                .neighbors(center)
                .iter()
                .map(|&first| walk_to_leaf(tree, center, first).len())
                .collect();
            Some(SpiderSpec::new(legs))
        }
        (None, _) => {
            if n == 1 {
                return Some(SpiderSpec::new(Vec::new()));
            }
            let mid = (n - 1) / 2;
            let legs = [mid, n - 1 - mid].into_iter().filter(|&l| l > 0).collect();
            Some(SpiderSpec::new(legs))
        }
        _ => None,
    }
}

/// Vertices visited walking from `from` through `first` until a vertex whose
/// degree is not two; `first` included.
fn walk_to_leaf(tree: &Tree, from: usize, first: usize) -> Vec<usize> {
    let mut path = vec![first];
    let (mut prev, mut cur) = (from, first);
    while tree.degree(cur) == 2 {
        let next = tree
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev)
            .unwrap();
        prev = cur;
        cur = next;
        path.push(cur);
    }
    path
}

/// Shape features used by the extremal structure checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralPredicates {
    /// Vertices of degree at least three.
    pub branch_vertices: Vec<usize>,
    /// Largest number of leaf neighbors at a single vertex.
    pub max_leaf_siblings: usize,
    /// Ray count `t` of every pendant star `K_{1,t}`: a vertex of degree
    /// `t >= 3` with exactly `t - 1` leaf neighbors. Sorted.
    pub pendant_star_sizes: Vec<usize>,
    /// Vertex counts, branch vertex and leaf included, of every pendant path
    /// (branch vertex to leaf through degree-two vertices). Sorted.
    pub pendant_path_lengths: Vec<usize>,
}

impl StructuralPredicates {
    pub fn max_pendant_path(&self) -> usize {
        self.pendant_path_lengths.iter().copied().max().unwrap_or(0)
    }
}

pub fn structural_predicates(tree: &Tree) -> StructuralPredicates {
    let n = tree.order();
    let leaf_neighbors: Vec<usize> = (0..n)
        .map(|v| {
            tree.neighbors(v)
                .iter()
                .filter(|&&w| tree.is_leaf(w))
                .count()
        })
        .collect();
    let branch_vertices: Vec<usize> = (0..n).filter(|&v| tree.degree(v) >= 3).collect();

    let mut pendant_star_sizes: Vec<usize> = branch_vertices
        .iter()
        .filter(|&&v| leaf_neighbors[v] + 1 == tree.degree(v))
        .map(|&v| tree.degree(v))
        .collect();
    pendant_star_sizes.sort_unstable();

    let mut pendant_path_lengths = Vec::new();
    for &b in &branch_vertices {
        for &first in tree.neighbors(b) {
            let walk = walk_to_leaf(tree, b, first);
            if tree.is_leaf(*walk.last().unwrap()) {
                pendant_path_lengths.push(walk.len() + 1);
            }
        }
    }
    pendant_path_lengths.sort_unstable();

    StructuralPredicates {
        branch_vertices,
        max_leaf_siblings: leaf_neighbors.into_iter().max().unwrap_or(0),
        pendant_star_sizes,
        pendant_path_lengths,
    }
}

/// Removes leaf `v`. Returns the smaller tree and, for each old vertex, its new
/// id (`None` for `v`). Remaining ids keep their relative order.
pub fn delete_leaf(tree: &Tree, v: usize) -> Result<(Tree, Vec<Option<usize>>), TreeError> {
    if v >= tree.order() || !tree.is_leaf(v) {
        return Err(TreeError::NotALeaf(v));
    }
    let mapping: Vec<Option<usize>> = (0..tree.order())
        .map(|w| match w.cmp(&v) {
            std::cmp::Ordering::Less => Some(w),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(w - 1),
        })
        .collect();
    let edges: Vec<(usize, usize)> = tree
        .edges()
        .into_iter()
        .filter_map(|(a, b)| Some((mapping[a]?, mapping[b]?)))
        .collect();
    let smaller = Tree::from_edges(tree.order() - 1, &edges)?;
    Ok((smaller, mapping))
}

/// Moves leaf `v1` from its degree-two neighbor `v2` onto `x`, the other
/// neighbor of `v2`: the edge `v1 v2` is replaced by `v1 x`.
pub fn leaf_slide(tree: &Tree, v1: usize, v2: usize, x: usize) -> Result<Tree, TreeError> {
    let n = tree.order();
    let bad = |why: &str| Err(TreeError::InvalidSlide(why.to_string()));
    if v1 >= n || v2 >= n || x >= n {
        return bad("vertex out of range");
    }
    if v1 == x {
        return bad("v1 and x must differ");
    }
    if !tree.is_leaf(v1) {
        return bad("v1 must be a leaf");
    }
    if tree.degree(v2) != 2 {
        return bad("v2 must have degree two");
    }
    if !tree.has_edge(v1, v2) || !tree.has_edge(v2, x) {
        return bad("v1 v2 x must be a path");
    }
    let edges: Vec<(usize, usize)> = tree
        .edges()
        .into_iter()
        .map(|e| {
            if e == (v1.min(v2), v1.max(v2)) {
                (v1, x)
            } else {
                e
            }
        })
        .collect();
    Tree::from_edges(n, &edges)
}
