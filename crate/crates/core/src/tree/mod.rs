//! Trees, forests and rooted views over them.
//!
//! Vertices are always `0..n`. Adjacency lists are kept sorted so that edge
//! iteration order, and therefore every derived enumeration, is deterministic.

mod canon;
mod generate;
mod parse;
mod prufer;
mod structure;

pub use canon::{canonical_code, centroid, rooted_code};
pub use generate::{
    all_trees, all_trees_with_cap, prufer_unlabeled_trees, FreeTrees, DEFAULT_TREE_CAP,
};
pub use parse::{parse_edge_list, write_edge_list, write_forest_edge_list};
pub use prufer::{from_prufer, random_tree, to_prufer};
pub use structure::{
    delete_leaf, is_spider, leaf_slide, structural_predicates, SpiderSpec, StructuralPredicates,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("cycle detected at edge {0} {1}")]
    Cycle(usize, usize),
    #[error("graph is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("line {line}: malformed edge `{content}`")]
    Malformed { line: usize, content: String },
    #[error("vertex {0} is not a leaf")]
    NotALeaf(usize),
    #[error("invalid leaf slide: {0}")]
    InvalidSlide(String),
    #[error("Prüfer sequence for order {order} must have length {expected}, got {got}")]
    PruferLength {
        order: usize,
        expected: usize,
        got: usize,
    },
    #[error("Prüfer entry {entry} out of range for order {order}")]
    PruferEntry { entry: usize, order: usize },
    #[error("order {n} exceeds the enumeration cap {cap}")]
    AboveCap { n: usize, cap: usize },
}

/// An undirected tree on vertices `0..order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adjacency: Vec<Vec<usize>>,
}

impl Tree {
    /// The tree with one vertex and no edges.
    pub fn single_vertex() -> Self {
        Tree {
            adjacency: vec![Vec::new()],
        }
    }

    /// Builds a tree from an edge list, validating every tree invariant.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        if order == 0 {
            return Err(TreeError::Empty);
        }
        let forest = Forest::from_edges(order, edges)?;
        let count = forest.components.len();
        if count != 1 {
            return Err(TreeError::Disconnected(count));
        }
        Ok(forest.components.into_iter().next().unwrap().tree)
    }

    /// Caller guarantees `adjacency` is symmetric, sorted, connected and acyclic.
    pub(crate) fn from_adjacency_unchecked(adjacency: Vec<Vec<usize>>) -> Self {
        debug_assert!(!adjacency.is_empty());
        debug_assert_eq!(
            adjacency.iter().map(Vec::len).sum::<usize>(),
            2 * (adjacency.len() - 1)
        );
        Tree { adjacency }
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.len() - 1
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adjacency[v].len() == 1
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).filter(|&v| self.is_leaf(v))
    }

    /// Whether `v` has a neighbor of degree one.
    pub fn has_leaf_neighbor(&self, v: usize) -> bool {
        self.adjacency[v].iter().any(|&w| self.is_leaf(w))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Renames vertex `v` to `perm[v]`. `perm` must be a permutation of `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Tree {
        assert_eq!(perm.len(), self.order(), "permutation length mismatch");
        let mut adjacency = vec![Vec::new(); self.order()];
        for (v, nbrs) in self.adjacency.iter().enumerate() {
            let mut mapped: Vec<usize> = nbrs.iter().map(|&w| perm[w]).collect();
            mapped.sort_unstable();
            adjacency[perm[v]] = mapped;
        }
        Tree { adjacency }
    }

    pub fn root_at(&self, root: usize) -> RootedTree<'_> {
        RootedTree::new(self, root)
    }

    /// Removes `v` and all incident edges. Forest vertex `i` is vertex `i` of
    /// `self` for `i < v` and vertex `i + 1` otherwise.
    pub fn remove_vertex(&self, v: usize) -> Forest {
        let keep: Vec<usize> = (0..self.order()).filter(|&w| w != v).collect();
        self.induced_forest(&keep)
    }

    /// The subgraph induced by `vertices` (ids of `self`), split into
    /// components. Forest vertex `i` is `vertices[i]`.
    pub fn induced_forest(&self, vertices: &[usize]) -> Forest {
        let mut local = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for &u in vertices {
            for &w in &self.adjacency[u] {
                if u < w && local[w] != usize::MAX {
                    edges.push((local[u], local[w]));
                }
            }
        }
        Forest::from_edges(vertices.len(), &edges).expect("induced subgraph of a tree")
    }
}

/// A tree component of a [`Forest`] together with the forest-level id of each
/// of its local vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub tree: Tree,
    pub vertices: Vec<usize>,
}

/// A disjoint union of trees. Component `i` maps its local vertex `j` to the
/// forest vertex `components[i].vertices[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Forest {
    order: usize,
    components: Vec<Component>,
}

impl Forest {
    pub fn empty() -> Self {
        Forest::default()
    }

    /// Builds a forest on `0..order`; isolated vertices become single-vertex
    /// components. Components are ordered by their smallest vertex.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        let mut adjacency = vec![Vec::new(); order];
        let mut dsu = DisjointSets::new(order);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(TreeError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(TreeError::SelfLoop(u));
            }
            if adjacency[u].contains(&v) {
                return Err(TreeError::DuplicateEdge(u, v));
            }
            if !dsu.union(u, v) {
                return Err(TreeError::Cycle(u, v));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }

        let mut slot = vec![usize::MAX; order];
        let mut components: Vec<Component> = Vec::new();
        let mut local = vec![0usize; order];
        for (v, local_id) in local.iter_mut().enumerate() {
            let r = dsu.find(v);
            if slot[r] == usize::MAX {
                slot[r] = components.len();
                components.push(Component {
                    tree: Tree {
                        adjacency: Vec::new(),
                    },
                    vertices: Vec::new(),
                });
            }
            let comp = &mut components[slot[r]];
            *local_id = comp.vertices.len();
            comp.vertices.push(v);
        }
        for comp in &mut components {
            comp.tree.adjacency = comp
                .vertices
                .iter()
                .map(|&v| {
                    let mut nbrs: Vec<usize> = adjacency[v].iter().map(|&w| local[w]).collect();
                    nbrs.sort_unstable();
                    nbrs
                })
                .collect();
        }
        Ok(Forest { order, components })
    }

    pub fn from_tree(tree: Tree) -> Self {
        let order = tree.order();
        Forest {
            order,
            components: vec![Component {
                tree,
                vertices: (0..order).collect(),
            }],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_empty(&self) -> bool {
        self.order == 0
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn trees(&self) -> impl Iterator<Item = &Tree> {
        self.components.iter().map(|c| &c.tree)
    }

    /// All edges in forest ids, `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .components
            .iter()
            .flat_map(|c| {
                c.tree.edges().into_iter().map(move |(a, b)| {
                    let (u, v) = (c.vertices[a], c.vertices[b]);
                    (u.min(v), u.max(v))
                })
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// The single tree of a connected, non-empty forest.
    pub fn into_tree(self) -> Result<Tree, TreeError> {
        match self.components.len() {
            0 => Err(TreeError::Empty),
            1 => Ok(self.components.into_iter().next().unwrap().tree),
            k => Err(TreeError::Disconnected(k)),
        }
    }
}

impl From<Tree> for Forest {
    fn from(tree: Tree) -> Self {
        Forest::from_tree(tree)
    }
}

/// A tree viewed from a chosen root.
#[derive(Debug, Clone)]
pub struct RootedTree<'a> {
    tree: &'a Tree,
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    post_order: Vec<usize>,
}

impl<'a> RootedTree<'a> {
    /// Panics if `root` is not a vertex of `tree`.
    pub fn new(tree: &'a Tree, root: usize) -> Self {
        let n = tree.order();
        assert!(root < n, "root {root} out of range for order {n}");
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut bfs = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[root] = true;
        bfs.push(root);
        let mut head = 0;
        while head < bfs.len() {
            let v = bfs[head];
            head += 1;
            for &w in tree.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    children[v].push(w);
                    bfs.push(w);
                }
            }
        }
        bfs.reverse();
        RootedTree {
            tree,
            root,
            parent,
            children,
            post_order: bfs,
        }
    }

    pub fn tree(&self) -> &'a Tree {
        self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Every vertex appears after all of its children.
    pub fn post_order(&self) -> &[usize] {
        &self.post_order
    }

    /// Vertices of the subtree hanging from `v`, `v` first.
    pub fn descendants(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            out.extend_from_slice(&self.children[x]);
            i += 1;
        }
        out
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
