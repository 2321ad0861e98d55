//! Bottom-up sign propagation for counting maximal matchings of trees.
//!
//! Rooting a tree at `u`, every vertex `v` carries a sign `(alpha, beta, gamma)`
//! describing the subtree `T_v` hanging from it:
//!
//! * `alpha`: maximal matchings of `T_v` that leave `v` uncovered,
//! * `beta`: maximal matchings of `T_v` that cover `v`,
//! * `gamma`: maximal matchings of the forest `T_v - v`.
//!
//! For children `x_1..x_k` of `v`, with `s_i = alpha_i + beta_i`:
//!
//! ```text
//! alpha_v = prod beta_i
//! beta_v  = sum_i gamma_i * prod_{j != i} s_j
//! gamma_v = prod s_i
//! ```
//!
//! Empty products are one, so a leaf gets `(1, 0, 1)`. The count for the whole
//! tree is `alpha_u + beta_u`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::tree::{Forest, RootedTree, Tree};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Sign {
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub alpha: BigUint,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub beta: BigUint,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub gamma: BigUint,
}

impl Sign {
    pub fn leaf() -> Self {
        Sign {
            alpha: BigUint::one(),
            beta: BigUint::zero(),
            gamma: BigUint::one(),
        }
    }

    /// `alpha + beta`: maximal matchings of the whole rooted subtree.
    pub fn total(&self) -> BigUint {
        &self.alpha + &self.beta
    }

    /// Sign of a vertex from the signs of its children.
    ///
    /// `beta` uses prefix products of `alpha + beta` and a running suffix
    /// product, so a vertex with `k` children costs `O(k)` multiplications.
    pub fn from_children<'s, I>(children: I) -> Sign
    where
        I: IntoIterator<Item = &'s Sign>,
    {
        let children: Vec<&Sign> = children.into_iter().collect();
        let totals: Vec<BigUint> = children.iter().map(|c| c.total()).collect();

        let mut alpha = BigUint::one();
        for c in &children {
            alpha *= &c.beta;
        }

        // prefix[i] = totals[0] * ... * totals[i - 1]
        let mut prefix = Vec::with_capacity(totals.len() + 1);
        prefix.push(BigUint::one());
        for t in &totals {
            let next = prefix.last().unwrap() * t;
            prefix.push(next);
        }

        let mut beta = BigUint::zero();
        let mut suffix = BigUint::one();
        for i in (0..children.len()).rev() {
            beta += &prefix[i] * &suffix * &children[i].gamma;
            suffix *= &totals[i];
        }

        Sign {
            alpha,
            beta,
            gamma: prefix.pop().unwrap(),
        }
    }

    /// Single-child shortcut: `(beta_c, gamma_c, alpha_c + beta_c)`.
    fn from_only_child(child: Sign) -> Sign {
        let total = child.total();
        Sign {
            alpha: child.beta,
            beta: child.gamma,
            gamma: total,
        }
    }
}

/// Signs of every vertex for one choice of root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignTable {
    pub root: usize,
    pub signs: Vec<Sign>,
}

impl SignTable {
    pub fn sign(&self, v: usize) -> &Sign {
        &self.signs[v]
    }

    /// The maximal-matching count of the tree.
    pub fn psi(&self) -> BigUint {
        self.signs[self.root].total()
    }
}

pub fn compute_signs(rooted: &RootedTree<'_>) -> SignTable {
    let n = rooted.tree().order();
    let mut signs: Vec<Option<Sign>> = vec![None; n];
    for &v in rooted.post_order() {
        let sign = Sign::from_children(
            rooted
                .children(v)
                .iter()
                .map(|&c| signs[c].as_ref().expect("post-order visits children first")),
        );
        signs[v] = Some(sign);
    }
    SignTable {
        root: rooted.root(),
        signs: signs.into_iter().map(Option::unwrap).collect(),
    }
}

/// Sign of the root only. Child signs are dropped as soon as their parent is
/// done, keeping memory proportional to the live frontier rather than to `n`
/// times the size of the counts.
pub fn root_sign(rooted: &RootedTree<'_>) -> Sign {
    let n = rooted.tree().order();
    let mut signs: Vec<Option<Sign>> = vec![None; n];
    for &v in rooted.post_order() {
        let children = rooted.children(v);
        let sign = match children {
            [] => Sign::leaf(),
            [only] => Sign::from_only_child(signs[*only].take().unwrap()),
            many => {
                let owned: Vec<Sign> = many.iter().map(|&c| signs[c].take().unwrap()).collect();
                Sign::from_children(&owned)
            }
        };
        signs[v] = Some(sign);
    }
    signs[rooted.root()].take().unwrap()
}

/// Number of maximal matchings of `tree`, rooted at vertex 0.
pub fn psi(tree: &Tree) -> BigUint {
    root_sign(&tree.root_at(0)).total()
}

/// `(uncovered, covered)`: maximal matchings leaving `root` free and covering it.
pub fn psi_split(tree: &Tree, root: usize) -> (BigUint, BigUint) {
    let s = root_sign(&tree.root_at(root));
    (s.alpha, s.beta)
}

/// Product of the component counts; the empty forest has exactly one
/// (empty) maximal matching.
pub fn psi_forest(forest: &Forest) -> BigUint {
    forest.trees().map(psi).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn sign(a: u64, b: u64, c: u64) -> Sign {
        Sign {
            alpha: big(a),
            beta: big(b),
            gamma: big(c),
        }
    }

    fn path(n: usize) -> Tree {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Tree::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn single_vertex_is_a_leaf() {
        let t = Tree::single_vertex();
        let table = compute_signs(&t.root_at(0));
        assert_eq!(table.signs, vec![sign(1, 0, 1)]);
        assert_eq!(psi(&t), big(1));
    }

    #[test]
    fn path_signs_from_the_far_end() {
        // rooted at the last vertex, signs run v1..v4
        let t = path(4);
        let table = compute_signs(&t.root_at(3));
        assert_eq!(
            table.signs,
            vec![sign(1, 0, 1), sign(0, 1, 1), sign(1, 1, 1), sign(1, 1, 2)]
        );
        assert_eq!(table.psi(), big(2));
        let p2 = path(2);
        assert_eq!(compute_signs(&p2.root_at(1)).sign(1), &sign(0, 1, 1));
    }

    #[test]
    fn stars() {
        for m in 1..20u64 {
            let edges: Vec<_> = (1..=m as usize).map(|i| (0, i)).collect();
            let t = Tree::from_edges(m as usize + 1, &edges).unwrap();
            assert_eq!(psi(&t), big(m));
            assert_eq!(psi_split(&t, 0), (big(0), big(m)));
        }
    }

    #[test]
    fn splits() {
        assert_eq!(psi_split(&path(4), 0), (big(1), big(1)));
        // spider {2,2,2} at its center
        let t = Tree::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(psi_split(&t, 0), (big(1), big(3)));
        assert_eq!(psi(&t), big(4));
    }

    #[test]
    fn forests_multiply() {
        assert_eq!(psi_forest(&Forest::empty()), big(1));
        let f = Forest::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        assert_eq!(psi_forest(&f), big(4));
        let f = Forest::from_edges(8, &[(0, 1), (1, 2), (2, 3), (4, 5), (4, 6), (4, 7)]).unwrap();
        assert_eq!(psi_forest(&f), big(6));
    }

    #[test]
    fn streaming_root_sign_matches_full_table() {
        let t = Tree::from_edges(
            9,
            &[
                (0, 1),
                (1, 2),
                (1, 3),
                (1, 4),
                (0, 5),
                (5, 6),
                (5, 7),
                (5, 8),
            ],
        )
        .unwrap();
        for r in 0..9 {
            let rooted = t.root_at(r);
            assert_eq!(&root_sign(&rooted), compute_signs(&rooted).sign(r));
        }
        assert_eq!(psi(&t), big(15));
    }

    #[test]
    fn long_path_does_not_overflow_the_stack() {
        let n = 200_000;
        let v = psi(&path(n));
        assert!(v.bits() > 64);
    }
}
