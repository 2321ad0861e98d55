//! Named tree families with known maximal-matching counts.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Pow;
use thiserror::Error;

use crate::tree::{canonical_code, Tree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("bad family spec `{0}`; expected name:params, e.g. spider:1,2,2")]
    BadSpec(String),
    #[error("{family}: {reason}")]
    BadParameters { family: FamilyName, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyName {
    Path,
    Star,
    SubdividedStar,
    Spider,
    StarOfTriples,
}

impl FamilyName {
    pub const ALL: [FamilyName; 5] = [
        FamilyName::Path,
        FamilyName::Star,
        FamilyName::SubdividedStar,
        FamilyName::Spider,
        FamilyName::StarOfTriples,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyName::Path => "path",
            FamilyName::Star => "star",
            FamilyName::SubdividedStar => "subdivided_star",
            FamilyName::Spider => "spider",
            FamilyName::StarOfTriples => "star_of_triples",
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyName {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        FamilyName::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

/// A family member together with its construction parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub tree: Tree,
    pub family: FamilyName,
    pub parameters: Vec<usize>,
    /// Present only when a closed form for the count is known.
    pub expected_psi: Option<BigUint>,
}

impl FamilyInstance {
    pub fn spec(&self) -> String {
        let params: Vec<String> = self.parameters.iter().map(usize::to_string).collect();
        format!("{}:{}", self.family, params.join(","))
    }
}

/// Parsed `name:params` text, e.g. `subdivided_star:5,2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: FamilyName,
    pub parameters: Vec<usize>,
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| FamilyError::BadSpec(s.to_string()))?;
        let family: FamilyName = name.trim().parse()?;
        let parameters = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| FamilyError::BadSpec(s.to_string()))?;
        Ok(FamilySpec { family, parameters })
    }
}

impl FamilySpec {
    pub fn build(&self) -> Result<FamilyInstance, FamilyError> {
        let p = &self.parameters;
        let arity = |k: usize| {
            if p.len() == k {
                Ok(())
            } else {
                Err(bad(self.family, format!("expected {k} parameter(s)")))
            }
        };
        match self.family {
            FamilyName::Path => arity(1).and_then(|_| path(p[0])),
            FamilyName::Star => arity(1).and_then(|_| star(p[0])),
            FamilyName::SubdividedStar => arity(2).and_then(|_| subdivided_star(p[0], p[1])),
            FamilyName::Spider => spider(p),
            FamilyName::StarOfTriples => arity(1).and_then(|_| star_of_triples(p[0])),
        }
    }
}

fn bad(family: FamilyName, reason: impl Into<String>) -> FamilyError {
    FamilyError::BadParameters {
        family,
        reason: reason.into(),
    }
}

/// `P_n`: vertices `0..n` in a line.
pub fn path(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n == 0 {
        return Err(bad(FamilyName::Path, "n must be at least 1"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(FamilyInstance {
        tree: Tree::from_edges(n, &edges).expect("path"),
        family: FamilyName::Path,
        parameters: vec![n],
        expected_psi: None,
    })
}

/// `K_{1,m}` centered at 0. Every maximal matching is a single edge.
pub fn star(m: usize) -> Result<FamilyInstance, FamilyError> {
    if m == 0 {
        return Err(bad(FamilyName::Star, "m must be at least 1"));
    }
    let edges: Vec<_> = (1..=m).map(|i| (0, i)).collect();
    Ok(FamilyInstance {
        tree: Tree::from_edges(m + 1, &edges).expect("star"),
        family: FamilyName::Star,
        parameters: vec![m],
        expected_psi: Some(BigUint::from(m)),
    })
}

/// `K_{1,m}` with `m - t` of its edges subdivided once: `t` legs of length
/// one and `m - t` of length two, `2m - t + 1` vertices.
pub fn subdivided_star(m: usize, t: usize) -> Result<FamilyInstance, FamilyError> {
    if t >= m {
        return Err(bad(FamilyName::SubdividedStar, "need 0 <= t < m"));
    }
    let mut legs = vec![1; t];
    legs.resize(m, 2);
    let tree = spider_tree(&legs);
    let n = tree.order();
    let expected_psi = (t <= 2).then(|| BigUint::from(n.div_ceil(2)));
    Ok(FamilyInstance {
        tree,
        family: FamilyName::SubdividedStar,
        parameters: vec![m, t],
        expected_psi,
    })
}

/// One center with pendant paths of the given edge lengths. Legs are laid out
/// in the given order, center 0, each leg numbered outwards.
pub fn spider(legs: &[usize]) -> Result<FamilyInstance, FamilyError> {
    if legs.is_empty() {
        return Err(bad(FamilyName::Spider, "at least one leg is required"));
    }
    if legs.contains(&0) {
        return Err(bad(FamilyName::Spider, "leg lengths must be positive"));
    }
    Ok(FamilyInstance {
        tree: spider_tree(legs),
        family: FamilyName::Spider,
        parameters: legs.to_vec(),
        expected_psi: None,
    })
}

fn spider_tree(legs: &[usize]) -> Tree {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Tree::from_edges(next, &edges).expect("spider")
}

/// The center of `K_{1,n}` joined to the centers of `n` disjoint claws
/// `K_{1,3}`: `4n + 1` vertices and `3^n + n 3^(n-1)` maximal matchings.
pub fn star_of_triples(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n == 0 {
        return Err(bad(FamilyName::StarOfTriples, "n must be at least 1"));
    }
    let mut edges = Vec::with_capacity(4 * n);
    for i in 0..n {
        let hub = 1 + 4 * i;
        edges.push((0, hub));
        edges.extend((1..=3).map(|j| (hub, hub + j)));
    }
    let three = BigUint::from(3u32);
    let expected = three.clone().pow(n) + BigUint::from(n) * three.pow(n - 1);
    Ok(FamilyInstance {
        tree: Tree::from_edges(4 * n + 1, &edges).expect("star of triples"),
        family: FamilyName::StarOfTriples,
        parameters: vec![n],
        expected_psi: Some(expected),
    })
}

/// The trees predicted to minimize the count among trees of order `n`:
/// for even `n` the spider with one leg of length one and `n/2 - 1` legs of
/// length two; for odd `n` the all-twos spider and the spider with two legs of
/// length one and the rest of length two. Degenerate members are paths; the
/// list holds pairwise non-isomorphic trees, each expecting `ceil(n/2)`.
pub fn extremal_family(n: usize) -> Result<Vec<FamilyInstance>, FamilyError> {
    if n < 2 {
        return Err(bad(
            FamilyName::SubdividedStar,
            "extremal order must be at least 2",
        ));
    }
    // (m, t) of S^t(K_{1,m}) with 2m - t + 1 = n
    let shapes: Vec<(usize, usize)> = if n.is_multiple_of(2) {
        vec![(n / 2, 1)]
    } else {
        vec![((n - 1) / 2, 0), (n.div_ceil(2), 2)]
    };
    let mut out: Vec<FamilyInstance> = Vec::new();
    let mut seen = Vec::new();
    for (m, t) in shapes {
        let mut inst = match subdivided_star(m, t) {
            Ok(inst) => inst,
            // t == m only for n <= 3, where the shape is a bare star
            Err(_) if m == t => {
                let mut legs = vec![1; t];
                legs.resize(m, 2);
                spider(&legs)?
            }
            Err(_) => continue,
        };
        inst.expected_psi = Some(BigUint::from(n.div_ceil(2)));
        let code = canonical_code(&inst.tree);
        if !seen.contains(&code) {
            seen.push(code);
            out.push(inst);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::is_spider;

    fn legs(inst: &FamilyInstance) -> Vec<usize> {
        is_spider(&inst.tree).unwrap().legs
    }

    #[test]
    fn paths() {
        assert_eq!(path(1).unwrap().tree.order(), 1);
        assert_eq!(path(7).unwrap().tree.edge_count(), 6);
        assert!(path(0).is_err());
    }

    #[test]
    fn stars() {
        assert_eq!(star(1).unwrap().tree.edges(), vec![(0, 1)]);
        assert_eq!(star(40).unwrap().expected_psi, Some(BigUint::from(40u32)));
        assert!(star(0).is_err());
    }

    #[test]
    fn subdivided_stars() {
        let s = subdivided_star(4, 1).unwrap();
        assert_eq!(s.tree.order(), 8);
        assert_eq!(s.expected_psi, Some(BigUint::from(4u32)));
        assert_eq!(legs(&s), vec![1, 2, 2, 2]);
        let s = subdivided_star(5, 2).unwrap();
        assert_eq!(
            (s.tree.order(), s.expected_psi),
            (9, Some(BigUint::from(5u32)))
        );
        let s = subdivided_star(3, 0).unwrap();
        assert_eq!(
            (s.tree.order(), s.expected_psi),
            (7, Some(BigUint::from(4u32)))
        );
        assert_eq!(subdivided_star(6, 3).unwrap().expected_psi, None);
        assert!(subdivided_star(3, 3).is_err());
    }

    #[test]
    fn spiders() {
        assert_eq!(legs(&spider(&[1, 1, 1]).unwrap()), vec![1, 1, 1]);
        let p5 = spider(&[2, 2]).unwrap();
        assert_eq!(p5.tree.order(), 5);
        assert_eq!(
            canonical_code(&p5.tree),
            canonical_code(&path(5).unwrap().tree)
        );
        assert_eq!(spider(&[1, 2, 2]).unwrap().tree.order(), 6);
        assert!(spider(&[]).is_err());
        assert!(spider(&[1, 0]).is_err());
    }

    #[test]
    fn star_of_triples_closed_form() {
        let expect = [(1, 5, 4u32), (2, 9, 15), (3, 13, 54)];
        for (n, order, psi) in expect {
            let s = star_of_triples(n).unwrap();
            assert_eq!(s.tree.order(), order);
            assert_eq!(s.expected_psi, Some(BigUint::from(psi)));
        }
        assert!(star_of_triples(0).is_err());
    }

    #[test]
    fn extremal_members() {
        let got = |n| -> Vec<Vec<usize>> { extremal_family(n).unwrap().iter().map(legs).collect() };
        assert_eq!(got(8), vec![vec![1, 2, 2, 2]]);
        assert_eq!(got(9), vec![vec![2, 2, 2, 2], vec![1, 1, 2, 2, 2]]);
        assert_eq!(got(5), vec![vec![2, 2], vec![1, 1, 2]]);
        assert_eq!(got(3), vec![vec![1, 1]]);
        assert_eq!(got(2), vec![vec![1]]);
        assert_eq!(got(4), vec![vec![1, 2]]);
        assert!(extremal_family(1).is_err());
        for inst in extremal_family(11).unwrap() {
            assert_eq!(inst.expected_psi, Some(BigUint::from(6u32)));
        }
    }

    #[test]
    fn spec_strings() {
        let spec: FamilySpec = "subdivided_star:5,2".parse().unwrap();
        assert_eq!(spec.family, FamilyName::SubdividedStar);
        assert_eq!(spec.build().unwrap().tree.order(), 9);
        assert_eq!(spec.build().unwrap().spec(), "subdivided_star:5,2");
        assert_eq!(
            "path:1"
                .parse::<FamilySpec>()
                .unwrap()
                .build()
                .unwrap()
                .tree
                .order(),
            1
        );
        assert!("spider:".parse::<FamilySpec>().is_err());
        assert!("spider".parse::<FamilySpec>().is_err());
        assert!(matches!(
            "tadpole:3".parse::<FamilySpec>(),
            Err(FamilyError::UnknownFamily(_))
        ));
        assert!("path:1,2".parse::<FamilySpec>().unwrap().build().is_err());
    }
}
