use std::collections::HashMap;
use std::fmt::Write;

use super::{Forest, Tree, TreeError};

/// Parses the edge-list format: one `u v` pair per line, `#` comments and
/// blank lines ignored. Vertex ids are renumbered `0..n` in order of first
/// appearance.
pub fn parse_edge_list(text: &str) -> Result<Forest, TreeError> {
    let mut ids: HashMap<u64, usize> = HashMap::new();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = || TreeError::Malformed {
            line: i + 1,
            content: raw.to_string(),
        };
        let mut fields = line.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed());
        };
        let a: u64 = a.parse().map_err(|_| malformed())?;
        let b: u64 = b.parse().map_err(|_| malformed())?;
        let mut intern = |x: u64| {
            let next = ids.len();
            *ids.entry(x).or_insert(next)
        };
        let u = intern(a);
        let v = intern(b);
        edges.push((u, v));
    }
    Forest::from_edges(ids.len(), &edges)
}

/// One `u v` line per edge, `u < v`, lexicographic order.
pub fn write_edge_list(tree: &Tree) -> String {
    render(tree.edges())
}

pub fn write_forest_edge_list(forest: &Forest) -> String {
    render(forest.edges())
}

fn render(edges: Vec<(usize, usize)>) -> String {
    let mut out = String::new();
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
