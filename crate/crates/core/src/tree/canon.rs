use super::Tree;

/// The centroid of a tree: one vertex, or two adjacent vertices, minimizing
/// the largest component left after its removal. Sorted ascending.
pub fn centroid(tree: &Tree) -> Vec<usize> {
    let n = tree.order();
    let rooted = tree.root_at(0);
    let mut size = vec![1usize; n];
    let mut heaviest = vec![0usize; n];
    for &v in rooted.post_order() {
        for &c in rooted.children(v) {
            size[v] += size[c];
            heaviest[v] = heaviest[v].max(size[c]);
        }
    }
    let worst: Vec<usize> = (0..n).map(|v| heaviest[v].max(n - size[v])).collect();
    let best = *worst.iter().min().unwrap();
    (0..n).filter(|&v| worst[v] == best).collect()
}

/// AHU encoding of `tree` rooted at `root`: each vertex is `(` followed by
/// the sorted encodings of its children, then `)`.
pub fn rooted_code(tree: &Tree, root: usize) -> String {
    let rooted = tree.root_at(root);
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); tree.order()];
    for &v in rooted.post_order() {
        let mut parts: Vec<Vec<u8>> = rooted
            .children(v)
            .iter()
            .map(|&c| std::mem::take(&mut codes[c]))
            .collect();
        parts.sort_unstable();
        let mut code = Vec::with_capacity(2 + parts.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for p in parts {
            code.extend_from_slice(&p);
        }
        code.push(b')');
        codes[v] = code;
    }
    String::from_utf8(std::mem::take(&mut codes[root])).expect("ascii")
}

/// Isomorphism invariant for free trees: the AHU code rooted at the centroid,
/// taking the smaller code when the centroid has two vertices.
pub fn canonical_code(tree: &Tree) -> String {
    centroid(tree)
        .into_iter()
        .map(|c| rooted_code(tree, c))
        .min()
        .unwrap()
}
