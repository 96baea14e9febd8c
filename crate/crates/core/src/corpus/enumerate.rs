//! Graphs on up to eight vertices, one per isomorphism class.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Largest order handled by the bitmask representation.
pub const MAX_ORDER: usize = 8;

/// Adjacency rows as bitmasks.
pub(crate) fn rows(g: &Graph) -> Vec<u8> {
    assert!(g.vertex_count() <= MAX_ORDER, "small-graph routines take at most {MAX_ORDER} vertices");
    let mut adj = vec![0u8; g.vertex_count()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

fn code_of(adj: &[u8], perm: &[usize]) -> u32 {
    // perm[new] = old; bits of the upper triangle, row by row.
    let n = perm.len();
    let mut code = 0u32;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | u32::from(adj[perm[i]] >> perm[j] & 1);
        }
    }
    code
}

/// Canonical code: the largest upper-triangle bit string over all labellings
/// that list vertices by increasing degree.
pub fn canonical_code(g: &Graph) -> u32 {
    canonical_rows(&rows(g))
}

pub(crate) fn canonical_rows(adj: &[u8]) -> u32 {
    let n = adj.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (adj[v].count_ones(), v));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match classes.last_mut() {
            Some(c) if adj[c[0]].count_ones() == adj[v].count_ones() => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best = 0;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(adj: &[u8], classes: &[Vec<usize>], ci: usize, perm: &mut Vec<usize>, used: &mut [bool], best: &mut u32) {
        if ci == classes.len() {
            *best = (*best).max(code_of(adj, perm));
            return;
        }
        let class = &classes[ci];
        let placed = class.iter().filter(|&&v| used[v]).count();
        if placed == class.len() {
            return rec(adj, classes, ci + 1, perm, used, best);
        }
        for &v in class {
            if !used[v] {
                used[v] = true;
                perm.push(v);
                rec(adj, classes, ci, perm, used, best);
                perm.pop();
                used[v] = false;
            }
        }
    }
    rec(adj, &classes, 0, &mut perm, &mut used, &mut best);
    best
}

/// The graph with canonical code `code` on `n` vertices.
pub fn from_code(n: usize, code: u32) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut bit = total;
    for i in 0..n {
        for j in i + 1..n {
            bit -= 1;
            if code >> bit & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("code describes a simple graph")
}

/// Every graph on `n` vertices up to isomorphism, as canonical codes in
/// increasing order. Built by adding a vertex with every neighbourhood to
/// each graph on `n - 1` vertices.
pub fn all_codes(n: usize) -> Vec<u32> {
    assert!(n <= MAX_ORDER);
    let mut level: BTreeSet<u32> = BTreeSet::from([0]);
    for k in 1..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = rows(&from_code(k - 1, code));
            for nbhd in 0u16..1 << (k - 1) {
                let mut adj = base.clone();
                adj.push(nbhd as u8);
                for (v, row) in adj.iter_mut().enumerate().take(k - 1) {
                    if nbhd >> v & 1 == 1 {
                        *row |= 1 << (k - 1);
                    }
                }
                next.insert(canonical_rows(&adj));
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// Connected graphs on `1..=max_n` vertices, by order then canonical code.
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| all_codes(n).into_iter().map(move |c| from_code(n, c)))
        .filter(Graph::is_connected)
        .collect()
}

/// All graphs on `0..=max_n` vertices.
pub fn all_graphs(max_n: usize) -> Vec<Graph> {
    (0..=max_n).flat_map(|n| all_codes(n).into_iter().map(move |c| from_code(n, c))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn class_counts() {
        let all: Vec<usize> = (0..=6).map(|n| all_codes(n).len()).collect();
        assert_eq!(all, vec![1, 1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6)
            .map(|n| connected_graphs(n).iter().filter(|g| g.vertex_count() == n).count())
            .collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn canonical_codes_are_invariant() {
        let a = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let b = Graph::new(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
        assert_ne!(canonical_code(&cycle(5)), canonical_code(&path(5)));
        let k4 = complete(4);
        assert_eq!(from_code(4, canonical_code(&k4)), k4);
    }
}
