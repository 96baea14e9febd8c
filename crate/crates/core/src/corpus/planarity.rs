//! Planarity of small graphs by searching for a K5 or K3,3 minor.

use std::collections::HashMap;

use super::enumerate::{canonical_rows, rows};
use crate::graph::Graph;

/// Planarity test for graphs on at most eight vertices.
pub fn is_planar_small(g: &Graph) -> bool {
    let mut memo = HashMap::new();
    !has_kuratowski_minor(&rows(g), &mut memo)
}

/// Outerplanar exactly when adding a vertex adjacent to everything keeps it planar.
pub fn is_outerplanar_small(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    edges.extend((0..n).map(|v| (v, n)));
    is_planar_small(&Graph::new(n + 1, edges).unwrap())
}

fn edge_count(adj: &[u8]) -> usize {
    adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
}

fn delete_vertex(adj: &[u8], v: usize) -> Vec<u8> {
    let low = (1u16 << v) as u8 - 1;
    adj.iter()
        .enumerate()
        .filter(|&(u, _)| u != v)
        .map(|(_, &r)| (r & low) | ((r >> 1) & !low))
        .collect()
}

fn contract(adj: &[u8], u: usize, v: usize) -> Vec<u8> {
    // Merge v into u, then drop v.
    let mut a = adj.to_vec();
    let merged = (a[u] | a[v]) & !(1 << u) & !(1 << v);
    a[u] = merged;
    for (w, row) in a.iter_mut().enumerate() {
        if merged >> w & 1 == 1 {
            *row |= 1 << u;
        }
    }
    delete_vertex(&a, v)
}

fn has_kuratowski_minor(adj: &[u8], memo: &mut HashMap<(usize, u32), bool>) -> bool {
    let n = adj.len();
    let m = edge_count(adj);
    if m < 9 || n < 5 {
        return false;
    }
    if m > 3 * n - 6 {
        return true;
    }
    if n == 6 && contains_k33(adj) {
        return true;
    }
    let key = (n, canonical_rows(adj));
    if let Some(&r) = memo.get(&key) {
        return r;
    }
    let mut found = (0..n).any(|v| has_kuratowski_minor(&delete_vertex(adj, v), memo));
    for u in 0..n {
        for v in u + 1..n {
            if found {
                break;
            }
            if adj[u] >> v & 1 == 1 {
                let mut del = adj.to_vec();
                del[u] &= !(1 << v);
                del[v] &= !(1 << u);
                found = has_kuratowski_minor(&del, memo) || has_kuratowski_minor(&contract(adj, u, v), memo);
            }
        }
    }
    memo.insert(key, found);
    found
}

fn contains_k33(adj: &[u8]) -> bool {
    (0u8..64).filter(|s| s.count_ones() == 3 && s & 1 == 1).any(|side| {
        let other = !side & 0x3f;
        (0..6).filter(|v| side >> v & 1 == 1).all(|v| adj[v] & other == other)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::planar::solids;

    #[test]
    fn kuratowski_graphs() {
        assert!(!is_planar_small(&complete(5)));
        assert!(!is_planar_small(&complete_bipartite(3, 3)));
        assert!(is_planar_small(&complete(4)));
        assert!(is_planar_small(solids::cube().graph()));
        assert!(is_planar_small(solids::octahedron().graph()));
        assert!(is_planar_small(&wheel(7)));
        // Subdivided K3,3 has only 7 vertices and 10 edges.
        let mut e: Vec<(usize, usize)> = vec![(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4)];
        e.extend([(2, 6), (6, 5)]);
        assert!(!is_planar_small(&Graph::new(7, e).unwrap()));
    }

    #[test]
    fn connected_planar_counts() {
        let counts: Vec<usize> = (1..=7)
            .map(|n| {
                crate::corpus::connected_graphs(n)
                    .iter()
                    .filter(|g| g.vertex_count() == n && is_planar_small(g))
                    .count()
            })
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 20, 99, 646]);
    }

    #[test]
    fn outerplanarity() {
        assert!(is_outerplanar_small(&cycle(6)));
        assert!(!is_outerplanar_small(&complete(4)));
        assert!(!is_outerplanar_small(&complete_bipartite(2, 3)));
        assert!(is_outerplanar_small(&path(5)));
    }
}
