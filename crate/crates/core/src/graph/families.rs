//! Named graphs used throughout the tests and examples.

use super::{Graph, VertexId};

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v)));
    Graph::new(a + b, edges).unwrap()
}

/// `k`-cycle on vertices `0..k` plus a hub `k` adjacent to all of them.
pub fn wheel(k: usize) -> Graph {
    let rim = (0..k).map(|v| (v, (v + 1) % k));
    let spokes = (0..k).map(|v| (v, k));
    Graph::new(k + 1, rim.chain(spokes)).unwrap()
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
}

pub fn from_pairs(n: usize, pairs: &[(VertexId, VertexId)]) -> Graph {
    Graph::new(n, pairs.iter().copied()).unwrap()
}
