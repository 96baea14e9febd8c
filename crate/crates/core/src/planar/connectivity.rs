use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

fn connected_without(g: &Graph, gone: &[bool]) -> bool {
    let n = g.vertex_count();
    let Some(start) = (0..n).find(|&v| !gone[v]) else { return true };
    let mut seen = gone.to_vec();
    seen[start] = true;
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == n - gone.iter().filter(|&&x| x).count()
}

/// True when no set of at most two vertices separates `g`.
/// Checked by enumerating every vertex and vertex pair.
pub fn three_connected(g: &Graph) -> Result<bool> {
    let n = g.vertex_count();
    if n < 4 {
        return Err(Error::Contract(format!("3-connectivity needs at least 4 vertices, got {n}")));
    }
    let mut gone = vec![false; n];
    if !connected_without(g, &gone) {
        return Ok(false);
    }
    for u in 0..n {
        gone[u] = true;
        if !connected_without(g, &gone) {
            return Ok(false);
        }
        for v in u + 1..n {
            gone[v] = true;
            let ok = connected_without(g, &gone);
            gone[v] = false;
            if !ok {
                return Ok(false);
            }
        }
        gone[u] = false;
    }
    Ok(true)
}

/// Bridges by iterative low-link DFS, sorted by edge id.
pub fn bridges(g: &Graph) -> Vec<EdgeId> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, edge used to enter it, next incident index)
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(top) = stack.last_mut() {
            let (v, via, i) = *top;
            if let Some(&(w, e)) = g.incident(v).get(i) {
                top.2 += 1;
                if Some(e) == via {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, Some(e), 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let (Some(e), Some(&(p, _, _))) = (via, stack.last()) {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        out.push(e);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn is_bridgeless(g: &Graph) -> bool {
    bridges(g).is_empty()
}

/// Connected components left after deleting the edges in `cut`.
pub fn edge_cut_components(g: &Graph, cut: &BTreeSet<EdgeId>) -> Vec<Vec<VertexId>> {
    g.without_edges(cut).components()
}
