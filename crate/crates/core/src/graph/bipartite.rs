use std::collections::VecDeque;

use super::{Coloring, EdgeId, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite(Coloring),
    /// Edge ids of an odd cycle, in walk order.
    OddCycle(Vec<EdgeId>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite(_))
    }
}

/// BFS 2-colouring; on failure returns an odd cycle through the offending edge.
pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    let n = g.vertex_count();
    let mut side: Vec<Option<usize>> = vec![None; n];
    let mut parent: Vec<Option<(VertexId, EdgeId)>> = vec![None; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in g.incident(v) {
                match side[w] {
                    None => {
                        side[w] = Some(1 - side[v].unwrap());
                        parent[w] = Some((v, e));
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    }
                    Some(c) if c == side[v].unwrap() => {
                        return Bipartiteness::OddCycle(close_cycle(&parent, &depth, v, w, e));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let colors = side.into_iter().map(|c| c.unwrap()).collect();
    Bipartiteness::Bipartite(Coloring::from_colors_unchecked(colors))
}

/// Joins the tree paths from `u` and `v` to their common ancestor with edge `e`.
pub(crate) fn close_cycle(
    parent: &[Option<(VertexId, EdgeId)>],
    depth: &[usize],
    u: VertexId,
    v: VertexId,
    e: EdgeId,
) -> Vec<EdgeId> {
    let (mut a, mut b) = (u, v);
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[a] > depth[b] {
        let (p, pe) = parent[a].unwrap();
        left.push(pe);
        a = p;
    }
    while depth[b] > depth[a] {
        let (p, pe) = parent[b].unwrap();
        right.push(pe);
        b = p;
    }
    while a != b {
        let (pa, ea) = parent[a].unwrap();
        let (pb, eb) = parent[b].unwrap();
        left.push(ea);
        right.push(eb);
        a = pa;
        b = pb;
    }
    // u -> lca, then lca -> v, then v -> u.
    let mut cycle = left;
    cycle.extend(right.into_iter().rev());
    cycle.push(e);
    cycle
}
