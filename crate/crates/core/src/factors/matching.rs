use std::collections::{BTreeSet, VecDeque};
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Matching {
    edges: BTreeSet<EdgeId>,
}

impl Matching {
    /// Checks that no two edges share an endpoint.
    pub fn new(g: &Graph, edges: BTreeSet<EdgeId>) -> Result<Matching> {
        let mut seen = vec![false; g.vertex_count()];
        for &e in &edges {
            g.check_edge(e)?;
            let (u, v) = g.endpoints(e);
            if std::mem::replace(&mut seen[u], true) || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Contract(format!("edge {e} shares an endpoint with another matching edge")));
            }
        }
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> &BTreeSet<EdgeId> {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        2 * self.edges.len() == g.vertex_count()
    }
}

/// Maximum matching by Edmonds' augmenting paths with blossom shrinking;
/// `Some` only when it is perfect. Deterministic: roots and neighbours are
/// scanned in increasing order.
pub fn find_perfect_matching(g: &Graph) -> Option<Matching> {
    let n = g.vertex_count();
    if n % 2 == 1 {
        return None;
    }
    let mut b = Blossom::new(g);
    for root in 0..n {
        if b.mate[root] == NONE {
            let end = b.find_path(root);
            if end == NONE {
                return None;
            }
            b.augment(end);
        }
    }
    let edges = (0..n)
        .filter(|&v| v < b.mate[v])
        .map(|v| g.edge_id(v, b.mate[v]).expect("matched along an edge"))
        .collect();
    Some(Matching { edges })
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<VertexId>,
    parent: Vec<VertexId>,
    base: Vec<VertexId>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn lca(&self, mut a: VertexId, mut b: VertexId) -> VertexId {
        let mut seen = vec![false; self.g.vertex_count()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: VertexId, b: VertexId, mut child: VertexId) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// End of an augmenting path from `root`, or `NONE`.
    fn find_path(&mut self, root: VertexId) -> VertexId {
        let n = self.g.vertex_count();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(to, _) in self.g.incident(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        NONE
    }

    fn augment(&mut self, mut v: VertexId) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

/// Visits every perfect matching once, at most `cap` of them.
///
/// Order: the smallest unmatched vertex is matched to each unmatched
/// neighbour in increasing order. A branch is dropped as soon as some
/// unmatched vertex has no unmatched neighbour left.
pub fn enumerate_perfect_matchings<F>(g: &Graph, cap: Option<usize>, mut visit: F) -> usize
where
    F: FnMut(&Matching) -> ControlFlow<()>,
{
    let n = g.vertex_count();
    if n % 2 == 1 {
        return 0;
    }
    let mut state = Enum { g, cap, matched: vec![false; n], edges: Vec::new(), count: 0 };
    let _ = state.walk(0, &mut visit);
    state.count
}

struct Enum<'a> {
    g: &'a Graph,
    cap: Option<usize>,
    matched: Vec<bool>,
    edges: Vec<EdgeId>,
    count: usize,
}

impl Enum<'_> {
    fn walk<F>(&mut self, from: VertexId, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Matching) -> ControlFlow<()>,
    {
        if self.cap.is_some_and(|c| self.count >= c) {
            return ControlFlow::Break(());
        }
        let Some(v) = (from..self.g.vertex_count()).find(|&v| !self.matched[v]) else {
            self.count += 1;
            let m = Matching { edges: self.edges.iter().copied().collect() };
            return visit(&m);
        };
        self.matched[v] = true;
        for &(w, e) in self.g.incident(v) {
            if self.matched[w] {
                continue;
            }
            self.matched[w] = true;
            let stuck = [v, w].iter().any(|&x| {
                self.g
                    .neighbors(x)
                    .any(|y| !self.matched[y] && self.g.neighbors(y).all(|z| self.matched[z]))
            });
            if !stuck {
                self.edges.push(e);
                let flow = self.walk(v + 1, visit);
                self.edges.pop();
                if flow.is_break() {
                    self.matched[w] = false;
                    self.matched[v] = false;
                    return flow;
                }
            }
            self.matched[w] = false;
        }
        self.matched[v] = false;
        ControlFlow::Continue(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::planar::solids;

    /// Include/exclude over edge ids, sharing nothing with the searches above.
    fn count_by_subsets(g: &Graph) -> usize {
        fn rec(g: &Graph, e: usize, used: &mut Vec<bool>, size: usize) -> usize {
            if 2 * size == g.vertex_count() {
                return 1;
            }
            if e == g.edge_count() {
                return 0;
            }
            let (u, v) = g.endpoints(e);
            let mut total = rec(g, e + 1, used, size);
            if !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                total += rec(g, e + 1, used, size + 1);
                used[u] = false;
                used[v] = false;
            }
            total
        }
        rec(g, 0, &mut vec![false; g.vertex_count()], 0)
    }

    fn count(g: &Graph) -> usize {
        enumerate_perfect_matchings(g, None, |_| ControlFlow::Continue(()))
    }

    #[test]
    fn matching_counts() {
        assert_eq!(count(&complete(4)), 3);
        assert_eq!(count(solids::cube().graph()), 9);
        let dodeca = solids::dodecahedron();
        assert_eq!(count(dodeca.graph()), count_by_subsets(dodeca.graph()));
        assert_eq!(count(dodeca.graph()), 36);
        assert_eq!(count(&petersen()), count_by_subsets(&petersen()));
        assert_eq!(count(&complete(3)), 0);
    }

    #[test]
    fn cap_stops_early() {
        let cube = solids::cube();
        let mut seen = Vec::new();
        let n = enumerate_perfect_matchings(cube.graph(), Some(4), |m| {
            seen.push(m.clone());
            ControlFlow::Continue(())
        });
        assert_eq!((n, seen.len()), (4, 4));
    }

    #[test]
    fn blossom_agrees_with_subset_count() {
        let graphs = [
            complete(3),
            complete(6),
            petersen(),
            cycle(5),
            cycle(8),
            Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]).unwrap(),
            Graph::new(6, [(0, 1), (0, 2), (0, 3), (4, 5)]).unwrap(),
            solids::icosahedron().graph().clone(),
        ];
        for g in &graphs {
            let found = find_perfect_matching(g);
            assert_eq!(found.is_some(), count_by_subsets(g) > 0, "{g:?}");
            if let Some(m) = found {
                let again = Matching::new(g, m.edges().clone()).unwrap();
                assert!(again.is_perfect(g));
            }
        }
    }
}
