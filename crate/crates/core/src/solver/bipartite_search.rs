use std::collections::{BTreeSet, VecDeque};

use super::Witness;
use crate::budget::{Budget, Verdict};
use crate::graph::{is_bipartite, Bipartiteness, EdgeId, Graph, VertexId};
use crate::selection::{SelectionSet, UnicyclicForest};

/// Is there a 1-selection set `S` with `g - S` bipartite?
///
/// Every odd cycle of `g - S` must give up an edge, so the search takes a
/// shortest odd cycle of the residual graph and branches on which of its
/// edges joins `S`; the i-th branch keeps the first `i - 1` edges for good.
/// A branch dies when no cycle edge may join `S` (kept for good, or refused by
/// the unicyclic condition) or when the kept-for-good edges contain an odd
/// cycle themselves.
pub fn decide_robust_bipartite(g: &Graph, budget: &Budget) -> Verdict<Witness> {
    let mut search = Search {
        g,
        budget,
        removed: vec![false; g.edge_count()],
        kept: vec![false; g.edge_count()],
        chosen: Vec::new(),
    };
    match search.solve(&UnicyclicForest::new(g.vertex_count())) {
        Some(true) => {
            let edges: BTreeSet<EdgeId> = search.chosen.iter().copied().collect();
            let selection = SelectionSet::with_assignment(g, edges).expect("forest-checked");
            match is_bipartite(&g.without_edges(selection.edges())) {
                Bipartiteness::Bipartite(coloring) => Verdict::Yes(Witness { selection, coloring }),
                Bipartiteness::OddCycle(_) => unreachable!("search stops only when no odd cycle remains"),
            }
        }
        Some(false) => Verdict::No,
        None => Verdict::Unknown,
    }
}

struct Search<'a> {
    g: &'a Graph,
    budget: &'a Budget,
    removed: Vec<bool>,
    kept: Vec<bool>,
    chosen: Vec<EdgeId>,
}

impl Search<'_> {
    /// `Some(found)` on completion, `None` when the budget ran out.
    fn solve(&mut self, forest: &UnicyclicForest) -> Option<bool> {
        if !self.budget.tick() {
            return None;
        }
        let Some(cycle) = shortest_odd_cycle(self.g, &self.removed) else {
            return Some(true);
        };
        let mut newly_kept = Vec::new();
        let mut result = Some(false);
        for &e in &cycle {
            if self.kept[e] {
                continue;
            }
            let (u, v) = self.g.endpoints(e);
            if forest.can_add(u, v) {
                let mut next = forest.clone();
                next.try_add(u, v);
                self.removed[e] = true;
                self.chosen.push(e);
                let r = self.solve(&next);
                if r != Some(false) {
                    result = r;
                    if r.is_none() {
                        self.chosen.pop();
                        self.removed[e] = false;
                    }
                    break;
                }
                self.chosen.pop();
                self.removed[e] = false;
            }
            self.kept[e] = true;
            newly_kept.push(e);
            if !kept_part_bipartite(self.g, &self.kept) {
                break;
            }
        }
        for e in newly_kept {
            self.kept[e] = false;
        }
        result
    }
}

fn kept_part_bipartite(g: &Graph, kept: &[bool]) -> bool {
    let (sub, _) = g.spanning_subgraph(|e| kept[e]);
    is_bipartite(&sub).is_bipartite()
}

/// Edge ids of a shortest odd cycle of `g` minus the `removed` edges.
pub(crate) fn shortest_odd_cycle(g: &Graph, removed: &[bool]) -> Option<Vec<EdgeId>> {
    let n = g.vertex_count();
    let mut best: Option<(usize, VertexId, VertexId, EdgeId, Vec<Option<(VertexId, EdgeId)>>)> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent: Vec<Option<(VertexId, EdgeId)>> = vec![None; n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        parent.iter_mut().for_each(|p| *p = None);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        'bfs: while let Some(v) = queue.pop_front() {
            if best.as_ref().is_some_and(|b| 2 * dist[v] + 1 >= b.0) {
                break;
            }
            for &(w, e) in g.incident(v) {
                if removed[e] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = Some((v, e));
                    queue.push_back(w);
                } else if dist[w] == dist[v] {
                    let len = 2 * dist[v] + 1;
                    if best.as_ref().is_none_or(|b| len < b.0) {
                        best = Some((len, v, w, e, parent.clone()));
                    }
                    break 'bfs;
                }
            }
        }
        if best.as_ref().is_some_and(|b| b.0 == 3) {
            break;
        }
    }
    let (_, u, w, e, parent) = best?;
    let climb = |mut x: VertexId| {
        let mut path = vec![];
        while let Some((p, pe)) = parent[x] {
            path.push((x, pe));
            x = p;
        }
        path
    };
    let (mut left, mut right) = (climb(u), climb(w));
    // Both paths end at the BFS root; drop their shared tail.
    while let (Some(a), Some(b)) = (left.last(), right.last()) {
        if a.1 != b.1 {
            break;
        }
        left.pop();
        right.pop();
    }
    let mut cycle: Vec<EdgeId> = left.iter().map(|x| x.1).collect();
    cycle.push(e);
    cycle.extend(right.iter().rev().map(|x| x.1));
    Some(cycle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn shortest_odd_cycles() {
        let none = vec![false; 10];
        assert_eq!(shortest_odd_cycle(&cycle(6), &none[..6]), None);
        assert_eq!(shortest_odd_cycle(&cycle(7), &none[..7]).unwrap().len(), 7);
        let p = petersen();
        assert_eq!(shortest_odd_cycle(&p, &[false; 15]).unwrap().len(), 5);
        assert_eq!(shortest_odd_cycle(&complete(5), &none).unwrap().len(), 3);
        let w = wheel(7);
        let mut removed = vec![false; w.edge_count()];
        for v in 0..7 {
            removed[w.edge_id(v, 7).unwrap()] = true;
        }
        assert_eq!(shortest_odd_cycle(&w, &removed).unwrap().len(), 7);
    }

    #[test]
    fn found_cycle_is_a_closed_walk_without_repeats() {
        let g = wheel(9);
        let c = shortest_odd_cycle(&g, &vec![false; g.edge_count()]).unwrap();
        let mut deg = vec![0; g.vertex_count()];
        for &e in &c {
            let (u, v) = g.endpoints(e);
            deg[u] += 1;
            deg[v] += 1;
        }
        assert!(deg.iter().all(|&d| d == 0 || d == 2));
    }
}
