use std::ops::ControlFlow;

use super::UnicyclicForest;
use crate::graph::{EdgeId, Graph};

/// Visits every 1-selection set of `g` with at most `max_size` edges, as a
/// sorted edge list, in lexicographic order (the empty set first).
///
/// A branch is cut as soon as an edge would give some component two cycles;
/// no superset of such a set is a selection set. Returns the number visited.
pub fn enumerate_selection_sets<F>(g: &Graph, max_size: usize, mut visit: F) -> usize
where
    F: FnMut(&[EdgeId]) -> ControlFlow<()>,
{
    let mut count = 0;
    let mut current = Vec::new();
    let forest = UnicyclicForest::new(g.vertex_count());
    let _ = walk(g, 0, &forest, &mut current, max_size, &mut visit, &mut count);
    count
}

fn walk<F>(
    g: &Graph,
    from: EdgeId,
    forest: &UnicyclicForest,
    current: &mut Vec<EdgeId>,
    max_size: usize,
    visit: &mut F,
    count: &mut usize,
) -> ControlFlow<()>
where
    F: FnMut(&[EdgeId]) -> ControlFlow<()>,
{
    *count += 1;
    visit(current)?;
    if current.len() >= max_size {
        return ControlFlow::Continue(());
    }
    for e in from..g.edge_count() {
        let (u, v) = g.endpoints(e);
        if !forest.can_add(u, v) {
            continue;
        }
        let mut next = forest.clone();
        next.try_add(u, v);
        current.push(e);
        let flow = walk(g, e + 1, &next, current, max_size, visit, count);
        current.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::selection::is_selection_set;
    use std::collections::BTreeSet;

    fn brute_count(g: &Graph, max: usize) -> usize {
        let m = g.edge_count();
        (0u32..1 << m)
            .filter(|mask| mask.count_ones() as usize <= max)
            .filter(|&mask| {
                let s: BTreeSet<EdgeId> = (0..m).filter(|e| mask >> e & 1 == 1).collect();
                is_selection_set(g, &s)
            })
            .count()
    }

    #[test]
    fn triangle_has_every_subset() {
        let k3 = complete(3);
        let mut seen = Vec::new();
        let n = enumerate_selection_sets(&k3, 3, |s| {
            seen.push(s.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(n, 8);
        assert_eq!(seen[0], Vec::<EdgeId>::new());
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn k4_never_reaches_the_full_edge_set() {
        let k4 = complete(4);
        let mut largest = 0;
        let n = enumerate_selection_sets(&k4, 6, |s| {
            largest = largest.max(s.len());
            ControlFlow::Continue(())
        });
        assert_eq!(largest, 4);
        assert_eq!(n, brute_count(&k4, 6));
    }

    #[test]
    fn matches_subset_filter() {
        for g in [petersen(), wheel(5), complete_bipartite(3, 3)] {
            if g.edge_count() > 16 {
                continue;
            }
            assert_eq!(enumerate_selection_sets(&g, 4, |_| ControlFlow::Continue(())), brute_count(&g, 4));
        }
    }

    #[test]
    fn early_stop() {
        let k4 = complete(4);
        let mut calls = 0;
        enumerate_selection_sets(&k4, 6, |s| {
            calls += 1;
            if s.len() == 2 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        assert_eq!(calls, 3);
    }
}
