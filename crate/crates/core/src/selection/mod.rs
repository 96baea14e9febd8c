//! 1-selections and 1-selection sets.
//!
//! An edge set is a 1-selection set exactly when every component of the graph
//! it induces has at most one cycle. [`build_assignment`] turns such a set into
//! an explicit selection `f` by orienting each component towards its vertices.

mod enumerate;
mod forest;

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_bipartite, EdgeId, Graph, VertexId};

pub use enumerate::enumerate_selection_sets;
pub use forest::UnicyclicForest;

/// Per-vertex selected edge; `None` is the empty selection.
pub type Assignment = Vec<Option<EdgeId>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelectionSet {
    edges: BTreeSet<EdgeId>,
    assignment: Option<Assignment>,
}

impl SelectionSet {
    /// Checks the unicyclic condition; no assignment is attached.
    pub fn new(g: &Graph, edges: BTreeSet<EdgeId>) -> Result<SelectionSet> {
        if let Some(err) = first_violation(g, &edges)? {
            return Err(err);
        }
        Ok(SelectionSet { edges, assignment: None })
    }

    /// Checks the set and attaches the constructive assignment.
    pub fn with_assignment(g: &Graph, edges: BTreeSet<EdgeId>) -> Result<SelectionSet> {
        let assignment = build_assignment(g, &edges)?;
        Ok(SelectionSet { edges, assignment: Some(assignment) })
    }

    pub fn empty() -> SelectionSet {
        SelectionSet { edges: BTreeSet::new(), assignment: None }
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

    pub fn assignment(&self) -> Option<&Assignment> {
        self.assignment.as_ref()
    }

    /// Re-checks every structural invariant against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if let Some(err) = first_violation(g, &self.edges)? {
            return Err(err);
        }
        if let Some(a) = &self.assignment {
            check_assignment(g, a, &self.edges)?;
        }
        Ok(())
    }
}

/// Validates that `a` is a 1-selection of `g` whose image is `edges`.
pub fn check_assignment(g: &Graph, a: &Assignment, edges: &BTreeSet<EdgeId>) -> Result<()> {
    if a.len() != g.vertex_count() {
        return Err(Error::Contract("assignment length differs from vertex count".into()));
    }
    let mut image = BTreeSet::new();
    for (v, slot) in a.iter().enumerate() {
        if let Some(e) = *slot {
            g.check_edge(e)?;
            let (x, y) = g.endpoints(e);
            if x != v && y != v {
                return Err(Error::Contract(format!("edge {e} assigned to non-incident vertex {v}")));
            }
            if !image.insert(e) {
                return Err(Error::Contract(format!("edge {e} assigned twice")));
            }
        }
    }
    if &image != edges {
        return Err(Error::Contract("assignment image differs from the edge set".into()));
    }
    Ok(())
}

/// `G[S]`: the graph on the endpoints of `s` with exactly the edges `s`.
/// Also returns the host vertex of each new vertex.
pub fn induced_by_edges(g: &Graph, s: &BTreeSet<EdgeId>) -> Result<(Graph, Vec<VertexId>)> {
    let mut ends = BTreeSet::new();
    for &e in s {
        g.check_edge(e)?;
        let (u, v) = g.endpoints(e);
        ends.insert(u);
        ends.insert(v);
    }
    let verts: Vec<VertexId> = ends.into_iter().collect();
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in verts.iter().enumerate() {
        index[v] = i;
    }
    let edges = s.iter().map(|&e| {
        let (u, v) = g.endpoints(e);
        (index[u], index[v])
    });
    Ok((Graph::new(verts.len(), edges)?, verts))
}

/// The first unicyclicity violation of `s`, reported as a [`Error::NotSelection`].
pub fn first_violation(g: &Graph, s: &BTreeSet<EdgeId>) -> Result<Option<Error>> {
    let (h, verts) = induced_by_edges(g, s)?;
    for comp in h.components() {
        if !h.has_at_most_one_cycle(&comp)? {
            let edges = comp.iter().map(|&v| h.degree(v)).sum::<usize>() / 2;
            return Ok(Some(Error::NotSelection {
                component: comp.iter().map(|&v| verts[v]).collect(),
                edges,
                vertices: comp.len(),
            }));
        }
    }
    Ok(None)
}

/// Whether every component of `G[S]` has at most one cycle.
pub fn is_selection_set(g: &Graph, s: &BTreeSet<EdgeId>) -> bool {
    matches!(first_violation(g, s), Ok(None))
}

/// Realises a selection set as a 1-selection.
///
/// In a tree component the smallest vertex is the root and gets nothing; every
/// other vertex takes the edge towards its parent. In a unicyclic component the
/// cycle is oriented circularly (from its smallest vertex towards that
/// vertex's smaller cycle neighbour), each cycle vertex takes its incoming
/// cycle edge, and the attached trees are oriented away from the cycle.
pub fn build_assignment(g: &Graph, s: &BTreeSet<EdgeId>) -> Result<Assignment> {
    let n = g.vertex_count();
    let mut adj: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); n];
    for &e in s {
        g.check_edge(e)?;
        let (u, v) = g.endpoints(e);
        adj[u].push((v, e));
        adj[v].push((u, e));
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut assignment: Assignment = vec![None; n];
    let mut comp_of = vec![usize::MAX; n];
    let mut next_comp = 0;
    for start in 0..n {
        if comp_of[start] != usize::MAX || adj[start].is_empty() {
            continue;
        }
        let mut comp = vec![start];
        comp_of[start] = next_comp;
        let mut i = 0;
        while i < comp.len() {
            for &(w, _) in &adj[comp[i]] {
                if comp_of[w] == usize::MAX {
                    comp_of[w] = next_comp;
                    comp.push(w);
                }
            }
            i += 1;
        }
        next_comp += 1;
        comp.sort_unstable();
        let edges = comp.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
        if edges > comp.len() {
            let vertices = comp.len();
            return Err(Error::NotSelection { component: comp, edges, vertices });
        }
        let roots = if edges + 1 == comp.len() {
            vec![comp[0]]
        } else {
            orient_cycle(&adj, &comp, &mut assignment)
        };
        // Trees hanging off the roots point away from them.
        let mut done: BTreeSet<VertexId> = roots.iter().copied().collect();
        let mut queue: VecDeque<VertexId> = roots.into();
        while let Some(v) = queue.pop_front() {
            for &(w, e) in &adj[v] {
                if done.insert(w) {
                    assignment[w] = Some(e);
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(assignment)
}

/// Assigns the circular orientation of the unique cycle; returns its vertices.
fn orient_cycle(adj: &[Vec<(VertexId, EdgeId)>], comp: &[VertexId], a: &mut Assignment) -> Vec<VertexId> {
    // Peel leaves until only the cycle remains.
    let mut deg: std::collections::BTreeMap<VertexId, usize> =
        comp.iter().map(|&v| (v, adj[v].len())).collect();
    let mut leaves: Vec<VertexId> = comp.iter().copied().filter(|v| deg[v] == 1).collect();
    while let Some(v) = leaves.pop() {
        deg.insert(v, 0);
        for &(w, _) in &adj[v] {
            let d = deg.get_mut(&w).unwrap();
            if *d > 0 {
                *d -= 1;
                if *d == 1 {
                    leaves.push(w);
                }
            }
        }
    }
    let on_cycle: Vec<VertexId> = comp.iter().copied().filter(|v| deg[v] >= 2).collect();
    let in_cycle = |v: VertexId| deg.get(&v).is_some_and(|&d| d >= 2);
    let first = on_cycle[0];
    let (mut prev, mut cur) = (first, first);
    let mut via = None;
    loop {
        // Smallest admissible cycle neighbour; never step back along `via`.
        let step = adj[cur]
            .iter()
            .filter(|&&(w, e)| in_cycle(w) && Some(e) != via)
            .find(|&&(w, _)| w != prev || on_cycle.len() == 2)
            .copied();
        let (w, e) = step.expect("cycle continues");
        a[w] = Some(e);
        via = Some(e);
        prev = cur;
        cur = w;
        if cur == first {
            break;
        }
    }
    on_cycle
}

/// `G - S` together with the set removed.
#[derive(Debug, Clone)]
pub struct RemovedGraph {
    pub removed: SelectionSet,
    pub result: Graph,
}

pub fn remove(g: &Graph, s: &SelectionSet) -> RemovedGraph {
    RemovedGraph { removed: s.clone(), result: g.without_edges(s.edges()) }
}

/// `g - s` is bipartite.
pub fn guarantees_bipartite(g: &Graph, s: &BTreeSet<EdgeId>) -> bool {
    is_bipartite(&g.without_edges(s)).is_bipartite()
}

/// Shrinks a bipartiteness-guaranteeing selection set to a minimal one.
///
/// Scans `s` in canonical edge order, drops the first edge whose removal keeps
/// `g - s` bipartite, and restarts the scan, until no edge can be dropped.
pub fn minimalize(g: &Graph, s: &BTreeSet<EdgeId>) -> Result<BTreeSet<EdgeId>> {
    if let Some(err) = first_violation(g, s)? {
        return Err(err);
    }
    if !guarantees_bipartite(g, s) {
        return Err(Error::NotBipartiteAfterRemoval);
    }
    let mut cur = s.clone();
    'scan: loop {
        for &e in cur.iter() {
            let mut smaller = cur.clone();
            smaller.remove(&e);
            if guarantees_bipartite(g, &smaller) {
                cur = smaller;
                continue 'scan;
            }
        }
        return Ok(cur);
    }
}

/// Every edge of `s` is needed: dropping any one breaks bipartiteness of `g - s`.
pub fn is_minimal(g: &Graph, s: &BTreeSet<EdgeId>) -> bool {
    guarantees_bipartite(g, s)
        && s.iter().all(|&e| {
            let mut t = s.clone();
            t.remove(&e);
            !guarantees_bipartite(g, &t)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn all(g: &Graph) -> BTreeSet<EdgeId> {
        (0..g.edge_count()).collect()
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = complete(4);
        let (h, _) = induced_by_edges(&k4, &BTreeSet::new()).unwrap();
        assert_eq!(h.vertex_count(), 0);
        let tri: BTreeSet<EdgeId> = [(0, 1), (0, 2), (1, 2)].iter().map(|&(u, v)| k4.edge_id(u, v).unwrap()).collect();
        let (h, verts) = induced_by_edges(&k4, &tri).unwrap();
        assert_eq!(h, complete(3));
        assert_eq!(verts, vec![0, 1, 2]);
        let star = Graph::new(5, [(0, 1), (0, 2)]).unwrap();
        let (h, verts) = induced_by_edges(&star, &all(&star)).unwrap();
        assert_eq!((h.vertex_count(), verts), (3, vec![0, 1, 2]));
        assert!(matches!(induced_by_edges(&k4, &[9].into()), Err(Error::EdgeOutOfRange { edge: 9, .. })));
    }

    #[test]
    fn recognition() {
        let k4 = complete(4);
        assert!(is_selection_set(&k4, &[0, 5].into()));
        assert!(is_selection_set(&complete(3), &all(&complete(3))));
        assert!(!is_selection_set(&k4, &all(&k4)));
        match SelectionSet::new(&k4, all(&k4)) {
            Err(Error::NotSelection { component, edges: 6, vertices: 4 }) => assert_eq!(component, vec![0, 1, 2, 3]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn assignment_on_a_path_leaves_the_root_empty() {
        let p = path(3);
        let a = build_assignment(&p, &all(&p)).unwrap();
        assert_eq!(a, vec![None, Some(0), Some(1)]);
    }

    #[test]
    fn assignment_on_a_triangle_is_circular() {
        let k3 = complete(3);
        let a = build_assignment(&k3, &all(&k3)).unwrap();
        assert!(a.iter().all(Option::is_some));
        check_assignment(&k3, &a, &all(&k3)).unwrap();
        // 0 -> 1 -> 2 -> 0: vertex 1 takes {0,1}, 2 takes {1,2}, 0 takes {0,2}.
        assert_eq!(a, vec![Some(1), Some(0), Some(2)]);
    }

    #[test]
    fn empty_assignment() {
        let k4 = complete(4);
        assert_eq!(build_assignment(&k4, &BTreeSet::new()).unwrap(), vec![None; 4]);
        assert!(build_assignment(&k4, &all(&k4)).is_err());
    }

    #[test]
    fn removal() {
        let k3 = complete(3);
        let r = remove(&k3, &SelectionSet::empty());
        assert_eq!(r.result, k3);
        let all3 = SelectionSet::with_assignment(&k3, all(&k3)).unwrap();
        let r = remove(&k3, &all3);
        assert_eq!(r.result.edge_count(), 0);
        assert_eq!(r.result.vertex_count(), 3);
    }

    #[test]
    fn minimalize_cases() {
        let c4 = cycle(4);
        assert!(minimalize(&c4, &[0, 1].into()).unwrap().is_empty());
        let k3 = complete(3);
        let m = minimalize(&k3, &all(&k3)).unwrap();
        assert_eq!(m.len(), 1);
        assert!(is_minimal(&k3, &m));
        let k4 = complete(4);
        assert!(matches!(minimalize(&k4, &all(&k4)), Err(Error::NotSelection { .. })));
        assert!(matches!(minimalize(&k4, &[0].into()), Err(Error::NotBipartiteAfterRemoval)));
    }
}
