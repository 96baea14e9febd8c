//! Simple undirected graphs with dense vertex ids and canonically ordered edge ids.
//!
//! Edge ids are assigned by sorting endpoint pairs `(min, max)` lexicographically,
//! so two graphs with the same edge set always agree on ids. Every witness the
//! solvers produce is phrased in these ids.

mod bipartite;
mod coloring;
mod degeneracy;
pub mod families;
pub mod graph6;
pub mod json;

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub use bipartite::{is_bipartite, Bipartiteness};
pub use coloring::{chromatic_number, greedy_clique, is_k_colorable, Chromatic, Coloring};
pub use degeneracy::{degeneracy, Degeneracy};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    /// `(neighbour, edge id)` sorted by neighbour.
    adj: Vec<Vec<(VertexId, EdgeId)>>,
}

impl Graph {
    /// Builds a simple graph. Loops and repeated pairs are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut pairs = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            pairs.push((u.min(v), u.max(v)));
        }
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MultiEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in pairs.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: pairs, adj })
    }

    pub fn empty(n: usize) -> Graph {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange { edge: e, m: self.edges.len() })
        }
    }

    /// Incident `(neighbour, edge)` pairs, sorted by neighbour.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adj[u]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[u][i].1)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    /// Same vertex set, only edges for which `keep` holds. Returns the new graph
    /// and, for each new edge id, the id it had in `self`.
    pub fn spanning_subgraph(&self, keep: impl Fn(EdgeId) -> bool) -> (Graph, Vec<EdgeId>) {
        let kept: Vec<EdgeId> = (0..self.edges.len()).filter(|&e| keep(e)).collect();
        // Kept edges stay sorted, so the canonical order carries over.
        let g = Graph::new(self.n, kept.iter().map(|&e| self.edges[e]))
            .expect("subgraph of a simple graph is simple");
        (g, kept)
    }

    pub fn without_edges(&self, removed: &BTreeSet<EdgeId>) -> Graph {
        self.spanning_subgraph(|e| !removed.contains(&e)).0
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::new(vertices.len(), edges).expect("induced subgraph is simple")
    }

    /// Connected classes ordered by their smallest vertex; each class is sorted.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut class = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        class.push(w);
                        queue.push_back(w);
                    }
                }
            }
            class.sort_unstable();
            out.push(class);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether the component `comp` has at most one cycle, i.e. `|E| <= |V|`.
    pub fn has_at_most_one_cycle(&self, comp: &[VertexId]) -> Result<bool> {
        let mut inside = vec![false; self.n];
        for &v in comp {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            inside[v] = true;
        }
        let mut edge_ends = 0usize;
        for &v in comp {
            for w in self.neighbors(v) {
                if !inside[w] {
                    return Err(Error::Contract(format!(
                        "vertex set is not closed under adjacency ({v}-{w} leaves it)"
                    )));
                }
                edge_ends += 1;
            }
        }
        if !comp.is_empty() {
            let sub = self.induced_subgraph(comp);
            if !sub.is_connected() {
                return Err(Error::Contract("vertex set is not connected".into()));
            }
        }
        Ok(edge_ends / 2 <= comp.len())
    }

    pub fn complement_edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }
}
