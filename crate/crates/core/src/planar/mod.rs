//! Combinatorial plane embeddings as rotation systems.
//!
//! Every edge `e = (u, v)` with `u < v` has two darts: `2e` runs `u -> v` and
//! `2e + 1` runs `v -> u`. The rotation at a vertex lists its incident edge ids
//! in counterclockwise order. Faces are traced with the successor rule
//! `succ(u -> v) = (v -> w)` where `vw` follows `vu` in the rotation at `v`.

mod connectivity;
mod dual;
mod faces;
pub mod format;
pub mod solids;

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

pub use connectivity::{bridges, edge_cut_components, is_bridgeless, three_connected};
pub use dual::{dual, DualMap, DualMultigraph};
pub use faces::{check_planarity, is_quadrangulation, is_triangulation, trace_faces, EulerReport, FaceSet};

pub type Dart = usize;

pub fn dart(e: EdgeId, reversed: bool) -> Dart {
    2 * e + reversed as usize
}

pub fn dart_edge(d: Dart) -> EdgeId {
    d / 2
}

pub fn reverse(d: Dart) -> Dart {
    d ^ 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    graph: Graph,
    rotation: Vec<Vec<EdgeId>>,
    /// Position of each dart's edge in the rotation at the dart's tail.
    dart_pos: Vec<usize>,
}

impl Embedding {
    /// Validates that every vertex lists each incident edge exactly once.
    pub fn new(graph: Graph, rotation: Vec<Vec<EdgeId>>) -> Result<Embedding> {
        let n = graph.vertex_count();
        if rotation.len() != n {
            return Err(Error::Contract(format!(
                "rotation has {} entries for {n} vertices",
                rotation.len()
            )));
        }
        let mut dart_pos = vec![usize::MAX; 2 * graph.edge_count()];
        for (v, rot) in rotation.iter().enumerate() {
            for (i, &e) in rot.iter().enumerate() {
                if e >= graph.edge_count() {
                    return Err(Error::Rotation { vertex: v, message: format!("dangling edge id {e}") });
                }
                let (a, b) = graph.endpoints(e);
                let d = if a == v {
                    dart(e, false)
                } else if b == v {
                    dart(e, true)
                } else {
                    return Err(Error::Rotation {
                        vertex: v,
                        message: format!("edge {e} = ({a},{b}) is not incident"),
                    });
                };
                if dart_pos[d] != usize::MAX {
                    return Err(Error::Rotation { vertex: v, message: format!("edge {e} listed twice") });
                }
                dart_pos[d] = i;
            }
            if rot.len() != graph.degree(v) {
                return Err(Error::Rotation {
                    vertex: v,
                    message: format!("lists {} edges but degree is {}", rot.len(), graph.degree(v)),
                });
            }
        }
        Ok(Embedding { graph, rotation, dart_pos })
    }

    /// Rotation given as counterclockwise neighbour lists.
    pub fn from_neighbor_rotation(graph: Graph, nbrs: &[Vec<VertexId>]) -> Result<Embedding> {
        let mut rotation = Vec::with_capacity(nbrs.len());
        for (v, list) in nbrs.iter().enumerate() {
            let mut rot = Vec::with_capacity(list.len());
            for &w in list {
                let e = graph.edge_id(v, w).ok_or_else(|| Error::Rotation {
                    vertex: v,
                    message: format!("{w} is not a neighbour"),
                })?;
                rot.push(e);
            }
            rotation.push(rot);
        }
        Embedding::new(graph, rotation)
    }

    /// Builds the embedding whose face walks are exactly `faces`, each a cyclic
    /// vertex sequence; every directed edge must occur in exactly one face.
    pub fn from_faces(n: usize, faces: &[Vec<VertexId>]) -> Result<Embedding> {
        let mut pairs = BTreeSet::new();
        for f in faces {
            for i in 0..f.len() {
                let (u, v) = (f[i], f[(i + 1) % f.len()]);
                pairs.insert((u.min(v), u.max(v)));
            }
        }
        let graph = Graph::new(n, pairs)?;
        // next[dart into v] = dart out of v along the same face.
        let mut succ = vec![usize::MAX; 2 * graph.edge_count()];
        for f in faces {
            let k = f.len();
            for i in 0..k {
                let (u, v, w) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
                let din = directed(&graph, u, v)?;
                if succ[din] != usize::MAX {
                    return Err(Error::Contract(format!("directed edge {u}->{v} in two faces")));
                }
                succ[din] = directed(&graph, v, w)?;
            }
        }
        if let Some(d) = succ.iter().position(|&s| s == usize::MAX) {
            return Err(Error::Contract(format!("dart {d} lies on no face")));
        }
        // At v, the edge of dart-into-v is followed by the edge of succ.
        let mut rotation = vec![Vec::new(); n];
        for v in 0..n {
            let inc = graph.incident(v);
            let Some(&(w0, e0)) = inc.first() else { continue };
            let mut rot = vec![e0];
            let mut into = directed(&graph, w0, v)?;
            loop {
                let out = succ[into];
                let e = dart_edge(out);
                if e == e0 {
                    break;
                }
                rot.push(e);
                into = reverse(out);
            }
            if rot.len() != inc.len() {
                return Err(Error::Rotation {
                    vertex: v,
                    message: "faces around the vertex do not form a single disc".into(),
                });
            }
            rotation[v] = rot;
        }
        Embedding::new(graph, rotation)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: VertexId) -> &[EdgeId] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<EdgeId>] {
        &self.rotation
    }

    pub fn dart_count(&self) -> usize {
        2 * self.graph.edge_count()
    }

    pub fn tail(&self, d: Dart) -> VertexId {
        let (u, v) = self.graph.endpoints(dart_edge(d));
        if d % 2 == 0 {
            u
        } else {
            v
        }
    }

    pub fn head(&self, d: Dart) -> VertexId {
        self.tail(reverse(d))
    }

    /// Next dart on the face walk through `d`.
    pub fn succ(&self, d: Dart) -> Dart {
        let v = self.head(d);
        let back = reverse(d);
        let rot = &self.rotation[v];
        let e = rot[(self.dart_pos[back] + 1) % rot.len()];
        self.dart_from(e, v)
    }

    /// The dart of edge `e` leaving `v`.
    pub fn dart_from(&self, e: EdgeId, v: VertexId) -> Dart {
        dart(e, self.graph.endpoints(e).0 != v)
    }

    /// Drops the given edges; rotations keep their relative order. The second
    /// value maps new edge ids to old ones.
    pub fn remove_edges(&self, removed: &BTreeSet<EdgeId>) -> (Embedding, Vec<EdgeId>) {
        let (g, kept) = self.graph.spanning_subgraph(|e| !removed.contains(&e));
        let mut new_id = vec![usize::MAX; self.graph.edge_count()];
        for (i, &e) in kept.iter().enumerate() {
            new_id[e] = i;
        }
        let rotation = self
            .rotation
            .iter()
            .map(|rot| rot.iter().filter(|e| !removed.contains(e)).map(|&e| new_id[e]).collect())
            .collect();
        (Embedding::new(g, rotation).expect("filtered rotation stays valid"), kept)
    }

    /// Mirror image: every rotation reversed.
    pub fn mirrored(&self) -> Embedding {
        let rotation = self.rotation.iter().map(|r| r.iter().rev().copied().collect()).collect();
        Embedding::new(self.graph.clone(), rotation).unwrap()
    }
}

fn directed(g: &Graph, u: VertexId, v: VertexId) -> Result<Dart> {
    let e = g
        .edge_id(u, v)
        .ok_or_else(|| Error::Contract(format!("{u}-{v} is not an edge")))?;
    Ok(dart(e, u > v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_rotations() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let bad = Embedding::new(g.clone(), vec![vec![0], vec![0], vec![1]]);
        assert!(matches!(bad, Err(Error::Rotation { vertex: 1, .. })));
        let dangling = Embedding::new(g.clone(), vec![vec![7], vec![0, 1], vec![1]]);
        assert!(matches!(dangling, Err(Error::Rotation { vertex: 0, .. })));
        let twice = Embedding::new(g, vec![vec![0], vec![0, 0], vec![1]]);
        assert!(twice.is_err());
    }

    #[test]
    fn from_faces_reproduces_walks() {
        let emb = solids::octahedron();
        let faces = trace_faces(&emb);
        assert_eq!(faces.len(), 8);
        for w in faces.walks() {
            assert_eq!(w.len(), 3);
        }
    }
}
