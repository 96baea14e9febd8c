use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::planar::{check_planarity, Embedding};

/// Fragment vertex count, without the three stub ends.
pub const FRAGMENT_ORDER: usize = 15;

/// Local adjacency of the Tutte fragment: vertex 0 carries the edge `a`,
/// vertices 1 and 7 carry `b` and `c`.
const EDGES: [(usize, usize); 21] = [
    (0, 4), (0, 5), (1, 2), (1, 8), (2, 3), (2, 13), (3, 4), (3, 12), (4, 14), (5, 6), (5, 14),
    (6, 7), (6, 10), (7, 8), (8, 9), (9, 10), (9, 13), (10, 11), (11, 12), (11, 14), (12, 13),
];

/// Counterclockwise neighbours; `STUB` stands for the marked edge.
const STUB: usize = usize::MAX;
const ROTATION: [[usize; 3]; FRAGMENT_ORDER] = [
    [5, STUB, 4],
    [8, 2, STUB],
    [13, 3, 1],
    [12, 4, 2],
    [14, 0, 3],
    [14, 6, 0],
    [10, 7, 5],
    [8, STUB, 6],
    [9, 1, 7],
    [10, 13, 8],
    [6, 11, 9],
    [14, 12, 10],
    [3, 13, 11],
    [2, 9, 12],
    [5, 4, 11],
];

/// The three marked edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Port {
    A,
    B,
    C,
}

impl Port {
    pub const ALL: [Port; 3] = [Port::A, Port::B, Port::C];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Fragment vertex carrying this marked edge.
    pub fn local_vertex(self) -> VertexId {
        [0, 1, 7][self.index()]
    }
}

/// The fragment as a plane graph on 18 vertices: the 15 fragment vertices and
/// one pendant end per marked edge (vertex `15 + port`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fragment {
    embedding: Embedding,
    marked: [EdgeId; 3],
    attachments: [VertexId; 3],
}

/// Spanning-path counts between pairs of marked edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathCounts {
    pub ab: usize,
    pub ac: usize,
    pub bc: usize,
}

impl Fragment {
    /// Builds from explicit parts and runs the self-check.
    pub fn from_parts(embedding: Embedding, marked: [EdgeId; 3], attachments: [VertexId; 3]) -> Result<Fragment> {
        let fr = Fragment { embedding, marked, attachments };
        fr.self_check()?;
        Ok(fr)
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    pub fn marked(&self, p: Port) -> EdgeId {
        self.marked[p.index()]
    }

    pub fn attachment(&self, p: Port) -> VertexId {
        self.attachments[p.index()]
    }

    /// The 15-vertex fragment without marked edges.
    pub fn internal(&self) -> Graph {
        self.embedding.graph().induced_subgraph(&(0..FRAGMENT_ORDER).collect::<Vec<_>>())
    }

    /// Counts spanning paths of the fragment that enter and leave through
    /// each pair of marked edges.
    pub fn spanning_path_counts(&self) -> PathCounts {
        let g = self.internal();
        let count = |x: Port, y: Port| spanning_paths(&g, self.attachment(x), self.attachment(y));
        PathCounts { ab: count(Port::A, Port::B), ac: count(Port::A, Port::C), bc: count(Port::B, Port::C) }
    }

    fn self_check(&self) -> Result<()> {
        let g = self.embedding.graph();
        let fail = |m: String| Err(Error::Construction(format!("fragment: {m}")));
        if g.vertex_count() != FRAGMENT_ORDER + 3 || g.edge_count() != EDGES.len() + 3 {
            return fail(format!("expected 18 vertices and 24 edges, got {} and {}", g.vertex_count(), g.edge_count()));
        }
        if let Some(v) = (0..FRAGMENT_ORDER).find(|&v| g.degree(v) != 3) {
            return fail(format!("vertex {v} has degree {}", g.degree(v)));
        }
        for p in Port::ALL {
            let (u, v) = g.endpoints(self.marked(p));
            if u != self.attachment(p) || v != FRAGMENT_ORDER + p.index() || g.degree(v) != 1 {
                return fail(format!("marked edge {p:?} is not a pendant edge at its attachment"));
            }
        }
        let report = check_planarity(&self.embedding);
        if !report.is_planar() {
            return fail(format!("embedding has genus {}", report.genus));
        }
        let counts = self.spanning_path_counts();
        if counts.bc != 0 {
            return fail(format!("{} spanning paths use b and c but avoid a", counts.bc));
        }
        if counts.ab == 0 || counts.ac == 0 {
            return fail("a spanning path through a and b, or a and c, should exist".into());
        }
        Ok(())
    }
}

/// The standard 15-vertex Tutte fragment with marked edges `a`, `b`, `c`.
pub fn tutte_fragment() -> Result<Fragment> {
    let mut edges: Vec<(usize, usize)> = EDGES.to_vec();
    edges.extend(Port::ALL.iter().map(|p| (p.local_vertex(), FRAGMENT_ORDER + p.index())));
    let g = Graph::new(FRAGMENT_ORDER + 3, edges)?;
    let mut nbrs: Vec<Vec<VertexId>> = ROTATION
        .iter()
        .enumerate()
        .map(|(v, rot)| {
            rot.iter()
                .map(|&w| {
                    if w != STUB {
                        return w;
                    }
                    let p = Port::ALL.iter().find(|p| p.local_vertex() == v).expect("stub at an attachment");
                    FRAGMENT_ORDER + p.index()
                })
                .collect()
        })
        .collect();
    nbrs.extend(Port::ALL.iter().map(|p| vec![p.local_vertex()]));
    let emb = Embedding::from_neighbor_rotation(g, &nbrs)?;
    let marked = Port::ALL.map(|p| emb.graph().edge_id(p.local_vertex(), FRAGMENT_ORDER + p.index()).unwrap());
    Fragment::from_parts(emb, marked, Port::ALL.map(Port::local_vertex))
}

/// Number of Hamiltonian paths of `g` from `s` to `t` (exhaustive DFS).
fn spanning_paths(g: &Graph, s: VertexId, t: VertexId) -> usize {
    fn rec(g: &Graph, v: VertexId, t: VertexId, seen: &mut Vec<bool>, left: usize) -> usize {
        if v == t {
            return usize::from(left == 0);
        }
        let mut total = 0;
        for w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                total += rec(g, w, t, seen, left - 1);
                seen[w] = false;
            }
        }
        total
    }
    let mut seen = vec![false; g.vertex_count()];
    seen[s] = true;
    rec(g, s, t, &mut seen, g.vertex_count() - 1)
}

/// One degree-2 edge set of the claim enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trace {
    /// Marked edges in the set.
    pub marked: Vec<Port>,
    /// Lengths of cycles made of fragment edges only.
    pub internal_cycles: Vec<usize>,
    /// The complementary perfect selection of fragment edges (the matching view).
    pub matching: Vec<(VertexId, VertexId)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub traces: Vec<Trace>,
    pub without_a: usize,
    pub with_a: usize,
    /// Traces avoiding `a` that have no cycle away from `b` and `c`.
    pub exceptions: usize,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.exceptions == 0
    }

    /// The matching view of every trace that uses `a`.
    pub fn log_with_a(&self) -> Vec<String> {
        self.traces
            .iter()
            .filter(|t| t.marked.contains(&Port::A))
            .map(|t| {
                let m: Vec<String> = t.matching.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                format!("marked {:?}: matching [{}], internal cycles {:?}", t.marked, m.join(" "), t.internal_cycles)
            })
            .collect()
    }
}

/// Enumerates every set `F` of fragment and marked edges in which each
/// fragment vertex has degree exactly 2, and checks that whenever `a` is not
/// in `F`, some cycle of `F` uses neither `b` nor `c`.
///
/// Each fragment vertex has degree 3 counting its marked edge, so `F` is
/// the complement of an edge set meeting every fragment vertex once; those
/// are enumerated by include/exclude over edge ids.
pub fn verify_claim_two_factor(fr: &Fragment) -> ClaimReport {
    let g = fr.embedding().graph();
    let m = g.edge_count();
    let is_stub = |v: VertexId| v >= FRAGMENT_ORDER;
    let mut traces = Vec::new();
    let mut chosen = Vec::new();
    let mut hit = vec![false; FRAGMENT_ORDER];
    fn rec(
        g: &Graph,
        e: usize,
        m: usize,
        hit: &mut Vec<bool>,
        chosen: &mut Vec<EdgeId>,
        out: &mut Vec<BTreeSet<EdgeId>>,
        is_stub: &dyn Fn(VertexId) -> bool,
    ) {
        if e == m {
            if hit.iter().all(|&h| h) {
                out.push(chosen.iter().copied().collect());
            }
            return;
        }
        rec(g, e + 1, m, hit, chosen, out, is_stub);
        let (u, v) = g.endpoints(e);
        let ends: Vec<VertexId> = [u, v].into_iter().filter(|&x| !is_stub(x)).collect();
        if ends.iter().all(|&x| !hit[x]) {
            ends.iter().for_each(|&x| hit[x] = true);
            chosen.push(e);
            rec(g, e + 1, m, hit, chosen, out, is_stub);
            chosen.pop();
            ends.iter().for_each(|&x| hit[x] = false);
        }
    }
    let mut complements = Vec::new();
    rec(g, 0, m, &mut hit, &mut chosen, &mut complements, &is_stub);
    for comp in complements {
        let f: BTreeSet<EdgeId> = (0..m).filter(|e| !comp.contains(e)).collect();
        debug_assert!((0..FRAGMENT_ORDER).all(|v| g.incident(v).iter().filter(|x| f.contains(&x.1)).count() == 2));
        let marked: Vec<Port> = Port::ALL.into_iter().filter(|&p| f.contains(&fr.marked(p))).collect();
        let internal: BTreeSet<EdgeId> = f.iter().copied().filter(|&e| !Port::ALL.iter().any(|&p| fr.marked(p) == e)).collect();
        let matching = comp
            .iter()
            .filter(|&&e| !Port::ALL.iter().any(|&p| fr.marked(p) == e))
            .map(|&e| g.endpoints(e))
            .collect();
        traces.push(Trace { marked, internal_cycles: closed_components(g, &internal), matching });
    }
    let without_a = traces.iter().filter(|t| !t.marked.contains(&Port::A)).count();
    let exceptions = traces
        .iter()
        .filter(|t| !t.marked.contains(&Port::A) && t.internal_cycles.is_empty())
        .count();
    ClaimReport { without_a, with_a: traces.len() - without_a, exceptions, traces }
}

/// Lengths of the components of `edges` in which every vertex has degree 2.
fn closed_components(g: &Graph, edges: &BTreeSet<EdgeId>) -> Vec<usize> {
    let (sub, _) = g.spanning_subgraph(|e| edges.contains(&e));
    let mut lengths: Vec<usize> = sub
        .components()
        .into_iter()
        .filter(|c| c.len() > 1 && c.iter().all(|&v| sub.degree(v) == 2))
        .map(|c| c.len())
        .collect();
    lengths.sort_unstable();
    lengths
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::trace_faces;

    #[test]
    fn fragment_shape() {
        let fr = tutte_fragment().unwrap();
        let internal = fr.internal();
        assert_eq!(internal.vertex_count(), 15);
        assert_eq!(internal.edge_count(), 21);
        assert_eq!(fr.spanning_path_counts(), PathCounts { ab: 2, ac: 4, bc: 0 });
    }

    #[test]
    fn claim_enumeration_counts() {
        let r = verify_claim_two_factor(&tutte_fragment().unwrap());
        assert_eq!((r.traces.len(), r.without_a, r.with_a), (21, 8, 13));
        assert!(r.passed());
        assert_eq!(r.log_with_a().len(), 13);
    }

    #[test]
    fn stubs_share_the_outer_face() {
        let fr = tutte_fragment().unwrap();
        let faces = trace_faces(fr.embedding());
        let outer: Vec<usize> = Port::ALL.iter().map(|&p| faces.face_of(2 * fr.marked(p))).collect();
        assert!(outer.iter().all(|&f| f == outer[0]));
    }

    #[test]
    fn transcription_error_is_caught() {
        let fr = tutte_fragment().unwrap();
        let emb = fr.embedding().clone();
        // Relabelled marked edges are rejected.
        let swapped = Fragment::from_parts(
            emb,
            [fr.marked(Port::B), fr.marked(Port::A), fr.marked(Port::C)],
            [fr.attachment(Port::B), fr.attachment(Port::A), fr.attachment(Port::C)],
        );
        assert!(swapped.is_err());
    }
}
