use std::collections::BTreeSet;

use super::{check_planarity, dart_edge, trace_faces, Dart, Embedding, FaceSet};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// The geometric dual before simplicity is known: one vertex per face, dual
/// edge `e*` (indexed like the primal edge `e`) joining the faces on either side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualMultigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    /// Per dual vertex, the primal darts of its face walk.
    rotation: Vec<Vec<Dart>>,
}

impl DualMultigraph {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, f: usize) -> usize {
        self.rotation[f].len()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = BTreeSet::new();
        !self.edges.iter().all(|&(a, b)| seen.insert((a.min(b), a.max(b))))
    }

    pub fn is_simple(&self) -> bool {
        !self.has_loops() && !self.has_parallel_edges()
    }
}

/// Primal/dual correspondence `e <-> e*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualMap {
    faces: FaceSet,
    multigraph: DualMultigraph,
    /// Present when the dual is simple.
    simple: Option<Embedding>,
    primal_to_dual: Vec<EdgeId>,
    dual_to_primal: Vec<EdgeId>,
}

impl DualMap {
    pub fn faces(&self) -> &FaceSet {
        &self.faces
    }

    pub fn multigraph(&self) -> &DualMultigraph {
        &self.multigraph
    }

    pub fn is_simple(&self) -> bool {
        self.simple.is_some()
    }

    /// The dual as a plane simple graph.
    pub fn embedding(&self) -> Result<&Embedding> {
        self.simple.as_ref().ok_or(Error::NonSimpleDual)
    }

    pub fn graph(&self) -> Result<&Graph> {
        self.embedding().map(Embedding::graph)
    }

    pub fn dual_edge(&self, e: EdgeId) -> EdgeId {
        self.primal_to_dual[e]
    }

    pub fn primal_edge(&self, e_star: EdgeId) -> EdgeId {
        self.dual_to_primal[e_star]
    }

    /// `S -> S*`.
    pub fn to_dual(&self, s: &BTreeSet<EdgeId>) -> BTreeSet<EdgeId> {
        s.iter().map(|&e| self.primal_to_dual[e]).collect()
    }

    /// `S* -> S`.
    pub fn to_primal(&self, s_star: &BTreeSet<EdgeId>) -> BTreeSet<EdgeId> {
        s_star.iter().map(|&e| self.dual_to_primal[e]).collect()
    }

    /// The dual vertex (primal face) on each side of primal edge `e`.
    pub fn faces_of_edge(&self, e: EdgeId) -> (usize, usize) {
        self.multigraph.edges[e]
    }
}

/// Geometric dual of a connected plane embedding.
///
/// The rotation at a dual vertex is the edge sequence of its face walk, which
/// makes the faces of the dual walk around the primal vertices in rotation
/// order; dualising twice gives back the primal rotation up to relabelling.
pub fn dual(emb: &Embedding) -> Result<DualMap> {
    let report = check_planarity(emb);
    if !report.is_planar() {
        return Err(Error::NotPlanar { genus: report.genus });
    }
    if report.components > 1 {
        return Err(Error::Disconnected);
    }
    let faces = trace_faces(emb);
    let m = emb.graph().edge_count();
    let edges: Vec<(usize, usize)> =
        (0..m).map(|e| (faces.face_of(2 * e), faces.face_of(2 * e + 1))).collect();
    let rotation: Vec<Vec<Dart>> = faces.walks().to_vec();
    let multigraph = DualMultigraph { vertex_count: faces.len(), edges, rotation };

    if !multigraph.is_simple() {
        let identity: Vec<EdgeId> = (0..m).collect();
        return Ok(DualMap {
            faces,
            multigraph,
            simple: None,
            primal_to_dual: identity.clone(),
            dual_to_primal: identity,
        });
    }
    let g = Graph::new(multigraph.vertex_count, multigraph.edges.iter().copied())?;
    let primal_to_dual: Vec<EdgeId> = multigraph
        .edges
        .iter()
        .map(|&(a, b)| g.edge_id(a, b).expect("dual edge present"))
        .collect();
    let mut dual_to_primal = vec![0; m];
    for (e, &d) in primal_to_dual.iter().enumerate() {
        dual_to_primal[d] = e;
    }
    let dual_rotation = multigraph
        .rotation
        .iter()
        .map(|walk| walk.iter().map(|&d| primal_to_dual[dart_edge(d)]).collect())
        .collect();
    let simple = Embedding::new(g, dual_rotation)?;
    Ok(DualMap { faces, multigraph, simple: Some(simple), primal_to_dual, dual_to_primal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use crate::planar::{is_bridgeless, solids};

    /// Brute-force isomorphism over all vertex permutations (small graphs only).
    fn isomorphic(a: &Graph, b: &Graph) -> bool {
        let n = a.vertex_count();
        if n != b.vertex_count() || a.edge_count() != b.edge_count() {
            return false;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        fn rec(a: &Graph, b: &Graph, perm: &mut Vec<usize>, k: usize) -> bool {
            if k == perm.len() {
                return a.edges().iter().all(|&(u, v)| b.has_edge(perm[u], perm[v]));
            }
            for i in k..perm.len() {
                perm.swap(k, i);
                let ok = (0..k).all(|j| a.has_edge(j, k) == b.has_edge(perm[j], perm[k]))
                    && a.degree(k) == b.degree(perm[k]);
                if ok && rec(a, b, perm, k + 1) {
                    return true;
                }
                perm.swap(k, i);
            }
            false
        }
        rec(a, b, &mut perm, 0)
    }

    fn explicit_cube() -> Graph {
        let edges = (0..8usize)
            .flat_map(|u| (0..3).map(move |i| (u, u ^ (1 << i))))
            .filter(|&(u, v)| u < v);
        Graph::new(8, edges).unwrap()
    }

    #[test]
    fn tetrahedron_is_self_dual() {
        let d = dual(&solids::tetrahedron()).unwrap();
        assert!(isomorphic(d.graph().unwrap(), &families::complete(4)));
    }

    #[test]
    fn octahedron_dual_is_cube_and_back() {
        let oct = solids::octahedron();
        let d = dual(&oct).unwrap();
        let cube = d.graph().unwrap();
        assert!(cube.is_regular(3));
        assert!(isomorphic(cube, &explicit_cube()));
        assert!(is_bridgeless(cube));
        let dd = dual(d.embedding().unwrap()).unwrap();
        assert!(isomorphic(dd.graph().unwrap(), oct.graph()));
    }

    #[test]
    fn dual_faces_are_primal_vertices() {
        for emb in [solids::icosahedron(), solids::octahedron(), solids::bipyramid(5)] {
            let d = dual(&emb).unwrap();
            let star = d.embedding().unwrap();
            let back = trace_faces(star);
            assert_eq!(back.len(), emb.graph().vertex_count());
            let mut stars: Vec<BTreeSet<EdgeId>> = back
                .walks()
                .iter()
                .map(|w| w.iter().map(|&x| d.primal_edge(dart_edge(x))).collect())
                .collect();
            let mut expected: Vec<BTreeSet<EdgeId>> = (0..emb.graph().vertex_count())
                .map(|v| emb.graph().incident(v).iter().map(|&(_, e)| e).collect())
                .collect();
            stars.sort();
            expected.sort();
            assert_eq!(stars, expected);
            for f in 0..d.multigraph().vertex_count() {
                assert_eq!(d.multigraph().degree(f), d.faces().length(f));
            }
        }
    }

    #[test]
    fn cycle_dual_is_a_multigraph() {
        let d = dual(&solids::cycle(6)).unwrap();
        assert_eq!(d.multigraph().vertex_count(), 2);
        assert!(d.multigraph().has_parallel_edges());
        assert!(matches!(d.embedding(), Err(Error::NonSimpleDual)));
    }

    #[test]
    fn rejects_non_planar() {
        let k5 = families::complete(5);
        let nbrs: Vec<Vec<usize>> = (0..5).map(|v| k5.neighbors(v).collect()).collect();
        let emb = Embedding::from_neighbor_rotation(k5, &nbrs).unwrap();
        assert!(matches!(dual(&emb), Err(Error::NotPlanar { .. })));
    }
}
