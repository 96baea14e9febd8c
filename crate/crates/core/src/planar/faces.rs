use serde::Serialize;

use super::{Dart, Embedding};
use crate::graph::VertexId;

/// Face walks of an embedding, numbered by their smallest dart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    walks: Vec<Vec<Dart>>,
    face_of_dart: Vec<usize>,
    /// Degree-0 vertices. They trace no walk and add 0 to any face length.
    isolated: Vec<VertexId>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.walks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walks.is_empty()
    }

    pub fn walks(&self) -> &[Vec<Dart>] {
        &self.walks
    }

    pub fn walk(&self, f: usize) -> &[Dart] {
        &self.walks[f]
    }

    /// Length of face `f`; a bridge is traversed twice and so counts twice.
    pub fn length(&self, f: usize) -> usize {
        self.walks[f].len()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.walks.iter().map(Vec::len).collect()
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of_dart[d]
    }

    pub fn isolated_vertices(&self) -> &[VertexId] {
        &self.isolated
    }
}

pub fn trace_faces(emb: &Embedding) -> FaceSet {
    let darts = emb.dart_count();
    let mut face_of_dart = vec![usize::MAX; darts];
    let mut walks = Vec::new();
    for start in 0..darts {
        if face_of_dart[start] != usize::MAX {
            continue;
        }
        let id = walks.len();
        let mut walk = Vec::new();
        let mut d = start;
        loop {
            face_of_dart[d] = id;
            walk.push(d);
            d = emb.succ(d);
            if d == start {
                break;
            }
        }
        walks.push(walk);
    }
    let g = emb.graph();
    let isolated = (0..g.vertex_count()).filter(|&v| g.degree(v) == 0).collect();
    FaceSet { walks, face_of_dart, isolated }
}

/// Euler characteristic bookkeeping for an embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub vertices: usize,
    pub edges: usize,
    /// Face walks traced, plus one per isolated vertex.
    pub walks: usize,
    pub components: usize,
    /// Faces of the plane picture: walks of different components that share
    /// a region are counted once, so `V - E + F = 1 + c` when planar.
    pub faces: usize,
    pub genus: usize,
}

impl EulerReport {
    pub fn is_planar(&self) -> bool {
        self.genus == 0
    }
}

/// Computes the genus of the surface the rotation system describes.
/// Planar exactly when `V - E + W = 2c` over traced walks `W`, i.e.
/// `V - E + F = 1 + c` for plane faces `F`.
pub fn check_planarity(emb: &Embedding) -> EulerReport {
    let g = emb.graph();
    let faces = trace_faces(emb);
    let components = g.components().len();
    let walks = faces.len() + faces.isolated_vertices().len();
    let chi = g.vertex_count() as i64 - g.edge_count() as i64 + walks as i64;
    let genus = (2 * components as i64 - chi) / 2;
    debug_assert!(genus >= 0 && (2 * components as i64 - chi) % 2 == 0);
    EulerReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        walks,
        components,
        faces: (walks + 1).saturating_sub(components),
        genus: genus as usize,
    }
}

pub fn is_triangulation(emb: &Embedding) -> bool {
    all_faces_of_length(emb, 3)
}

pub fn is_quadrangulation(emb: &Embedding) -> bool {
    all_faces_of_length(emb, 4)
}

fn all_faces_of_length(emb: &Embedding, k: usize) -> bool {
    let faces = trace_faces(emb);
    check_planarity(emb).is_planar()
        && emb.graph().is_connected()
        && !faces.is_empty()
        && faces.walks().iter().all(|w| w.len() == k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{families, is_bipartite, Graph};
    use crate::planar::solids;

    #[test]
    fn tetrahedron_faces() {
        let f = trace_faces(&solids::tetrahedron());
        assert_eq!(f.lengths(), vec![3, 3, 3, 3]);
    }

    #[test]
    fn bridge_counts_twice() {
        let edge = Embedding::new(families::path(2), vec![vec![0], vec![0]]).unwrap();
        assert_eq!(trace_faces(&edge).lengths(), vec![2]);
        let p3 = Embedding::new(families::path(3), vec![vec![0], vec![0, 1], vec![1]]).unwrap();
        assert_eq!(trace_faces(&p3).lengths(), vec![4]);
        assert!(check_planarity(&p3).is_planar());
    }

    #[test]
    fn hexagon_has_two_faces() {
        let f = trace_faces(&solids::cycle(6));
        assert_eq!(f.lengths(), vec![6, 6]);
    }

    #[test]
    fn octahedron_planar_and_triangulated() {
        let oct = solids::octahedron();
        let r = check_planarity(&oct);
        assert!(r.is_planar());
        assert_eq!(r.faces, 8);
        assert!(is_triangulation(&oct));
        let cube = solids::cube();
        assert!(is_quadrangulation(&cube));
        assert!(is_bipartite(cube.graph()).is_bipartite());
    }

    #[test]
    fn k5_is_never_planar() {
        // Euler count for the rotation "neighbours in increasing order".
        let k5 = families::complete(5);
        let nbrs: Vec<Vec<usize>> = (0..5).map(|v| k5.neighbors(v).collect()).collect();
        let emb = Embedding::from_neighbor_rotation(k5, &nbrs).unwrap();
        let r = check_planarity(&emb);
        assert!(r.walks < 7, "planarity would need 7 faces");
        assert!(r.genus >= 1);
    }

    #[test]
    fn two_disjoint_triangles() {
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let nbrs: Vec<Vec<usize>> = (0..6).map(|v| g.neighbors(v).collect()).collect();
        let emb = Embedding::from_neighbor_rotation(g, &nbrs).unwrap();
        let r = check_planarity(&emb);
        assert!(r.is_planar());
        assert_eq!(r.components, 2);
        assert_eq!(r.faces, 3);
        assert_eq!(6 - 6 + r.faces, 1 + r.components);
    }

    #[test]
    fn isolated_vertices_are_flagged() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let emb = Embedding::new(g, vec![vec![0], vec![0], vec![]]).unwrap();
        let f = trace_faces(&emb);
        assert_eq!(f.isolated_vertices(), &[2]);
        assert!(check_planarity(&emb).is_planar());
    }
}
