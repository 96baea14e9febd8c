//! Necessary conditions on minimal bipartiteness-guaranteeing selection sets
//! of plane triangulations, checked against an explicit set `S`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::planar::{dart_edge, trace_faces, DualMap, Embedding};
use crate::selection::induced_by_edges;

/// One component of `G*[S*]` in a cubic dual.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PackingPiece {
    K2(usize, usize),
    Claw { center: usize, leaves: [usize; 3] },
}

/// A vertex-disjoint cover of the dual by edges and claws.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanningPackingShape {
    pub pieces: Vec<PackingPiece>,
}

impl SpanningPackingShape {
    /// Reads the components of `dual[s_star]`; `None` unless they are all
    /// edges or claws and cover every vertex.
    pub fn from_edges(dual: &Graph, s_star: &BTreeSet<EdgeId>) -> Option<SpanningPackingShape> {
        let (h, verts) = induced_by_edges(dual, s_star).ok()?;
        if verts.len() != dual.vertex_count() {
            return None;
        }
        let mut pieces = Vec::new();
        for comp in h.components() {
            let edges = comp.iter().map(|&v| h.degree(v)).sum::<usize>() / 2;
            match (comp.len(), edges) {
                (2, 1) => pieces.push(PackingPiece::K2(verts[comp[0]], verts[comp[1]])),
                (4, 3) => {
                    let &c = comp.iter().find(|&&v| h.degree(v) == 3)?;
                    let mut leaves = [0; 3];
                    for (slot, w) in leaves.iter_mut().zip(h.neighbors(c)) {
                        *slot = verts[w];
                    }
                    pieces.push(PackingPiece::Claw { center: verts[c], leaves });
                }
                _ => return None,
            }
        }
        Some(SpanningPackingShape { pieces })
    }

    pub fn claws(&self) -> usize {
        self.pieces.iter().filter(|p| matches!(p, PackingPiece::Claw { .. })).count()
    }

    pub fn within_claw_quota(&self) -> bool {
        self.claws() <= 2
    }
}

/// For each face of `emb`, how many of its edges lie in `s`.
pub fn face_hits(emb: &Embedding, s: &BTreeSet<EdgeId>) -> Vec<usize> {
    trace_faces(emb)
        .walks()
        .iter()
        .map(|w| w.iter().filter(|&&d| s.contains(&dart_edge(d))).count())
        .collect()
}

/// Boundary components of every face of `G* - S*`, one entry per face in
/// order of the smallest primal vertex inside it. A dual vertex left without
/// edges is a degenerate boundary of the face around it.
///
/// Computed geometrically from face walks: each walk of `G* - S*` is matched
/// to the face of `G*` (a primal vertex) on its side, and primal vertices
/// joined by `S` share a face.
pub fn boundary_cycle_counts(primal: &Embedding, dmap: &DualMap, s: &BTreeSet<EdgeId>) -> Result<Vec<usize>> {
    let dual = dmap.embedding()?;
    let g = primal.graph();
    let s_star = dmap.to_dual(s);
    // Primal vertex at the centre of each face of G*.
    let dual_faces = trace_faces(dual);
    let centre: Vec<VertexId> = dual_faces
        .walks()
        .iter()
        .map(|w| {
            let a = g.endpoints(dmap.primal_edge(dart_edge(w[0])));
            let b = g.endpoints(dmap.primal_edge(dart_edge(w[1 % w.len()])));
            if a.0 == b.0 || a.0 == b.1 {
                a.0
            } else {
                a.1
            }
        })
        .collect();
    // Region of each primal vertex: its component under S.
    let mut region: Vec<VertexId> = (0..g.vertex_count()).collect();
    fn root(r: &mut [VertexId], mut v: VertexId) -> VertexId {
        while r[v] != v {
            r[v] = r[r[v]];
            v = r[v];
        }
        v
    }
    for &e in s {
        let (u, v) = g.endpoints(e);
        let (a, b) = (root(&mut region, u), root(&mut region, v));
        region[a.max(b)] = a.min(b);
    }
    let (rest, kept) = dual.remove_edges(&s_star);
    let mut counts: BTreeMap<VertexId, usize> = BTreeMap::new();
    for w in trace_faces(&rest).walks() {
        let d = 2 * kept[dart_edge(w[0])] + (w[0] & 1);
        *counts.entry(root(&mut region, centre[dual_faces.face_of(d)])).or_default() += 1;
    }
    for f in 0..dual.graph().vertex_count() {
        if rest.graph().degree(f) == 0 {
            let &e = dual.rotation(f).first().ok_or(Error::Internal("isolated dual vertex".into()))?;
            let d = dual.dart_from(e, f);
            *counts.entry(root(&mut region, centre[dual_faces.face_of(d)])).or_default() += 1;
        }
    }
    // Minimum vertex of every region is its root, so key order is region order.
    Ok(counts.into_values().collect())
}

/// Structural facts of a selection set `S` in a triangulation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalStructure {
    /// Every face meets `S` in one or three edges.
    pub faces_hit_once_or_thrice: bool,
    pub triple_faces: usize,
    pub size: usize,
    /// `n - 2 <= |S| <= n`.
    pub size_in_range: bool,
    pub packing: Option<SpanningPackingShape>,
    pub max_boundary_cycles: usize,
}

impl MinimalStructure {
    pub fn holds(&self) -> bool {
        self.faces_hit_once_or_thrice
            && self.triple_faces <= 2
            && self.size_in_range
            && self.packing.as_ref().is_some_and(SpanningPackingShape::within_claw_quota)
            && self.max_boundary_cycles <= 2
    }
}

pub fn minimal_structure(emb: &Embedding, dmap: &DualMap, s: &BTreeSet<EdgeId>) -> Result<MinimalStructure> {
    let hits = face_hits(emb, s);
    let n = emb.graph().vertex_count();
    Ok(MinimalStructure {
        faces_hit_once_or_thrice: hits.iter().all(|&h| h == 1 || h == 3),
        triple_faces: hits.iter().filter(|&&h| h == 3).count(),
        size: s.len(),
        size_in_range: n.saturating_sub(2) <= s.len() && s.len() <= n,
        packing: SpanningPackingShape::from_edges(dmap.graph()?, &dmap.to_dual(s)),
        max_boundary_cycles: boundary_cycle_counts(emb, dmap, s)?.into_iter().max().unwrap_or(0),
    })
}
