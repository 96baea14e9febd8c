use std::collections::{BTreeMap, BTreeSet};
use std::ops::Range;

use serde::Serialize;

use super::fragment::{tutte_fragment, Fragment, Port, FRAGMENT_ORDER};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::planar::{
    check_planarity, dual, edge_cut_components, is_bridgeless, is_triangulation, three_connected, trace_faces, DualMap,
    Embedding,
};

/// Which way a copy's `a` edge points across the annuli.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Facing {
    Inward,
    Outward,
}

/// Port `from` of one copy is joined to port `to` of the next copy round the ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RingLink {
    pub from: Port,
    pub to: Port,
}

/// How fragment copies are wired together. The graph is a set of concentric
/// rings of copies: an innermost ring whose `a` edges point out, an outermost
/// ring whose `a` edges point in, and between them rings that alternate
/// inward and outward copies. Consecutive rings are joined by `a` edges only,
/// so each such layer of `a` edges is a 3-edge-cut.
///
/// This is our reading of the published drawing; every property the argument
/// relies on is checked when a graph is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AttachmentPattern {
    pub ring_size: usize,
    pub inner_ring: RingLink,
    pub outer_ring: RingLink,
    /// Middle rings: inward copy `k` to outward copy `k`.
    pub inward_to_outward: RingLink,
    /// Middle rings: outward copy `k` to inward copy `k + 1`.
    pub outward_to_inward: RingLink,
    /// Middle rings in the base graph; each expansion step adds one.
    pub base_middle_rings: usize,
}

pub const ATTACHMENT_PATTERN: AttachmentPattern = AttachmentPattern {
    ring_size: 3,
    inner_ring: RingLink { from: Port::B, to: Port::C },
    outer_ring: RingLink { from: Port::C, to: Port::B },
    inward_to_outward: RingLink { from: Port::C, to: Port::C },
    outward_to_inward: RingLink { from: Port::B, to: Port::B },
    base_middle_rings: 2,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FragmentCopy {
    pub index: usize,
    /// Ring number, innermost first.
    pub ring: usize,
    pub slot: usize,
    pub facing: Facing,
    pub vertices: Range<VertexId>,
    /// Edge ids of the marked edges `a`, `b`, `c` in the host.
    pub marked: [EdgeId; 3],
    pub attachments: [VertexId; 3],
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    pub expansion: usize,
    pub pattern: AttachmentPattern,
    /// The cubic plane graph `G*`.
    pub star: Embedding,
    /// Designated 3-edge-cuts of `a` edges, innermost first.
    pub cuts: Vec<[EdgeId; 3]>,
    /// Vertices on the inner side of each cut.
    pub inner_sides: Vec<Vec<VertexId>>,
    pub copies: Vec<FragmentCopy>,
    /// The triangulation `G` whose dual is `star`.
    pub primal: Embedding,
    /// Faces of `star` as the vertices of `primal`.
    pub star_dual: DualMap,
}

impl Counterexample {
    /// The copies whose `a` edge is `e`, one on each side.
    pub fn flanks(&self, e: EdgeId) -> Option<(usize, usize)> {
        let mut it = self.copies.iter().filter(|c| c.marked[Port::A.index()] == e).map(|c| c.index);
        Some((it.next()?, it.next()?))
    }

    pub fn copy_of_vertex(&self, v: VertexId) -> usize {
        v / FRAGMENT_ORDER
    }

    /// Copy `i` cut out of `star` as a standalone fragment (marked edges end
    /// in pendant vertices), with the rotation it has in `star`.
    pub fn extract_fragment(&self, i: usize) -> Result<Fragment> {
        let copy = &self.copies[i];
        let g = self.star.graph();
        let local = |v: VertexId| copy.vertices.contains(&v).then(|| v - copy.vertices.start);
        let port_of_edge = |e: EdgeId| Port::ALL.into_iter().find(|p| copy.marked[p.index()] == e);
        let mut pairs = Vec::new();
        let mut nbrs = vec![Vec::new(); FRAGMENT_ORDER + 3];
        for v in copy.vertices.clone() {
            let lv = local(v).unwrap();
            for &e in self.star.rotation(v) {
                let w = g.other_end(e, v);
                let lw = match port_of_edge(e) {
                    Some(p) if copy.attachments[p.index()] == v => FRAGMENT_ORDER + p.index(),
                    _ => local(w).ok_or_else(|| Error::Construction(format!("copy {i} leaks at edge {e}")))?,
                };
                nbrs[lv].push(lw);
                if lv < lw {
                    pairs.push((lv, lw));
                }
            }
        }
        for p in Port::ALL {
            nbrs[FRAGMENT_ORDER + p.index()] = vec![copy.attachments[p.index()] - copy.vertices.start];
        }
        let emb = Embedding::from_neighbor_rotation(Graph::new(FRAGMENT_ORDER + 3, pairs)?, &nbrs)?;
        let marked = Port::ALL.map(|p| {
            emb.graph().edge_id(copy.attachments[p.index()] - copy.vertices.start, FRAGMENT_ORDER + p.index()).unwrap()
        });
        Fragment::from_parts(emb, marked, copy.attachments.map(|v| v - copy.vertices.start))
    }
}

/// Builds `G*` with `base_middle_rings + expansion` middle rings and checks
/// every structural property: cubic, plane, 3-connected, each designated cut a
/// minimal 3-edge-cut of `a` edges with copies on both sides and an odd
/// number of vertices inside, and a simple triangulated dual with `2n - 4` faces.
pub fn build_counterexample(expansion: usize) -> Result<Counterexample> {
    build_with(ATTACHMENT_PATTERN, expansion)
}

pub fn build_with(pattern: AttachmentPattern, expansion: usize) -> Result<Counterexample> {
    let fr = tutte_fragment()?;
    let r = pattern.ring_size;
    let middle = pattern.base_middle_rings + expansion;
    let mut rings: Vec<Vec<Facing>> = vec![vec![Facing::Outward; r]];
    for _ in 0..middle {
        rings.push((0..2 * r).map(|s| if s % 2 == 0 { Facing::Inward } else { Facing::Outward }).collect());
    }
    rings.push(vec![Facing::Inward; r]);

    let mut copies = Vec::new();
    let mut by_ring: Vec<Vec<usize>> = Vec::new();
    for (ring, facings) in rings.iter().enumerate() {
        let mut ids = Vec::new();
        for (slot, &facing) in facings.iter().enumerate() {
            let index = copies.len();
            let start = index * FRAGMENT_ORDER;
            copies.push(FragmentCopy {
                index,
                ring,
                slot,
                facing,
                vertices: start..start + FRAGMENT_ORDER,
                marked: [usize::MAX; 3],
                attachments: Port::ALL.map(|p| start + p.local_vertex()),
            });
            ids.push(index);
        }
        by_ring.push(ids);
    }

    // External links between ports, and the a-links of each cut.
    let mut links: Vec<((usize, Port), (usize, Port))> = Vec::new();
    let mut ring_link = |ids: &[usize], k: usize, l: usize, link: RingLink| links.push(((ids[k], link.from), (ids[l], link.to)));
    for k in 0..r {
        ring_link(&by_ring[0], k, (k + 1) % r, pattern.inner_ring);
        ring_link(&by_ring[middle + 1], k, (k + 1) % r, pattern.outer_ring);
        for ids in &by_ring[1..=middle] {
            ring_link(ids, 2 * k, 2 * k + 1, pattern.inward_to_outward);
            ring_link(ids, 2 * k + 1, (2 * k + 2) % (2 * r), pattern.outward_to_inward);
        }
    }
    let mut cut_links: Vec<Vec<(usize, usize)>> = Vec::new();
    for j in 0..=middle {
        let outward: Vec<usize> = by_ring[j].iter().copied().filter(|&c| copies[c].facing == Facing::Outward).collect();
        let inward: Vec<usize> = by_ring[j + 1].iter().copied().filter(|&c| copies[c].facing == Facing::Inward).collect();
        cut_links.push(outward.into_iter().zip(inward).collect());
    }
    for layer in &cut_links {
        for &(x, y) in layer {
            links.push(((x, Port::A), (y, Port::A)));
        }
    }
    let mut partner: BTreeMap<(usize, Port), VertexId> = BTreeMap::new();
    for &((x, p), (y, q)) in &links {
        let (vx, vy) = (copies[x].attachments[p.index()], copies[y].attachments[q.index()]);
        if partner.insert((x, p), vy).is_some() || partner.insert((y, q), vx).is_some() {
            return Err(Error::Construction(format!("port used twice near copies {x} and {y}")));
        }
    }
    if partner.len() != 3 * copies.len() {
        return Err(Error::Construction("some marked edge is left dangling".into()));
    }

    // Host graph and rotation, copying the fragment rotation into every copy.
    let fg = fr.embedding().graph();
    let mut pairs = BTreeSet::new();
    let mut nbrs: Vec<Vec<VertexId>> = vec![Vec::new(); copies.len() * FRAGMENT_ORDER];
    for copy in &copies {
        let base = copy.vertices.start;
        for lv in 0..FRAGMENT_ORDER {
            for &e in fr.embedding().rotation(lv) {
                let w = match Port::ALL.into_iter().find(|&p| fr.marked(p) == e) {
                    Some(p) => partner[&(copy.index, p)],
                    None => base + fg.other_end(e, lv),
                };
                nbrs[base + lv].push(w);
                pairs.insert(((base + lv).min(w), (base + lv).max(w)));
            }
        }
    }
    let g = Graph::new(nbrs.len(), pairs)?;
    let star = Embedding::from_neighbor_rotation(g, &nbrs)?;
    let g = star.graph();
    for copy in &mut copies {
        for p in Port::ALL {
            copy.marked[p.index()] = g.edge_id(copy.attachments[p.index()], partner[&(copy.index, p)]).unwrap();
        }
    }
    let cuts: Vec<[EdgeId; 3]> = cut_links
        .iter()
        .map(|layer| {
            let mut ids = [0; 3];
            for (slot, &(x, _)) in ids.iter_mut().zip(layer) {
                *slot = copies[x].marked[Port::A.index()];
            }
            ids.sort_unstable();
            ids
        })
        .collect();

    let fail = |m: String| Error::Construction(m);
    if !g.is_regular(3) {
        return Err(fail("G* is not cubic".into()));
    }
    let report = check_planarity(&star);
    if !report.is_planar() {
        return Err(fail(format!("rotation system has genus {}", report.genus)));
    }
    if !g.is_connected() || !is_bridgeless(g) {
        return Err(fail("G* is disconnected or has a bridge".into()));
    }
    if !three_connected(g)? {
        return Err(fail("G* is not 3-connected".into()));
    }
    let mut inner_sides = Vec::new();
    for (j, cut) in cuts.iter().enumerate() {
        let set: BTreeSet<EdgeId> = cut.iter().copied().collect();
        let comps = edge_cut_components(g, &set);
        if comps.len() != 2 {
            return Err(fail(format!("cut {j} leaves {} components", comps.len())));
        }
        for &skip in cut {
            let mut two = set.clone();
            two.remove(&skip);
            if edge_cut_components(g, &two).len() != 1 {
                return Err(fail(format!("cut {j} is not minimal")));
            }
        }
        for &e in cut {
            let (u, v) = g.endpoints(e);
            let ok = [u, v].iter().all(|&x| {
                let c = &copies[x / FRAGMENT_ORDER];
                c.attachments[Port::A.index()] == x && c.marked[Port::A.index()] == e
            });
            if !ok || u / FRAGMENT_ORDER == v / FRAGMENT_ORDER {
                return Err(fail(format!("cut {j} edge {e} is not an a edge between two copies")));
            }
        }
        let inner = comps.into_iter().find(|c| c.contains(&0)).unwrap();
        if inner.len() % 2 == 0 {
            return Err(fail(format!("cut {j} has an even side")));
        }
        inner_sides.push(inner);
    }
    let star_dual = dual(&star)?;
    let primal = star_dual.embedding().map_err(|_| fail("dual of G* is not simple".into()))?.clone();
    if !is_triangulation(&primal) {
        return Err(fail("dual of G* is not a triangulation".into()));
    }
    let n = primal.graph().vertex_count();
    if trace_faces(&primal).len() != 2 * n - 4 {
        return Err(fail("dual face count differs from 2n - 4".into()));
    }
    Ok(Counterexample { expansion, pattern, star, cuts, inner_sides, copies, primal, star_dual })
}

/// One verified counterexample per expansion parameter.
pub fn family(expansions: &[usize]) -> Result<Vec<Counterexample>> {
    expansions.iter().map(|&t| build_counterexample(t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_graph_invariants() {
        let ce = build_counterexample(0).unwrap();
        assert_eq!(ce.star.graph().vertex_count(), 270);
        assert_eq!(ce.primal.graph().vertex_count(), 137);
        assert_eq!(ce.primal.graph().edge_count(), 405);
        assert_eq!(ce.cuts.len(), 3);
        for cut in &ce.cuts {
            for &e in cut {
                let (x, y) = ce.flanks(e).unwrap();
                assert_ne!(x, y);
            }
        }
    }

    #[test]
    fn copies_are_fragments() {
        let ce = build_counterexample(0).unwrap();
        for i in 0..ce.copies.len() {
            ce.extract_fragment(i).unwrap();
        }
    }
}
