//! Perfect matchings and 2-factors of cubic duals, and the matching
//! certificate that a triangulation has `chi_1 = 2`.

mod matching;

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_bipartite, Bipartiteness, Coloring, EdgeId, Graph, VertexId};
use crate::planar::{is_quadrangulation, is_triangulation, DualMap, Embedding};
use crate::selection::{induced_by_edges, SelectionSet};
use crate::solver::structure::face_hits;

pub use matching::{enumerate_perfect_matchings, find_perfect_matching, Matching};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoFactor {
    edges: BTreeSet<EdgeId>,
    /// Each cycle as its edge ids in walk order, starting from its smallest vertex.
    cycles: Vec<Vec<EdgeId>>,
}

impl TwoFactor {
    pub fn edges(&self) -> &BTreeSet<EdgeId> {
        &self.edges
    }

    pub fn cycles(&self) -> &[Vec<EdgeId>] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// Cycle lengths, sorted.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut l: Vec<usize> = self.cycles.iter().map(Vec::len).collect();
        l.sort_unstable();
        l
    }
}

/// `E(g) \ m` as a 2-factor with its cycle decomposition.
pub fn two_factor_complement(g: &Graph, m: &Matching) -> Result<TwoFactor> {
    if !g.is_regular(3) {
        return Err(Error::Contract("two_factor_complement needs a cubic graph".into()));
    }
    let m = Matching::new(g, m.edges().clone())?;
    if !m.is_perfect(g) {
        return Err(Error::Contract("matching is not perfect".into()));
    }
    let edges: BTreeSet<EdgeId> = (0..g.edge_count()).filter(|e| !m.edges().contains(e)).collect();
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let (mut v, mut via) = (start, usize::MAX);
        loop {
            seen[v] = true;
            let &(w, e) = g
                .incident(v)
                .iter()
                .find(|&&(_, e)| edges.contains(&e) && e != via)
                .expect("degree two in the complement");
            cycle.push(e);
            via = e;
            v = w;
            if v == start {
                break;
            }
        }
        cycles.push(cycle);
    }
    Ok(TwoFactor { edges, cycles })
}

/// Selection set lifted from a dual perfect matching whose complementary
/// 2-factor has at most two cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prop2Certificate {
    pub selection: SelectionSet,
    /// Perfect matching `M*` of the dual (dual edge ids).
    pub dual_matching: Matching,
    pub two_factor: TwoFactor,
    /// 2-colouring of `G - S`.
    pub bipartition: Coloring,
    /// Cycle count of `G[S]`, recorded for inspection.
    pub cycles_in_selection: usize,
    pub matchings_tried: usize,
}

/// Searches dual perfect matchings (canonical order, at most `cap`) for one
/// whose complement has at most two cycles, lifts it and checks the lift:
/// a 1-selection set, one edge in every face, and `G - S` a bipartite
/// quadrangulation. `Ok(None)` means no qualifying matching within `cap`.
pub fn prop2_construct(emb: &Embedding, dmap: &DualMap, cap: Option<usize>) -> Result<Option<Prop2Certificate>> {
    if !is_triangulation(emb) {
        return Err(Error::NotTriangulation);
    }
    let dual = dmap.graph()?;
    let mut found = None;
    let mut tried = 0;
    enumerate_perfect_matchings(dual, cap, |m| {
        tried += 1;
        let tf = two_factor_complement(dual, m).expect("cubic dual, perfect matching");
        if tf.cycle_count() <= 2 {
            found = Some((m.clone(), tf));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    let Some((dual_matching, two_factor)) = found else {
        return Ok(None);
    };
    let g = emb.graph();
    let s = dmap.to_primal(dual_matching.edges());
    let fail = |what: &str| Error::Internal(format!("lifted matching: {what}"));
    let selection = SelectionSet::with_assignment(g, s.clone()).map_err(|e| fail(&e.to_string()))?;
    if !face_hits(emb, &s).iter().all(|&h| h == 1) {
        return Err(fail("some face does not lose exactly one edge"));
    }
    if s.len() + 2 != g.vertex_count() {
        return Err(fail("size differs from n - 2"));
    }
    let (rest, _) = emb.remove_edges(&s);
    if !is_quadrangulation(&rest) {
        return Err(fail("G - S is not a quadrangulation"));
    }
    let Bipartiteness::Bipartite(bipartition) = is_bipartite(rest.graph()) else {
        return Err(fail("G - S is not bipartite"));
    };
    let (h, _) = induced_by_edges(g, &s)?;
    let cycles_in_selection = h.edge_count() + h.components().len() - h.vertex_count();
    if cycles_in_selection > 1 {
        return Err(fail("G[S] has more than one cycle"));
    }
    Ok(Some(Prop2Certificate {
        selection,
        dual_matching,
        two_factor,
        bipartition,
        cycles_in_selection,
        matchings_tried: tried,
    }))
}

/// `chi_1 <= 2` inherited by a subgraph of a certified host.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InheritedBound {
    pub bound: usize,
    pub selection: SelectionSet,
    pub bipartition: Coloring,
}

/// Restricts the host's selection set to `g`, where `vertex_map[v]` is the
/// host vertex playing the role of `v`. A restriction of a 1-selection set is
/// one, and deleting it from a subgraph of a bipartite remainder stays bipartite.
pub fn subgraph_inherits_bound(
    g: &Graph,
    vertex_map: &[VertexId],
    host: &Graph,
    host_selection: &SelectionSet,
) -> Result<InheritedBound> {
    if vertex_map.len() != g.vertex_count() {
        return Err(Error::Contract("vertex map length differs from the subgraph order".into()));
    }
    let mut used = vec![false; host.vertex_count()];
    for &h in vertex_map {
        if h >= host.vertex_count() || std::mem::replace(&mut used[h], true) {
            return Err(Error::Contract(format!("vertex map is not an injection into the host at {h}")));
        }
    }
    let mut restricted = BTreeSet::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let he = host
            .edge_id(vertex_map[u], vertex_map[v])
            .ok_or_else(|| Error::Contract(format!("edge {u}-{v} has no host counterpart")))?;
        if host_selection.edges().contains(&he) {
            restricted.insert(e);
        }
    }
    let selection = SelectionSet::with_assignment(g, restricted)?;
    match is_bipartite(&g.without_edges(selection.edges())) {
        Bipartiteness::Bipartite(bipartition) => Ok(InheritedBound { bound: 2, selection, bipartition }),
        Bipartiteness::OddCycle(_) => Err(Error::NotBipartiteAfterRemoval),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use crate::planar::{dual, solids};

    fn cert(emb: &Embedding) -> Prop2Certificate {
        prop2_construct(emb, &dual(emb).unwrap(), None).unwrap().unwrap()
    }

    #[test]
    fn lifted_selection_sizes() {
        assert_eq!(cert(&solids::tetrahedron()).selection.len(), 2);
        assert_eq!(cert(&solids::octahedron()).selection.len(), 4);
        let ico = cert(&solids::icosahedron());
        assert_eq!(ico.selection.len(), 10);
        assert!(ico.two_factor.cycle_count() <= 2);
    }

    #[test]
    fn cube_two_factors() {
        let cube = solids::cube();
        let g = cube.graph();
        let mut lengths = Vec::new();
        enumerate_perfect_matchings(g, None, |m| {
            let tf = two_factor_complement(g, m).unwrap();
            assert_eq!(tf.cycle_lengths().iter().sum::<usize>(), 8);
            lengths.push(tf.cycle_lengths());
            ControlFlow::Continue(())
        });
        lengths.sort();
        assert_eq!(lengths.iter().filter(|l| **l == vec![4, 4]).count(), 3);
        assert_eq!(lengths.iter().filter(|l| **l == vec![8]).count(), 6);
        let k4 = families::complete(4);
        let m = find_perfect_matching(&k4).unwrap();
        assert_eq!(two_factor_complement(&k4, &m).unwrap().cycle_lengths(), vec![4]);
        assert!(two_factor_complement(&families::cycle(4), &m).is_err());
    }

    #[test]
    fn restriction_to_subgraphs() {
        let oct = solids::octahedron();
        let c = cert(&oct);
        let host = oct.graph();
        let same = subgraph_inherits_bound(host, &(0..6).collect::<Vec<_>>(), host, &c.selection).unwrap();
        assert_eq!(same.selection.edges(), c.selection.edges());
        let keep: Vec<VertexId> = (1..6).collect();
        let minus = host.induced_subgraph(&keep);
        assert_eq!(subgraph_inherits_bound(&minus, &keep, host, &c.selection).unwrap().bound, 2);
        assert!(subgraph_inherits_bound(&families::complete(6), &(0..6).collect::<Vec<_>>(), host, &c.selection).is_err());
    }
}
