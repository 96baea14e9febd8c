use std::collections::BTreeSet;

use super::structure::{boundary_cycle_counts, PackingPiece, SpanningPackingShape};
use super::Witness;
use crate::budget::{Budget, Verdict};
use crate::error::{Error, Result};
use crate::graph::{is_bipartite, Bipartiteness, EdgeId, Graph};
use crate::planar::{is_triangulation, DualMap, Embedding};
use crate::selection::{SelectionSet, UnicyclicForest};

/// A Yes answer of [`decide_robust_bipartite_triangulation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingWitness {
    pub witness: Witness,
    pub packing: SpanningPackingShape,
}

/// Decides `chi_1 <= 2` for a plane triangulation by searching the dual.
///
/// A minimal `S` dualises to a spanning packing of the cubic dual by edges and
/// at most two claws, so only such packings are generated: the smallest
/// uncovered dual vertex is covered by an edge to an uncovered neighbour, as
/// the centre of a claw, or as a leaf of a claw centred at a neighbour. The
/// primal lift is kept unicyclic throughout, which also keeps every face of
/// `G* - S*` at no more than two boundary cycles. Complete packings are
/// accepted once `G - S` is confirmed bipartite.
pub fn decide_robust_bipartite_triangulation(
    emb: &Embedding,
    dmap: &DualMap,
    budget: &Budget,
) -> Result<Verdict<PackingWitness>> {
    if !is_triangulation(emb) {
        return Err(Error::NotTriangulation);
    }
    let dual = dmap.graph()?;
    if !dual.is_regular(3) {
        return Err(Error::Contract("dual map does not belong to this triangulation".into()));
    }
    let mut search = Search {
        primal: emb.graph(),
        dual,
        dmap,
        budget,
        covered: vec![false; dual.vertex_count()],
        pieces: Vec::new(),
        chosen: Vec::new(),
    };
    let forest = UnicyclicForest::new(emb.graph().vertex_count());
    match search.cover(0, 0, &forest)? {
        Outcome::Found(witness) => {
            debug_assert!(boundary_cycle_counts(emb, dmap, witness.selection.edges())?.iter().all(|&c| c <= 2));
            let packing = SpanningPackingShape { pieces: search.pieces };
            Ok(Verdict::Yes(PackingWitness { witness, packing }))
        }
        Outcome::Exhausted => Ok(Verdict::No),
        Outcome::OutOfBudget => Ok(Verdict::Unknown),
    }
}

enum Outcome {
    Found(Witness),
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    primal: &'a Graph,
    dual: &'a Graph,
    dmap: &'a DualMap,
    budget: &'a Budget,
    covered: Vec<bool>,
    pieces: Vec<PackingPiece>,
    /// Primal edges of the lift.
    chosen: Vec<EdgeId>,
}

impl Search<'_> {
    fn cover(&mut self, from: usize, claws: usize, forest: &UnicyclicForest) -> Result<Outcome> {
        let Some(v) = (from..self.dual.vertex_count()).find(|&v| !self.covered[v]) else {
            return self.leaf();
        };
        if !self.budget.tick() {
            return Ok(Outcome::OutOfBudget);
        }
        let free = |s: &Self, x: usize| !s.covered[x];
        let nbrs: Vec<(usize, EdgeId)> = self.dual.incident(v).to_vec();
        for &(w, e) in &nbrs {
            if free(self, w) {
                let r = self.try_piece(v, claws, forest, PackingPiece::K2(v.min(w), v.max(w)), &[e], &[v, w])?;
                if !matches!(r, Outcome::Exhausted) {
                    return Ok(r);
                }
            }
        }
        if claws < 2 {
            let mut candidates = vec![v];
            candidates.extend(nbrs.iter().map(|&(w, _)| w).filter(|&w| free(self, w)));
            for c in candidates {
                let star: Vec<(usize, EdgeId)> = self.dual.incident(c).to_vec();
                if !free(self, c) || !star.iter().all(|&(x, _)| free(self, x)) {
                    continue;
                }
                let leaves = [star[0].0, star[1].0, star[2].0];
                let edges: Vec<EdgeId> = star.iter().map(|x| x.1).collect();
                let verts = [c, leaves[0], leaves[1], leaves[2]];
                let r = self.try_piece(v, claws + 1, forest, PackingPiece::Claw { center: c, leaves }, &edges, &verts)?;
                if !matches!(r, Outcome::Exhausted) {
                    return Ok(r);
                }
            }
        }
        Ok(Outcome::Exhausted)
    }

    fn try_piece(
        &mut self,
        from: usize,
        claws: usize,
        forest: &UnicyclicForest,
        piece: PackingPiece,
        dual_edges: &[EdgeId],
        verts: &[usize],
    ) -> Result<Outcome> {
        let mut next = forest.clone();
        for &d in dual_edges {
            let (u, w) = self.primal.endpoints(self.dmap.primal_edge(d));
            if !next.try_add(u, w) {
                return Ok(Outcome::Exhausted);
            }
        }
        for &x in verts {
            self.covered[x] = true;
        }
        // An uncovered vertex with no uncovered neighbour can never be covered.
        let stranded = verts.iter().any(|&x| {
            self.dual
                .neighbors(x)
                .any(|y| !self.covered[y] && self.dual.neighbors(y).all(|z| self.covered[z]))
        });
        let r = if stranded {
            Outcome::Exhausted
        } else {
            let mark = self.chosen.len();
            self.chosen.extend(dual_edges.iter().map(|&d| self.dmap.primal_edge(d)));
            self.pieces.push(piece);
            let r = self.cover(from, claws, &next)?;
            if matches!(r, Outcome::Found(_)) {
                return Ok(r);
            }
            self.pieces.pop();
            self.chosen.truncate(mark);
            r
        };
        for &x in verts {
            self.covered[x] = false;
        }
        Ok(r)
    }

    fn leaf(&self) -> Result<Outcome> {
        let s: BTreeSet<EdgeId> = self.chosen.iter().copied().collect();
        match is_bipartite(&self.primal.without_edges(&s)) {
            Bipartiteness::Bipartite(coloring) => {
                let selection = SelectionSet::with_assignment(self.primal, s)
                    .map_err(|e| Error::Internal(format!("lifted packing is not a selection set: {e}")))?;
                Ok(Outcome::Found(Witness { selection, coloring }))
            }
            Bipartiteness::OddCycle(_) => Ok(Outcome::Exhausted),
        }
    }
}
