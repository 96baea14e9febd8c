//! Robust chromatic number: exact oracle, bounds, and `chi_1 <= k` searches.

mod bipartite_search;
mod coloring_search;
pub mod structure;
mod triangulation;

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::budget::{Budget, Verdict};
use crate::error::{Error, Result};
use crate::graph::{chromatic_number, degeneracy, is_k_colorable, Chromatic, Coloring, EdgeId, Graph};
use crate::planar::{check_planarity, dual, is_triangulation, Embedding};
use crate::selection::{enumerate_selection_sets, is_selection_set, SelectionSet};

pub use bipartite_search::decide_robust_bipartite;
pub use coloring_search::decide_chi1_at_most;
pub use structure::{PackingPiece, SpanningPackingShape};
pub use triangulation::{decide_robust_bipartite_triangulation, PackingWitness};

/// Largest order accepted by [`chi1_bruteforce`].
pub const BRUTEFORCE_MAX_VERTICES: usize = 12;

/// A selection set together with a proper colouring of `g - S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub selection: SelectionSet,
    pub coloring: Coloring,
}

impl Witness {
    /// Re-checks the witness from scratch against `g`.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        self.selection.validate(g)?;
        if !self.coloring.is_proper(&g.without_edges(self.selection.edges())) {
            return Err(Error::Contract("colouring is not proper on g - S".into()));
        }
        Ok(())
    }

    pub fn colors_used(&self) -> usize {
        self.coloring.k()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Exact,
    Bracketed,
}

/// Where the final lower bound came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerBoundSource {
    /// `ceil(chi / 3)` with `chi` computed exactly.
    ChromaticNumber,
    /// `ceil(lb / 3)` where `lb` is a clique or partial-search bound on `chi`.
    ChromaticLowerBound,
    /// A completed search refuted every smaller value.
    Search,
    /// Exhaustive enumeration of selection sets.
    Enumeration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chi1Result {
    pub lower: usize,
    pub upper: usize,
    pub witness: Option<Witness>,
    pub status: Status,
    pub lower_source: LowerBoundSource,
    pub nodes_expanded: u64,
    pub budget: Option<u64>,
}

/// Stable JSON shape of a [`Chi1Result`].
#[derive(Debug, Serialize)]
pub struct Chi1Record {
    pub lower: usize,
    pub upper: usize,
    pub status: Status,
    pub witness_edges: Option<Vec<EdgeId>>,
    pub witness_coloring: Option<Vec<usize>>,
    pub nodes_expanded: u64,
    pub budget: Option<u64>,
    pub lower_bound_source: LowerBoundSource,
}

impl Chi1Result {
    pub fn value(&self) -> Option<usize> {
        (self.status == Status::Exact).then_some(self.lower)
    }

    pub fn record(&self) -> Chi1Record {
        Chi1Record {
            lower: self.lower,
            upper: self.upper,
            status: self.status,
            witness_edges: self.witness.as_ref().map(|w| w.selection.edges().iter().copied().collect()),
            witness_coloring: self.witness.as_ref().map(|w| w.coloring.colors().to_vec()),
            nodes_expanded: self.nodes_expanded,
            budget: self.budget,
            lower_bound_source: self.lower_source,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.record()).expect("plain data")
    }
}

/// `floor(d / 2) + 1` for the degeneracy `d` of `g`.
pub fn degeneracy_bound(g: &Graph) -> usize {
    degeneracy(g).d / 2 + 1
}

/// Minimum of `chi(g - S)` over every 1-selection set `S`, by enumeration.
pub fn chi1_bruteforce(g: &Graph) -> Result<Chi1Result> {
    let n = g.vertex_count();
    if n > BRUTEFORCE_MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "exhaustive chi_1 is limited to {BRUTEFORCE_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let unlimited = Budget::unlimited();
    let mut best: Option<(usize, Vec<EdgeId>, Coloring)> = None;
    // No selection set has more than n edges, so with m > n an edge survives.
    let floor = match n {
        0 => 0,
        _ if g.edge_count() > n => 2,
        _ => 1,
    };
    enumerate_selection_sets(g, n, |s| {
        let set: BTreeSet<EdgeId> = s.iter().copied().collect();
        let rest = g.without_edges(&set);
        // Only an improvement matters; the colourability test is much cheaper
        // than a full chromatic number.
        if let Some((k, _, _)) = &best {
            if !is_k_colorable(&rest, k - 1, &unlimited).is_yes() {
                return ControlFlow::Continue(());
            }
        }
        let Chromatic::Exact(k, coloring) = chromatic_number(&rest, &unlimited) else {
            unreachable!("unlimited budget")
        };
        best = Some((k, s.to_vec(), coloring));
        if k <= floor {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    let (k, edges, coloring) = best.expect("the empty set is always visited");
    let selection = SelectionSet::with_assignment(g, edges.into_iter().collect())?;
    Ok(Chi1Result {
        lower: k,
        upper: k,
        witness: Some(Witness { selection, coloring }),
        status: Status::Exact,
        lower_source: LowerBoundSource::Enumeration,
        nodes_expanded: unlimited.used(),
        budget: None,
    })
}

/// Brackets or determines `chi_1(g)`.
///
/// Starts from `ceil(chi/3) <= chi_1 <= chi`, tightens the upper end with the
/// degeneracy bound and, for plane embeddings, with 3; then settles values
/// from the bottom up: `1` exactly when `E(g)` is a selection set, `2` by the
/// odd-cycle search (or the packing search on a triangulation), larger values
/// by the colouring search.
pub fn chi1(g: &Graph, emb: Option<&Embedding>, budget: &Budget) -> Chi1Result {
    let n = g.vertex_count();
    let finish = |lower: usize, upper: usize, witness, lower_source| Chi1Result {
        lower,
        upper,
        witness,
        status: if lower == upper { Status::Exact } else { Status::Bracketed },
        lower_source,
        nodes_expanded: budget.used(),
        budget: budget.limit(),
    };
    if n == 0 {
        let witness = Witness { selection: SelectionSet::empty(), coloring: Coloring::new(g, vec![]).unwrap() };
        return finish(0, 0, Some(witness), LowerBoundSource::ChromaticNumber);
    }
    let chrom = chromatic_number(g, budget);
    let (chi_low, chi_high) = chrom.bounds();
    let mut lower = chi_low.div_ceil(3).max(1);
    let mut source = match chrom {
        Chromatic::Exact(..) => LowerBoundSource::ChromaticNumber,
        Chromatic::Bracketed { .. } => LowerBoundSource::ChromaticLowerBound,
    };
    let mut upper = chi_high.min(degeneracy_bound(g));
    if emb.is_some_and(|e| e.graph() == g && check_planarity(e).is_planar()) {
        upper = upper.min(3);
    }
    let mut witness = (upper == chi_high)
        .then(|| Witness { selection: SelectionSet::empty(), coloring: chrom.coloring().clone() });

    let all: BTreeSet<EdgeId> = (0..g.edge_count()).collect();
    if is_selection_set(g, &all) {
        let w = Witness {
            selection: SelectionSet::with_assignment(g, all).expect("checked"),
            coloring: Coloring::new(&Graph::empty(n), vec![0; n]).unwrap(),
        };
        return finish(1, 1, Some(w), source);
    }
    if lower < 2 {
        lower = 2;
        source = LowerBoundSource::Search;
    }
    while lower < upper {
        let verdict = if lower == 2 { decide_two(g, emb, budget) } else { decide_chi1_at_most(g, lower, budget) };
        match verdict {
            Verdict::Yes(w) => {
                upper = lower;
                witness = Some(w);
            }
            Verdict::No => {
                lower += 1;
                source = LowerBoundSource::Search;
            }
            Verdict::Unknown => break,
        }
    }
    if witness.is_none() {
        if let Verdict::Yes(w) = decide_chi1_at_most(g, upper, budget) {
            witness = Some(w);
        }
    }
    finish(lower, upper, witness, source)
}

fn decide_two(g: &Graph, emb: Option<&Embedding>, budget: &Budget) -> Verdict<Witness> {
    if let Some(e) = emb.filter(|e| e.graph() == g && is_triangulation(e)) {
        if let Ok(dmap) = dual(e) {
            if dmap.is_simple() {
                if let Ok(v) = decide_robust_bipartite_triangulation(e, &dmap, budget) {
                    return v.map(|p| p.witness);
                }
            }
        }
    }
    decide_robust_bipartite(g, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::planar::solids;

    fn exact(g: &Graph) -> usize {
        chi1_bruteforce(g).unwrap().value().unwrap()
    }

    #[test]
    fn oracle_small_cases() {
        assert_eq!(exact(&complete(3)), 1);
        assert_eq!(exact(&complete(4)), 2);
        assert_eq!(exact(&cycle(6)), 1);
        assert_eq!(exact(&Graph::empty(3)), 1);
        assert_eq!(exact(&Graph::empty(0)), 0);
        assert_eq!(exact(&complete_bipartite(3, 3)), 2);
        let r = chi1_bruteforce(&complete(3)).unwrap();
        assert_eq!(r.witness.as_ref().unwrap().selection.len(), 3);
        r.witness.unwrap().verify(&complete(3)).unwrap();
        assert!(matches!(chi1_bruteforce(&complete(13)), Err(Error::TooLarge(_))));
    }

    #[test]
    fn solver_matches_oracle_on_families() {
        let graphs = [
            complete(4),
            complete(5),
            complete(6),
            complete(7),
            petersen(),
            wheel(5),
            wheel(6),
            cycle(7),
            complete_bipartite(2, 4),
            path(4),
        ];
        for g in &graphs {
            let r = chi1(g, None, &Budget::unlimited());
            assert_eq!(r.value(), Some(exact(g)), "{g:?}");
            let w = r.witness.expect("exact results carry a witness");
            w.verify(g).unwrap();
            assert_eq!(w.colors_used(), r.upper);
        }
    }

    #[test]
    fn robust_bipartite_decisions() {
        let b = Budget::unlimited();
        assert!(decide_robust_bipartite(&cycle(8), &b).is_yes());
        match decide_robust_bipartite(&complete(3), &b) {
            Verdict::Yes(w) => assert_eq!(w.selection.len(), 1),
            other => panic!("{other:?}"),
        }
        let w5 = wheel(5);
        assert_eq!(decide_robust_bipartite(&w5, &b).is_yes(), exact(&w5) <= 2);
        assert!(decide_robust_bipartite(&complete(5), &b).is_yes());
        assert!(decide_robust_bipartite(&complete(7), &b).is_no());
        assert!(matches!(decide_robust_bipartite(&complete(7), &Budget::limited(1)), Verdict::Unknown));
    }

    #[test]
    fn triangulation_search_matches_oracle() {
        for (name, emb) in solids::triangulation_corpus() {
            let d = dual(&emb).unwrap();
            let v = decide_robust_bipartite_triangulation(&emb, &d, &Budget::unlimited()).unwrap();
            let g = emb.graph();
            assert_eq!(v.is_yes(), exact(g) <= 2, "{name}");
            if let Verdict::Yes(p) = v {
                p.witness.verify(g).unwrap();
                assert!(p.packing.within_claw_quota());
                assert!(structure::minimal_structure(&emb, &d, p.witness.selection.edges()).unwrap().holds());
            }
        }
        let cube = solids::cube();
        let d = dual(&cube).unwrap();
        assert!(matches!(
            decide_robust_bipartite_triangulation(&cube, &d, &Budget::unlimited()),
            Err(Error::NotTriangulation)
        ));
    }

    #[test]
    fn degeneracy_bounds() {
        assert_eq!(degeneracy_bound(&cycle(9)), 2);
        assert_eq!(degeneracy_bound(solids::cube().graph()), 2);
        assert_eq!(degeneracy_bound(solids::icosahedron().graph()), 3);
    }

    #[test]
    fn json_record_is_stable() {
        let r = chi1(&complete(4), None, &Budget::unlimited());
        let json = r.to_json();
        assert!(json.starts_with(r#"{"lower":2,"upper":2,"status":"Exact""#), "{json}");
    }
}
