//! Exhaustive sweeps over small graphs: the invariant suite behind
//! `corpus-verify`.

mod enumerate;
mod planarity;

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::graph::{chromatic_number, degeneracy, graph6::emit_graph6, EdgeId, Graph};
use crate::planar::{dual, solids, Embedding};
use crate::selection::{build_assignment, check_assignment, enumerate_selection_sets, guarantees_bipartite, is_minimal, is_selection_set};
use crate::solver::{
    chi1, chi1_bruteforce, decide_robust_bipartite, decide_robust_bipartite_triangulation,
    structure::minimal_structure,
};

pub use enumerate::{all_codes, all_graphs, canonical_code, connected_graphs, from_code, MAX_ORDER};
pub use planarity::{is_outerplanar_small, is_planar_small};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub chi: usize,
    pub chi1: usize,
    pub chi1_oracle: usize,
    pub degeneracy: usize,
    pub planar: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelectionSweep {
    pub max_n: usize,
    pub graphs: usize,
    pub subsets: usize,
    pub selection_sets: usize,
    /// Disagreements between the unicyclic test, the assignment
    /// construction and a per-vertex assignment search.
    pub disagreements: usize,
    /// Selection sets with a non-selection subset one edge smaller
    /// extended, or with more edges than vertices.
    pub monotonicity_failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangulationRecord {
    pub name: String,
    pub n: usize,
    pub chi1: usize,
    pub packing_search: bool,
    pub odd_cycle_search: bool,
    pub minimal_sets: usize,
    pub minimal_sizes: Vec<usize>,
    /// Every minimal set satisfies all structural conditions.
    pub structure_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub max_n: usize,
    pub graphs_by_order: Vec<usize>,
    pub chi1_histogram: BTreeMap<usize, usize>,
    pub oracle_mismatches: Vec<String>,
    pub sandwich_violations: Vec<String>,
    pub degeneracy_violations: Vec<String>,
    pub planar_violations: Vec<String>,
    pub selection: SelectionSweep,
    pub triangulations: Vec<TriangulationRecord>,
    pub records: Vec<GraphRecord>,
    pub passed: bool,
}

impl CorpusReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}

/// Solver, oracle and bound checks on one graph.
pub fn graph_record(g: &Graph) -> GraphRecord {
    let unlimited = Budget::unlimited();
    let chi = chromatic_number(g, &unlimited).exact().expect("unlimited budget");
    let r = chi1(g, None, &Budget::unlimited());
    GraphRecord {
        graph6: emit_graph6(g),
        n: g.vertex_count(),
        m: g.edge_count(),
        chi,
        chi1: r.value().expect("unlimited budget is exact"),
        chi1_oracle: chi1_bruteforce(g).expect("small graph").lower,
        degeneracy: degeneracy(g).d,
        planar: is_planar_small(g),
    }
}

/// Runs the whole suite on all connected graphs up to `max_n` vertices,
/// selection checks up to `min(max_n, 6)` and, when asked, the
/// triangulation sweep. Output is independent of thread scheduling.
pub fn corpus_verify(max_n: usize, with_triangulations: bool) -> CorpusReport {
    let graphs = connected_graphs(max_n.min(MAX_ORDER - 1));
    let records: Vec<GraphRecord> = graphs.par_iter().map(graph_record).collect();
    let mut graphs_by_order = vec![0; max_n + 1];
    let mut chi1_histogram = BTreeMap::new();
    let (mut oracle, mut sandwich, mut degen, mut planar) = (vec![], vec![], vec![], vec![]);
    for r in &records {
        graphs_by_order[r.n] += 1;
        *chi1_histogram.entry(r.chi1).or_default() += 1;
        if r.chi1 != r.chi1_oracle {
            oracle.push(r.graph6.clone());
        }
        if !(r.chi.div_ceil(3) <= r.chi1 && r.chi1 <= r.chi) {
            sandwich.push(r.graph6.clone());
        }
        if r.chi1 > r.degeneracy / 2 + 1 {
            degen.push(r.graph6.clone());
        }
        if r.planar && r.chi1 > 3 {
            planar.push(r.graph6.clone());
        }
    }
    let selection = selection_sweep(max_n.min(6));
    let triangulations = if with_triangulations { triangulation_sweep() } else { Vec::new() };
    let passed = oracle.is_empty()
        && sandwich.is_empty()
        && degen.is_empty()
        && planar.is_empty()
        && selection.disagreements == 0
        && selection.monotonicity_failures == 0
        && triangulations.iter().all(|t| t.structure_holds && t.packing_search == t.odd_cycle_search && t.packing_search == (t.chi1 <= 2));
    CorpusReport {
        max_n,
        graphs_by_order,
        chi1_histogram,
        oracle_mismatches: oracle,
        sandwich_violations: sandwich,
        degeneracy_violations: degen,
        planar_violations: planar,
        selection,
        triangulations,
        records,
        passed,
    }
}

/// Assigns each edge of `s` to a distinct endpoint by plain backtracking.
pub fn assignment_exists_by_search(g: &Graph, s: &[EdgeId]) -> bool {
    fn rec(g: &Graph, s: &[EdgeId], used: &mut Vec<bool>) -> bool {
        let Some((&e, rest)) = s.split_first() else { return true };
        let (u, v) = g.endpoints(e);
        for x in [u, v] {
            if !used[x] {
                used[x] = true;
                if rec(g, rest, used) {
                    return true;
                }
                used[x] = false;
            }
        }
        false
    }
    rec(g, s, &mut vec![false; g.vertex_count()])
}

/// Every edge subset of every graph on at most `max_n` vertices.
pub fn selection_sweep(max_n: usize) -> SelectionSweep {
    let graphs = all_graphs(max_n);
    let per_graph: Vec<(usize, usize, usize, usize)> = graphs
        .par_iter()
        .map(|g| {
            let m = g.edge_count();
            let mut is_sel = vec![false; 1 << m];
            let (mut sets, mut bad, mut mono) = (0, 0, 0);
            for mask in 0usize..1 << m {
                let edges: Vec<EdgeId> = (0..m).filter(|e| mask >> e & 1 == 1).collect();
                let set: BTreeSet<EdgeId> = edges.iter().copied().collect();
                let a = is_selection_set(g, &set);
                let b = build_assignment(g, &set).is_ok_and(|f| check_assignment(g, &f, &set).is_ok());
                let c = assignment_exists_by_search(g, &edges);
                if a != b || b != c {
                    bad += 1;
                }
                is_sel[mask] = a;
                if a {
                    sets += 1;
                    if edges.len() > g.vertex_count() {
                        mono += 1;
                    }
                }
            }
            // A selection set never has a non-selection subset.
            for mask in 0usize..1 << m {
                if is_sel[mask] && (0..m).any(|e| mask >> e & 1 == 1 && !is_sel[mask & !(1 << e)]) {
                    mono += 1;
                }
            }
            (1usize << m, sets, bad, mono)
        })
        .collect();
    SelectionSweep {
        max_n,
        graphs: graphs.len(),
        subsets: per_graph.iter().map(|x| x.0).sum(),
        selection_sets: per_graph.iter().map(|x| x.1).sum(),
        disagreements: per_graph.iter().map(|x| x.2).sum(),
        monotonicity_failures: per_graph.iter().map(|x| x.3).sum(),
    }
}

/// Every inclusion-minimal selection set `S` with `g - S` bipartite.
pub fn minimal_bipartizing_sets(g: &Graph) -> Vec<BTreeSet<EdgeId>> {
    let mut out = Vec::new();
    enumerate_selection_sets(g, g.vertex_count(), |s| {
        let set: BTreeSet<EdgeId> = s.iter().copied().collect();
        if guarantees_bipartite(g, &set) && is_minimal(g, &set) {
            out.push(set);
        }
        ControlFlow::Continue(())
    });
    out
}

pub fn triangulation_record(name: &str, emb: &Embedding) -> TriangulationRecord {
    let g = emb.graph();
    let d = dual(emb).expect("corpus triangulations are connected and planar");
    let minimal = minimal_bipartizing_sets(g);
    let structure_holds = minimal
        .iter()
        .all(|s| minimal_structure(emb, &d, s).is_ok_and(|m| m.holds()));
    let mut sizes: Vec<usize> = minimal.iter().map(BTreeSet::len).collect();
    sizes.sort_unstable();
    sizes.dedup();
    TriangulationRecord {
        name: name.to_string(),
        n: g.vertex_count(),
        chi1: chi1_bruteforce(g).expect("small").lower,
        packing_search: decide_robust_bipartite_triangulation(emb, &d, &Budget::unlimited())
            .expect("triangulation")
            .is_yes(),
        odd_cycle_search: decide_robust_bipartite(g, &Budget::unlimited()).is_yes(),
        minimal_sets: minimal.len(),
        minimal_sizes: sizes,
        structure_holds,
    }
}

/// The fixed triangulation corpus: solids, bipyramids and stacked
/// triangulations on at most ten vertices.
pub fn triangulation_sweep() -> Vec<TriangulationRecord> {
    solids::triangulation_corpus()
        .par_iter()
        .map(|(name, emb)| triangulation_record(name, emb))
        .collect()
}
