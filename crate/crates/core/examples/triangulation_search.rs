//! Deciding chi_1 <= 2 on triangulations by packing the cubic dual with
//! edges and at most two claws, cross-checked with the odd-cycle search.
use robust_chromatic::planar::{dual, solids};
use robust_chromatic::solver::structure::minimal_structure;
use robust_chromatic::solver::{decide_robust_bipartite, decide_robust_bipartite_triangulation, SpanningPackingShape};
use robust_chromatic::{Budget, Verdict};

fn main() -> robust_chromatic::Result<()> {
    for (name, emb) in solids::triangulation_corpus() {
        let d = dual(&emb)?;
        let budget = Budget::unlimited();
        let packing = decide_robust_bipartite_triangulation(&emb, &d, &budget)?;
        let general = decide_robust_bipartite(emb.graph(), &Budget::unlimited());
        let Verdict::Yes(p) = packing else {
            println!("{name}: no packing found");
            continue;
        };
        let s = p.witness.selection.edges();
        let shape = SpanningPackingShape::from_edges(d.graph()?, &d.to_dual(s));
        let structure = minimal_structure(&emb, &d, s)?;
        println!(
            "{name:22} n={:2} |S|={:2} claws={} nodes={:4} odd-cycle search agrees: {} structure holds: {}",
            emb.graph().vertex_count(),
            s.len(),
            shape.map_or(0, |sh| sh.claws()),
            budget.used(),
            general.is_yes(),
            structure.holds()
        );
    }
    Ok(())
}
