//! Parsing graph6, exact colouring and degeneracy on a few small graphs.
use robust_chromatic::graph::{chromatic_number, degeneracy, families, graph6, is_bipartite};
use robust_chromatic::Budget;

fn main() -> robust_chromatic::Result<()> {
    let k4 = graph6::parse_graph6("C~")?;
    println!("C~ has {} vertices and {} edges", k4.vertex_count(), k4.edge_count());

    for (name, g) in [("K4", k4), ("Petersen", families::petersen()), ("W5", families::wheel(5)), ("C6", families::cycle(6))] {
        let chi = chromatic_number(&g, &Budget::unlimited());
        println!(
            "{name:9} graph6 {:12} chi = {:?}  degeneracy = {}  bipartite = {}",
            graph6::emit_graph6(&g),
            chi.exact(),
            degeneracy(&g).d,
            is_bipartite(&g).is_bipartite()
        );
    }
    Ok(())
}
