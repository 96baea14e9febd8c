//! Recognising selection sets, realising them as assignments, enumerating
//! them, and shrinking a bipartiteness-guaranteeing one to a minimal set.
use std::collections::BTreeSet;
use std::ops::ControlFlow;

use robust_chromatic::cli::format_assignment;
use robust_chromatic::graph::families;
use robust_chromatic::selection::{build_assignment, enumerate_selection_sets, is_minimal, is_selection_set, minimalize};

fn main() -> robust_chromatic::Result<()> {
    let k4 = families::complete(4);
    let triangle: BTreeSet<usize> = [0, 1, 3].into_iter().collect();
    println!("K4 edges {:?}", k4.edges());
    println!("triangle {triangle:?} is a selection set: {}", is_selection_set(&k4, &triangle));
    print!("{}", format_assignment(&k4, &build_assignment(&k4, &triangle)?));

    let all: BTreeSet<usize> = (0..k4.edge_count()).collect();
    println!("all of E(K4) is a selection set: {}", is_selection_set(&k4, &all));

    let mut by_size = [0usize; 7];
    let visited = enumerate_selection_sets(&k4, 6, |s| {
        by_size[s.len()] += 1;
        ControlFlow::Continue(())
    });
    println!("K4 has {visited} selection sets, by size {by_size:?}");

    let unicyclic: BTreeSet<usize> = [0, 1, 3, 5].into_iter().collect();
    let min = minimalize(&k4, &unicyclic)?;
    println!("{unicyclic:?} leaves K4 bipartite; it shrinks to {min:?}, minimal: {}", is_minimal(&k4, &min));
    Ok(())
}
