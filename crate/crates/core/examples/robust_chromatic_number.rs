//! chi_1 of small graphs: the bounded solver against the exhaustive oracle.
use robust_chromatic::graph::families;
use robust_chromatic::solver::{chi1, chi1_bruteforce, degeneracy_bound};
use robust_chromatic::Budget;

fn main() -> robust_chromatic::Result<()> {
    let graphs = [
        ("K3", families::complete(3)),
        ("K4", families::complete(4)),
        ("K7", families::complete(7)),
        ("C5", families::cycle(5)),
        ("W5", families::wheel(5)),
        ("Petersen", families::petersen()),
        ("K3,3", families::complete_bipartite(3, 3)),
    ];
    for (name, g) in graphs {
        let r = chi1(&g, None, &Budget::unlimited());
        let oracle = chi1_bruteforce(&g)?;
        println!(
            "{name:9} chi_1 in [{}, {}] ({:?}), oracle {:?}, degeneracy bound {}",
            r.lower,
            r.upper,
            r.status,
            oracle.value(),
            degeneracy_bound(&g)
        );
        if let Some(w) = &r.witness {
            w.verify(&g)?;
            println!("          remove {:?}, colouring {:?}", w.selection.edges(), w.coloring.colors());
        }
    }

    // A tight budget brackets instead of answering.
    let r = chi1(&families::complete(7), None, &Budget::limited(10));
    println!("K7 with 10 nodes: {}", r.to_json());
    Ok(())
}
