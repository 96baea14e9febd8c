//! The invariant sweep over every graph up to a given order (default 6).
use robust_chromatic::corpus::{corpus_verify, is_planar_small};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let report = corpus_verify(n, false);
    println!("graphs by order: {:?}", report.graphs_by_order);
    println!("chi_1 histogram: {:?}", report.chi1_histogram);
    let planar = report.records.iter().filter(|r| r.planar).count();
    println!("{planar} planar, all with chi_1 <= 3: {}", report.planar_violations.is_empty());
    println!("selection sweep: {:?}", report.selection);
    println!("passed: {}", report.passed);
    let k5 = robust_chromatic::graph::families::complete(5);
    println!("K5 planar: {}", is_planar_small(&k5));
}
