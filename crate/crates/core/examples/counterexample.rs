//! Assembles the cubic plane graph from fragment copies, exports it and runs
//! the lower-bound argument with a small search budget.
//!
//! `counterexample [expansion] [budget]`
use robust_chromatic::gadgets::{build_counterexample, export, family, verify_counterexample};
use robust_chromatic::Budget;

fn main() -> robust_chromatic::Result<()> {
    let mut args = std::env::args().skip(1);
    let t: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    let budget: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(100_000);

    for ce in family(&[0, 1, 2])? {
        println!(
            "expansion {}: G* has {} vertices, {} cuts; triangulation G has {} vertices",
            ce.expansion,
            ce.star.graph().vertex_count(),
            ce.cuts.len(),
            ce.primal.graph().vertex_count()
        );
    }

    let ce = build_counterexample(t)?;
    let dot = export::dot(&ce);
    println!("dot export: {} lines", dot.lines().count());

    let report = verify_counterexample(&ce, &Budget::limited(budget))?;
    println!("argument holds: {}", report.argument_holds());
    println!("lower bound: {:?} after {} nodes", report.chi1_lower, report.search_nodes);
    for e in &report.evidence {
        println!("  {e}");
    }
    Ok(())
}
