//! The three-port fragment: spanning path counts between ports and the
//! exhaustive check of its degree-2 traces.
use robust_chromatic::gadgets::{tutte_fragment, verify_claim_two_factor, Port};

fn main() -> robust_chromatic::Result<()> {
    let fr = tutte_fragment()?;
    let g = fr.internal();
    println!("fragment: {} vertices, {} edges", g.vertex_count(), g.edge_count());
    for p in Port::ALL {
        println!("  port {p:?}: marked edge {} at vertex {}", fr.marked(p), fr.attachment(p));
    }
    println!("spanning paths between ports: {:?}", fr.spanning_path_counts());

    let report = verify_claim_two_factor(&fr);
    println!(
        "{} traces ({} avoid a, {} use a), {} exceptions",
        report.traces.len(),
        report.without_a,
        report.with_a,
        report.exceptions
    );
    for line in report.log_with_a() {
        println!("  {line}");
    }
    Ok(())
}
