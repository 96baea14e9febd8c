//! Selection sets of triangulations lifted from perfect matchings of the dual,
//! with the 2-factor left behind and the bipartition of the remainder.
use robust_chromatic::factors::{enumerate_perfect_matchings, prop2_construct};
use robust_chromatic::planar::{dual, solids};
use std::ops::ControlFlow;

fn main() -> robust_chromatic::Result<()> {
    for (name, emb) in [
        ("tetrahedron", solids::tetrahedron()),
        ("octahedron", solids::octahedron()),
        ("icosahedron", solids::icosahedron()),
    ] {
        let d = dual(&emb)?;
        let matchings = enumerate_perfect_matchings(d.graph()?, None, |_| ControlFlow::Continue(()));
        match prop2_construct(&emb, &d, None)? {
            Some(cert) => println!(
                "{name:12} {matchings:3} dual matchings; |S| = {:2}, 2-factor cycles {:?}, G - S colours {:?}",
                cert.selection.len(),
                cert.two_factor.cycle_lengths(),
                cert.bipartition.colors()
            ),
            None => println!("{name}: no matching with a short 2-factor"),
        }
    }
    Ok(())
}
