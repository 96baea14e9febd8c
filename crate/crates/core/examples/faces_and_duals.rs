//! Face tracing, the Euler check and geometric duals of the Platonic solids.
use robust_chromatic::planar::{check_planarity, dual, is_triangulation, solids, trace_faces};

fn main() -> robust_chromatic::Result<()> {
    for (name, emb) in [
        ("tetrahedron", solids::tetrahedron()),
        ("cube", solids::cube()),
        ("octahedron", solids::octahedron()),
        ("dodecahedron", solids::dodecahedron()),
        ("icosahedron", solids::icosahedron()),
        ("hexagon", solids::cycle(6)),
    ] {
        let euler = check_planarity(&emb);
        let faces = trace_faces(&emb);
        let d = dual(&emb)?;
        let star = match d.graph() {
            Ok(g) => format!("simple dual with {} vertices, {} edges", g.vertex_count(), g.edge_count()),
            Err(_) => format!("dual multigraph on {} vertices", d.multigraph().vertex_count()),
        };
        println!(
            "{name:13} V-E+F = {}-{}+{}, genus {}, face lengths {:?}, triangulation {}; {star}",
            euler.vertices,
            euler.edges,
            euler.faces,
            euler.genus,
            faces.lengths(),
            is_triangulation(&emb)
        );
    }
    Ok(())
}
