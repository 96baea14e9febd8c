//! Prints a solid in the embedding text format: `emit_solids octahedron`.
use robust_chromatic::planar::{format::emit_embedding, solids};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "octahedron".into());
    let emb = match name.as_str() {
        "tetrahedron" => solids::tetrahedron(),
        "octahedron" => solids::octahedron(),
        "icosahedron" => solids::icosahedron(),
        "cube" => solids::cube(),
        other => {
            eprintln!("unknown solid {other}");
            std::process::exit(1);
        }
    };
    print!("# {name}\n{}", emit_embedding(&emb));
}
