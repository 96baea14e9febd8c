//! Sidecar JSON and Graphviz output for built counterexamples.

use std::fmt::Write;

use serde::Serialize;

use super::counterexample::{AttachmentPattern, Counterexample, Facing};
use super::fragment::Port;
use crate::graph::{EdgeId, VertexId};
use crate::planar::format::emit_embedding;

#[derive(Debug, Serialize)]
struct Sidecar<'a> {
    expansion: usize,
    pattern: &'a AttachmentPattern,
    star_vertices: usize,
    star_edges: usize,
    primal_vertices: usize,
    cuts: &'a [[EdgeId; 3]],
    copies: Vec<CopyRecord>,
}

#[derive(Debug, Serialize)]
struct CopyRecord {
    index: usize,
    ring: usize,
    slot: usize,
    facing: Facing,
    first_vertex: VertexId,
    last_vertex: VertexId,
    a: EdgeId,
    b: EdgeId,
    c: EdgeId,
}

/// `G*` in the embedding text format.
pub fn star_embedding_text(ce: &Counterexample) -> String {
    emit_embedding(&ce.star)
}

/// Cuts, fragment copies and marked edges, keyed to the edge ids of
/// [`star_embedding_text`].
pub fn sidecar_json(ce: &Counterexample) -> String {
    let copies = ce
        .copies
        .iter()
        .map(|c| CopyRecord {
            index: c.index,
            ring: c.ring,
            slot: c.slot,
            facing: c.facing,
            first_vertex: c.vertices.start,
            last_vertex: c.vertices.end - 1,
            a: c.marked[Port::A.index()],
            b: c.marked[Port::B.index()],
            c: c.marked[Port::C.index()],
        })
        .collect();
    let g = ce.star.graph();
    let sidecar = Sidecar {
        expansion: ce.expansion,
        pattern: &ce.pattern,
        star_vertices: g.vertex_count(),
        star_edges: g.edge_count(),
        primal_vertices: ce.primal.graph().vertex_count(),
        cuts: &ce.cuts,
        copies,
    };
    serde_json::to_string_pretty(&sidecar).expect("plain data")
}

const PALETTE: [&str; 6] = ["#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02"];

/// Graphviz: one cluster per copy, cut edges drawn heavy.
pub fn dot(ce: &Counterexample) -> String {
    let g = ce.star.graph();
    let mut out = String::from("graph counterexample {\n  node [shape=point];\n");
    for c in &ce.copies {
        let colour = PALETTE[c.ring % PALETTE.len()];
        let _ = writeln!(out, "  subgraph cluster_{} {{\n    color=\"{colour}\";", c.index);
        for v in c.vertices.clone() {
            let _ = writeln!(out, "    {v} [color=\"{colour}\"];");
        }
        out.push_str("  }\n");
    }
    let cut_edges: Vec<EdgeId> = ce.cuts.iter().flatten().copied().collect();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if cut_edges.contains(&e) {
            let _ = writeln!(out, "  {u} -- {v} [penwidth=4, color=red];");
        } else {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::build_counterexample;
    use crate::planar::format::parse_embedding;

    #[test]
    fn exports_round_trip() {
        let ce = build_counterexample(0).unwrap();
        let back = parse_embedding(&star_embedding_text(&ce)).unwrap();
        assert_eq!(back.graph(), ce.star.graph());
        let json: serde_json::Value = serde_json::from_str(&sidecar_json(&ce)).unwrap();
        assert_eq!(json["copies"].as_array().unwrap().len(), 18);
        assert_eq!(dot(&ce).matches("penwidth=4").count(), 9);
    }
}
