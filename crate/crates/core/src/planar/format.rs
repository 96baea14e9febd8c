//! Plain-text rotation systems.
//!
//! ```text
//! # comment
//! n m
//! v: e_1 e_2 ...        (n lines, counterclockwise edge ids at v)
//! e: u v                (m lines)
//! ```
//!
//! Edge ids in a file may be any permutation of `0..m`; they are mapped to the
//! canonical ids of [`Graph`]. The emitter writes canonical ids, so canonical
//! input round-trips byte for byte (comments aside).

use std::fmt::Write;

use super::Embedding;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

fn bad(line: usize, message: impl Into<String>) -> Error {
    Error::EmbeddingFormat { line, message: message.into() }
}

fn parse_num(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| bad(line, format!("expected a non-negative integer, found {tok:?}")))
}

fn labelled(body: &str, line: usize) -> Result<(usize, Vec<usize>)> {
    let (head, rest) = body.split_once(':').ok_or_else(|| bad(line, "missing ':'"))?;
    let id = parse_num(head.trim(), line)?;
    let vals = rest.split_whitespace().map(|t| parse_num(t, line)).collect::<Result<Vec<_>>>()?;
    Ok((id, vals))
}

pub fn parse_embedding(text: &str) -> Result<Embedding> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hl, header) = lines.next().ok_or_else(|| bad(1, "empty input"))?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    if nums.len() != 2 {
        return Err(bad(hl, "header must be \"n m\""));
    }
    let n = parse_num(nums[0], hl)?;
    let m = parse_num(nums[1], hl)?;

    let mut rot: Vec<Option<Vec<usize>>> = vec![None; n];
    for _ in 0..n {
        let (ln, body) = lines.next().ok_or_else(|| bad(hl, "fewer vertex lines than n"))?;
        let (v, list) = labelled(body, ln)?;
        if v >= n || rot[v].is_some() {
            return Err(bad(ln, format!("vertex {v} out of range or repeated")));
        }
        rot[v] = Some(list);
    }
    let mut file_edges: Vec<Option<(usize, usize)>> = vec![None; m];
    for _ in 0..m {
        let (ln, body) = lines.next().ok_or_else(|| bad(hl, "fewer edge lines than m"))?;
        let (e, ends) = labelled(body, ln)?;
        if e >= m || file_edges[e].is_some() {
            return Err(bad(ln, format!("edge {e} out of range or repeated")));
        }
        if ends.len() != 2 {
            return Err(bad(ln, "edge line needs two endpoints"));
        }
        file_edges[e] = Some((ends[0], ends[1]));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(bad(ln, "trailing content"));
    }
    let file_edges: Vec<(usize, usize)> = file_edges.into_iter().map(Option::unwrap).collect();
    let graph = Graph::new(n, file_edges.iter().copied())?;
    let to_canonical: Vec<EdgeId> =
        file_edges.iter().map(|&(u, v)| graph.edge_id(u, v).unwrap()).collect();
    let mut rotation = Vec::with_capacity(n);
    for (v, list) in rot.into_iter().enumerate() {
        let list = list.unwrap();
        let mut r = Vec::with_capacity(list.len());
        for e in list {
            let c = *to_canonical.get(e).ok_or(Error::Rotation {
                vertex: v,
                message: format!("dangling edge id {e}"),
            })?;
            r.push(c);
        }
        rotation.push(r);
    }
    Embedding::new(graph, rotation)
}

pub fn emit_embedding(emb: &Embedding) -> String {
    let g = emb.graph();
    let mut out = String::new();
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for v in 0..g.vertex_count() {
        write!(out, "{v}:").unwrap();
        for e in emb.rotation(v) {
            write!(out, " {e}").unwrap();
        }
        out.push('\n');
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        writeln!(out, "{e}: {u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::solids;

    #[test]
    fn round_trip_solids() {
        for emb in [solids::tetrahedron(), solids::octahedron(), solids::cube(), solids::icosahedron()] {
            let text = emit_embedding(&emb);
            let back = parse_embedding(&text).unwrap();
            assert_eq!(back, emb);
            assert_eq!(emit_embedding(&back), text);
        }
    }

    #[test]
    fn comments_and_relabelled_edges() {
        let text = "# a triangle\n3 3\n0: 2 0\n1: 0 1 # tail comment\n2: 1 2\n0: 1 0\n1: 2 1\n2: 0 2\n";
        let emb = parse_embedding(text).unwrap();
        assert_eq!(emb.graph().edges(), &[(0, 1), (0, 2), (1, 2)]);
        // File edge 2 = {0,2} is canonical 1, file edge 0 = {0,1} is canonical 0.
        assert_eq!(emb.rotation(0), &[1, 0]);
    }

    #[test]
    fn errors_name_lines() {
        assert!(matches!(parse_embedding("2 1\n0: 0\n"), Err(Error::EmbeddingFormat { .. })));
        assert!(matches!(parse_embedding("2 1\n0: 0\n1 0\n"), Err(Error::EmbeddingFormat { line: 3, .. })));
        assert!(matches!(
            parse_embedding("2 1\n0: 5\n1: 0\n0: 0 1\n"),
            Err(Error::Rotation { vertex: 0, .. })
        ));
        assert!(matches!(parse_embedding("2 1\n0: 0\n1: 0\n0: 0 1\nextra\n"), Err(Error::EmbeddingFormat { line: 5, .. })));
    }
}
