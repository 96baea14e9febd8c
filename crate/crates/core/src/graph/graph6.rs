//! The graph6 text format, bit-compatible with the nauty definition.
//!
//! `N(n)` is one byte `n + 63` for `n <= 62`, `~` plus three 6-bit groups for
//! `n <= 258047`, and `~~` plus six groups beyond that. The upper triangle is
//! then packed column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), six bits
//! per byte, big-endian within each byte, zero-padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { offset, message: message.into() }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (base, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, format!("byte {b:#04x} outside the graph6 range 63..=126")));
        }
    }
    let (n, start) = decode_n(body).map_err(|(o, m)| err(base + o, m))?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let data = &body[start..];
    if data.len() != need {
        return Err(err(
            base + start + data.len().min(need),
            format!("expected {need} adjacency bytes for n = {n}, found {}", data.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad = (data[need - 1] - 63) & ((1 << (6 - bits % 6)) - 1);
        if pad != 0 {
            return Err(err(base + start + need - 1, "non-zero padding bits"));
        }
    }
    Graph::new(n, edges)
}

fn decode_n(body: &[u8]) -> std::result::Result<(usize, usize), (usize, &'static str)> {
    let group = |range: std::ops::Range<usize>| -> std::result::Result<usize, (usize, &'static str)> {
        if body.len() < range.end {
            return Err((body.len(), "truncated vertex-count header"));
        }
        Ok(body[range].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    match body.first() {
        None => Err((0, "empty input")),
        Some(&126) if body.get(1) == Some(&126) => Ok((group(2..8)?, 8)),
        Some(&126) => Ok((group(1..4)?, 4)),
        Some(&b) => Ok(((b - 63) as usize, 1)),
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use proptest::prelude::*;

    #[test]
    fn k4_is_c_tilde() {
        assert_eq!(emit_graph6(&complete(4)), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), complete(4));
    }

    #[test]
    fn empty_graph() {
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap().vertex_count(), 0);
    }

    #[test]
    fn known_strings() {
        // Published examples: the path P3 as "Bg" and the Petersen graph.
        assert_eq!(emit_graph6(&path(3)), "Bg");
        assert_eq!(emit_graph6(&petersen()).len(), 1 + 8);
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), complete(4));
    }

    #[test]
    fn large_header() {
        let g = path(100);
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn errors_carry_offsets() {
        assert!(matches!(parse_graph6("C~~"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6("C"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("C\x20"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("~?"), Err(Error::Graph6 { .. })));
        // n = 3: three bits, so the low three padding bits must be 0.
        assert_eq!(parse_graph6("Bw").unwrap(), complete(3));
        assert!(matches!(parse_graph6("Bx"), Err(Error::Graph6 { offset: 1, .. })));
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..20, bits in proptest::collection::vec(any::<bool>(), 190)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] { edges.push((u, v)); }
                    k += 1;
                }
            }
            let g = Graph::new(n, edges).unwrap();
            let s = emit_graph6(&g);
            let back = parse_graph6(&s).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(emit_graph6(&back), s);
        }
    }
}
