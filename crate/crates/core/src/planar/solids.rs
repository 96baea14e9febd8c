//! Plane embeddings of the standard small solids and triangulation families.

use super::{dual, Embedding};
use crate::graph::{families, VertexId};

fn faces(n: usize, f: Vec<Vec<VertexId>>) -> Embedding {
    Embedding::from_faces(n, &f).expect("hard-coded faces are consistently oriented")
}

pub fn tetrahedron() -> Embedding {
    faces(4, vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]])
}

/// Apex 0, equator 1-2-3-4, apex 5.
pub fn octahedron() -> Embedding {
    bipyramid_with(4, 0, 5, 1)
}

pub fn cube() -> Embedding {
    dual(&octahedron()).unwrap().embedding().unwrap().clone()
}

/// Apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
pub fn icosahedron() -> Embedding {
    let up = |i: usize| 1 + i % 5;
    let lo = |i: usize| 6 + i % 5;
    let mut f = Vec::new();
    for i in 0..5 {
        f.push(vec![0, up(i), up(i + 1)]);
        f.push(vec![up(i), lo(i), up(i + 1)]);
        f.push(vec![up(i + 1), lo(i), lo(i + 1)]);
        f.push(vec![11, lo(i + 1), lo(i)]);
    }
    faces(12, f)
}

pub fn dodecahedron() -> Embedding {
    dual(&icosahedron()).unwrap().embedding().unwrap().clone()
}

fn bipyramid_with(k: usize, top: VertexId, bottom: VertexId, ring0: VertexId) -> Embedding {
    let r = |i: usize| ring0 + i % k;
    let mut f = Vec::new();
    for i in 0..k {
        f.push(vec![top, r(i), r(i + 1)]);
        f.push(vec![bottom, r(i + 1), r(i)]);
    }
    faces(k + 2, f)
}

/// Double pyramid over a `k`-cycle: ring `0..k`, apexes `k` and `k + 1`.
pub fn bipyramid(k: usize) -> Embedding {
    assert!(k >= 3);
    bipyramid_with(k, k, k + 1, 0)
}

/// Stacked (Apollonian) triangulation: start from the tetrahedron and insert
/// vertex `4 + i` into face `choices[i] % face_count` of the current list.
/// The new vertex's three faces replace the old face in place and are
/// appended after it.
pub fn stacked(choices: &[usize]) -> Embedding {
    let mut f: Vec<Vec<VertexId>> = vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]];
    for (i, &c) in choices.iter().enumerate() {
        let x = 4 + i;
        let at = c % f.len();
        let (a, b, cc) = (f[at][0], f[at][1], f[at][2]);
        f[at] = vec![a, b, x];
        f.push(vec![b, cc, x]);
        f.push(vec![cc, a, x]);
    }
    faces(4 + choices.len(), f)
}

pub fn cycle(n: usize) -> Embedding {
    let g = families::cycle(n);
    let nbrs: Vec<Vec<VertexId>> = (0..n).map(|v| vec![(v + n - 1) % n, (v + 1) % n]).collect();
    Embedding::from_neighbor_rotation(g, &nbrs).unwrap()
}

/// Rim `0..k`, hub `k`.
pub fn wheel(k: usize) -> Embedding {
    let mut f = Vec::new();
    for i in 0..k {
        f.push(vec![k, i, (i + 1) % k]);
    }
    f.push((0..k).rev().collect());
    faces(k + 1, f)
}

/// Every triangulation in the fixed corpus, with a short name.
pub fn triangulation_corpus() -> Vec<(String, Embedding)> {
    let mut out = vec![("tetrahedron".to_string(), tetrahedron()), ("octahedron".to_string(), octahedron())];
    for k in 3..=8 {
        if k != 4 {
            out.push((format!("bipyramid-{k}"), bipyramid(k)));
        }
    }
    let patterns: [&[usize]; 8] = [
        &[0],
        &[0, 0],
        &[0, 4],
        &[1, 2, 3],
        &[0, 0, 0, 0],
        &[3, 5, 7, 9],
        &[0, 1, 2, 3, 4],
        &[2, 7, 1, 8, 2, 8],
    ];
    for p in patterns {
        let name = format!("stacked-{}", p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("."));
        out.push((name, stacked(p)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::{check_planarity, is_triangulation, three_connected, trace_faces};

    #[test]
    fn corpus_triangulations_are_valid() {
        for (name, emb) in triangulation_corpus().into_iter().chain([("icosahedron".into(), icosahedron())]) {
            let g = emb.graph();
            assert!(check_planarity(&emb).is_planar(), "{name}");
            assert!(is_triangulation(&emb), "{name}");
            assert_eq!(trace_faces(&emb).len(), 2 * g.vertex_count() - 4, "{name}");
            assert!(three_connected(g).unwrap(), "{name}");
        }
    }

    #[test]
    fn solid_counts() {
        assert_eq!(icosahedron().graph().edge_count(), 30);
        assert!(dodecahedron().graph().is_regular(3));
        assert_eq!(dodecahedron().graph().vertex_count(), 20);
        assert_eq!(cube().graph().vertex_count(), 8);
        assert!(check_planarity(&wheel(5)).is_planar());
        assert_eq!(stacked(&[0, 0]).graph().vertex_count(), 6);
    }
}
