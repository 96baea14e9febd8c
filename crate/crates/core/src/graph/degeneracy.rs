use super::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degeneracy {
    pub d: usize,
    /// Elimination order: each vertex has at most `d` neighbours after it.
    pub order: Vec<VertexId>,
}

/// Repeatedly removes a minimum-degree vertex (smallest id on ties).
pub fn degeneracy(g: &Graph) -> Degeneracy {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).unwrap();
        d = d.max(deg[v]);
        removed[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    Degeneracy { d, order }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn later_neighbours_bounded(g: &Graph, res: &Degeneracy) -> bool {
        let mut pos = vec![0; g.vertex_count()];
        for (i, &v) in res.order.iter().enumerate() {
            pos[v] = i;
        }
        (0..g.vertex_count()).all(|v| g.neighbors(v).filter(|&w| pos[w] > pos[v]).count() <= res.d)
    }

    #[test]
    fn trees_and_cliques() {
        assert_eq!(degeneracy(&path(5)).d, 1);
        assert_eq!(degeneracy(&complete(5)).d, 4);
        assert_eq!(degeneracy(&Graph::empty(0)), Degeneracy { d: 0, order: vec![] });
        let p = petersen();
        let r = degeneracy(&p);
        assert_eq!(r.d, 3);
        assert!(later_neighbours_bounded(&p, &r));
    }
}
