use crate::graph::VertexId;

/// Union-find over the vertices of a host graph that tracks, per component,
/// how many edges have been added. Refuses any edge that would give a
/// component more edges than vertices (a second cycle).
///
/// Adding edges never lowers `edges - vertices` of a component, so once an
/// edge is refused every superset of the current set would be refused too.
#[derive(Debug, Clone)]
pub struct UnicyclicForest {
    parent: Vec<u32>,
    vertices: Vec<u32>,
    edges: Vec<u32>,
}

impl UnicyclicForest {
    pub fn new(n: usize) -> Self {
        UnicyclicForest {
            parent: (0..n as u32).collect(),
            vertices: vec![1; n],
            edges: vec![0; n],
        }
    }

    pub fn find(&self, v: VertexId) -> VertexId {
        let mut x = v as u32;
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
        }
        x as usize
    }

    /// Would adding `uv` keep every component at most unicyclic?
    pub fn can_add(&self, u: VertexId, v: VertexId) -> bool {
        let (a, b) = (self.find(u), self.find(v));
        if a == b {
            self.edges[a] < self.vertices[a]
        } else {
            self.edges[a] + self.edges[b] < self.vertices[a] + self.vertices[b]
        }
    }

    /// Adds `uv` when allowed; returns whether it was added.
    pub fn try_add(&mut self, u: VertexId, v: VertexId) -> bool {
        if !self.can_add(u, v) {
            return false;
        }
        let (a, b) = (self.find(u), self.find(v));
        if a == b {
            self.edges[a] += 1;
        } else {
            let (big, small) = if self.vertices[a] >= self.vertices[b] { (a, b) } else { (b, a) };
            self.parent[small] = big as u32;
            self.vertices[big] += self.vertices[small];
            self.edges[big] += self.edges[small] + 1;
        }
        true
    }

    /// True when `v`'s component already holds its one cycle.
    pub fn is_unicyclic(&self, v: VertexId) -> bool {
        let r = self.find(v);
        self.edges[r] == self.vertices[r]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refuses_second_cycle() {
        let mut f = UnicyclicForest::new(4);
        assert!(f.try_add(0, 1));
        assert!(f.try_add(1, 2));
        assert!(f.try_add(2, 0));
        assert!(f.is_unicyclic(1));
        assert!(f.try_add(2, 3));
        assert!(!f.try_add(3, 0));
        let mut g = UnicyclicForest::new(6);
        for (u, v) in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)] {
            assert!(g.try_add(u, v));
        }
        assert!(!g.can_add(0, 3));
    }
}
