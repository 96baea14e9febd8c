//! Exact vertex colouring by saturation-degree branch and bound.

use serde::Serialize;

use super::{Graph, VertexId};
use crate::budget::{Budget, Verdict};

/// A vertex colouring with colours `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Wraps a colour vector; returns `None` unless it properly colours `g`.
    pub fn new(g: &Graph, colors: Vec<usize>) -> Option<Coloring> {
        let c = Self::from_colors_unchecked(colors);
        c.is_proper(g).then_some(c)
    }

    pub(crate) fn from_colors_unchecked(colors: Vec<usize>) -> Coloring {
        let k = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        Coloring { colors, k }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: VertexId) -> usize {
        self.colors[v]
    }

    /// Number of colours, `max colour + 1`.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.vertex_count()
            && g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Large clique found greedily: from every start vertex, add neighbours in
/// decreasing degree order whenever they extend the clique.
pub fn greedy_clique(g: &Graph) -> Vec<VertexId> {
    let mut best: Vec<VertexId> = Vec::new();
    for s in 0..g.vertex_count() {
        let mut cand: Vec<VertexId> = g.neighbors(s).collect();
        cand.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut clique = vec![s];
        for v in cand {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<Option<usize>>,
    /// Bit `c` set when some coloured neighbour has colour `c`.
    sat: Vec<u64>,
    uncolored: usize,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let n = g.vertex_count();
        Dsatur { g, k, color: vec![None; n], sat: vec![0; n], uncolored: n }
    }

    fn assign(&mut self, v: VertexId, c: usize) {
        self.color[v] = Some(c);
        self.uncolored -= 1;
        for w in self.g.neighbors(v) {
            self.sat[w] |= 1 << c;
        }
    }

    fn unassign(&mut self, v: VertexId) {
        self.color[v] = None;
        self.uncolored += 1;
        for w in self.g.neighbors(v) {
            let mut mask = 0u64;
            for x in self.g.neighbors(w) {
                if let Some(c) = self.color[x] {
                    mask |= 1 << c;
                }
            }
            self.sat[w] = mask;
        }
    }

    /// Uncoloured vertex with maximum saturation, then maximum uncoloured
    /// degree, then smallest id.
    fn pick(&self) -> VertexId {
        let mut best = None;
        let mut key = (0u32, 0usize);
        for v in 0..self.g.vertex_count() {
            if self.color[v].is_some() {
                continue;
            }
            let s = self.sat[v].count_ones();
            let d = self.g.neighbors(v).filter(|&w| self.color[w].is_none()).count();
            if best.is_none() || (s, d) > key {
                best = Some(v);
                key = (s, d);
            }
        }
        best.expect("pick called with every vertex coloured")
    }

    fn max_used(&self) -> Option<usize> {
        self.color.iter().flatten().copied().max()
    }

    fn search(&mut self, budget: &Budget) -> Option<bool> {
        if self.uncolored == 0 {
            return Some(true);
        }
        if !budget.tick() {
            return None;
        }
        let v = self.pick();
        // A colour above max_used + 1 is interchangeable with max_used + 1.
        let limit = self.max_used().map_or(1, |m| m + 2).min(self.k);
        for c in 0..limit {
            if self.sat[v] & (1 << c) != 0 {
                continue;
            }
            self.assign(v, c);
            match self.search(budget) {
                Some(true) => return Some(true),
                None => {
                    self.unassign(v);
                    return None;
                }
                Some(false) => self.unassign(v),
            }
        }
        Some(false)
    }

    fn finish(self) -> Coloring {
        Coloring::from_colors_unchecked(self.color.into_iter().map(|c| c.unwrap()).collect())
    }
}

/// Decides `k`-colourability. `No` is returned only after exhaustive refutation
/// (or when a clique larger than `k` is found); `Unknown` only when the budget
/// runs out. A zero budget yields `Unknown` unless the answer is immediate.
pub fn is_k_colorable(g: &Graph, k: usize, budget: &Budget) -> Verdict<Coloring> {
    assert!(k >= 1, "k must be positive");
    let n = g.vertex_count();
    if n == 0 {
        return Verdict::Yes(Coloring::from_colors_unchecked(Vec::new()));
    }
    if budget.limit() == Some(0) {
        return Verdict::Unknown;
    }
    if k >= n {
        return Verdict::Yes(Coloring::from_colors_unchecked((0..n).collect()));
    }
    assert!(k <= 64, "colour masks hold at most 64 colours");
    let clique = greedy_clique(g);
    if clique.len() > k {
        return Verdict::No;
    }
    let mut state = Dsatur::new(g, k);
    for (c, &v) in clique.iter().enumerate() {
        state.assign(v, c);
    }
    match state.search(budget) {
        Some(true) => Verdict::Yes(state.finish()),
        Some(false) => Verdict::No,
        None => Verdict::Unknown,
    }
}

/// Single DSATUR pass without backtracking: an upper-bound colouring.
fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.vertex_count();
    let mut colors = vec![usize::MAX; n];
    let mut seen: Vec<Vec<usize>> = vec![Vec::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (seen[v].len(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (0..).find(|c| seen[v].binary_search(c).is_err()).unwrap();
        colors[v] = c;
        for w in g.neighbors(v) {
            if let Err(pos) = seen[w].binary_search(&c) {
                seen[w].insert(pos, c);
            }
        }
    }
    Coloring::from_colors_unchecked(colors)
}

/// Result of [`chromatic_number`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chromatic {
    Exact(usize, Coloring),
    /// Budget ran out; `lower <= chi <= upper` and `coloring` attains `upper`.
    Bracketed { lower: usize, upper: usize, coloring: Coloring },
}

impl Chromatic {
    pub fn exact(&self) -> Option<usize> {
        match self {
            Chromatic::Exact(k, _) => Some(*k),
            Chromatic::Bracketed { .. } => None,
        }
    }

    pub fn bounds(&self) -> (usize, usize) {
        match self {
            Chromatic::Exact(k, _) => (*k, *k),
            Chromatic::Bracketed { lower, upper, .. } => (*lower, *upper),
        }
    }

    pub fn coloring(&self) -> &Coloring {
        match self {
            Chromatic::Exact(_, c) | Chromatic::Bracketed { coloring: c, .. } => c,
        }
    }
}

/// Exact chromatic number by iterated [`is_k_colorable`] from the clique bound.
pub fn chromatic_number(g: &Graph, budget: &Budget) -> Chromatic {
    let n = g.vertex_count();
    if n == 0 {
        return Chromatic::Exact(0, Coloring::from_colors_unchecked(Vec::new()));
    }
    let upper_coloring = dsatur_greedy(g);
    let upper = upper_coloring.k();
    let mut lower = greedy_clique(g).len().max(1);
    let mut best = upper_coloring;
    while lower < best.k() {
        match is_k_colorable(g, lower, budget) {
            Verdict::Yes(c) => {
                best = c;
                break;
            }
            Verdict::No => lower += 1,
            Verdict::Unknown => {
                return Chromatic::Bracketed { lower, upper: best.k(), coloring: best };
            }
        }
    }
    debug_assert!(best.k() <= upper);
    Chromatic::Exact(best.k(), best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::Graph;

    fn brute_force_colorable(g: &Graph, k: usize) -> bool {
        let n = g.vertex_count();
        let mut colors = vec![0usize; n];
        loop {
            if g.edges().iter().all(|&(u, v)| colors[u] != colors[v]) {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                colors[i] += 1;
                if colors[i] < k {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn k4_needs_four() {
        let g = complete(4);
        assert_eq!(is_k_colorable(&g, 3, &Budget::unlimited()), Verdict::No);
        assert!(is_k_colorable(&g, 4, &Budget::unlimited()).is_yes());
    }

    #[test]
    fn petersen_three_colorable_matches_brute_force() {
        let g = petersen();
        assert!(brute_force_colorable(&g, 3));
        assert!(!brute_force_colorable(&g, 2));
        match is_k_colorable(&g, 3, &Budget::unlimited()) {
            Verdict::Yes(c) => assert!(c.is_proper(&g) && c.k() <= 3),
            other => panic!("{other:?}"),
        }
        assert_eq!(is_k_colorable(&g, 2, &Budget::unlimited()), Verdict::No);
    }

    #[test]
    fn zero_budget_is_unknown() {
        assert_eq!(is_k_colorable(&petersen(), 3, &Budget::limited(0)), Verdict::Unknown);
    }

    #[test]
    fn chromatic_numbers() {
        let b = Budget::unlimited();
        assert_eq!(chromatic_number(&Graph::empty(3), &b).exact(), Some(1));
        assert_eq!(chromatic_number(&cycle(7), &b).exact(), Some(3));
        assert_eq!(chromatic_number(&Graph::empty(0), &b).exact(), Some(0));
        // Octahedron = K_{2,2,2}.
        let oct = Graph::new(6, complete(6).edges().iter().copied().filter(|&(u, v)| v != u + 3))
            .unwrap();
        assert!(brute_force_colorable(&oct, 3) && !brute_force_colorable(&oct, 2));
        assert_eq!(chromatic_number(&oct, &b).exact(), Some(3));
    }
}
