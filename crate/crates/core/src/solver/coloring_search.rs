use super::Witness;
use crate::budget::{Budget, Verdict};
use crate::graph::{degeneracy, Coloring, EdgeId, Graph, VertexId};
use crate::selection::{SelectionSet, UnicyclicForest};

/// Decides `chi_1(g) <= k` through colourings: some `k`-colouring of the
/// vertices must have monochromatic edges forming a 1-selection set, and that
/// set is then the selection. Colours are assigned along the reverse
/// degeneracy order, each new colour at most one above those used so far.
pub fn decide_chi1_at_most(g: &Graph, k: usize, budget: &Budget) -> Verdict<Witness> {
    let n = g.vertex_count();
    if n == 0 {
        return to_witness(g, Vec::new(), Vec::new());
    }
    if k == 0 {
        return Verdict::No;
    }
    let mut order = degeneracy(g).order;
    order.reverse();
    let mut colors = vec![usize::MAX; n];
    let mut mono = Vec::new();
    let forest = UnicyclicForest::new(n);
    let mut search = Search { g, k, budget, order: &order, colors: &mut colors, mono: &mut mono };
    match search.place(0, 0, &forest) {
        Step::Found => to_witness(g, colors, mono),
        Step::Exhausted => Verdict::No,
        Step::OutOfBudget => Verdict::Unknown,
    }
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    budget: &'a Budget,
    order: &'a [VertexId],
    colors: &'a mut Vec<usize>,
    mono: &'a mut Vec<EdgeId>,
}

impl Search<'_> {
    fn place(&mut self, i: usize, used: usize, forest: &UnicyclicForest) -> Step {
        if i == self.order.len() {
            return Step::Found;
        }
        if !self.budget.tick() {
            return Step::OutOfBudget;
        }
        let v = self.order[i];
        for c in 0..self.k.min(used + 1) {
            let mut next = forest.clone();
            let mark = self.mono.len();
            let ok = self.g.incident(v).iter().all(|&(w, e)| {
                if self.colors[w] != c {
                    return true;
                }
                self.mono.push(e);
                next.try_add(v, w)
            });
            if ok {
                self.colors[v] = c;
                match self.place(i + 1, used.max(c + 1), &next) {
                    Step::Exhausted => {}
                    other => return other,
                }
                self.colors[v] = usize::MAX;
            }
            self.mono.truncate(mark);
        }
        Step::Exhausted
    }
}

fn to_witness(g: &Graph, colors: Vec<usize>, mono: Vec<EdgeId>) -> Verdict<Witness> {
    let selection = SelectionSet::with_assignment(g, mono.into_iter().collect())
        .expect("forest kept the monochromatic edges unicyclic");
    let rest = g.without_edges(selection.edges());
    let coloring = Coloring::new(&rest, colors).expect("only monochromatic edges were removed");
    Verdict::Yes(Witness { selection, coloring })
}
