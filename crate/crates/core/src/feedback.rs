//! Reconfiguration of directed feedback vertex sets and feedback arc sets,
//! and the reduction from the vertex version to the arc version.

use crate::digraph::{ArcId, Digraph, VertexId};
use crate::error::{Error, Result};
use crate::families::is_acyclic_filtered;
use crate::idset::{ArcSet, IdSet, VertexSet};
use crate::search::bfs_shortest;
use crate::sequences::ReconfigSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FeedbackMode {
    /// Sets of vertices whose removal leaves the graph acyclic.
    Vertex,
    /// Sets of arcs whose removal leaves the graph acyclic.
    Arc,
}

/// Whether removing `set` (vertices or arcs, per `mode`) leaves `g`
/// acyclic.
pub fn is_feedback_set(g: &Digraph, set: &IdSet, mode: FeedbackMode) -> bool {
    match mode {
        FeedbackMode::Vertex => {
            is_acyclic_filtered(g, |a| !set.contains(g.tail(a)) && !set.contains(g.head(a)))
        }
        FeedbackMode::Arc => is_acyclic_filtered(g, |a| !set.contains(a)),
    }
}

#[derive(Debug, Clone)]
pub struct FeedbackInstance<'g> {
    pub graph: &'g Digraph,
    pub source: IdSet,
    pub target: IdSet,
    pub mode: FeedbackMode,
}

impl<'g> FeedbackInstance<'g> {
    pub fn new(
        graph: &'g Digraph,
        source: IdSet,
        target: IdSet,
        mode: FeedbackMode,
    ) -> Result<Self> {
        let inst = FeedbackInstance {
            graph,
            source,
            target,
            mode,
        };
        inst.validate()?;
        Ok(inst)
    }

    fn universe(&self) -> usize {
        match self.mode {
            FeedbackMode::Vertex => self.graph.vertex_count(),
            FeedbackMode::Arc => self.graph.arc_count(),
        }
    }

    pub fn size(&self) -> usize {
        self.source.len()
    }

    fn validate(&self) -> Result<()> {
        for set in [&self.source, &self.target] {
            match self.mode {
                FeedbackMode::Vertex => self.graph.check_vertices(set)?,
                FeedbackMode::Arc => self.graph.check_arcs(set)?,
            }
            if !is_feedback_set(self.graph, set, self.mode) {
                return Err(match self.mode {
                    FeedbackMode::Vertex => Error::NotFeedbackVertexSet,
                    FeedbackMode::Arc => Error::NotFeedbackArcSet,
                });
            }
        }
        if self.source.len() != self.target.len() {
            return Err(Error::SizeMismatch(self.source.len(), self.target.len()));
        }
        Ok(())
    }

    /// All feedback sets one exchange away from `set`.
    pub fn neighbors(&self, set: &IdSet) -> Vec<IdSet> {
        let universe = self.universe();
        let mut out = Vec::new();
        for x in set.iter() {
            for y in (0..universe).filter(|&y| !set.contains(y)) {
                let next = set.exchanged(x, y);
                if is_feedback_set(self.graph, &next, self.mode) {
                    out.push(next);
                }
            }
        }
        out
    }

    /// A shortest sequence of same-size feedback sets, or `None`.
    pub fn solve(&self, guard: usize) -> Result<Option<ReconfigSequence>> {
        self.validate()?;
        let path = bfs_shortest(self.source.clone(), &self.target, guard, |s| {
            self.neighbors(s)
        })?;
        Ok(path.map(ReconfigSequence::new))
    }
}

pub fn solve_feedback_reconfig(
    inst: &FeedbackInstance<'_>,
    guard: usize,
) -> Result<Option<ReconfigSequence>> {
    inst.solve(guard)
}

/// Split graph for the vertex-to-arc reduction.
///
/// Vertex `v` becomes `v_in = 2v` and `v_out = 2v + 1` joined by its
/// internal arc, whose id is `v`. Every original arc `(u, v)` becomes
/// `|V| + 1` parallel arcs `(u_out, v_in)`, so no feedback arc set of size
/// at most `|V|` can cut all copies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfasReduction {
    pub graph: Digraph,
    pub original_vertices: usize,
    /// Original arc -> its parallel copies.
    pub arc_copies: Vec<Vec<ArcId>>,
}

impl DfasReduction {
    pub fn in_vertex(&self, v: VertexId) -> VertexId {
        2 * v
    }

    pub fn out_vertex(&self, v: VertexId) -> VertexId {
        2 * v + 1
    }

    pub fn internal_arc(&self, v: VertexId) -> ArcId {
        v
    }

    pub fn is_internal(&self, a: ArcId) -> bool {
        a < self.original_vertices
    }

    /// The internal arcs of the vertices in `x`.
    pub fn map_vertex_set(&self, x: &VertexSet) -> ArcSet {
        x.iter().map(|v| self.internal_arc(v)).collect()
    }

    /// The vertices whose internal arcs lie in `y`; other arcs are ignored.
    pub fn project(&self, y: &ArcSet) -> VertexSet {
        y.iter().filter(|&a| self.is_internal(a)).collect()
    }
}

pub fn reduce_dfvs_to_dfas(g: &Digraph) -> DfasReduction {
    let n = g.vertex_count();
    let mut arcs: Vec<(VertexId, VertexId)> = (0..n).map(|v| (2 * v, 2 * v + 1)).collect();
    let mut arc_copies = Vec::with_capacity(g.arc_count());
    for arc in g.arcs() {
        let first = arcs.len();
        arcs.extend(std::iter::repeat_n((2 * arc.tail + 1, 2 * arc.head), n + 1));
        arc_copies.push((first..arcs.len()).collect());
    }
    DfasReduction {
        graph: Digraph::new(2 * n, arcs).expect("split graph has no self-loops"),
        original_vertices: n,
        arc_copies,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, arcs: &[(usize, usize)]) -> Digraph {
        Digraph::new(n, arcs.iter().copied()).unwrap()
    }

    #[test]
    fn identity_instance() {
        let g = graph(2, &[(0, 1), (1, 0)]);
        let inst = FeedbackInstance::new(&g, [0].into(), [0].into(), FeedbackMode::Vertex).unwrap();
        assert_eq!(inst.solve(1000).unwrap().unwrap().len(), 0);
    }

    #[test]
    fn bidirected_triangle_vertex_mode() {
        let g = graph(3, &[(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)]);
        let inst =
            FeedbackInstance::new(&g, [0, 1].into(), [1, 2].into(), FeedbackMode::Vertex).unwrap();
        assert_eq!(inst.solve(1000).unwrap().unwrap().len(), 1);
        assert_eq!(
            FeedbackInstance::new(&g, [0].into(), [1].into(), FeedbackMode::Vertex).unwrap_err(),
            Error::NotFeedbackVertexSet
        );
    }

    #[test]
    fn two_cycle_arc_mode() {
        let g = graph(2, &[(0, 1), (1, 0)]);
        let inst = FeedbackInstance::new(&g, [0].into(), [1].into(), FeedbackMode::Arc).unwrap();
        assert_eq!(inst.solve(1000).unwrap().unwrap().len(), 1);
    }

    #[test]
    fn split_graph_counts() {
        let g = graph(3, &[(0, 1), (1, 2), (2, 0)]);
        let red = reduce_dfvs_to_dfas(&g);
        assert_eq!(red.graph.vertex_count(), 6);
        assert_eq!(red.graph.arc_count(), 3 + 3 * 4);
        assert_eq!(red.map_vertex_set(&VertexSet::new()), ArcSet::new());
        let y = red.map_vertex_set(&[1].into());
        assert!(is_feedback_set(&red.graph, &y, FeedbackMode::Arc));
        assert_eq!(red.project(&[1, 5].into()), [1].into());
    }
}
