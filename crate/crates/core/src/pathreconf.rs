//! Directed path reconfiguration and directed path sliding.
//!
//! Both problems are PSPACE-complete, so they are solved by exhaustive
//! breadth-first search over vertex sequences. The two polynomial
//! reductions between them are provided as instance transformers.

use std::collections::HashSet;

use crate::digraph::{ArcId, Digraph, VertexId};
use crate::error::{Error, Result};
use crate::families::validate_directed_path;
use crate::idset::ArcSet;
use crate::search::bfs_shortest;
use crate::sequences::ReconfigSequence;

/// A directed path `(v_1, ..., v_k)`, `k >= 2`, in a graph without parallel
/// arcs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathState {
    pub vertices: Vec<VertexId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathMode {
    /// Forward and backward slides only.
    Sliding,
    /// Every single-arc exchange that keeps a directed path.
    Reconfiguration,
}

impl PathState {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        PathState { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn tail(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn head(&self) -> VertexId {
        self.vertices[self.vertices.len() - 1]
    }

    /// Arc ids joining consecutive vertices.
    pub fn arcs(&self, g: &Digraph) -> Result<ArcSet> {
        self.vertices
            .windows(2)
            .map(|w| g.find_arc(w[0], w[1]).ok_or(Error::NotAPath))
            .collect()
    }

    pub fn validate(&self, g: &Digraph) -> Result<()> {
        if g.has_parallel_arcs() {
            return Err(Error::ParallelArcs);
        }
        self.validate_in_simple(g)
    }

    fn validate_in_simple(&self, g: &Digraph) -> Result<()> {
        if self.vertices.len() < 2 {
            return Err(Error::NotAPath);
        }
        for &v in &self.vertices {
            g.check_vertex(v)?;
        }
        let distinct: HashSet<_> = self.vertices.iter().collect();
        if distinct.len() != self.vertices.len() {
            return Err(Error::NotAPath);
        }
        self.arcs(g).map(|_| ())
    }

    /// The path spelled by a validated arc set.
    pub fn from_arcs(g: &Digraph, arcs: &ArcSet) -> Result<Self> {
        Ok(PathState::new(validate_directed_path(g, arcs)?.vertices))
    }
}

/// All paths one move away from `p` under `mode`, sorted and deduplicated.
///
/// Sliding moves are `(v_2, ..., v_k, v)` and `(v, v_1, ..., v_{k-1})`.
/// Reconfiguration adds turning, `(v_1, ..., v_{k-1}, v)` and
/// `(v, v_2, ..., v_k)` for `v` outside the path, and shifting, the
/// rotations of `p` when `(v_k, v_1)` closes a cycle. A single-arc path can
/// additionally jump to any other arc.
pub fn path_neighbors(g: &Digraph, p: &PathState, mode: PathMode) -> Result<Vec<PathState>> {
    p.validate(g)?;
    Ok(neighbors_unchecked(g, p, mode))
}

fn in_neighbors(g: &Digraph, v: VertexId) -> Vec<VertexId> {
    let mut tails: Vec<_> = g.in_arcs(v).iter().map(|&a| g.tail(a)).collect();
    tails.sort_unstable();
    tails.dedup();
    tails
}

fn neighbors_unchecked(g: &Digraph, p: &PathState, mode: PathMode) -> Vec<PathState> {
    let vs = &p.vertices;
    let k = vs.len();
    let on_path = |v: VertexId, range: std::ops::Range<usize>| vs[range].contains(&v);
    let mut out = Vec::new();

    for v in g.out_neighbors(vs[k - 1]) {
        if !on_path(v, 1..k) {
            out.push([&vs[1..], &[v]].concat());
        }
    }
    for v in in_neighbors(g, vs[0]) {
        if !on_path(v, 0..k - 1) {
            out.push([&[v], &vs[..k - 1]].concat());
        }
    }

    if mode == PathMode::Reconfiguration {
        for v in g.out_neighbors(vs[k - 2]) {
            if !on_path(v, 0..k) {
                out.push([&vs[..k - 1], &[v]].concat());
            }
        }
        for v in in_neighbors(g, vs[1]) {
            if !on_path(v, 0..k) {
                out.push([&[v], &vs[1..]].concat());
            }
        }
        if g.find_arc(vs[k - 1], vs[0]).is_some() {
            for i in 1..k {
                out.push([&vs[i..], &vs[..i]].concat());
            }
        }
        if k == 2 {
            for arc in g.arcs() {
                out.push(vec![arc.tail, arc.head]);
            }
        }
    }

    out.sort_unstable();
    out.dedup();
    out.retain(|q| q != vs);
    out.into_iter().map(PathState::new).collect()
}

/// The forward slides that realise a shift of `p` by `steps` positions
/// along the cycle closed by `(v_k, v_1)`, starting with `p` itself.
pub fn shift_as_slides(p: &PathState, steps: usize) -> Vec<PathState> {
    let k = p.len();
    (0..=steps)
        .map(|i| PathState::new((0..k).map(|j| p.vertices[(i + j) % k]).collect()))
        .collect()
}

/// A shortest sequence of paths from `source` to `target`, or `None`.
pub fn solve_path(
    g: &Digraph,
    source: &PathState,
    target: &PathState,
    mode: PathMode,
    guard: usize,
) -> Result<Option<Vec<PathState>>> {
    if source.len() != target.len() {
        return Err(Error::SizeMismatch(source.len(), target.len()));
    }
    source.validate(g)?;
    target.validate(g)?;
    bfs_shortest(source.clone(), target, guard, |p| {
        neighbors_unchecked(g, p, mode)
    })
}

/// The arc sets of a path sequence.
pub fn to_sequence(g: &Digraph, paths: &[PathState]) -> Result<ReconfigSequence> {
    Ok(ReconfigSequence::new(
        paths.iter().map(|p| p.arcs(g)).collect::<Result<_>>()?,
    ))
}

/// A transformed path instance together with its correspondence maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub graph: Digraph,
    /// Original vertex -> transformed vertex.
    pub vertex_map: Vec<VertexId>,
    /// Original arc -> transformed arcs replacing it.
    pub arc_map: Vec<Vec<ArcId>>,
    pub source: PathState,
    pub target: PathState,
}

/// Reconfiguration to sliding: every vertex `v` gets pendant vertices
/// `v_in = n + 2v` and `v_out = n + 2v + 1` with arcs `(v_in, v)` and
/// `(v, v_out)`. Original vertices and arcs keep their ids.
pub fn reduce_reconf_to_slide(
    g: &Digraph,
    source: &PathState,
    target: &PathState,
) -> Result<ReductionArtifact> {
    source.validate(g)?;
    target.validate(g)?;
    let n = g.vertex_count();
    let arcs = g
        .arcs()
        .iter()
        .map(|a| (a.tail, a.head))
        .chain((0..n).flat_map(|v| [(n + 2 * v, v), (v, n + 2 * v + 1)]));
    Ok(ReductionArtifact {
        graph: Digraph::new(3 * n, arcs)?,
        vertex_map: (0..n).collect(),
        arc_map: (0..g.arc_count()).map(|a| vec![a]).collect(),
        source: source.clone(),
        target: target.clone(),
    })
}

/// Sliding to reconfiguration: every arc `e = (u, w)` is subdivided by
/// `v_e = n + e` into arcs `2e = (u, v_e)` and `2e + 1 = (v_e, w)`. Paths
/// are mapped to their subdivided images.
pub fn reduce_slide_to_reconf(
    g: &Digraph,
    source: &PathState,
    target: &PathState,
) -> Result<ReductionArtifact> {
    source.validate(g)?;
    target.validate(g)?;
    let n = g.vertex_count();
    let arcs = g
        .arcs()
        .iter()
        .enumerate()
        .flat_map(|(e, a)| [(a.tail, n + e), (n + e, a.head)]);
    let subdivide = |p: &PathState| -> PathState {
        let mut vertices = vec![p.vertices[0]];
        for w in p.vertices.windows(2) {
            let e = g.find_arc(w[0], w[1]).expect("validated path");
            vertices.push(n + e);
            vertices.push(w[1]);
        }
        PathState::new(vertices)
    };
    Ok(ReductionArtifact {
        graph: Digraph::new(n + g.arc_count(), arcs)?,
        vertex_map: (0..n).collect(),
        arc_map: (0..g.arc_count()).map(|e| vec![2 * e, 2 * e + 1]).collect(),
        source: subdivide(source),
        target: subdivide(target),
    })
}

/// In a subdivided graph whose first `original_vertices` ids are the
/// original vertices: both ends of `p` are original vertices.
pub fn is_standard_path(original_vertices: usize, p: &PathState) -> bool {
    p.tail() < original_vertices && p.head() < original_vertices
}
