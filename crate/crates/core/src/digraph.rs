//! Directed multigraph with stable arc identifiers.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::idset::{ArcSet, VertexSet};

pub type VertexId = usize;
pub type ArcId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
}

/// An immutable directed multigraph.
///
/// Vertices are `0..vertex_count`, arcs are `0..arc_count` in insertion
/// order. Parallel arcs are allowed; self-loops are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    vertex_count: usize,
    arcs: Vec<Arc>,
    out_arcs: Vec<Vec<ArcId>>,
    in_arcs: Vec<Vec<ArcId>>,
}

/// Result of [`Digraph::induced_subgraph`].
#[derive(Debug, Clone)]
pub struct Induced {
    pub graph: Digraph,
    /// New vertex id -> original vertex id.
    pub vertex_of: Vec<VertexId>,
    /// New arc id -> original arc id.
    pub arc_of: Vec<ArcId>,
}

impl Induced {
    /// Original vertex id -> new vertex id.
    pub fn vertex_index(&self, original: VertexId) -> Option<VertexId> {
        self.vertex_of.binary_search(&original).ok()
    }

    /// Original arc id -> new arc id.
    pub fn arc_index(&self, original: ArcId) -> Option<ArcId> {
        self.arc_of.binary_search(&original).ok()
    }
}

/// Result of [`Digraph::contract`].
#[derive(Debug, Clone)]
pub struct Contraction {
    pub graph: Digraph,
    /// Original vertex id -> new vertex id.
    pub vertex_map: Vec<VertexId>,
    /// New arc id -> original arc id.
    pub arc_of: Vec<ArcId>,
    /// The vertex all of the contracted set was merged into.
    pub merged: VertexId,
}

impl Contraction {
    pub fn arc_index(&self, original: ArcId) -> Option<ArcId> {
        self.arc_of.binary_search(&original).ok()
    }

    pub fn lift(&self, arcs: &ArcSet) -> ArcSet {
        arcs.iter().map(|a| self.arc_of[a]).collect()
    }
}

impl Digraph {
    pub fn new<I>(vertex_count: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut graph = Digraph {
            vertex_count,
            arcs: Vec::new(),
            out_arcs: vec![Vec::new(); vertex_count],
            in_arcs: vec![Vec::new(); vertex_count],
        };
        for (tail, head) in arcs {
            graph.check_vertex(tail)?;
            graph.check_vertex(head)?;
            if tail == head {
                return Err(Error::SelfLoop(tail));
            }
            let id = graph.arcs.len();
            graph.arcs.push(Arc { tail, head });
            graph.out_arcs[tail].push(id);
            graph.in_arcs[head].push(id);
        }
        Ok(graph)
    }

    pub fn empty(vertex_count: usize) -> Self {
        Digraph::new(vertex_count, std::iter::empty()).expect("no arcs")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arc(&self, id: ArcId) -> Arc {
        self.arcs[id]
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn tail(&self, id: ArcId) -> VertexId {
        self.arcs[id].tail
    }

    pub fn head(&self, id: ArcId) -> VertexId {
        self.arcs[id].head
    }

    /// Outgoing arcs of `v`, ascending id.
    pub fn out_arcs(&self, v: VertexId) -> &[ArcId] {
        &self.out_arcs[v]
    }

    /// Incoming arcs of `v`, ascending id.
    pub fn in_arcs(&self, v: VertexId) -> &[ArcId] {
        &self.in_arcs[v]
    }

    /// Distinct out-neighbours of `v`, ascending.
    pub fn out_neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut heads: Vec<_> = self.out_arcs[v]
            .iter()
            .map(|&a| self.arcs[a].head)
            .collect();
        heads.sort_unstable();
        heads.dedup();
        heads
    }

    /// Lowest-id arc from `tail` to `head`.
    pub fn find_arc(&self, tail: VertexId, head: VertexId) -> Option<ArcId> {
        self.out_arcs
            .get(tail)?
            .iter()
            .copied()
            .find(|&a| self.arcs[a].head == head)
    }

    pub fn has_parallel_arcs(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        !self.arcs.iter().all(|a| seen.insert((a.tail, a.head)))
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v))
        }
    }

    pub fn check_arc(&self, a: ArcId) -> Result<()> {
        if a < self.arcs.len() {
            Ok(())
        } else {
            Err(Error::InvalidArc(a))
        }
    }

    pub fn check_arcs(&self, arcs: &ArcSet) -> Result<()> {
        arcs.iter().try_for_each(|a| self.check_arc(a))
    }

    pub fn check_vertices(&self, vertices: &VertexSet) -> Result<()> {
        vertices.iter().try_for_each(|v| self.check_vertex(v))
    }

    /// `G[X]`: vertices of `x` renumbered in ascending order together with
    /// every arc whose endpoints both lie in `x`.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<Induced> {
        self.check_vertices(x)?;
        let vertex_of = x.to_vec();
        let mut index = vec![usize::MAX; self.vertex_count];
        for (new, &old) in vertex_of.iter().enumerate() {
            index[old] = new;
        }
        let mut arc_of = Vec::new();
        let mut arcs = Vec::new();
        for (id, arc) in self.arcs.iter().enumerate() {
            if index[arc.tail] != usize::MAX && index[arc.head] != usize::MAX {
                arc_of.push(id);
                arcs.push((index[arc.tail], index[arc.head]));
            }
        }
        let graph = Digraph::new(vertex_of.len(), arcs)?;
        Ok(Induced {
            graph,
            vertex_of,
            arc_of,
        })
    }

    /// Identifies all vertices of `r_set` into a single vertex.
    ///
    /// Arcs with both endpoints in `r_set` are dropped; parallel arcs created
    /// by the merge are kept. The merged vertex takes the position of the
    /// smallest member of `r_set`, other vertices keep their relative order.
    pub fn contract(&self, r_set: &VertexSet) -> Result<Contraction> {
        self.check_vertices(r_set)?;
        let first = r_set.first().ok_or(Error::EmptyVertexSet)?;
        let mut vertex_map = vec![0; self.vertex_count];
        let mut next = 0;
        let mut merged = 0;
        for (v, slot) in vertex_map.iter_mut().enumerate() {
            if v == first {
                merged = next;
            }
            if r_set.contains(v) && v != first {
                continue;
            }
            *slot = next;
            next += 1;
        }
        for v in r_set.iter() {
            vertex_map[v] = merged;
        }
        let mut arc_of = Vec::new();
        let mut arcs = Vec::new();
        for (id, arc) in self.arcs.iter().enumerate() {
            if r_set.contains(arc.tail) && r_set.contains(arc.head) {
                continue;
            }
            arc_of.push(id);
            arcs.push((vertex_map[arc.tail], vertex_map[arc.head]));
        }
        Ok(Contraction {
            graph: Digraph::new(next, arcs)?,
            vertex_map,
            arc_of,
            merged,
        })
    }

    pub fn reachable_set(&self, v: VertexId) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let reached = self.reach_mask(v, None);
        Ok(reached
            .iter()
            .enumerate()
            .filter_map(|(u, &r)| r.then_some(u))
            .collect())
    }

    /// Number of vertices reachable from `v`, including `v`.
    pub fn reach_count(&self, v: VertexId) -> usize {
        self.reach_mask(v, None).iter().filter(|&&r| r).count()
    }

    pub(crate) fn reach_mask(&self, v: VertexId, blocked: Option<&[bool]>) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count];
        seen[v] = true;
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.out_arcs[x] {
                let y = self.arcs[a].head;
                if !seen[y] && !blocked.is_some_and(|b| b[y]) {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub fn has_directed_path(&self, u: VertexId, v: VertexId) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(u == v || self.reach_mask(u, None)[v])
    }

    /// A shortest directed path from `u` to `v` as a list of arcs.
    pub fn directed_path(&self, u: VertexId, v: VertexId) -> Result<Option<Vec<ArcId>>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let parent = self.bfs_parents(u);
        Ok(path_from_parents(self, &parent, u, v))
    }

    /// Breadth-first parent arcs from `root`; `usize::MAX` marks unreached
    /// vertices and the root itself.
    pub(crate) fn bfs_parents(&self, root: VertexId) -> Vec<ArcId> {
        let mut parent = vec![usize::MAX; self.vertex_count];
        let mut seen = vec![false; self.vertex_count];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.out_arcs[x] {
                let y = self.arcs[a].head;
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = a;
                    queue.push_back(y);
                }
            }
        }
        parent
    }

    /// A `w`-rooted directed tree with exactly `size` arcs: the first `size`
    /// tree arcs discovered by a breadth-first search from `w`.
    pub fn bfs_tree(&self, w: VertexId, size: usize) -> Result<Option<ArcSet>> {
        self.check_vertex(w)?;
        Ok(self.bfs_tree_avoiding(w, size, None))
    }

    /// As [`Digraph::bfs_tree`] inside the subgraph induced by the vertices
    /// not marked in `blocked`. `w` itself must not be blocked.
    pub(crate) fn bfs_tree_avoiding(
        &self,
        w: VertexId,
        size: usize,
        blocked: Option<&[bool]>,
    ) -> Option<ArcSet> {
        let mut tree = ArcSet::new();
        if size == 0 {
            return Some(tree);
        }
        let mut seen = vec![false; self.vertex_count];
        seen[w] = true;
        let mut queue = VecDeque::from([w]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.out_arcs[x] {
                let y = self.arcs[a].head;
                if !seen[y] && !blocked.is_some_and(|b| b[y]) {
                    seen[y] = true;
                    tree.insert(a);
                    if tree.len() == size {
                        return Some(tree);
                    }
                    queue.push_back(y);
                }
            }
        }
        None
    }
}

pub(crate) fn path_from_parents(
    g: &Digraph,
    parent: &[ArcId],
    u: VertexId,
    v: VertexId,
) -> Option<Vec<ArcId>> {
    let mut arcs = Vec::new();
    let mut x = v;
    while x != u {
        let a = parent[x];
        if a == usize::MAX {
            return None;
        }
        arcs.push(a);
        x = g.tail(a);
    }
    arcs.reverse();
    Some(arcs)
}
