//! Validation of the solution families: directed trees, directed forests,
//! rooted forests, directed paths and acyclic arc sets.

use std::collections::{BTreeMap, VecDeque};

use crate::digraph::{ArcId, Digraph, VertexId};
use crate::error::{Error, Result};
use crate::idset::{ArcSet, VertexSet};

/// A validated directed tree (out-arborescence).
///
/// The vertices of a tree are the endpoints of its arcs plus the root, so a
/// tree without arcs is a bare root and must be built with
/// [`TreeView::bare`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeView {
    arcs: ArcSet,
    root: VertexId,
    /// Non-root vertex -> (arc into it, its tail).
    parent: BTreeMap<VertexId, (ArcId, VertexId)>,
    /// Vertex -> (arc, head) for its outgoing tree arcs, ascending arc id.
    children: BTreeMap<VertexId, Vec<(ArcId, VertexId)>>,
}

impl TreeView {
    pub fn bare(root: VertexId) -> Self {
        TreeView {
            arcs: ArcSet::new(),
            root,
            parent: BTreeMap::new(),
            children: BTreeMap::new(),
        }
    }

    pub fn arcs(&self) -> &ArcSet {
        &self.arcs
    }

    pub fn into_arcs(self) -> ArcSet {
        self.arcs
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn size(&self) -> usize {
        self.arcs.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v == self.root || self.parent.contains_key(&v)
    }

    pub fn vertices(&self) -> VertexSet {
        std::iter::once(self.root)
            .chain(self.parent.keys().copied())
            .collect()
    }

    /// The tree arc directed into `v`, if `v` is a non-root tree vertex.
    pub fn parent_arc(&self, v: VertexId) -> Option<ArcId> {
        self.parent.get(&v).map(|&(a, _)| a)
    }

    pub fn parent_vertex(&self, v: VertexId) -> Option<VertexId> {
        self.parent.get(&v).map(|&(_, u)| u)
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.children.get(&v).map_or(0, Vec::len)
    }

    /// Tree arcs in breadth-first order from the root, children visited in
    /// ascending arc id.
    pub fn bfs_arcs(&self) -> Vec<ArcId> {
        self.bfs_edges().into_iter().map(|(a, _, _)| a).collect()
    }

    /// `(arc, tail, head)` triples in the order of [`TreeView::bfs_arcs`].
    pub fn bfs_edges(&self) -> Vec<(ArcId, VertexId, VertexId)> {
        let mut order = Vec::with_capacity(self.arcs.len());
        let mut queue = VecDeque::from([self.root]);
        while let Some(x) = queue.pop_front() {
            for &(a, y) in self.children.get(&x).into_iter().flatten() {
                order.push((a, x, y));
                queue.push_back(y);
            }
        }
        order
    }

    /// Arcs on the tree path from the root to `v`, in path order.
    pub fn path_from_root(&self, v: VertexId) -> Option<Vec<ArcId>> {
        if !self.contains_vertex(v) {
            return None;
        }
        let mut arcs = Vec::new();
        let mut x = v;
        while let Some(&(a, u)) = self.parent.get(&x) {
            arcs.push(a);
            x = u;
        }
        arcs.reverse();
        Some(arcs)
    }

    /// Vertices on the tree path from the root to `v`, both ends included.
    pub fn vertex_path_from_root(&self, v: VertexId) -> Option<Vec<VertexId>> {
        if !self.contains_vertex(v) {
            return None;
        }
        let mut vertices = vec![v];
        let mut x = v;
        while let Some(&(_, u)) = self.parent.get(&x) {
            vertices.push(u);
            x = u;
        }
        vertices.reverse();
        Some(vertices)
    }
}

/// Arcs of `t` whose head has out-degree 0 in `t`, ascending id.
pub fn leaf_arcs(t: &TreeView) -> Vec<ArcId> {
    t.parent
        .iter()
        .filter(|(v, _)| t.out_degree(**v) == 0)
        .map(|(_, &(a, _))| a)
        .collect::<ArcSet>()
        .to_vec()
}

/// A validated directed forest: vertex-disjoint directed trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestView {
    pub components: Vec<TreeView>,
    pub roots: VertexSet,
}

impl ForestView {
    pub fn arcs(&self) -> ArcSet {
        self.components
            .iter()
            .flat_map(|c| c.arcs().iter())
            .collect()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(TreeView::size).sum()
    }

    pub fn component_of(&self, v: VertexId) -> Option<usize> {
        self.components.iter().position(|c| c.contains_vertex(v))
    }
}

/// A validated directed path `(v_1, ..., v_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathView {
    pub arcs: ArcSet,
    pub vertices: Vec<VertexId>,
}

impl PathView {
    pub fn tail(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn head(&self) -> VertexId {
        *self.vertices.last().expect("paths are non-empty")
    }
}

struct Degrees {
    children: BTreeMap<VertexId, Vec<(ArcId, VertexId)>>,
    /// Endpoints with in-degree 0, ascending.
    sources: Vec<VertexId>,
    vertex_count: usize,
}

fn degrees(g: &Digraph, s: &ArcSet) -> Result<Degrees> {
    g.check_arcs(s)?;
    let mut parent = BTreeMap::new();
    let mut children: BTreeMap<VertexId, Vec<(ArcId, VertexId)>> = BTreeMap::new();
    let mut vertices = VertexSet::new();
    for a in s {
        let arc = g.arc(a);
        if parent.insert(arc.head, (a, arc.tail)).is_some() {
            return Err(Error::InDegree(arc.head));
        }
        children.entry(arc.tail).or_default().push((a, arc.head));
        vertices.insert(arc.tail);
        vertices.insert(arc.head);
    }
    let sources = vertices
        .iter()
        .filter(|v| !parent.contains_key(v))
        .collect();
    Ok(Degrees {
        children,
        sources,
        vertex_count: vertices.len(),
    })
}

fn component(deg: &Degrees, root: VertexId) -> TreeView {
    let mut tree = TreeView::bare(root);
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        if let Some(kids) = deg.children.get(&x) {
            for &(a, y) in kids {
                tree.arcs.insert(a);
                tree.parent.insert(y, (a, x));
                queue.push_back(y);
            }
            tree.children.insert(x, kids.clone());
        }
    }
    tree
}

pub fn validate_directed_tree(g: &Digraph, s: &ArcSet) -> Result<TreeView> {
    if s.is_empty() {
        return Err(Error::EmptyTree);
    }
    let deg = degrees(g, s)?;
    match deg.sources.as_slice() {
        [] => Err(Error::Cycle),
        [root] => {
            let tree = component(&deg, *root);
            if tree.size() + 1 == deg.vertex_count {
                Ok(tree)
            } else {
                Err(Error::Disconnected)
            }
        }
        _ => Err(Error::Disconnected),
    }
}

/// Validates `s` as a directed tree rooted at `root`; the empty set is the
/// bare tree on `root`.
pub fn validate_rooted_tree(g: &Digraph, s: &ArcSet, root: VertexId) -> Result<TreeView> {
    g.check_vertex(root)?;
    if s.is_empty() {
        return Ok(TreeView::bare(root));
    }
    let tree = validate_directed_tree(g, s)?;
    if tree.root() != root {
        return Err(Error::RootMismatch(tree.root(), root));
    }
    Ok(tree)
}

/// Validates `s` as a directed spanning tree of `g`.
pub fn validate_spanning_tree(g: &Digraph, s: &ArcSet) -> Result<TreeView> {
    if g.vertex_count() == 1 && s.is_empty() {
        return Ok(TreeView::bare(0));
    }
    let tree = validate_directed_tree(g, s)?;
    if tree.size() + 1 != g.vertex_count() {
        return Err(Error::NotSpanning);
    }
    Ok(tree)
}

pub fn validate_directed_forest(g: &Digraph, s: &ArcSet) -> Result<ForestView> {
    let deg = degrees(g, s)?;
    let components: Vec<TreeView> = deg.sources.iter().map(|&r| component(&deg, r)).collect();
    let covered: usize = components.iter().map(|c| c.size() + 1).sum();
    if covered != deg.vertex_count {
        return Err(Error::Cycle);
    }
    Ok(ForestView {
        roots: deg.sources.iter().copied().collect(),
        components,
    })
}

/// Validates `s` as an `R`-directed forest: a directed forest in which every
/// component is rooted at a vertex of `roots` and no vertex of `roots` has an
/// incoming arc. Members of `roots` untouched by `s` count as bare
/// components, so the empty set is an `R`-forest for every `R`.
pub fn validate_rooted_forest(g: &Digraph, s: &ArcSet, roots: &VertexSet) -> Result<ForestView> {
    g.check_vertices(roots)?;
    let forest = validate_directed_forest(g, s)?;
    let bad_root = forest.roots.iter().any(|r| !roots.contains(r));
    let entered = roots.iter().any(|r| {
        forest
            .component_of(r)
            .is_some_and(|c| forest.components[c].root() != r)
    });
    if bad_root || entered {
        return Err(Error::RootSetMismatch {
            expected: roots.to_vec(),
            found: forest.roots.to_vec(),
        });
    }
    Ok(forest)
}

pub fn validate_directed_path(g: &Digraph, s: &ArcSet) -> Result<PathView> {
    let tree = validate_directed_tree(g, s)?;
    if leaf_arcs(&tree).len() > 1 {
        return Err(Error::NotAPath);
    }
    let mut vertices = vec![tree.root()];
    let mut x = tree.root();
    while let Some(&(_, y)) = tree.children.get(&x).and_then(|c| c.first()) {
        vertices.push(y);
        x = y;
    }
    Ok(PathView {
        arcs: tree.arcs,
        vertices,
    })
}

/// Whether the sub-multigraph formed by the arcs in `s` has no directed
/// cycle.
pub fn is_acyclic(g: &Digraph, s: &ArcSet) -> bool {
    is_acyclic_filtered(g, |a| s.contains(a))
}

/// Kahn's algorithm over the arcs accepted by `keep`.
pub(crate) fn is_acyclic_filtered(g: &Digraph, keep: impl Fn(ArcId) -> bool) -> bool {
    let n = g.vertex_count();
    let mut indegree = vec![0usize; n];
    for (a, arc) in g.arcs().iter().enumerate() {
        if keep(a) {
            indegree[arc.head] += 1;
        }
    }
    let mut stack: Vec<VertexId> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = stack.pop() {
        removed += 1;
        for &a in g.out_arcs(v) {
            if keep(a) {
                let h = g.head(a);
                indegree[h] -= 1;
                if indegree[h] == 0 {
                    stack.push(h);
                }
            }
        }
    }
    removed == n
}
