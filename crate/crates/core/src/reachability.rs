//! Deciding reconfigurability of two directed trees with `k` arcs, and
//! building an explicit sequence when one exists.
//!
//! All `v`-rooted trees with `k` arcs are mutually reconfigurable without
//! leaving the root (see [`crate::rooted`]), so the search runs on roots
//! only. The auxiliary graph has a node for every vertex that roots some
//! `k`-arc tree, and an edge `{u, v}` when
//!
//! 1. `G` has a directed path from `u` to `v` or from `v` to `u`, or
//! 2. some common out-neighbour `w` of `u` and `v` roots a `(k-1)`-arc tree
//!    in `G - {u, v}`.
//!
//! For `k >= 2`, two trees are reconfigurable iff their roots are connected
//! in the auxiliary graph.

use std::collections::VecDeque;

use crate::digraph::{path_from_parents, ArcId, Digraph, VertexId};
use crate::error::{Error, Result};
use crate::families::{leaf_arcs, validate_directed_tree, validate_rooted_tree, TreeView};
use crate::idset::{ArcSet, VertexSet};
use crate::rooted::fixed_root_sequence;
use crate::sequences::{compress, validate_sequence, ReconfigSequence};

/// Why two roots are adjacent in the auxiliary graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeLabel {
    /// A directed path from `from` to `to`.
    Path {
        from: VertexId,
        to: VertexId,
        arcs: Vec<ArcId>,
    },
    /// A common out-neighbour `w` of both roots with a `w`-rooted tree of
    /// `k - 1` arcs avoiding both roots. `arcs` holds the arc from each root
    /// to `w`, in the order the roots were given.
    CommonOutNeighbor {
        w: VertexId,
        arcs: [ArcId; 2],
        tree: ArcSet,
    },
}

#[derive(Debug, Clone)]
enum Witness {
    Path {
        from: VertexId,
        to: VertexId,
    },
    Common {
        w: VertexId,
        arcs: [ArcId; 2],
        tree: ArcSet,
    },
}

#[derive(Debug, Clone)]
struct AuxEdge {
    ends: [VertexId; 2],
    witness: Witness,
}

/// Auxiliary graph on candidate roots, with the witness of every edge
/// stored at construction time.
#[derive(Debug, Clone)]
pub struct AuxiliaryGraph<'g> {
    graph: &'g Digraph,
    k: usize,
    is_node: Vec<bool>,
    /// Breadth-first parent arcs from every vertex.
    parents: Vec<Vec<ArcId>>,
    edges: Vec<AuxEdge>,
    /// Vertex -> (neighbour, edge index), ascending neighbour.
    adjacency: Vec<Vec<(VertexId, usize)>>,
}

/// Whether `G` has a `v`-rooted tree with `k` arcs.
pub fn root_tree_exists(g: &Digraph, v: VertexId, k: usize) -> Result<bool> {
    g.check_vertex(v)?;
    Ok(g.reach_count(v) > k)
}

/// Evaluates both adjacency conditions for roots `u != v` directly.
pub fn roots_adjacent(
    g: &Digraph,
    u: VertexId,
    v: VertexId,
    k: usize,
) -> Result<Option<EdgeLabel>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::Identical);
    }
    for (from, to) in [(u, v), (v, u)] {
        if let Some(arcs) = g.directed_path(from, to)? {
            return Ok(Some(EdgeLabel::Path { from, to, arcs }));
        }
    }
    let Some(k_minus_one) = k.checked_sub(1) else {
        return Ok(None);
    };
    let mut blocked = vec![false; g.vertex_count()];
    blocked[u] = true;
    blocked[v] = true;
    let from_v = g.out_neighbors(v);
    for w in g.out_neighbors(u) {
        if blocked[w] || from_v.binary_search(&w).is_err() {
            continue;
        }
        if let Some(tree) = g.bfs_tree_avoiding(w, k_minus_one, Some(&blocked)) {
            let arcs = [g.find_arc(u, w).unwrap(), g.find_arc(v, w).unwrap()];
            return Ok(Some(EdgeLabel::CommonOutNeighbor { w, arcs, tree }));
        }
    }
    Ok(None)
}

/// Builds the auxiliary graph for trees with `k` arcs.
///
/// Path adjacency is read off one breadth-first search per vertex. The
/// common-neighbour condition is only tested for pairs that share an
/// out-neighbour and are not already adjacent, scanning `w` in ascending
/// order so the stored witness is the smallest valid `w`.
pub fn build_auxiliary_graph(g: &Digraph, k: usize) -> AuxiliaryGraph<'_> {
    let n = g.vertex_count();
    let parents: Vec<Vec<ArcId>> = (0..n).map(|v| g.bfs_parents(v)).collect();
    let reaches = |u: VertexId, v: VertexId| u == v || parents[u][v] != usize::MAX;
    let is_node: Vec<bool> = (0..n)
        .map(|v| (0..n).filter(|&x| reaches(v, x)).count() > k)
        .collect();

    let mut edges = Vec::new();
    let mut adjacent = vec![false; n * n];
    let add =
        |edges: &mut Vec<AuxEdge>, adjacent: &mut [bool], u: VertexId, v: VertexId, witness| {
            adjacent[u * n + v] = true;
            adjacent[v * n + u] = true;
            edges.push(AuxEdge {
                ends: [u, v],
                witness,
            });
        };
    for u in (0..n).filter(|&u| is_node[u]) {
        for v in (u + 1..n).filter(|&v| is_node[v]) {
            let witness = if reaches(u, v) {
                Witness::Path { from: u, to: v }
            } else if reaches(v, u) {
                Witness::Path { from: v, to: u }
            } else {
                continue;
            };
            add(&mut edges, &mut adjacent, u, v, witness);
        }
    }

    if k >= 1 {
        let mut blocked = vec![false; n];
        for w in 0..n {
            // Lowest-id arc from each distinct node tail into w.
            let mut tails: Vec<(VertexId, ArcId)> = g
                .in_arcs(w)
                .iter()
                .map(|&a| (g.tail(a), a))
                .filter(|&(u, _)| is_node[u])
                .collect();
            tails.sort_unstable();
            tails.dedup_by_key(|&mut (u, _)| u);
            for (i, &(u, arc_u)) in tails.iter().enumerate() {
                for &(v, arc_v) in &tails[i + 1..] {
                    if adjacent[u * n + v] {
                        continue;
                    }
                    blocked[u] = true;
                    blocked[v] = true;
                    let tree = g.bfs_tree_avoiding(w, k - 1, Some(&blocked));
                    blocked[u] = false;
                    blocked[v] = false;
                    if let Some(tree) = tree {
                        let witness = Witness::Common {
                            w,
                            arcs: [arc_u, arc_v],
                            tree,
                        };
                        add(&mut edges, &mut adjacent, u, v, witness);
                    }
                }
            }
        }
    }

    let mut adjacency = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        adjacency[e.ends[0]].push((e.ends[1], i));
        adjacency[e.ends[1]].push((e.ends[0], i));
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    AuxiliaryGraph {
        graph: g,
        k,
        is_node,
        parents,
        edges,
        adjacency,
    }
}

impl<'g> AuxiliaryGraph<'g> {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn nodes(&self) -> VertexSet {
        (0..self.is_node.len())
            .filter(|&v| self.is_node[v])
            .collect()
    }

    pub fn is_node(&self, v: VertexId) -> bool {
        self.is_node.get(v).copied().unwrap_or(false)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Every edge as an ordered pair `(u, v)` with `u < v`.
    pub fn edge_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let mut pairs: Vec<_> = self
            .edges
            .iter()
            .map(|e| (e.ends[0].min(e.ends[1]), e.ends[0].max(e.ends[1])))
            .collect();
        pairs.sort_unstable();
        pairs
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency[v].iter().map(|&(u, _)| u)
    }

    fn edge_between(&self, u: VertexId, v: VertexId) -> Option<&AuxEdge> {
        let list = &self.adjacency[u];
        let at = list.binary_search_by_key(&v, |&(x, _)| x).ok()?;
        Some(&self.edges[list[at].1])
    }

    /// The stored witness of edge `{u, v}`; for a common out-neighbour the
    /// arcs are reported in the order `u`, `v`.
    pub fn label(&self, u: VertexId, v: VertexId) -> Option<EdgeLabel> {
        let edge = self.edge_between(u, v)?;
        Some(match &edge.witness {
            Witness::Path { from, to } => EdgeLabel::Path {
                from: *from,
                to: *to,
                arcs: path_from_parents(self.graph, &self.parents[*from], *from, *to)
                    .expect("stored path witness"),
            },
            Witness::Common { w, arcs, tree } => {
                let arcs = if edge.ends[0] == u {
                    *arcs
                } else {
                    [arcs[1], arcs[0]]
                };
                EdgeLabel::CommonOutNeighbor {
                    w: *w,
                    arcs,
                    tree: tree.clone(),
                }
            }
        })
    }

    /// A shortest path between two nodes, as the list of visited nodes.
    pub fn root_path(&self, from: VertexId, to: VertexId) -> Option<Vec<VertexId>> {
        if !self.is_node(from) || !self.is_node(to) {
            return None;
        }
        let n = self.is_node.len();
        let mut prev = vec![usize::MAX; n];
        prev[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                let mut path = vec![to];
                let mut y = to;
                while y != from {
                    y = prev[y];
                    path.push(y);
                }
                path.reverse();
                return Some(path);
            }
            for y in self.neighbors(x) {
                if prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    fn check_pair(&self, t_source: &TreeView, t_target: &TreeView) -> Result<()> {
        if t_source.size() != t_target.size() {
            return Err(Error::SizeMismatch(t_source.size(), t_target.size()));
        }
        if t_source.size() != self.k {
            return Err(Error::SizeMismatch(t_source.size(), self.k));
        }
        Ok(())
    }

    pub fn decide(&self, t_source: &TreeView, t_target: &TreeView) -> Result<bool> {
        self.check_pair(t_source, t_target)?;
        let (rs, rt) = (t_source.root(), t_target.root());
        Ok(match self.k {
            0 => rs == rt,
            1 => true,
            _ => rs == rt || self.root_path(rs, rt).is_some(),
        })
    }

    /// An explicit sequence of `k`-arc directed trees from `t_source` to
    /// `t_target`.
    pub fn build_sequence(
        &self,
        t_source: &TreeView,
        t_target: &TreeView,
    ) -> Result<ReconfigSequence> {
        self.check_pair(t_source, t_target)?;
        let g = self.graph;
        let k = self.k;
        match k {
            0 if t_source.root() == t_target.root() => {
                return Ok(ReconfigSequence::single(ArcSet::new()));
            }
            0 => return Err(Error::Unreachable),
            1 => {
                let mut seq = ReconfigSequence::single(t_source.arcs().clone());
                if t_source.arcs() != t_target.arcs() {
                    seq.push(t_target.arcs().clone());
                }
                return Ok(seq);
            }
            _ => {}
        }
        let roots = if t_source.root() == t_target.root() {
            vec![t_source.root()]
        } else {
            self.root_path(t_source.root(), t_target.root())
                .ok_or(Error::Unreachable)?
        };

        let mut seq = ReconfigSequence::single(t_source.arcs().clone());
        let mut current = t_source.clone();
        for pair in roots.windows(2) {
            let (x, y) = (pair[0], pair[1]);
            match self.label(x, y).expect("consecutive roots are adjacent") {
                EdgeLabel::Path { from, arcs, .. } => {
                    // Walk from x to y along the witness, against the arc
                    // direction when the path runs from y to x.
                    let walk: Vec<ArcId> = if from == x {
                        arcs
                    } else {
                        arcs.into_iter().rev().collect()
                    };
                    for a in walk {
                        let part = adjacent_root_step(g, &current, a)?;
                        current = last_tree(g, &part)?;
                        seq.append(part);
                    }
                }
                EdgeLabel::CommonOutNeighbor { arcs, tree, .. } => {
                    let mut pivot = tree.clone();
                    pivot.insert(arcs[0]);
                    let pivot = validate_rooted_tree(g, &pivot, x)?;
                    seq.append(fixed_root_sequence(g, &current, &pivot)?);
                    let mut next = tree;
                    next.insert(arcs[1]);
                    current = validate_rooted_tree(g, &next, y)?;
                    seq.push(next);
                }
            }
        }
        seq.append(fixed_root_sequence(g, &current, t_target)?);

        let seq = compress(&seq);
        let family = |s: &ArcSet| s.len() == k && validate_directed_tree(g, s).is_ok();
        validate_sequence(&seq, t_source.arcs(), t_target.arcs(), family)
            .map_err(|v| Error::Internal(format!("assembled sequence is invalid: {v}")))?;
        let n = g.vertex_count();
        if seq.len() > length_guard(n, k) {
            return Err(Error::Internal(format!(
                "sequence length {} exceeds 4*|V|^2*k",
                seq.len()
            )));
        }
        Ok(seq)
    }
}

/// Upper bound enforced on assembled sequences: `4 * |V|^2 * k`.
pub fn length_guard(vertex_count: usize, k: usize) -> usize {
    4 * vertex_count * vertex_count * k
}

fn last_tree(g: &Digraph, seq: &ReconfigSequence) -> Result<TreeView> {
    let last = seq.last().expect("sequences are non-empty");
    validate_directed_tree(g, last)
        .map_err(|e| Error::Internal(format!("step produced a non-tree: {e}")))
}

fn check_trees(g: &Digraph, t_source: &TreeView, t_target: &TreeView) -> Result<()> {
    for t in [t_source, t_target] {
        validate_rooted_tree(g, t.arcs(), t.root())?;
    }
    if t_source.size() != t_target.size() {
        return Err(Error::SizeMismatch(t_source.size(), t_target.size()));
    }
    Ok(())
}

/// Whether `t_target` is reachable from `t_source` through directed trees
/// with the same number of arcs.
pub fn decide(g: &Digraph, t_source: &TreeView, t_target: &TreeView) -> Result<bool> {
    check_trees(g, t_source, t_target)?;
    let k = t_source.size();
    if k <= 1 || t_source.root() == t_target.root() {
        return Ok(match k {
            0 => t_source.root() == t_target.root(),
            _ => true,
        });
    }
    build_auxiliary_graph(g, k).decide(t_source, t_target)
}

/// An explicit reconfiguration sequence, or [`Error::Unreachable`].
pub fn build_sequence(
    g: &Digraph,
    t_source: &TreeView,
    t_target: &TreeView,
) -> Result<ReconfigSequence> {
    check_trees(g, t_source, t_target)?;
    build_auxiliary_graph(g, t_source.size()).build_sequence(t_source, t_target)
}

/// Moves a tree rooted at `u` to some tree rooted at the other endpoint `v`
/// of `arc`, which must join `u` and `v` in either direction.
///
/// For an arc `(v, u)` a single exchange suffices: add the arc and drop the
/// current arc into `v`, or a leaf arc when `v` is outside the tree. For an
/// arc `(u, v)` a `v`-rooted tree `T'` is taken from a breadth-first search;
/// `T' + (u, v)` minus the `T'`-arc into `u` (or minus a leaf arc when `u` is
/// outside `T'`) is a `u`-rooted pivot one exchange away from `T'`, reached
/// from the current tree without moving the root.
pub fn adjacent_root_step(g: &Digraph, t: &TreeView, arc: ArcId) -> Result<ReconfigSequence> {
    g.check_arc(arc)?;
    let k = t.size();
    if k == 0 {
        return Err(Error::ZeroSize);
    }
    let u = t.root();
    let (tail, head) = (g.tail(arc), g.head(arc));
    if head == u {
        let v = tail;
        let remove = match t.parent_arc(v) {
            Some(a) => a,
            None => leaf_arcs(t)[0],
        };
        let next = t.arcs().exchanged(remove, arc);
        validate_rooted_tree(g, &next, v)
            .map_err(|e| Error::Internal(format!("root step left the family: {e}")))?;
        let mut seq = ReconfigSequence::single(t.arcs().clone());
        seq.push(next);
        return Ok(seq);
    }
    if tail != u {
        return Err(Error::NotIncidentToRoot(arc));
    }
    let v = head;
    let far = g.bfs_tree(v, k)?.ok_or(Error::NoRootedTree(v))?;
    let far = validate_rooted_tree(g, &far, v)?;
    let remove = match far.parent_arc(u) {
        Some(a) => a,
        None => leaf_arcs(&far)[0],
    };
    let pivot = far.arcs().exchanged(remove, arc);
    let pivot = validate_rooted_tree(g, &pivot, u)
        .map_err(|e| Error::Internal(format!("pivot is not a tree: {e}")))?;
    let mut seq = fixed_root_sequence(g, t, &pivot)?;
    seq.push(far.into_arcs());
    Ok(seq)
}
