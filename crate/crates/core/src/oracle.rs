//! Brute-force ground truth: enumerate a family extensionally, connect
//! members that differ by one exchange, and search the resulting graph.

use std::collections::{HashMap, VecDeque};

use itertools::Itertools;

use crate::digraph::{Digraph, VertexId};
use crate::error::{Error, Result};
use crate::families::{
    is_acyclic, validate_directed_forest, validate_directed_path, validate_directed_tree,
    validate_rooted_forest, validate_rooted_tree, validate_spanning_tree,
};
use crate::feedback::{is_feedback_set, FeedbackMode};
use crate::idset::{IdSet, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    DirectedTree,
    RootedTree(VertexId),
    SpanningTree,
    Forest,
    RootedForest(VertexSet),
    Path,
    FeedbackVertexSet,
    FeedbackArcSet,
    AcyclicSubgraph,
}

/// A solution family: the `k`-subsets of the arcs (or vertices) of `graph`
/// accepted by `family`.
#[derive(Debug, Clone)]
pub struct FamilySpec<'g> {
    pub graph: &'g Digraph,
    pub family: Family,
    pub k: usize,
}

impl<'g> FamilySpec<'g> {
    pub fn new(graph: &'g Digraph, family: Family, k: usize) -> Self {
        FamilySpec { graph, family, k }
    }

    /// Size of the element universe: vertices for feedback vertex sets,
    /// arcs otherwise.
    pub fn universe(&self) -> usize {
        match self.family {
            Family::FeedbackVertexSet => self.graph.vertex_count(),
            _ => self.graph.arc_count(),
        }
    }

    pub fn contains(&self, s: &IdSet) -> bool {
        if s.len() != self.k || s.iter().any(|x| x >= self.universe()) {
            return false;
        }
        let g = self.graph;
        match &self.family {
            Family::DirectedTree => validate_directed_tree(g, s).is_ok(),
            Family::RootedTree(r) => validate_rooted_tree(g, s, *r).is_ok(),
            Family::SpanningTree => validate_spanning_tree(g, s).is_ok(),
            Family::Forest => validate_directed_forest(g, s).is_ok(),
            Family::RootedForest(roots) => validate_rooted_forest(g, s, roots).is_ok(),
            Family::Path => validate_directed_path(g, s).is_ok(),
            Family::FeedbackVertexSet => is_feedback_set(g, s, FeedbackMode::Vertex),
            Family::FeedbackArcSet => is_feedback_set(g, s, FeedbackMode::Arc),
            Family::AcyclicSubgraph => is_acyclic(g, s),
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Every member of the family, in lexicographic order of sorted ids.
pub fn enumerate_family(spec: &FamilySpec<'_>, guard: usize) -> Result<Vec<IdSet>> {
    let candidates = binomial(spec.universe(), spec.k);
    if candidates > guard {
        return Err(Error::GuardExceeded(guard));
    }
    Ok((0..spec.universe())
        .combinations(spec.k)
        .map(IdSet::from)
        .filter(|s| spec.contains(s))
        .collect())
}

/// The reconfiguration graph of a family: members joined when their
/// symmetric difference has exactly two elements.
#[derive(Debug, Clone)]
pub struct ReconfigurationGraph {
    pub members: Vec<IdSet>,
    index: HashMap<IdSet, usize>,
    adjacency: Vec<Vec<usize>>,
}

impl ReconfigurationGraph {
    pub fn build(spec: &FamilySpec<'_>, guard: usize) -> Result<Self> {
        let members = enumerate_family(spec, guard)?;
        let index: HashMap<IdSet, usize> = members
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let universe = spec.universe();
        let adjacency = members
            .iter()
            .map(|s| {
                let mut adj: Vec<usize> = s
                    .iter()
                    .flat_map(|x| {
                        (0..universe)
                            .filter(|y| !s.contains(*y))
                            .map(move |y| (x, y))
                    })
                    .filter_map(|(x, y)| index.get(&s.exchanged(x, y)).copied())
                    .collect();
                adj.sort_unstable();
                adj
            })
            .collect();
        Ok(ReconfigurationGraph {
            members,
            index,
            adjacency,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, s: &IdSet) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    /// Exchange distance from member `from` to every member.
    pub fn distances_from(&self, from: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.members.len()];
        dist[from] = Some(0);
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap() + 1;
            for &y in &self.adjacency[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Connected-component label of every member.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.members.len()];
        let mut next = 0;
        for start in 0..self.members.len() {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &self.adjacency[x] {
                    if label[y] == usize::MAX {
                        label[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn distance(&self, source: &IdSet, target: &IdSet) -> Result<Option<usize>> {
        let s = self.index_of(source).ok_or(Error::NotMember)?;
        let t = self.index_of(target).ok_or(Error::NotMember)?;
        Ok(self.distances_from(s)[t])
    }
}

pub fn oracle_distance(
    spec: &FamilySpec<'_>,
    source: &IdSet,
    target: &IdSet,
    guard: usize,
) -> Result<Option<usize>> {
    if !spec.contains(source) || !spec.contains(target) {
        return Err(Error::NotMember);
    }
    ReconfigurationGraph::build(spec, guard)?.distance(source, target)
}

pub fn oracle_decide(
    spec: &FamilySpec<'_>,
    source: &IdSet,
    target: &IdSet,
    guard: usize,
) -> Result<bool> {
    Ok(oracle_distance(spec, source, target, guard)?.is_some())
}
