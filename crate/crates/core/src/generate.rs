//! Seeded random instances.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::digraph::{Digraph, VertexId};
use crate::error::{Error, Result};
use crate::families::{validate_directed_forest, validate_rooted_tree, TreeView};
use crate::feedback::{is_feedback_set, FeedbackMode};
use crate::idset::{ArcSet, IdSet, VertexSet};
use crate::instance::{InstanceFile, ProblemKind};
use crate::pathreconf::PathState;

/// Each ordered pair of distinct vertices becomes an arc with probability
/// `p`, in lexicographic order.
pub fn random_digraph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Digraph {
    let arcs: Vec<_> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|_| rng.gen_bool(p))
        .collect();
    Digraph::new(n, arcs).expect("no self-loops")
}

/// A random `root`-rooted tree with `k` arcs: a prefix of a breadth-first
/// search that visits out-arcs in random order.
pub fn random_rooted_tree<R: Rng>(
    g: &Digraph,
    root: VertexId,
    k: usize,
    rng: &mut R,
) -> Option<TreeView> {
    let mut arcs = ArcSet::new();
    let mut seen = vec![false; g.vertex_count()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while arcs.len() < k {
        let x = queue.pop_front()?;
        let mut out = g.out_arcs(x).to_vec();
        out.shuffle(rng);
        for a in out {
            let y = g.head(a);
            if !seen[y] && arcs.len() < k {
                seen[y] = true;
                arcs.insert(a);
                queue.push_back(y);
            }
        }
    }
    validate_rooted_tree(g, &arcs, root).ok()
}

/// A random directed tree with `k` arcs rooted at a random vertex with
/// enough reach.
pub fn random_tree<R: Rng>(g: &Digraph, k: usize, rng: &mut R) -> Option<TreeView> {
    let roots: Vec<_> = (0..g.vertex_count())
        .filter(|&v| g.reach_count(v) > k)
        .collect();
    let &root = roots.choose(rng)?;
    random_rooted_tree(g, root, k, rng)
}

pub fn random_spanning_tree<R: Rng>(g: &Digraph, rng: &mut R) -> Option<TreeView> {
    random_tree(g, g.vertex_count().checked_sub(1)?, rng)
}

/// A random directed forest with `k` arcs, grown greedily over shuffled arcs.
pub fn random_forest<R: Rng>(g: &Digraph, k: usize, rng: &mut R) -> Option<ArcSet> {
    for _ in 0..32 {
        let mut order: Vec<_> = (0..g.arc_count()).collect();
        order.shuffle(rng);
        let mut forest = ArcSet::new();
        for a in order {
            if forest.len() == k {
                break;
            }
            forest.insert(a);
            if validate_directed_forest(g, &forest).is_err() {
                forest.remove(a);
            }
        }
        if forest.len() == k {
            return Some(forest);
        }
    }
    None
}

/// A random `R`-directed forest with `k` arcs.
pub fn random_rooted_forest<R: Rng>(
    g: &Digraph,
    roots: &VertexSet,
    k: usize,
    rng: &mut R,
) -> Option<ArcSet> {
    let c = g.contract(roots).ok()?;
    let tree = random_rooted_tree(&c.graph, c.merged, k, rng)?;
    Some(c.lift(tree.arcs()))
}

/// A random simple path on `vertices` vertices, grown by random walks.
pub fn random_path<R: Rng>(g: &Digraph, vertices: usize, rng: &mut R) -> Option<PathState> {
    if vertices < 2 || g.vertex_count() == 0 {
        return None;
    }
    for _ in 0..256 {
        let mut walk = vec![rng.gen_range(0..g.vertex_count())];
        while walk.len() < vertices {
            let last = *walk.last().unwrap();
            let next: Vec<_> = g
                .out_neighbors(last)
                .into_iter()
                .filter(|v| !walk.contains(v))
                .collect();
            match next.choose(rng) {
                Some(&v) => walk.push(v),
                None => break,
            }
        }
        if walk.len() == vertices {
            return Some(PathState::new(walk));
        }
    }
    None
}

pub fn random_feedback_set<R: Rng>(
    g: &Digraph,
    k: usize,
    mode: FeedbackMode,
    rng: &mut R,
) -> Option<IdSet> {
    let universe = match mode {
        FeedbackMode::Vertex => g.vertex_count(),
        FeedbackMode::Arc => g.arc_count(),
    };
    if k > universe {
        return None;
    }
    let ids: Vec<usize> = (0..universe).collect();
    (0..1024)
        .map(|_| ids.choose_multiple(rng, k).copied().collect::<IdSet>())
        .find(|s| is_feedback_set(g, s, mode))
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenerateParams {
    pub vertices: usize,
    pub arc_probability: f64,
    pub seed: u64,
    pub problem: ProblemKind,
    /// Arcs for tree and forest problems, vertices for paths, set size for
    /// feedback problems. Ignored for spanning trees.
    pub k: usize,
}

/// Source, target, root and root set of a generated instance.
type Members = (
    Vec<usize>,
    Vec<usize>,
    Option<VertexId>,
    Option<Vec<VertexId>>,
);

fn members<R: Rng>(g: &Digraph, params: &GenerateParams, rng: &mut R) -> Option<Members> {
    let k = params.k;
    let pair = |a: Option<IdSet>, b: Option<IdSet>| Some((a?.to_vec(), b?.to_vec()));
    match params.problem {
        ProblemKind::Tree => {
            let (s, t) = pair(
                random_tree(g, k, rng).map(TreeView::into_arcs),
                random_tree(g, k, rng).map(TreeView::into_arcs),
            )?;
            if k == 0 {
                return None;
            }
            Some((s, t, None, None))
        }
        ProblemKind::SpanningTree => {
            let (s, t) = pair(
                random_spanning_tree(g, rng).map(TreeView::into_arcs),
                random_spanning_tree(g, rng).map(TreeView::into_arcs),
            )?;
            Some((s, t, None, None))
        }
        ProblemKind::Forest => {
            let (s, t) = pair(random_forest(g, k, rng), random_forest(g, k, rng))?;
            Some((s, t, None, None))
        }
        ProblemKind::RootedTree => {
            let roots: Vec<_> = (0..g.vertex_count())
                .filter(|&v| g.reach_count(v) > k)
                .collect();
            let &r = roots.choose(rng)?;
            let (s, t) = pair(
                random_rooted_tree(g, r, k, rng).map(TreeView::into_arcs),
                random_rooted_tree(g, r, k, rng).map(TreeView::into_arcs),
            )?;
            Some((s, t, Some(r), None))
        }
        ProblemKind::RootedForest => {
            let count = rng.gen_range(1..=g.vertex_count().clamp(1, 3));
            let all: Vec<_> = (0..g.vertex_count()).collect();
            let roots: VertexSet = all.choose_multiple(rng, count).copied().collect();
            let (s, t) = pair(
                random_rooted_forest(g, &roots, k, rng),
                random_rooted_forest(g, &roots, k, rng),
            )?;
            Some((s, t, None, Some(roots.to_vec())))
        }
        ProblemKind::PathReconfiguration | ProblemKind::PathSliding => {
            let s = random_path(g, k, rng)?;
            let t = random_path(g, k, rng)?;
            Some((s.vertices, t.vertices, None, None))
        }
        ProblemKind::FeedbackVertexSet | ProblemKind::FeedbackArcSet => {
            let mode = if params.problem == ProblemKind::FeedbackVertexSet {
                FeedbackMode::Vertex
            } else {
                FeedbackMode::Arc
            };
            pair(
                random_feedback_set(g, k, mode, rng),
                random_feedback_set(g, k, mode, rng),
            )
            .map(|(s, t)| (s, t, None, None))
        }
    }
}

/// A reproducible random instance: the same parameters always produce the
/// same file.
pub fn generate_instance(params: &GenerateParams) -> Result<InstanceFile> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    for _ in 0..1000 {
        let g = random_digraph(params.vertices, params.arc_probability, &mut rng);
        if params.problem.is_path() && g.arc_count() == 0 {
            continue;
        }
        if let Some((source, target, root, roots)) = members(&g, params, &mut rng) {
            let mut inst = InstanceFile::new(&g, params.problem, source, target);
            inst.root = root;
            inst.roots = roots;
            return Ok(inst);
        }
    }
    Err(Error::NotMember)
}
