//! Reconfiguration with a fixed root `r`, and with a fixed root set `R` via
//! contraction of `R` into a single vertex.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::families::{
    leaf_arcs, validate_rooted_forest, validate_rooted_tree, ForestView, TreeView,
};
use crate::idset::{ArcSet, VertexSet};
use crate::sequences::ReconfigSequence;

/// Splits the arcs of `t` into fixed and unfixed ones with respect to
/// `t_target`. An arc is fixed when the whole `t`-path from the root to its
/// head also lies in `t_target`.
pub fn fixed_arc_partition(t: &TreeView, t_target: &TreeView) -> Result<(ArcSet, ArcSet)> {
    if t.root() != t_target.root() {
        return Err(Error::RootMismatch(t.root(), t_target.root()));
    }
    let mut fixed = ArcSet::new();
    let mut unfixed = ArcSet::new();
    for (a, tail, _) in t.bfs_edges() {
        let tail_fixed = t.parent_arc(tail).is_none_or(|p| fixed.contains(p));
        if tail_fixed && t_target.arcs().contains(a) {
            fixed.insert(a);
        } else {
            unfixed.insert(a);
        }
    }
    Ok((fixed, unfixed))
}

/// Number of unfixed arcs of `t` with respect to `t_target`.
pub fn unfixed_count(t: &TreeView, t_target: &TreeView) -> Result<usize> {
    Ok(fixed_arc_partition(t, t_target)?.1.len())
}

/// A sequence of `r`-rooted trees with `k` arcs from `t_source` to
/// `t_target`, of length at most the number of unfixed arcs of `t_source`
/// (hence at most `k`).
///
/// Each step adds the first arc `e = (u, v)` of `t_target`, in breadth-first
/// order, that the current tree lacks. If `v` already belongs to the current
/// tree its parent arc is removed, otherwise the lowest-id unfixed leaf arc
/// is.
pub fn fixed_root_sequence(
    g: &Digraph,
    t_source: &TreeView,
    t_target: &TreeView,
) -> Result<ReconfigSequence> {
    let r = t_source.root();
    if r != t_target.root() {
        return Err(Error::RootMismatch(r, t_target.root()));
    }
    if t_source.size() != t_target.size() {
        return Err(Error::SizeMismatch(t_source.size(), t_target.size()));
    }
    let target_order = t_target.bfs_arcs();
    let mut seq = ReconfigSequence::single(t_source.arcs().clone());
    let mut current = t_source.clone();
    while current.arcs() != t_target.arcs() {
        let add = *target_order
            .iter()
            .find(|&&a| !current.arcs().contains(a))
            .ok_or_else(|| Error::Internal("same-size trees differ one way only".into()))?;
        let (u, v) = (g.tail(add), g.head(add));
        let remove = match current.parent_arc(v) {
            Some(f) => f,
            None => {
                let (_, unfixed) = fixed_arc_partition(&current, t_target)?;
                let f = leaf_arcs(&current)
                    .into_iter()
                    .find(|&a| unfixed.contains(a))
                    .ok_or_else(|| Error::Internal("no unfixed leaf arc".into()))?;
                if g.head(f) == u {
                    return Err(Error::Internal(
                        "removed leaf arc feeds the added arc".into(),
                    ));
                }
                f
            }
        };
        let next = current.arcs().exchanged(remove, add);
        current = validate_rooted_tree(g, &next, r)
            .map_err(|e| Error::Internal(format!("fixed-root step left the family: {e}")))?;
        seq.push(next);
    }
    Ok(seq)
}

/// A sequence of `R`-directed forests of size `k` and length at most `k`.
///
/// `R` is merged into one vertex, where `R`-forests become trees rooted at
/// the merged vertex, and the fixed-root construction is lifted back.
pub fn rooted_forest_sequence(
    g: &Digraph,
    f_source: &ForestView,
    f_target: &ForestView,
    roots: &VertexSet,
) -> Result<ReconfigSequence> {
    let source = f_source.arcs();
    let target = f_target.arcs();
    validate_rooted_forest(g, &source, roots)?;
    validate_rooted_forest(g, &target, roots)?;
    if source.len() != target.len() {
        return Err(Error::SizeMismatch(source.len(), target.len()));
    }
    let contraction = g.contract(roots)?;
    let to_tree = |arcs: &ArcSet| -> Result<TreeView> {
        let mapped = arcs
            .iter()
            .map(|a| contraction.arc_index(a).ok_or(Error::InvalidArc(a)))
            .collect::<Result<ArcSet>>()?;
        validate_rooted_tree(&contraction.graph, &mapped, contraction.merged)
            .map_err(|e| Error::Internal(format!("R-forest is not a tree after contraction: {e}")))
    };
    let seq = fixed_root_sequence(&contraction.graph, &to_tree(&source)?, &to_tree(&target)?)?;
    Ok(ReconfigSequence::new(
        seq.steps().iter().map(|s| contraction.lift(s)).collect(),
    ))
}
