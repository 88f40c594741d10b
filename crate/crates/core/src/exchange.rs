//! Exchange steps and shortest sequences for directed spanning trees and for
//! directed forests of equal size.
//!
//! Both families have the weak exchange property: for distinct members `S`
//! and `S'` there is a single exchange that moves `S` one element closer to
//! `S'`. Iterating it yields sequences of length exactly `|S \ S'|`, which
//! is a lower bound for any sequence.

use std::collections::HashMap;

use crate::digraph::{ArcId, Digraph, VertexId};
use crate::error::{Error, Result};
use crate::families::{validate_directed_forest, validate_spanning_tree, ForestView, TreeView};
use crate::idset::{ArcSet, VertexSet};
use crate::sequences::ReconfigSequence;

/// Remove `remove` (in current, not in target) and add `add` (in target,
/// not in current).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExchangePair {
    pub remove: ArcId,
    pub add: ArcId,
}

impl ExchangePair {
    pub fn apply(&self, arcs: &ArcSet) -> ArcSet {
        arcs.exchanged(self.remove, self.add)
    }
}

fn check_spanning(g: &Digraph, t: &TreeView) -> Result<()> {
    if t.size() + 1 != g.vertex_count() {
        return Err(Error::NotSpanning);
    }
    Ok(())
}

/// One exchange moving spanning tree `t` towards spanning tree `t_target`.
///
/// With a common root `r` the added arc is the first arc of `t_target`, in
/// breadth-first order from `r`, that `t` lacks; its tail is then reached in
/// `t_target` through arcs shared with `t`, and the removed arc is the `t`-arc
/// into its head. With different roots the added arc is the `t_target`-arc
/// into `r`, and the removed arc is the first arc of the `t`-path from `r` to
/// its tail that `t_target` lacks; the result is rooted at that arc's head.
pub fn spanning_tree_exchange_step(
    g: &Digraph,
    t: &TreeView,
    t_target: &TreeView,
) -> Result<ExchangePair> {
    check_spanning(g, t)?;
    check_spanning(g, t_target)?;
    if t.arcs() == t_target.arcs() {
        return Err(Error::Identical);
    }
    let r = t.root();
    if r == t_target.root() {
        let add = t_target
            .bfs_arcs()
            .into_iter()
            .find(|&a| !t.arcs().contains(a))
            .ok_or_else(|| Error::Internal("distinct trees share every arc".into()))?;
        let remove = t
            .parent_arc(g.head(add))
            .ok_or_else(|| Error::Internal("head of a non-root arc is the root".into()))?;
        return Ok(ExchangePair { remove, add });
    }
    let add = t_target.parent_arc(r).ok_or(Error::NotSpanning)?;
    let remove = t
        .path_from_root(g.tail(add))
        .ok_or(Error::NotSpanning)?
        .into_iter()
        .find(|&a| !t_target.arcs().contains(a))
        .ok_or_else(|| Error::Internal("cycle through the old root lies in the target".into()))?;
    Ok(ExchangePair { remove, add })
}

/// A sequence of spanning trees of length exactly `|T_s \ T_g|`.
///
/// When both trees share their root, every intermediate keeps it.
pub fn shortest_spanning_sequence(
    g: &Digraph,
    t_source: &TreeView,
    t_target: &TreeView,
) -> Result<ReconfigSequence> {
    check_spanning(g, t_source)?;
    check_spanning(g, t_target)?;
    let mut seq = ReconfigSequence::single(t_source.arcs().clone());
    let mut current = t_source.clone();
    while current.arcs() != t_target.arcs() {
        let remaining = current.arcs().difference_len(t_target.arcs());
        let pair = spanning_tree_exchange_step(g, &current, t_target)?;
        let next = pair.apply(current.arcs());
        current = validate_spanning_tree(g, &next)
            .map_err(|e| Error::Internal(format!("exchange left the spanning trees: {e}")))?;
        if current.arcs().difference_len(t_target.arcs()) + 1 != remaining {
            return Err(Error::Internal(
                "exchange did not shrink the difference".into(),
            ));
        }
        seq.push(next);
    }
    Ok(seq)
}

/// One exchange moving forest `f` towards forest `f_target` of equal size.
///
/// If some arc of `f_target \ f` leaves the weak components of `f` it is
/// added; the removed arc is the other arc into its head when there is one,
/// and otherwise the first arc of `f \ f_target`. If every such arc stays
/// inside a component, each component spans the same vertices in both
/// forests and the spanning-tree step is applied inside one that differs.
pub fn forest_exchange_step(
    g: &Digraph,
    f: &ForestView,
    f_target: &ForestView,
) -> Result<ExchangePair> {
    if f.size() != f_target.size() {
        return Err(Error::SizeMismatch(f.size(), f_target.size()));
    }
    let current = f.arcs();
    let target = f_target.arcs();
    if current == target {
        return Err(Error::Identical);
    }
    let mut component: HashMap<VertexId, usize> = HashMap::new();
    for (i, c) in f.components.iter().enumerate() {
        for v in c.vertices().iter() {
            component.insert(v, i);
        }
    }
    for add in target.difference(&current) {
        let arc = g.arc(add);
        let inside = matches!(
            (component.get(&arc.tail), component.get(&arc.head)),
            (Some(a), Some(b)) if a == b
        );
        if inside {
            continue;
        }
        let into_head = component
            .get(&arc.head)
            .and_then(|&c| f.components[c].parent_arc(arc.head));
        let remove = match into_head {
            Some(a) => a,
            None => current
                .difference(&target)
                .next()
                .ok_or_else(|| Error::Internal("equal-size forests differ one way only".into()))?,
        };
        return Ok(ExchangePair { remove, add });
    }

    for tree in &f.components {
        let vertices: VertexSet = tree.vertices();
        let inside: ArcSet = target
            .iter()
            .filter(|&a| vertices.contains(g.tail(a)) && vertices.contains(g.head(a)))
            .collect();
        if inside.len() != tree.size() {
            return Err(Error::Internal(format!(
                "component sizes differ: {} vs {}",
                tree.size(),
                inside.len()
            )));
        }
        if &inside == tree.arcs() {
            continue;
        }
        let sub = g.induced_subgraph(&vertices)?;
        let local = |arcs: &ArcSet| -> Result<TreeView> {
            let mapped: ArcSet = arcs
                .iter()
                .map(|a| sub.arc_index(a).expect("arc inside component"))
                .collect();
            validate_spanning_tree(&sub.graph, &mapped)
                .map_err(|e| Error::Internal(format!("component is not a spanning tree: {e}")))
        };
        let pair = spanning_tree_exchange_step(&sub.graph, &local(tree.arcs())?, &local(&inside)?)?;
        return Ok(ExchangePair {
            remove: sub.arc_of[pair.remove],
            add: sub.arc_of[pair.add],
        });
    }
    Err(Error::Internal("no component differs".into()))
}

/// A sequence of directed forests of length exactly `|F_s \ F_g|`.
pub fn shortest_forest_sequence(
    g: &Digraph,
    f_source: &ForestView,
    f_target: &ForestView,
) -> Result<ReconfigSequence> {
    if f_source.size() != f_target.size() {
        return Err(Error::SizeMismatch(f_source.size(), f_target.size()));
    }
    let target = f_target.arcs();
    let mut seq = ReconfigSequence::single(f_source.arcs());
    let mut current = f_source.clone();
    loop {
        let arcs = current.arcs();
        if arcs == target {
            return Ok(seq);
        }
        let remaining = arcs.difference_len(&target);
        let pair = forest_exchange_step(g, &current, f_target)?;
        let next = pair.apply(&arcs);
        current = validate_directed_forest(g, &next)
            .map_err(|e| Error::Internal(format!("exchange left the forests: {e}")))?;
        if next.difference_len(&target) + 1 != remaining {
            return Err(Error::Internal(
                "exchange did not shrink the difference".into(),
            ));
        }
        seq.push(next);
    }
}
