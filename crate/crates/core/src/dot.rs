//! Graphviz export of reconfiguration sequences, one frame per step.

use std::fmt::Write;

use crate::digraph::Digraph;
use crate::idset::IdSet;
use crate::sequences::ReconfigSequence;

/// Whether sequence elements are arcs or vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Elements {
    Arcs,
    Vertices,
}

/// One frame: members of `current` drawn bold, the element that entered
/// since `previous` in blue and the one that left in red (dashed).
pub fn frame(
    g: &Digraph,
    current: &IdSet,
    previous: Option<&IdSet>,
    elements: Elements,
    title: &str,
) -> String {
    let previous = previous.unwrap_or(current);
    let added: IdSet = current.difference(previous).collect();
    let removed: IdSet = previous.difference(current).collect();
    let style = |id: usize| {
        if added.contains(id) {
            "color=blue, penwidth=2.5"
        } else if removed.contains(id) {
            "color=red, style=dashed, penwidth=2.5"
        } else if current.contains(id) {
            "color=black, penwidth=2.5"
        } else {
            "color=gray70"
        }
    };
    let (arc_sets, vertex_sets) = match elements {
        Elements::Arcs => (true, false),
        Elements::Vertices => (false, true),
    };
    let mut out = String::new();
    writeln!(out, "digraph frame {{").unwrap();
    writeln!(out, "  label=\"{title}\";").unwrap();
    for v in 0..g.vertex_count() {
        let attrs = if vertex_sets { style(v) } else { "color=black" };
        writeln!(out, "  {v} [{attrs}];").unwrap();
    }
    for (a, arc) in g.arcs().iter().enumerate() {
        let attrs = if arc_sets { style(a) } else { "color=black" };
        writeln!(
            out,
            "  {} -> {} [label=\"{a}\", {attrs}];",
            arc.tail, arc.head
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn sequence_frames(g: &Digraph, seq: &ReconfigSequence, elements: Elements) -> Vec<String> {
    let steps = seq.steps();
    steps
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let prev = i.checked_sub(1).map(|j| &steps[j]);
            frame(g, s, prev, elements, &format!("step {i} of {}", seq.len()))
        })
        .collect()
}
