#![allow(dead_code)]

use dtreconf_core::oracle::{enumerate_family, Family, FamilySpec, ReconfigurationGraph};
use dtreconf_core::pathreconf::PathState;
use dtreconf_core::{Digraph, IdSet, DEFAULT_STATE_GUARD};

/// Ordered pairs of distinct vertices in lexicographic order.
pub fn complete_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|(u, v)| u != v)
        .collect()
}

/// The digraph whose arcs are the pairs selected by the bits of `mask`.
pub fn digraph_from_mask(n: usize, mask: u64) -> Digraph {
    let arcs = complete_pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, p)| p);
    Digraph::new(n, arcs).unwrap()
}

/// Every simple digraph on `n` vertices.
pub fn all_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    let count = 1u64 << (n * n.saturating_sub(1));
    (0..count).map(move |mask| digraph_from_mask(n, mask))
}

pub fn members(g: &Digraph, family: Family, k: usize) -> Vec<IdSet> {
    enumerate_family(&FamilySpec::new(g, family, k), DEFAULT_STATE_GUARD).unwrap()
}

pub fn reconfiguration_graph(g: &Digraph, family: Family, k: usize) -> ReconfigurationGraph {
    ReconfigurationGraph::build(&FamilySpec::new(g, family, k), DEFAULT_STATE_GUARD).unwrap()
}

/// Every simple path of `g` with `vertices` vertices, as vertex sequences.
pub fn all_paths(g: &Digraph, vertices: usize) -> Vec<PathState> {
    fn extend(g: &Digraph, walk: &mut Vec<usize>, len: usize, out: &mut Vec<PathState>) {
        if walk.len() == len {
            out.push(PathState::new(walk.clone()));
            return;
        }
        for v in g.out_neighbors(*walk.last().unwrap()) {
            if !walk.contains(&v) {
                walk.push(v);
                extend(g, walk, len, out);
                walk.pop();
            }
        }
    }
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        extend(g, &mut vec![v], vertices, &mut out);
    }
    out
}
