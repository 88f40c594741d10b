//! Versioned JSON instance files.
//!
//! ```json
//! {
//!   "version": 1,
//!   "vertices": 3,
//!   "arcs": [[0, 1], [1, 2], [2, 0]],
//!   "problem": "tree",
//!   "k": 2,
//!   "source": [0, 1],
//!   "target": [1, 2]
//! }
//! ```
//!
//! `source` and `target` hold arc ids, except for path problems (vertex
//! sequences) and feedback vertex sets (vertex ids). `k` is their length.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digraph::{Digraph, VertexId};
use crate::families::{
    validate_directed_forest, validate_directed_tree, validate_rooted_forest, validate_rooted_tree,
    validate_spanning_tree,
};
use crate::feedback::{is_feedback_set, FeedbackMode};
use crate::idset::IdSet;
use crate::pathreconf::PathState;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProblemKind {
    Tree,
    SpanningTree,
    Forest,
    RootedTree,
    RootedForest,
    PathReconfiguration,
    PathSliding,
    FeedbackVertexSet,
    FeedbackArcSet,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 9] = [
        ProblemKind::Tree,
        ProblemKind::SpanningTree,
        ProblemKind::Forest,
        ProblemKind::RootedTree,
        ProblemKind::RootedForest,
        ProblemKind::PathReconfiguration,
        ProblemKind::PathSliding,
        ProblemKind::FeedbackVertexSet,
        ProblemKind::FeedbackArcSet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::Tree => "tree",
            ProblemKind::SpanningTree => "spanning-tree",
            ProblemKind::Forest => "forest",
            ProblemKind::RootedTree => "rooted-tree",
            ProblemKind::RootedForest => "rooted-forest",
            ProblemKind::PathReconfiguration => "path-reconfiguration",
            ProblemKind::PathSliding => "path-sliding",
            ProblemKind::FeedbackVertexSet => "feedback-vertex-set",
            ProblemKind::FeedbackArcSet => "feedback-arc-set",
        }
    }

    pub fn is_path(self) -> bool {
        matches!(
            self,
            ProblemKind::PathReconfiguration | ProblemKind::PathSliding
        )
    }
}

/// Correspondence maps written by reductions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Correspondence {
    /// Original vertex -> transformed vertex.
    pub vertex_map: Vec<usize>,
    /// Original arc -> transformed arcs.
    pub arc_map: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub version: u32,
    pub vertices: usize,
    pub arcs: Vec<[usize; 2]>,
    pub problem: ProblemKind,
    pub k: usize,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<VertexId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<VertexId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub correspondence: Option<Correspondence>,
}

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
}

fn field(name: impl Into<String>, message: impl ToString) -> InstanceError {
    InstanceError::Field {
        field: name.into(),
        message: message.to_string(),
    }
}

impl InstanceFile {
    pub fn new(
        graph: &Digraph,
        problem: ProblemKind,
        source: Vec<usize>,
        target: Vec<usize>,
    ) -> Self {
        InstanceFile {
            version: FORMAT_VERSION,
            vertices: graph.vertex_count(),
            arcs: graph.arcs().iter().map(|a| [a.tail, a.head]).collect(),
            problem,
            k: source.len(),
            source,
            target,
            root: None,
            roots: None,
            correspondence: None,
        }
    }

    /// Parses and validates an instance.
    pub fn parse(text: &str) -> Result<Self, InstanceError> {
        let inst: InstanceFile = serde_json::from_str(text).map_err(|e| InstanceError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        inst.validate()?;
        Ok(inst)
    }

    /// Canonical serialization; parsing it back and serializing again is
    /// byte-identical.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("instance serializes");
        text.push('\n');
        text
    }

    pub fn graph(&self) -> Result<Digraph, InstanceError> {
        for (i, &[tail, head]) in self.arcs.iter().enumerate() {
            if tail >= self.vertices || head >= self.vertices {
                return Err(field(format!("arcs[{i}]"), "endpoint out of range"));
            }
            if tail == head {
                return Err(field(format!("arcs[{i}]"), "self-loop"));
            }
        }
        Digraph::new(self.vertices, self.arcs.iter().map(|&[t, h]| (t, h)))
            .map_err(|e| field("arcs", e))
    }

    pub fn source_set(&self) -> IdSet {
        self.source.iter().copied().collect()
    }

    pub fn target_set(&self) -> IdSet {
        self.target.iter().copied().collect()
    }

    pub fn root_set(&self) -> IdSet {
        self.roots.iter().flatten().copied().collect()
    }

    pub fn validate(&self) -> Result<Digraph, InstanceError> {
        if self.version != FORMAT_VERSION {
            return Err(field(
                "version",
                format!("unsupported version {}", self.version),
            ));
        }
        let g = self.graph()?;
        for (name, list) in [("source", &self.source), ("target", &self.target)] {
            if list.len() != self.k {
                return Err(field(
                    name,
                    format!("expected {} entries, found {}", self.k, list.len()),
                ));
            }
            if !self.problem.is_path() {
                let set: IdSet = list.iter().copied().collect();
                if set.len() != list.len() {
                    return Err(field(name, "duplicate ids"));
                }
            }
            self.check_member(&g, list).map_err(|m| field(name, m))?;
        }
        Ok(g)
    }

    fn check_member(&self, g: &Digraph, list: &[usize]) -> Result<(), String> {
        let set: IdSet = list.iter().copied().collect();
        let show = |e: crate::Error| e.to_string();
        match self.problem {
            ProblemKind::Tree => match (self.k, self.root) {
                (0, Some(r)) => validate_rooted_tree(g, &set, r).map(drop).map_err(show),
                (0, None) => Err("a tree without arcs needs `root`".into()),
                _ => validate_directed_tree(g, &set).map(drop).map_err(show),
            },
            ProblemKind::SpanningTree => validate_spanning_tree(g, &set).map(drop).map_err(show),
            ProblemKind::Forest => validate_directed_forest(g, &set).map(drop).map_err(show),
            ProblemKind::RootedTree => {
                let r = self.root.ok_or("missing `root`")?;
                validate_rooted_tree(g, &set, r).map(drop).map_err(show)
            }
            ProblemKind::RootedForest => {
                if self.roots.as_ref().is_none_or(Vec::is_empty) {
                    return Err("missing `roots`".into());
                }
                validate_rooted_forest(g, &set, &self.root_set())
                    .map(drop)
                    .map_err(show)
            }
            ProblemKind::PathReconfiguration | ProblemKind::PathSliding => {
                PathState::new(list.to_vec()).validate(g).map_err(show)
            }
            ProblemKind::FeedbackVertexSet => {
                g.check_vertices(&set).map_err(show)?;
                is_feedback_set(g, &set, FeedbackMode::Vertex)
                    .then_some(())
                    .ok_or_else(|| "not a feedback vertex set".into())
            }
            ProblemKind::FeedbackArcSet => {
                g.check_arcs(&set).map_err(show)?;
                is_feedback_set(g, &set, FeedbackMode::Arc)
                    .then_some(())
                    .ok_or_else(|| "not a feedback arc set".into())
            }
        }
    }
}
