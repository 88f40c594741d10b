//! Reconfiguration of directed trees, forests, spanning trees, paths and
//! feedback sets in digraphs.
//!
//! Every solution is an [`IdSet`] of arc (or vertex) identifiers of a
//! [`Digraph`]. A reconfiguration sequence moves between two solutions of
//! equal size by exchanging one element per step while every intermediate
//! stays inside the solution family.
//!
//! * [`exchange`]: shortest sequences for directed spanning trees and
//!   equal-size directed forests.
//! * [`rooted`]: sequences that keep a fixed root (or root set).
//! * [`reachability`]: the polynomial decision procedure for directed trees
//!   of a fixed size, plus sequence assembly.
//! * [`pathreconf`] and [`feedback`]: exact solvers and reductions for the
//!   PSPACE-complete path and feedback-set variants.
//! * [`oracle`]: brute-force reconfiguration graphs used as ground truth.

pub mod digraph;
pub mod dot;
pub mod error;
pub mod exchange;
pub mod families;
pub mod feedback;
pub mod generate;
pub mod idset;
pub mod instance;
pub mod oracle;
pub mod pathreconf;
pub mod reachability;
pub mod rooted;
pub mod search;
pub mod sequences;

pub use digraph::{ArcId, Digraph, VertexId};
pub use error::{Error, Result};
pub use families::{ForestView, PathView, TreeView};
pub use idset::{ArcSet, IdSet, VertexSet};
pub use sequences::ReconfigSequence;

/// Default cap on the number of states any exhaustive search may visit.
pub const DEFAULT_STATE_GUARD: usize = 10_000_000;
