//! Python bindings. Arc sets are lists of arc ids, paths are lists of
//! vertices, sequences are lists of such lists.

use dtreconf_core::exchange::{shortest_forest_sequence, shortest_spanning_sequence};
use dtreconf_core::families::{
    validate_directed_forest, validate_directed_tree, validate_rooted_forest, validate_rooted_tree,
    validate_spanning_tree,
};
use dtreconf_core::feedback::{
    is_feedback_set, reduce_dfvs_to_dfas, FeedbackInstance, FeedbackMode,
};
use dtreconf_core::generate::{generate_instance, GenerateParams};
use dtreconf_core::instance::{InstanceFile, ProblemKind};
use dtreconf_core::oracle::{oracle_distance as core_oracle_distance, Family, FamilySpec};
use dtreconf_core::pathreconf::{
    path_neighbors as core_path_neighbors, solve_path as core_solve_path, PathMode, PathState,
};
use dtreconf_core::reachability::{self, build_auxiliary_graph};
use dtreconf_core::rooted;
use dtreconf_core::{
    ArcSet, Error, IdSet, ReconfigSequence, TreeView, VertexSet, DEFAULT_STATE_GUARD,
};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::GuardExceeded(_) => PyRuntimeError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn set(ids: Vec<usize>) -> IdSet {
    ids.into_iter().collect()
}

fn steps(seq: ReconfigSequence) -> Vec<Vec<usize>> {
    seq.into_steps().into_iter().map(|s| s.to_vec()).collect()
}

/// A directed multigraph on vertices `0..n`; arc ids follow list order.
#[pyclass(name = "Digraph", module = "dtreconf", frozen)]
struct PyDigraph {
    inner: dtreconf_core::Digraph,
}

#[pymethods]
impl PyDigraph {
    #[new]
    fn new(vertices: usize, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = dtreconf_core::Digraph::new(vertices, arcs).map_err(py_err)?;
        Ok(PyDigraph { inner })
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn arc_count(&self) -> usize {
        self.inner.arc_count()
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.inner.arcs().iter().map(|a| (a.tail, a.head)).collect()
    }

    fn reachable(&self, v: usize) -> PyResult<Vec<usize>> {
        Ok(self.inner.reachable_set(v).map_err(py_err)?.to_vec())
    }

    /// Arcs of a breadth-first `w`-rooted tree with `size` arcs, or None.
    fn bfs_tree(&self, w: usize, size: usize) -> PyResult<Option<Vec<usize>>> {
        Ok(self
            .inner
            .bfs_tree(w, size)
            .map_err(py_err)?
            .map(|s| s.to_vec()))
    }

    fn is_directed_tree(&self, arcs: Vec<usize>) -> bool {
        validate_directed_tree(&self.inner, &set(arcs)).is_ok()
    }

    /// Root of the directed tree formed by `arcs`.
    fn tree_root(&self, arcs: Vec<usize>) -> PyResult<usize> {
        Ok(validate_directed_tree(&self.inner, &set(arcs))
            .map_err(py_err)?
            .root())
    }

    /// Unordered root pairs joined in the auxiliary graph for `k`-arc trees.
    fn auxiliary_edges(&self, k: usize) -> Vec<(usize, usize)> {
        build_auxiliary_graph(&self.inner, k).edge_pairs()
    }

    fn __repr__(&self) -> String {
        format!("Digraph({}, {:?})", self.inner.vertex_count(), self.arcs())
    }
}

fn trees(g: &PyDigraph, source: Vec<usize>, target: Vec<usize>) -> PyResult<(TreeView, TreeView)> {
    let s = validate_directed_tree(&g.inner, &set(source)).map_err(py_err)?;
    let t = validate_directed_tree(&g.inner, &set(target)).map_err(py_err)?;
    Ok((s, t))
}

/// Whether one `k`-arc directed tree reconfigures into another.
#[pyfunction]
fn decide(g: &PyDigraph, source: Vec<usize>, target: Vec<usize>) -> PyResult<bool> {
    let (s, t) = trees(g, source, target)?;
    reachability::decide(&g.inner, &s, &t).map_err(py_err)
}

/// A directed-tree reconfiguration sequence, or None for a no-instance.
#[pyfunction]
fn build_sequence(
    g: &PyDigraph,
    source: Vec<usize>,
    target: Vec<usize>,
) -> PyResult<Option<Vec<Vec<usize>>>> {
    let (s, t) = trees(g, source, target)?;
    match reachability::build_sequence(&g.inner, &s, &t) {
        Ok(seq) => Ok(Some(steps(seq))),
        Err(Error::Unreachable) => Ok(None),
        Err(e) => Err(py_err(e)),
    }
}

#[pyfunction]
fn spanning_tree_sequence(
    g: &PyDigraph,
    source: Vec<usize>,
    target: Vec<usize>,
) -> PyResult<Vec<Vec<usize>>> {
    let s = validate_spanning_tree(&g.inner, &set(source)).map_err(py_err)?;
    let t = validate_spanning_tree(&g.inner, &set(target)).map_err(py_err)?;
    shortest_spanning_sequence(&g.inner, &s, &t)
        .map(steps)
        .map_err(py_err)
}

#[pyfunction]
fn forest_sequence(
    g: &PyDigraph,
    source: Vec<usize>,
    target: Vec<usize>,
) -> PyResult<Vec<Vec<usize>>> {
    let s = validate_directed_forest(&g.inner, &set(source)).map_err(py_err)?;
    let t = validate_directed_forest(&g.inner, &set(target)).map_err(py_err)?;
    shortest_forest_sequence(&g.inner, &s, &t)
        .map(steps)
        .map_err(py_err)
}

#[pyfunction]
fn fixed_root_sequence(
    g: &PyDigraph,
    source: Vec<usize>,
    target: Vec<usize>,
    root: usize,
) -> PyResult<Vec<Vec<usize>>> {
    let s = validate_rooted_tree(&g.inner, &set(source), root).map_err(py_err)?;
    let t = validate_rooted_tree(&g.inner, &set(target), root).map_err(py_err)?;
    rooted::fixed_root_sequence(&g.inner, &s, &t)
        .map(steps)
        .map_err(py_err)
}

#[pyfunction]
fn rooted_forest_sequence(
    g: &PyDigraph,
    source: Vec<usize>,
    target: Vec<usize>,
    roots: Vec<usize>,
) -> PyResult<Vec<Vec<usize>>> {
    let roots: VertexSet = set(roots);
    let s = validate_rooted_forest(&g.inner, &set(source), &roots).map_err(py_err)?;
    let t = validate_rooted_forest(&g.inner, &set(target), &roots).map_err(py_err)?;
    rooted::rooted_forest_sequence(&g.inner, &s, &t, &roots)
        .map(steps)
        .map_err(py_err)
}

fn path_mode(mode: &str) -> PyResult<PathMode> {
    match mode {
        "sliding" => Ok(PathMode::Sliding),
        "reconfiguration" => Ok(PathMode::Reconfiguration),
        other => Err(PyValueError::new_err(format!(
            "unknown path mode {other:?}"
        ))),
    }
}

#[pyfunction]
#[pyo3(signature = (g, path, mode = "reconfiguration"))]
fn path_neighbors(g: &PyDigraph, path: Vec<usize>, mode: &str) -> PyResult<Vec<Vec<usize>>> {
    let next =
        core_path_neighbors(&g.inner, &PathState::new(path), path_mode(mode)?).map_err(py_err)?;
    Ok(next.into_iter().map(|p| p.vertices).collect())
}

/// Shortest sequence of paths (vertex lists), or None.
#[pyfunction]
#[pyo3(signature = (g, source, target, mode = "reconfiguration", guard = DEFAULT_STATE_GUARD))]
fn solve_path(
    g: &PyDigraph,
    source: Vec<usize>,
    target: Vec<usize>,
    mode: &str,
    guard: usize,
) -> PyResult<Option<Vec<Vec<usize>>>> {
    let found = core_solve_path(
        &g.inner,
        &PathState::new(source),
        &PathState::new(target),
        path_mode(mode)?,
        guard,
    )
    .map_err(py_err)?;
    Ok(found.map(|paths| paths.into_iter().map(|p| p.vertices).collect()))
}

fn feedback_mode(mode: &str) -> PyResult<FeedbackMode> {
    match mode {
        "vertex" => Ok(FeedbackMode::Vertex),
        "arc" => Ok(FeedbackMode::Arc),
        other => Err(PyValueError::new_err(format!(
            "unknown feedback mode {other:?}"
        ))),
    }
}

#[pyfunction]
#[pyo3(signature = (g, members, mode = "vertex"))]
fn is_feedback(g: &PyDigraph, members: Vec<usize>, mode: &str) -> PyResult<bool> {
    Ok(is_feedback_set(
        &g.inner,
        &set(members),
        feedback_mode(mode)?,
    ))
}

/// Shortest sequence of feedback sets, or None.
#[pyfunction]
#[pyo3(signature = (g, source, target, mode = "vertex", guard = DEFAULT_STATE_GUARD))]
fn solve_feedback(
    g: &PyDigraph,
    source: Vec<usize>,
    target: Vec<usize>,
    mode: &str,
    guard: usize,
) -> PyResult<Option<Vec<Vec<usize>>>> {
    let inst = FeedbackInstance::new(&g.inner, set(source), set(target), feedback_mode(mode)?)
        .map_err(py_err)?;
    Ok(inst.solve(guard).map_err(py_err)?.map(steps))
}

/// The split graph of the vertex-to-arc feedback reduction and the arc id
/// standing for each original vertex.
#[pyfunction]
fn dfvs_to_dfas(g: &PyDigraph) -> (PyDigraph, Vec<usize>) {
    let red = reduce_dfvs_to_dfas(&g.inner);
    let internal = (0..g.inner.vertex_count())
        .map(|v| red.internal_arc(v))
        .collect();
    (PyDigraph { inner: red.graph }, internal)
}

fn family(name: &str, root: Option<usize>, roots: Option<Vec<usize>>) -> PyResult<Family> {
    Ok(match name {
        "tree" => Family::DirectedTree,
        "spanning-tree" => Family::SpanningTree,
        "forest" => Family::Forest,
        "rooted-tree" => {
            Family::RootedTree(root.ok_or_else(|| PyValueError::new_err("rooted-tree needs root"))?)
        }
        "rooted-forest" => Family::RootedForest(set(
            roots.ok_or_else(|| PyValueError::new_err("rooted-forest needs roots"))?
        )),
        "path" => Family::Path,
        "feedback-vertex-set" => Family::FeedbackVertexSet,
        "feedback-arc-set" => Family::FeedbackArcSet,
        "acyclic" => Family::AcyclicSubgraph,
        other => return Err(PyValueError::new_err(format!("unknown family {other:?}"))),
    })
}

/// Exact exchange distance by brute force, or None when unreachable.
#[pyfunction]
#[pyo3(signature = (g, family_name, source, target, root = None, roots = None, guard = DEFAULT_STATE_GUARD))]
fn oracle_distance(
    g: &PyDigraph,
    family_name: &str,
    source: Vec<usize>,
    target: Vec<usize>,
    root: Option<usize>,
    roots: Option<Vec<usize>>,
    guard: usize,
) -> PyResult<Option<usize>> {
    let spec = FamilySpec::new(&g.inner, family(family_name, root, roots)?, source.len());
    let (s, t): (ArcSet, ArcSet) = (set(source), set(target));
    core_oracle_distance(&spec, &s, &t, guard).map_err(py_err)
}

/// A reproducible random instance as JSON text.
#[pyfunction]
#[pyo3(signature = (vertices, problem, k, seed = 0, arc_probability = 0.3))]
fn generate(
    vertices: usize,
    problem: &str,
    k: usize,
    seed: u64,
    arc_probability: f64,
) -> PyResult<String> {
    let problem = ProblemKind::ALL
        .into_iter()
        .find(|p| p.name() == problem)
        .ok_or_else(|| PyValueError::new_err(format!("unknown problem {problem:?}")))?;
    let params = GenerateParams {
        vertices,
        arc_probability,
        seed,
        problem,
        k,
    };
    generate_instance(&params)
        .map(|i| i.to_json())
        .map_err(py_err)
}

/// Parses an instance and returns its graph.
#[pyfunction]
fn instance_graph(text: &str) -> PyResult<PyDigraph> {
    let inst = InstanceFile::parse(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let inner = inst
        .graph()
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(PyDigraph { inner })
}

#[pymodule]
fn dtreconf(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDigraph>()?;
    m.add_function(wrap_pyfunction!(decide, m)?)?;
    m.add_function(wrap_pyfunction!(build_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(spanning_tree_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(forest_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(fixed_root_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(rooted_forest_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(path_neighbors, m)?)?;
    m.add_function(wrap_pyfunction!(solve_path, m)?)?;
    m.add_function(wrap_pyfunction!(is_feedback, m)?)?;
    m.add_function(wrap_pyfunction!(solve_feedback, m)?)?;
    m.add_function(wrap_pyfunction!(dfvs_to_dfas, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_distance, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(instance_graph, m)?)?;
    m.add("DEFAULT_STATE_GUARD", DEFAULT_STATE_GUARD)?;
    Ok(())
}
