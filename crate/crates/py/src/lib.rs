//! Python bindings for the devoid toolkit: graphs, complexes, matching
//! trees, homotopy descriptors, exact homology, closed-form predictions,
//! and the verification suites.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use devoid::complex::ComplexRepr;
use devoid::devoid::{devoid_complex, dominance_complex, independence_complex, DevoidSpec};
use devoid::error::DevoidError;
use devoid::face::Face;
use devoid::graph::{
    complete, complete_bipartite, cycle, induced_f_matching_number, is_chordal, matching_number,
    path, random_chordal, random_forest, random_tree, star, vertex_cover_number, Multigraph,
    PatternGraph,
};
use devoid::homology::{betti, descriptor_match, DescriptorMatch, DEFAULT_FACE_BUDGET};
use devoid::morse::{
    assemble_matching, fold_reduce, run_tree, split_reduce, verify_acyclic, verify_matching,
    PivotStrategy, ScriptedPlan, DEFAULT_NODE_BUDGET,
};
use devoid::predict;
use devoid::verify::{all_pass, render_jsonl, run_suite, SuiteConfig, SuiteName};
use devoid::{BettiProfile, HomotopyDescriptor, MorseReport};

fn to_py(e: DevoidError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn face_from(vs: &[usize]) -> PyResult<Face> {
    for &v in vs {
        if v >= 64 {
            return Err(PyValueError::new_err(format!(
                "vertex {v} out of range: vertices live in 0..64"
            )));
        }
    }
    Ok(Face::from_vertices(vs.iter().copied()))
}

/// An undirected multigraph on vertices 0..n.
#[pyclass(name = "Graph")]
#[derive(Clone)]
pub struct PyGraph {
    inner: Multigraph,
}

#[pymethods]
impl PyGraph {
    /// A graph on `n` vertices with the given (possibly repeated) edges.
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let mut g = Multigraph::new(n).map_err(to_py)?;
        for (u, v) in edges {
            g.add_edge(u, v).map_err(to_py)?;
        }
        Ok(PyGraph { inner: g })
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        Ok(PyGraph { inner: path(n).map_err(to_py)? })
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        Ok(PyGraph { inner: cycle(n).map_err(to_py)? })
    }

    #[staticmethod]
    fn star(n: usize) -> PyResult<Self> {
        Ok(PyGraph { inner: star(n).map_err(to_py)? })
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        Ok(PyGraph { inner: complete(n).map_err(to_py)? })
    }

    #[staticmethod]
    fn complete_bipartite(m: usize, n: usize) -> PyResult<Self> {
        Ok(PyGraph { inner: complete_bipartite(m, n).map_err(to_py)? })
    }

    #[staticmethod]
    fn random_tree(n: usize, seed: u64) -> PyResult<Self> {
        Ok(PyGraph { inner: random_tree(n, seed).map_err(to_py)? })
    }

    #[staticmethod]
    fn random_forest(n: usize, seed: u64) -> PyResult<Self> {
        Ok(PyGraph { inner: random_forest(n, seed).map_err(to_py)? })
    }

    #[staticmethod]
    fn random_chordal(n: usize, density: f64, seed: u64) -> PyResult<Self> {
        Ok(PyGraph { inner: random_chordal(n, density, seed).map_err(to_py)? })
    }

    #[getter]
    fn n_vertices(&self) -> usize {
        self.inner.n_vertices()
    }

    /// Edges as (u, v, multiplicity) triples, ascending.
    fn edges(&self) -> Vec<(usize, usize, u32)> {
        self.inner.edge_list()
    }

    fn matching_number(&self) -> PyResult<usize> {
        matching_number(&self.inner).map_err(to_py)
    }

    fn vertex_cover_number(&self) -> PyResult<usize> {
        vertex_cover_number(&self.inner).map_err(to_py)
    }

    fn is_chordal(&self) -> bool {
        is_chordal(&self.inner)
    }

    fn is_forest(&self) -> bool {
        self.inner.is_forest()
    }

    /// Largest induced matching by copies of the pattern (for example "p3").
    fn induced_pattern_matching_number(&self, pattern: &str) -> PyResult<usize> {
        let f = PatternGraph::from_name(pattern).map_err(to_py)?;
        induced_f_matching_number(&self.inner, &f).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={})",
            self.inner.n_vertices(),
            self.inner.edge_pair_count()
        )
    }
}

/// A simplicial complex on vertices 0..n, stored by its minimal non-faces.
#[pyclass(name = "Complex")]
#[derive(Clone)]
pub struct PyComplex {
    inner: ComplexRepr,
}

#[pymethods]
impl PyComplex {
    #[staticmethod]
    fn from_facets(n: usize, facets: Vec<Vec<usize>>) -> PyResult<Self> {
        let faces: Vec<Face> = facets
            .iter()
            .map(|f| face_from(f))
            .collect::<PyResult<_>>()?;
        Ok(PyComplex {
            inner: ComplexRepr::from_facets(n, faces).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn from_min_nonfaces(n: usize, nonfaces: Vec<Vec<usize>>) -> PyResult<Self> {
        let faces: Vec<Face> = nonfaces
            .iter()
            .map(|f| face_from(f))
            .collect::<PyResult<_>>()?;
        Ok(PyComplex {
            inner: ComplexRepr::from_min_nonfaces(n, faces).map_err(to_py)?,
        })
    }

    /// Parse `{"n": .., "facets": [[..]]}` or `{"n": .., "min_nonfaces": [[..]]}`.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyComplex {
            inner: ComplexRepr::from_json_str(text).map_err(to_py)?,
        })
    }

    /// Canonical JSON (n plus sorted minimal non-faces).
    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    #[getter]
    fn n_vertices(&self) -> usize {
        self.inner.n_vertices()
    }

    fn live_vertices(&self) -> Vec<usize> {
        self.inner.live_vertices().to_vec()
    }

    fn min_nonfaces(&self) -> Vec<Vec<usize>> {
        self.inner.min_nonfaces().iter().map(|f| f.to_vec()).collect()
    }

    fn is_face(&self, vs: Vec<usize>) -> PyResult<bool> {
        Ok(self.inner.is_face(face_from(&vs)?))
    }

    /// Face counts by cardinality, starting at the empty face.
    fn f_vector(&self) -> PyResult<Vec<usize>> {
        self.inner.f_vector().map_err(to_py)
    }

    /// (euler, reduced_euler).
    fn euler_characteristic(&self) -> PyResult<(i64, i64)> {
        self.inner.euler_characteristic().map_err(to_py)
    }

    fn __eq__(&self, other: &PyComplex) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "Complex(n={}, min_nonfaces={})",
            self.inner.n_vertices(),
            self.inner.min_nonfaces().len()
        )
    }
}

/// A homotopy type read off critical cells: contractible, a wedge of
/// spheres, or an unresolved CW description.
#[pyclass(name = "Descriptor")]
#[derive(Clone)]
pub struct PyDescriptor {
    inner: HomotopyDescriptor,
}

#[pymethods]
impl PyDescriptor {
    /// "contractible", "wedge_of_spheres", or "unknown_cw".
    #[getter]
    fn kind(&self) -> &'static str {
        match &self.inner {
            HomotopyDescriptor::Contractible => "contractible",
            HomotopyDescriptor::WedgeOfSpheres(_) => "wedge_of_spheres",
            HomotopyDescriptor::UnknownCW(_) => "unknown_cw",
        }
    }

    /// Sphere dimensions (with multiplicity) for a wedge of spheres.
    #[getter]
    fn spheres(&self) -> Option<Vec<i64>> {
        match &self.inner {
            HomotopyDescriptor::WedgeOfSpheres(dims) => Some(dims.clone()),
            _ => None,
        }
    }

    /// Critical-cell counts by dimension for an unresolved description.
    #[getter]
    fn cells(&self) -> Option<BTreeMap<i64, u64>> {
        match &self.inner {
            HomotopyDescriptor::UnknownCW(counts) => Some(counts.clone()),
            _ => None,
        }
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Descriptor({})", self.inner)
    }

    fn __eq__(&self, other: &PyDescriptor) -> bool {
        self.inner == other.inner
    }
}

/// Outcome of a matching-tree run.
#[pyclass(name = "MorseReport")]
pub struct PyMorseReport {
    inner: MorseReport,
}

#[pymethods]
impl PyMorseReport {
    /// Critical (unmatched) cells, sorted.
    #[getter]
    fn critical(&self) -> Vec<Vec<usize>> {
        self.inner.critical.iter().map(|f| f.to_vec()).collect()
    }

    #[getter]
    fn matched_pairs(&self) -> usize {
        self.inner.matched_pairs
    }

    #[getter]
    fn tree_nodes(&self) -> usize {
        self.inner.tree_nodes
    }

    #[getter]
    fn strategy(&self) -> String {
        self.inner.strategy.clone()
    }

    /// Critical-cell counts keyed by dimension.
    fn counts(&self) -> BTreeMap<i64, u64> {
        self.inner.critical_counts()
    }

    /// Homotopy type read off the critical cells.
    fn descriptor(&self) -> PyDescriptor {
        PyDescriptor {
            inner: self.inner.interpret(),
        }
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "MorseReport(critical={}, pairs={}, descriptor={})",
            self.inner.critical.len(),
            self.inner.matched_pairs,
            self.inner.interpret()
        )
    }
}

/// Reduced integer homology: Betti numbers and torsion per dimension.
#[pyclass(name = "Homology")]
pub struct PyHomology {
    inner: BettiProfile,
}

#[pymethods]
impl PyHomology {
    /// Reduced Betti numbers for every dimension −1..top (zeros included).
    #[getter]
    fn betti(&self) -> BTreeMap<i64, u64> {
        self.inner.betti.clone()
    }

    /// Torsion invariant factors (as decimal strings) per dimension.
    #[getter]
    fn torsion(&self) -> BTreeMap<i64, Vec<String>> {
        self.inner
            .torsion
            .iter()
            .map(|(&d, fs)| (d, fs.iter().map(|f| f.to_string()).collect()))
            .collect()
    }

    /// Reduced Euler characteristic Σ (−1)^d b̃_d.
    #[getter]
    fn chi(&self) -> i64 {
        self.inner.reduced_euler()
    }

    fn reduced_betti(&self, d: i64) -> u64 {
        self.inner.reduced_betti(d)
    }

    fn is_torsion_free(&self) -> bool {
        self.inner.is_torsion_free()
    }

    fn top_nonzero_dim(&self) -> Option<i64> {
        self.inner.top_nonzero_dim()
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn __repr__(&self) -> String {
        let betti: Vec<String> = self
            .inner
            .betti
            .iter()
            .filter(|(_, &b)| b > 0)
            .map(|(d, b)| format!("{d}:{b}"))
            .collect();
        format!("Homology(betti={{{}}})", betti.join(", "))
    }
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

/// Complex of vertex sets whose induced subgraph avoids every forbidden
/// pattern (patterns by name: "p3", "c4", "k2", ...).
#[pyfunction]
#[pyo3(name = "devoid_complex")]
fn py_devoid_complex(graph: &PyGraph, patterns: Vec<String>) -> PyResult<PyComplex> {
    let family: Vec<PatternGraph> = patterns
        .iter()
        .map(|p| PatternGraph::from_name(p))
        .collect::<devoid::Result<_>>()
        .map_err(to_py)?;
    let spec = DevoidSpec::new(graph.inner.clone(), family).map_err(to_py)?;
    Ok(PyComplex {
        inner: devoid_complex(&spec).map_err(to_py)?,
    })
}

/// Independence complex: faces are the independent sets.
#[pyfunction]
#[pyo3(name = "independence_complex")]
fn py_independence_complex(graph: &PyGraph) -> PyResult<PyComplex> {
    Ok(PyComplex {
        inner: independence_complex(&graph.inner).map_err(to_py)?,
    })
}

/// Dominance complex: faces are the complements of dominating sets.
#[pyfunction]
#[pyo3(name = "dominance_complex")]
fn py_dominance_complex(graph: &PyGraph) -> PyResult<PyComplex> {
    Ok(PyComplex {
        inner: dominance_complex(&graph.inner).map_err(to_py)?,
    })
}

// ---------------------------------------------------------------------------
// Matching trees, homology, reductions
// ---------------------------------------------------------------------------

fn strategy_from(
    spec: &str,
    graph: Option<&PyGraph>,
    script: Option<&str>,
) -> PyResult<PivotStrategy> {
    if let Some(text) = script {
        return Ok(PivotStrategy::Scripted(
            ScriptedPlan::parse(text).map_err(to_py)?,
        ));
    }
    let graph_needed = |name: &str| {
        PyValueError::new_err(format!("the {name} strategy needs the graph= argument"))
    };
    match spec {
        "greedy" => Ok(PivotStrategy::Greedy),
        "simplicial" => Ok(PivotStrategy::SimplicialVertex(
            graph.ok_or_else(|| graph_needed("simplicial"))?.inner.clone(),
        )),
        "leaf" => Ok(PivotStrategy::LeafNeighbor(
            graph.ok_or_else(|| graph_needed("leaf"))?.inner.clone(),
        )),
        other => {
            if let Some(k) = other.strip_prefix("path:") {
                let k: usize = k
                    .parse()
                    .map_err(|_| PyValueError::new_err(format!("bad strategy {other:?}")))?;
                return Ok(PivotStrategy::PathLabeling(k));
            }
            if let Some(k) = other.strip_prefix("cycle:") {
                let k: usize = k
                    .parse()
                    .map_err(|_| PyValueError::new_err(format!("bad strategy {other:?}")))?;
                return Ok(PivotStrategy::CycleLabeling(k));
            }
            Err(PyValueError::new_err(format!(
                "unknown strategy {other:?}; expected greedy|path:<k>|cycle:<k>|simplicial|leaf \
                 or a script= argument"
            )))
        }
    }
}

/// Run a matching tree and return the report. The resulting acyclic
/// matching is re-verified within `face_budget` unless `verify=False`.
#[pyfunction]
#[pyo3(name = "morse", signature = (complex, strategy="greedy", *, graph=None, script=None, node_budget=DEFAULT_NODE_BUDGET, face_budget=DEFAULT_FACE_BUDGET, verify=true))]
#[allow(clippy::too_many_arguments)]
fn py_morse(
    complex: &PyComplex,
    strategy: &str,
    graph: Option<&PyGraph>,
    script: Option<&str>,
    node_budget: usize,
    face_budget: usize,
    verify: bool,
) -> PyResult<PyMorseReport> {
    let strategy = strategy_from(strategy, graph, script)?;
    let (tree, report) = run_tree(&complex.inner, &strategy, node_budget).map_err(to_py)?;
    if verify {
        match assemble_matching(&complex.inner, &tree, face_budget) {
            Ok(matching) => {
                let paired =
                    verify_matching(&complex.inner, &matching, face_budget).map_err(to_py)?;
                let acyclic =
                    verify_acyclic(&complex.inner, &matching, face_budget).map_err(to_py)?;
                if !(paired && acyclic) {
                    return Err(PyValueError::new_err(
                        "assembled matching failed verification",
                    ));
                }
            }
            Err(DevoidError::BudgetExceeded(_) | DevoidError::TooLarge(_)) => {}
            Err(e) => return Err(to_py(e)),
        }
    }
    Ok(PyMorseReport { inner: report })
}

/// Exact reduced integer homology via Smith normal form.
#[pyfunction]
#[pyo3(name = "homology", signature = (complex, face_budget=DEFAULT_FACE_BUDGET))]
fn py_homology(complex: &PyComplex, face_budget: usize) -> PyResult<PyHomology> {
    Ok(PyHomology {
        inner: betti(&complex.inner, face_budget).map_err(to_py)?,
    })
}

/// "consistent", "inconsistent", or "vacuous" (unknown CW descriptors
/// assert nothing).
#[pyfunction]
#[pyo3(name = "descriptor_match")]
fn py_descriptor_match(homology: &PyHomology, descriptor: &PyDescriptor) -> &'static str {
    match descriptor_match(&homology.inner, &descriptor.inner) {
        DescriptorMatch::Consistent => "consistent",
        DescriptorMatch::Inconsistent => "inconsistent",
        DescriptorMatch::Vacuous => "vacuous",
    }
}

/// Repeatedly delete dominated vertices; returns the reduced complex and
/// the (witness, deleted) trace. Folds preserve the homotopy type.
#[pyfunction]
#[pyo3(name = "fold")]
fn py_fold(complex: &PyComplex) -> PyResult<(PyComplex, Vec<(usize, usize)>)> {
    let (result, trace) = fold_reduce(&complex.inner).map_err(to_py)?;
    Ok((PyComplex { inner: result }, trace))
}

/// Split off vertex `v` when the closed obstruction set of `u` sits inside
/// that of `v`: the complex is (deletion of v) ∨ Σ(link of v). Returns
/// (deletion, link).
#[pyfunction]
#[pyo3(name = "split")]
fn py_split(complex: &PyComplex, u: usize, v: usize) -> PyResult<(PyComplex, PyComplex)> {
    let (deletion, link) = split_reduce(&complex.inner, u, v).map_err(to_py)?;
    Ok((
        PyComplex { inner: deletion },
        PyComplex { inner: link },
    ))
}

// ---------------------------------------------------------------------------
// Closed-form predictions
// ---------------------------------------------------------------------------

/// Homotopy type of the complex of k-path-avoiding sets in a path on n
/// vertices.
#[pyfunction]
#[pyo3(name = "predict_path")]
fn py_predict_path(n: usize, k: usize) -> PyResult<PyDescriptor> {
    Ok(PyDescriptor {
        inner: predict::predict_path(n, k).map_err(to_py)?,
    })
}

/// Homotopy type of the complex of k-path-avoiding sets in a cycle on n
/// vertices.
#[pyfunction]
#[pyo3(name = "predict_cycle")]
fn py_predict_cycle(n: usize, k: usize) -> PyResult<PyDescriptor> {
    Ok(PyDescriptor {
        inner: predict::predict_cycle(n, k).map_err(to_py)?,
    })
}

/// Dominance complex of a chordal graph: a sphere of dimension
/// (vertex cover number − 1).
#[pyfunction]
#[pyo3(name = "predict_dom_chordal")]
fn py_predict_dom_chordal(graph: &PyGraph) -> PyResult<PyDescriptor> {
    Ok(PyDescriptor {
        inner: predict::predict_dom_chordal(&graph.inner).map_err(to_py)?,
    })
}

/// Dominance complex of a forest: a sphere of dimension
/// (matching number − 1).
#[pyfunction]
#[pyo3(name = "predict_dom_forest")]
fn py_predict_dom_forest(graph: &PyGraph) -> PyResult<PyDescriptor> {
    Ok(PyDescriptor {
        inner: predict::predict_dom_forest(&graph.inner).map_err(to_py)?,
    })
}

// ---------------------------------------------------------------------------
// Verification suites
// ---------------------------------------------------------------------------

/// Run a verification suite ("paths", "cycles", "dom-chordal",
/// "dom-forest", "forest-p3", "figures"). Returns (all_pass, jsonl) where
/// jsonl holds one record per line.
#[pyfunction]
#[pyo3(name = "verify_suite", signature = (name, *, k=3, n_min=None, n_max=None, instances=None, seed=7, face_budget=DEFAULT_FACE_BUDGET, node_budget=DEFAULT_NODE_BUDGET))]
#[allow(clippy::too_many_arguments)]
fn py_verify_suite(
    name: &str,
    k: usize,
    n_min: Option<usize>,
    n_max: Option<usize>,
    instances: Option<usize>,
    seed: u64,
    face_budget: usize,
    node_budget: usize,
) -> PyResult<(bool, String)> {
    let suite = SuiteName::parse(name).map_err(to_py)?;
    let cfg = SuiteConfig {
        k,
        n_min,
        n_max,
        instances,
        seed,
        face_budget,
        node_budget,
    };
    let records = run_suite(suite, &cfg).map_err(to_py)?;
    Ok((all_pass(&records), render_jsonl(&records)))
}

#[pymodule]
fn devoid_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyComplex>()?;
    m.add_class::<PyDescriptor>()?;
    m.add_class::<PyMorseReport>()?;
    m.add_class::<PyHomology>()?;
    m.add_function(wrap_pyfunction!(py_devoid_complex, m)?)?;
    m.add_function(wrap_pyfunction!(py_independence_complex, m)?)?;
    m.add_function(wrap_pyfunction!(py_dominance_complex, m)?)?;
    m.add_function(wrap_pyfunction!(py_morse, m)?)?;
    m.add_function(wrap_pyfunction!(py_homology, m)?)?;
    m.add_function(wrap_pyfunction!(py_descriptor_match, m)?)?;
    m.add_function(wrap_pyfunction!(py_fold, m)?)?;
    m.add_function(wrap_pyfunction!(py_split, m)?)?;
    m.add_function(wrap_pyfunction!(py_predict_path, m)?)?;
    m.add_function(wrap_pyfunction!(py_predict_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(py_predict_dom_chordal, m)?)?;
    m.add_function(wrap_pyfunction!(py_predict_dom_forest, m)?)?;
    m.add_function(wrap_pyfunction!(py_verify_suite, m)?)?;
    Ok(())
}
