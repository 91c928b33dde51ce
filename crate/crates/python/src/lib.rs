//! Python bindings: graphs, spectra, certificates and searches.
//!
//! Certificates and search reports come back as plain dicts, decoded from the
//! same JSON the command line prints.

use num_bigint::BigUint;
use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyAny;

use lab::certify::{self as cert, ClaimParams, Tolerances};
use lab::graph as build;
use lab::search::{self, SearchOptions};
use lab::spectral;

fn err(e: lab::Error) -> PyErr {
    match e {
        lab::Error::TooLarge { .. } => PyOverflowError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn loads<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

/// A simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "spectral_lab", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: lab::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = lab::Graph::from_edges(n, edges).map_err(err)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        let inner = lab::from_graph6(text).map_err(err)?;
        Ok(PyGraph { inner })
    }

    fn to_graph6(&self) -> PyResult<String> {
        lab::to_graph6(&self.inner).map_err(err)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn is_bipartite(&self) -> bool {
        self.inner.is_bipartite()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// Length of a shortest odd cycle, or None when bipartite.
    fn odd_girth(&self) -> Option<usize> {
        lab::odd_girth(&self.inner).value()
    }

    /// Whether no odd cycle of length at most `2k + 1` exists.
    fn is_forbidden_free(&self, k: usize) -> bool {
        lab::is_forbidden_free(&self.inner, k)
    }

    /// Adjacency eigenvalues, non-increasing.
    #[pyo3(signature = (zero_tol = spectral::DEFAULT_ZERO_TOL))]
    fn spectrum(&self, zero_tol: f64) -> PyResult<Vec<f64>> {
        Ok(lab::spectrum(&self.inner, zero_tol).map_err(err)?.values)
    }

    fn spectral_radius(&self) -> PyResult<f64> {
        Ok(lab::spectrum(&self.inner, spectral::DEFAULT_ZERO_TOL).map_err(err)?.lambda1())
    }

    /// `Tr(A^t)`, exactly.
    fn closed_walks(&self, t: u32) -> PyResult<BigUint> {
        spectral::closed_walks(&self.inner, t).map_err(err)
    }

    /// Number of walks with `t` vertices, exactly.
    fn walks(&self, t: u32) -> PyResult<BigUint> {
        spectral::walks(&self.inner, t).map_err(err)
    }

    fn rank(&self) -> usize {
        spectral::rank_exact(&self.inner)
    }

    fn canonical_form(&self) -> PyResult<String> {
        search::canonical_form(&self.inner).map_err(err)
    }

    fn is_isomorphic(&self, other: &PyGraph) -> PyResult<bool> {
        search::are_isomorphic(&self.inner, &other.inner).map_err(err)
    }

    fn disjoint_union(&self, other: &PyGraph) -> PyGraph {
        PyGraph {
            inner: self.inner.disjoint_union(&other.inner),
        }
    }

    fn join(&self, other: &PyGraph) -> PyGraph {
        PyGraph {
            inner: self.inner.join(&other.inner),
        }
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph(order={}, size={})", self.inner.order(), self.inner.size())
    }
}

fn wrap(g: lab::Result<lab::Graph>) -> PyResult<PyGraph> {
    g.map(|inner| PyGraph { inner }).map_err(err)
}

#[pyfunction]
fn path(n: usize) -> PyResult<PyGraph> {
    wrap(build::path(n))
}

#[pyfunction]
fn cycle(n: usize) -> PyResult<PyGraph> {
    wrap(build::cycle(n))
}

#[pyfunction]
fn complete(n: usize) -> PyResult<PyGraph> {
    wrap(build::complete(n))
}

#[pyfunction]
fn complete_bipartite(s: usize, t: usize) -> PyResult<PyGraph> {
    wrap(build::complete_bipartite(s, t))
}

#[pyfunction]
fn t_tree(a: usize, b: usize, c: usize) -> PyResult<PyGraph> {
    wrap(build::t_tree(a, b, c))
}

/// `K_{s,t}` with one edge replaced by a path on `2k + 1` vertices.
#[pyfunction]
fn rk_bipartite(k: usize, s: usize, t: usize) -> PyResult<PyGraph> {
    wrap(build::rk_bipartite(k, s, t))
}

#[pyfunction]
fn split_graph(n: usize, k: usize) -> PyResult<PyGraph> {
    wrap(build::split_graph(n, k))
}

/// Blow-up of `p2k1`, `2p2k1`, `p4k1` or `p5k1`; one class size per base vertex.
#[pyfunction]
fn blow_up(base: &str, sizes: Vec<usize>) -> PyResult<PyGraph> {
    let b = build::BaseGraph::parse(base).ok_or_else(|| PyValueError::new_err(format!("unknown base `{base}`")))?;
    wrap(build::blow_up(&b.graph(), &sizes))
}

/// Largest root of the quotient polynomial of `R_k(K_{s,t})`.
#[pyfunction]
fn rk_spectral_radius(k: usize, s: usize, t: usize) -> PyResult<f64> {
    spectral::rk_spectral_radius(k, s, t).map_err(err)
}

/// Certificates for `claim` on `graph`, as dicts.
#[pyfunction]
#[pyo3(signature = (graph, claim, k = 1, r = None, tolerance = cert::DEFAULT_EQUALITY_TOL))]
fn certify<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    claim: &str,
    k: usize,
    r: Option<usize>,
    tolerance: f64,
) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let tol = Tolerances {
        equality: tolerance,
        ..Tolerances::default()
    };
    let certs = cert::certify_claim(&graph.inner, claim, ClaimParams { k, r }, &tol).map_err(err)?;
    certs.iter().map(|c| loads(py, &c.to_json())).collect()
}

#[pyfunction]
fn claim_ids() -> Vec<&'static str> {
    cert::CLAIM_IDS.to_vec()
}

fn options(workers: usize) -> SearchOptions {
    SearchOptions {
        workers: workers.max(1),
        ..SearchOptions::default()
    }
}

/// Maximizers of the spectral radius among non-bipartite
/// `{C_3, ..., C_{2k+1}}`-free classes of order `n`.
#[pyfunction]
#[pyo3(signature = (n, k, workers = 1))]
fn extremal_search<'py>(py: Python<'py>, n: usize, k: usize, workers: usize) -> PyResult<Bound<'py, PyAny>> {
    let report = py
        .detach(|| search::extremal_radius_search(n, k, &options(workers)))
        .map_err(err)?;
    loads(py, &report.to_json())
}

#[pyfunction]
#[pyo3(signature = (n, k, workers = 1))]
fn equality_census<'py>(py: Python<'py>, n: usize, k: usize, workers: usize) -> PyResult<Bound<'py, PyAny>> {
    let report = py.detach(|| search::equality_census(n, k, &options(workers))).map_err(err)?;
    loads(py, &report.to_json())
}

#[pyfunction]
#[pyo3(signature = (n, claim, k = 1, r = None, workers = 1))]
fn counterexample_scan<'py>(
    py: Python<'py>,
    n: usize,
    claim: &str,
    k: usize,
    r: Option<usize>,
    workers: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let report = py
        .detach(|| search::counterexample_scan(n, claim, ClaimParams { k, r }, &options(workers)))
        .map_err(err)?;
    loads(py, &report.to_json())
}

#[pymodule(name = "spectral_lab")]
fn spectral_lab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(path, m)?)?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(complete, m)?)?;
    m.add_function(wrap_pyfunction!(complete_bipartite, m)?)?;
    m.add_function(wrap_pyfunction!(t_tree, m)?)?;
    m.add_function(wrap_pyfunction!(rk_bipartite, m)?)?;
    m.add_function(wrap_pyfunction!(split_graph, m)?)?;
    m.add_function(wrap_pyfunction!(blow_up, m)?)?;
    m.add_function(wrap_pyfunction!(rk_spectral_radius, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(claim_ids, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_search, m)?)?;
    m.add_function(wrap_pyfunction!(equality_census, m)?)?;
    m.add_function(wrap_pyfunction!(counterexample_scan, m)?)?;
    Ok(())
}
