//! Python bindings for `elc_core`.

use elc_core::bits::members;
use elc_core::codes::{code_report, Isodual};
use elc_core::enumeration::{self, Census, Column, GraphClass};
use elc_core::orbit::{elc_witness, orbit, OrbitKind};
use elc_core::{canonical_key, graph6, ConstructionSpec, Error, Graph as CoreGraph};
use pyo3::exceptions::{PyMemoryError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn err(e: Error) -> PyErr {
    match e {
        Error::Capacity(_) => PyMemoryError::new_err(e.to_string()),
        Error::Invariant(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn kind_of(kind: &str) -> PyResult<OrbitKind> {
    match kind {
        "elc" => Ok(OrbitKind::Elc),
        "lc" => Ok(OrbitKind::Lc),
        _ => Err(PyValueError::new_err(format!("unknown orbit kind {kind:?}, expected 'elc' or 'lc'"))),
    }
}

/// Simple undirected graph on at most 64 vertices.
#[pyclass(name = "Graph", module = "elc", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGraph(CoreGraph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        CoreGraph::from_edges(n, &edges).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn from_graph6(s: &str) -> PyResult<Self> {
        graph6::decode(s.trim()).map(PyGraph).map_err(err)
    }

    /// Builds a graph from a construction expression such as `S-2(s3)`.
    #[staticmethod]
    #[pyo3(signature = (expr, strict = true))]
    fn construct(expr: &str, strict: bool) -> PyResult<Self> {
        let spec: ConstructionSpec = expr.parse().map_err(err)?;
        spec.build_with(strict).map(|b| PyGraph(b.graph)).map_err(err)
    }

    fn graph6(&self) -> String {
        graph6::encode(&self.0)
    }

    fn order(&self) -> usize {
        self.0.order()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().collect()
    }

    fn is_bipartite(&self) -> bool {
        self.0.is_bipartite()
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    /// The two sides as sorted vertex lists, or None.
    fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let p = self.0.bipartition()?;
        Some((members(p.left).collect(), members(p.right).collect()))
    }

    fn lc(&self, v: usize) -> PyResult<Self> {
        self.0.local_complement(v).map(PyGraph).map_err(err)
    }

    fn elc(&self, u: usize, v: usize) -> PyResult<Self> {
        self.0.elc(u, v).map(PyGraph).map_err(err)
    }

    /// Canonical graph6 string; equal exactly for isomorphic graphs.
    fn canonical_key(&self) -> String {
        canonical_key(&self.0).graph6().to_string()
    }

    fn is_isomorphic(&self, other: &PyGraph) -> bool {
        elc_core::are_isomorphic(&self.0, &other.0)
    }

    fn __len__(&self) -> usize {
        self.0.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", graph6::encode(&self.0))
    }
}

/// Number of isomorphism classes in the orbit of `g`.
#[pyfunction]
#[pyo3(signature = (g, kind = "elc", cap = None))]
fn orbit_size(g: &PyGraph, kind: &str, cap: Option<usize>) -> PyResult<usize> {
    let cap = cap.unwrap_or_else(elc_core::orbit::default_cap);
    orbit(&g.0, kind_of(kind)?, cap).map(|o| o.size()).map_err(err)
}

/// Canonical graph6 strings of every class in the orbit of `g`.
#[pyfunction]
#[pyo3(signature = (g, kind = "elc", cap = None))]
fn orbit_members(g: &PyGraph, kind: &str, cap: Option<usize>) -> PyResult<Vec<String>> {
    let cap = cap.unwrap_or_else(elc_core::orbit::default_cap);
    let o = orbit(&g.0, kind_of(kind)?, cap).map_err(err)?;
    Ok(o.members.iter().map(|k| k.graph6().to_string()).collect())
}

/// An edge whose ELC gives a non-isomorphic graph, or None when every ELC
/// preserves `g`.
#[pyfunction]
fn preserved_witness(g: &PyGraph) -> PyResult<Option<(usize, usize)>> {
    elc_witness(&g.0).map_err(err)
}

#[pyfunction]
fn is_elc_preserved(g: &PyGraph) -> PyResult<bool> {
    elc_core::orbit::is_elc_preserved(&g.0).map_err(err)
}

/// Code parameters for the information side `info` (a vertex list).
/// Returns a dict with `params`, `dual_params`, `self_dual`, `isodual`.
#[pyfunction]
#[pyo3(signature = (g, info = None))]
fn code_params(py: Python<'_>, g: &PyGraph, info: Option<Vec<usize>>) -> PyResult<Py<PyAny>> {
    let info = match info {
        Some(vs) => vs.iter().try_fold(0u64, |acc, &v| {
            if v < g.0.order() {
                Ok(acc | 1 << v)
            } else {
                Err(PyValueError::new_err(format!("vertex {v} out of range")))
            }
        })?,
        None => g.0.bipartition().ok_or_else(|| err(Error::NotBipartite))?.left,
    };
    let r = code_report(&g.0, info, None).map_err(err)?;
    let d = pyo3::types::PyDict::new(py);
    d.set_item("params", r.params.to_string())?;
    d.set_item("dual_params", r.dual_params.to_string())?;
    d.set_item("n", r.params.n)?;
    d.set_item("k", r.params.k)?;
    d.set_item("d", r.params.d)?;
    d.set_item("self_dual", r.self_dual)?;
    let iso = match r.isodual {
        Isodual::Yes => Some(true),
        Isodual::No => Some(false),
        Isodual::Unknown => None,
    };
    d.set_item("isodual", iso)?;
    d.set_item("weight_distribution", r.weight_distribution)?;
    Ok(d.into_any().unbind())
}

/// Connected graphs of order `n` up to isomorphism, as canonical graph6.
#[pyfunction]
#[pyo3(signature = (n, bipartite_only = false))]
fn connected_graphs(py: Python<'_>, n: usize, bipartite_only: bool) -> PyResult<Vec<String>> {
    let gs = py.detach(|| enumeration::connected_graphs(n, bipartite_only, false)).map_err(err)?;
    Ok(gs.iter().map(graph6::encode).collect())
}

/// One census value. `column` is a CSV header such as `b_n`, `nbp_n` or
/// `size_two_lc`.
#[pyfunction]
#[pyo3(signature = (column, n, deep = false))]
fn census(py: Python<'_>, column: &str, n: usize, deep: bool) -> PyResult<u64> {
    let col = Column::all()
        .into_iter()
        .find(|c| c.header() == column)
        .ok_or_else(|| PyValueError::new_err(format!("unknown column {column:?}")))?;
    py.detach(|| Census::new(deep).value(col, n)).map_err(err)
}

/// ELC orbit count of order `n` for one class.
#[pyfunction]
fn count_orbits(py: Python<'_>, n: usize, bipartite: bool) -> PyResult<u64> {
    let class = if bipartite { GraphClass::Bipartite } else { GraphClass::NonBipartite };
    py.detach(|| enumeration::count_orbits(n, class)).map_err(err)
}

#[pymodule]
fn elc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(orbit_size, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_members, m)?)?;
    m.add_function(wrap_pyfunction!(preserved_witness, m)?)?;
    m.add_function(wrap_pyfunction!(is_elc_preserved, m)?)?;
    m.add_function(wrap_pyfunction!(code_params, m)?)?;
    m.add_function(wrap_pyfunction!(connected_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(count_orbits, m)?)?;
    Ok(())
}
