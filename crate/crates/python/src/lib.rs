//! Python module `bondage`.

use bondage_core::bondage::{bondage_number as core_bondage, hr_bound as core_hr};
use bondage_core::bounds::{self, Chi};
use bondage_core::domination::domination_number as core_gamma;
use bondage_core::embedding::{self, RotationSystem};
use bondage_core::harness;
use bondage_core::{graph6, Girth};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn py_err(e: bondage_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn chi(x: i64) -> PyResult<Chi> {
    Chi::new(x).map_err(py_err)
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(frozen, skip_from_py_object, module = "bondage")]
pub struct Graph {
    inner: bondage_core::Graph,
}

#[pymethods]
impl Graph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        bondage_core::Graph::from_edges(n, &edges)
            .map(|inner| Graph { inner })
            .map_err(py_err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        graph6::decode(text)
            .map(|inner| Graph { inner })
            .map_err(py_err)
    }

    fn to_graph6(&self) -> String {
        graph6::encode(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().iter().map(|e| (e.u, e.v)).collect()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.inner.degree(v).map_err(py_err)
    }

    fn max_degree(&self) -> PyResult<usize> {
        self.inner.max_degree().map_err(py_err)
    }

    /// Length of a shortest cycle, or `None` for forests.
    fn girth(&self) -> Option<usize> {
        self.inner.girth().finite()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// Returns `(gamma, members)` for a minimum dominating set.
#[pyfunction]
fn domination_number(g: &Graph) -> (usize, Vec<usize>) {
    let set = core_gamma(&g.inner);
    (set.size(), set.members)
}

/// Returns `(b, witness_edges)`.
#[pyfunction]
#[pyo3(signature = (g, budget=None))]
fn bondage_number(g: &Graph, budget: Option<usize>) -> PyResult<(usize, Vec<(usize, usize)>)> {
    let res = core_bondage(&g.inner, budget).map_err(py_err)?;
    Ok((res.b, res.witness.iter().map(|e| (e.u, e.v)).collect()))
}

#[pyfunction]
fn hr_bound(g: &Graph) -> PyResult<usize> {
    core_hr(&g.inner).map_err(py_err)
}

/// Returns `(r, residual)` for the largest root of the cubic.
#[pyfunction]
fn largest_root(x: i64) -> PyResult<(f64, f64)> {
    let root = bounds::largest_root_r(chi(x)?).map_err(py_err)?;
    Ok((root.r, root.residual))
}

#[pyfunction]
fn floor_r(x: i64) -> PyResult<i64> {
    bounds::floor_r(chi(x)?).map_err(py_err)
}

#[pyfunction]
fn h1_bound(delta: u64, x: i64) -> PyResult<u64> {
    bounds::h1_bound(delta, chi(x)?).map_err(py_err)
}

#[pyfunction]
fn h2_bound(delta: u64, x: i64) -> PyResult<u64> {
    bounds::h2_bound(delta, chi(x)?).map_err(py_err)
}

#[pyfunction]
fn sachs_bound(delta: u64, x: i64) -> PyResult<u64> {
    bounds::sachs_bound(delta, chi(x)?).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (delta, h=None, k=None))]
fn gz_bound(delta: u64, h: Option<u64>, k: Option<u64>) -> PyResult<u64> {
    bounds::gz_bound(delta, h, k).map_err(py_err)
}

#[pyfunction]
fn girth_bound(delta: u64, x: i64, girth: usize) -> PyResult<u64> {
    bounds::girth_bound(delta, chi(x)?, Girth::Finite(girth)).map_err(py_err)
}

#[pyfunction]
fn asymptotic_ratio(x: i64) -> PyResult<f64> {
    bounds::asymptotic_ratio(chi(x)?).map_err(py_err)
}

/// Rows of `(chi, r, floor_r)` for `chi = 0` down to `chi_min`.
#[pyfunction]
fn table(chi_min: i64) -> PyResult<Vec<(i64, f64, i64)>> {
    let rows = harness::cmd_table(chi_min).map_err(py_err)?;
    Ok(rows.into_iter().map(|r| (r.chi, r.r, r.floor_r)).collect())
}

#[pyfunction]
#[pyo3(signature = (g, budget=1_000_000, nonorientable=false))]
fn max_euler_characteristic(g: &Graph, budget: u128, nonorientable: bool) -> PyResult<i64> {
    embedding::max_euler_characteristic(&g.inner, budget, nonorientable).map_err(py_err)
}

type EdgeCurvature = ((usize, usize), String);

/// Per-edge curvatures as `num/den` strings plus their sum, for a rotation
/// given in the text format of the command-line tool.
#[pyfunction]
fn curvature(g: &Graph, rotation: &str) -> PyResult<(i64, Vec<EdgeCurvature>, String)> {
    let r = RotationSystem::parse(&g.inner, rotation).map_err(py_err)?;
    let report = embedding::curvature_report(&g.inner, &r).map_err(py_err)?;
    let edges = report
        .edges
        .iter()
        .map(|c| {
            (
                (c.edge.u, c.edge.v),
                embedding::format_rational(&c.curvature),
            )
        })
        .collect();
    Ok((report.chi, edges, embedding::format_rational(&report.sum)))
}

#[pymodule]
fn bondage(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(domination_number, m)?)?;
    m.add_function(wrap_pyfunction!(bondage_number, m)?)?;
    m.add_function(wrap_pyfunction!(hr_bound, m)?)?;
    m.add_function(wrap_pyfunction!(largest_root, m)?)?;
    m.add_function(wrap_pyfunction!(floor_r, m)?)?;
    m.add_function(wrap_pyfunction!(h1_bound, m)?)?;
    m.add_function(wrap_pyfunction!(h2_bound, m)?)?;
    m.add_function(wrap_pyfunction!(sachs_bound, m)?)?;
    m.add_function(wrap_pyfunction!(gz_bound, m)?)?;
    m.add_function(wrap_pyfunction!(girth_bound, m)?)?;
    m.add_function(wrap_pyfunction!(asymptotic_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add_function(wrap_pyfunction!(max_euler_characteristic, m)?)?;
    m.add_function(wrap_pyfunction!(curvature, m)?)?;
    Ok(())
}
