use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use artinder_core::bounds::enumerate_staircases;
use artinder_core::catalog;
use artinder_core::nullindex::NullIndexConfig;
use artinder_core::poly::Presentation;
use artinder_core::report::{analyze, Analysis};
use artinder_core::scan::{scan as run_scan, ScanConfig};
use artinder_core::ArtinderError;

create_exception!(artinder, ParseError, PyValueError);
create_exception!(artinder, NotLocalError, PyValueError);
create_exception!(artinder, InternalError, PyRuntimeError);

fn to_py(e: ArtinderError) -> PyErr {
    match e.exit_code() {
        2 => ParseError::new_err(e.to_string()),
        3 => NotLocalError::new_err(e.to_string()),
        _ => InternalError::new_err(e.to_string()),
    }
}

/// A local algebra with its derivations, null-index verdict and bounds.
#[pyclass(frozen)]
struct Algebra {
    inner: Analysis,
}

#[pymethods]
impl Algebra {
    /// Parse a presentation (`vars ...` then `rel ...` lines) and analyze it.
    #[new]
    #[pyo3(signature = (text, degree_cap = None))]
    fn new(text: &str, degree_cap: Option<u32>) -> PyResult<Self> {
        let mut p = Presentation::parse(text).map_err(|e| to_py(e.into()))?;
        if let Some(cap) = degree_cap {
            p = p.with_degree_cap(cap);
        }
        let inner = analyze(&p, &NullIndexConfig::default()).map_err(to_py)?;
        Ok(Algebra { inner })
    }

    #[staticmethod]
    fn example(name: &str) -> PyResult<Self> {
        let p = catalog::example(name).ok_or_else(|| PyValueError::new_err(format!("no catalog entry '{name}'")))?;
        Ok(Algebra { inner: analyze(&p, &NullIndexConfig::default()).map_err(to_py)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.algebra.dim()
    }

    #[getter]
    fn basis(&self) -> Vec<String> {
        self.inner.algebra.labels().to_vec()
    }

    #[getter]
    fn hilbert_samuel(&self) -> Vec<usize> {
        self.inner.algebra.hilbert_samuel()
    }

    #[getter]
    fn dim_soc(&self) -> usize {
        self.inner.algebra.socle().dim()
    }

    #[getter]
    fn gorenstein(&self) -> bool {
        self.inner.algebra.is_gorenstein()
    }

    #[getter]
    fn index_polynomial(&self) -> Option<String> {
        self.inner.index_polynomial.as_ref().map(|p| p.render())
    }

    #[getter]
    fn dim_der(&self) -> usize {
        self.inner.derivations.dim()
    }

    /// Derivation basis as `(n-1) x (n-1)` matrices of `p/q` strings.
    fn derivation_basis(&self) -> Vec<Vec<Vec<String>>> {
        self.inner.derivations.basis().iter().map(|m| m.render_rows()).collect()
    }

    #[getter]
    fn derived_series(&self) -> Vec<usize> {
        self.inner.der.derived_series()
    }

    #[getter]
    fn solvable(&self) -> bool {
        self.inner.solvable()
    }

    #[getter]
    fn null_index(&self) -> &'static str {
        self.inner.null_index.as_ref().map_or("not-gorenstein", |v| v.label())
    }

    #[pyo3(signature = (basis = false))]
    fn to_json(&self, basis: bool) -> String {
        self.inner.report(basis).to_json()
    }

    fn __repr__(&self) -> String {
        format!("Algebra(n={}, dim_der={}, null_index={})", self.n(), self.dim_der(), self.null_index())
    }
}

/// Corpus scan as a JSON document.
#[pyfunction]
#[pyo3(signature = (max_dim, max_vars, include_catalog = false))]
fn scan(py: Python<'_>, max_dim: usize, max_vars: usize, include_catalog: bool) -> PyResult<String> {
    let mut config = ScanConfig::new(max_dim, max_vars);
    config.include_catalog = include_catalog;
    py.detach(|| run_scan(&config)).map(|r| r.to_json()).map_err(to_py)
}

#[pyfunction]
fn staircases(max_dim: usize, max_vars: usize) -> Vec<String> {
    enumerate_staircases(max_dim, max_vars.min(3)).iter().map(|s| s.to_string()).collect()
}

#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    catalog::EXAMPLES.iter().map(|(name, _)| *name).collect()
}

#[pymodule]
fn artinder(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Algebra>()?;
    m.add_function(wrap_pyfunction!(scan, m)?)?;
    m.add_function(wrap_pyfunction!(staircases, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add("ParseError", m.py().get_type::<ParseError>())?;
    m.add("NotLocalError", m.py().get_type::<NotLocalError>())?;
    m.add("InternalError", m.py().get_type::<InternalError>())?;
    Ok(())
}
