//! Python bindings: `import pycritfact`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use critfact::genstrings;
use critfact::{oracle, Algo, AlgoStats, CriticalFactorization, Error, LocalPeriod, SymString};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Invariant(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// A string over an unordered alphabet of integer symbol ids.
#[pyclass(name = "SymString", module = "pycritfact", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PySymString(SymString);

#[pymethods]
impl PySymString {
    #[new]
    fn new(ids: Vec<u32>) -> Self {
        PySymString(SymString::from_ids(ids))
    }

    /// One symbol per byte.
    #[staticmethod]
    fn from_bytes(data: &[u8]) -> Self {
        PySymString(SymString::from_bytes(data))
    }

    /// One symbol per byte of the UTF-8 encoding.
    #[staticmethod]
    fn from_text(text: &str) -> Self {
        PySymString(SymString::from(text))
    }

    /// Whitespace-separated decimal ids.
    #[staticmethod]
    fn from_tokens(text: &str) -> PyResult<Self> {
        SymString::from_tokens(text).map(PySymString).map_err(to_py)
    }

    fn ids(&self) -> Vec<u32> {
        self.0.ids().collect()
    }

    fn to_tokens(&self) -> String {
        self.0.to_tokens()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("SymString([{}])", self.0.to_tokens().replace(' ', ", "))
    }
}

/// Anything accepted where a string is expected.
#[derive(FromPyObject)]
enum Text {
    Sym(PySymString),
    Str(String),
    Ids(Vec<u32>),
}

impl Text {
    fn into_inner(self) -> SymString {
        match self {
            Text::Sym(s) => s.0,
            Text::Str(s) => SymString::from(s.as_str()),
            Text::Ids(ids) => SymString::from_ids(ids),
        }
    }
}

#[pyclass(
    name = "CriticalFactorization",
    module = "pycritfact",
    frozen,
    eq,
    get_all,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct PyCriticalFactorization {
    position: usize,
    period: usize,
    prefix_len: usize,
    suffix_len: usize,
}

impl From<CriticalFactorization> for PyCriticalFactorization {
    fn from(cf: CriticalFactorization) -> Self {
        PyCriticalFactorization {
            position: cf.position,
            period: cf.period,
            prefix_len: cf.prefix_len,
            suffix_len: cf.suffix_len,
        }
    }
}

#[pymethods]
impl PyCriticalFactorization {
    fn __repr__(&self) -> String {
        format!(
            "CriticalFactorization(position={}, period={}, prefix_len={}, suffix_len={})",
            self.position, self.period, self.prefix_len, self.suffix_len
        )
    }
}

#[pyclass(name = "AlgoStats", module = "pycritfact", frozen, get_all)]
pub struct PyAlgoStats {
    eq_comparisons: u64,
    computed_positions: Vec<usize>,
    mu_sum: u64,
    skipped: u64,
    visited: Vec<usize>,
    k: usize,
}

impl From<AlgoStats> for PyAlgoStats {
    fn from(st: AlgoStats) -> Self {
        PyAlgoStats {
            eq_comparisons: st.eq_comparisons,
            computed_positions: st.computed_positions,
            mu_sum: st.mu_sum,
            skipped: st.skipped,
            visited: st.visited,
            k: st.k,
        }
    }
}

#[pymethods]
impl PyAlgoStats {
    fn __repr__(&self) -> String {
        format!(
            "AlgoStats(eq_comparisons={}, computed_positions={}, mu_sum={}, skipped={})",
            self.eq_comparisons,
            self.computed_positions.len(),
            self.mu_sum,
            self.skipped
        )
    }
}

/// Leftmost critical factorization and counters; `algo` is "linear" or "nlogn".
#[pyfunction]
#[pyo3(signature = (w, algo = "linear"))]
fn factorize(
    py: Python<'_>,
    w: Text,
    algo: &str,
) -> PyResult<(PyCriticalFactorization, PyAlgoStats)> {
    let algo: Algo = algo.parse().map_err(to_py)?;
    let w = w.into_inner();
    let (cf, st) = py.detach(|| algo.run(&w)).map_err(to_py)?;
    Ok((cf.into(), st.into()))
}

/// Brute-force answer, for cross-checking.
#[pyfunction]
fn factorize_oracle(w: Text) -> PyResult<PyCriticalFactorization> {
    oracle::brute_leftmost_critical(&w.into_inner())
        .map(Into::into)
        .map_err(to_py)
}

/// `(mu, left_external, right_external)` at 1-based position `i`.
#[pyfunction]
fn local_period(w: Text, i: usize) -> PyResult<(usize, bool, bool)> {
    let LocalPeriod {
        mu,
        left_external,
        right_external,
    } = oracle::brute_local_period(&w.into_inner(), i).map_err(to_py)?;
    Ok((mu, left_external, right_external))
}

#[pyfunction]
fn minimal_period(w: Text) -> PyResult<usize> {
    oracle::brute_minimal_period(&w.into_inner()).map_err(to_py)
}

#[pyfunction]
fn gen_adversarial(level: usize) -> PySymString {
    PySymString(genstrings::gen_adversarial(level))
}

#[pyfunction]
fn gen_fibonacci(k: usize) -> PyResult<PySymString> {
    genstrings::gen_fibonacci(k).map(PySymString).map_err(to_py)
}

#[pyfunction]
fn gen_thue_morse(k: usize) -> PyResult<PySymString> {
    genstrings::gen_thue_morse(k)
        .map(PySymString)
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (n, sigma = 2, seed = 0))]
fn gen_random(n: usize, sigma: u32, seed: u64) -> PyResult<PySymString> {
    genstrings::gen_random(n, sigma, seed)
        .map(PySymString)
        .map_err(to_py)
}

#[pymodule]
fn pycritfact(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySymString>()?;
    m.add_class::<PyCriticalFactorization>()?;
    m.add_class::<PyAlgoStats>()?;
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    m.add_function(wrap_pyfunction!(factorize_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(local_period, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_period, m)?)?;
    m.add_function(wrap_pyfunction!(gen_adversarial, m)?)?;
    m.add_function(wrap_pyfunction!(gen_fibonacci, m)?)?;
    m.add_function(wrap_pyfunction!(gen_thue_morse, m)?)?;
    m.add_function(wrap_pyfunction!(gen_random, m)?)?;
    Ok(())
}
