//! Python bindings. Rationals cross the boundary as `fractions.Fraction`;
//! inputs may also be `int` or `"p/q"` strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use quadguess::kernel::{format_rational, parse_rational};
use quadguess::{
    GuessConfig, GuessStatus, OracleName, QuadEquation, Rational, RenderMode, SequencePrefix,
};

fn value_error(e: quadguess::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let text = obj.str()?.to_string();
    parse_rational(&text).map_err(value_error)
}

fn to_prefix(items: Vec<Bound<'_, PyAny>>) -> PyResult<SequencePrefix> {
    let values = items.iter().map(to_rational).collect::<PyResult<Vec<_>>>()?;
    SequencePrefix::new(values).map_err(value_error)
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((format_rational(r),))
}

fn fractions<'py>(py: Python<'py>, values: &[Rational]) -> PyResult<Vec<Bound<'py, PyAny>>> {
    values.iter().map(|r| fraction(py, r)).collect()
}

/// A quadratic differential equation `sum c * z^s * f^(p) * f^(q) = 0`.
#[pyclass(name = "Equation", module = "quadguess", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyEquation {
    inner: QuadEquation,
}

#[pymethods]
impl PyEquation {
    /// Builds an equation from `(s, p, q, coeff)` tuples; order `-1` is the constant 1.
    #[new]
    fn new(terms: Vec<(usize, i64, i64, Bound<'_, PyAny>)>) -> PyResult<Self> {
        let tuples = terms
            .iter()
            .map(|(s, p, q, c)| Ok((*s, *p, *q, to_rational(c)?)))
            .collect::<PyResult<Vec<_>>>()?;
        let inner = QuadEquation::from_tuples(&tuples).map_err(value_error)?;
        Ok(PyEquation { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = QuadEquation::from_json(text).map_err(value_error)?;
        Ok(PyEquation { inner })
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Vec<(usize, i64, i64, Bound<'py, PyAny>)>> {
        self.inner
            .terms()
            .iter()
            .map(|t| Ok((t.s, t.mono.p(), t.mono.q(), fraction(py, &t.coeff)?)))
            .collect()
    }

    #[getter]
    fn d(&self) -> usize {
        self.inner.d()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn max_shift(&self) -> i64 {
        self.inner.max_shift()
    }

    fn normalized(&self) -> Self {
        PyEquation {
            inner: self.inner.normalized(),
        }
    }

    /// The equation satisfied by `a_n / lam^n`.
    fn for_rescaled(&self, lam: &Bound<'_, PyAny>) -> PyResult<Self> {
        let inner = self
            .inner
            .for_rescaled(&to_rational(lam)?)
            .map_err(value_error)?;
        Ok(PyEquation { inner })
    }

    #[pyo3(signature = (latex = false))]
    fn ode(&self, latex: bool) -> String {
        render(&self.inner, RenderMode::Ode, latex)
    }

    #[pyo3(signature = (latex = false))]
    fn recurrence(&self, latex: bool) -> String {
        render(&self.inner, RenderMode::Recurrence, latex)
    }

    fn __repr__(&self) -> String {
        format!("Equation({})", render(&self.inner, RenderMode::Ode, false))
    }
}

fn render(eq: &QuadEquation, mode: RenderMode, latex: bool) -> String {
    let expr = quadguess::render(eq, mode);
    if latex {
        expr.to_latex()
    } else {
        expr.to_text()
    }
}

#[pyclass(name = "GuessResult", module = "quadguess", frozen)]
struct PyGuessResult {
    inner: quadguess::GuessResult,
}

#[pymethods]
impl PyGuessResult {
    #[getter]
    fn success(&self) -> bool {
        self.inner.status == GuessStatus::Success
    }

    #[getter]
    fn d(&self) -> Option<usize> {
        self.inner.d
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m
    }

    #[getter]
    fn basis(&self) -> Vec<PyEquation> {
        self.inner
            .basis
            .iter()
            .map(|e| PyEquation { inner: e.clone() })
            .collect()
    }

    /// `(construction, verification)` row counts.
    #[getter]
    fn rows(&self) -> (usize, usize) {
        (self.inner.rows.construction, self.inner.rows.verification)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn __repr__(&self) -> String {
        format!(
            "GuessResult(success={}, d={:?}, m={}, basis={})",
            self.success(),
            self.inner.d,
            self.inner.m,
            self.inner.basis.len()
        )
    }
}

#[pyfunction]
#[pyo3(signature = (terms, m = 2, d_start = 3, d_max = None, min_verify_rows = 2, rescale = None))]
fn guess(
    terms: Vec<Bound<'_, PyAny>>,
    m: usize,
    d_start: usize,
    d_max: Option<usize>,
    min_verify_rows: usize,
    rescale: Option<Bound<'_, PyAny>>,
) -> PyResult<PyGuessResult> {
    let mut prefix = to_prefix(terms)?;
    if let Some(lam) = rescale {
        prefix = prefix.rescaled(&to_rational(&lam)?).map_err(value_error)?;
    }
    let cfg = GuessConfig {
        m,
        d_start,
        d_max,
        min_verify_rows,
    };
    let inner = quadguess::guess(&prefix, &cfg).map_err(value_error)?;
    Ok(PyGuessResult { inner })
}

/// Returns the initial terms followed by `count` new ones.
#[pyfunction]
fn extend<'py>(
    py: Python<'py>,
    equation: &PyEquation,
    initial: Vec<Bound<'py, PyAny>>,
    count: usize,
) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let init = initial.iter().map(to_rational).collect::<PyResult<Vec<_>>>()?;
    let out = quadguess::extend(&equation.inner, &init, count).map_err(value_error)?;
    fractions(py, &out)
}

/// Dict with `passed`, `rows_checked` and `first_failure` (`(n, residual)` or None).
#[pyfunction]
fn check<'py>(
    py: Python<'py>,
    equation: &PyEquation,
    terms: Vec<Bound<'py, PyAny>>,
) -> PyResult<Bound<'py, PyDict>> {
    let values = terms.iter().map(to_rational).collect::<PyResult<Vec<_>>>()?;
    let report = quadguess::check(&equation.inner, &values);
    let d = PyDict::new(py);
    d.set_item("passed", report.passed)?;
    d.set_item("rows_checked", report.rows_checked)?;
    match &report.first_failure {
        Some((n, r)) => d.set_item("first_failure", (*n, fraction(py, r)?))?,
        None => d.set_item("first_failure", py.None())?,
    }
    Ok(d)
}

#[pyfunction]
fn oracle<'py>(py: Python<'py>, name: &str, count: usize) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let name: OracleName = name.parse().map_err(value_error)?;
    let seq = quadguess::oracle_sequence(name, count).map_err(value_error)?;
    fractions(py, &seq)
}

#[pyfunction]
fn oracle_names() -> Vec<&'static str> {
    OracleName::ALL.iter().map(|o| o.as_str()).collect()
}

#[pyfunction]
fn nu(k: u64) -> PyResult<(u64, u64)> {
    quadguess::nu(k).map_err(value_error)
}

#[pyfunction]
fn index_of_pair(i: u64, j: u64) -> PyResult<u64> {
    quadguess::index_of_pair(i, j).map_err(value_error)
}

#[pymodule]
#[pyo3(name = "quadguess")]
fn quadguess_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyEquation>()?;
    m.add_class::<PyGuessResult>()?;
    m.add_function(wrap_pyfunction!(guess, m)?)?;
    m.add_function(wrap_pyfunction!(extend, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_names, m)?)?;
    m.add_function(wrap_pyfunction!(nu, m)?)?;
    m.add_function(wrap_pyfunction!(index_of_pair, m)?)?;
    Ok(())
}
