//! Python bindings: polynomials, symbols, degrees, geometry counts, Brauer
//! degree lists and the verification suites.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use spinlow::finitegeom::{self, Method, OrbitClass, QuadSpace};
use spinlow::gapscan::{self, QPolicy};
use spinlow::verify::{self, Suite, VerifyOptions};
use spinlow::{degrees, Error, Family, FamilyTag};

create_exception!(spinlow_py, BudgetExceeded, PyException, "Enumeration larger than the budget.");
create_exception!(spinlow_py, HypothesisViolated, PyException, "Parameters outside the hypotheses of a statement.");

fn err(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded { .. } => BudgetExceeded::new_err(e.to_string()),
        Error::HypothesisViolated(_) => HypothesisViolated::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(err)
}

fn method(name: &str) -> PyResult<Method> {
    match name {
        "naive" => Ok(Method::Naive),
        "stratified" => Ok(Method::Stratified),
        _ => Err(PyValueError::new_err(format!("unknown method {name:?}"))),
    }
}

/// Polynomial in `q` with rational coefficients.
#[pyclass(name = "QPoly", eq, frozen, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyQPoly(spinlow::QPoly);

#[pymethods]
impl PyQPoly {
    /// Coefficients from the constant term up, as strings like "3" or "1/2".
    #[new]
    fn new(coeffs: Vec<String>) -> PyResult<Self> {
        spinlow::QPoly::from_strings(&coeffs).map(PyQPoly).map_err(err)
    }

    fn coeffs(&self) -> Vec<String> {
        self.0.to_strings()
    }

    fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    fn q_valuation(&self) -> PyResult<usize> {
        self.0.q_valuation().map_err(err)
    }

    /// Value at an integer `q`, as a `fractions.Fraction`.
    fn eval<'py>(&self, py: Python<'py>, q: i64) -> PyResult<Bound<'py, PyAny>> {
        let v = self.0.eval_int(q);
        py.import("fractions")?.getattr("Fraction")?.call1((v.numer().clone(), v.denom().clone()))
    }

    fn __add__(&self, other: &Self) -> Self {
        PyQPoly(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyQPoly(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyQPoly(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        PyQPoly(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QPoly({})", self.0)
    }
}

/// A symbol `(X, Y)` written `"x1,x2,...;y1,y2,..."`.
#[pyclass(name = "Symbol", eq, frozen, from_py_object)]
#[derive(Clone, PartialEq)]
struct PySymbol(spinlow::Symbol);

#[pymethods]
impl PySymbol {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse(text).map(PySymbol)
    }

    #[getter]
    fn top(&self) -> Vec<u32> {
        self.0.top().to_vec()
    }

    #[getter]
    fn bottom(&self) -> Vec<u32> {
        self.0.bottom().to_vec()
    }

    #[getter]
    fn rank(&self) -> i64 {
        self.0.rank()
    }

    #[getter]
    fn defect(&self) -> usize {
        self.0.defect()
    }

    fn shift(&self) -> Self {
        PySymbol(self.0.shift())
    }

    fn canonical(&self, family: &str) -> PyResult<Self> {
        self.0.canonical(parse(family)?).map(PySymbol).map_err(err)
    }

    /// Generic degree in the given family; the rank is the symbol's rank.
    fn degree(&self, family: &str) -> PyResult<PyQPoly> {
        degrees::degree_of(&self.0, parse(family)?).map(PyQPoly).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Symbol(\"{}\")", self.0)
    }
}

/// `(label, degree)` for every unipotent character of the family at rank `n`.
#[pyfunction]
fn unipotent_characters(family: &str, n: u32) -> PyResult<Vec<(String, PyQPoly)>> {
    let chars = degrees::unipotent_characters(FamilyTag::new(parse(family)?, n)).map_err(err)?;
    Ok(chars.into_iter().map(|c| (c.label.to_string(), PyQPoly(c.degree))).collect())
}

fn class_name(c: OrbitClass) -> &'static str {
    match c {
        OrbitClass::Singular => "singular",
        OrbitClass::Square => "plus",
        OrbitClass::Nonsquare => "minus",
    }
}

fn space(family: &str, n: u32, q: u64) -> PyResult<QuadSpace> {
    QuadSpace::standard(parse(family)?, n, q).map_err(err)
}

/// Vector counts by class: `{"singular", "plus", "minus"}`.
#[pyfunction]
#[pyo3(signature = (family, n, q, method = "stratified", budget = finitegeom::DEFAULT_BUDGET))]
fn orbit_counts(family: &str, n: u32, q: u64, method: &str, budget: u128) -> PyResult<BTreeMap<&'static str, u64>> {
    let h = finitegeom::value_histogram(&space(family, n, q)?, self::method(method)?, budget).map_err(err)?;
    Ok(OrbitClass::all().into_iter().map(|c| (class_name(c), h.counts.get(c))).collect())
}

/// Trace of a long root element on the characters of one class.
#[pyfunction]
#[pyo3(signature = (family, n, q, orbit, method = "stratified", budget = finitegeom::DEFAULT_BUDGET))]
fn root_trace(family: &str, n: u32, q: u64, orbit: &str, method: &str, budget: u128) -> PyResult<i128> {
    finitegeom::trace_on_root_element(&space(family, n, q)?, parse(orbit)?, self::method(method)?, budget).map_err(err)
}

/// Vector counts by class on the fixed space of a root element.
#[pyfunction]
#[pyo3(signature = (family, n, q, budget = finitegeom::DEFAULT_BUDGET))]
fn fixed_counts(family: &str, n: u32, q: u64, budget: u128) -> PyResult<BTreeMap<&'static str, u64>> {
    let f = finitegeom::fixed_space_counts(&space(family, n, q)?, None, budget).map_err(err)?;
    Ok(OrbitClass::all().into_iter().map(|c| (class_name(c), f.counts.get(c))).collect())
}

/// Labels of the characters below the unipotent bound, with the q where
/// the table lists a character that the scan puts above it.
#[pyfunction]
#[pyo3(signature = (family, n, qmax = None))]
fn gap_scan<'py>(py: Python<'py>, family: &str, n: u32, qmax: Option<u64>) -> PyResult<Bound<'py, PyDict>> {
    let family: Family = parse(family)?;
    let bound = if family == Family::BC { gapscan::Bound::UnipotentBC } else { gapscan::Bound::UnipotentD };
    let policy = qmax.map_or_else(QPolicy::default, QPolicy::up_to);
    let r = gapscan::scan_unipotent(FamilyTag::new(family, n), bound, &policy).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("below", r.below.iter().map(|row| row.label.clone()).collect::<Vec<_>>())?;
    d.set_item("passed", r.passed())?;
    d.set_item("exact_match", r.exact_match())?;
    d.set_item("overlisted", r.overlisted.iter().map(|m| (m.q, m.missing.clone())).collect::<Vec<_>>())?;
    Ok(d)
}

/// The Brauer degree list as `(label, degree, kappa provenance)` triples.
#[pyfunction]
fn brauer_degrees(family: &str, n: u32, q: u64, ell: u64) -> PyResult<Vec<(String, BigInt, Option<String>)>> {
    let list = spinlow::brauer::brauer_degree_list(parse(family)?, n, q, ell).map_err(err)?;
    Ok(list.entries.into_iter().map(|e| (e.label, e.degree, e.provenance)).collect())
}

/// Runs the verification suites; returns `(suite, status, checks)` rows.
#[pyfunction]
#[pyo3(signature = (suite = "all", max_n = 12))]
fn verify_suites(suite: &str, max_n: u32) -> PyResult<Vec<(String, String, usize)>> {
    let opts = VerifyOptions::with_max_n(max_n);
    let suites: Vec<Suite> = if suite == "all" { Suite::all().to_vec() } else { vec![parse(suite)?] };
    suites
        .into_iter()
        .map(|s| {
            let r = verify::run_suite(s, &opts).map_err(err)?;
            Ok((r.suite.to_string(), r.status.to_string(), r.checks))
        })
        .collect()
}

#[pymodule]
fn spinlow_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyQPoly>()?;
    m.add_class::<PySymbol>()?;
    m.add_function(wrap_pyfunction!(unipotent_characters, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_counts, m)?)?;
    m.add_function(wrap_pyfunction!(root_trace, m)?)?;
    m.add_function(wrap_pyfunction!(fixed_counts, m)?)?;
    m.add_function(wrap_pyfunction!(gap_scan, m)?)?;
    m.add_function(wrap_pyfunction!(brauer_degrees, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suites, m)?)?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    m.add("HypothesisViolated", m.py().get_type::<HypothesisViolated>())?;
    Ok(())
}
