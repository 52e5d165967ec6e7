//! Python bindings: polynomials, limits, ranges, branches and the benchmark corpus.

use std::str::FromStr;
use std::time::Instant;

use pyo3::exceptions::PyValueError;
use num_traits::ToPrimitive;
use pyo3::prelude::*;

use ratlimit::limit::{bilimit_with, ExtReal, LimitOptions, LimitOutcome, Verdict};
use ratlimit::puiseux::{expand, sound_level};
use ratlimit::report::outcome_json;
use ratlimit::{bench, parse_poly, BiPoly, Rational, Side};

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational(s: &str) -> PyResult<Rational> {
    Rational::from_str(s.trim()).map_err(|_| value_error(format!("not a rational number: {s:?}")))
}

/// Polynomial in `Q[x, y]`, parsed from text such as `"x^2 + 3/2*x*y"`.
#[pyclass(name = "Poly", frozen, from_py_object)]
#[derive(Clone)]
struct PyPoly(BiPoly);

#[pymethods]
impl PyPoly {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse_poly(text).map(PyPoly).map_err(value_error)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.0)
    }

    fn __eq__(&self, other: &PyPoly) -> bool {
        self.0 == other.0
    }

    fn __add__(&self, other: &PyPoly) -> PyPoly {
        PyPoly(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &PyPoly) -> PyPoly {
        PyPoly(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &PyPoly) -> PyPoly {
        PyPoly(&self.0 * &other.0)
    }

    /// Total degree, `None` for the zero polynomial.
    #[getter]
    fn degree(&self) -> Option<u32> {
        self.0.total_degree()
    }

    /// Lowest total degree of a term, `None` for the zero polynomial.
    #[getter]
    fn order(&self) -> Option<u32> {
        self.0.ord2()
    }

    fn is_y_regular(&self) -> PyResult<bool> {
        self.0.is_y_regular().map_err(value_error)
    }

    /// Value at a rational point, as text `p/q`.
    fn eval(&self, x: &str, y: &str) -> PyResult<String> {
        Ok(self.0.eval(&rational(x)?, &rational(y)?).to_string())
    }

    /// `f(x + c y, y)`.
    fn shear_x(&self, c: &str) -> PyResult<PyPoly> {
        Ok(PyPoly(self.0.shear_x(&rational(c)?)))
    }

    fn gcd(&self, other: &PyPoly) -> PyPoly {
        PyPoly(ratlimit::bipoly::gcd2(&self.0, &other.0))
    }
}

/// Either a `Poly` or its text.
#[derive(FromPyObject)]
enum PolyArg {
    Poly(PyPoly),
    Text(String),
}

impl PolyArg {
    fn into_poly(self) -> PyResult<BiPoly> {
        match self {
            PolyArg::Poly(p) => Ok(p.0),
            PolyArg::Text(s) => parse_poly(&s).map_err(value_error),
        }
    }
}

fn ext_text(v: &ExtReal) -> String {
    v.to_string()
}

fn ext_float(v: &ExtReal) -> f64 {
    match v {
        ExtReal::NegInf => f64::NEG_INFINITY,
        ExtReal::PosInf => f64::INFINITY,
        ExtReal::Finite(a) => a.to_f64(),
    }
}

/// Result of a limit computation. Values are exact text plus float approximations.
#[pyclass(name = "LimitResult", frozen, get_all)]
struct PyLimitResult {
    /// Whether the limit exists and is finite.
    exists: bool,
    /// `"exists"`, `"infinite"` or `"does_not_exist"`.
    verdict: String,
    /// Exact limit, when it exists.
    value: Option<String>,
    value_approx: Option<f64>,
    /// `(min, max)` as exact text, when computed.
    range: Option<(String, String)>,
    range_approx: Option<(f64, f64)>,
    isolated_zero: bool,
    json: String,
    text: String,
}

#[pymethods]
impl PyLimitResult {
    fn __repr__(&self) -> String {
        format!("LimitResult({})", self.text)
    }
}

impl PyLimitResult {
    fn from_outcome(out: &LimitOutcome, elapsed: std::time::Duration) -> Self {
        let verdict = match out.verdict {
            Verdict::Exists(_) => "exists",
            Verdict::Infinite(_) => "infinite",
            Verdict::DoesNotExist => "does_not_exist",
        };
        PyLimitResult {
            exists: out.exists(),
            verdict: verdict.into(),
            value: out.limit().map(|v| v.to_string()),
            value_approx: out.limit().map(|v| v.to_f64()),
            range: out.range.as_ref().map(|r| (ext_text(&r.min), ext_text(&r.max))),
            range_approx: out.range.as_ref().map(|r| (ext_float(&r.min), ext_float(&r.max))),
            isolated_zero: out.diagnostics.isolated_zero,
            json: outcome_json(out, elapsed).to_string(),
            text: out.to_string(),
        }
    }
}

/// Limit of `f/g` at `at` (rational coordinates as text or ints).
#[pyfunction]
#[pyo3(signature = (f, g, at = ("0".to_string(), "0".to_string()), compute_range = false))]
fn limit(f: PolyArg, g: PolyArg, at: (String, String), compute_range: bool) -> PyResult<PyLimitResult> {
    let (f, g) = (f.into_poly()?, g.into_poly()?);
    let (a, b) = (rational(&at.0)?, rational(&at.1)?);
    let start = Instant::now();
    let out = bilimit_with(&f, &g, (&a, &b), &LimitOptions { compute_range }).map_err(value_error)?;
    Ok(PyLimitResult::from_outcome(&out, start.elapsed()))
}

/// A truncated real Puiseux branch.
#[pyclass(name = "Branch", frozen, get_all)]
struct PyBranch {
    /// `"plus"` or `"minus"`; minus branches are series of `f(-x, y)`.
    side: String,
    exponents: Vec<String>,
    exponents_approx: Vec<f64>,
    coefficients: Vec<String>,
    coefficients_approx: Vec<f64>,
    truncation: String,
    text: String,
}

#[pymethods]
impl PyBranch {
    fn __repr__(&self) -> String {
        format!("Branch({}: {})", self.side, self.text)
    }

    /// Value of the truncated series at parameter `t > 0`.
    fn eval(&self, t: f64) -> f64 {
        self.exponents_approx.iter().zip(&self.coefficients_approx).map(|(e, c)| c * t.powf(*e)).sum()
    }
}

/// Real branches of `f` at the origin truncated below `level` (defaults to
/// the sound level for the degree). `f` must be y-regular.
#[pyfunction]
#[pyo3(signature = (f, level = None, side = None))]
fn branches(f: PolyArg, level: Option<String>, side: Option<&str>) -> PyResult<Vec<PyBranch>> {
    let f = f.into_poly()?;
    let n = match level {
        Some(s) => rational(&s)?,
        None => Rational::from_integer(sound_level(f.total_degree().unwrap_or(1)).into()),
    };
    let sides = match side {
        None => Side::BOTH.to_vec(),
        Some("plus") => vec![Side::Plus],
        Some("minus") => vec![Side::Minus],
        Some(other) => return Err(value_error(format!("side must be 'plus' or 'minus', got {other:?}"))),
    };
    let mut out = Vec::new();
    for s in sides {
        for b in expand(&f, &n, s).map_err(value_error)?.branches {
            let values = b.coefficient_values();
            out.push(PyBranch {
                side: if s == Side::Plus { "plus" } else { "minus" }.into(),
                exponents: b.exponents().iter().map(|e| e.to_string()).collect(),
                exponents_approx: b.exponents().iter().map(|e| e.to_f64().unwrap_or(f64::NAN)).collect(),
                coefficients: values.iter().map(|v| v.to_string()).collect(),
                coefficients_approx: values.iter().map(|v| v.to_f64()).collect(),
                truncation: b.truncation().to_string(),
                text: b.to_string(),
            });
        }
    }
    Ok(out)
}

/// Run the benchmark corpus: `(id, passed, milliseconds, verdict text)` per case.
#[pyfunction]
fn run_bench() -> PyResult<Vec<(u32, bool, f64, String)>> {
    bench::cases()
        .iter()
        .map(|c| {
            let r = c.run().map_err(value_error)?;
            let text = match &r.outcome {
                Ok(o) => o.to_string(),
                Err(e) => format!("error: {e}"),
            };
            Ok((r.id, r.passed, r.elapsed.as_secs_f64() * 1000.0, text))
        })
        .collect()
}

#[pymodule]
#[pyo3(name = "ratlimit")]
fn ratlimit_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoly>()?;
    m.add_class::<PyLimitResult>()?;
    m.add_class::<PyBranch>()?;
    m.add_function(wrap_pyfunction!(limit, m)?)?;
    m.add_function(wrap_pyfunction!(branches, m)?)?;
    m.add_function(wrap_pyfunction!(run_bench, m)?)?;
    Ok(())
}
