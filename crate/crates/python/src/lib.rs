//! Python module `pyncborel`.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ncborel::calculus::{d, partials, wedge, Variant};
use ncborel::claims::claims_report;
use ncborel::hodge::{star, wave};
use ncborel::homology::{cohomology_dims, find_primitive};
use ncborel::symmetry::{adjoint_action, coregular_action, TIndex};
use ncborel::syntax::{parse_value, Value};
use ncborel::waves::{plane_wave_series, wave_derivative_check, wave_eigenvalue_check, Convention, WaveSpec};

create_exception!(pyncborel, ParseError, PyValueError);
create_exception!(pyncborel, DomainError, PyValueError);

fn parse_err(e: ncborel::syntax::ParseError) -> PyErr {
    ParseError::new_err(e.to_string())
}

fn domain(msg: impl Into<String>) -> PyErr {
    DomainError::new_err(msg.into())
}

fn variant(name: &str) -> PyResult<Variant> {
    name.parse().map_err(PyValueError::new_err)
}

/// A normal-ordered element of the algebra.
#[pyclass(frozen, eq, skip_from_py_object, module = "pyncborel")]
#[derive(Clone, PartialEq)]
pub struct Poly(ncborel::NcPoly);

/// A differential form with right coefficients.
#[pyclass(frozen, eq, skip_from_py_object, module = "pyncborel")]
#[derive(Clone, PartialEq)]
pub struct Form(ncborel::Form);

#[pymethods]
impl Poly {
    #[new]
    fn new(expr: &str) -> PyResult<Self> {
        match parse_value(expr).map_err(parse_err)? {
            Value::Poly(p) => Ok(Poly(p)),
            Value::Form(f) => Err(domain(format!("expected a function, got a {}-form", f.degree()))),
        }
    }

    fn __str__(&self) -> String {
        Value::Poly(self.0.clone()).text()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.__str__())
    }

    fn __add__(&self, other: &Poly) -> Poly {
        Poly(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Poly) -> Poly {
        Poly(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Poly) -> Poly {
        Poly(self.0.normal_mul(&other.0))
    }

    fn __pow__(&self, e: u32, _modulo: Option<u32>) -> Poly {
        Poly(self.0.pow(e))
    }

    fn latex(&self) -> String {
        Value::Poly(self.0.clone()).latex()
    }

    fn commutator(&self, other: &Poly) -> Poly {
        Poly(self.0.commutator(&other.0))
    }

    fn is_central(&self) -> bool {
        self.0.is_central().is_central()
    }

    #[pyo3(signature = (variant = "consistent"))]
    fn d(&self, variant: &str) -> PyResult<Form> {
        Ok(Form(d(&ncborel::Form::from_poly(self.0.clone()), self::variant(variant)?)))
    }

    #[pyo3(signature = (variant = "consistent"))]
    fn partials(&self, variant: &str) -> PyResult<(Poly, Poly, Poly)> {
        let [a, b, c] = partials(&self.0, self::variant(variant)?);
        Ok((Poly(a), Poly(b), Poly(c)))
    }

    #[pyo3(name = "box", signature = (variant = "consistent"))]
    fn box_(&self, variant: &str) -> PyResult<Poly> {
        let f = wave(&ncborel::Form::from_poly(self.0.clone()), self::variant(variant)?).map_err(|e| domain(e.to_string()))?;
        Ok(Poly(f.coeff(&ncborel::Wedge::EMPTY)))
    }

    /// `J1`..`J3` or `t11`..`t22` acting on this function.
    fn act(&self, generator: &str) -> PyResult<Poly> {
        let out = match generator {
            "J1" => adjoint_action(1, &self.0),
            "J2" => adjoint_action(2, &self.0),
            "J3" => adjoint_action(3, &self.0),
            t => {
                let digits: Vec<usize> =
                    t.strip_prefix('t').unwrap_or("").chars().filter_map(|c| c.to_digit(10)).map(|d| d as usize).collect();
                let idx = match digits.as_slice() {
                    [i, j] => TIndex::new(*i, *j),
                    _ => None,
                }
                .ok_or_else(|| PyValueError::new_err(format!("unknown generator '{}'", t)))?;
                coregular_action(idx, &self.0)
            }
        };
        Ok(Poly(out))
    }
}

#[pymethods]
impl Form {
    #[new]
    fn new(expr: &str) -> PyResult<Self> {
        Ok(Form(parse_value(expr).map_err(parse_err)?.into_form()))
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Form('{}')", self.0)
    }

    fn __add__(&self, other: &Form) -> PyResult<Form> {
        if self.0.degree() != other.0.degree() && !self.0.is_zero() && !other.0.is_zero() {
            return Err(domain("cannot add forms of different degree"));
        }
        Ok(Form(&self.0 + &other.0))
    }

    fn latex(&self) -> String {
        Value::from_form(self.0.clone()).latex()
    }

    fn wedge(&self, other: &Form) -> Form {
        Form(wedge(&self.0, &other.0))
    }

    #[pyo3(signature = (variant = "consistent"))]
    fn d(&self, variant: &str) -> PyResult<Form> {
        Ok(Form(d(&self.0, self::variant(variant)?)))
    }

    fn star(&self) -> Form {
        Form(star(&self.0))
    }

    #[pyo3(name = "box", signature = (variant = "consistent"))]
    fn box_(&self, variant: &str) -> PyResult<Form> {
        wave(&self.0, self::variant(variant)?).map(Form).map_err(|e| domain(e.to_string()))
    }

    #[pyo3(signature = (grade_bound = 8))]
    fn primitive(&self, grade_bound: u32) -> PyResult<Form> {
        match find_primitive(&self.0, grade_bound) {
            Ok(Some(eta)) => Ok(Form(eta)),
            Ok(None) => Err(domain(format!("no primitive within grade {}", grade_bound))),
            Err(e) => Err(domain(e.to_string())),
        }
    }
}

/// Parses an expression into a `Poly` or a `Form`.
#[pyfunction]
fn parse(py: Python<'_>, expr: &str) -> PyResult<Py<PyAny>> {
    Ok(match parse_value(expr).map_err(parse_err)? {
        Value::Poly(p) => Py::new(py, Poly(p))?.into_any(),
        Value::Form(f) => Py::new(py, Form(f))?.into_any(),
    })
}

/// Rows `(degree, grade, block_dim, raw, generators)` of the cohomology table.
#[pyfunction]
fn cohomology(max_grade: u32) -> Vec<(usize, u32, usize, usize, usize)> {
    cohomology_dims(max_grade)
        .entries
        .iter()
        .map(|e| (e.degree, e.grade, e.block_dim, e.raw, e.generators))
        .collect()
}

/// Truncated plane wave in the given ordering.
#[pyfunction]
fn plane_wave(order: usize, convention: &str) -> PyResult<Poly> {
    let c: Convention = convention.parse().map_err(PyValueError::new_err)?;
    Ok(Poly(plane_wave_series(&WaveSpec::formal(order, c))))
}

/// Residuals, order by order, of the plane-wave derivative (`"d"`) or eigenvalue (`"box"`) identity.
#[pyfunction]
#[pyo3(signature = (order, convention, check = "d", variant = "consistent"))]
fn wave_residuals(order: usize, convention: &str, check: &str, variant: &str) -> PyResult<Vec<Form>> {
    let c: Convention = convention.parse().map_err(PyValueError::new_err)?;
    let spec = WaveSpec::formal(order, c);
    let v = self::variant(variant)?;
    let r = match check {
        "d" => wave_derivative_check(&spec, v),
        "box" => wave_eigenvalue_check(&spec, v),
        other => return Err(PyValueError::new_err(format!("unknown check '{}'", other))),
    };
    Ok(r.residuals.into_iter().map(Form).collect())
}

/// The claims report as a JSON string.
#[pyfunction]
fn report_json() -> String {
    claims_report().to_json().to_string()
}

#[pymodule]
fn pyncborel(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Poly>()?;
    m.add_class::<Form>()?;
    m.add("ParseError", m.py().get_type::<ParseError>())?;
    m.add("DomainError", m.py().get_type::<DomainError>())?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(cohomology, m)?)?;
    m.add_function(wrap_pyfunction!(plane_wave, m)?)?;
    m.add_function(wrap_pyfunction!(wave_residuals, m)?)?;
    m.add_function(wrap_pyfunction!(report_json, m)?)?;
    Ok(())
}
