//! Python module `leibsuper`. Scalars cross the boundary as strings such as
//! `"1/2+3i"`; reports come back as plain dicts and lists.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use leibsuper_core::algebra as alg;
use leibsuper_core::families::{self, Coord, FamilyKind};
use leibsuper_core::{iso, json, Error, GaussianRational};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn scalar(s: &str) -> PyResult<GaussianRational> {
    GaussianRational::parse(s).map_err(err)
}

fn kind(s: &str) -> PyResult<FamilyKind> {
    s.parse().map_err(err)
}

fn to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    use serde_json::Value;
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(a) => {
            let l = PyList::empty(py);
            for x in a {
                l.append(to_py(py, x)?)?;
            }
            l.into_any()
        }
        Value::Object(o) => {
            let d = PyDict::new(py);
            for (k, x) in o {
                d.set_item(k, to_py(py, x)?)?;
            }
            d.into_any()
        }
    })
}

fn serial<'py, T: serde::Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let v = serde_json::to_value(v).map_err(|e| PyValueError::new_err(e.to_string()))?;
    to_py(py, &v)
}

/// Structure constants of a finite-dimensional superalgebra.
#[pyclass(name = "SuperAlgebra", module = "leibsuper", frozen)]
struct PySuperAlgebra {
    inner: alg::SuperAlgebra,
}

#[pymethods]
impl PySuperAlgebra {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PySuperAlgebra {
            inner: json::algebra_from_str(text).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        json::algebra_to_string(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    /// Coefficient of basis vector `r` in `[b_p, b_q]`, 0-based.
    fn coefficient(&self, p: usize, q: usize, r: usize) -> PyResult<String> {
        let dim = self.inner.dim();
        if p >= dim || q >= dim || r >= dim {
            return Err(err(Error::IndexOutOfRange {
                index: p.max(q).max(r),
                dim,
            }));
        }
        Ok(self.inner.coefficient(p, q, r).to_string())
    }

    fn check_graded_closure(&self) -> bool {
        alg::check_graded_closure(&self.inner).ok
    }

    fn check_leibniz(&self) -> bool {
        alg::check_leibniz(&self.inner).ok
    }

    fn nilindex(&self) -> Option<usize> {
        alg::nilindex(&self.inner)
    }

    fn series_dims(&self) -> Vec<usize> {
        alg::series_dims(&alg::lower_central_series(&self.inner))
    }

    fn right_annihilator_dim(&self) -> usize {
        alg::right_annihilator(&self.inner).dim()
    }

    /// `(even, odd)` dimensions of `L/L²`.
    fn minimal_generators(&self) -> (usize, usize) {
        let g = alg::minimal_generators(&self.inner);
        (g.even, g.odd)
    }

    #[pyo3(signature = (samples = 25, seed = 0))]
    fn char_sequence(&self, samples: usize, seed: u64) -> PyResult<(Vec<usize>, Vec<usize>)> {
        let r = alg::char_sequence(&self.inner, samples, seed).map_err(err)?;
        Ok((r.sequence.even_part, r.sequence.odd_part))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("SuperAlgebra(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// Parameters of a member of the m1 or m2 family.
#[pyclass(name = "FamilyParams", module = "leibsuper", frozen)]
struct PyFamilyParams {
    inner: families::FamilyParams,
}

#[pymethods]
impl PyFamilyParams {
    #[new]
    #[pyo3(signature = (kind, n, gamma = None, betas = None, beta = None))]
    fn new(
        kind: &str,
        n: usize,
        gamma: Option<&str>,
        betas: Option<std::collections::BTreeMap<usize, String>>,
        beta: Option<&str>,
    ) -> PyResult<Self> {
        let mut p = families::FamilyParams::zero(self::kind(kind)?, n).map_err(err)?;
        if let Some(g) = gamma {
            p.set(Coord::Gamma, scalar(g)?).map_err(err)?;
        }
        if let Some(b) = beta {
            p.set(Coord::Beta, scalar(b)?).map_err(err)?;
        }
        for (j, v) in betas.unwrap_or_default() {
            p.set(Coord::BetaJ(j), scalar(&v)?).map_err(err)?;
        }
        Ok(PyFamilyParams { inner: p })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyFamilyParams {
            inner: json::params_from_str(text).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        json::params_to_string(&self.inner)
    }

    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.kind().name()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn build(&self) -> PyResult<PySuperAlgebra> {
        Ok(PySuperAlgebra {
            inner: self.inner.build().map_err(err)?,
        })
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("FamilyParams({})", json::params_to_value(&self.inner))
    }
}

/// Verdict, witness and trace for two members of the same family.
#[pyfunction]
fn decide_iso<'py>(
    py: Python<'py>,
    p: &PyFamilyParams,
    q: &PyFamilyParams,
) -> PyResult<Bound<'py, PyAny>> {
    serial(py, &iso::decide_iso(&p.inner, &q.inner).map_err(err)?)
}

/// Whether the generator change `(a1, a_top, b_top)` carries `p` onto `q`.
#[pyfunction]
fn verify_witness(
    p: &PyFamilyParams,
    q: &PyFamilyParams,
    a1: &str,
    a_top: &str,
    b_top: &str,
) -> PyResult<bool> {
    let w =
        iso::IsoWitness::new(&p.inner, scalar(a1)?, scalar(a_top)?, scalar(b_top)?).map_err(err)?;
    Ok(iso::verify_witness(&p.inner, &q.inner, &w))
}

/// Parameters of `p` after the generator change `(a1, a_top, b_top)`.
#[pyfunction]
fn apply_witness(
    p: &PyFamilyParams,
    a1: &str,
    a_top: &str,
    b_top: &str,
) -> PyResult<PyFamilyParams> {
    let w =
        iso::IsoWitness::new(&p.inner, scalar(a1)?, scalar(a_top)?, scalar(b_top)?).map_err(err)?;
    Ok(PyFamilyParams {
        inner: iso::apply_witness(&p.inner, &w).map_err(err)?,
    })
}

#[pyfunction]
fn classify<'py>(py: Python<'py>, p: &PyFamilyParams) -> PyResult<Bound<'py, PyAny>> {
    serial(py, &iso::classify(&p.inner).map_err(err)?)
}

#[pyfunction]
fn fingerprint<'py>(py: Python<'py>, p: &PyFamilyParams) -> PyResult<Bound<'py, PyAny>> {
    serial(py, &iso::fingerprint(&p.inner).map_err(err)?)
}

#[pyfunction]
fn enumerate_representatives<'py>(
    py: Python<'py>,
    n: usize,
    kind: &str,
) -> PyResult<Bound<'py, PyAny>> {
    serial(
        py,
        &families::enumerate_representatives(n, self::kind(kind)?).map_err(err)?,
    )
}

#[pyfunction]
#[pyo3(signature = (kind, n, samples = 8, seed = 0))]
fn calibrate_exponents<'py>(
    py: Python<'py>,
    kind: &str,
    n: usize,
    samples: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyAny>> {
    serial(
        py,
        &iso::calibrate_exponents(self::kind(kind)?, n, samples, seed).map_err(err)?,
    )
}

#[pymodule]
fn leibsuper(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySuperAlgebra>()?;
    m.add_class::<PyFamilyParams>()?;
    m.add_function(wrap_pyfunction!(decide_iso, m)?)?;
    m.add_function(wrap_pyfunction!(verify_witness, m)?)?;
    m.add_function(wrap_pyfunction!(apply_witness, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(fingerprint, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_representatives, m)?)?;
    m.add_function(wrap_pyfunction!(calibrate_exponents, m)?)?;
    Ok(())
}
