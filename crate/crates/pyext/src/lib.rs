//! Python bindings for the stringcentre library.
//!
//! Exact values cross the boundary as strings ("p/q" for rationals in Q/Z,
//! decimal strings for big integers); the advisory Gauss sum is the only
//! float. Reports are returned as JSON strings ready for `json.loads`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use num_bigint::BigInt;
use num_rational::BigRational;

use stringcentre::abelian::FiniteAbGroup;
use stringcentre::qform;
use stringcentre::qz::QZElem;
use stringcentre::report;
use stringcentre::root_data::{self, CoweightVector, Series, SimpleType};
use stringcentre::string_centre;
use stringcentre::torus;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_type(series: &str, rank: usize) -> PyResult<SimpleType> {
    let c = series
        .chars()
        .next()
        .filter(|_| series.len() == 1)
        .ok_or_else(|| err(format!("series must be one letter A-G, got '{series}'")))?;
    let s = Series::from_char(c).ok_or_else(|| err(format!("unknown series '{series}'")))?;
    SimpleType::new(s, rank).map_err(err)
}

fn parse_elem(coords: Vec<i64>) -> Vec<BigInt> {
    coords.into_iter().map(BigInt::from).collect()
}

fn ratio_strings(v: &[BigRational]) -> Vec<String> {
    v.iter()
        .map(|r| format!("{}/{}", r.numer(), r.denom()))
        .collect()
}

/// A finite abelian group with a Q/Z-valued quadratic form.
#[pyclass(name = "QuadraticForm", skip_from_py_object)]
#[derive(Clone)]
pub struct PyQuadraticForm {
    inner: qform::QForm,
}

#[pymethods]
impl PyQuadraticForm {
    /// Build from invariant factors, q values on generators ("p/q") and an
    /// optional symmetric sigma matrix of "p/q" strings.
    #[new]
    #[pyo3(signature = (factors, diag, sigma=None))]
    fn new(
        factors: Vec<u64>,
        diag: Vec<String>,
        sigma: Option<Vec<Vec<String>>>,
    ) -> PyResult<Self> {
        let group =
            FiniteAbGroup::new(factors.into_iter().map(BigInt::from).collect()).map_err(err)?;
        let m = group.rank();
        let diag: Vec<QZElem> = diag
            .iter()
            .map(|s| QZElem::parse(s))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        let offdiag = match sigma {
            Some(rows) => rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|s| QZElem::parse(s))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?,
            None => vec![vec![QZElem::zero(); m]; m],
        };
        Ok(PyQuadraticForm {
            inner: qform::QForm::new(group, diag, offdiag).map_err(err)?,
        })
    }

    /// Invariant factors of the underlying group.
    fn invariant_factors(&self) -> Vec<String> {
        self.inner
            .group()
            .invariant_factors()
            .iter()
            .map(|d| d.to_string())
            .collect()
    }

    fn order(&self) -> String {
        self.inner.group().order().to_string()
    }

    /// Value of the form at an element (coordinates per generator).
    fn eval(&self, coords: Vec<i64>) -> PyResult<String> {
        Ok(self
            .inner
            .eval(&parse_elem(coords))
            .map_err(err)?
            .to_string())
    }

    /// Polarised bilinear value sigma(a, b).
    fn sigma(&self, a: Vec<i64>, b: Vec<i64>) -> PyResult<String> {
        Ok(self
            .inner
            .sigma(&parse_elem(a), &parse_elem(b))
            .map_err(err)?
            .to_string())
    }

    fn is_quadratic(&self) -> PyResult<bool> {
        self.inner.is_quadratic().map_err(err)
    }

    /// Canonical braided name (Vec, VecZ2, Semi, sVec, SemiBar or a
    /// structured descriptor).
    fn name(&self) -> String {
        qform::name_form(&self.inner).to_string()
    }

    /// Advisory Gauss sum as (re, im).
    fn gauss_sum(&self) -> PyResult<(f64, f64)> {
        let g = qform::gauss_sum(&self.inner).map_err(err)?;
        Ok((g.re, g.im))
    }

    fn __repr__(&self) -> String {
        format!("QuadraticForm[{}]", qform::descriptor(&self.inner))
    }
}

/// Structured centre summary: continuous dimensions plus the finite part.
#[pyclass(name = "StructuredCentre", skip_from_py_object)]
#[derive(Clone)]
pub struct PyStructuredCentre {
    #[pyo3(get)]
    vector_dim: usize,
    #[pyo3(get)]
    discrete_free_rank: usize,
    #[pyo3(get)]
    torus_dim: usize,
    form: qform::QForm,
}

#[pymethods]
impl PyStructuredCentre {
    fn finite_form(&self) -> PyQuadraticForm {
        PyQuadraticForm {
            inner: self.form.clone(),
        }
    }

    fn invariant_factors(&self) -> Vec<String> {
        self.form
            .group()
            .invariant_factors()
            .iter()
            .map(|d| d.to_string())
            .collect()
    }

    fn is_finite(&self) -> bool {
        self.vector_dim == 0 && self.discrete_free_rank == 0 && self.torus_dim == 0
    }

    fn __repr__(&self) -> String {
        format!(
            "StructuredCentre(R^{} + Z^{} + T^{} + [{}])",
            self.vector_dim,
            self.discrete_free_rank,
            self.torus_dim,
            self.form.group()
        )
    }
}

fn structured(sc: &torus::StructuredCentre) -> PyStructuredCentre {
    PyStructuredCentre {
        vector_dim: sc.vector_dim,
        discrete_free_rank: sc.discrete_free_rank,
        torus_dim: sc.torus_dim,
        form: sc.q_finite.clone(),
    }
}

/// Bourbaki Cartan matrix of a simple type.
#[pyfunction]
fn cartan_matrix(series: &str, rank: usize) -> PyResult<Vec<Vec<i64>>> {
    use num_traits::ToPrimitive;
    let t = parse_type(series, rank)?;
    let m = root_data::cartan_matrix(t);
    Ok((0..m.rows)
        .map(|i| (0..m.cols).map(|j| m.at(i, j).to_i64().unwrap()).collect())
        .collect())
}

/// Gram matrix of the basic inner product on simple coroots, as "p/q".
#[pyfunction]
fn coroot_gram(series: &str, rank: usize) -> PyResult<Vec<Vec<String>>> {
    let t = parse_type(series, rank)?;
    let g = root_data::coroot_gram(t);
    Ok((0..g.rows)
        .map(|i| ratio_strings(&(0..g.cols).map(|j| g.at(i, j).clone()).collect::<Vec<_>>()))
        .collect())
}

/// Fundamental coweights in the coroot basis (one list per coweight).
#[pyfunction]
fn fundamental_coweights(series: &str, rank: usize) -> PyResult<Vec<Vec<String>>> {
    let t = parse_type(series, rank)?;
    let w = root_data::fundamental_coweights(t);
    Ok((0..w.cols).map(|j| ratio_strings(&w.column(j))).collect())
}

/// Centre of the simply-connected group: (invariant factors, coweight lifts
/// of the named generators).
#[pyfunction]
fn centre_of(series: &str, rank: usize) -> PyResult<(Vec<String>, Vec<Vec<String>>)> {
    let t = parse_type(series, rank)?;
    let (g, lifts) = root_data::centre_of(t);
    Ok((
        g.invariant_factors()
            .iter()
            .map(|d| d.to_string())
            .collect(),
        lifts.iter().map(|l| ratio_strings(&l.0)).collect(),
    ))
}

/// Exact norm I(w, w) of a coweight given by "p/q" coroot coordinates.
#[pyfunction]
fn coweight_norm(series: &str, rank: usize, coords: Vec<String>) -> PyResult<String> {
    let t = parse_type(series, rank)?;
    let coords: Vec<BigRational> = coords
        .iter()
        .map(|s| QZElem::parse(s).map(|q| q.as_ratio()))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let norm = root_data::coweight_norm(t, &CoweightVector(coords)).map_err(err)?;
    Ok(format!("{}/{}", norm.numer(), norm.denom()))
}

/// The centre of the simply-connected simple group at level k.
#[pyfunction]
fn sc_centre(series: &str, rank: usize, level: i64) -> PyResult<PyQuadraticForm> {
    let t = parse_type(series, rank)?;
    let (_, form) = string_centre::sc_centre(t, level).map_err(err)?;
    Ok(PyQuadraticForm { inner: form })
}

/// The structured centre of a categorical torus with integer level matrix J.
#[pyfunction]
fn torus_centre(j: Vec<Vec<i64>>) -> PyResult<PyStructuredCentre> {
    let rank = j.len();
    if j.iter().any(|row| row.len() != rank) {
        return Err(err("J must be square"));
    }
    let tl =
        torus::TorusLevel::new(rank, stringcentre::matrix::IntMatrix::from_rows(j)).map_err(err)?;
    let sc = torus::torus_pi0(&tl).map_err(err)?;
    Ok(structured(&sc))
}

/// All quadratic forms on Z/n.
#[pyfunction]
fn enumerate_qforms(n: u64) -> Vec<PyQuadraticForm> {
    qform::enumerate_qforms(n)
        .into_iter()
        .map(|inner| PyQuadraticForm { inner })
        .collect()
}

#[pyfunction]
fn soft_h3_order(n: u64) -> u64 {
    qform::soft_h3_order(n)
}

/// Brute-force isometry test.
#[pyfunction]
fn iso_forms(a: &PyQuadraticForm, b: &PyQuadraticForm) -> PyResult<bool> {
    qform::iso_forms(&a.inner, &b.inner).map_err(err)
}

/// The hyperbolic form on H + dual(H) for H with the given factors.
#[pyfunction]
fn hyperbolic_form(factors: Vec<u64>) -> PyResult<PyQuadraticForm> {
    let h = FiniteAbGroup::new(factors.into_iter().map(BigInt::from).collect()).map_err(err)?;
    Ok(PyQuadraticForm {
        inner: qform::hyperbolic_form(&h),
    })
}

/// Full pipeline on a JSON spec document; returns (report_json, exit_code)
/// with exit code 2 when the level does not descend.
#[pyfunction]
#[pyo3(signature = (spec_json, denominator_bound=report::DEFAULT_DENOMINATOR_BOUND))]
fn compute(spec_json: &str, denominator_bound: u64) -> PyResult<(String, i32)> {
    let spec = report::parse_spec(spec_json, denominator_bound).map_err(err)?;
    let (doc, code) = report::run(&spec).map_err(err)?;
    Ok((serde_json::to_string(&doc).map_err(err)?, code))
}

/// The results-table reproduction as a JSON string.
#[pyfunction]
#[pyo3(signature = (max_level=6))]
fn table1(max_level: i64) -> PyResult<String> {
    let rep = report::table1(max_level.max(1)).map_err(err)?;
    serde_json::to_string(&rep).map_err(err)
}

/// Brute-force oracle on Z/n at cocycle class k, as a JSON string.
#[pyfunction]
fn oracle(n: u64, k: i64) -> PyResult<String> {
    let rep = report::oracle_report(n, k).map_err(err)?;
    serde_json::to_string(&rep).map_err(err)
}

/// The brute-force centre itself: (invariant factors, QuadraticForm).
#[pyfunction]
fn brute_centre(n: u64, k: i64) -> PyResult<(Vec<String>, PyQuadraticForm)> {
    let w = stringcentre::oracle::Cocycle3::standard(n, k).map_err(err)?;
    let oc = stringcentre::oracle::brute_centre(&w).map_err(err)?;
    Ok((
        oc.group
            .invariant_factors()
            .iter()
            .map(|d| d.to_string())
            .collect(),
        PyQuadraticForm { inner: oc.form },
    ))
}

#[pymodule]
fn stringcentre_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyQuadraticForm>()?;
    m.add_class::<PyStructuredCentre>()?;
    m.add_function(wrap_pyfunction!(cartan_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(coroot_gram, m)?)?;
    m.add_function(wrap_pyfunction!(fundamental_coweights, m)?)?;
    m.add_function(wrap_pyfunction!(centre_of, m)?)?;
    m.add_function(wrap_pyfunction!(coweight_norm, m)?)?;
    m.add_function(wrap_pyfunction!(sc_centre, m)?)?;
    m.add_function(wrap_pyfunction!(torus_centre, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_qforms, m)?)?;
    m.add_function(wrap_pyfunction!(soft_h3_order, m)?)?;
    m.add_function(wrap_pyfunction!(iso_forms, m)?)?;
    m.add_function(wrap_pyfunction!(hyperbolic_form, m)?)?;
    m.add_function(wrap_pyfunction!(compute, m)?)?;
    m.add_function(wrap_pyfunction!(table1, m)?)?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    m.add_function(wrap_pyfunction!(brute_centre, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
