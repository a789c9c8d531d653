//! Python bindings: exact ring elements, the finite and affine Hecke
//! algebras, tensor space actions, Drinfeld polynomials and the
//! verification suites (which return their reports as JSON).

use pyo3::exceptions::{PyNotImplementedError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use affine_qschur::combinat::{Partition, Permutation};
use affine_qschur::drinfeld::{self, DrinfeldTuple, Multisegment, Segment};
use affine_qschur::hecke::{self, AffineWord, HeckeElt, Letter};
use affine_qschur::ring::{Laurent, Rat};
use affine_qschur::tensor::{self, GenLabel, TensorElt, Variant};
use affine_qschur::verify::{self as suites, Report, SuiteConfig, Which, Window};
use affine_qschur::{Error, Sign};

fn err(e: Error) -> PyErr {
    match e {
        Error::Unsupported(_) => PyNotImplementedError::new_err(e.to_string()),
        Error::Inconsistent(_) => PyRuntimeError::new_err(e.to_string()),
        Error::Domain(_) | Error::Parse(_) => PyValueError::new_err(e.to_string()),
    }
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(err)
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("values serialize")
}

/// An element of Q[a^±1, q^±1].
#[pyclass(name = "Laurent", module = "qschur", frozen, from_py_object, eq)]
#[derive(Clone, PartialEq)]
struct PyLaurent(Laurent);

#[pymethods]
impl PyLaurent {
    /// From `[(coeff, ea, eq), ...]`; coefficients are ints or strings like "-3/2".
    #[new]
    #[pyo3(signature = (terms = Vec::new()))]
    fn new(terms: Vec<(Bound<'_, PyAny>, i32, i32)>) -> PyResult<Self> {
        let mut out = Vec::with_capacity(terms.len());
        for (c, ea, eq) in terms {
            let c: Rat = match c.extract::<i64>() {
                Ok(i) => Rat::from_int(i),
                Err(_) => parse(&c.extract::<String>()?)?,
            };
            out.push(((ea, eq), c));
        }
        Ok(Self(Laurent::from_terms(out)))
    }

    #[staticmethod]
    fn a() -> Self {
        Self(Laurent::a())
    }

    #[staticmethod]
    fn q() -> Self {
        Self(Laurent::q())
    }

    #[staticmethod]
    fn integer(n: i64) -> Self {
        Self(Laurent::from_int(n))
    }

    /// `(coeff, ea, eq)` triples with the coefficient as a string.
    fn terms(&self) -> Vec<(String, i32, i32)> {
        self.0.terms().map(|((ea, eq), c)| (c.to_string(), ea, eq)).collect()
    }

    fn coeff(&self, ea: i32, eq: i32) -> String {
        self.0.coeff(ea, eq).to_string()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Integer powers; negative ones only for monomials.
    fn __pow__(&self, e: i32, _modulo: Option<Bound<'_, PyAny>>) -> PyResult<Self> {
        self.0.pow_signed(e).map(Self).ok_or_else(|| PyValueError::new_err("only monomials are invertible"))
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        self.0.exact_div(&d.0).map(Self)
    }

    fn __add__(&self, o: &Self) -> Self {
        Self(&self.0 + &o.0)
    }

    fn __sub__(&self, o: &Self) -> Self {
        Self(&self.0 - &o.0)
    }

    fn __mul__(&self, o: &Self) -> Self {
        Self(&self.0 * &o.0)
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Laurent({})", self.0)
    }
}

#[pyclass(name = "Partition", module = "qschur", frozen, from_py_object, eq)]
#[derive(Clone, PartialEq)]
struct PyPartition(Partition);

#[pymethods]
impl PyPartition {
    #[new]
    fn new(parts: Vec<usize>) -> PyResult<Self> {
        Partition::new(parts).map(Self).map_err(err)
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    fn dual(&self) -> Self {
        Self(self.0.dual())
    }

    fn dominated_by(&self, other: &Self) -> PyResult<bool> {
        self.0.dominated_by(&other.0).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.0.parts())
    }
}

/// An element of the finite Hecke algebra H(r) in the T_w basis.
#[pyclass(name = "HeckeElt", module = "qschur", frozen, from_py_object, eq)]
#[derive(Clone, PartialEq)]
struct PyHecke(HeckeElt);

#[pymethods]
impl PyHecke {
    #[staticmethod]
    fn one(r: usize) -> Self {
        Self(HeckeElt::one(r))
    }

    /// `T_i` in H(r).
    #[staticmethod]
    fn generator(i: usize, r: usize) -> PyResult<Self> {
        HeckeElt::generator(i, r).map(Self).map_err(err)
    }

    /// `T_w` for `w` in one-line notation.
    #[staticmethod]
    fn basis(w: Vec<usize>) -> PyResult<Self> {
        Permutation::from_one_line(&w).map(|w| Self(HeckeElt::basis(w))).map_err(err)
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn coeff(&self, w: Vec<usize>) -> PyResult<PyLaurent> {
        let w = Permutation::from_one_line(&w).map_err(err)?;
        Ok(PyLaurent(self.0.coeff(&w)))
    }

    fn terms(&self) -> Vec<(Vec<usize>, PyLaurent)> {
        self.0.terms().map(|(w, c)| (w.one_line(), PyLaurent(c.clone()))).collect()
    }

    fn star(&self) -> Self {
        Self(self.0.star())
    }

    fn scale(&self, c: &PyLaurent) -> Self {
        Self(self.0.scale(&c.0))
    }

    fn __add__(&self, o: &Self) -> PyResult<Self> {
        self.0.try_add(&o.0).map(Self).map_err(err)
    }

    fn __sub__(&self, o: &Self) -> PyResult<Self> {
        self.0.try_sub(&o.0).map(Self).map_err(err)
    }

    fn __mul__(&self, o: &Self) -> PyResult<Self> {
        self.0.mul(&o.0).map(Self).map_err(err)
    }

    fn to_json(&self) -> String {
        to_json(&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// A finite linear combination of pure tensors v_{i_1} ⊗ ... ⊗ v_{i_r}.
#[pyclass(name = "TensorElt", module = "qschur", frozen, from_py_object, eq)]
#[derive(Clone, PartialEq)]
struct PyTensor(TensorElt);

#[pymethods]
impl PyTensor {
    #[staticmethod]
    fn basis(n: usize, idx: Vec<i64>) -> PyResult<Self> {
        TensorElt::basis(n, idx).map(Self).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.modulus()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn coeff(&self, idx: Vec<i64>) -> PyLaurent {
        PyLaurent(self.0.coeff(&idx))
    }

    fn terms(&self) -> Vec<(Vec<i64>, PyLaurent)> {
        self.0.terms().map(|(i, c)| (i.clone(), PyLaurent(c.clone()))).collect()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn scale(&self, c: &PyLaurent) -> Self {
        Self(self.0.scale(&c.0))
    }

    fn __add__(&self, o: &Self) -> PyResult<Self> {
        self.0.try_add(&o.0).map(Self).map_err(err)
    }

    fn __sub__(&self, o: &Self) -> PyResult<Self> {
        self.0.try_sub(&o.0).map(Self).map_err(err)
    }

    fn to_json(&self) -> String {
        to_json(&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

fn variant(name: &str) -> PyResult<Variant> {
    match name {
        "faithful" => Ok(Variant::Faithful),
        "flipped-middle-exponent" => Ok(Variant::FlippedMiddleExponent),
        "flipped-e-coproduct" => Ok(Variant::FlippedECoproduct),
        _ => Err(PyValueError::new_err(format!("unknown variant {name:?}"))),
    }
}

/// Left action of a generator such as "E1", "F2", "K1^-1", "z2^+".
#[pyfunction]
#[pyo3(signature = (gen, v, variant = "faithful"))]
fn act_left(gen: &str, v: &PyTensor, variant: &str) -> PyResult<PyTensor> {
    let g: GenLabel = parse(gen)?;
    tensor::act_left_variant(g, &v.0, self::variant(variant)?).map(PyTensor).map_err(err)
}

/// Right action of a word in T_i and X_j^e, e.g. "T1 X2^-1", read left to right.
#[pyfunction]
#[pyo3(signature = (v, word, variant = "faithful"))]
fn act_word(v: &PyTensor, word: &str, variant: &str) -> PyResult<PyTensor> {
    let w: AffineWord = parse(word)?;
    tensor::act_word_variant(&v.0, &w, self::variant(variant)?).map(PyTensor).map_err(err)
}

/// Right action of a single letter "T_i" or "X_j^e".
#[pyfunction]
fn act_right(v: &PyTensor, letter: &str) -> PyResult<PyTensor> {
    let h: Letter = parse(letter)?;
    tensor::act_right(h, &v.0).map(PyTensor).map_err(err)
}

#[pyfunction]
fn act_hecke(v: &PyTensor, h: &PyHecke) -> PyResult<PyTensor> {
    tensor::act_hecke(&v.0, &h.0).map(PyTensor).map_err(err)
}

/// The map from tensor space to the evaluation module's finite part.
#[pyfunction]
fn eps_a(v: &PyTensor) -> PyResult<PyTensor> {
    tensor::eps_a(&v.0).map(PyTensor).map_err(err)
}

#[pyfunction]
fn murphy_l(j: usize, r: usize) -> PyResult<PyHecke> {
    hecke::murphy_l(j, r).map(PyHecke).map_err(err)
}

#[pyfunction]
fn ev_a(word: &str, r: usize) -> PyResult<PyHecke> {
    let w: AffineWord = parse(word)?;
    hecke::ev_a(&w, r).map(PyHecke).map_err(err)
}

#[pyclass(name = "DrinfeldTuple", module = "qschur", frozen, from_py_object)]
#[derive(Clone)]
struct PyDrinfeld(DrinfeldTuple);

#[pymethods]
impl PyDrinfeld {
    #[getter]
    fn degrees(&self) -> Vec<usize> {
        self.0.degrees().to_vec()
    }

    /// Coefficients of Q_i, constant term first.
    fn poly(&self, i: usize) -> PyResult<Vec<PyLaurent>> {
        if i == 0 || i > self.0.len() {
            return Err(PyValueError::new_err(format!("Q_i needs 1 <= i <= {}", self.0.len())));
        }
        Ok(self.0.poly(i).coeffs().iter().cloned().map(PyLaurent).collect())
    }

    fn is_dominant(&self) -> PyResult<bool> {
        drinfeld::is_dominant(&self.0).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __eq__(&self, o: &Self) -> bool {
        self.0.same_polys(&o.0)
    }

    fn to_json(&self) -> String {
        to_json(&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(name = "Multisegment", module = "qschur", frozen, from_py_object, eq)]
#[derive(Clone, PartialEq)]
struct PyMultisegment(Multisegment);

#[pymethods]
impl PyMultisegment {
    /// From `[(center, length), ...]`, each center a monomial.
    #[new]
    fn new(segments: Vec<(PyLaurent, usize)>) -> PyResult<Self> {
        let mut segs = Vec::with_capacity(segments.len());
        for (c, k) in segments {
            let m = c.0.as_monomial().ok_or_else(|| PyValueError::new_err(format!("{} is not a monomial", c.0)))?;
            segs.push(Segment::new(m, k).map_err(err)?);
        }
        Multisegment::new(segs).map(Self).map_err(err)
    }

    fn segments(&self) -> Vec<(PyLaurent, usize)> {
        self.0.segments().iter().map(|s| (PyLaurent(s.center().to_laurent()), s.length())).collect()
    }

    fn total(&self) -> usize {
        self.0.total()
    }

    fn partition(&self) -> PyPartition {
        PyPartition(self.0.partition())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyfunction]
fn q_from_lambda(lambda: &PyPartition, n: usize) -> PyResult<PyDrinfeld> {
    drinfeld::q_from_lambda(&lambda.0, n).map(PyDrinfeld).map_err(err)
}

#[pyfunction]
fn s_lambda_a(lambda: &PyPartition) -> PyResult<PyMultisegment> {
    drinfeld::s_lambda_a(&lambda.0).map(PyMultisegment).map_err(err)
}

#[pyfunction]
fn partial_map(s: &PyMultisegment, n: usize) -> PyResult<PyDrinfeld> {
    drinfeld::partial_map(&s.0, n).map(PyDrinfeld).map_err(err)
}

#[pyfunction]
fn partial_inverse(q: &PyDrinfeld) -> PyResult<PyMultisegment> {
    drinfeld::partial_inverse(&q.0).map(PyMultisegment).map_err(err)
}

/// The scalar by which z_t^± acts; `sign` is "plus" or "minus".
#[pyfunction]
#[pyo3(signature = (lambda, t, sign = "plus"))]
fn central_scalar(lambda: &PyPartition, t: u32, sign: &str) -> PyResult<PyLaurent> {
    let s: Sign = parse(sign)?;
    Ok(PyLaurent(drinfeld::central_scalar(&lambda.0, t, s)))
}

fn report_json(reps: Vec<Report>, no_timing: bool) -> String {
    let reps: Vec<Report> = if no_timing { reps.into_iter().map(Report::without_timing).collect() } else { reps };
    if reps.len() == 1 {
        to_json(&reps[0])
    } else {
        to_json(&reps)
    }
}

/// Runs one suite ("qgl", "hecke", "commuting", "eval-compat", "lemmas",
/// "jm", "drinfeld", "roundtrip" or "all") and returns its JSON report.
#[pyfunction]
#[pyo3(signature = (
    suite, n = 3, r = 2, window = None, t_max = 2, which = "En", seed = 0,
    count = 200, variant = "faithful", no_timing = false,
))]
#[allow(clippy::too_many_arguments)]
fn verify(
    py: Python<'_>,
    suite: &str,
    n: usize,
    r: usize,
    window: Option<&str>,
    t_max: u32,
    which: &str,
    seed: u64,
    count: usize,
    variant: &str,
    no_timing: bool,
) -> PyResult<String> {
    let mut cfg = SuiteConfig::new(n, r).with_t_max(t_max).with_seed(seed).with_variant(self::variant(variant)?);
    if let Some(w) = window {
        cfg = cfg.with_window(parse::<Window>(w)?);
    }
    let which: Which = parse(which)?;
    let suite = suite.to_string();
    let reps = py
        .detach(move || -> affine_qschur::Result<Vec<Report>> {
            Ok(match suite.as_str() {
                "qgl" => vec![suites::verify_qgl(&cfg)?],
                "hecke" => vec![suites::verify_affine_hecke(&cfg)?],
                "commuting" => vec![suites::verify_commuting(&cfg)?],
                "eval-compat" => vec![suites::verify_eval_compat(&cfg, which)?],
                "lemmas" => vec![suites::verify_lemmas(&cfg)?],
                "jm" => vec![suites::verify_jm(r, t_max)?],
                "drinfeld" => vec![suites::verify_drinfeld(r, n, seed)?],
                "roundtrip" => vec![suites::verify_roundtrip(count, r, n, seed)?],
                "all" => suites::verify_all(&cfg)?,
                other => return Err(Error::Parse(format!("unknown suite {other:?}"))),
            })
        })
        .map_err(err)?;
    Ok(report_json(reps, no_timing))
}

#[pymodule]
fn qschur(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLaurent>()?;
    m.add_class::<PyPartition>()?;
    m.add_class::<PyHecke>()?;
    m.add_class::<PyTensor>()?;
    m.add_class::<PyDrinfeld>()?;
    m.add_class::<PyMultisegment>()?;
    for f in [
        wrap_pyfunction!(act_left, m)?,
        wrap_pyfunction!(act_word, m)?,
        wrap_pyfunction!(act_right, m)?,
        wrap_pyfunction!(act_hecke, m)?,
        wrap_pyfunction!(eps_a, m)?,
        wrap_pyfunction!(murphy_l, m)?,
        wrap_pyfunction!(ev_a, m)?,
        wrap_pyfunction!(q_from_lambda, m)?,
        wrap_pyfunction!(s_lambda_a, m)?,
        wrap_pyfunction!(partial_map, m)?,
        wrap_pyfunction!(partial_inverse, m)?,
        wrap_pyfunction!(central_scalar, m)?,
        wrap_pyfunction!(verify, m)?,
    ] {
        m.add_function(f)?;
    }
    Ok(())
}
