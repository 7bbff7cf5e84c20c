//! Python bindings. Reports are returned as plain dicts.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use solrad::catalog::{resolve_group, CATALOG_EXAMPLES};
use solrad::classes::conjugacy_classes;
use solrad::lie::{algebra_from_json, parse_algebra_name, radical_membership_vtest, LieElement};
use solrad::radical::{oracle_solvable_radical, radical_elements};
use solrad::verify::{self, LemmaOptions};
use solrad::DEFAULT_CAP;

fn err(e: solrad::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py(py: Python<'_>, v: serde_json::Value) -> PyResult<Bound<'_, PyAny>> {
    let json = py.import("json")?;
    json.call_method1("loads", (v.to_string(),))
}

#[pyclass(name = "Permutation", module = "solrad_py", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPermutation(solrad::Permutation);

#[pymethods]
impl PyPermutation {
    /// Parses 1-based cycle notation, e.g. `Permutation("(1 2 3)(4 5)", 5)`.
    #[new]
    fn new(cycles: &str, degree: usize) -> PyResult<Self> {
        solrad::parse_cycles(cycles, degree).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_images(images: Vec<u32>) -> PyResult<Self> {
        solrad::Permutation::from_images(images).map(Self).map_err(err)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn images(&self) -> Vec<u32> {
        self.0.images().to_vec()
    }

    fn order(&self) -> u64 {
        self.0.order()
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    /// Left-to-right product: apply `self` first.
    fn compose(&self, other: PyRef<'_, Self>) -> PyResult<Self> {
        self.0.compose(&other.0).map(Self).map_err(err)
    }

    fn __mul__(&self, other: PyRef<'_, Self>) -> PyResult<Self> {
        self.compose(other)
    }

    fn conjugate(&self, g: PyRef<'_, Self>) -> PyResult<Self> {
        self.0.conjugate(&g.0).map(Self).map_err(err)
    }

    fn commutator(&self, other: PyRef<'_, Self>) -> PyResult<Self> {
        self.0.commutator(&other.0).map(Self).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation(\"{}\", {})", self.0, self.0.degree())
    }
}

#[pyclass(name = "PermGroup", module = "solrad_py", frozen)]
struct PyPermGroup(solrad::PermGroup);

fn perms(list: &[PyRef<'_, PyPermutation>]) -> Vec<solrad::Permutation> {
    list.iter().map(|p| p.0.clone()).collect()
}

#[pymethods]
impl PyPermGroup {
    #[new]
    fn new(degree: usize, generators: Vec<PyRef<'_, PyPermutation>>) -> PyResult<Self> {
        solrad::PermGroup::from_generators(degree, &perms(&generators))
            .map(Self)
            .map_err(err)
    }

    /// Catalog name such as `"A5xC3"`, or `"@path"` for a generator file.
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        resolve_group(name).map(Self).map_err(err)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn order(&self) -> u64 {
        self.0.order()
    }

    fn generators(&self) -> Vec<PyPermutation> {
        self.0.generators().iter().cloned().map(PyPermutation).collect()
    }

    fn __contains__(&self, p: PyRef<'_, PyPermutation>) -> bool {
        self.0.contains(&p.0)
    }

    fn is_solvable(&self) -> bool {
        self.0.is_solvable()
    }

    fn derived_series(&self) -> Vec<u64> {
        self.0.derived_series().orders()
    }

    fn normal_closure(&self, seeds: Vec<PyRef<'_, PyPermutation>>) -> PyResult<Self> {
        self.0.normal_closure(&perms(&seeds)).map(Self).map_err(err)
    }

    #[pyo3(signature = (cap = DEFAULT_CAP))]
    fn conjugacy_classes(&self, cap: u64) -> PyResult<Vec<(PyPermutation, usize)>> {
        let classes = conjugacy_classes(&self.0, cap).map_err(err)?;
        Ok(classes.into_iter().map(|(r, n)| (PyPermutation(r), n)).collect())
    }

    /// Elements `y` with `<x, y>` solvable for every `x`.
    #[pyo3(signature = (cap = DEFAULT_CAP))]
    fn radical_elements(&self, cap: u64) -> PyResult<Vec<PyPermutation>> {
        let s = radical_elements(&self.0, cap).map_err(err)?;
        Ok(s.members.into_iter().map(PyPermutation).collect())
    }

    #[pyo3(signature = (cap = DEFAULT_CAP))]
    fn solvable_radical(&self, cap: u64) -> PyResult<Self> {
        oracle_solvable_radical(&self.0, cap).map(Self).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("PermGroup(degree={}, order={})", self.0.degree(), self.0.order())
    }
}

#[pyfunction]
fn group_catalog() -> Vec<(&'static str, &'static str)> {
    CATALOG_EXAMPLES.to_vec()
}

#[pyfunction]
#[pyo3(signature = (group, cap = DEFAULT_CAP))]
fn verify_thompson<'py>(
    py: Python<'py>,
    group: PyRef<'py, PyPermGroup>,
    cap: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let report = solrad::radical::verify_thompson(&group.0, cap).map_err(err)?;
    to_py(py, report.to_json())
}

fn report<'py>(
    py: Python<'py>,
    r: solrad::Result<verify::TheoremReport>,
) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, r.map_err(err)?.to_json())
}

#[pyfunction]
#[pyo3(signature = (group, cap = DEFAULT_CAP))]
fn verify_one_and_half<'py>(
    py: Python<'py>,
    group: PyRef<'py, PyPermGroup>,
    cap: u64,
) -> PyResult<Bound<'py, PyAny>> {
    report(py, verify::verify_one_and_half(&group.0, cap))
}

#[pyfunction]
#[pyo3(signature = (group, cap = DEFAULT_CAP))]
fn verify_common_mate<'py>(
    py: Python<'py>,
    group: PyRef<'py, PyPermGroup>,
    cap: u64,
) -> PyResult<Bound<'py, PyAny>> {
    report(py, verify::verify_bgk_common_mate(&group.0, cap))
}

#[pyfunction]
#[pyo3(signature = (group, cap = DEFAULT_CAP))]
fn verify_pairs<'py>(
    py: Python<'py>,
    group: PyRef<'py, PyPermGroup>,
    cap: u64,
) -> PyResult<Bound<'py, PyAny>> {
    report(py, verify::verify_pairs(&group.0, cap))
}

#[pyfunction]
#[pyo3(signature = (group, xs, cap = DEFAULT_CAP))]
fn verify_triple<'py>(
    py: Python<'py>,
    group: PyRef<'py, PyPermGroup>,
    xs: Vec<PyRef<'py, PyPermutation>>,
    cap: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let xs: [solrad::Permutation; 3] = perms(&xs)
        .try_into()
        .map_err(|_| PyValueError::new_err("expected three permutations"))?;
    report(py, verify::verify_triple_counterexample(&group.0, &xs, cap))
}

#[pyfunction]
#[pyo3(signature = (group, normal, y, cap = DEFAULT_CAP, exhaustive_limit = DEFAULT_CAP, trials = 100_000, seed = 0))]
#[allow(clippy::too_many_arguments)]
fn verify_lemma<'py>(
    py: Python<'py>,
    group: PyRef<'py, PyPermGroup>,
    normal: PyRef<'py, PyPermGroup>,
    y: PyRef<'py, PyPermutation>,
    cap: u64,
    exhaustive_limit: u64,
    trials: u64,
    seed: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let opts = LemmaOptions {
        cap,
        exhaustive_limit,
        trials,
        seed,
    };
    report(py, verify::verify_lemma_minimal_normal(&group.0, &normal.0, &y.0, opts))
}

#[pyclass(name = "LieAlgebra", module = "solrad_py", frozen)]
struct PyLieAlgebra(solrad::lie::LieAlgebra);

fn element(s: &str) -> PyResult<LieElement> {
    LieElement::parse(s).map_err(err)
}

#[pymethods]
impl PyLieAlgebra {
    /// Catalog name such as `"sl2+h3"`.
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        parse_algebra_name(name).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        algebra_from_json(text).map(Self).map_err(err)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn labels(&self) -> Vec<String> {
        self.0.labels().to_vec()
    }

    fn bracket(&self, x: &str, y: &str) -> PyResult<String> {
        let z = self.0.bracket(&element(x)?, &element(y)?).map_err(err)?;
        Ok(z.to_string())
    }

    fn killing(&self, x: &str, y: &str) -> PyResult<String> {
        let k = self.0.killing(&element(x)?, &element(y)?).map_err(err)?;
        Ok(k.to_string())
    }

    fn is_solvable(&self) -> bool {
        self.0.is_solvable()
    }

    /// Basis of the solvable radical, as comma-separated coordinates.
    fn radical(&self) -> PyResult<Vec<String>> {
        let r = self.0.killing_radical().map_err(err)?;
        Ok(r.basis().iter().map(ToString::to_string).collect())
    }

    fn v_word(&self, x: &str, y: &str, n: usize) -> PyResult<String> {
        let v = self.0.v_word(&element(x)?, &element(y)?, n).map_err(err)?;
        Ok(v.to_string())
    }

    #[pyo3(signature = (y, nmax = None, samples = 100, seed = 0))]
    fn vtest<'py>(
        &self,
        py: Python<'py>,
        y: &str,
        nmax: Option<usize>,
        samples: usize,
        seed: u64,
    ) -> PyResult<Bound<'py, PyAny>> {
        let nmax = nmax.unwrap_or(10 * self.0.dim());
        let t = radical_membership_vtest(&self.0, &element(y)?, nmax, samples, seed)
            .map_err(err)?;
        to_py(py, serde_json::to_value(t).expect("serializes"))
    }
}

#[pymodule]
fn solrad_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyPermGroup>()?;
    m.add_class::<PyLieAlgebra>()?;
    m.add_function(wrap_pyfunction!(group_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(verify_thompson, m)?)?;
    m.add_function(wrap_pyfunction!(verify_one_and_half, m)?)?;
    m.add_function(wrap_pyfunction!(verify_common_mate, m)?)?;
    m.add_function(wrap_pyfunction!(verify_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(verify_triple, m)?)?;
    m.add_function(wrap_pyfunction!(verify_lemma, m)?)?;
    Ok(())
}
