//! Python bindings: `import pyheisid`.
//!
//! Rationals cross the boundary as strings (`"p"` or `"p/q"`); ints and
//! `fractions.Fraction` are accepted on input through `str()`.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use heisid::decider::{decide_with, DecideOptions, GeneratorSet, Route};
use heisid::diophantine::{solve_homogeneous as solve_system, DiophantineSystem};
use heisid::encodings::pcp::{pcp_to_generators, pcp_witness as build_pcp_witness, PcpInstance};
use heisid::encodings::verify_sl3q_embedding;
use heisid::exactmath::{QMatrix, QVector, Rational};
use heisid::format;
use heisid::heisenberg::HeisTriple;
use heisid::oracle::{bfs_identity, SearchConfig, SearchOutcome};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let s: String = match obj.extract::<String>() {
        Ok(s) => s,
        Err(_) => obj.str()?.to_string(),
    };
    s.parse().map_err(value_error)
}

fn to_vector(objs: &[Bound<'_, PyAny>]) -> PyResult<QVector> {
    objs.iter().map(to_rational).collect()
}

fn strings(v: &QVector) -> Vec<String> {
    v.entries().iter().map(ToString::to_string).collect()
}

fn matrix_strings(m: &QMatrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

/// An element `(a, b, c)` of the Heisenberg group `H(n, Q)`.
#[pyclass(name = "Triple", frozen)]
struct PyTriple {
    inner: HeisTriple,
}

fn wrap(inner: HeisTriple) -> PyTriple {
    PyTriple { inner }
}

#[pymethods]
impl PyTriple {
    #[new]
    fn new(a: Vec<Bound<'_, PyAny>>, b: Vec<Bound<'_, PyAny>>, c: Bound<'_, PyAny>) -> PyResult<Self> {
        let t = HeisTriple::new(to_vector(&a)?, to_vector(&b)?, to_rational(&c)?).map_err(value_error)?;
        Ok(wrap(t))
    }

    /// Identity of `H(n)`.
    #[staticmethod]
    fn identity(n: usize) -> PyResult<Self> {
        HeisTriple::identity(n).map(wrap).map_err(value_error)
    }

    /// Reads an upper unitriangular `n × n` matrix.
    #[staticmethod]
    fn from_matrix(rows: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Self> {
        let rows = rows.iter().map(|r| to_vector(r).map(QVector::into_entries)).collect::<PyResult<Vec<_>>>()?;
        let m = QMatrix::from_rows(rows).map_err(value_error)?;
        HeisTriple::from_matrix(&m).map(wrap).map_err(value_error)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn a(&self) -> Vec<String> {
        strings(self.inner.a())
    }

    #[getter]
    fn b(&self) -> Vec<String> {
        strings(self.inner.b())
    }

    #[getter]
    fn c(&self) -> String {
        self.inner.c().to_string()
    }

    fn compose(&self, other: PyRef<'_, PyTriple>) -> PyResult<Self> {
        self.inner.compose(&other.inner).map(wrap).map_err(value_error)
    }

    fn __mul__(&self, other: PyRef<'_, PyTriple>) -> PyResult<Self> {
        self.compose(other)
    }

    fn inverse(&self) -> Self {
        wrap(self.inner.inverse())
    }

    /// `x^m` for `m ≥ 1` by the closed form.
    fn power(&self, m: BigUint) -> PyResult<Self> {
        self.inner.pow(&m).map(wrap).map_err(value_error)
    }

    fn commutes(&self, other: PyRef<'_, PyTriple>) -> PyResult<bool> {
        self.inner.commutes(&other.inner).map_err(value_error)
    }

    fn is_identity(&self) -> bool {
        self.inner.is_identity()
    }

    fn to_matrix(&self) -> Vec<Vec<String>> {
        matrix_strings(&self.inner.to_matrix())
    }

    fn __eq__(&self, other: PyRef<'_, PyTriple>) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Triple(a={:?}, b={:?}, c={:?})", self.a(), self.b(), self.c())
    }
}

fn generator_set(gens: &[PyRef<'_, PyTriple>]) -> PyResult<GeneratorSet> {
    GeneratorSet::new(gens.iter().map(|g| g.inner.clone()).collect()).map_err(value_error)
}

/// Result of [`decide`].
#[pyclass(name = "Verdict", frozen)]
struct PyVerdict {
    #[pyo3(get)]
    answer: String,
    /// Witness as JSON (runs and repeated blocks), `None` for `"no"`.
    #[pyo3(get)]
    witness_json: Option<String>,
    /// `("commuting", clique)` or `("pair", [i, j])`.
    #[pyo3(get)]
    route: Option<(String, Vec<usize>)>,
}

#[pymethods]
impl PyVerdict {
    fn is_yes(&self) -> bool {
        self.answer == "yes"
    }

    fn __repr__(&self) -> String {
        format!("Verdict(answer={:?}, route={:?})", self.answer, self.route)
    }
}

/// Decides whether the identity is a non-empty product of `generators`.
#[pyfunction]
#[pyo3(signature = (generators, jobs = 1))]
fn decide(generators: Vec<PyRef<'_, PyTriple>>, jobs: usize) -> PyResult<PyVerdict> {
    let set = generator_set(&generators)?;
    let v = decide_with(&set, &DecideOptions { jobs: jobs.max(1) }).map_err(value_error)?;
    let json = format::verdict_to_json(&v);
    Ok(PyVerdict {
        answer: json["answer"].as_str().unwrap_or_default().to_owned(),
        witness_json: json.get("witness").map(ToString::to_string),
        route: v.route.map(|r| match r {
            Route::Commuting { clique } => ("commuting".to_owned(), clique),
            Route::NonCommuting { i, j } => ("pair".to_owned(), vec![i, j]),
        }),
    })
}

/// Re-multiplies a JSON witness; `True` iff it is the identity.
#[pyfunction]
fn verify_witness(generators: Vec<PyRef<'_, PyTriple>>, witness_json: &str) -> PyResult<bool> {
    let set = generator_set(&generators)?;
    let p = format::parse_witness(witness_json).map_err(value_error)?;
    Ok(p.evaluate(set.generators()).map_err(value_error)?.is_identity())
}

/// Same as [`decide`] on an instance file's JSON text; returns verdict JSON.
#[pyfunction]
#[pyo3(signature = (instance_json, jobs = 1))]
fn decide_json(instance_json: &str, jobs: usize) -> PyResult<String> {
    let set = format::parse_instance(instance_json).map_err(value_error)?;
    let v = decide_with(&set, &DecideOptions { jobs: jobs.max(1) }).map_err(value_error)?;
    Ok(format::verdict_to_json(&v).to_string())
}

/// Shortest identity product of length `≤ max_len`, or `None`.
#[pyfunction]
#[pyo3(signature = (generators, max_len, dedup = true, budget = None))]
fn oracle(
    generators: Vec<PyRef<'_, PyTriple>>,
    max_len: usize,
    dedup: bool,
    budget: Option<usize>,
) -> PyResult<Option<Vec<usize>>> {
    let gens: Vec<HeisTriple> = generators.iter().map(|g| g.inner.clone()).collect();
    let cfg = SearchConfig { max_length: max_len.max(1), dedup, state_budget: budget };
    match bfs_identity(&gens, &cfg) {
        SearchOutcome::Found(seq) => Ok(Some(seq)),
        SearchOutcome::NotFound { .. } => Ok(None),
        SearchOutcome::BudgetExhausted { depth, states } => {
            Err(value_error(format!("state budget exhausted after {states} states (complete to length {depth})")))
        }
    }
}

/// Non-trivial `y ≥ 0` with `A y = 0` and `y_i > 0` for `i` in `forced`, or `None`.
#[pyfunction]
#[pyo3(signature = (a, forced = Vec::new()))]
fn solve_homogeneous(a: Vec<Vec<Bound<'_, PyAny>>>, forced: Vec<usize>) -> PyResult<Option<Vec<BigUint>>> {
    let rows = a.iter().map(|r| to_vector(r).map(QVector::into_entries)).collect::<PyResult<Vec<_>>>()?;
    let m = QMatrix::from_rows(rows).map_err(value_error)?;
    let sys = DiophantineSystem::new(m, forced).map_err(value_error)?;
    Ok(solve_system(&sys).map(|s| s.y))
}

/// `[(name, passed, detail), …]` for the `SL(3, Q)` embedding checks.
#[pyfunction]
fn verify_embedding() -> Vec<(String, bool, String)> {
    verify_sl3q_embedding().checks.into_iter().map(|c| (c.name, c.passed, c.detail)).collect()
}

fn pcp_instance(letters: Vec<String>, g: Vec<String>, h: Vec<String>) -> PyResult<PcpInstance> {
    let ls: Vec<&str> = letters.iter().map(String::as_str).collect();
    let gs: Vec<&str> = g.iter().map(String::as_str).collect();
    let hs: Vec<&str> = h.iter().map(String::as_str).collect();
    PcpInstance::from_strings(&ls, &gs, &hs).map_err(value_error)
}

/// Labelled `SL(4, Z)` generators `[(label, rows), …]` for a PCP instance.
#[pyfunction]
fn pcp_generators(letters: Vec<String>, g: Vec<String>, h: Vec<String>) -> PyResult<Vec<(String, Vec<Vec<String>>)>> {
    let set = pcp_to_generators(&pcp_instance(letters, g, h)?);
    Ok(set.generators.iter().map(|x| (x.label.to_string(), matrix_strings(&x.matrix))).collect())
}

/// Labels of a generator sequence multiplying to `I₄`, built from `solution`.
#[pyfunction]
fn pcp_witness(letters: Vec<String>, g: Vec<String>, h: Vec<String>, solution: Vec<String>) -> PyResult<Vec<String>> {
    let inst = pcp_instance(letters, g, h)?;
    let word = format::parse_pcp_solution(&inst, &solution.join(" ")).map_err(value_error)?;
    let set = pcp_to_generators(&inst);
    let seq = build_pcp_witness(&inst, &set, &word).map_err(value_error)?;
    Ok(seq.iter().map(|&i| set.generators[i].label.to_string()).collect())
}

#[pymodule]
fn pyheisid(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTriple>()?;
    m.add_class::<PyVerdict>()?;
    m.add_function(wrap_pyfunction!(decide, m)?)?;
    m.add_function(wrap_pyfunction!(decide_json, m)?)?;
    m.add_function(wrap_pyfunction!(verify_witness, m)?)?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    m.add_function(wrap_pyfunction!(solve_homogeneous, m)?)?;
    m.add_function(wrap_pyfunction!(verify_embedding, m)?)?;
    m.add_function(wrap_pyfunction!(pcp_generators, m)?)?;
    m.add_function(wrap_pyfunction!(pcp_witness, m)?)?;
    Ok(())
}
