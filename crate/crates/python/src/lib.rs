//! Python bindings: weight programs, nested programs, translations,
//! strong equivalence, completion export and the randomized checks.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use wcnest::completion::{completion_dimacs, completion_input, verify_completion};
use wcnest::ht::{strong_eq_nested, strong_eq_weight, DEFAULT_HT_CAP};
use wcnest::nsem::answer_sets_n;
use wcnest::parser::{parse_nested_program, parse_weight_program, print_nested_program, print_weight_program};
use wcnest::translate::{tr_basic_with, tr_nd_with, tr_nn, TranslateOptions, TranslationReport};
use wcnest::verify::{run_check, Check, VerifyConfig};
use wcnest::wsem::answer_sets_w;
use wcnest::{Error, Interpretation, DEFAULT_CAP};

create_exception!(wcnest, NotTightError, PyException);
create_exception!(wcnest, CapExceededError, PyException);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::NotTight => NotTightError::new_err(e.to_string()),
        Error::CapExceeded { .. } => CapExceededError::new_err(e.to_string()),
        Error::NegativeWeight(_) | Error::ReservedPrefix(_) | Error::Inconsistent(_) => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

/// Answer sets or models as lists of literal strings.
type Sets = Vec<Vec<String>>;

fn literals(sets: Vec<Interpretation>) -> Sets {
    sets.iter().map(|z| z.iter().map(|l| l.to_string()).collect()).collect()
}

/// A program with weight constraints.
#[pyclass(frozen, module = "wcnest")]
struct WeightProgram {
    inner: wcnest::WProgram,
}

/// A program with nested expressions.
#[pyclass(frozen, module = "wcnest")]
struct NestedProgram {
    inner: wcnest::NProgram,
    /// Auxiliary atoms of a translation, in sorted order.
    #[pyo3(get)]
    aux_atoms: Vec<String>,
}

impl NestedProgram {
    fn from_report(r: TranslationReport) -> Self {
        let aux_atoms = r.q_omega.iter().map(|a| a.to_string()).collect();
        Self {
            inner: r.output,
            aux_atoms,
        }
    }
}

#[pymethods]
impl WeightProgram {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse_weight_program(text)
            .map(|inner| Self { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __str__(&self) -> String {
        print_weight_program(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("WeightProgram({:?})", print_weight_program(&self.inner))
    }

    fn __len__(&self) -> usize {
        self.inner.rules.len()
    }

    /// Answer sets as lists of literal strings, sorted by size then
    /// lexicographically.
    #[pyo3(signature = (cap=DEFAULT_CAP))]
    fn answer_sets(&self, cap: usize) -> PyResult<Sets> {
        answer_sets_w(&self.inner, cap).map(literals).map_err(to_py)
    }

    /// Translation into a nested program; `mode` is "basic", "nd" or "nn".
    #[pyo3(signature = (mode="basic", simplify=false))]
    fn translate(&self, mode: &str, simplify: bool) -> PyResult<NestedProgram> {
        let opts = TranslateOptions {
            simplify,
            ..TranslateOptions::default()
        };
        let report = match mode {
            "basic" => tr_basic_with(&self.inner, &opts),
            "nd" => tr_nd_with(&self.inner, &opts),
            "nn" if !simplify => tr_nn(&self.inner),
            "nn" => return Err(PyValueError::new_err("mode nn has no simplified form")),
            _ => return Err(PyValueError::new_err(format!("unknown mode `{mode}`"))),
        };
        report.map(NestedProgram::from_report).map_err(to_py)
    }

    #[pyo3(signature = (other, cap=DEFAULT_HT_CAP))]
    fn strongly_equivalent(&self, other: &WeightProgram, cap: usize) -> PyResult<bool> {
        strong_eq_weight(&self.inner, &other.inner, cap)
            .map(|v| v.is_equivalent())
            .map_err(to_py)
    }

    /// DIMACS text of the completion of the nonnested translation. Raises
    /// `NotTightError` when that translation is not tight.
    fn completion_dimacs(&self) -> PyResult<String> {
        let input = completion_input(&self.inner).map_err(to_py)?;
        completion_dimacs(&input).map(|d| d.render()).map_err(to_py)
    }

    /// `(models, answer_sets)` of the completion check; both are lists of
    /// literal lists over the original atoms.
    #[pyo3(signature = (cap=DEFAULT_CAP))]
    fn verify_completion(&self, cap: usize) -> PyResult<(Sets, Sets)> {
        let r = verify_completion(&self.inner, cap).map_err(to_py)?;
        Ok((literals(r.models), literals(r.answer_sets)))
    }
}

#[pymethods]
impl NestedProgram {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse_nested_program(text)
            .map(|inner| Self {
                inner,
                aux_atoms: Vec::new(),
            })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __str__(&self) -> String {
        print_nested_program(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("NestedProgram({:?})", print_nested_program(&self.inner))
    }

    fn __len__(&self) -> usize {
        self.inner.rules.len()
    }

    #[pyo3(signature = (cap=DEFAULT_CAP))]
    fn answer_sets(&self, cap: usize) -> PyResult<Sets> {
        answer_sets_n(&self.inner, cap).map(literals).map_err(to_py)
    }

    #[pyo3(signature = (other, cap=DEFAULT_HT_CAP))]
    fn strongly_equivalent(&self, other: &NestedProgram, cap: usize) -> PyResult<bool> {
        strong_eq_nested(&self.inner, &other.inner, cap)
            .map(|v| v.is_equivalent())
            .map_err(to_py)
    }
}

/// Names accepted by `verify`.
#[pyfunction]
fn checks() -> Vec<&'static str> {
    Check::ALL.iter().map(Check::name).collect()
}

/// Runs one randomized check; returns `(passed, failed, skipped,
/// first_failure)`.
#[pyfunction]
#[pyo3(signature = (check, cases=200, seed=0))]
fn verify(py: Python<'_>, check: &str, cases: usize, seed: u64) -> PyResult<(usize, usize, usize, Option<String>)> {
    let c = Check::ALL
        .into_iter()
        .find(|c| c.name() == check)
        .ok_or_else(|| PyValueError::new_err(format!("unknown check `{check}`")))?;
    let cfg = VerifyConfig {
        cases,
        seed,
        ..VerifyConfig::default()
    };
    let s = py.detach(|| run_check(c, &cfg));
    Ok((s.passed, s.failed, s.skipped, s.first_failure))
}

#[pymodule]
#[pyo3(name = "wcnest")]
fn pywcnest(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<WeightProgram>()?;
    m.add_class::<NestedProgram>()?;
    m.add_function(wrap_pyfunction!(checks, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("NotTightError", m.py().get_type::<NotTightError>())?;
    m.add("CapExceededError", m.py().get_type::<CapExceededError>())?;
    m.add("DEFAULT_CAP", DEFAULT_CAP)?;
    Ok(())
}
