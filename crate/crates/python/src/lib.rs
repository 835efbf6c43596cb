//! Python bindings: `import cintervals`.

use core_lib as ci;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: ci::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn kind(s: &str) -> PyResult<ci::FamilyKind> {
    s.parse().map_err(err)
}

fn pairs(v: Vec<ci::Interval>) -> Vec<(usize, usize)> {
    v.into_iter().map(|i| (i.begin, i.end)).collect()
}

/// Interval family generator `(R, L)`: `[x, y]` is a member iff
/// `R[x] >= y` and `L[y] <= x`, 1-based.
#[pyclass(name = "Generator", frozen)]
#[derive(Clone)]
struct PyGenerator(ci::Generator);

#[pymethods]
impl PyGenerator {
    #[new]
    fn new(r: Vec<usize>, l: Vec<usize>) -> PyResult<Self> {
        ci::Generator::new(r, l).map(PyGenerator).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn right(&self) -> Vec<usize> {
        self.0.right().to_vec()
    }

    #[getter]
    fn left(&self) -> Vec<usize> {
        self.0.left().to_vec()
    }

    fn is_member(&self, x: usize, y: usize) -> PyResult<bool> {
        self.0.is_member(x, y).map_err(err)
    }

    fn intersect(&self, other: &PyGenerator) -> PyResult<PyGenerator> {
        self.0.intersect(&other.0).map(PyGenerator).map_err(err)
    }

    /// Members as `(x, y)` tuples, `y` ascending then `x` descending.
    fn materialize(&self) -> Vec<(usize, usize)> {
        pairs(self.0.materialize())
    }

    fn __eq__(&self, other: &PyGenerator) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Generator(r={:?}, l={:?})", self.0.right(), self.0.left())
    }
}

/// A validated permutation, labeled tree or DAG on `1..=n`.
#[pyclass(name = "Structure", frozen)]
#[derive(Clone)]
struct PyStructure(ci::Structure);

#[pymethods]
impl PyStructure {
    #[staticmethod]
    fn permutation(values: Vec<usize>) -> PyResult<Self> {
        ci::Permutation::new(values)
            .map(|p| PyStructure(ci::Structure::Permutation(p)))
            .map_err(err)
    }

    /// Positions of `first` whose elements are consecutive in `second`
    /// become the common intervals of the reduced permutation.
    #[staticmethod]
    fn two_permutations(first: Vec<usize>, second: Vec<usize>) -> PyResult<Self> {
        let raw = ci::RawInput::TwoPermutations(first, second);
        ci::validate_structure(ci::FamilyKind::A, raw)
            .map(PyStructure)
            .map_err(err)
    }

    #[staticmethod]
    fn tree(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        ci::LabeledTree::new(n, edges)
            .map(|t| PyStructure(ci::Structure::Tree(t)))
            .map_err(err)
    }

    #[staticmethod]
    fn dag(n: usize, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        ci::Dag::new(n, arcs)
            .map(|d| PyStructure(ci::Structure::Dag(d)))
            .map_err(err)
    }

    /// Parse the text file format for the structure `kind` is defined on.
    #[staticmethod]
    fn parse(kind_name: &str, text: &str) -> PyResult<Self> {
        let k = kind(kind_name)?;
        let raw = ci::io::parse_input(text, k.input()).map_err(err)?;
        ci::validate_structure(k, raw).map(PyStructure).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn kind(&self) -> &'static str {
        self.0.kind().name()
    }

    fn __repr__(&self) -> String {
        format!("Structure({}, n={})", self.0.kind().name(), self.0.n())
    }
}

impl PyStructure {
    fn permutation_ref(&self) -> PyResult<&ci::Permutation> {
        match &self.0 {
            ci::Structure::Permutation(p) => Ok(p),
            _ => Err(PyValueError::new_err("expected a permutation")),
        }
    }
}

/// Decomposition tree of the common intervals of a permutation.
#[pyclass(name = "DecompositionTree", frozen)]
struct PyDecompositionTree(ci::DecompositionTree);

#[pymethods]
impl PyDecompositionTree {
    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn to_dot(&self) -> String {
        self.0.to_dot()
    }

    /// Position ranges of all nodes, preorder.
    fn node_intervals(&self) -> Vec<(usize, usize)> {
        pairs(self.0.node_intervals())
    }

    /// Every common interval, recovered from the tree.
    fn expand_family(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        self.0.expand_family(|i| out.push((i.begin, i.end)));
        out
    }

    #[getter]
    fn root_label(&self) -> &'static str {
        self.0.node(self.0.root()).label.as_str()
    }

    fn __eq__(&self, other: &PyDecompositionTree) -> bool {
        self.0 == other.0
    }
}

/// Generator of family `kind` ("A".."H") on `structure`.
#[pyfunction]
fn family_generator(kind_name: &str, structure: &PyStructure) -> PyResult<PyGenerator> {
    ci::family_generator(kind(kind_name)?, &structure.0)
        .map(PyGenerator)
        .map_err(err)
}

/// Members of family `kind` in emission order.
#[pyfunction]
fn enumerate(kind_name: &str, structure: &PyStructure) -> PyResult<Vec<(usize, usize)>> {
    ci::family_members(kind(kind_name)?, &structure.0)
        .map(pairs)
        .map_err(err)
}

/// Members of family `kind` evaluated from the definition.
#[pyfunction]
fn brute_force_family(kind_name: &str, structure: &PyStructure) -> PyResult<Vec<(usize, usize)>> {
    ci::oracle::brute_force_family(kind(kind_name)?, &structure.0)
        .map(pairs)
        .map_err(err)
}

#[pyfunction]
fn is_simple(structure: &PyStructure) -> PyResult<bool> {
    Ok(ci::is_simple(structure.permutation_ref()?))
}

/// A common interval other than singletons and the whole set, if any.
#[pyfunction]
fn nontrivial_common_interval(structure: &PyStructure) -> PyResult<Option<(usize, usize)>> {
    Ok(ci::find_nontrivial_common_interval(structure.permutation_ref()?).map(|i| (i.begin, i.end)))
}

#[pyfunction]
fn decompose(structure: &PyStructure) -> PyResult<PyDecompositionTree> {
    Ok(PyDecompositionTree(ci::build_decomposition_tree(
        structure.permutation_ref()?,
    )))
}

#[pyfunction]
fn brute_force_decomposition(structure: &PyStructure) -> PyResult<PyDecompositionTree> {
    Ok(PyDecompositionTree(ci::oracle::brute_force_decomposition(
        structure.permutation_ref()?,
    )))
}

/// Seeded random structure for family `kind`.
#[pyfunction]
fn random_instance(kind_name: &str, n: usize, seed: u64) -> PyResult<PyStructure> {
    ci::oracle::random_instance(kind(kind_name)?, n, seed)
        .map(PyStructure)
        .map_err(err)
}

#[pymodule]
fn cintervals(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGenerator>()?;
    m.add_class::<PyStructure>()?;
    m.add_class::<PyDecompositionTree>()?;
    m.add_function(wrap_pyfunction!(family_generator, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_family, m)?)?;
    m.add_function(wrap_pyfunction!(is_simple, m)?)?;
    m.add_function(wrap_pyfunction!(nontrivial_common_interval, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(random_instance, m)?)?;
    Ok(())
}
