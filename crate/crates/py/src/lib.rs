//! Python bindings. Tilings are a class; strand diagrams and plabic graphs
//! cross the boundary as their JSON text.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use scottmap::enumerate::{self, ShapePartition};
use scottmap::{flipclasses, plabic, scott, strandmap, verify, Diagonal, Permutation};

fn err(e: scottmap::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn shape(raw: &str) -> PyResult<ShapePartition> {
    raw.parse().map_err(err)
}

/// A tiling of the convex n-gon by non-crossing diagonals.
#[pyclass(name = "Tiling", module = "pyscottmap", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyTiling {
    inner: scottmap::Tiling,
}

impl From<scottmap::Tiling> for PyTiling {
    fn from(inner: scottmap::Tiling) -> Self {
        PyTiling { inner }
    }
}

#[pymethods]
impl PyTiling {
    #[new]
    #[pyo3(signature = (n, diagonals = Vec::new()))]
    fn new(n: u32, diagonals: Vec<(u32, u32)>) -> PyResult<Self> {
        Ok(scottmap::Tiling::new(n, diagonals).map_err(err)?.into())
    }

    /// Parses `"2-8,3-5,5-8"`.
    #[staticmethod]
    fn parse(n: u32, diagonals: &str) -> PyResult<Self> {
        Ok(scottmap::Tiling::parse(n, diagonals).map_err(err)?.into())
    }

    #[staticmethod]
    fn from_json(raw: &str) -> PyResult<Self> {
        let t: scottmap::Tiling = serde_json::from_str(raw).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(t.into())
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n()
    }

    #[getter]
    fn diagonals(&self) -> Vec<(u32, u32)> {
        self.inner.diagonals().iter().map(|d| (d.a(), d.b())).collect()
    }

    fn tiles(&self) -> Vec<Vec<u32>> {
        self.inner.tiles().iter().map(|q| q.vertices().to_vec()).collect()
    }

    /// Tile sizes minus two, largest first.
    fn shape(&self) -> Vec<u32> {
        enumerate::shape_of(&self.inner).parts().to_vec()
    }

    fn is_triangulation(&self) -> bool {
        self.inner.is_triangulation()
    }

    fn flippable_diagonals(&self) -> Vec<(u32, u32)> {
        self.inner.flippable_diagonals().iter().map(|d| (d.a(), d.b())).collect()
    }

    fn flip(&self, a: u32, b: u32) -> PyResult<Self> {
        let d = Diagonal::new(self.inner.n(), a, b).map_err(err)?;
        Ok(self.inner.flip(&d).map_err(err)?.into())
    }

    fn restrict(&self, vertices: Vec<u32>) -> PyResult<Self> {
        Ok(self.inner.restrict(&vertices).map_err(err)?.into())
    }

    /// Images of `1..n` under the Scott permutation.
    fn scott_perm(&self) -> Vec<u32> {
        scott::scott_perm(&self.inner).images().to_vec()
    }

    fn scott_cycles(&self) -> String {
        scott::scott_perm(&self.inner).to_cycles()
    }

    /// The tiles with at least four corners; equal exactly on flip classes.
    fn class_key(&self) -> Vec<Vec<u32>> {
        flipclasses::class_key(&self.inner)
            .big_tiles
            .iter()
            .map(|q| q.vertices().to_vec())
            .collect()
    }

    fn same_class(&self, other: &PyTiling) -> PyResult<bool> {
        flipclasses::same_class(&self.inner, &other.inner).map_err(err)
    }

    fn representative(&self) -> Self {
        flipclasses::representative(&self.inner).into()
    }

    fn flip_class(&self) -> Vec<PyTiling> {
        flipclasses::flip_class(&self.inner).into_iter().map(Into::into).collect()
    }

    fn strand_map_json(&self) -> String {
        strandmap::build_strand_map(&self.inner).to_json()
    }

    fn plabic_json(&self) -> String {
        plabic::g_map(&self.inner).to_json()
    }

    fn plabic_dot(&self) -> String {
        plabic::g_map(&self.inner).to_dot()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("tilings serialise")
    }

    fn __repr__(&self) -> String {
        format!("Tiling{}", self.inner)
    }

    fn __eq__(&self, other: &PyTiling) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }
}

/// Every tiling of the n-gon, in generation order.
#[pyfunction]
#[pyo3(signature = (n, max_rank = enumerate::DEFAULT_MAX_RANK))]
fn generate_all(n: u32, max_rank: u32) -> PyResult<Vec<PyTiling>> {
    Ok(enumerate::generate_all_bounded(n, max_rank).map_err(err)?.into_iter().map(Into::into).collect())
}

#[pyfunction]
fn generate_by_lambda(n: u32, shape_text: &str) -> PyResult<Vec<PyTiling>> {
    let l = shape(shape_text)?;
    Ok(enumerate::generate_by_lambda(n, &l).map_err(err)?.into_iter().map(Into::into).collect())
}

/// Number of tilings with `m` diagonals, from the closed formula.
#[pyfunction]
fn a_n_m(n: u32, m: u32) -> PyResult<BigUint> {
    enumerate::a_n_m_formula(n, m).map_err(err)
}

/// Number of tilings of shape `lambda`, e.g. `"2,2,1,1"`.
#[pyfunction]
fn a_n_lambda(n: u32, lambda: &str) -> PyResult<BigUint> {
    enumerate::a_n_lambda_formula(n, &shape(lambda)?).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, max_rank = enumerate::DEFAULT_MAX_RANK))]
fn count_classes(n: u32, max_rank: u32) -> PyResult<usize> {
    flipclasses::count_classes_bounded(n, max_rank).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, max_rank = enumerate::DEFAULT_MAX_RANK))]
fn count_scott_images(n: u32, max_rank: u32) -> PyResult<usize> {
    flipclasses::count_scott_images_bounded(n, max_rank).map_err(err)
}

/// Class count of one shape from the reduction formula (at most four triangles).
#[pyfunction]
fn reduction_formula(n: u32, lambda: &str) -> PyResult<BigUint> {
    flipclasses::reduction_formula_closed(n, &shape(lambda)?).map_err(err)
}

/// `(j, r)` pairs for the maximal descending runs of a permutation.
#[pyfunction]
fn detect_runs(images: Vec<u32>) -> PyResult<Vec<(u32, u32)>> {
    let p = Permutation::new(images).map_err(err)?;
    Ok(scottmap::perm::detect_runs(&p))
}

#[pyfunction]
fn is_minimalist(strand_map_json: &str) -> PyResult<bool> {
    let m = strandmap::parse_strand_map(strand_map_json).map_err(err)?;
    Ok(strandmap::is_minimalist(&m))
}

#[pyfunction]
fn is_absolute(strand_map_json: &str) -> PyResult<bool> {
    let m = strandmap::parse_strand_map(strand_map_json).map_err(err)?;
    Ok(strandmap::is_absolute(&m))
}

/// The boundary permutation of a strand diagram, as images of `1..n`.
#[pyfunction]
fn boundary_permutation(strand_map_json: &str) -> PyResult<Vec<u32>> {
    let m = strandmap::parse_strand_map(strand_map_json).map_err(err)?;
    Ok(m.boundary_permutation().map_err(err)?.images().to_vec())
}

/// The tiling of a minimalist strand diagram.
#[pyfunction]
fn shrink(strand_map_json: &str) -> PyResult<PyTiling> {
    let m = strandmap::parse_strand_map(strand_map_json).map_err(err)?;
    Ok(strandmap::shrink(&m).map_err(err)?.into())
}

#[pyfunction]
fn is_rhombic(plabic_json: &str) -> PyResult<bool> {
    let g = plabic::parse_plabic(plabic_json).map_err(err)?;
    Ok(plabic::check_rhombic(&g).passes)
}

/// The trip permutation of a rhombic plabic graph, as images of `1..n`.
#[pyfunction]
fn trip_perm(plabic_json: &str) -> PyResult<Vec<u32>> {
    let g = plabic::parse_plabic(plabic_json).map_err(err)?;
    Ok(plabic::trip_perm(&g).map_err(err)?.images().to_vec())
}

/// The tiling of a rhombic plabic graph.
#[pyfunction]
fn g_inverse(plabic_json: &str) -> PyResult<PyTiling> {
    let g = plabic::parse_plabic(plabic_json).map_err(err)?;
    Ok(plabic::g_inverse(&g).map_err(err)?.into())
}

/// Runs a verification suite; returns `(checks, [(property, counterexample)])`.
#[pyfunction]
#[pyo3(signature = (suite, n, max_rank = enumerate::DEFAULT_MAX_RANK))]
fn run_suite(suite: &str, n: u32, max_rank: u32) -> PyResult<(u64, Vec<(String, String)>)> {
    let s: verify::Suite = suite.parse().map_err(err)?;
    let r = verify::run_suite(s, n, max_rank).map_err(err)?;
    Ok((r.checks, r.failures.into_iter().map(|f| (f.property, f.counterexample)).collect()))
}

#[pymodule]
fn pyscottmap(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTiling>()?;
    m.add_function(wrap_pyfunction!(generate_all, m)?)?;
    m.add_function(wrap_pyfunction!(generate_by_lambda, m)?)?;
    m.add_function(wrap_pyfunction!(a_n_m, m)?)?;
    m.add_function(wrap_pyfunction!(a_n_lambda, m)?)?;
    m.add_function(wrap_pyfunction!(count_classes, m)?)?;
    m.add_function(wrap_pyfunction!(count_scott_images, m)?)?;
    m.add_function(wrap_pyfunction!(reduction_formula, m)?)?;
    m.add_function(wrap_pyfunction!(detect_runs, m)?)?;
    m.add_function(wrap_pyfunction!(is_minimalist, m)?)?;
    m.add_function(wrap_pyfunction!(is_absolute, m)?)?;
    m.add_function(wrap_pyfunction!(boundary_permutation, m)?)?;
    m.add_function(wrap_pyfunction!(shrink, m)?)?;
    m.add_function(wrap_pyfunction!(is_rhombic, m)?)?;
    m.add_function(wrap_pyfunction!(trip_perm, m)?)?;
    m.add_function(wrap_pyfunction!(g_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
