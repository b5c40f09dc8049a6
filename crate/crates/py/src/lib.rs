//! Python bindings: `import qutrit333`.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use qutrit_invariants::closed_form::{invariants_ss, s_index};
use qutrit_invariants::optimize::{maximize_abs, perturb_and_ascend, PerturbConfig};
use qutrit_invariants::states::{named_state, semisimple_to_tensor, DIM};
use qutrit_invariants::{
    fundamental_invariants, io, stats, InvariantSet, NamedState, Objective, OptConfig, OptResult, QutritState,
    SemiSimpleCoeffs,
};

/// `(a, b, c, abs_i6, abs_i9, abs_i12, abs_delta, s_i)`.
type Row = (f64, f64, f64, f64, f64, f64, f64, f64);
/// `(theta, phi, values)`.
type Grid = (Vec<f64>, Vec<f64>, Vec<Vec<f64>>);

fn py_err(e: qutrit_invariants::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_objective(name: &str) -> PyResult<Objective> {
    name.parse().map_err(py_err)
}

/// A 27-amplitude three-qutrit state, amplitude index `9i + 3j + k`.
#[pyclass(name = "State", module = "qutrit333", frozen)]
struct PyState(QutritState);

#[pymethods]
impl PyState {
    #[new]
    fn new(amplitudes: Vec<Complex64>) -> PyResult<Self> {
        let amps: [Complex64; DIM] = amplitudes
            .try_into()
            .map_err(|v: Vec<_>| PyValueError::new_err(format!("expected {DIM} amplitudes, got {}", v.len())))?;
        Ok(PyState(QutritState::from_amplitudes(amps)))
    }

    /// Tags as accepted by `q333 named`, e.g. `"aharonov"` or `"maxdelta:3"`.
    #[staticmethod]
    fn named(tag: &str) -> PyResult<Self> {
        let tag: NamedState = tag.parse().map_err(py_err)?;
        named_state(&tag).map(PyState).map_err(py_err)
    }

    /// `a v1 + b v2 + c v3`, not normalized.
    #[staticmethod]
    fn semisimple(a: f64, b: f64, c: f64) -> Self {
        PyState(semisimple_to_tensor(SemiSimpleCoeffs::from_array([a, b, c])))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::state_from_json(text).map(PyState).map_err(py_err)
    }

    fn to_json(&self) -> PyResult<String> {
        io::state_to_json(&self.0).map_err(py_err)
    }

    fn amplitudes(&self) -> Vec<Complex64> {
        self.0.amplitudes().to_vec()
    }

    fn norm(&self) -> f64 {
        self.0.norm()
    }

    fn normalized(&self) -> Self {
        PyState(self.0.normalized())
    }

    fn invariants(&self) -> PyInvariants {
        PyInvariants(fundamental_invariants(&self.0))
    }

    /// Random single-coordinate ascent of `|Δ333|` over all amplitudes.
    #[pyo3(signature = (amplitude=1e-2, max_accepted=100_000, seed=0))]
    fn perturb(&self, amplitude: f64, max_accepted: usize, seed: u64) -> PyResult<(PyState, f64)> {
        let cfg = PerturbConfig { amplitude, max_accepted, rng_seed: seed, ..PerturbConfig::default() };
        let r = perturb_and_ascend(&self.0, &cfg).map_err(py_err)?;
        Ok((PyState(r.state), r.value))
    }

    fn __len__(&self) -> usize {
        DIM
    }

    fn __repr__(&self) -> String {
        format!("State(norm={:.6})", self.0.norm())
    }
}

#[pyclass(name = "Invariants", module = "qutrit333", frozen)]
struct PyInvariants(InvariantSet);

#[pymethods]
impl PyInvariants {
    #[getter]
    fn i6(&self) -> Complex64 {
        self.0.i6
    }

    #[getter]
    fn i9(&self) -> Complex64 {
        self.0.i9
    }

    #[getter]
    fn i12(&self) -> Complex64 {
        self.0.i12
    }

    #[getter]
    fn delta333(&self) -> Complex64 {
        self.0.delta333
    }

    /// `(|I6|, |I9|, |I12|, |Δ333|)`.
    fn magnitudes(&self) -> (f64, f64, f64, f64) {
        let [a, b, c, d] = self.0.magnitudes();
        (a, b, c, d)
    }

    fn s_index(&self) -> f64 {
        s_index(&self.0)
    }

    fn __repr__(&self) -> String {
        let [a, b, c, d] = self.0.magnitudes();
        format!("Invariants(|I6|={a:.6e}, |I9|={b:.6e}, |I12|={c:.6e}, |Delta333|={d:.6e})")
    }
}

#[pyclass(name = "OptResult", module = "qutrit333", frozen)]
struct PyOptResult(OptResult);

#[pymethods]
impl PyOptResult {
    #[getter]
    fn best_point(&self) -> [f64; 3] {
        self.0.best_point.to_array()
    }

    #[getter]
    fn best_value(&self) -> f64 {
        self.0.best_value
    }

    #[getter]
    fn local_optima(&self) -> Vec<([f64; 3], f64)> {
        self.0.all_local_optima.iter().map(|o| (o.point.to_array(), o.value)).collect()
    }

    #[getter]
    fn matched_known(&self) -> Option<usize> {
        self.0.matched_known
    }

    #[getter]
    fn restarts_converged(&self) -> usize {
        self.0.restarts_converged
    }

    #[pyo3(signature = (verbose=false))]
    fn to_json(&self, verbose: bool) -> PyResult<String> {
        self.0.to_json(verbose).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("OptResult({}, best_value={:.6e})", self.0.objective, self.0.best_value)
    }
}

/// Closed-form invariants of the semi-simple state `a v1 + b v2 + c v3`.
#[pyfunction]
fn closed_form(a: f64, b: f64, c: f64) -> PyInvariants {
    PyInvariants(invariants_ss(SemiSimpleCoeffs::from_array([a, b, c])))
}

/// Multistart maximization of `|objective|` on the unit sphere of semi-simple
/// coefficients. Objectives: `i6`, `i9`, `i12`, `delta`, `s_index`.
#[pyfunction]
#[pyo3(signature = (objective, restarts=64, max_iters=2000, step=0.05, tol_grad=1e-12, seed=0))]
fn maximize(
    py: Python<'_>,
    objective: &str,
    restarts: usize,
    max_iters: usize,
    step: f64,
    tol_grad: f64,
    seed: u64,
) -> PyResult<PyOptResult> {
    let obj = parse_objective(objective)?;
    let cfg = OptConfig { restarts, max_iters, step, tol_grad, rng_seed: seed };
    py.detach(|| maximize_abs(obj, &cfg)).map(PyOptResult).map_err(py_err)
}

/// `n` random semi-simple states (uniform on `[-1,1]³`, then normalized) with `|I6|, |I9|, |I12|, |Δ333|, S_I`.
/// Returns a list of `(a, b, c, abs_i6, abs_i9, abs_i12, abs_delta, s_i)`.
#[pyfunction]
#[pyo3(signature = (n, seed=0))]
fn sample(py: Python<'_>, n: usize, seed: u64) -> PyResult<Vec<Row>> {
    let rows = py.detach(|| stats::sample_and_evaluate(n, seed)).map_err(py_err)?;
    Ok(rows.iter().map(|r| (r.a, r.b, r.c, r.abs_i6, r.abs_i9, r.abs_i12, r.abs_delta, r.s_i)).collect())
}

/// Histogram of `|objective|` over `n` samples on `[0, max]`; returns
/// `(bin_edges, counts)`.
#[pyfunction]
#[pyo3(signature = (objective, n, bins=100, seed=0))]
fn histogram(py: Python<'_>, objective: &str, n: usize, bins: usize, seed: u64) -> PyResult<(Vec<f64>, Vec<u64>)> {
    let obj = parse_objective(objective)?;
    let h = py
        .detach(|| {
            let cols = stats::sample_columns(n, seed, &[obj])?;
            stats::histogram(&cols[0], bins, obj.scale())
        })
        .map_err(py_err)?;
    Ok((h.bin_edges, h.counts))
}

/// `objective` on a `(θ, φ)` grid; returns `(theta, phi, values)` with
/// `values[i][j]` at `(theta[i], phi[j])`.
#[pyfunction]
#[pyo3(signature = (objective, n_theta=91, n_phi=180))]
fn sphere_grid(objective: &str, n_theta: usize, n_phi: usize) -> PyResult<Grid> {
    let g = stats::sphere_grid(parse_objective(objective)?, n_theta, n_phi).map_err(py_err)?;
    Ok((g.theta, g.phi, g.values))
}

#[pymodule]
fn qutrit333(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyState>()?;
    m.add_class::<PyInvariants>()?;
    m.add_class::<PyOptResult>()?;
    m.add_function(wrap_pyfunction!(closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(maximize, m)?)?;
    m.add_function(wrap_pyfunction!(sample, m)?)?;
    m.add_function(wrap_pyfunction!(histogram, m)?)?;
    m.add_function(wrap_pyfunction!(sphere_grid, m)?)?;
    Ok(())
}
