//! Python bindings for `vwb-core`.
//!
//! Errors from the core surface as `ValueError`. Structured results come back as
//! plain dicts or tuples; `verify` returns the JSON report text.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use vwb_core::chow::{chi_end0_twist, ChernPair};
use vwb_core::cohomology::{h_blowup7, h_p1xp1, h_p2, BidegreeLine, BlowupLine};
use vwb_core::fixed_points::{enumerate_fixed, StabilityFlag};
use vwb_core::moduli::{self, HyperDim};
use vwb_core::schwarzenberger::{self as sz, H1Mode};
use vwb_core::split;
use vwb_core::verify::{self, VerifyConfig};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_mode(mode: &str) -> PyResult<H1Mode> {
    match mode {
        "paper" => Ok(H1Mode::Paper),
        "derived" => Ok(H1Mode::Derived),
        other => Err(PyValueError::new_err(format!("mode must be 'paper' or 'derived', got {other:?}"))),
    }
}

fn seven(t: Vec<i64>) -> PyResult<[i64; 7]> {
    t.try_into()
        .map_err(|v: Vec<i64>| PyValueError::new_err(format!("expected 7 integers, got {}", v.len())))
}

fn hyper_dict<'py>(py: Python<'py>, h: HyperDim) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    match h {
        HyperDim::Known { value } => {
            d.set_item("kind", "known")?;
            d.set_item("value", value)?;
        }
        HyperDim::Unknown { h1_untwisted, h1_twisted } => {
            d.set_item("kind", "unknown")?;
            d.set_item("h1_untwisted", h1_untwisted)?;
            d.set_item("h1_twisted", h1_twisted)?;
        }
        HyperDim::Inconsistent { claimed, assembled } => {
            d.set_item("kind", "inconsistent")?;
            d.set_item("claimed", claimed)?;
            d.set_item("assembled", assembled)?;
        }
    }
    Ok(d)
}

/// Type-1 bundle `f_* O(r, s)`.
#[pyclass(name = "L1Bundle", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct PyL1Bundle {
    inner: sz::L1Bundle,
}

#[pymethods]
impl PyL1Bundle {
    #[new]
    fn new(r: i64, s: i64) -> Self {
        Self {
            inner: sz::L1Bundle::new(r, s),
        }
    }

    #[getter]
    fn r(&self) -> i64 {
        self.inner.r()
    }

    #[getter]
    fn s(&self) -> i64 {
        self.inner.s()
    }

    /// `(c1, c2)`
    fn chern(&self) -> (i64, i64) {
        let c = self.inner.chern();
        (c.c1, c.c2)
    }

    fn is_stable(&self) -> bool {
        self.inner.is_stable()
    }

    fn h0_end0(&self, d: u64) -> u64 {
        self.inner.h0_end0(d)
    }

    #[pyo3(signature = (d, mode = "derived"))]
    fn h1_end0(&self, d: u64, mode: &str) -> PyResult<u64> {
        Ok(self.inner.h1_end0(d, parse_mode(mode)?))
    }

    fn h2_end0(&self, d: u64) -> u64 {
        self.inner.h2_end0(d)
    }

    #[pyo3(signature = (d, mode = "derived"))]
    fn hyper_h1<'py>(&self, py: Python<'py>, d: u64, mode: &str) -> PyResult<Bound<'py, PyDict>> {
        let h = moduli::hyper_h1_dim(&self.inner, d, parse_mode(mode)?).map_err(value_err)?;
        hyper_dict(py, h)
    }

    #[pyo3(signature = (d, mode = "derived"))]
    fn hyper_h2<'py>(&self, py: Python<'py>, d: u64, mode: &str) -> PyResult<Bound<'py, PyDict>> {
        let h = moduli::hyper_h2_dim(&self.inner, d, parse_mode(mode)?).map_err(value_err)?;
        hyper_dict(py, h)
    }

    fn in_conflict_regime(&self, d: u64) -> bool {
        moduli::in_conflict_regime(&self.inner, d)
    }

    fn __repr__(&self) -> String {
        format!("L1Bundle(r={}, s={})", self.inner.r(), self.inner.s())
    }
}

/// Type-2 bundle `g_* L^{p,t}` from the seven-point blow-up.
#[pyclass(name = "L2Bundle", frozen, skip_from_py_object)]
#[derive(Clone, Copy)]
struct PyL2Bundle {
    inner: sz::L2Bundle,
}

#[pymethods]
impl PyL2Bundle {
    #[new]
    fn new(p: i64, t: Vec<i64>) -> PyResult<Self> {
        Ok(Self {
            inner: sz::L2Bundle::new(p, seven(t)?),
        })
    }

    fn chern(&self) -> (i64, i64) {
        let c = self.inner.chern();
        (c.c1, c.c2)
    }

    fn is_stable(&self) -> PyResult<bool> {
        self.inner.is_stable().map_err(value_err)
    }
}

/// One component of the fixed locus.
#[pyclass(name = "FixedComponent", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
struct PyFixedComponent {
    m: i64,
    j: i64,
    l1: u64,
    l2: u64,
    higgs_dim: u64,
    stability_flag: &'static str,
}

#[pymethods]
impl PyFixedComponent {
    fn __repr__(&self) -> String {
        format!(
            "FixedComponent(m={}, j={}, l1={}, l2={}, higgs_dim={}, stability_flag={:?})",
            self.m, self.j, self.l1, self.l2, self.higgs_dim, self.stability_flag
        )
    }
}

#[pyfunction]
#[pyo3(name = "enumerate_fixed")]
fn py_enumerate_fixed(c1: i64, c2: i64, d: u64) -> Vec<PyFixedComponent> {
    enumerate_fixed(c1, c2, d)
        .into_iter()
        .map(|c| PyFixedComponent {
            m: c.m,
            j: c.j,
            l1: c.l1,
            l2: c.l2,
            higgs_dim: c.higgs_dim,
            stability_flag: match c.stability_flag {
                StabilityFlag::Stable => "stable",
                StabilityFlag::StrictlySemistableCandidate => "strictly_semistable_candidate",
                StabilityFlag::Candidate => "candidate",
            },
        })
        .collect()
}

/// `chi(End_0 E (x) O(d))` for Chern data `(c1, c2)`.
#[pyfunction]
#[pyo3(name = "chi_end0_twist")]
fn py_chi_end0_twist(c1: i64, c2: i64, d: i64) -> PyResult<i64> {
    chi_end0_twist(ChernPair::new(c1, c2), d).map_err(value_err)
}

#[pyfunction]
fn cohom_p2(k: i64) -> PyResult<(u64, u64, u64)> {
    let h = |i| h_p2(i, k).map_err(value_err);
    Ok((h(0)?, h(1)?, h(2)?))
}

#[pyfunction]
fn cohom_quadric(a: i64, b: i64) -> PyResult<(u64, u64, u64)> {
    let line = BidegreeLine::new(a, b);
    let h = |i| h_p1xp1(i, line).map_err(value_err);
    Ok((h(0)?, h(1)?, h(2)?))
}

/// `(h0, h1)` from the blow-up formulas, each as `(value, raw)`.
#[pyfunction]
fn cohom_blowup7(p: i64, t: Vec<i64>) -> PyResult<((u64, i64), (u64, i64))> {
    let line = BlowupLine::new(p, seven(t)?);
    let h0 = h_blowup7(0, &line).map_err(value_err)?;
    let h1 = h_blowup7(1, &line).map_err(value_err)?;
    Ok(((h0.value, h0.raw), (h1.value, h1.raw)))
}

/// `(total, modulo_conj)` for Higgs fields on `O + O(m)` twisted by `d`.
#[pyfunction]
fn higgs_param_count(m: i64, d: i64) -> PyResult<(u64, u64)> {
    let c = split::higgs_param_count(m, d).map_err(value_err)?;
    Ok((c.total, c.modulo_conj))
}

#[pyfunction]
fn tangent_dim_split(m: i64, d: i64) -> PyResult<u64> {
    split::tangent_dim_split(m, d).map_err(value_err)
}

/// Sample a field with the seeded generator and return
/// `(commutant_dim, orbit_dim, quotient_dim)`.
#[pyfunction]
#[pyo3(signature = (m, d, seed = 0))]
fn adjoint_rank_oracle(m: i64, d: i64, seed: u64) -> PyResult<(u64, u64, u64)> {
    let phi = split::random_stable_higgs(m, d, seed).map_err(value_err)?;
    let r = split::adjoint_rank_oracle(m, d, &phi).map_err(value_err)?;
    Ok((r.commutant_dim, r.orbit_dim, r.quotient_dim))
}

/// Run the invariant suite and return the JSON report.
#[pyfunction]
#[pyo3(signature = (d_max = 4, k_max = 6, seeds = 3))]
fn run_verify(d_max: u64, k_max: i64, seeds: u64) -> String {
    verify::run(&VerifyConfig { d_max, k_max, seeds }).to_json()
}

#[pymodule]
fn vwb(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyL1Bundle>()?;
    m.add_class::<PyL2Bundle>()?;
    m.add_class::<PyFixedComponent>()?;
    m.add_function(wrap_pyfunction!(py_enumerate_fixed, m)?)?;
    m.add_function(wrap_pyfunction!(py_chi_end0_twist, m)?)?;
    m.add_function(wrap_pyfunction!(cohom_p2, m)?)?;
    m.add_function(wrap_pyfunction!(cohom_quadric, m)?)?;
    m.add_function(wrap_pyfunction!(cohom_blowup7, m)?)?;
    m.add_function(wrap_pyfunction!(higgs_param_count, m)?)?;
    m.add_function(wrap_pyfunction!(tangent_dim_split, m)?)?;
    m.add_function(wrap_pyfunction!(adjoint_rank_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
