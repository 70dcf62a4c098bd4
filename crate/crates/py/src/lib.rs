//! Python bindings. Exact values cross the boundary as `fractions.Fraction`.

use std::collections::BTreeSet;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use rexspec::exactpoly::{parse_rational, Rational};
use rexspec::extension::{validate as validate_spec, ExtensionSpec, Kind};
use rexspec::ladder::{chain_starts, ladder_down_sq, pha_check};
use rexspec::numverify::{compare_spectrum, GridParams};
use rexspec::super2d::{self, Family};
use rexspec::Error;

/// `(nu, exact, numeric)`.
type LevelTuple = (i64, f64, f64);

fn py_err(e: Error) -> PyErr {
    if e.is_user_error() {
        PyValueError::new_err(e.to_string())
    } else {
        PyRuntimeError::new_err(e.to_string())
    }
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((r.to_string(),))
}

/// Accepts `"7/2"`, an int, or a `Fraction`; floats are rejected to keep α exact.
fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if obj.is_instance_of::<pyo3::types::PyFloat>() {
        return Err(PyValueError::new_err("alpha must be exact: pass \"7/2\" or Fraction(7, 2), not a float"));
    }
    parse_rational(&obj.str()?.to_string()).map_err(py_err)
}

fn spec_from(kind: &str, m: Vec<u32>, alpha: Option<&Bound<'_, PyAny>>) -> PyResult<ExtensionSpec> {
    let kind: Kind = kind.parse().map_err(py_err)?;
    let alpha = alpha.map(to_rational).transpose()?;
    Ok(ExtensionSpec { kind, m, alpha })
}

/// Admissibility violations of a spec; empty when admissible.
#[pyfunction]
#[pyo3(signature = (kind, m, alpha=None))]
fn validate(kind: &str, m: Vec<u32>, alpha: Option<&Bound<'_, PyAny>>) -> PyResult<Vec<String>> {
    let spec = spec_from(kind, m, alpha)?;
    Ok(validate_spec(&spec).violations.iter().map(|v| v.to_string()).collect())
}

/// A validated one-dimensional extended oscillator.
#[pyclass(name = "Extension", frozen)]
struct PyExtension {
    inner: rexspec::extension::Extension,
}

#[pymethods]
impl PyExtension {
    #[new]
    #[pyo3(signature = (kind, m, alpha=None))]
    fn new(kind: &str, m: Vec<u32>, alpha: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        let spec = spec_from(kind, m, alpha)?;
        Ok(Self { inner: rexspec::extension::Extension::new(spec).map_err(py_err)? })
    }

    fn __repr__(&self) -> String {
        format!("Extension({})", self.inner.spec())
    }

    #[getter]
    fn m(&self) -> Vec<u32> {
        self.inner.spec().m.clone()
    }

    fn energy<'py>(&self, py: Python<'py>, nu: i64) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.energy(nu).map_err(py_err)?)
    }

    /// `[(nu, E)]` for every level with `nu <= nu_max`.
    fn spectrum<'py>(&self, py: Python<'py>, nu_max: i64) -> PyResult<Vec<(i64, Bound<'py, PyAny>)>> {
        self.inner.spectrum(nu_max).iter().map(|l| Ok((l.nu, fraction(py, &l.energy)?))).collect()
    }

    /// `{"proportional", "ratio", "energy_shift"}`.
    fn check_equivalence<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = self.inner.check_equivalence().map_err(py_err)?;
        let d = PyDict::new(py);
        d.set_item("proportional", r.proportional)?;
        d.set_item("ratio", fraction(py, &r.ratio)?)?;
        d.set_item("energy_shift", fraction(py, &r.energy_shift)?)?;
        Ok(d)
    }

    fn appendix_a_check(&self) -> PyResult<bool> {
        self.inner.appendix_a_check().map_err(py_err)
    }

    fn potential(&self, x: f64) -> f64 {
        self.inner.potential().eval_f64(x)
    }

    /// Unnormalized eigenfunction value `ψ_ν(x)`.
    fn wavefunction(&self, nu: i64, x: f64) -> PyResult<f64> {
        Ok(self.inner.wavefunction(nu).map_err(py_err)?.eval_f64(x))
    }

    fn ladder_down_sq<'py>(&self, py: Python<'py>, nu: i64) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &ladder_down_sq(&self.inner, nu).map_err(py_err)?)
    }

    fn chain_starts(&self) -> BTreeSet<i64> {
        chain_starts(self.inner.spec())
    }

    /// Number of levels on which the ladder identities were verified.
    fn pha_check(&self, nu_max: i64) -> PyResult<usize> {
        Ok(pha_check(&self.inner, nu_max).map_err(py_err)?.levels_checked)
    }

    /// `(passed, [(nu, exact, numeric)])` for the lowest `count` levels.
    #[pyo3(signature = (count, tolerance, points=4001))]
    fn compare_spectrum(&self, count: usize, tolerance: f64, points: usize) -> PyResult<(bool, Vec<LevelTuple>)> {
        let params = GridParams { points, ..GridParams::default() };
        let r = compare_spectrum(&self.inner, count, tolerance, &params).map_err(py_err)?;
        Ok((r.pass, r.levels.iter().map(|l| (l.nu, l.exact, l.numeric)).collect()))
    }
}

/// A two-dimensional superintegrable system of family a–g.
#[pyclass(name = "System2D", frozen)]
struct PySystem2D {
    inner: super2d::System2D,
}

#[pymethods]
impl PySystem2D {
    #[new]
    #[pyo3(signature = (family, m, n=Vec::new(), alpha=None, alpha_y=None))]
    fn new(
        family: &str,
        m: Vec<u32>,
        n: Vec<u32>,
        alpha: Option<&Bound<'_, PyAny>>,
        alpha_y: Option<&Bound<'_, PyAny>>,
    ) -> PyResult<Self> {
        let family: Family = family.parse().map_err(py_err)?;
        let (kx, ky) = family.kinds();
        let ax = alpha.map(to_rational).transpose()?;
        let ay = match alpha_y {
            Some(a) => Some(to_rational(a)?),
            None => ax.clone(),
        };
        let axis = |kind: Kind, m: Vec<u32>, a: Option<Rational>| -> PyResult<rexspec::extension::Extension> {
            let alpha = match kind {
                Kind::Radial => Some(a.ok_or_else(|| PyValueError::new_err(format!("family {family} needs alpha")))?),
                Kind::Linear => None,
            };
            rexspec::extension::Extension::new(ExtensionSpec { kind, m, alpha }).map_err(py_err)
        };
        let sys = super2d::make_system(family, axis(kx, m, ax)?, axis(ky, n, ay)?).map_err(py_err)?;
        Ok(Self { inner: sys })
    }

    fn __repr__(&self) -> String {
        format!("System2D(family={}, x={}, y={})", self.inner.family, self.inner.x.spec(), self.inner.y.spec())
    }

    fn energy<'py>(&self, py: Python<'py>, n: i64) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &super2d::energy(&self.inner, n))
    }

    /// `[(nu_x, nu_y)]` spanning level `N`.
    fn states(&self, n: i64) -> Vec<(i64, i64)> {
        super2d::states(&self.inner, n).iter().map(|s| (s.nu_x, s.nu_y)).collect()
    }

    fn degeneracy(&self, n: i64) -> PyResult<u64> {
        super2d::degeneracy_closed(&self.inner, n).map_err(py_err)
    }

    /// `{"N", "lambda", "mu", "s", "degeneracy"}` with `s` sorted descending.
    fn unirreps<'py>(&self, py: Python<'py>, n: i64) -> PyResult<Bound<'py, PyDict>> {
        let r = super2d::unirreps(&self.inner, n).map_err(py_err)?;
        let d = PyDict::new(py);
        d.set_item("N", r.n)?;
        d.set_item("lambda", r.lambda)?;
        d.set_item("mu", r.mu)?;
        let s: Vec<Bound<'py, PyAny>> = r.s_multiset().iter().map(|s| fraction(py, s)).collect::<PyResult<_>>()?;
        d.set_item("s", PyList::new(py, s)?)?;
        d.set_item("degeneracy", r.degeneracy)?;
        Ok(d)
    }

    /// `(plus, minus)` sets of annihilated `nu_x` labels.
    fn zero_modes(&self, n: i64) -> PyResult<(BTreeSet<i64>, BTreeSet<i64>)> {
        super2d::zero_modes(&self.inner, n).map_err(py_err)
    }

    /// `(states_checked, product_identity)`; raises on a commutator mismatch.
    fn commutator_check(&self, n_max: i64) -> PyResult<(usize, bool)> {
        let r = super2d::commutator_check(&self.inner, n_max).map_err(py_err)?;
        Ok((r.states_checked, r.product_identity))
    }
}

#[pymodule]
fn rexspec_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyExtension>()?;
    m.add_class::<PySystem2D>()?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    Ok(())
}
