//! Python bindings. Functions mirror the Rust API; degree distributions can
//! be passed either as `DegreeDistribution` objects or as strings in the
//! command-line syntax (`"2:1"`, `"1:0.5,3:0.5"`, `"regular:2"`, `"poisson:4"`).

use ldgm_bounds::bounds::{self, linear_grid, sample_curve};
use ldgm_bounds::exact::{self, distortion_grid};
use ldgm_bounds::{numerics, BoundSpec, DegreeSpec, Error};
use num_bigint::BigUint;
use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;

fn err(e: Error) -> PyErr {
    match e {
        Error::Io(io) => PyIOError::new_err(io.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

#[pyclass(name = "DegreeDistribution", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyDegreeDistribution(ldgm_bounds::DegreeDistribution);

#[pymethods]
impl PyDegreeDistribution {
    /// Parses a literal `"d:frac,..."` or `"regular:<l>"`.
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        match spec.parse::<DegreeSpec>().map_err(err)? {
            DegreeSpec::Poisson(_) => Err(PyValueError::new_err(
                "poisson laws depend on the rate; use DegreeDistribution.poisson(r, rate)",
            )),
            s => Ok(Self(s.resolve(1.0).map_err(err)?)),
        }
    }

    #[staticmethod]
    fn regular(l: u32) -> PyResult<Self> {
        Ok(Self(
            ldgm_bounds::DegreeDistribution::regular(l).map_err(err)?,
        ))
    }

    #[staticmethod]
    fn poisson(r: f64, rate: f64) -> PyResult<Self> {
        Ok(Self(
            ldgm_bounds::DegreeDistribution::poisson(r, rate).map_err(err)?,
        ))
    }

    #[getter]
    fn entries(&self) -> Vec<(u32, f64)> {
        self.0.entries().to_vec()
    }

    #[getter]
    fn average_degree(&self) -> f64 {
        self.0.average_degree()
    }

    #[getter]
    fn second_moment(&self) -> f64 {
        self.0.second_moment()
    }

    #[getter]
    fn max_degree(&self) -> u32 {
        self.0.max_degree()
    }

    fn log2_f(&self, x: f64) -> PyResult<f64> {
        self.0.log2_f(x).map_err(err)
    }

    fn a(&self, x: f64) -> PyResult<f64> {
        self.0.a(x).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("DegreeDistribution('{}')", self.0)
    }
}

/// Resolves a degree argument at `rate`.
fn degrees(obj: &Bound<'_, PyAny>, rate: f64) -> PyResult<ldgm_bounds::DegreeDistribution> {
    if let Ok(d) = obj.extract::<PyRef<'_, PyDegreeDistribution>>() {
        return Ok(d.0.clone());
    }
    let spec: String = obj.extract()?;
    spec.parse::<DegreeSpec>()
        .and_then(|s| s.resolve(rate))
        .map_err(err)
}

#[pyclass(name = "VerificationReport", frozen)]
struct PyVerificationReport(ldgm_bounds::VerificationReport);

#[pymethods]
impl PyVerificationReport {
    #[getter]
    fn passed(&self) -> bool {
        self.0.passed()
    }

    #[getter]
    fn optimal_distortion(&self) -> f64 {
        self.0.optimal_distortion
    }

    #[getter]
    fn counting_bound(&self) -> f64 {
        self.0.counting_bound
    }

    #[getter]
    fn bound_margin(&self) -> f64 {
        self.0.bound_margin
    }

    #[getter]
    fn min_cover_margin(&self) -> f64 {
        self.0.min_cover_margin()
    }

    /// First `w` with cumulative `A(w) < N(w)`, or `None`.
    #[getter]
    fn enumerator_violation(&self) -> Option<usize> {
        self.0.enumerator.first_violation
    }

    fn __repr__(&self) -> String {
        format!(
            "VerificationReport(passed={}, optimal_distortion={}, counting_bound={})",
            self.0.passed(),
            self.0.optimal_distortion,
            self.0.counting_bound
        )
    }
}

#[pyclass(name = "LdgmCode", frozen)]
struct PyLdgmCode(ldgm_bounds::LdgmCode);

#[pymethods]
impl PyLdgmCode {
    /// `adjacency[g]` lists the source positions of generator `g`.
    #[new]
    fn new(m: usize, adjacency: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(Self(ldgm_bounds::LdgmCode::new(m, adjacency).map_err(err)?))
    }

    #[staticmethod]
    #[pyo3(signature = (m, n, degrees, seed = 0))]
    fn sample(m: usize, n: usize, degrees: &Bound<'_, PyAny>, seed: u64) -> PyResult<Self> {
        let rate = if m > 0 && n > 0 {
            n as f64 / m as f64
        } else {
            1.0
        };
        let dist = self::degrees(degrees, rate)?;
        Ok(Self(
            ldgm_bounds::LdgmCode::sample(m, n, &dist, seed).map_err(err)?,
        ))
    }

    /// Parses the code file format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(Self(text.parse().map_err(err)?))
    }

    fn to_text(&self) -> String {
        self.0.to_string()
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.m()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn rate(&self) -> f64 {
        self.0.rate()
    }

    #[getter]
    fn adjacency(&self) -> Vec<Vec<usize>> {
        self.0.adjacency().to_vec()
    }

    fn encode(&self, word: Vec<bool>) -> PyResult<Vec<bool>> {
        self.0.encode(&word).map_err(err)
    }

    /// `A(w)` for `w = 0..=m`.
    fn weight_enumerator(&self) -> PyResult<Vec<u64>> {
        Ok(exact::weight_enumerator(&self.0)
            .map_err(err)?
            .counts()
            .to_vec())
    }

    /// Number of source words at each distance from the code.
    fn distance_histogram(&self) -> PyResult<Vec<u64>> {
        Ok(exact::distance_transform(&self.0)
            .map_err(err)?
            .histogram()
            .to_vec())
    }

    fn optimal_distortion(&self) -> PyResult<f64> {
        exact::optimal_average_distortion(&self.0).map_err(err)
    }

    /// Checks the code against the bounds; `degrees` defaults to the code's
    /// own generator degrees.
    #[pyo3(signature = (degrees = None, d_steps = 26))]
    fn verify(
        &self,
        degrees: Option<&Bound<'_, PyAny>>,
        d_steps: usize,
    ) -> PyResult<PyVerificationReport> {
        let dist = match degrees {
            Some(obj) => self::degrees(obj, self.0.rate())?,
            None => self
                .0
                .degree_distribution()
                .ok_or_else(|| PyValueError::new_err("code has no generators; pass degrees"))?,
        };
        let report = exact::verify_code(&self.0, &dist, &distortion_grid(d_steps)).map_err(err)?;
        Ok(PyVerificationReport(report))
    }

    fn __repr__(&self) -> String {
        format!("LdgmCode(m={}, n={})", self.0.m(), self.0.n())
    }
}

#[pyfunction]
fn binary_entropy(p: f64) -> PyResult<f64> {
    numerics::binary_entropy(p).map_err(err)
}

#[pyfunction]
fn inverse_binary_entropy(y: f64) -> PyResult<f64> {
    numerics::inverse_binary_entropy(y).map_err(err)
}

#[pyfunction]
fn kl_bernoulli(d: f64, dp: f64) -> PyResult<f64> {
    numerics::kl_bernoulli(d, dp).map_err(err)
}

#[pyfunction]
fn shannon_distortion(rate: f64) -> PyResult<f64> {
    bounds::shannon_distortion(rate).map_err(err)
}

#[pyfunction]
fn counting_bound_distortion(degrees: &Bound<'_, PyAny>, rate: f64) -> PyResult<f64> {
    let dist = self::degrees(degrees, rate)?;
    bounds::counting_bound_distortion(&dist, rate).map_err(err)
}

/// `(g(D, R), minimising x)`.
#[pyfunction]
fn g_exponent(degrees: &Bound<'_, PyAny>, d: f64, rate: f64) -> PyResult<(f64, f64)> {
    let dist = self::degrees(degrees, rate)?;
    let g = bounds::g_exponent(&dist, d, rate).map_err(err)?;
    Ok((g.value, g.minimizer_x))
}

#[pyfunction]
fn test_channel_rate_bound(l: u32, d: f64) -> PyResult<f64> {
    bounds::test_channel_rate_bound(l, d).map_err(err)
}

#[pyfunction]
fn test_channel_distortion_bound(l: u32, rate: f64) -> PyResult<f64> {
    bounds::test_channel_distortion_bound(l, rate).map_err(err)
}

#[pyfunction]
fn dwr_rate_boundary(r: u32, d: f64) -> PyResult<f64> {
    bounds::dwr_rate_boundary(r, d).map_err(err)
}

#[pyfunction]
fn dwr_distortion_bound(r: u32, rate: f64) -> PyResult<f64> {
    bounds::dwr_distortion_bound(r, rate).map_err(err)
}

/// Not a proven bound.
#[pyfunction]
fn conjectured_exit_rate(l: u32, d: f64) -> PyResult<f64> {
    bounds::conjectured_exit_rate(l, d).map_err(err)
}

/// Not a proven bound.
#[pyfunction]
fn conjectured_exit_distortion(l: u32, rate: f64) -> PyResult<f64> {
    bounds::conjectured_exit_distortion(l, rate).map_err(err)
}

/// `N(w)` for `w = 0 ..= n L'`, as Python integers.
#[pyfunction]
fn coefficient_lower_bound(degrees: &Bound<'_, PyAny>, n: usize) -> PyResult<Vec<BigUint>> {
    let dist = self::degrees(degrees, 1.0)?;
    exact::coefficient_lower_bound(&dist, n).map_err(err)
}

/// `[(D, R), ...]` for `bound` in `shannon`, `counting`, `test-channel`,
/// `dwr`, `conjecture` on `steps` rates from `rate_min` to `rate_max`.
#[pyfunction]
#[pyo3(signature = (bound, rate_min = 0.0, rate_max = 1.0, steps = 101, degrees = None, l = None, r = None))]
fn curve(
    bound: &str,
    rate_min: f64,
    rate_max: f64,
    steps: usize,
    degrees: Option<&str>,
    l: Option<u32>,
    r: Option<u32>,
) -> PyResult<Vec<(f64, f64)>> {
    let need = |v: Option<u32>, what: &str| {
        v.ok_or_else(|| PyValueError::new_err(format!("{bound} needs {what}")))
    };
    let spec = match bound {
        "shannon" => BoundSpec::Shannon,
        "counting" => BoundSpec::Counting(
            degrees
                .ok_or_else(|| PyValueError::new_err("counting needs degrees"))?
                .parse()
                .map_err(err)?,
        ),
        "test-channel" => BoundSpec::TestChannel { l: need(l, "l")? },
        "dwr" => BoundSpec::Dwr { r: need(r, "r")? },
        "conjecture" => BoundSpec::ConjecturedExit { l: need(l, "l")? },
        other => return Err(PyValueError::new_err(format!("unknown bound {other:?}"))),
    };
    let grid = linear_grid(rate_min, rate_max, steps).map_err(err)?;
    let c = sample_curve(&spec, &grid).map_err(err)?;
    Ok(c.points.iter().map(|p| (p.distortion, p.rate)).collect())
}

#[pymodule(name = "ldgm_bounds")]
fn ldgm_bounds_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDegreeDistribution>()?;
    m.add_class::<PyLdgmCode>()?;
    m.add_class::<PyVerificationReport>()?;
    m.add_function(wrap_pyfunction!(binary_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(inverse_binary_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(kl_bernoulli, m)?)?;
    m.add_function(wrap_pyfunction!(shannon_distortion, m)?)?;
    m.add_function(wrap_pyfunction!(counting_bound_distortion, m)?)?;
    m.add_function(wrap_pyfunction!(g_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(test_channel_rate_bound, m)?)?;
    m.add_function(wrap_pyfunction!(test_channel_distortion_bound, m)?)?;
    m.add_function(wrap_pyfunction!(dwr_rate_boundary, m)?)?;
    m.add_function(wrap_pyfunction!(dwr_distortion_bound, m)?)?;
    m.add_function(wrap_pyfunction!(conjectured_exit_rate, m)?)?;
    m.add_function(wrap_pyfunction!(conjectured_exit_distortion, m)?)?;
    m.add_function(wrap_pyfunction!(coefficient_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(curve, m)?)?;
    Ok(())
}
