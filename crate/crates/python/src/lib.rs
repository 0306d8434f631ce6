//! Python bindings for shearlab.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use shearlab::cli::{ScenarioConfig, SweepModel};
use shearlab::hyper::{shear_stress as core_shear_stress, HyperelasticModel};
use shearlab::hypo::{self, HypoProblem, RateKind, SpinKind};
use shearlab::kinematics::{self, ShearMode};
use shearlab::strain::{self, ScaleFunction};
use shearlab::tensor::{self, SymTensor2, Tensor2, EIGEN_TOL};
use shearlab::verify::{run_all, Profile};

type Matrix = [[f64; 2]; 2];

fn err(e: shearlab::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr<Err = shearlab::Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(err)
}

fn sym_from(m: Matrix) -> PyResult<SymTensor2> {
    if m[0][1] != m[1][0] {
        return Err(PyValueError::new_err("matrix is not symmetric"));
    }
    Ok(SymTensor2::new(m[0][0], m[1][1], m[0][1]))
}

fn spin_kind(name: &str) -> PyResult<SpinKind> {
    match name.trim().to_ascii_lowercase().as_str() {
        "zj" => Ok(SpinKind::Zj),
        "gn" => Ok(SpinKind::Gn),
        "gs" => Ok(SpinKind::Gs),
        "log" => Ok(SpinKind::Log),
        other => Err(PyValueError::new_err(format!("unknown spin: {other}"))),
    }
}

/// Motion parameters `(a, b, c)` of a shear path.
#[pyfunction]
fn motion_parameters(mode: &str, alpha: f64) -> PyResult<(f64, f64, f64)> {
    let p = kinematics::motion_parameters(parse(mode)?, alpha);
    Ok((p.a, p.b, p.c))
}

#[pyfunction]
fn deformation_gradient(mode: &str, alpha: f64) -> PyResult<Matrix> {
    Ok(kinematics::deformation_gradient(parse(mode)?, alpha).to_rows())
}

/// Shear amount and shear angle in degrees.
#[pyfunction]
fn shear_angle(mode: &str, alpha: f64) -> PyResult<(f64, f64)> {
    Ok(kinematics::kinematic_state(parse(mode)?, alpha).map_err(err)?.shear_angle_deg())
}

/// Polar factors `(R, U, V)` of a deformation gradient.
#[pyfunction]
fn polar_decompose(f: Matrix) -> PyResult<(Matrix, Matrix, Matrix)> {
    let p = tensor::polar_decompose(&Tensor2::from_rows(f)).map_err(err)?;
    Ok((p.r.to_rows(), p.u.to_rows(), p.v.to_rows()))
}

/// Eigenvalues and eigenprojections of a symmetric matrix.
#[pyfunction]
fn spectral_decompose(s: Matrix) -> PyResult<(Vec<f64>, Vec<Matrix>)> {
    let spec = tensor::spectral_decompose(&sym_from(s)?, EIGEN_TOL).map_err(err)?;
    let n = spec.eigenindex;
    Ok((spec.eigenvalues[..n].to_vec(), spec.projections[..n].iter().map(|p| p.to_rows()).collect()))
}

#[pyfunction]
fn scale_eval(scale: &str, stretch: f64) -> PyResult<f64> {
    strain::scale_eval(&parse::<ScaleFunction>(scale)?, stretch).map_err(err)
}

#[pyfunction]
fn scale_derivative(scale: &str, stretch: f64) -> PyResult<f64> {
    strain::scale_derivative(&parse::<ScaleFunction>(scale)?, stretch).map_err(err)
}

/// Hill strain of a symmetric positive-definite stretch.
#[pyfunction]
fn strain_from_stretch(scale: &str, stretch: Matrix) -> PyResult<Matrix> {
    Ok(strain::strain_from_stretch(&parse::<ScaleFunction>(scale)?, &sym_from(stretch)?).map_err(err)?.to_rows())
}

/// Cauchy stress and rotated stress of a hyperelastic model on a shear path.
#[pyfunction]
#[pyo3(signature = (model, mode, alpha, mu = 1.0, lame = 0.0))]
fn shear_stress(model: &str, mode: &str, alpha: f64, mu: f64, lame: f64) -> PyResult<(Matrix, Matrix)> {
    let m = HyperelasticModel::parse(model, mu, lame).map_err(err)?;
    let p = core_shear_stress(&m, parse(mode)?, alpha).map_err(err)?;
    Ok((p.sigma.to_rows(), p.sigma_bar.to_rows()))
}

/// Hypoelastic stress trajectory as `(alpha, sigma, sigma_bar)` samples.
#[pyfunction]
#[pyo3(signature = (rate, mode, alpha_max, steps, mu = 1.0, lame = 0.0, sigma12_0 = 0.0))]
fn hypo_trajectory(
    rate: &str,
    mode: &str,
    alpha_max: f64,
    steps: usize,
    mu: f64,
    lame: f64,
    sigma12_0: f64,
) -> PyResult<Vec<(f64, Matrix, Matrix)>> {
    let problem = HypoProblem::new(parse::<RateKind>(rate)?, parse(mode)?, mu, alpha_max, steps)
        .with_lambda(lame)
        .with_sigma0(SymTensor2::shear(sigma12_0));
    let traj = problem.solve().map_err(err)?;
    Ok(traj.samples.iter().map(|s| (s.alpha, s.sigma.to_rows(), s.sigma_bar.to_rows())).collect())
}

/// Rows `[alpha, s11, s22, s12, sb11, sb22, sb12]` on a uniform grid.
#[pyfunction]
#[pyo3(signature = (model, mode = "lfss", alpha_max = 1.5, points = 151, steps = 10000, mu = 1.0, lame = 0.0, sigma12_0 = None))]
#[allow(clippy::too_many_arguments)]
fn sweep(
    model: &str,
    mode: &str,
    alpha_max: f64,
    points: usize,
    steps: usize,
    mu: f64,
    lame: f64,
    sigma12_0: Option<f64>,
) -> PyResult<Vec<[f64; 7]>> {
    let config = ScenarioConfig {
        models: vec![model.to_string()],
        mode: parse(mode)?,
        alpha_max,
        points,
        steps,
        mu,
        lambda: lame,
        sigma12_0,
        out: None,
    };
    config.validate().map_err(err)?;
    let m = SweepModel::parse(model, mu, lame).map_err(err)?;
    let rows = shearlab::cli::sweep_model(&config, &m).map_err(err)?;
    Ok(rows
        .iter()
        .map(|r| [r.alpha, r.sigma.s11, r.sigma.s22, r.sigma.s12, r.sigma_bar.s11, r.sigma_bar.s22, r.sigma_bar.s12])
        .collect())
}

#[pyfunction]
fn g12(spin: &str, alpha: f64) -> PyResult<f64> {
    hypo::g12(spin_kind(spin)?, alpha).map_err(err)
}

#[pyfunction]
fn k_factor(spin: &str, alpha: f64) -> PyResult<f64> {
    Ok(hypo::k_factor(spin_kind(spin)?, alpha))
}

/// Outcome of one acceptance check.
#[pyclass(frozen, get_all)]
struct Check {
    id: u8,
    title: String,
    passed: bool,
    measured: f64,
    tolerance: f64,
    worst: String,
    failures: Vec<String>,
}

#[pymethods]
impl Check {
    fn __repr__(&self) -> String {
        format!("Check(id={}, passed={}, title={:?})", self.id, if self.passed { "True" } else { "False" }, self.title)
    }
}

/// Runs the acceptance checks.
#[pyfunction]
#[pyo3(signature = (profile = "default"))]
fn verify(py: Python<'_>, profile: &str) -> PyResult<Vec<Check>> {
    let profile: Profile = parse(profile)?;
    let results = py.detach(|| run_all(profile));
    Ok(results
        .into_iter()
        .map(|r| Check {
            id: r.id,
            title: r.title.to_string(),
            passed: r.passed,
            measured: r.measured,
            tolerance: r.tolerance,
            worst: r.worst,
            failures: r.failures,
        })
        .collect())
}

#[pymodule]
fn shearlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Check>()?;
    m.add_function(wrap_pyfunction!(motion_parameters, m)?)?;
    m.add_function(wrap_pyfunction!(deformation_gradient, m)?)?;
    m.add_function(wrap_pyfunction!(shear_angle, m)?)?;
    m.add_function(wrap_pyfunction!(polar_decompose, m)?)?;
    m.add_function(wrap_pyfunction!(spectral_decompose, m)?)?;
    m.add_function(wrap_pyfunction!(scale_eval, m)?)?;
    m.add_function(wrap_pyfunction!(scale_derivative, m)?)?;
    m.add_function(wrap_pyfunction!(strain_from_stretch, m)?)?;
    m.add_function(wrap_pyfunction!(shear_stress, m)?)?;
    m.add_function(wrap_pyfunction!(hypo_trajectory, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(g12, m)?)?;
    m.add_function(wrap_pyfunction!(k_factor, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("MODES", ShearMode::ALL.map(|m| m.name()).to_vec())?;
    m.add("RATES", RateKind::ALL.map(|r| r.name()).to_vec())?;
    Ok(())
}
