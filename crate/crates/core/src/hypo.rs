//! Hooke-like hypoelastic models `σ° = 2μd + λ tr(d) I` for corotational
//! and Oldroyd stress rates.
//!
//! Two independent solvers are provided: a fourth-order Runge–Kutta
//! integrator of the reduced two-component LFSS system, and a generic
//! second-order incrementally objective integrator that works for every
//! rate and every shear mode.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hyper::StressPair;
use crate::kinematics::{deformation_gradient, kinematic_state, projection_spin, ShearMode};
use crate::tensor::{polar_decompose, rotate_unchecked, spectral_decompose, RotateDirection, SymTensor2, Tensor2, EIGEN_TOL};

/// Absolute tolerance of the adaptive quadrature behind [`theta_angle`].
pub const THETA_QUAD_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpinKind {
    /// Zaremba–Jaumann (vorticity).
    Zj,
    /// Green–Naghdi (polar spin).
    Gn,
    /// Gurtin–Spear (twirl of the Eulerian principal axes).
    Gs,
    /// Logarithmic spin.
    Log,
}

impl SpinKind {
    pub const ALL: [SpinKind; 4] = [SpinKind::Zj, SpinKind::Gn, SpinKind::Gs, SpinKind::Log];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RateKind {
    Corotational(SpinKind),
    /// Contravariant rate; rate form of Ogden-A.
    UpperOldroyd,
    /// Covariant rate; rate form of Ogden-B.
    LowerOldroyd,
}

impl RateKind {
    pub const ALL: [RateKind; 6] = [
        RateKind::Corotational(SpinKind::Zj),
        RateKind::Corotational(SpinKind::Gn),
        RateKind::Corotational(SpinKind::Gs),
        RateKind::Corotational(SpinKind::Log),
        RateKind::UpperOldroyd,
        RateKind::LowerOldroyd,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            RateKind::Corotational(SpinKind::Zj) => "hypo-zj",
            RateKind::Corotational(SpinKind::Gn) => "hypo-gn",
            RateKind::Corotational(SpinKind::Gs) => "hypo-gs",
            RateKind::Corotational(SpinKind::Log) => "hypo-log",
            RateKind::UpperOldroyd => "hypo-a",
            RateKind::LowerOldroyd => "hypo-b",
        }
    }
}

impl fmt::Display for RateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RateKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        RateKind::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or(Error::UnknownName(s))
    }
}

/// `g₁₂` along LFSS/RFSS, i.e. with `λ₁ = e^α`, `λ₂ = e^−α`.
pub fn g12(spin: SpinKind, alpha: f64) -> Result<f64> {
    match spin {
        SpinKind::Zj => Ok(0.0),
        SpinKind::Gn => Ok(-alpha.tanh()),
        SpinKind::Gs | SpinKind::Log if alpha == 0.0 => Err(Error::Singular),
        SpinKind::Gs => Ok(-1.0 / (2.0 * alpha).tanh()),
        SpinKind::Log => Ok(1.0 / (2.0 * alpha) - 1.0 / (2.0 * alpha).tanh()),
    }
}

fn check_stretches(spin: SpinKind, l1: f64, l2: f64) -> Result<()> {
    if !(l1 > 0.0 && l2 > 0.0 && l1.is_finite() && l2.is_finite()) {
        return Err(Error::InvalidParameter(format!("principal stretches {l1}, {l2}")));
    }
    if matches!(spin, SpinKind::Gs | SpinKind::Log) && (l1 - l2).abs() <= EIGEN_TOL * l1.max(l2) {
        return Err(Error::CoincidentStretches);
    }
    Ok(())
}

/// Spin function `g(λ₁, λ₂)` adding `g·(P₁dP₂ − P₂dP₁)` to the vorticity.
pub fn spin_g(spin: SpinKind, l1: f64, l2: f64) -> Result<f64> {
    check_stretches(spin, l1, l2)?;
    let gs = (l1 * l1 + l2 * l2) / (l2 * l2 - l1 * l1);
    Ok(match spin {
        SpinKind::Zj => 0.0,
        SpinKind::Gn => (l2 - l1) / (l1 + l2),
        SpinKind::Gs => gs,
        SpinKind::Log => gs + 1.0 / (l1.ln() - l2.ln()),
    })
}

/// Spin function in the `r` form, i.e. relative to the twirl of the Lagrangian axes.
pub fn r12(spin: SpinKind, l1: f64, l2: f64) -> Result<f64> {
    check_stretches(spin, l1, l2)?;
    let gs = 2.0 * l1 * l2 / (l2 * l2 - l1 * l1);
    Ok(match spin {
        SpinKind::Zj => (l1 - l2) / (l1 + l2),
        SpinKind::Gn => 0.0,
        SpinKind::Gs => gs,
        SpinKind::Log => gs + 1.0 / (l1.ln() - l2.ln()),
    })
}

/// Effective spin factor `k = 1 + g₁₂ tanh 2α` of the LFSS system, with its
/// finite limits at `α = 0`.
pub fn k_factor(spin: SpinKind, alpha: f64) -> f64 {
    match spin {
        SpinKind::Zj => 1.0,
        SpinKind::Gn => 1.0 / (2.0 * alpha).cosh(),
        SpinKind::Gs => 0.0,
        SpinKind::Log if alpha == 0.0 => 1.0,
        SpinKind::Log => (2.0 * alpha).tanh() / (2.0 * alpha),
    }
}

/// Right-hand side of the reduced LFSS system for `(σ₁₁, σ₁₂)`, `σ₂₂ = −σ₁₁`.
pub fn lfss_ode_rhs(spin: SpinKind, alpha: f64, sigma11: f64, sigma12: f64, mu: f64) -> (f64, f64) {
    let k = k_factor(spin, alpha);
    (
        2.0 * k * sigma12 - 2.0 * mu * (2.0 * alpha).tanh(),
        -2.0 * k * sigma11 + 2.0 * mu,
    )
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypoProblem {
    pub rate: RateKind,
    pub mode: ShearMode,
    pub mu: f64,
    pub lambda: f64,
    pub sigma0: SymTensor2,
    pub alpha_max: f64,
    pub steps: usize,
}

impl HypoProblem {
    pub fn new(rate: RateKind, mode: ShearMode, mu: f64, alpha_max: f64, steps: usize) -> Self {
        HypoProblem { rate, mode, mu, lambda: 0.0, sigma0: SymTensor2::ZERO, alpha_max, steps }
    }

    pub fn with_sigma0(mut self, sigma0: SymTensor2) -> Self {
        self.sigma0 = sigma0;
        self
    }

    pub fn with_lambda(mut self, lambda: f64) -> Self {
        self.lambda = lambda;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.steps < 1 {
            return Err(Error::InvalidParameter("steps must be at least 1".into()));
        }
        if !(self.alpha_max >= 0.0 && self.alpha_max.is_finite()) {
            return Err(Error::InvalidParameter(format!("alpha_max {}", self.alpha_max)));
        }
        if !(self.mu > 0.0 && self.mu.is_finite()) || !self.lambda.is_finite() {
            return Err(Error::InvalidParameter(format!("moduli mu = {}, lambda = {}", self.mu, self.lambda)));
        }
        if !self.sigma0.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(())
    }

    /// Reduced RK4 system for corotational LFSS, incremental integrator otherwise.
    pub fn solve(&self) -> Result<StressTrajectory> {
        match (self.rate, self.mode) {
            (RateKind::Corotational(_), ShearMode::Lfss) => integrate_lfss(self),
            _ => incremental_integrate(self),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectorySample {
    pub alpha: f64,
    pub sigma: SymTensor2,
    pub sigma_bar: SymTensor2,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct StressTrajectory {
    pub samples: Vec<TrajectorySample>,
}

impl StressTrajectory {
    pub fn last(&self) -> Option<&TrajectorySample> {
        self.samples.last()
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn column(&self, pick: impl Fn(&TrajectorySample) -> f64) -> Vec<f64> {
        self.samples.iter().map(pick).collect()
    }

    /// Every `stride`-th sample, always keeping the first and last.
    pub fn every(&self, stride: usize) -> StressTrajectory {
        let stride = stride.max(1);
        let n = self.samples.len();
        let samples = self
            .samples
            .iter()
            .enumerate()
            .filter(|(i, _)| i % stride == 0 || *i + 1 == n)
            .map(|(_, s)| *s)
            .collect();
        StressTrajectory { samples }
    }
}

/// Sign flips in a sequence, skipping entries with `|x| ≤ eps`.
pub fn sign_changes(values: &[f64], eps: f64) -> usize {
    let mut last = 0.0f64;
    let mut count = 0;
    for &x in values {
        if x.abs() <= eps {
            continue;
        }
        if last != 0.0 && (x > 0.0) != (last > 0.0) {
            count += 1;
        }
        last = x;
    }
    count
}

fn uniform_alpha(alpha_max: f64, steps: usize, i: usize) -> f64 {
    if i == steps {
        alpha_max
    } else {
        alpha_max * i as f64 / steps as f64
    }
}

fn lfss_sample(alpha: f64, s11: f64, s12: f64) -> Result<TrajectorySample> {
    let sigma = SymTensor2::new(s11, -s11, s12);
    let r = kinematic_state(ShearMode::Lfss, alpha)?.r;
    Ok(TrajectorySample { alpha, sigma, sigma_bar: rotate_unchecked(&sigma, &r, RotateDirection::Backward) })
}

fn check_deviatoric(sigma0: &SymTensor2) -> Result<()> {
    if (sigma0.s11 + sigma0.s22).abs() > 1e-12 * sigma0.max_abs().max(1.0) {
        return Err(Error::InvalidParameter(format!(
            "initial stress must satisfy sigma11 = -sigma22, got {} and {}",
            sigma0.s11, sigma0.s22
        )));
    }
    Ok(())
}

/// Classical RK4 on the reduced LFSS system over a uniform grid.
pub fn integrate_lfss(problem: &HypoProblem) -> Result<StressTrajectory> {
    problem.validate()?;
    let spin = match (problem.rate, problem.mode) {
        (RateKind::Corotational(spin), ShearMode::Lfss) => spin,
        (rate, mode) => return Err(Error::Unsupported(format!("reduced system needs a corotational rate under LFSS, got {rate} / {mode}"))),
    };
    check_deviatoric(&problem.sigma0)?;
    let mu = problem.mu;
    let n = problem.steps;
    let h = problem.alpha_max / n as f64;
    let rhs = |a: f64, x: (f64, f64)| lfss_ode_rhs(spin, a, x.0, x.1, mu);
    let mut x = (problem.sigma0.s11, problem.sigma0.s12);
    let mut samples = Vec::with_capacity(n + 1);
    samples.push(lfss_sample(0.0, x.0, x.1)?);
    for i in 0..n {
        let a = h * i as f64;
        let k1 = rhs(a, x);
        let k2 = rhs(a + 0.5 * h, (x.0 + 0.5 * h * k1.0, x.1 + 0.5 * h * k1.1));
        let k3 = rhs(a + 0.5 * h, (x.0 + 0.5 * h * k2.0, x.1 + 0.5 * h * k2.1));
        let k4 = rhs(a + h, (x.0 + h * k3.0, x.1 + h * k3.1));
        x.0 += h / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0);
        x.1 += h / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1);
        samples.push(lfss_sample(uniform_alpha(problem.alpha_max, n, i + 1), x.0, x.1)?);
    }
    Ok(StressTrajectory { samples })
}

#[allow(clippy::too_many_arguments)]
fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// `∫₀^b f` by adaptive Simpson with absolute tolerance `tol`.
pub fn integrate_adaptive(f: &dyn Fn(f64) -> f64, b: f64, tol: f64) -> f64 {
    if b == 0.0 {
        return 0.0;
    }
    let (fa, fm, fb) = (f(0.0), f(0.5 * b), f(b));
    let whole = b / 6.0 * (fa + 4.0 * fm + fb);
    adaptive_simpson(f, 0.0, b, fa, fm, fb, whole, tol, 50)
}

/// Angle `θ(α) = ∫₀^α k(β) dβ` by which the corotational frame turns the
/// initial stress.
pub fn theta_angle(spin: SpinKind, alpha: f64) -> f64 {
    match spin {
        SpinKind::Zj => alpha,
        SpinKind::Gn => alpha.tanh().atan(),
        SpinKind::Gs => 0.0,
        SpinKind::Log => integrate_adaptive(&|b| k_factor(SpinKind::Log, b), alpha, THETA_QUAD_TOL),
    }
}

/// Homogeneous solution `Q·σ⁰·Qᵀ` carrying a deviatoric initial stress.
pub fn initial_stress_solution(spin: SpinKind, sigma0: &SymTensor2, alpha: f64) -> Result<SymTensor2> {
    check_deviatoric(sigma0)?;
    let theta = theta_angle(spin, alpha);
    let q = Tensor2::rotation(-theta);
    Ok(rotate_unchecked(sigma0, &q, RotateDirection::Forward))
}

/// Stress of every corotational model under RFSS from a stress-free start:
/// `σ̄` is pure shear with amplitude `2μα`.
pub fn rfss_solution(mu: f64, alpha: f64) -> StressPair {
    let s = 2.0 * mu * alpha;
    let ch = (2.0 * alpha).cosh();
    let th = (2.0 * alpha).tanh();
    StressPair { sigma: SymTensor2::new(s * th, -s * th, s / ch), sigma_bar: SymTensor2::shear(s) }
}

/// Cayley map `(I − A/2)⁻¹(I + A/2)` of a skew tensor `A = [[0, a], [−a, 0]]`.
fn cayley(a: f64) -> Tensor2 {
    let h = 0.5 * a;
    let den = 1.0 + h * h;
    Tensor2::new((1.0 - h * h) / den, 2.0 * h / den, -2.0 * h / den, (1.0 - h * h) / den)
}

/// Generic second-order incrementally objective integration of
/// `σ° = 2μd + λ tr(d) I` along a shear path.
pub fn incremental_integrate(problem: &HypoProblem) -> Result<StressTrajectory> {
    problem.validate()?;
    let HypoProblem { rate, mode, mu, lambda, sigma0, alpha_max, steps } = *problem;
    let state_r = |a: f64| -> Result<Tensor2> { Ok(kinematic_state(mode, a)?.r) };
    let sample = |a: f64, sigma: SymTensor2| -> Result<TrajectorySample> {
        Ok(TrajectorySample { alpha: a, sigma, sigma_bar: rotate_unchecked(&sigma, &state_r(a)?, RotateDirection::Backward) })
    };
    let mut sigma = sigma0;
    let mut samples = Vec::with_capacity(steps + 1);
    samples.push(sample(0.0, sigma)?);
    let mut a0 = 0.0;
    let mut f0 = deformation_gradient(mode, a0);
    for i in 0..steps {
        let a1 = uniform_alpha(alpha_max, steps, i + 1);
        let am = 0.5 * (a0 + a1);
        let f1 = deformation_gradient(mode, a1);
        let fm = deformation_gradient(mode, am);
        let fm_inv = fm.inverse()?;
        let dl = (f1 - f0) * fm_inv;
        let dd = dl.sym();
        let elastic = dd * (2.0 * mu) + SymTensor2::IDENTITY * (lambda * dd.trace());
        sigma = match rate {
            RateKind::Corotational(spin) => {
                let mut spin_incr = dl.skew().w12;
                if spin != SpinKind::Zj {
                    let v = polar_decompose(&fm)?.v;
                    let spec = spectral_decompose(&v, EIGEN_TOL)?;
                    if spec.eigenindex == 2 {
                        let g = spin_g(spin, spec.eigenvalues[0], spec.eigenvalues[1])?;
                        spin_incr += projection_spin(g, &spec.projections[0], &spec.projections[1], &dd).w12;
                    }
                }
                let q = cayley(0.5 * spin_incr);
                let half = rotate_unchecked(&sigma, &q, RotateDirection::Forward) + elastic;
                rotate_unchecked(&half, &q, RotateDirection::Forward)
            }
            RateKind::UpperOldroyd => {
                let first = fm * f0.inverse()?;
                let second = f1 * fm_inv;
                let half = crate::tensor::push(&sigma, &first) + elastic;
                crate::tensor::push(&half, &second)
            }
            RateKind::LowerOldroyd => {
                let first = (fm * f0.inverse()?).inverse()?.transpose();
                let second = (f1 * fm_inv).inverse()?.transpose();
                let half = crate::tensor::push(&sigma, &first) + elastic;
                crate::tensor::push(&half, &second)
            }
        };
        samples.push(sample(a1, sigma)?);
        a0 = a1;
        f0 = f1;
    }
    Ok(StressTrajectory { samples })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyper::{shear_stress, HyperKind, HyperelasticModel};
    use std::f64::consts::{FRAC_PI_4, PI};

    fn lfss(spin: SpinKind, alpha_max: f64, steps: usize) -> HypoProblem {
        HypoProblem::new(RateKind::Corotational(spin), ShearMode::Lfss, 1.0, alpha_max, steps)
    }

    #[test]
    fn g12_examples() {
        assert!((g12(SpinKind::Gn, 0.5).unwrap() + 0.46212).abs() < 1e-5);
        for a in [0.0, 0.3, 2.0] {
            assert_eq!(g12(SpinKind::Zj, a).unwrap(), 0.0);
        }
        let log = g12(SpinKind::Log, 0.5).unwrap();
        assert!((log - (1.0 - 1.0 / 1f64.tanh())).abs() < 1e-15);
        assert!((log + 0.31304).abs() < 1e-5);
        assert_eq!(g12(SpinKind::Gs, 0.0), Err(Error::Singular));
        assert_eq!(g12(SpinKind::Log, 0.0), Err(Error::Singular));
    }

    #[test]
    fn g12_matches_general_form() {
        for spin in SpinKind::ALL {
            for a in [0.1f64, 0.7, 1.9] {
                let general = spin_g(spin, a.exp(), (-a).exp()).unwrap();
                assert!((general - g12(spin, a).unwrap()).abs() < 1e-12, "{spin:?} {a}");
            }
        }
    }

    #[test]
    fn r12_examples() {
        assert_eq!(r12(SpinKind::Gn, 3.0, 0.2).unwrap(), 0.0);
        let (l1, l2) = (0.5f64.exp(), (-0.5f64).exp());
        assert!((r12(SpinKind::Zj, l1, l2).unwrap() - 0.5f64.tanh()).abs() < 1e-15);
        let log = r12(SpinKind::Log, l1, l2).unwrap();
        assert!((log - (1.0 - 1.0 / 1f64.sinh())).abs() < 1e-14);
        assert!((log - 0.14908).abs() < 1e-5);
        assert_eq!(r12(SpinKind::Gs, 1.0, 1.0), Err(Error::CoincidentStretches));
        assert_eq!(r12(SpinKind::Log, 2.0, 2.0), Err(Error::CoincidentStretches));
        assert!(r12(SpinKind::Zj, -1.0, 1.0).is_err());
    }

    #[test]
    fn g_r_relation() {
        for spin in SpinKind::ALL {
            for (l1, l2) in [(1.3, 0.6), (0.4, 2.5), (5.0, 0.2)] {
                let diff = r12(spin, l1, l2).unwrap() - spin_g(spin, l1, l2).unwrap();
                assert!((diff - (l1 - l2) / (l1 + l2)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn k_factor_values() {
        assert!((k_factor(SpinKind::Gn, 0.5) - 0.64805).abs() < 1e-5);
        assert!((k_factor(SpinKind::Gn, 0.5) - (1.0 - 0.5f64.tanh() * 1f64.tanh())).abs() < 1e-15);
        for a in [0.0, 0.5, 4.0] {
            assert_eq!(k_factor(SpinKind::Gs, a), 0.0);
        }
        assert_eq!(k_factor(SpinKind::Log, 0.0), 1.0);
        assert!((k_factor(SpinKind::Log, 1e-9) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn k_consistency() {
        for spin in SpinKind::ALL {
            for i in 1..=30 {
                let a = 0.1 * i as f64;
                let k = 1.0 + g12(spin, a).unwrap() * (2.0 * a).tanh();
                assert!((k - k_factor(spin, a)).abs() < 1e-12, "{spin:?} {a}");
            }
        }
    }

    #[test]
    fn rhs_examples() {
        for spin in SpinKind::ALL {
            assert_eq!(lfss_ode_rhs(spin, 0.0, 0.0, 0.0, 1.5), (0.0, 3.0));
        }
        for (s11, s12) in [(0.0, 0.0), (3.0, -2.0)] {
            assert_eq!(lfss_ode_rhs(SpinKind::Gs, 0.5, s11, s12, 1.0), (-2.0 * 1f64.tanh(), 2.0));
        }
        let (d11, d12) = lfss_ode_rhs(SpinKind::Zj, 0.5, 0.0, 1.0, 1.0);
        assert!((d11 - 0.47681).abs() < 1e-5);
        assert_eq!(d12, 2.0);
    }

    #[test]
    fn gs_exact_anchor() {
        let t = integrate_lfss(&lfss(SpinKind::Gs, 0.5, 1000)).unwrap();
        let last = t.last().unwrap();
        assert!((last.sigma.s12 - 1.0).abs() < 1e-8);
        assert!((last.sigma.s11 + 1f64.cosh().ln()).abs() < 1e-8);
        assert!((last.sigma.s11 + 0.43378).abs() < 1e-5);
    }

    #[test]
    fn log_rate_is_hencky() {
        let t = integrate_lfss(&lfss(SpinKind::Log, 1.5, 10_000)).unwrap();
        let last = t.last().unwrap();
        assert_eq!(last.alpha, 1.5);
        assert!((last.sigma.s12 - 3.0).abs() < 1e-5 * 3.0);
        assert!(last.sigma.s11.abs() < 1e-5);
        let hencky = HyperelasticModel::new(HyperKind::Hlih(crate::strain::ScaleFunction::HENCKY), 1.0, 0.0).unwrap();
        let h = shear_stress(&hencky, ShearMode::Lfss, 1.5).unwrap();
        assert!(last.sigma_bar.max_abs_diff(&h.sigma_bar) < 1e-5 * 3.0);
    }

    #[test]
    fn zj_oscillates_without_reversing_shear() {
        let t = integrate_lfss(&lfss(SpinKind::Zj, 6.0, 20_000)).unwrap();
        let s12 = t.column(|s| s.sigma.s12);
        let slope: Vec<f64> = s12.windows(2).map(|w| w[1] - w[0]).collect();
        assert!(sign_changes(&slope, 0.0) >= 4);
        assert_eq!(sign_changes(&s12, 1e-12), 0);
        let inc = incremental_integrate(&lfss(SpinKind::Zj, 6.0, 20_000)).unwrap();
        for (a, b) in t.samples.iter().zip(&inc.samples).step_by(1000) {
            assert!(a.sigma.max_abs_diff(&b.sigma) < 1e-6, "{}", a.alpha);
        }
    }

    #[test]
    fn zj_with_initial_shear_reverses_sign() {
        let p = lfss(SpinKind::Zj, 6.0, 20_000).with_sigma0(SymTensor2::shear(-0.5));
        let t = integrate_lfss(&p).unwrap();
        assert!(sign_changes(&t.column(|s| s.sigma.s12), 1e-12) >= 1);
    }

    #[test]
    fn integrate_lfss_rejects_bad_problems() {
        assert!(integrate_lfss(&lfss(SpinKind::Zj, 1.0, 0)).is_err());
        let p = HypoProblem::new(RateKind::UpperOldroyd, ShearMode::Lfss, 1.0, 1.0, 10);
        assert!(matches!(integrate_lfss(&p), Err(Error::Unsupported(_))));
        let p = HypoProblem::new(RateKind::Corotational(SpinKind::Zj), ShearMode::Rfss, 1.0, 1.0, 10);
        assert!(matches!(integrate_lfss(&p), Err(Error::Unsupported(_))));
        let p = lfss(SpinKind::Zj, 1.0, 10).with_sigma0(SymTensor2::new(1.0, 0.0, 0.0));
        assert!(matches!(integrate_lfss(&p), Err(Error::InvalidParameter(_))));
        let mut p = lfss(SpinKind::Zj, 1.0, 10);
        p.mu = 0.0;
        assert!(integrate_lfss(&p).is_err());
    }

    #[test]
    fn trajectory_shape() {
        let t = integrate_lfss(&lfss(SpinKind::Gn, 1.0, 8)).unwrap();
        assert_eq!(t.len(), 9);
        assert_eq!(t.samples[0].alpha, 0.0);
        assert_eq!(t.samples[0].sigma, SymTensor2::ZERO);
        assert!(t.samples.windows(2).all(|w| w[1].alpha > w[0].alpha));
        let thin = t.every(4);
        assert_eq!(thin.column(|s| s.alpha), vec![0.0, 0.5, 1.0]);
    }

    #[test]
    fn theta_values() {
        assert_eq!(theta_angle(SpinKind::Zj, 0.7), 0.7);
        assert_eq!(theta_angle(SpinKind::Gs, 3.0), 0.0);
        assert!((theta_angle(SpinKind::Gn, 0.5) - 0.43288).abs() < 1e-5);
        assert_eq!(theta_angle(SpinKind::Log, 0.0), 0.0);
    }

    #[test]
    fn theta_matches_quadrature_of_k() {
        for spin in SpinKind::ALL {
            for a in [0.3, 1.2, 4.0] {
                let quad = integrate_adaptive(&|b| k_factor(spin, b), a, 1e-12);
                assert!((quad - theta_angle(spin, a)).abs() < 1e-9, "{spin:?} {a}");
            }
        }
        assert!(theta_angle(SpinKind::Log, 6.0) > PI / 2.0);
    }

    #[test]
    fn initial_stress_examples() {
        let s0 = SymTensor2::new(0.3, -0.3, -0.5);
        assert!(initial_stress_solution(SpinKind::Gs, &s0, 2.0).unwrap().max_abs_diff(&s0) < 1e-15);
        let a = initial_stress_solution(SpinKind::Zj, &SymTensor2::shear(-0.5), FRAC_PI_4).unwrap();
        assert!((a.s11 + 0.5).abs() < 1e-15 && a.s12.abs() < 1e-15 && (a.s22 - 0.5).abs() < 1e-15);
        let theta = theta_angle(SpinKind::Log, 1.3);
        let a = initial_stress_solution(SpinKind::Log, &SymTensor2::shear(0.8), 1.3).unwrap();
        assert!((a.s11 - 0.8 * (2.0 * theta).sin()).abs() < 1e-15);
        assert!((a.s12 - 0.8 * (2.0 * theta).cos()).abs() < 1e-15);
        assert!(initial_stress_solution(SpinKind::Zj, &SymTensor2::new(1.0, 1.0, 0.0), 0.5).is_err());
    }

    #[test]
    fn superposition_of_initial_stress() {
        let s0 = SymTensor2::new(0.2, -0.2, -0.5);
        for spin in SpinKind::ALL {
            let with = integrate_lfss(&lfss(spin, 2.0, 4000).with_sigma0(s0)).unwrap();
            let without = integrate_lfss(&lfss(spin, 2.0, 4000)).unwrap();
            for (w, z) in with.samples.iter().zip(&without.samples).step_by(500) {
                let sum = z.sigma + initial_stress_solution(spin, &s0, w.alpha).unwrap();
                assert!(w.sigma.max_abs_diff(&sum) < 1e-9, "{spin:?} {}", w.alpha);
            }
        }
    }

    #[test]
    fn rfss_solution_values() {
        let p = rfss_solution(1.0, 0.75);
        assert_eq!(p.sigma_bar, SymTensor2::shear(1.5));
        let p = rfss_solution(1.0, 0.5);
        assert!((p.sigma.s12 - 0.64805).abs() < 1e-5 && (p.sigma.s11 - 0.76159).abs() < 1e-5);
        let state = kinematic_state(ShearMode::Rfss, 0.5).unwrap();
        let fwd = rotate_unchecked(&p.sigma_bar, &state.r, RotateDirection::Forward);
        assert!(fwd.max_abs_diff(&p.sigma) < 1e-14);
        let p = rfss_solution(1.0, 0.0);
        assert_eq!(p.sigma.max_abs().max(p.sigma_bar.max_abs()), 0.0);
    }

    #[test]
    fn incremental_matches_reduced_system() {
        let reduced = integrate_lfss(&lfss(SpinKind::Log, 1.5, 2000)).unwrap();
        let inc = incremental_integrate(&lfss(SpinKind::Log, 1.5, 10_000)).unwrap();
        let diff = reduced.last().unwrap().sigma.max_abs_diff(&inc.last().unwrap().sigma);
        assert!(diff < 1e-6, "{diff}");
    }

    #[test]
    fn oldroyd_rates_are_ogden_models() {
        for (rate, kind) in [(RateKind::UpperOldroyd, HyperKind::OgdenA), (RateKind::LowerOldroyd, HyperKind::OgdenB)] {
            let t = incremental_integrate(&HypoProblem::new(rate, ShearMode::Lfss, 1.0, 1.0, 2000)).unwrap();
            let exact = shear_stress(&HyperelasticModel::new(kind, 1.0, 0.0).unwrap(), ShearMode::Lfss, 1.0).unwrap();
            let last = t.last().unwrap();
            assert!(last.sigma.max_abs_diff(&exact.sigma) < 1e-5 * exact.sigma.max_abs(), "{rate}");
        }
    }

    #[test]
    fn zj_simple_shear_exact() {
        let p = HypoProblem::new(RateKind::Corotational(SpinKind::Zj), ShearMode::SimpleShear, 1.0, 10.0, 20_000);
        let t = incremental_integrate(&p).unwrap();
        for s in t.samples.iter().step_by(1000) {
            assert!((s.sigma.s12 - s.alpha.sin()).abs() < 1e-5, "{}", s.alpha);
            assert!((s.sigma.s11 - (1.0 - s.alpha.cos())).abs() < 1e-5);
        }
        assert!(sign_changes(&t.column(|s| s.sigma.s12), 1e-12) >= 1);
    }

    #[test]
    fn rfss_universality() {
        for spin in SpinKind::ALL {
            let p = HypoProblem::new(RateKind::Corotational(spin), ShearMode::Rfss, 1.0, 1.5, 2000);
            let last = *incremental_integrate(&p).unwrap().last().unwrap();
            let exact = rfss_solution(1.0, 1.5);
            assert!((last.sigma_bar.s12 - 3.0).abs() < 1e-5 * 3.0, "{spin:?}");
            assert!(last.sigma_bar.s11.abs() < 1e-6 && last.sigma_bar.s22.abs() < 1e-6);
            assert!(last.sigma.max_abs_diff(&exact.sigma) < 1e-5 * 3.0);
        }
    }

    #[test]
    fn rk4_fourth_order() {
        let reference = integrate_lfss(&lfss(SpinKind::Zj, 2.0, 400)).unwrap().last().unwrap().sigma;
        let err = |n| integrate_lfss(&lfss(SpinKind::Zj, 2.0, n)).unwrap().last().unwrap().sigma.max_abs_diff(&reference);
        let ratio = err(25) / err(50);
        assert!((13.0..=19.0).contains(&ratio), "{ratio}");
    }

    #[test]
    fn incremental_second_order() {
        let p = |n| HypoProblem::new(RateKind::Corotational(SpinKind::Gn), ShearMode::Lfss, 1.0, 1.0, n);
        let reference = incremental_integrate(&p(400)).unwrap().last().unwrap().sigma;
        let err = |n| incremental_integrate(&p(n)).unwrap().last().unwrap().sigma.max_abs_diff(&reference);
        let ratio = err(25) / err(50);
        assert!((3.5..=4.5).contains(&ratio), "{ratio}");
    }

    #[test]
    fn incremental_accepts_general_initial_stress() {
        let p = HypoProblem::new(RateKind::Corotational(SpinKind::Zj), ShearMode::Lfss, 1.0, 0.0, 3)
            .with_sigma0(SymTensor2::new(1.0, 2.0, 0.5));
        let t = incremental_integrate(&p).unwrap();
        assert_eq!(t.last().unwrap().sigma, SymTensor2::new(1.0, 2.0, 0.5));
    }

    #[test]
    fn sign_change_counting() {
        assert_eq!(sign_changes(&[0.0, 1.0, 2.0, -1.0, 0.0, -3.0, 4.0], 1e-12), 2);
        assert_eq!(sign_changes(&[0.0, 1e-14, -1e-14, 1.0], 1e-12), 0);
        assert_eq!(sign_changes(&[], 0.0), 0);
    }

    #[test]
    fn rate_names() {
        for r in RateKind::ALL {
            assert_eq!(r.name().parse::<RateKind>().unwrap(), r);
        }
        assert!("hypo-xx".parse::<RateKind>().is_err());
    }
}
