//! Hooke-like isotropic hyperelastic models.
//!
//! Stresses are evaluated on a stretch tensor: given `V` the result is the
//! Eulerian Kirchhoff stress `τ`, given `U` it is the rotated stress `τ̄`.
//! All shear motions here are isochoric, so Kirchhoff and Cauchy coincide.

use std::fmt;

use crate::error::{Error, Result};
use crate::kinematics::{kinematic_state, ShearMode};
use crate::strain::{scale_derivative, scale_eval, strain_from_stretch, NamedStrain, ScaleFunction};
use crate::tensor::{polar_decompose, rotate_unchecked, spectral_decompose, RotateDirection, SymTensor2, Tensor2, EIGEN_TOL};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HyperKind {
    /// Hill's linear isotropic hyperelastic law on the strain generated by `f`.
    Hlih(ScaleFunction),
    /// `μ(c − I) + λ ln J I`.
    OgdenA,
    /// `μ(I − c⁻¹) + λ ln J I`.
    OgdenB,
    /// `2μ e_r + λ ln J I` with the Bažant–Itskov strain of order `r`.
    Obi(f64),
    /// `μ₁(c − I) + μ₂(I − c⁻¹) + λ ln J I`.
    MooneyRivlin { mu1: f64, mu2: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperelasticModel {
    pub kind: HyperKind,
    /// Shear modulus.
    pub mu: f64,
    /// Second Lamé parameter.
    pub lambda: f64,
}

impl HyperelasticModel {
    pub fn new(kind: HyperKind, mu: f64, lambda: f64) -> Result<Self> {
        if !(mu > 0.0 && mu.is_finite()) {
            return Err(Error::InvalidParameter(format!("shear modulus must be positive, got {mu}")));
        }
        if !lambda.is_finite() {
            return Err(Error::InvalidParameter(format!("Lamé parameter {lambda}")));
        }
        match kind {
            HyperKind::Obi(r) if !(r >= 0.0 && r.is_finite()) => {
                return Err(Error::InvalidParameter(format!("Bazant-Itskov order {r}")));
            }
            HyperKind::MooneyRivlin { mu1, mu2 } => {
                if !(mu1 >= 0.0 && mu2 >= 0.0) {
                    return Err(Error::InvalidParameter(format!("Mooney-Rivlin moduli {mu1}, {mu2}")));
                }
                if (mu1 + mu2 - mu).abs() > 1e-12 * mu.max(1.0) {
                    return Err(Error::InvalidParameter(format!(
                        "Mooney-Rivlin moduli must sum to mu: {mu1} + {mu2} != {mu}"
                    )));
                }
            }
            _ => {}
        }
        Ok(HyperelasticModel { kind, mu, lambda })
    }

    pub fn mooney_rivlin(mu1: f64, mu2: f64, lambda: f64) -> Result<Self> {
        HyperelasticModel::new(HyperKind::MooneyRivlin { mu1, mu2 }, mu1 + mu2, lambda)
    }

    pub fn hlih(f: ScaleFunction, mu: f64, lambda: f64) -> Result<Self> {
        HyperelasticModel::new(HyperKind::Hlih(f), mu, lambda)
    }

    /// Parses a CLI model name. For `mr:<mu1>,<mu2>` the shear modulus is
    /// `mu1 + mu2` and the `mu` argument is ignored.
    pub fn parse(name: &str, mu: f64, lambda: f64) -> Result<Self> {
        let name = name.trim().to_ascii_lowercase();
        let unknown = || Error::UnknownName(name.clone());
        let kind = match name.as_str() {
            "hlih-h" => HyperKind::Hlih(ScaleFunction::HENCKY),
            "hlih-p" => HyperKind::Hlih(ScaleFunction::PELZER),
            "hlih-m" => HyperKind::Hlih(ScaleFunction::MOONEY),
            "ogden-a" => HyperKind::OgdenA,
            "ogden-b" => HyperKind::OgdenB,
            other => {
                if let Some(scale) = other.strip_prefix("hlih:") {
                    HyperKind::Hlih(scale.parse()?)
                } else if let Some(r) = other.strip_prefix("obi:") {
                    HyperKind::Obi(r.trim().parse().map_err(|_| unknown())?)
                } else if let Some(rest) = other.strip_prefix("mr:") {
                    let (a, b) = rest.split_once(',').ok_or_else(unknown)?;
                    let mu1: f64 = a.trim().parse().map_err(|_| unknown())?;
                    let mu2: f64 = b.trim().parse().map_err(|_| unknown())?;
                    return HyperelasticModel::mooney_rivlin(mu1, mu2, lambda);
                } else {
                    return Err(unknown());
                }
            }
        };
        HyperelasticModel::new(kind, mu, lambda)
    }

    pub fn name(&self) -> String {
        match self.kind {
            HyperKind::Hlih(ScaleFunction::Named(NamedStrain::Hencky)) => "hlih-h".into(),
            HyperKind::Hlih(ScaleFunction::Named(NamedStrain::Pelzer)) => "hlih-p".into(),
            HyperKind::Hlih(ScaleFunction::Named(NamedStrain::Mooney)) => "hlih-m".into(),
            HyperKind::Hlih(f) => format!("hlih:{f}"),
            HyperKind::OgdenA => "ogden-a".into(),
            HyperKind::OgdenB => "ogden-b".into(),
            HyperKind::Obi(r) => format!("obi:{r}"),
            HyperKind::MooneyRivlin { mu1, mu2 } => format!("mr:{mu1},{mu2}"),
        }
    }

    pub fn kirchhoff_stress(&self, stretch: &SymTensor2, jacobian: f64) -> Result<SymTensor2> {
        kirchhoff_stress(self, stretch, jacobian)
    }
}

impl fmt::Display for HyperelasticModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A representative set covering every model family, used by sweeps and checks.
pub fn reference_models(mu: f64, lambda: f64) -> Vec<HyperelasticModel> {
    let mut kinds = vec![
        HyperKind::Hlih(ScaleFunction::HENCKY),
        HyperKind::Hlih(ScaleFunction::PELZER),
        HyperKind::Hlih(ScaleFunction::MOONEY),
        HyperKind::Hlih(ScaleFunction::GREEN_LAGRANGE),
        HyperKind::Hlih(ScaleFunction::Named(NamedStrain::Almansi)),
        HyperKind::Hlih(ScaleFunction::Named(NamedStrain::Biot)),
        HyperKind::Hlih(ScaleFunction::BazantItskov(0.5)),
        HyperKind::Hlih(ScaleFunction::DoyleEricksen(-1.0)),
        HyperKind::OgdenA,
        HyperKind::OgdenB,
        HyperKind::Obi(0.0),
        HyperKind::Obi(1.0),
        HyperKind::Obi(2.0),
        HyperKind::Obi(3.0),
    ];
    kinds.push(HyperKind::MooneyRivlin { mu1: 0.5 * mu, mu2: 0.5 * mu });
    kinds.push(HyperKind::MooneyRivlin { mu1: 0.8 * mu, mu2: 0.2 * mu });
    kinds
        .into_iter()
        .map(|k| HyperelasticModel { kind: k, mu, lambda })
        .collect()
}

fn check_stretch(stretch: &SymTensor2, jacobian: f64) -> Result<()> {
    if !stretch.is_finite() || !jacobian.is_finite() {
        return Err(Error::NonFinite);
    }
    if !stretch.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    if jacobian <= 0.0 {
        return Err(Error::NonPositiveDeterminant(jacobian));
    }
    Ok(())
}

pub fn kirchhoff_stress(model: &HyperelasticModel, stretch: &SymTensor2, jacobian: f64) -> Result<SymTensor2> {
    check_stretch(stretch, jacobian)?;
    let (mu, lambda) = (model.mu, model.lambda);
    let i = SymTensor2::IDENTITY;
    let vol = i * (lambda * jacobian.ln());
    match model.kind {
        HyperKind::Hlih(f) => {
            let spec = spectral_decompose(stretch, EIGEN_TOL)?;
            let strains = [scale_eval(&f, spec.eigenvalues[0])?, scale_eval(&f, spec.eigenvalues[1])?];
            let trace = strains[0] + strains[1];
            let mut tau = SymTensor2::ZERO;
            for (idx, (l, p)) in spec.distinct().enumerate() {
                let g = lambda * trace + 2.0 * mu * strains[idx];
                tau = tau + p * (g * scale_derivative(&f, l)? * l);
            }
            Ok(tau)
        }
        HyperKind::OgdenA => Ok((stretch.squared() - i) * mu + vol),
        HyperKind::OgdenB => Ok((i - stretch.squared().inverse()?) * mu + vol),
        HyperKind::Obi(r) => {
            let e = strain_from_stretch(&ScaleFunction::bazant_itskov(r)?, stretch)?;
            Ok(e * (2.0 * mu) + vol)
        }
        HyperKind::MooneyRivlin { mu1, mu2 } => {
            let c = stretch.squared();
            Ok((c - i) * mu1 + (i - c.inverse()?) * mu2 + vol)
        }
    }
}

/// Cauchy stress and its rotated counterpart `σ̄ = Rᵀ·σ·R`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StressPair {
    pub sigma: SymTensor2,
    pub sigma_bar: SymTensor2,
}

impl StressPair {
    pub const ZERO: StressPair = StressPair { sigma: SymTensor2::ZERO, sigma_bar: SymTensor2::ZERO };

    pub fn max_abs_diff(&self, other: &StressPair) -> f64 {
        self.sigma.max_abs_diff(&other.sigma).max(self.sigma_bar.max_abs_diff(&other.sigma_bar))
    }
}

/// Stress along a shear path: the constitutive law is evaluated on `V`
/// (LFSS, simple shear) or `U` (RFSS) and the partner is obtained by rotation.
pub fn shear_stress(model: &HyperelasticModel, mode: ShearMode, alpha: f64) -> Result<StressPair> {
    let state = kinematic_state(mode, alpha)?;
    let j = state.jacobian();
    let tau = kirchhoff_stress(model, &state.stretch(), j)?;
    let stress = tau * (1.0 / j);
    Ok(match mode {
        ShearMode::Rfss => StressPair {
            sigma: rotate_unchecked(&stress, &state.r, RotateDirection::Forward),
            sigma_bar: stress,
        },
        ShearMode::Lfss | ShearMode::SimpleShear => StressPair {
            sigma: stress,
            sigma_bar: rotate_unchecked(&stress, &state.r, RotateDirection::Backward),
        },
    })
}

/// Amplitude `s(α)` of the pure shear stress produced by a model, if it has one.
pub fn pure_shear_amplitude(model: &HyperelasticModel, alpha: f64) -> Option<f64> {
    let mu = model.mu;
    let sinh_term = |n: f64| (mu / n) * ((n * alpha).exp() - (-n * alpha).exp());
    match model.kind {
        HyperKind::Hlih(f) => match f {
            ScaleFunction::Named(NamedStrain::Hencky)
            | ScaleFunction::DoyleEricksen(0.0)
            | ScaleFunction::BazantItskov(0.0) => Some(2.0 * mu * alpha),
            ScaleFunction::Named(NamedStrain::Pelzer) | ScaleFunction::BazantItskov(1.0) => {
                Some(0.5 * mu * ((2.0 * alpha).exp() - (-2.0 * alpha).exp()))
            }
            ScaleFunction::Named(NamedStrain::Mooney) | ScaleFunction::BazantItskov(2.0) => {
                Some(0.25 * mu * ((4.0 * alpha).exp() - (-4.0 * alpha).exp()))
            }
            _ => None,
        },
        HyperKind::Obi(0.0) => Some(2.0 * mu * alpha),
        HyperKind::Obi(r) => Some(sinh_term(r)),
        _ => None,
    }
}

/// Literal closed-form shear stresses, independent of the tensor pipeline.
pub fn analytic_shear_oracle(model: &HyperelasticModel, mode: ShearMode, alpha: f64) -> Result<StressPair> {
    if mode == ShearMode::SimpleShear {
        return Err(Error::Unsupported("closed-form stresses exist only for LFSS and RFSS".into()));
    }
    let ch = (2.0 * alpha).cosh();
    let sh = (2.0 * alpha).sinh();
    let th = (2.0 * alpha).tanh();
    let ch4 = (4.0 * alpha).cosh();
    if let Some(s) = pure_shear_amplitude(model, alpha) {
        let pure = SymTensor2::shear(s);
        let partner = SymTensor2::new(s * th, -s * th, s / ch);
        return Ok(match mode {
            ShearMode::Lfss => StressPair { sigma: pure, sigma_bar: SymTensor2::new(-s * th, s * th, s / ch) },
            _ => StressPair { sigma: partner, sigma_bar: pure },
        });
    }
    // Unit-modulus Ogden-A and Ogden-B responses.
    let ogden_a = || match mode {
        ShearMode::Lfss => StressPair {
            sigma: SymTensor2::new(ch - 1.0, ch - 1.0, sh),
            sigma_bar: SymTensor2::new(1.0 / ch - 1.0, ch4 / ch - 1.0, sh / ch),
        },
        _ => StressPair {
            sigma: SymTensor2::new(ch4 / ch - 1.0, 1.0 / ch - 1.0, sh / ch),
            sigma_bar: SymTensor2::new(ch - 1.0, ch - 1.0, sh),
        },
    };
    let ogden_b = || match mode {
        ShearMode::Lfss => StressPair {
            sigma: SymTensor2::new(1.0 - ch, 1.0 - ch, sh),
            sigma_bar: SymTensor2::new(1.0 - ch4 / ch, 1.0 - 1.0 / ch, sh / ch),
        },
        _ => StressPair {
            sigma: SymTensor2::new(1.0 - 1.0 / ch, 1.0 - ch4 / ch, sh / ch),
            sigma_bar: SymTensor2::new(1.0 - ch, 1.0 - ch, sh),
        },
    };
    let combine = |a: f64, b: f64| {
        let (pa, pb) = (ogden_a(), ogden_b());
        StressPair { sigma: pa.sigma * a + pb.sigma * b, sigma_bar: pa.sigma_bar * a + pb.sigma_bar * b }
    };
    match model.kind {
        HyperKind::OgdenA => Ok(combine(model.mu, 0.0)),
        HyperKind::OgdenB => Ok(combine(0.0, model.mu)),
        HyperKind::MooneyRivlin { mu1, mu2 } => Ok(combine(mu1, mu2)),
        _ => Err(Error::Unsupported(format!("no closed-form shear solution for {model}"))),
    }
}

/// `|S₁₁|, |S₂₂| ≤ tol·max(1, |S₁₂|)`.
pub fn is_pure_shear(s: &SymTensor2, tol: f64) -> bool {
    let bound = tol * s.s12.abs().max(1.0);
    s.s11.abs() <= bound && s.s22.abs() <= bound
}

/// Mooney–Rivlin energy in terms of the two in-plane principal stretches.
pub fn mr_energy_principal(mu1: f64, mu2: f64, lambda: f64, l1: f64, l2: f64) -> f64 {
    let ln_j = (l1 * l2).ln();
    mu1 * (0.5 * (l1 * l1 + l2 * l2 - 2.0) - ln_j)
        - mu2 * (0.5 * (2.0 - 1.0 / (l1 * l1) - 1.0 / (l2 * l2)) - ln_j)
        + 0.5 * lambda * ln_j * ln_j
}

/// Mooney–Rivlin energy from the strain traces.
pub fn mr_energy(mu1: f64, mu2: f64, lambda: f64, f: &Tensor2) -> Result<f64> {
    let polar = polar_decompose(f)?;
    let spec = spectral_decompose(&polar.v, EIGEN_TOL)?;
    Ok(mr_energy_principal(mu1, mu2, lambda, spec.eigenvalues[0], spec.eigenvalues[1]))
}

/// Mooney–Rivlin energy from the Frobenius norms of `F` and `F⁻¹`.
pub fn mr_energy_frobenius(mu1: f64, mu2: f64, lambda: f64, f: &Tensor2) -> Result<f64> {
    if !f.is_finite() {
        return Err(Error::NonFinite);
    }
    let j = f.det();
    if j <= 0.0 {
        return Err(Error::NonPositiveDeterminant(j));
    }
    let ln_j = j.ln();
    let f_inv = f.inverse()?;
    Ok(0.5 * mu1 * (f.frobenius_norm_sq() - 2.0 - 2.0 * ln_j)
        + 0.5 * mu2 * (f_inv.frobenius_norm_sq() - 2.0 + 2.0 * ln_j)
        + 0.5 * lambda * ln_j * ln_j)
}

/// Kirchhoff stress `Σ λᵢ ∂W/∂λᵢ Pᵢ` with the energy gradient taken by
/// central differences of step `h`.
pub fn stress_from_energy(mu1: f64, mu2: f64, lambda: f64, f: &Tensor2, h: f64) -> Result<SymTensor2> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidParameter(format!("step {h}")));
    }
    let polar = polar_decompose(f)?;
    let spec = spectral_decompose(&polar.v, EIGEN_TOL)?;
    if spec.eigenindex != 2 {
        return Err(Error::CoincidentStretches);
    }
    let [l1, l2] = spec.eigenvalues;
    let w = |a: f64, b: f64| mr_energy_principal(mu1, mu2, lambda, a, b);
    let t1 = l1 * (w(l1 + h, l2) - w(l1 - h, l2)) / (2.0 * h);
    let t2 = l2 * (w(l1, l2 + h) - w(l1, l2 - h)) / (2.0 * h);
    Ok(spec.projections[0] * t1 + spec.projections[1] * t2)
}

/// Zaremba–Jaumann rate of the Mooney–Rivlin Kirchhoff stress:
/// `d·M + M·d + λ tr(d) I` with `M = μ₁c + μ₂c⁻¹`.
pub fn mr_zj_rate(d: &SymTensor2, c: &SymTensor2, mu1: f64, mu2: f64, lambda: f64) -> Result<SymTensor2> {
    if !c.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let m = *c * mu1 + c.inverse()? * mu2;
    Ok((*d * m + m * *d).sym() + SymTensor2::IDENTITY * (lambda * d.trace()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::{deformation_gradient, left_cg, rate_tensors, shear_stretch};
    use crate::tensor::assemble_elasticity_mr;

    fn model(kind: HyperKind) -> HyperelasticModel {
        HyperelasticModel::new(kind, 1.0, 0.0).unwrap()
    }

    #[test]
    fn undeformed_is_stress_free() {
        for m in reference_models(1.3, 0.4) {
            let t = kirchhoff_stress(&m, &SymTensor2::IDENTITY, 1.0).unwrap();
            assert!(t.max_abs() < 1e-15, "{m}");
        }
    }

    #[test]
    fn hencky_shear_stress() {
        for lambda in [0.0, 2.5] {
            let m = HyperelasticModel::hlih(ScaleFunction::HENCKY, 1.0, lambda).unwrap();
            let t = kirchhoff_stress(&m, &shear_stretch(0.6), 1.0).unwrap();
            assert!(t.max_abs_diff(&SymTensor2::shear(1.2)) < 1e-14);
        }
    }

    #[test]
    fn mooney_rivlin_half_half() {
        let m = HyperelasticModel::mooney_rivlin(0.5, 0.5, 0.0).unwrap();
        let t = kirchhoff_stress(&m, &shear_stretch(0.5), 1.0).unwrap();
        assert!(t.max_abs_diff(&SymTensor2::shear(1f64.sinh())) < 1e-14);
        assert!((t.s12 - 1.17520).abs() < 1e-5);
    }

    #[test]
    fn kirchhoff_rejects_bad_input() {
        let m = model(HyperKind::OgdenA);
        assert_eq!(kirchhoff_stress(&m, &SymTensor2::new(1.0, 1.0, 2.0), 1.0), Err(Error::NotPositiveDefinite));
        assert!(matches!(kirchhoff_stress(&m, &SymTensor2::IDENTITY, 0.0), Err(Error::NonPositiveDeterminant(_))));
    }

    #[test]
    fn shear_stress_examples() {
        let p = shear_stress(&model(HyperKind::Hlih(ScaleFunction::HENCKY)), ShearMode::Rfss, 0.5).unwrap();
        assert!((p.sigma.s12 - 0.64805).abs() < 1e-5);
        assert!((p.sigma.s11 - 0.76159).abs() < 1e-5);
        assert!((p.sigma.s22 + p.sigma.s11).abs() < 1e-14);
        let p = shear_stress(&model(HyperKind::OgdenA), ShearMode::Lfss, 0.5).unwrap();
        assert!((p.sigma.s12 - 1.17520).abs() < 1e-5);
        assert!((p.sigma.s11 - 0.54308).abs() < 1e-5 && (p.sigma.s22 - 0.54308).abs() < 1e-5);
        let p = shear_stress(&model(HyperKind::OgdenB), ShearMode::Lfss, 0.5).unwrap();
        assert!((p.sigma.s12 - 1.17520).abs() < 1e-5);
        assert!((p.sigma.s11 + 0.54308).abs() < 1e-5 && (p.sigma.s22 + 0.54308).abs() < 1e-5);
    }

    #[test]
    fn stress_pair_is_rotation_consistent() {
        for m in reference_models(1.0, 0.3) {
            for mode in ShearMode::ALL {
                let state = kinematic_state(mode, 0.9).unwrap();
                let p = shear_stress(&m, mode, 0.9).unwrap();
                let back = rotate_unchecked(&p.sigma_bar, &state.r, RotateDirection::Forward);
                assert!(back.max_abs_diff(&p.sigma) < 1e-12 * p.sigma.max_abs().max(1.0));
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let p = analytic_shear_oracle(&model(HyperKind::Hlih(ScaleFunction::MOONEY)), ShearMode::Lfss, 0.5).unwrap();
        assert!((p.sigma.s12 - 1.81343).abs() < 1e-5);
        assert_eq!((p.sigma.s11, p.sigma.s22), (0.0, 0.0));
        let p = analytic_shear_oracle(&model(HyperKind::Obi(1.0)), ShearMode::Lfss, 0.5).unwrap();
        assert!((p.sigma.s12 - 1.04219).abs() < 1e-5);
        for mode in [ShearMode::Lfss, ShearMode::Rfss] {
            let a = analytic_shear_oracle(&model(HyperKind::Obi(0.0)), mode, 0.8).unwrap();
            let b = analytic_shear_oracle(&model(HyperKind::Hlih(ScaleFunction::HENCKY)), mode, 0.8).unwrap();
            assert_eq!(a, b);
            let c = shear_stress(&model(HyperKind::Obi(0.0)), mode, 0.8).unwrap();
            let d = shear_stress(&model(HyperKind::Hlih(ScaleFunction::HENCKY)), mode, 0.8).unwrap();
            assert!(c.max_abs_diff(&d) < 1e-14);
        }
    }

    #[test]
    fn oracle_rejects_models_without_closed_form() {
        let m = model(HyperKind::Hlih(ScaleFunction::GREEN_LAGRANGE));
        assert!(matches!(analytic_shear_oracle(&m, ShearMode::Lfss, 0.5), Err(Error::Unsupported(_))));
        let m = model(HyperKind::OgdenA);
        assert!(matches!(analytic_shear_oracle(&m, ShearMode::SimpleShear, 0.5), Err(Error::Unsupported(_))));
    }

    #[test]
    fn pipeline_matches_oracle() {
        let mut models: Vec<HyperelasticModel> = reference_models(1.7, 0.0)
            .into_iter()
            .filter(|m| analytic_shear_oracle(m, ShearMode::Lfss, 0.1).is_ok())
            .collect();
        models.push(HyperelasticModel::mooney_rivlin(0.3, 1.1, 0.0).unwrap());
        assert!(models.len() >= 10);
        for m in models {
            for mode in [ShearMode::Lfss, ShearMode::Rfss] {
                for alpha in [0.0, 0.25, 0.75, 1.25, 1.5] {
                    let a = shear_stress(&m, mode, alpha).unwrap();
                    let b = analytic_shear_oracle(&m, mode, alpha).unwrap();
                    let scale = b.sigma.max_abs().max(b.sigma_bar.max_abs()).max(1.0);
                    assert!(a.max_abs_diff(&b) <= 1e-12 * scale, "{m} {mode} {alpha}: {a:?} vs {b:?}");
                }
            }
        }
    }

    #[test]
    fn ogden_rfss_example() {
        let p = shear_stress(&model(HyperKind::OgdenA), ShearMode::Rfss, 0.5).unwrap();
        assert!((p.sigma.s12 - 0.76159).abs() < 1e-5);
        assert!((p.sigma.s11 - (2f64.cosh() / 1f64.cosh() - 1.0)).abs() < 1e-14);
        assert!((p.sigma.s11 - 1.43811).abs() < 1e-5);
        assert!((p.sigma.s22 + 0.35194).abs() < 1e-5);
    }

    #[test]
    fn pure_shear_detection() {
        assert!(is_pure_shear(&SymTensor2::shear(3.0), 1e-12));
        let a = shear_stress(&model(HyperKind::OgdenA), ShearMode::Lfss, 0.5).unwrap();
        assert!(!is_pure_shear(&a.sigma, 1e-12) && !is_pure_shear(&a.sigma_bar, 1e-12));
        let p = shear_stress(&model(HyperKind::Hlih(ScaleFunction::PELZER)), ShearMode::Lfss, 1.0).unwrap();
        assert!(is_pure_shear(&p.sigma, 1e-12));
        assert!(!is_pure_shear(&p.sigma_bar, 1e-12));
    }

    #[test]
    fn pure_shear_eulerian_never_lagrangian() {
        for m in reference_models(1.0, 0.0) {
            let p = shear_stress(&m, ShearMode::Lfss, 0.7).unwrap();
            if is_pure_shear(&p.sigma, 1e-12) {
                let expected = -p.sigma.s12 * 1.4f64.sinh() / 1.4f64.cosh();
                assert!((p.sigma_bar.s11 - expected).abs() < 1e-12 * p.sigma.s12.abs().max(1.0));
                assert!(!is_pure_shear(&p.sigma_bar, 1e-12));
            }
        }
    }

    #[test]
    fn energy_examples() {
        assert_eq!(mr_energy(0.5, 0.5, 1.0, &Tensor2::IDENTITY).unwrap(), 0.0);
        let f = deformation_gradient(ShearMode::Lfss, 0.5);
        let w = mr_energy(0.5, 0.5, 1.0, &f).unwrap();
        let wf = mr_energy_frobenius(0.5, 0.5, 1.0, &f).unwrap();
        assert!((w - (1f64.cosh() - 1.0)).abs() < 1e-12);
        assert!((w - wf).abs() < 1e-12);
        let s: f64 = 1.7;
        let diag = Tensor2::new(s, 0.0, 0.0, 1.0 / s);
        let expected = (0.3 + 0.9) * 0.5 * (s * s + 1.0 / (s * s) - 2.0);
        assert!((mr_energy(0.3, 0.9, 2.0, &diag).unwrap() - expected).abs() < 1e-12);
        assert!((mr_energy_frobenius(0.3, 0.9, 2.0, &diag).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn energy_forms_agree_off_isochoric() {
        let f = Tensor2::new(1.2, 0.3, -0.1, 0.9);
        let a = mr_energy(0.7, 0.4, 1.3, &f).unwrap();
        let b = mr_energy_frobenius(0.7, 0.4, 1.3, &f).unwrap();
        assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn energy_rejects_inverted() {
        let f = Tensor2::new(1.0, 0.0, 0.0, -1.0);
        assert!(mr_energy(1.0, 0.0, 0.0, &f).is_err());
        assert!(mr_energy_frobenius(1.0, 0.0, 0.0, &f).is_err());
    }

    #[test]
    fn energy_stress_matches_closed_form() {
        let f = deformation_gradient(ShearMode::Lfss, 0.5);
        let fd = stress_from_energy(0.5, 0.5, 0.0, &f, 1e-5).unwrap();
        let m = HyperelasticModel::mooney_rivlin(0.5, 0.5, 0.0).unwrap();
        let exact = kirchhoff_stress(&m, &shear_stretch(0.5), 1.0).unwrap();
        assert!(fd.max_abs_diff(&exact) < 1e-8);

        let f = deformation_gradient(ShearMode::Rfss, 1.0);
        let fd = stress_from_energy(1.0, 0.0, 0.0, &f, 1e-5).unwrap();
        let exact = shear_stress(&model(HyperKind::OgdenA), ShearMode::Rfss, 1.0).unwrap().sigma;
        assert!(fd.max_abs_diff(&exact) < 1e-8);
    }

    #[test]
    fn energy_stress_with_volume_change() {
        let f = Tensor2::new(1.3, 0.2, 0.1, 1.1);
        let m = HyperelasticModel::mooney_rivlin(0.6, 0.4, 0.8).unwrap();
        let v = polar_decompose(&f).unwrap().v;
        let exact = kirchhoff_stress(&m, &v, f.det()).unwrap();
        let fd = stress_from_energy(0.6, 0.4, 0.8, &f, 1e-5).unwrap();
        assert!(fd.max_abs_diff(&exact) < 1e-8);
    }

    #[test]
    fn energy_stress_rejects_coincident() {
        assert_eq!(stress_from_energy(1.0, 0.0, 0.0, &Tensor2::IDENTITY, 1e-5), Err(Error::CoincidentStretches));
    }

    #[test]
    fn zj_rate_at_reference() {
        let d = SymTensor2::new(0.3, -0.1, 0.7);
        let r = mr_zj_rate(&d, &SymTensor2::IDENTITY, 0.4, 0.6, 1.5).unwrap();
        let hooke = d * 2.0 + SymTensor2::IDENTITY * (1.5 * d.trace());
        assert!(r.max_abs_diff(&hooke) < 1e-15);
    }

    #[test]
    fn zj_rate_equal_moduli_and_tensor_form() {
        let (c, ci) = left_cg(ShearMode::Lfss, 0.5).unwrap();
        let d = rate_tensors(ShearMode::Lfss, 0.5, 1.0).unwrap().d;
        let r = mr_zj_rate(&d, &c, 0.5, 0.5, 1.0).unwrap();
        let m = c + ci;
        let expected = ((d * m + m * d) * 0.5).sym() + SymTensor2::IDENTITY * d.trace();
        assert!(r.max_abs_diff(&expected) < 1e-12);
        let c4 = assemble_elasticity_mr(&c, 0.5, 0.5, 1.0).unwrap();
        assert!(c4.contract(&d).max_abs_diff(&r) < 1e-12);
    }

    #[test]
    fn zj_rate_matches_numeric_derivative() {
        let m = HyperelasticModel::mooney_rivlin(0.7, 0.3, 0.0).unwrap();
        let alpha = 0.6;
        let tau = |a: f64| shear_stress(&m, ShearMode::Lfss, a).unwrap().sigma;
        let rates = rate_tensors(ShearMode::Lfss, alpha, 1.0).unwrap();
        let (c, _) = left_cg(ShearMode::Lfss, alpha).unwrap();
        let exact = mr_zj_rate(&rates.d, &c, 0.7, 0.3, 0.0).unwrap();
        let err = |h: f64| {
            let dot = (tau(alpha + h) - tau(alpha - h)) * (0.5 / h);
            let t = tau(alpha);
            let numeric = dot + rates.w.commutator_with(&t);
            numeric.max_abs_diff(&exact)
        };
        let (e1, e2) = (err(1e-2), err(5e-3));
        assert!(e2 < 1e-4);
        assert!((3.5..=4.5).contains(&(e1 / e2)), "{}", e1 / e2);
    }

    #[test]
    fn parse_and_name() {
        for (name, kind) in [
            ("hlih-h", HyperKind::Hlih(ScaleFunction::HENCKY)),
            ("hlih-p", HyperKind::Hlih(ScaleFunction::PELZER)),
            ("hlih-m", HyperKind::Hlih(ScaleFunction::MOONEY)),
            ("hlih:green-lagrange", HyperKind::Hlih(ScaleFunction::GREEN_LAGRANGE)),
            ("hlih:bi:0.5", HyperKind::Hlih(ScaleFunction::BazantItskov(0.5))),
            ("ogden-a", HyperKind::OgdenA),
            ("ogden-b", HyperKind::OgdenB),
            ("obi:2", HyperKind::Obi(2.0)),
        ] {
            let m = HyperelasticModel::parse(name, 1.0, 0.0).unwrap();
            assert_eq!(m.kind, kind);
            assert_eq!(HyperelasticModel::parse(&m.name(), 1.0, 0.0).unwrap(), m);
        }
        let m = HyperelasticModel::parse("mr:0.25,0.75", 9.0, 0.0).unwrap();
        assert_eq!(m.kind, HyperKind::MooneyRivlin { mu1: 0.25, mu2: 0.75 });
        assert_eq!(m.mu, 1.0);
        for bad in ["hlih-x", "obi:-1", "obi:x", "mr:1", "mr:a,b", "mr:-1,2", "hypo-zj"] {
            assert!(HyperelasticModel::parse(bad, 1.0, 0.0).is_err(), "{bad}");
        }
        assert!(HyperelasticModel::new(HyperKind::OgdenA, 0.0, 0.0).is_err());
        assert!(HyperelasticModel::new(HyperKind::MooneyRivlin { mu1: 0.5, mu2: 0.2 }, 1.0, 0.0).is_err());
    }
}
