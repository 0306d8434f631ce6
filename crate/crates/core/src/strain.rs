//! Scale functions of the Hill strain family.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tensor::{apply_isotropic, SymTensor2};

/// Parameters smaller than this collapse to the logarithmic branch.
pub const LOG_BRANCH_EPS: f64 = 1e-12;

/// Grid size used by [`is_symmetrically_physical`] in the default checks.
pub const SP_SAMPLES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedStrain {
    GreenLagrange,
    Biot,
    Hencky,
    Hill,
    Swainger,
    KarniReiner,
    Almansi,
    Finger,
    Mooney,
    Pelzer,
}

impl NamedStrain {
    pub const ALL: [NamedStrain; 10] = [
        NamedStrain::GreenLagrange,
        NamedStrain::Biot,
        NamedStrain::Hencky,
        NamedStrain::Hill,
        NamedStrain::Swainger,
        NamedStrain::KarniReiner,
        NamedStrain::Almansi,
        NamedStrain::Finger,
        NamedStrain::Mooney,
        NamedStrain::Pelzer,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            NamedStrain::GreenLagrange => "green-lagrange",
            NamedStrain::Biot => "biot",
            NamedStrain::Hencky => "hencky",
            NamedStrain::Hill => "hill",
            NamedStrain::Swainger => "swainger",
            NamedStrain::KarniReiner => "karni-reiner",
            NamedStrain::Almansi => "almansi",
            NamedStrain::Finger => "finger",
            NamedStrain::Mooney => "mooney",
            NamedStrain::Pelzer => "pelzer",
        }
    }
}

/// Strain-generating function `f` with `f(1) = 0`, `f'(1) = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScaleFunction {
    /// `(λⁿ − 1)/n`, logarithm at `n = 0`.
    DoyleEricksen(f64),
    /// `(λʳ − λ⁻ʳ)/(2r)`, logarithm at `r = 0`.
    BazantItskov(f64),
    Named(NamedStrain),
}

impl ScaleFunction {
    pub const HENCKY: ScaleFunction = ScaleFunction::Named(NamedStrain::Hencky);
    pub const PELZER: ScaleFunction = ScaleFunction::Named(NamedStrain::Pelzer);
    pub const MOONEY: ScaleFunction = ScaleFunction::Named(NamedStrain::Mooney);
    pub const GREEN_LAGRANGE: ScaleFunction = ScaleFunction::Named(NamedStrain::GreenLagrange);

    pub fn doyle_ericksen(n: f64) -> Result<ScaleFunction> {
        if !n.is_finite() {
            return Err(Error::InvalidParameter(format!("Doyle-Ericksen exponent {n}")));
        }
        Ok(ScaleFunction::DoyleEricksen(if n.abs() < LOG_BRANCH_EPS { 0.0 } else { n }))
    }

    pub fn bazant_itskov(r: f64) -> Result<ScaleFunction> {
        if !r.is_finite() || r < 0.0 {
            return Err(Error::InvalidParameter(format!("Bazant-Itskov exponent {r}")));
        }
        Ok(ScaleFunction::BazantItskov(if r < LOG_BRANCH_EPS { 0.0 } else { r }))
    }

    pub fn eval(&self, lambda: f64) -> Result<f64> {
        scale_eval(self, lambda)
    }

    pub fn derivative(&self, lambda: f64) -> Result<f64> {
        scale_derivative(self, lambda)
    }

    pub fn name(&self) -> String {
        match self {
            ScaleFunction::DoyleEricksen(n) => format!("de:{n}"),
            ScaleFunction::BazantItskov(r) => format!("bi:{r}"),
            ScaleFunction::Named(tag) => tag.name().to_string(),
        }
    }
}

impl fmt::Display for ScaleFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for ScaleFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let parse_param = |p: &str| {
            p.trim().parse::<f64>().map_err(|_| Error::UnknownName(s.clone()))
        };
        if let Some(p) = s.strip_prefix("de:") {
            return ScaleFunction::doyle_ericksen(parse_param(p)?);
        }
        if let Some(p) = s.strip_prefix("bi:") {
            return ScaleFunction::bazant_itskov(parse_param(p)?);
        }
        NamedStrain::ALL
            .iter()
            .find(|tag| tag.name() == s)
            .map(|tag| ScaleFunction::Named(*tag))
            .ok_or_else(|| Error::UnknownName(s.clone()))
    }
}

fn check_domain(lambda: f64) -> Result<()> {
    if lambda > 0.0 && lambda.is_finite() {
        Ok(())
    } else {
        Err(Error::OutOfDomain(lambda))
    }
}

pub fn scale_eval(f: &ScaleFunction, lambda: f64) -> Result<f64> {
    check_domain(lambda)?;
    let ln = lambda.ln();
    Ok(match *f {
        ScaleFunction::DoyleEricksen(n) if n.abs() < LOG_BRANCH_EPS => ln,
        ScaleFunction::DoyleEricksen(n) => (n * ln).exp_m1() / n,
        ScaleFunction::BazantItskov(r) if r.abs() < LOG_BRANCH_EPS => ln,
        ScaleFunction::BazantItskov(r) => (r * ln).sinh() / r,
        ScaleFunction::Named(tag) => match tag {
            NamedStrain::GreenLagrange | NamedStrain::Finger => 0.5 * (lambda * lambda - 1.0),
            NamedStrain::Biot => lambda - 1.0,
            NamedStrain::Hencky => ln,
            NamedStrain::Hill | NamedStrain::Swainger => 1.0 - 1.0 / lambda,
            NamedStrain::KarniReiner | NamedStrain::Almansi => 0.5 * (1.0 - 1.0 / (lambda * lambda)),
            NamedStrain::Mooney => 0.25 * (lambda * lambda - 1.0 / (lambda * lambda)),
            NamedStrain::Pelzer => 0.5 * (lambda - 1.0 / lambda),
        },
    })
}

pub fn scale_derivative(f: &ScaleFunction, lambda: f64) -> Result<f64> {
    check_domain(lambda)?;
    let ln = lambda.ln();
    Ok(match *f {
        ScaleFunction::DoyleEricksen(n) if n.abs() < LOG_BRANCH_EPS => 1.0 / lambda,
        ScaleFunction::DoyleEricksen(n) => ((n - 1.0) * ln).exp(),
        ScaleFunction::BazantItskov(r) if r.abs() < LOG_BRANCH_EPS => 1.0 / lambda,
        ScaleFunction::BazantItskov(r) => (r * ln).cosh() / lambda,
        ScaleFunction::Named(tag) => match tag {
            NamedStrain::GreenLagrange | NamedStrain::Finger => lambda,
            NamedStrain::Biot => 1.0,
            NamedStrain::Hencky => 1.0 / lambda,
            NamedStrain::Hill | NamedStrain::Swainger => 1.0 / (lambda * lambda),
            NamedStrain::KarniReiner | NamedStrain::Almansi => 1.0 / (lambda * lambda * lambda),
            NamedStrain::Mooney => 0.5 * (lambda + 1.0 / (lambda * lambda * lambda)),
            NamedStrain::Pelzer => 0.5 * (1.0 + 1.0 / (lambda * lambda)),
        },
    })
}

/// `Σ f(λᵢ) Pᵢ` of a stretch tensor: Lagrangian for `U`, Eulerian for `V`.
pub fn strain_from_stretch(f: &ScaleFunction, stretch: &SymTensor2) -> Result<SymTensor2> {
    if !stretch.is_finite() {
        return Err(Error::NonFinite);
    }
    if !stretch.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    apply_isotropic(stretch, |l| scale_eval(f, l))
}

/// Log-spaced grid of `samples` points on `[e⁻², e²]`.
pub fn sp_grid(samples: usize) -> Vec<f64> {
    if samples == 1 {
        return vec![1.0];
    }
    (0..samples)
        .map(|i| (-2.0 + 4.0 * i as f64 / (samples - 1) as f64).exp())
        .collect()
}

/// `f(1/λ) = −f(λ)` on the log-spaced grid, within `1e-10·max(1, |f|)`.
pub fn is_symmetrically_physical(f: &ScaleFunction, samples: usize) -> bool {
    sp_grid(samples.max(1)).into_iter().all(|l| {
        match (scale_eval(f, l), scale_eval(f, 1.0 / l)) {
            (Ok(a), Ok(b)) => (a + b).abs() <= 1e-10 * a.abs().max(1.0),
            _ => false,
        }
    })
}
