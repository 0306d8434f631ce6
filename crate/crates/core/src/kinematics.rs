//! Left/right finite simple shear and classical simple shear.
//!
//! The shear parameter `alpha` is the logarithm of the major principal
//! stretch for LFSS and RFSS. For classical simple shear the same argument
//! is the amount of shear `γˢ` in `x₁ = X₁ + γˢX₂`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tensor::{polar_decompose, spectral_decompose, SkewTensor2, SymTensor2, Tensor2, EIGEN_TOL};

/// Default central-difference step along the shear parameter.
pub const FD_STEP: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShearMode {
    Lfss,
    Rfss,
    SimpleShear,
}

impl ShearMode {
    pub const ALL: [ShearMode; 3] = [ShearMode::Lfss, ShearMode::Rfss, ShearMode::SimpleShear];

    pub fn name(&self) -> &'static str {
        match self {
            ShearMode::Lfss => "lfss",
            ShearMode::Rfss => "rfss",
            ShearMode::SimpleShear => "simple-shear",
        }
    }
}

impl fmt::Display for ShearMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ShearMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lfss" => Ok(ShearMode::Lfss),
            "rfss" => Ok(ShearMode::Rfss),
            "simple-shear" | "simple_shear" | "ss" => Ok(ShearMode::SimpleShear),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

/// Coefficients `(a, b, c)` of `x₁ = aX₁ + bX₂`, `x₂ = cX₂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MotionParameters {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

pub fn motion_parameters(mode: ShearMode, alpha: f64) -> MotionParameters {
    let ch = (2.0 * alpha).cosh();
    let sh = (2.0 * alpha).sinh();
    let root = ch.sqrt();
    match mode {
        ShearMode::Lfss => MotionParameters { a: 1.0 / root, b: sh / root, c: root },
        ShearMode::Rfss => MotionParameters { a: root, b: sh / root, c: 1.0 / root },
        ShearMode::SimpleShear => MotionParameters { a: 1.0, b: alpha, c: 1.0 },
    }
}

pub fn deformation_gradient(mode: ShearMode, alpha: f64) -> Tensor2 {
    let p = motion_parameters(mode, alpha);
    Tensor2::new(p.a, p.b, 0.0, p.c)
}

/// Stretch tensor shared by LFSS (as `V`) and RFSS (as `U`).
pub fn shear_stretch(alpha: f64) -> SymTensor2 {
    SymTensor2::new(alpha.cosh(), alpha.cosh(), alpha.sinh())
}

/// Rotation factor shared by LFSS and RFSS.
pub fn shear_rotation(alpha: f64) -> Tensor2 {
    let k = 1.0 / (2.0 * alpha).cosh().sqrt();
    Tensor2::new(alpha.cosh() * k, alpha.sinh() * k, -alpha.sinh() * k, alpha.cosh() * k)
}

/// Eigenprojections of the shear stretch, fixed for every `alpha > 0`.
pub fn shear_projections() -> [SymTensor2; 2] {
    [SymTensor2::new(0.5, 0.5, 0.5), SymTensor2::new(0.5, 0.5, -0.5)]
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KinematicState {
    pub mode: ShearMode,
    pub alpha: f64,
    pub f: Tensor2,
    pub r: Tensor2,
    pub u: SymTensor2,
    pub v: SymTensor2,
    pub lambda1: f64,
    pub lambda2: f64,
    pub p1: SymTensor2,
    pub p2: SymTensor2,
    pub gamma_star: f64,
    pub gamma: f64,
    pub theta_star: f64,
    pub theta: f64,
}

impl KinematicState {
    /// `V` for LFSS and simple shear, `U` for RFSS.
    pub fn stretch(&self) -> SymTensor2 {
        match self.mode {
            ShearMode::Rfss => self.u,
            _ => self.v,
        }
    }

    /// Shear amount `b/c` of the motion and its angle in degrees.
    pub fn shear_angle_deg(&self) -> (f64, f64) {
        match self.mode {
            ShearMode::Lfss => (self.gamma_star, self.theta_star.to_degrees()),
            _ => (self.gamma, self.theta.to_degrees()),
        }
    }

    pub fn jacobian(&self) -> f64 {
        self.f.det()
    }
}

pub fn kinematic_state(mode: ShearMode, alpha: f64) -> Result<KinematicState> {
    if !alpha.is_finite() {
        return Err(Error::NonFinite);
    }
    let f = deformation_gradient(mode, alpha);
    match mode {
        ShearMode::Lfss | ShearMode::Rfss => {
            let stretch = shear_stretch(alpha);
            let r = shear_rotation(alpha);
            let rotated = crate::tensor::rotate_unchecked(&stretch, &r, crate::tensor::RotateDirection::Forward);
            let backward = crate::tensor::rotate_unchecked(&stretch, &r, crate::tensor::RotateDirection::Backward);
            let (u, v) = if mode == ShearMode::Lfss { (backward, stretch) } else { (stretch, rotated) };
            let [p1, p2] = shear_projections();
            let gs = (2.0 * alpha).tanh();
            let g = (2.0 * alpha).sinh();
            Ok(KinematicState {
                mode,
                alpha,
                f,
                r,
                u,
                v,
                lambda1: alpha.exp(),
                lambda2: (-alpha).exp(),
                p1,
                p2,
                gamma_star: gs,
                gamma: g,
                theta_star: gs.atan(),
                theta: g.atan(),
            })
        }
        ShearMode::SimpleShear => {
            let polar = polar_decompose(&f)?;
            let spec = spectral_decompose(&polar.v, EIGEN_TOL)?;
            let [p1, p2] = if spec.eigenindex == 2 { spec.projections } else { shear_projections() };
            Ok(KinematicState {
                mode,
                alpha,
                f,
                r: polar.r,
                u: polar.u,
                v: polar.v,
                lambda1: spec.eigenvalues[0],
                lambda2: spec.eigenvalues[1],
                p1,
                p2,
                gamma_star: alpha,
                gamma: alpha,
                theta_star: alpha.atan(),
                theta: alpha.atan(),
            })
        }
    }
}

/// Velocity gradient and its parts; `d_hat = Rᵀ·d·R`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateTensors {
    pub l: Tensor2,
    pub d: SymTensor2,
    pub w: SkewTensor2,
    pub d_hat: SymTensor2,
    pub alpha_dot: f64,
}

pub fn rate_tensors(mode: ShearMode, alpha: f64, alpha_dot: f64) -> Result<RateTensors> {
    let t = (2.0 * alpha).tanh();
    let ch = (2.0 * alpha).cosh();
    let l = match mode {
        ShearMode::Lfss => Tensor2::new(-t, 2.0, 0.0, t),
        ShearMode::Rfss => Tensor2::new(t, 2.0 / ch, 0.0, -t),
        ShearMode::SimpleShear => Tensor2::new(0.0, 1.0, 0.0, 0.0),
    } * alpha_dot;
    let r = kinematic_state(mode, alpha)?.r;
    let d = l.sym();
    let d_hat = (r.transpose() * d * r).sym();
    Ok(RateTensors { l, d, w: l.skew(), d_hat, alpha_dot })
}

/// Left Cauchy–Green tensor `c = F·Fᵀ` and its inverse.
pub fn left_cg(mode: ShearMode, alpha: f64) -> Result<(SymTensor2, SymTensor2)> {
    match mode {
        ShearMode::Lfss => {
            let ch = (2.0 * alpha).cosh();
            let sh = (2.0 * alpha).sinh();
            Ok((SymTensor2::new(ch, ch, sh), SymTensor2::new(ch, ch, -sh)))
        }
        _ => {
            let f = deformation_gradient(mode, alpha);
            let c = (f * f.transpose()).sym();
            Ok((c, c.inverse()?))
        }
    }
}

/// Spins obtained by central differences along the shear parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericSpins {
    /// `Ṙ·Rᵀ`.
    pub omega_r: SkewTensor2,
    /// `skew(Ḟ·F⁻¹)`.
    pub w: SkewTensor2,
    /// `skew(U̇·U⁻¹)`.
    pub w_lagrangian: SkewTensor2,
}

impl NumericSpins {
    /// Residual of `w = ω^R + R·W·Rᵀ`.
    pub fn relation_residual(&self, r: &Tensor2) -> f64 {
        let rhs = self.omega_r.to_tensor() + *r * self.w_lagrangian.to_tensor() * r.transpose();
        (self.w.to_tensor() - rhs).max_abs()
    }
}

pub fn numeric_spins(mode: ShearMode, alpha: f64, h: f64) -> Result<NumericSpins> {
    if !(h > 0.0 && alpha > h) {
        return Err(Error::InvalidParameter(format!("need alpha > h > 0, got alpha = {alpha}, h = {h}")));
    }
    let plus = kinematic_state(mode, alpha + h)?;
    let minus = kinematic_state(mode, alpha - h)?;
    let mid = kinematic_state(mode, alpha)?;
    let inv2h = 0.5 / h;
    let r_dot = (plus.r - minus.r) * inv2h;
    let u_dot = (plus.u - minus.u) * inv2h;
    let f_dot = (plus.f - minus.f) * inv2h;
    Ok(NumericSpins {
        omega_r: (r_dot * mid.r.transpose()).skew(),
        w: (f_dot * mid.f.inverse()?).skew(),
        w_lagrangian: (u_dot * mid.u.inverse()?).skew(),
    })
}

/// `coef·(P₁·d·P₂ − P₂·d·P₁)`, the spin built from a two-projection basis.
pub fn projection_spin(coef: f64, p1: &SymTensor2, p2: &SymTensor2, d: &SymTensor2) -> SkewTensor2 {
    ((*p1 * *d * *p2 - *p2 * *d * *p1) * coef).skew()
}

/// Images of the unit-square corners (0,0), (1,0), (1,1), (0,1).
pub fn deform_unit_square(mode: ShearMode, alpha: f64) -> [[f64; 2]; 4] {
    let f = deformation_gradient(mode, alpha);
    [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]].map(|x| f.apply(x))
}

/// Shoelace area of a quadrilateral.
pub fn polygon_area(corners: &[[f64; 2]; 4]) -> f64 {
    let mut twice = 0.0;
    for i in 0..4 {
        let [x0, y0] = corners[i];
        let [x1, y1] = corners[(i + 1) % 4];
        twice += x0 * y1 - x1 * y0;
    }
    0.5 * twice
}
