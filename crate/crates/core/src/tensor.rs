//! Small exact tensor algebra in two dimensions.
//!
//! Every deformation in this crate is isochoric plane strain, so all
//! second-order tensors are 2×2 and the out-of-plane direction is implicit
//! (stretch 1, stress 0). Symmetric tensors are stored by their three
//! independent components; skew tensors by their single off-diagonal entry.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Relative tolerance below which two eigenvalues are treated as coincident.
pub const EIGEN_TOL: f64 = 1e-9;

/// Orthogonality tolerance accepted by [`rotate`].
pub const ORTHO_TOL: f64 = 1e-10;

/// General 2×2 tensor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tensor2 {
    pub m11: f64,
    pub m12: f64,
    pub m21: f64,
    pub m22: f64,
}

/// Symmetric 2×2 tensor; `s21` is `s12` by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymTensor2 {
    pub s11: f64,
    pub s22: f64,
    pub s12: f64,
}

/// Skew 2×2 tensor `[[0, w12], [-w12, 0]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SkewTensor2 {
    pub w12: f64,
}

impl Tensor2 {
    pub const IDENTITY: Tensor2 = Tensor2 { m11: 1.0, m12: 0.0, m21: 0.0, m22: 1.0 };
    pub const ZERO: Tensor2 = Tensor2 { m11: 0.0, m12: 0.0, m21: 0.0, m22: 0.0 };

    pub const fn new(m11: f64, m12: f64, m21: f64, m22: f64) -> Self {
        Tensor2 { m11, m12, m21, m22 }
    }

    pub fn from_rows(rows: [[f64; 2]; 2]) -> Self {
        Tensor2::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    }

    pub fn to_rows(&self) -> [[f64; 2]; 2] {
        [[self.m11, self.m12], [self.m21, self.m22]]
    }

    pub fn det(&self) -> f64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    pub fn trace(&self) -> f64 {
        self.m11 + self.m22
    }

    pub fn transpose(&self) -> Tensor2 {
        Tensor2::new(self.m11, self.m21, self.m12, self.m22)
    }

    pub fn inverse(&self) -> Result<Tensor2> {
        let det = self.det();
        if det == 0.0 || !det.is_finite() {
            return Err(Error::NonPositiveDeterminant(det));
        }
        Ok(Tensor2::new(self.m22 / det, -self.m12 / det, -self.m21 / det, self.m11 / det))
    }

    pub fn sym(&self) -> SymTensor2 {
        SymTensor2::new(self.m11, self.m22, 0.5 * (self.m12 + self.m21))
    }

    pub fn skew(&self) -> SkewTensor2 {
        SkewTensor2::new(0.5 * (self.m12 - self.m21))
    }

    pub fn is_finite(&self) -> bool {
        self.m11.is_finite() && self.m12.is_finite() && self.m21.is_finite() && self.m22.is_finite()
    }

    /// `A : B = A_ij B_ij`.
    pub fn double_contract(&self, other: &Tensor2) -> f64 {
        self.m11 * other.m11 + self.m12 * other.m12 + self.m21 * other.m21 + self.m22 * other.m22
    }

    pub fn frobenius_norm_sq(&self) -> f64 {
        self.double_contract(self)
    }

    pub fn max_abs(&self) -> f64 {
        self.m11.abs().max(self.m12.abs()).max(self.m21.abs()).max(self.m22.abs())
    }

    pub fn max_abs_diff(&self, other: &Tensor2) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn apply(&self, x: [f64; 2]) -> [f64; 2] {
        [self.m11 * x[0] + self.m12 * x[1], self.m21 * x[0] + self.m22 * x[1]]
    }

    /// Deviation `max |Q·Qᵀ − I|`.
    pub fn orthogonality_defect(&self) -> f64 {
        (*self * self.transpose() - Tensor2::IDENTITY).max_abs()
    }

    /// Proper rotation by `angle` radians (counter-clockwise).
    pub fn rotation(angle: f64) -> Tensor2 {
        let (s, c) = angle.sin_cos();
        Tensor2::new(c, -s, s, c)
    }
}

impl SymTensor2 {
    pub const IDENTITY: SymTensor2 = SymTensor2 { s11: 1.0, s22: 1.0, s12: 0.0 };
    pub const ZERO: SymTensor2 = SymTensor2 { s11: 0.0, s22: 0.0, s12: 0.0 };

    pub const fn new(s11: f64, s22: f64, s12: f64) -> Self {
        SymTensor2 { s11, s22, s12 }
    }

    /// `[[0, s], [s, 0]]`.
    pub const fn shear(s: f64) -> Self {
        SymTensor2 { s11: 0.0, s22: 0.0, s12: s }
    }

    pub fn to_tensor(&self) -> Tensor2 {
        Tensor2::new(self.s11, self.s12, self.s12, self.s22)
    }

    pub fn trace(&self) -> f64 {
        self.s11 + self.s22
    }

    pub fn det(&self) -> f64 {
        self.s11 * self.s22 - self.s12 * self.s12
    }

    pub fn inverse(&self) -> Result<SymTensor2> {
        let det = self.det();
        if det == 0.0 || !det.is_finite() {
            return Err(Error::NonPositiveDeterminant(det));
        }
        Ok(SymTensor2::new(self.s22 / det, self.s11 / det, -self.s12 / det))
    }

    pub fn is_finite(&self) -> bool {
        self.s11.is_finite() && self.s22.is_finite() && self.s12.is_finite()
    }

    pub fn is_positive_definite(&self) -> bool {
        self.s11 > 0.0 && self.det() > 0.0
    }

    /// `A : B` for symmetric arguments.
    pub fn double_contract(&self, other: &SymTensor2) -> f64 {
        self.s11 * other.s11 + self.s22 * other.s22 + 2.0 * self.s12 * other.s12
    }

    /// Square `S·S`, symmetric for symmetric `S`.
    pub fn squared(&self) -> SymTensor2 {
        SymTensor2::new(
            self.s11 * self.s11 + self.s12 * self.s12,
            self.s12 * self.s12 + self.s22 * self.s22,
            self.s12 * (self.s11 + self.s22),
        )
    }

    pub fn max_abs(&self) -> f64 {
        self.s11.abs().max(self.s22.abs()).max(self.s12.abs())
    }

    pub fn max_abs_diff(&self, other: &SymTensor2) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn to_rows(&self) -> [[f64; 2]; 2] {
        [[self.s11, self.s12], [self.s12, self.s22]]
    }
}

impl SkewTensor2 {
    pub const ZERO: SkewTensor2 = SkewTensor2 { w12: 0.0 };

    pub const fn new(w12: f64) -> Self {
        SkewTensor2 { w12 }
    }

    pub fn to_tensor(&self) -> Tensor2 {
        Tensor2::new(0.0, self.w12, -self.w12, 0.0)
    }

    /// Commutator term `S·W − W·S`, which is symmetric for symmetric `S`.
    pub fn commutator_with(&self, s: &SymTensor2) -> SymTensor2 {
        (s.to_tensor() * self.to_tensor() - self.to_tensor() * s.to_tensor()).sym()
    }
}

macro_rules! impl_linear {
    ($ty:ident { $($f:ident),+ }) => {
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                $ty { $($f: self.$f + rhs.$f),+ }
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                $ty { $($f: self.$f - rhs.$f),+ }
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty { $($f: -self.$f),+ }
            }
        }
        impl Mul<f64> for $ty {
            type Output = $ty;
            fn mul(self, k: f64) -> $ty {
                $ty { $($f: self.$f * k),+ }
            }
        }
        impl Mul<$ty> for f64 {
            type Output = $ty;
            fn mul(self, t: $ty) -> $ty {
                t * self
            }
        }
    };
}

impl_linear!(Tensor2 { m11, m12, m21, m22 });
impl_linear!(SymTensor2 { s11, s22, s12 });
impl_linear!(SkewTensor2 { w12 });

impl Mul for Tensor2 {
    type Output = Tensor2;
    fn mul(self, b: Tensor2) -> Tensor2 {
        Tensor2::new(
            self.m11 * b.m11 + self.m12 * b.m21,
            self.m11 * b.m12 + self.m12 * b.m22,
            self.m21 * b.m11 + self.m22 * b.m21,
            self.m21 * b.m12 + self.m22 * b.m22,
        )
    }
}

impl Mul for SymTensor2 {
    type Output = Tensor2;
    fn mul(self, b: SymTensor2) -> Tensor2 {
        self.to_tensor() * b.to_tensor()
    }
}

impl Mul<SymTensor2> for Tensor2 {
    type Output = Tensor2;
    fn mul(self, b: SymTensor2) -> Tensor2 {
        self * b.to_tensor()
    }
}

impl Mul<Tensor2> for SymTensor2 {
    type Output = Tensor2;
    fn mul(self, b: Tensor2) -> Tensor2 {
        self.to_tensor() * b
    }
}

/// Spectral data of a symmetric tensor.
///
/// `eigenvalues` always holds both roots (repeated when `eigenindex == 1`).
/// `projections[i]` is the eigenprojection of the i-th distinct eigenvalue;
/// for `eigenindex == 1` the second slot is the zero tensor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectral2 {
    pub eigenvalues: [f64; 2],
    pub projections: [SymTensor2; 2],
    pub eigenindex: usize,
}

impl Spectral2 {
    /// Distinct `(eigenvalue, eigenprojection)` pairs.
    pub fn distinct(&self) -> impl Iterator<Item = (f64, SymTensor2)> + '_ {
        (0..self.eigenindex).map(move |i| (self.eigenvalues[i], self.projections[i]))
    }

    /// `Σ λᵢ Pᵢ`.
    pub fn reconstruct(&self) -> SymTensor2 {
        self.distinct().fold(SymTensor2::ZERO, |acc, (l, p)| acc + p * l)
    }
}

/// Eigenvalues in descending order with Sylvester eigenprojections.
pub fn spectral_decompose(s: &SymTensor2, tol: f64) -> Result<Spectral2> {
    if !s.is_finite() {
        return Err(Error::NonFinite);
    }
    let mean = 0.5 * (s.s11 + s.s22);
    let half_gap = (0.5 * (s.s11 - s.s22)).hypot(s.s12);
    let l1 = mean + half_gap;
    let l2 = mean - half_gap;
    if l1 - l2 <= tol * l1.abs().max(1.0) {
        return Ok(Spectral2 {
            eigenvalues: [l1, l1],
            projections: [SymTensor2::IDENTITY, SymTensor2::ZERO],
            eigenindex: 1,
        });
    }
    let gap = l1 - l2;
    let p1 = (*s - SymTensor2::IDENTITY * l2) * (1.0 / gap);
    let p2 = (*s - SymTensor2::IDENTITY * l1) * (-1.0 / gap);
    Ok(Spectral2 { eigenvalues: [l1, l2], projections: [p1, p2], eigenindex: 2 })
}

/// Isotropic tensor function `Σ f(λᵢ) Pᵢ`.
pub fn apply_isotropic<F>(s: &SymTensor2, f: F) -> Result<SymTensor2>
where
    F: Fn(f64) -> Result<f64>,
{
    let spec = spectral_decompose(s, EIGEN_TOL)?;
    let mut out = SymTensor2::ZERO;
    for (l, p) in spec.distinct() {
        out = out + p * f(l)?;
    }
    Ok(out)
}

/// Polar factors `F = R·U = V·R`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Polar {
    pub r: Tensor2,
    pub u: SymTensor2,
    pub v: SymTensor2,
}

pub fn polar_decompose(f: &Tensor2) -> Result<Polar> {
    if !f.is_finite() {
        return Err(Error::NonFinite);
    }
    let det = f.det();
    if det <= 0.0 {
        return Err(Error::NonPositiveDeterminant(det));
    }
    // In 2D, F + cof(F) is a positive multiple of the rotation factor.
    let c = f.m11 + f.m22;
    let s = f.m21 - f.m12;
    let norm = c.hypot(s);
    let r = Tensor2::new(c / norm, -s / norm, s / norm, c / norm);
    let u = (r.transpose() * *f).sym();
    let v = (*f * r.transpose()).sym();
    Ok(Polar { r, u, v })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RotateDirection {
    /// `R·S·Rᵀ` (Lagrangian to Eulerian).
    Forward,
    /// `Rᵀ·S·R` (Eulerian to Lagrangian).
    Backward,
}

pub fn rotate(s: &SymTensor2, r: &Tensor2, direction: RotateDirection) -> Result<SymTensor2> {
    let defect = r.orthogonality_defect();
    if defect.is_nan() || defect > ORTHO_TOL {
        return Err(Error::NotOrthogonal(defect));
    }
    Ok(rotate_unchecked(s, r, direction))
}

pub(crate) fn rotate_unchecked(s: &SymTensor2, r: &Tensor2, direction: RotateDirection) -> SymTensor2 {
    match direction {
        RotateDirection::Forward => (*r * *s * r.transpose()).sym(),
        RotateDirection::Backward => (r.transpose() * *s * *r).sym(),
    }
}

/// Congruence `A·S·Aᵀ` with a general tensor.
pub fn push(s: &SymTensor2, a: &Tensor2) -> SymTensor2 {
    (*a * *s * a.transpose()).sym()
}

/// Fourth-order tensor with minor symmetries, stored on the ordered basis
/// (11, 22, 12). `table[I][J] = C_ijkl` with I = (ij), J = (kl). The shear
/// slot is counted twice when contracting with a symmetric tensor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tensor4Sym {
    pub table: [[f64; 3]; 3],
}

const VOIGT: [(usize, usize); 3] = [(0, 0), (1, 1), (0, 1)];
const SHEAR_WEIGHT: [f64; 3] = [1.0, 1.0, 2.0];

fn component(s: &SymTensor2, i: usize, j: usize) -> f64 {
    match (i, j) {
        (0, 0) => s.s11,
        (1, 1) => s.s22,
        _ => s.s12,
    }
}

impl Tensor4Sym {
    pub const ZERO: Tensor4Sym = Tensor4Sym { table: [[0.0; 3]; 3] };

    fn from_fn(f: impl Fn(usize, usize, usize, usize) -> f64) -> Tensor4Sym {
        let mut table = [[0.0; 3]; 3];
        for (a, &(i, j)) in VOIGT.iter().enumerate() {
            for (b, &(k, l)) in VOIGT.iter().enumerate() {
                table[a][b] = f(i, j, k, l);
            }
        }
        Tensor4Sym { table }
    }

    /// Dyadic product: `(A ⊗ B) : X = A (B : X)`.
    pub fn dyad(a: &SymTensor2, b: &SymTensor2) -> Tensor4Sym {
        Tensor4Sym::from_fn(|i, j, k, l| component(a, i, j) * component(b, k, l))
    }

    /// Symmetric product: `(A ⊗ˢʸᵐ B) : X = A · sym(X) · Bᵀ`.
    pub fn sym_product(a: &SymTensor2, b: &SymTensor2) -> Tensor4Sym {
        Tensor4Sym::from_fn(|i, j, k, l| {
            0.5 * (component(a, i, k) * component(b, j, l) + component(a, i, l) * component(b, j, k))
        })
    }

    pub fn contract(&self, x: &SymTensor2) -> SymTensor2 {
        let xs = [x.s11, x.s22, x.s12];
        let row = |a: usize| (0..3).map(|b| self.table[a][b] * xs[b] * SHEAR_WEIGHT[b]).sum::<f64>();
        SymTensor2::new(row(0), row(1), row(2))
    }

    pub fn is_major_symmetric(&self) -> bool {
        (0..3).all(|a| (0..3).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn max_abs_diff(&self, other: &Tensor4Sym) -> f64 {
        let mut m = 0.0f64;
        for a in 0..3 {
            for b in 0..3 {
                m = m.max((self.table[a][b] - other.table[a][b]).abs());
            }
        }
        m
    }
}

impl Add for Tensor4Sym {
    type Output = Tensor4Sym;
    fn add(self, rhs: Tensor4Sym) -> Tensor4Sym {
        let mut table = self.table;
        for (row, r) in table.iter_mut().zip(rhs.table.iter()) {
            for (x, y) in row.iter_mut().zip(r.iter()) {
                *x += y;
            }
        }
        Tensor4Sym { table }
    }
}

impl Mul<f64> for Tensor4Sym {
    type Output = Tensor4Sym;
    fn mul(self, k: f64) -> Tensor4Sym {
        let mut table = self.table;
        table.iter_mut().flatten().for_each(|x| *x *= k);
        Tensor4Sym { table }
    }
}

/// Zaremba–Jaumann elasticity tensor of the compressible Mooney–Rivlin model:
/// `I ⊗ˢʸᵐ M + M ⊗ˢʸᵐ I + λ I ⊗ I` with `M = μ₁c + μ₂c⁻¹`.
pub fn assemble_elasticity_mr(c: &SymTensor2, mu1: f64, mu2: f64, lambda: f64) -> Result<Tensor4Sym> {
    if !c.is_finite() {
        return Err(Error::NonFinite);
    }
    if !c.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let m = *c * mu1 + c.inverse()? * mu2;
    let i = SymTensor2::IDENTITY;
    let sym = Tensor4Sym::sym_product(&i, &m) + Tensor4Sym::sym_product(&m, &i);
    let mut out = sym + Tensor4Sym::dyad(&i, &i) * lambda;
    for a in 0..3 {
        for b in (a + 1)..3 {
            let avg = 0.5 * (out.table[a][b] + out.table[b][a]);
            out.table[a][b] = avg;
            out.table[b][a] = avg;
        }
    }
    Ok(out)
}
