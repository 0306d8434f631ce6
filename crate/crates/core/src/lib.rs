//! Finite-strain verification lab for Hooke-like isotropic hyperelastic and
//! hypoelastic models under left/right finite simple shear.

pub mod cli;
pub mod error;
pub mod hyper;
pub mod hypo;
pub mod kinematics;
pub mod strain;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
