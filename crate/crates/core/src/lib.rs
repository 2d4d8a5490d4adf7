//! Exact symmetric-function machinery for multivariate Meixner–Pollaczek and
//! Laguerre polynomials on symmetric cones, plus the numeric moment layer.
//!
//! Everything exact runs on [`rational::Rational`]. Floating point appears only
//! in [`gamma`], [`quadrature`], [`barnes`], [`gue`] and the numeric generating
//! check in [`multivariate`].

#![no_std]

extern crate alloc;

pub mod barnes;
pub mod cone;
pub mod error;
pub mod gamma;
pub mod gue;
pub mod interp;
pub mod jack;
pub mod linalg;
mod memo;
pub mod multivariate;
pub mod partition;
pub mod poly;
pub mod quadrature;
pub mod rational;
pub mod shift;
pub mod sympoly;
pub mod univariate;

pub use cone::ConeParams;
pub use error::{Error, Result};
pub use partition::Partition;
pub use rational::Rational;
pub use sympoly::{SpectralPoly, SymPoly, TruncatedSymSeries};
