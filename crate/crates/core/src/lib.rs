//! Exact and numeric machinery for mixed polynomials `f(z, z̄)` in two complex
//! variables: Wirtinger calculus, radial/polar weighted homogeneity, radial
//! Newton polygons and face functions, regular fans, toric charts with strict
//! transforms, and mixed-critical-point certification.
//!
//! The crate is `no_std` and only needs `alloc`. Everything that touches the
//! file system, the command line or serialization lives in the `mixsing`
//! companion crate.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod coeff;
pub mod error;
pub mod fan;
pub mod homogeneity;
pub mod j10;
pub mod mixedpoly;
pub mod newton;
pub mod nondeg;
pub mod optim;
pub mod parse;
pub mod resolution;
pub mod toric;
pub mod univariate;

pub use coeff::ExactComplex;
pub use error::{Error, Result};
pub use mixedpoly::{ExponentPair, MixedPolynomial, MixedTerm};

/// Double-precision complex number used by every numeric routine.
pub type C64 = num_complex::Complex<f64>;
