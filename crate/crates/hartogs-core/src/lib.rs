//! Numerical analysis of the Bergman kernel and Bergman-Toeplitz operators
//! `T_{K^{-alpha}}` on the fat Hartogs triangles
//! `Omega_k = { (z1, z2) : |z1|^k < |z2| < 1 }` in C^2.
//!
//! The crate is organised around a small set of exact closed forms (kernel,
//! monomial norms, phase classifier) and a deterministic graded quadrature
//! engine that verifies them and drives the boundedness experiments:
//!
//! * [`domain`] - geometry of `Omega_k`, monomial basis, interior sampling
//! * [`kernel`] - closed-form Bergman kernel, series oracle, envelope bounds
//! * [`quadrature`] - graded deterministic integration over `Omega_k`
//! * [`toeplitz`] - operator application, projection oracle, counterexamples
//! * [`schur`] - Schur-test certification of `L^p -> L^q` bounds
//! * [`classify`] - exact-arithmetic boundedness phase diagram
//! * [`green`] - bidisk Green function, sublevel sets, comparability checks
//! * [`necessity`] - boundary lower-bound experiments
//!
//! Everything is pure and deterministic: identical inputs (including seeds
//! and quadrature specs) produce bit-identical outputs. The crate is
//! `no_std` (with `alloc`); float math comes through `num-traits`/`libm`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classify;
pub mod domain;
pub mod error;
pub mod green;
pub mod kernel;
pub mod necessity;
pub mod poly;
pub mod quadrature;
pub mod schur;
pub mod toeplitz;

pub use domain::{DomainParam, Exponent, Point2C, RadialPoint};
pub use error::{Error, Result};
pub use quadrature::{IntegralResult, QuadSpec};

/// Complex scalar used throughout.
pub type Complex64 = num_complex::Complex<f64>;
