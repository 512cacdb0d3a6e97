//! Minimal-length (GUP) deformed harmonic oscillator in the Heisenberg
//! picture.
//!
//! The crate has three independent routes to the same physics:
//!
//! * [`boson`]: exact normal-ordered operator algebra that re-derives the
//!   nested-commutator expansion of `a(t)` with rational coefficients;
//! * [`analytic`]: closed-form first-order (in `g = ħmωβ`) expressions for
//!   the evolved operators, coherent-state moments, variances, the
//!   uncertainty product and the squeezing deltas;
//! * [`fock`]: exact finite-`β` evolution on a truncated Fock space, whose
//!   central differences in `β` serve as numerical ground truth.
//!
//! [`physics`] handles units and the electron-cyclotron preset, and
//! [`scan`] / [`compare`] hold the grid evaluations used by the CLI.

pub mod analytic;
pub mod boson;
pub mod compare;
pub mod fock;
pub mod grid;
pub mod kv;
pub mod physics;
pub mod scan;

pub use analytic::{CoherentAmplitude, PhysicalParams, Validity, VarianceRecord};
pub use num::complex::Complex64;
