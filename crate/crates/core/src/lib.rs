//! Closed forms for real-line integrals `∫ F(a·x(x+i)) K(x) dx` whose kernel `K`
//! is antisymmetric under reflection through the centre of a horizontal strip.
//!
//! The crate is organised bottom-up:
//!
//! * [`numerics`]: gamma, dilogarithm, zeta and the strict floor.
//! * [`integrand`]: entire (or cut) functions `F` and their parity combinations.
//! * [`kernels`]: kernel evaluation, pole census and residues.
//! * [`quadrature`]: double-exponential quadrature and series acceleration.
//! * [`theorems`]: right-hand sides of the general and specialised closed forms.
//! * [`catalog`]: named identities with parameter windows and verification.

pub mod catalog;
pub mod error;
pub mod integrand;
pub mod kernels;
pub mod numerics;
pub mod quadrature;
pub mod theorems;

pub use error::{Error, Result};
pub use integrand::{IntegrandSpec, Parity, VariationMode};
pub use kernels::{KernelSpec, PoleInfo, SymmetryLaw};
pub use numerics::ComplexValue;
pub use quadrature::{QuadratureFlags, QuadratureOptions, QuadratureResult};
pub use theorems::{TheoremId, TheoremInstance};
