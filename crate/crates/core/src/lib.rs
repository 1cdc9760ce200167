//! High-precision evaluation of the Ramanujan period function and its
//! relatives, with mechanical verification of their identities.
//!
//! The crate is organized around a few layers:
//!
//! - [`context`] / [`complex`] / [`bernoulli`] / [`special`] / [`quadrature`]:
//!   extended-precision arithmetic (MPFR-backed) and the classical special
//!   functions everything else consumes.
//! - [`periodfn`]: the period function F1, the family frak_F_k, and their
//!   series / integral / asymptotic evaluation routes.
//! - [`hecke`]: Hecke operator matrix sets, the slash action, eigenform
//!   residuals, and the cotangent-product identity behind them.
//! - [`quadfield`]: exact real quadratic irrationals, reduced numbers, and
//!   negative continued fraction cycles.
//! - [`kronecker`]: the zeta building block Z(s; w, w'), its analytic
//!   continuation and Laurent data, and both sides of the (higher) Kronecker
//!   limit formulas.
//! - [`herglotz`]: the J1 analogue of the Herglotz integral and its closed
//!   forms.
//! - [`eisen`]: Eisenstein q-series, the generalized period function
//!   psi_s^+, Kurokawa special values, and the Bettin-Conrey equivalence.
//! - [`verify`]: seeded grids, residual suites for every identity, and the
//!   Lost Notebook Xi-integral cross-check.

pub mod bernoulli;
pub mod complex;
pub mod context;
pub mod eisen;
pub mod error;
pub mod hecke;
pub mod herglotz;
pub mod kronecker;
pub mod periodfn;
pub mod quadfield;
pub mod quadrature;
pub mod special;
pub mod verify;

pub use complex::{PrecComplex, PrecReal};
pub use context::EvalContext;
pub use error::{Error, Result};
