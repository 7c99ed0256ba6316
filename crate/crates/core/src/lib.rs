//! Convex conformal maps of order `α` on the unit disk.
//!
//! * [`jets`]: order-3 complex Taylor jets.
//! * [`maps`]: analytic maps exposing jets, including maps generated from
//!   Schwarz functions, the extremal maps and Koebe transforms.
//! * [`operators`]: Schwarzian and pre-Schwarzian derivatives.
//! * [`bounds`]: closed-form bounds and signed residuals.
//! * [`estimator`]: quadrature and norm / order searches on polar grids.
//! * [`cli`]: the verification suite and report emission.

// Comparisons written as `!(x >= y)` are meant to reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod cli;
pub mod error;
pub mod estimator;
pub mod jets;
pub mod maps;
pub mod operators;

pub use error::{Error, Result};
pub use jets::Jet3;
