//! Annihilating-polynomial certificates for holomorphic functions.
//!
//! Given a polynomial `P(z, t)` with `P(z, f(z)) = 0`, the [`certificates`]
//! module produces real polynomials annihilating `Re f` and `Im f`, and the
//! reverse constructions rebuild a complex annihilator from the real side.
//! Every emitted certificate can be checked numerically against an
//! expression for `f` with [`analytic::verify_certificate`].

pub mod algebra;
pub mod analytic;
pub mod certificates;
pub mod elimination;
mod error;
pub mod exec;

pub use error::{AlgebraError, CertificateError, EliminationError, LabError};
