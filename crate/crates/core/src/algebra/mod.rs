//! Exact arithmetic over ℚ(i): coefficients, variable spaces, sparse
//! polynomials and the structural maps the certificate pipelines need.

mod eval;
mod gaussian;
mod ops;
mod poly;
mod space;
mod text;

pub use eval::{Assignment, CompiledPoly, ComplexPoint, Evaluation};
pub use gaussian::GaussianRational;
pub use ops::{phi, phi_inverse};
pub use poly::{Monomial, MultiPoly};
pub use space::{Family, Var, VarSpace};
pub use text::parse_gaussian;
