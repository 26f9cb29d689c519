//! Hermite–Hadamard integral orthogonality in finite-dimensional real normed
//! spaces: norms, the integrals `I±`, classical and approximate orthogonality
//! relations, linear-map analysis and a randomized claim harness.

pub mod claims;
pub mod error;
pub mod hh;
pub mod linalg;
pub mod mapping;
pub mod quadrature;
pub mod relations;
pub mod solvers;
pub mod space;

pub use claims::{run_claim, ClaimReport, ClaimSpec, Status, Witness};
pub use error::{Error, Result};
pub use mapping::{LinearMap, MapProfile};
pub use hh::{hh_closed_form_ip, hh_minus, hh_plus, hh_quadrature, hh_values, HHValues, Method};
pub use relations::{evaluate, OrthoVerdict, RelationId};
pub use solvers::{
    beta_functional_min, beta_functional_numeric, hh_orthogonal_in_pencil, minimize_norm_on_line,
};
pub use space::{inner, norm, validate_spec, Exponent, Matrix, NormSpec, Tolerance, Vector};
