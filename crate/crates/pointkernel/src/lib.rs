//! One-dimensional quantum point interactions in the jump-average
//! parameterization: coupling algebra, conversions to the connected and
//! separated self-adjoint-extension forms, exact scattering coefficients,
//! the closed-form delta-prime propagator with its Born series, and a
//! numerical layer that independently verifies every closed form.

// negated comparisons like !(k > 0.0) are deliberate: they reject NaN along
// with the out-of-domain sign
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::manual_is_multiple_of)]

pub mod born;
pub mod convert;
pub mod error;
pub mod interaction;
pub mod propagator;
pub mod quad;
pub mod richardson;
pub mod scatter;
pub mod verify;

pub use error::{Error, Result};
pub use interaction::{check_jump_average, BoundaryData, KurasovParams, PointInteraction};
pub use scatter::{scattering, transmission_probability, ScatteringMatrix};
