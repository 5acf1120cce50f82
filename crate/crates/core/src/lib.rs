//! Bessel functions of complex order and complex argument, the spherical
//! Bessel function over the complex field, quadrature engines for the
//! conditionally convergent integrals that connect them, and verifiers for
//! each integral identity.

pub mod bessel;
mod dd;
pub mod error;
pub mod gamma;
pub mod identities;
mod par;
pub mod quad;
pub mod spherical;
pub mod types;

pub use error::{Error, Result};
pub use types::{
    BesselOrder, BranchedArgument, ComplexScalar, EvalOptions, EvalResult, Method, SphericalIndex,
};
