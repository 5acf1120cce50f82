//! Quadrature engines: adaptive Gauss-Kronrod panels, damped/extrapolated
//! evaluation of conditionally convergent Fourier-radial integrals,
//! oscillatory power-envelope tails, the cosh-substituted singular integrals
//! on (1, inf), the partial-integration tail decomposition, and the iterated
//! 2D (radial-then-angular) driver.

mod adaptive;
mod angular;
mod ibp;
mod regularized;
mod tail;

pub use adaptive::{adaptive_quad, QuadResult};
pub use angular::iterated_double;
pub use ibp::{ibp_tail, IbpTailSpec};
pub use regularized::{regularized_fourier_radial, RegularizationSchedule};
pub use tail::cosh_substituted_tail;

pub(crate) use adaptive::integrate_mesh;
pub(crate) use angular::{angular_outer, AngularSpec};
pub(crate) use regularized::{build_mesh, regularized_radial, RadialSpec};
pub(crate) use tail::{cosh_tail_with_waves, wave_tail, WaveSpec};
