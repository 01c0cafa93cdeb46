//! Exact calculus on the closed class of objects generated by rational
//! symbols: rational functions with half-plane-tagged points, partial
//! fraction sums, exponential-polynomial sums on half-lines, and separable
//! two-variable kernels.  Every operator manipulation in the crate reduces to
//! closed-form arithmetic here; floating point enters only through the
//! coefficients.

mod expsum;
mod kernel2d;
mod polesum;
mod rational;

pub use expsum::{halfline_integral, ExpSum, ExpTerm, Support};
pub use kernel2d::{compose_kernels, Domain, Kernel2D, KernelTerm, Region};
pub use polesum::{PoleSum, PoleTerm};
pub use rational::{Half, Pt, RationalFunction, Side};

/// Tolerance below which two pole locations are treated as identical.
pub(crate) const COINCIDE_TOL: f64 = 1e-13;
/// Separations between this and `COINCIDE_TOL` are rejected as ill-posed.
pub(crate) const SEPARATION_TOL: f64 = 1e-10;
