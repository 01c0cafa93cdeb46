//! Truncated Wiener-Hopf operators with Fisher-Hartwig symbols.
//!
//! The symbols treated here have the form `sigma(xi) = (xi^2 - p^2) tau(xi)`
//! with `tau` rational, nonvanishing on the real line and decaying like
//! `xi^-2`, so that `sigma(inf) = 1` and `sigma` has either a double zero at
//! the origin (`p = 0`) or two simple real zeros at `+-p`.  The crate computes
//!
//! * Wiener-Hopf factorizations `sigma = sigma_minus sigma_plus` with the
//!   boundary zeros routed by a contour convention,
//! * closed-form approximate inverses of the truncated operator
//!   `W_alpha(sigma)` on `L^2(0, alpha)`,
//! * determinant asymptotics `det W_alpha(sigma)` in several equivalent
//!   forms, and
//! * an independent Nystrom discretization used to validate everything.
//!
//! Fourier transform convention: `khat(xi) = int e^{i x xi} k(x) dx`.

pub mod error;
pub mod linalg;
pub mod quad;
pub mod ratcalc;
pub mod symbolmodel;
pub mod invapprox;
pub mod detasym;
pub mod oracle;
pub mod spec;
pub mod report;
pub mod cli;

pub use error::{Result, WhError};

/// Shorthand used across the crate.
pub type C = num_complex::Complex64;

/// `i` as a `Complex64`.
pub const I: C = C::new(0.0, 1.0);

/// Complex one.
pub const ONE: C = C::new(1.0, 0.0);

/// Complex zero.
pub const ZERO: C = C::new(0.0, 0.0);

pub(crate) fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}
