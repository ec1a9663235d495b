//! Scattering resonances of dielectric spheres.
//!
//! A resonance is a complex spectral value `λ = k²` for which the Helmholtz
//! transmission problem for a ball of susceptibility `η` in vacuum admits a
//! nontrivial outgoing solution with no incident field. For radially symmetric
//! modes the problem closes in terms of the order-zero spherical Bessel and
//! Hankel functions, and the resonances have an explicit closed form. This
//! crate computes them three independent ways and cross-checks the routes
//! against each other:
//!
//! * [`exact`] — the closed-form wave numbers and resonances, together with
//!   the interface and dispersion residuals that certify them;
//! * [`solver`] — complex Newton iteration on the entire dispersion function,
//!   an oracle independent of the closed forms;
//! * [`expansion`] — the high-contrast nanosphere expansion
//!   `λ_h = R₀(h) + R₁(h) + R₂(h)`, with the `R₁` coefficients assembled from
//!   the ball moments of [`moments`] and the limiting eigenpair of [`limit`].
//!
//! [`figure`] emits the comparison data for the exact resonance against the
//! truncated expansions, and [`verify`] bundles the full cross-validation
//! suite behind a single report.

pub mod error;
pub mod exact;
pub mod expansion;
pub mod figure;
pub mod limit;
pub mod moments;
pub mod quad;
pub mod solver;
pub mod special;
pub mod verify;

pub use error::Error;
pub use num_complex::Complex64;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
