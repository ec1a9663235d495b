//! The limiting eigenpair of the Newtonian-potential operator on the unit
//! ball, normalized in L²(B), and its residual verification.
//!
//! The high-contrast limit of the resonance problem (at contrast constant
//! η₀ = 1, which this module fixes throughout) is the linear eigenvalue
//! problem `(λ₀/4π) ∫_B u₀(y)/|x-y| dy = u₀(x)`. On the unit ball its
//! radially symmetric solution is known in closed form:
//!
//! ```text
//! λ₀ = π²/4,    u₀(r) = sin(πr/2) / (√(2π) r),    ∫_B u₀² = 1.
//! ```
//!
//! For radial densities the Newtonian potential reduces to two 1-D
//! integrals, which is how [`verify_limit_eigenpair`] checks the pair
//! without discretizing the operator.

use crate::quad::GaussLegendre;
use crate::{Error, Result};

use std::f64::consts::PI;

/// Quadrature order per smooth panel of the radial potential.
const PANEL_ORDER: usize = 64;

/// The limiting eigenvalue `λ₀ = π²/4`.
pub fn lambda0() -> f64 {
    PI * PI / 4.0
}

/// The L²-normalized limiting eigenfunction `u₀(r) = sin(πr/2)/(√(2π) r)`
/// on [0, 1], series-stabilized near the center (`u₀(0) = π/(2√(2π))`).
pub fn u0(r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::domain(format!("u0 is defined on [0, 1], got {r}")));
    }
    Ok(u0_unchecked(r))
}

fn u0_unchecked(r: f64) -> f64 {
    let a = PI / 2.0;
    let x = a * r;
    let norm = 1.0 / (2.0 * PI).sqrt();
    if x.abs() < 1e-2 {
        // sin(x)/r = a (1 - x²/6 + x⁴/120 - x⁶/5040)
        let x2 = x * x;
        norm * a * (1.0 - x2 / 6.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 5040.0)
    } else {
        norm * x.sin() / r
    }
}

/// `U₀ = ∫_B u₀ = 16/(π √(2π))`.
pub fn u0_integral() -> f64 {
    16.0 / (PI * (2.0 * PI).sqrt())
}

/// The first-order correction coefficient `(1/4π) λ₀^{5/2} U₀²`, composed
/// from its factors rather than returned as a constant; it equals π.
pub fn first_order_coefficient() -> f64 {
    lambda0().powf(2.5) / (4.0 * PI) * u0_integral() * u0_integral()
}

/// Newtonian potential of the radial density `f` at radius `r`:
///
/// ```text
/// ∫_B f(|y|)/|x-y| dy = 4π [ (1/r) ∫_0^r s² f(s) ds + ∫_r^1 s f(s) ds ]
/// ```
///
/// with the `r → 0` limit `4π ∫_0^1 s f(s) ds` at the center.
pub fn newtonian_potential_radial<F: Fn(f64) -> f64>(f: F, r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::domain(format!(
            "potential evaluation point must lie in [0, 1], got {r}"
        )));
    }
    let rule = GaussLegendre::new(PANEL_ORDER);
    if r == 0.0 {
        return Ok(4.0 * PI * rule.integrate(0.0, 1.0, |s| s * f(s)));
    }
    let near = rule.integrate(0.0, r, |s| s * s * f(s)) / r;
    let far = rule.integrate(r, 1.0, |s| s * f(s));
    Ok(4.0 * PI * (near + far))
}

/// Max-norm residual of the eigenpair identity
/// `(λ/4π) ∫_B u(y)/|x-y| dy - u(x)` over a radial grid in (0, 1].
pub fn eigenpair_residual<F: Fn(f64) -> f64>(lambda: f64, u: F, grid: &[f64]) -> Result<f64> {
    if grid.is_empty() {
        return Err(Error::invalid("residual grid must be nonempty"));
    }
    let mut worst: f64 = 0.0;
    for &r in grid {
        if !(0.0 < r && r <= 1.0) {
            return Err(Error::invalid(format!("grid points must lie in (0, 1], got {r}")));
        }
        let potential = newtonian_potential_radial(&u, r)?;
        worst = worst.max((lambda / (4.0 * PI) * potential - u(r)).abs());
    }
    Ok(worst)
}

/// Residual of the known pair `(λ₀, u₀)` over `grid`; the module's central
/// theorem-level check.
pub fn verify_limit_eigenpair(grid: &[f64]) -> Result<f64> {
    eigenpair_residual(lambda0(), u0_unchecked, grid)
}

/// Uniform grid `i/n, i = 1..=n` in (0, 1].
pub fn uniform_grid(n: usize) -> Vec<f64> {
    (1..=n).map(|i| i as f64 / n as f64).collect()
}
