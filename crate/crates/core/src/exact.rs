//! Closed-form resonances of a dielectric sphere and the residuals that
//! certify them.
//!
//! For a ball of radius `r` and susceptibility `η` in vacuum, radially
//! symmetric modes are `A j0(k s ρ)` inside and `B h0(k ρ)` outside, with
//! `s = √(1+η)`. Continuity of the field and its radial derivative across the
//! boundary gives the matching equation
//!
//! ```text
//! F(k) = s h0(kr) j0'(k s r) - h0'(kr) j0(k s r) = 0
//! ```
//!
//! which reduces algebraically to the entire function
//!
//! ```text
//! G(k) = sin(k r s) + i s cos(k r s),
//! ```
//!
//! whose zeros are the principal branch
//!
//! ```text
//! k_m = (π/2 + mπ - i log((√(η+1)+1)/√η)) / (r √(η+1)),  m = 0, 1, 2, …
//! ```
//!
//! `m = 0` is the resonance with the smallest positive real part; the rest of
//! the family comes from the 2πi multivaluedness of the complex logarithm.
//!
//! For the high-contrast nanosphere (`radius h`, `η = η₀/h²`) with `η₀ = 1`
//! the logarithm collapses to `log(√(1+h²)+h) = asinh(h)`, so
//! `k_h = (π/2 - i asinh h)/√(h²+1)`. The same quantity is sometimes written
//! with an inverse sine; only the inverse *hyperbolic* sine is consistent
//! with the general formula and with the Taylor expansion of `λ_h` (an
//! arcsine would flip the sign of the odd corrections, giving (5/6)iπ instead
//! of (7/6)iπ at h³).

use num_complex::Complex64;
use serde::Serialize;

use crate::special::{principal_log, principal_sqrt, sph_h0, sph_h0_prime, sph_j0, sph_j0_prime};
use crate::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Residual magnitude below which a mode counts as certified. An order of
/// magnitude above double-precision noise for these well-conditioned closed
/// forms.
pub const CERTIFICATION_THRESHOLD: f64 = 1e-9;

/// Scatterer description: radius and susceptibility contrast.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SphereSpec {
    radius: f64,
    eta: Complex64,
}

impl SphereSpec {
    /// Sphere with real susceptibility. `eta = 0` (vacuum contrast) is
    /// representable so the dispersion solver can demonstrate that no
    /// resonance exists; the closed-form operations reject it.
    pub fn new(radius: f64, eta: f64) -> Result<Self> {
        if eta < 0.0 {
            return Err(Error::domain(
                "real susceptibility must be nonnegative (negative values sit on the \
                 principal square root's branch cut)",
            ));
        }
        Self::with_complex_eta(radius, Complex64::new(eta, 0.0))
    }

    /// Sphere with complex susceptibility, accepted wherever the principal
    /// square roots and logarithm in the closed form stay off their branch
    /// cuts: `eta` and `1 + eta` must not lie on the negative real axis.
    pub fn with_complex_eta(radius: f64, eta: Complex64) -> Result<Self> {
        if !radius.is_finite() || radius <= 0.0 {
            return Err(Error::domain(format!("radius must be positive, got {radius}")));
        }
        if !eta.re.is_finite() || !eta.im.is_finite() {
            return Err(Error::domain("susceptibility must be finite"));
        }
        if eta.im == 0.0 && eta.re < 0.0 {
            return Err(Error::domain(
                "susceptibility on the negative real axis is outside the principal branches",
            ));
        }
        let one_plus = Complex64::ONE + eta;
        if one_plus.im == 0.0 && one_plus.re <= 0.0 {
            return Err(Error::domain(
                "1 + eta on the negative real axis leaves the principal square root undefined",
            ));
        }
        Ok(SphereSpec { radius, eta })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn eta(&self) -> Complex64 {
        self.eta
    }

    /// `s = √(1 + η)`, the interior stretch of the wave number.
    pub fn index_factor(&self) -> Complex64 {
        principal_sqrt(Complex64::ONE + self.eta)
    }
}

/// Nanosphere scaling: radius `h`, susceptibility `η₀ / h²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NanoScaling {
    h: f64,
    eta0: f64,
}

impl NanoScaling {
    pub fn new(h: f64, eta0: f64) -> Result<Self> {
        if !h.is_finite() || h <= 0.0 {
            return Err(Error::domain(format!("scale factor h must be positive, got {h}")));
        }
        if !eta0.is_finite() || eta0 <= 0.0 {
            return Err(Error::domain(format!(
                "contrast constant eta0 must be positive, got {eta0}"
            )));
        }
        Ok(NanoScaling { h, eta0 })
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn eta0(&self) -> f64 {
        self.eta0
    }

    /// The induced sphere: radius `h`, susceptibility exactly `η₀ / h²`.
    pub fn sphere_spec(&self) -> SphereSpec {
        SphereSpec {
            radius: self.h,
            eta: Complex64::new(self.eta0 / (self.h * self.h), 0.0),
        }
    }
}

/// How a [`ResonanceMode`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeSource {
    ClosedForm,
    Newton,
}

/// One certified resonance: wave number, spectral value, branch index, and
/// the residuals of the two dispersion forms at `k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResonanceMode {
    pub k: Complex64,
    pub lambda: Complex64,
    pub branch_m: u32,
    pub interface_residual: f64,
    pub dispersion_residual: f64,
    pub source: ModeSource,
}

impl ResonanceMode {
    /// Both residuals below [`CERTIFICATION_THRESHOLD`].
    pub fn is_certified(&self) -> bool {
        self.interface_residual < CERTIFICATION_THRESHOLD
            && self.dispersion_residual < CERTIFICATION_THRESHOLD
    }
}

/// Closed-form wave number of branch `m`:
/// `k = (π/2 + mπ - i log((√(η+1)+1)/√η)) / (r √(η+1))`.
pub fn wave_number_exact(spec: &SphereSpec, m: u32) -> Result<Complex64> {
    if spec.eta == Complex64::ZERO {
        return Err(Error::domain(
            "no resonance for zero contrast: the logarithm argument diverges as eta -> 0",
        ));
    }
    let s = spec.index_factor();
    let q = (s + 1.0) / principal_sqrt(spec.eta);
    let log_q = principal_log(q)?;
    let phase = std::f64::consts::FRAC_PI_2 + m as f64 * std::f64::consts::PI;
    Ok((phase - I * log_q) / (spec.radius * s))
}

/// Closed-form resonance of branch `m`, with both residuals evaluated at the
/// returned wave number.
pub fn resonance_exact(spec: &SphereSpec, m: u32) -> Result<ResonanceMode> {
    let k = wave_number_exact(spec, m)?;
    Ok(ResonanceMode {
        k,
        lambda: k * k,
        branch_m: m,
        interface_residual: interface_residual(k, spec)?.norm(),
        dispersion_residual: dispersion_residual(k, spec).norm(),
        source: ModeSource::ClosedForm,
    })
}

/// Resonance of the nanosphere `(radius h, η = η₀/h²)`; delegates to
/// [`resonance_exact`] on the induced sphere.
pub fn nanosphere_resonance(scaling: &NanoScaling, m: u32) -> Result<ResonanceMode> {
    resonance_exact(&scaling.sphere_spec(), m)
}

/// The matching-equation residual
/// `F(k) = s h0(kr) j0'(k s r) - h0'(kr) j0(k s r)`; `|F| ≈ 0` certifies a
/// resonance. Pole at `k = 0`.
pub fn interface_residual(k: Complex64, spec: &SphereSpec) -> Result<Complex64> {
    let s = spec.index_factor();
    let outer = k * spec.radius;
    let inner = outer * s;
    Ok(s * sph_h0(outer)? * sph_j0_prime(inner) - sph_h0_prime(outer)? * sph_j0(inner))
}

/// The entire reduction of the matching equation,
/// `G(k) = sin(k r s) + i s cos(k r s)` with `s = √(1+η)`. Shares its zero
/// set with `F` and has no poles, which makes it the Newton objective.
pub fn dispersion_residual(k: Complex64, spec: &SphereSpec) -> Complex64 {
    let s = spec.index_factor();
    let t = k * spec.radius * s;
    t.sin() + I * s * t.cos()
}

/// Derivative of [`dispersion_residual`] in `k`:
/// `G'(k) = r s (cos(k r s) - i s sin(k r s))`.
pub fn dispersion_residual_prime(k: Complex64, spec: &SphereSpec) -> Complex64 {
    let s = spec.index_factor();
    let t = k * spec.radius * s;
    spec.radius * s * (t.cos() - I * s * t.sin())
}

/// Interior/exterior amplitudes of a certified mode, normalized to `A = 1`:
/// `B = j0(k s r) / h0(k r)` from continuity at the boundary.
pub fn mode_coefficients(mode: &ResonanceMode, spec: &SphereSpec) -> Result<(Complex64, Complex64)> {
    if !mode.is_certified() {
        return Err(Error::invalid(format!(
            "mode is not certified (residuals {:.3e} / {:.3e})",
            mode.interface_residual, mode.dispersion_residual
        )));
    }
    let s = spec.index_factor();
    let h0_outer = sph_h0(mode.k * spec.radius)?;
    if h0_outer == Complex64::ZERO {
        return Err(Error::domain("h0(kr) vanished; cannot normalize the exterior amplitude"));
    }
    let a = Complex64::ONE;
    let b = sph_j0(mode.k * spec.radius * s) / h0_outer;
    Ok((a, b))
}

/// Field value of a certified mode at radial distance `rho`:
/// `A j0(k s ρ)` inside the sphere, `B h0(k ρ)` outside.
pub fn evaluate_mode(mode: &ResonanceMode, spec: &SphereSpec, rho: f64) -> Result<Complex64> {
    if !(rho >= 0.0) {
        return Err(Error::invalid(format!("radial distance must be nonnegative, got {rho}")));
    }
    let (a, b) = mode_coefficients(mode, spec)?;
    if rho <= spec.radius {
        Ok(a * sph_j0(mode.k * spec.index_factor() * rho))
    } else {
        Ok(b * sph_h0(mode.k * rho)?)
    }
}
