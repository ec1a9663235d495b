//! The high-contrast nanosphere expansion `λ_h = R₀(h) + R₁(h) + R₂(h)` at
//! contrast constant η₀ = 1.
//!
//! `R₀(h) = π²/4 - iπh` collects the limiting eigenvalue and the first-order
//! correction `-i (1/4π) λ₀^{5/2} U₀² h`. The `R₁` series is assembled from
//! the ball moments,
//!
//! ```text
//! coeff of h^k in R₁ = -(1/4π) λ₀^{2+k/2} i^k / k! · M_{k-1},   k ≥ 2,
//! ```
//!
//! and `R₂` is whatever the exact resonance leaves after `R₀` and a
//! truncated `R₁` are removed. Its leading coefficients follow from the
//! Taylor expansion of the exact `λ_h`,
//!
//! ```text
//! λ_h = π²/4 - iπh + (-1 - π²/4) h² + (7/6)iπ h³ + (4/3 + π²/4) h⁴ + …
//! ```
//!
//! which this module computes by power-series composition of the closed
//! form `λ(h) = (π/2 - i asinh h)² / (1 + h²)`.

use num_complex::Complex64;
use serde::Serialize;

use crate::exact::{nanosphere_resonance, NanoScaling};
use crate::limit::{first_order_coefficient, lambda0};
use crate::moments::{moment_closed_form, moment_quadrature, MomentEstimate};
use crate::{Error, Result};

use std::f64::consts::PI;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Largest order accepted by [`taylor_exact`]; enough for the published
/// coefficients plus slope diagnostics.
pub const MAX_TAYLOR_ORDER: u32 = 8;

/// A truncated power series in `h` with sparse complex coefficients.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpansionSeries {
    coeffs: Vec<(u32, Complex64)>,
    truncation_order: u32,
}

impl ExpansionSeries {
    /// Powers must be strictly increasing and bounded by the truncation
    /// order.
    pub fn new(coeffs: Vec<(u32, Complex64)>, truncation_order: u32) -> Result<Self> {
        for pair in coeffs.windows(2) {
            if pair[1].0 <= pair[0].0 {
                return Err(Error::invalid("series powers must be strictly increasing"));
            }
        }
        if let Some(&(power, _)) = coeffs.last() {
            if power > truncation_order {
                return Err(Error::invalid(format!(
                    "power {power} exceeds truncation order {truncation_order}"
                )));
            }
        }
        Ok(ExpansionSeries { coeffs, truncation_order })
    }

    pub fn coeffs(&self) -> &[(u32, Complex64)] {
        &self.coeffs
    }

    pub fn truncation_order(&self) -> u32 {
        self.truncation_order
    }

    /// Coefficient of `h^power`, zero if absent.
    pub fn coeff(&self, power: u32) -> Complex64 {
        self.coeffs
            .iter()
            .find(|(p, _)| *p == power)
            .map(|(_, c)| *c)
            .unwrap_or(Complex64::ZERO)
    }

    /// Evaluate the partial sum at `h`.
    pub fn eval(&self, h: f64) -> Complex64 {
        self.coeffs
            .iter()
            .map(|&(p, c)| c * h.powi(p as i32))
            .sum()
    }
}

/// `R₀(h) = π²/4 - iπh`.
pub fn r0_series() -> ExpansionSeries {
    ExpansionSeries {
        coeffs: vec![
            (0, Complex64::new(lambda0(), 0.0)),
            (1, -I * first_order_coefficient()),
        ],
        truncation_order: 1,
    }
}

/// Assemble `R₁` through `h^max_order` from the supplied moments; the
/// coefficient of `h^k` consumes `M_{k-1}`.
pub fn r1_series(max_order: u32, moments: &[MomentEstimate]) -> Result<ExpansionSeries> {
    if max_order < 2 {
        return Err(Error::invalid(format!(
            "R1 starts at h², so max_order must be at least 2, got {max_order}"
        )));
    }
    let l0 = lambda0();
    let mut coeffs = Vec::with_capacity(max_order as usize - 1);
    let mut factorial = 1.0f64;
    for k in 2..=max_order {
        factorial *= k as f64;
        let moment = moments
            .iter()
            .find(|m| m.n == k - 1)
            .ok_or_else(|| Error::invalid(format!("missing moment M_{} for order {k}", k - 1)))?;
        let coeff = -(1.0 / (4.0 * PI)) * l0.powf(2.0 + k as f64 / 2.0) / factorial
            * I.powu(k)
            * moment.value;
        coeffs.push((k, coeff));
    }
    ExpansionSeries::new(coeffs, max_order)
}

/// `R₁` with closed-form moments for `M₁`, `M₂` and converged quadrature
/// beyond.
pub fn r1_series_default(max_order: u32) -> Result<ExpansionSeries> {
    let moments = default_moments(max_order)?;
    r1_series(max_order, &moments)
}

fn default_moments(max_order: u32) -> Result<Vec<MomentEstimate>> {
    let mut moments = Vec::new();
    for n in 1..max_order.max(2) {
        moments.push(if n <= 2 {
            moment_closed_form(n)?
        } else {
            moment_quadrature(n, 64)?
        });
    }
    Ok(moments)
}

/// Taylor coefficients of the exact `λ_h` at `h = 0`, by composing the
/// series of `asinh`, squaring, and dividing by `1 + h²`. Orders above
/// [`MAX_TAYLOR_ORDER`] are rejected.
pub fn taylor_exact(order: u32) -> Result<ExpansionSeries> {
    if order > MAX_TAYLOR_ORDER {
        return Err(Error::Unsupported(format!(
            "taylor_exact supports orders up to {MAX_TAYLOR_ORDER}, got {order}"
        )));
    }
    let len = order as usize + 1;
    // asinh(h) = Σ_k (-1)^k (2k)! / (4^k (k!)² (2k+1)) h^{2k+1}
    let mut asinh = vec![Complex64::ZERO; len];
    let mut term = 1.0f64;
    let mut k = 0u32;
    loop {
        let power = 2 * k + 1;
        if power as usize >= len {
            break;
        }
        asinh[power as usize] = Complex64::new(term / (power as f64), 0.0);
        // ratio of successive Taylor numerators: -(2k+1)²/((2k+2)(2k+2))… via
        // (2k)!/(4^k (k!)²) recurrence.
        term *= -((2 * k + 1) as f64) / ((2 * k + 2) as f64);
        k += 1;
    }
    // numerator = (π/2 - i asinh)² = π²/4 - iπ asinh - asinh²
    let asinh_sq = poly_mul(&asinh, &asinh, len);
    let mut numerator = vec![Complex64::ZERO; len];
    numerator[0] = Complex64::new(lambda0(), 0.0);
    for p in 0..len {
        numerator[p] -= I * PI * asinh[p] + asinh_sq[p];
    }
    // 1/(1+h²) = Σ_j (-1)^j h^{2j}
    let mut geometric = vec![Complex64::ZERO; len];
    for j in 0..len.div_ceil(2) {
        geometric[2 * j] = Complex64::new(if j % 2 == 0 { 1.0 } else { -1.0 }, 0.0);
    }
    let lambda = poly_mul(&numerator, &geometric, len);
    ExpansionSeries::new(
        lambda.into_iter().enumerate().map(|(p, c)| (p as u32, c)).collect(),
        order,
    )
}

fn poly_mul(a: &[Complex64], b: &[Complex64], len: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::ZERO; len];
    for (i, &ai) in a.iter().enumerate() {
        if ai == Complex64::ZERO {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if i + j < len {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Leading `R₂` coefficients (powers 2 and 3), extracted as
/// `taylor_exact - R₀ - R₁`: `R₂* = -1 - π²/2`, `R₂** = i(19π/6 - π³/4)`.
pub fn r2_coeffs() -> ExpansionSeries {
    let taylor = taylor_exact(3).expect("order 3 is always available");
    let r1 = r1_series_default(3).expect("closed-form moments cover order 3");
    let coeffs = vec![
        (2, taylor.coeff(2) - r1.coeff(2)),
        (3, taylor.coeff(3) - r1.coeff(3)),
    ];
    ExpansionSeries { coeffs, truncation_order: 3 }
}

/// Pointwise remainder of the exact resonance after removing `R₀` and `R₁`
/// truncated at `h^r1_truncation`:
/// `R₂(h) = λ_h - λ₀ + i (1/4π) λ₀^{5/2} U₀² h - R₁(h)`.
pub fn r2_extract(h: f64, r1_truncation: u32) -> Result<Complex64> {
    let scaling = NanoScaling::new(h, 1.0)?;
    let lambda = nanosphere_resonance(&scaling, 0)?.lambda;
    let r1 = r1_series_default(r1_truncation)?;
    Ok(lambda - lambda0() + I * first_order_coefficient() * h - r1.eval(h))
}

/// Partial sums of the expansion, with `R₁` and `R₂` truncated at `h³`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ApproxLevel {
    R0,
    R0R1,
    R0R1R2,
}

/// Evaluate the chosen partial sum at `h`. Meaningful for `h ∈ (0, 1)`,
/// where the expansion is an asymptotic approximation of the exact `λ_h`.
pub fn approx_lambda(h: f64, level: ApproxLevel) -> Complex64 {
    let mut value = r0_series().eval(h);
    if level == ApproxLevel::R0 {
        return value;
    }
    value += r1_series_default(3).expect("closed-form moments cover order 3").eval(h);
    if level == ApproxLevel::R0R1 {
        return value;
    }
    value + r2_coeffs().eval(h)
}
