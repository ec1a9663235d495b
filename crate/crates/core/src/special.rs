//! Order-zero spherical Bessel and Hankel functions of a complex argument,
//! plus the principal-branch helpers used to extract wave numbers from the
//! complex logarithm.
//!
//! Only order zero appears in the radially symmetric transmission problem:
//!
//! ```text
//! j0(z) = sin(z) / z             h0(z) = -i e^{iz} / z
//! j0'(z) = (z cos z - sin z)/z²  h0'(z) = e^{iz}(z + i)/z²
//! ```
//!
//! All four are analytic away from the origin; `j0` and `j0'` extend
//! analytically through it. Near the origin the direct quotients cancel, so
//! the implementations switch to truncated power series there.

use num_complex::Complex64;

use crate::{Error, Result};

/// Below this magnitude `sph_j0` evaluates its power series.
const J0_SERIES_RADIUS: f64 = 1e-2;

/// Below this magnitude `sph_j0_prime` evaluates its power series. The
/// numerator `z cos z - sin z` is O(z³) against O(z) terms, so the direct
/// quotient loses ~2 log10(1/|z|) digits; the series keeps full relative
/// accuracy through the crossover.
const J0_PRIME_SERIES_RADIUS: f64 = 0.25;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Spherical Bessel function of the first kind, order zero: `sin(z)/z`,
/// with the removable singularity at `z = 0` filled in (`j0(0) = 1`).
pub fn sph_j0(z: Complex64) -> Complex64 {
    if z.norm() < J0_SERIES_RADIUS {
        j0_series(z)
    } else {
        z.sin() / z
    }
}

/// Derivative of [`sph_j0`]: `(z cos z - sin z)/z²`, with `j0'(0) = 0`.
pub fn sph_j0_prime(z: Complex64) -> Complex64 {
    if z.norm() < J0_PRIME_SERIES_RADIUS {
        j0_prime_series(z)
    } else {
        (z * z.cos() - z.sin()) / (z * z)
    }
}

/// Spherical Hankel function of the first kind, order zero:
/// `-i e^{iz} / z`. Pole at the origin.
pub fn sph_h0(z: Complex64) -> Result<Complex64> {
    if z == Complex64::ZERO {
        return Err(Error::domain("sph_h0 has a pole at z = 0"));
    }
    Ok(-I * (I * z).exp() / z)
}

/// Derivative of [`sph_h0`]: `e^{iz}(z + i)/z²`. Pole at the origin.
pub fn sph_h0_prime(z: Complex64) -> Result<Complex64> {
    if z == Complex64::ZERO {
        return Err(Error::domain("sph_h0_prime has a pole at z = 0"));
    }
    Ok((I * z).exp() * (z + I) / (z * z))
}

/// Principal square root: branch cut along the negative real axis, real part
/// of the result nonnegative.
pub fn principal_sqrt(z: Complex64) -> Complex64 {
    z.sqrt()
}

/// Principal logarithm: branch cut along the negative real axis, imaginary
/// part in (-π, π].
pub fn principal_log(z: Complex64) -> Result<Complex64> {
    if z == Complex64::ZERO {
        return Err(Error::domain("principal_log undefined at z = 0"));
    }
    Ok(z.ln())
}

/// j0(z) = Σ_k (-1)^k z^{2k} / (2k+1)!
fn j0_series(z: Complex64) -> Complex64 {
    let z2 = z * z;
    let mut term = Complex64::ONE;
    let mut sum = term;
    for k in 1..=12u32 {
        term *= -z2 / ((2 * k) as f64 * (2 * k + 1) as f64);
        sum += term;
        if term.norm() <= f64::EPSILON * sum.norm() {
            break;
        }
    }
    sum
}

/// j0'(z) = Σ_{k≥1} (-1)^k 2k z^{2k-1} / (2k+1)!
fn j0_prime_series(z: Complex64) -> Complex64 {
    let z2 = z * z;
    let mut term = -z / 3.0;
    let mut sum = term;
    for k in 1..=12u32 {
        let kf = k as f64;
        term *= -z2 * (kf + 1.0) / (kf * (2.0 * kf + 2.0) * (2.0 * kf + 3.0));
        sum += term;
        if term.norm() <= f64::EPSILON * sum.norm() {
            break;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Reference series for j0, summed adaptively; independent of the branch
    /// selection in the public functions.
    fn j0_reference(z: Complex64) -> Complex64 {
        let z2 = z * z;
        let mut term = Complex64::ONE;
        let mut sum = term;
        for k in 1..=40u32 {
            term *= -z2 / ((2 * k) as f64 * (2 * k + 1) as f64);
            sum += term;
            if term.norm() <= 1e-20 * sum.norm() {
                break;
            }
        }
        sum
    }

    fn j0_prime_reference(z: Complex64) -> Complex64 {
        let z2 = z * z;
        let mut term = -z / 3.0;
        let mut sum = term;
        for k in 1..=40u32 {
            let kf = k as f64;
            term *= -z2 * (kf + 1.0) / (kf * (2.0 * kf + 2.0) * (2.0 * kf + 3.0));
            sum += term;
            if term.norm() <= 1e-20 * sum.norm() {
                break;
            }
        }
        sum
    }

    #[test]
    fn j0_special_values() {
        assert_eq!(sph_j0(Complex64::ZERO), Complex64::ONE);
        assert!(sph_j0(c(PI, 0.0)).norm() < 1e-15);
        // sin(i)/i = sinh(1)
        let got = sph_j0(c(0.0, 1.0));
        assert!((got - c(1.0f64.sinh(), 0.0)).norm() < 1e-15);
        assert!((got.re - 1.175_201_193_6).abs() < 1e-10);
    }

    #[test]
    fn j0_prime_special_values() {
        assert_eq!(sph_j0_prime(Complex64::ZERO), Complex64::ZERO);
        let got = sph_j0_prime(c(PI / 2.0, 0.0));
        assert!((got - c(-4.0 / (PI * PI), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn j0_prime_matches_central_difference() {
        let z = c(1.0, 0.5);
        let delta = 1e-5;
        let fd = (sph_j0(z + delta) - sph_j0(z - delta)) / (2.0 * delta);
        assert!((sph_j0_prime(z) - fd).norm() < 1e-8);
    }

    #[test]
    fn h0_special_values() {
        let got = sph_h0(c(PI / 2.0, 0.0)).unwrap();
        assert!((got - c(2.0 / PI, 0.0)).norm() < 1e-15);
        let got = sph_h0(c(PI, 0.0)).unwrap();
        assert!((got - c(0.0, 1.0 / PI)).norm() < 1e-15);
        assert!(sph_h0(Complex64::ZERO).is_err());
    }

    #[test]
    fn h0_prime_special_values() {
        // e^{i·i}(i+i)/(i²) = -2i/e
        let got = sph_h0_prime(c(0.0, 1.0)).unwrap();
        assert!((got - c(0.0, -2.0 / E)).norm() < 1e-15);
        // e^{iπ/2}(π/2 + i)/(π/2)² = -4/π² + 2i/π
        let got = sph_h0_prime(c(PI / 2.0, 0.0)).unwrap();
        assert!((got - c(-4.0 / (PI * PI), 2.0 / PI)).norm() < 1e-15);
        assert!(sph_h0_prime(Complex64::ZERO).is_err());
    }

    #[test]
    fn h0_prime_matches_central_difference() {
        let z = c(2.0, -0.3);
        let delta = 1e-5;
        let fd = (sph_h0(z + delta).unwrap() - sph_h0(z - delta).unwrap()) / (2.0 * delta);
        assert!((sph_h0_prime(z).unwrap() - fd).norm() < 1e-8);
    }

    #[test]
    fn principal_branches() {
        assert_eq!(principal_sqrt(c(4.0, 0.0)), c(2.0, 0.0));
        let got = principal_log(c(0.0, 1.0)).unwrap();
        assert!((got - c(0.0, PI / 2.0)).norm() < 1e-15);
        assert!(principal_log(Complex64::ZERO).is_err());
        // The η = 1 wave-number extraction: log(i(√2+1)) = ln(√2+1) + iπ/2.
        let q = 2.0f64.sqrt() + 1.0;
        let got = principal_log(I * q).unwrap();
        assert!((got - c(q.ln(), PI / 2.0)).norm() < 1e-15);
    }

    #[test]
    fn series_and_direct_evaluations_agree() {
        // Sweep |z| across eight decades; the reference series is accurate to
        // machine precision on |z| ≤ 1, so this pins both the direct formulas
        // and the series branch on either side of the switch radii.
        for decade in 0..=8 {
            let radius = 10f64.powi(-decade);
            for arg_step in 0..8 {
                let theta = arg_step as f64 * PI / 4.0;
                let z = Complex64::from_polar(radius, theta);
                let j = sph_j0(z);
                let jp = sph_j0_prime(z);
                assert!(
                    (j - j0_reference(z)).norm() <= 1e-12 * j.norm(),
                    "j0 mismatch at {z}"
                );
                assert!(
                    (jp - j0_prime_reference(z)).norm() <= 1e-12 * jp.norm(),
                    "j0' mismatch at {z}"
                );
            }
        }
    }

    #[test]
    fn cross_identity_j0_h0() {
        // j0 h0' - j0' h0 = i/z², the order-zero Wronskian combination.
        for &re in &[0.1, 0.5, 1.0, 3.0, 7.0] {
            for &im in &[-5.0, -0.4, 0.0, 0.4, 5.0] {
                let z = c(re, im);
                if !(0.1..=10.0).contains(&z.norm()) {
                    continue;
                }
                let lhs = sph_j0(z) * sph_h0_prime(z).unwrap()
                    - sph_j0_prime(z) * sph_h0(z).unwrap();
                let rhs = I / (z * z);
                assert!(
                    (lhs - rhs).norm() <= 1e-10 * rhs.norm(),
                    "identity failed at {z}: {lhs} vs {rhs}"
                );
            }
        }
    }

    #[test]
    fn analytic_away_from_origin() {
        // Cauchy–Riemann via central differences: the derivative along the
        // real axis must match the derivative along the imaginary axis.
        let delta = 1e-6;
        let points = [c(0.7, 0.3), c(-1.2, 0.8), c(2.0, -1.5), c(0.4, -0.2)];
        let funcs: [&dyn Fn(Complex64) -> Complex64; 4] = [
            &|z| sph_j0(z),
            &|z| sph_j0_prime(z),
            &|z| sph_h0(z).unwrap(),
            &|z| sph_h0_prime(z).unwrap(),
        ];
        for f in funcs {
            for &z in &points {
                let dx = (f(z + delta) - f(z - delta)) / (2.0 * delta);
                let dy = (f(z + I * delta) - f(z - I * delta)) / (2.0 * delta * I);
                assert!((dx - dy).norm() < 1e-6, "CR failed at {z}");
            }
        }
    }
}
