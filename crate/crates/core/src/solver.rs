//! Newton iteration on the dispersion relation in the complex k-plane.
//!
//! The objective is the entire reduction `G(k) = sin(krs) + i s cos(krs)`
//! rather than the Bessel/Hankel matching form `F` (pole at the origin); `F`
//! is evaluated only to certify a converged iterate. Seeds come from the
//! analytic branch family, so no contour-integration root counting is needed
//! for this problem class.

use num_complex::Complex64;

use crate::exact::{
    dispersion_residual, dispersion_residual_prime, interface_residual, wave_number_exact,
    ModeSource, ResonanceMode, SphereSpec,
};
use crate::{Error, Result};

/// Two roots closer than this are treated as the same branch.
const DEDUP_RADIUS: f64 = 1e-8;

/// Newton iteration controls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Absolute residual target on `|G|`.
    pub tol: f64,
    pub max_iter: u32,
    /// Perturbation applied to analytic seeds in [`scan_branches`].
    pub seed_offset: Complex64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tol: 1e-13,
            max_iter: 60,
            seed_offset: Complex64::new(0.1, 0.1),
        }
    }
}

impl SolverConfig {
    fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            return Err(Error::invalid(format!("tol must be positive, got {}", self.tol)));
        }
        if self.max_iter == 0 {
            return Err(Error::invalid("max_iter must be at least 1"));
        }
        Ok(())
    }
}

/// Newton-iterate `G` from `seed`. A converged iterate must satisfy
/// `|G| < tol` and certify against the matching form, `|F| < 100 tol`;
/// otherwise the solve counts as non-convergent. The certification step is
/// what rejects the vacuum contrast `η = 0`, where `|G| = e^{Im(krs)}` decays
/// along the iteration without ever crossing a root.
pub fn newton_solve(seed: Complex64, spec: &SphereSpec, cfg: &SolverConfig) -> Result<ResonanceMode> {
    cfg.validate()?;
    if seed == Complex64::ZERO {
        return Err(Error::invalid("seed must be nonzero"));
    }
    let mut k = seed;
    for _ in 0..=cfg.max_iter {
        let g = dispersion_residual(k, spec);
        if g.norm() < cfg.tol {
            if let Ok(f) = interface_residual(k, spec) {
                if f.norm() < 100.0 * cfg.tol {
                    return Ok(ResonanceMode {
                        k,
                        lambda: k * k,
                        branch_m: infer_branch(k, spec),
                        interface_residual: f.norm(),
                        dispersion_residual: g.norm(),
                        source: ModeSource::Newton,
                    });
                }
            }
        }
        let gp = dispersion_residual_prime(k, spec);
        if gp.norm() < 1e-300 {
            return Err(Error::Solver(format!("degenerate Newton step at k = {k}")));
        }
        k -= g / gp;
        if !k.re.is_finite() || !k.im.is_finite() {
            return Err(Error::Solver("iterate left the finite plane".into()));
        }
    }
    Err(Error::Solver(format!(
        "no certified root within {} iterations from seed {seed}",
        cfg.max_iter
    )))
}

/// Solve branches `m = 0 ..= m_max`, seeding each from the analytic family
/// perturbed by `cfg.seed_offset`. Returns the modes sorted by ascending
/// `Re(k)`, deduplicated at radius 1e-8 (the family spacing `π/(rs)` keeps
/// genuine branches far apart).
pub fn scan_branches(spec: &SphereSpec, m_max: u32, cfg: &SolverConfig) -> Result<Vec<ResonanceMode>> {
    cfg.validate()?;
    let mut modes = Vec::with_capacity(m_max as usize + 1);
    for m in 0..=m_max {
        let seed = analytic_seed(spec, m) + cfg.seed_offset;
        let mut mode = newton_solve(seed, spec, cfg)?;
        mode.branch_m = m;
        modes.push(mode);
    }
    modes.sort_by(|a, b| a.k.re.total_cmp(&b.k.re));
    for pair in modes.windows(2) {
        if (pair[0].k - pair[1].k).norm() < DEDUP_RADIUS {
            return Err(Error::Solver(format!(
                "branches {} and {} collapsed onto the same root",
                pair[0].branch_m, pair[1].branch_m
            )));
        }
    }
    Ok(modes)
}

/// Closed-form family member where it exists; otherwise the oscillatory part
/// alone, which still lands in the right period strip.
fn analytic_seed(spec: &SphereSpec, m: u32) -> Complex64 {
    wave_number_exact(spec, m).unwrap_or_else(|_| {
        let phase = std::f64::consts::FRAC_PI_2 + m as f64 * std::f64::consts::PI;
        phase / (spec.radius() * spec.index_factor())
    })
}

/// Nearest branch index of the principal family for a converged wave number.
fn infer_branch(k: Complex64, spec: &SphereSpec) -> u32 {
    let t = (k * spec.radius() * spec.index_factor()).re;
    let m = ((t - std::f64::consts::FRAC_PI_2) / std::f64::consts::PI).round();
    if m.is_finite() && m > 0.0 {
        m as u32
    } else {
        0
    }
}
