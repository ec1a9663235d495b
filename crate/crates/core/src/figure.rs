//! Comparison data for the exact nanosphere resonance against the truncated
//! expansion levels, in the CSV layout consumed by the plotting scripts.

use serde::Serialize;

use crate::exact::{nanosphere_resonance, NanoScaling};
use crate::expansion::{approx_lambda, ApproxLevel};
use crate::{Complex64, Error, Result};

use std::io::Write;

/// Exact header line of the emitted CSV.
pub const CSV_HEADER: &str =
    "h,re_exact,im_exact,re_r0,im_r0,re_r0r1,im_r0r1,re_r0r1r2,im_r0r1r2";

/// Default sweep range and resolution.
pub const DEFAULT_H_MIN: f64 = 0.01;
pub const DEFAULT_H_MAX: f64 = 0.5;
pub const DEFAULT_STEPS: usize = 100;

/// One sweep point: the exact resonance and the three partial sums.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FigureRow {
    pub h: f64,
    pub exact: Complex64,
    pub r0: Complex64,
    pub r0r1: Complex64,
    pub r0r1r2: Complex64,
}

/// Rows at `steps` linearly spaced values of `h` in `[h_min, h_max]`,
/// endpoints included.
pub fn figure_rows(h_min: f64, h_max: f64, steps: usize) -> Result<Vec<FigureRow>> {
    if !(0.0 < h_min && h_min < h_max && h_max < 1.0) {
        return Err(Error::invalid(format!(
            "range must satisfy 0 < h_min < h_max < 1, got [{h_min}, {h_max}]"
        )));
    }
    if steps < 2 {
        return Err(Error::invalid(format!("need at least 2 steps, got {steps}")));
    }
    let mut rows = Vec::with_capacity(steps);
    for i in 0..steps {
        let h = h_min + (h_max - h_min) * i as f64 / (steps - 1) as f64;
        let exact = nanosphere_resonance(&NanoScaling::new(h, 1.0)?, 0)?.lambda;
        rows.push(FigureRow {
            h,
            exact,
            r0: approx_lambda(h, ApproxLevel::R0),
            r0r1: approx_lambda(h, ApproxLevel::R0R1),
            r0r1r2: approx_lambda(h, ApproxLevel::R0R1R2),
        });
    }
    Ok(rows)
}

/// Default sweep of [`figure_rows`].
pub fn default_figure_rows() -> Vec<FigureRow> {
    figure_rows(DEFAULT_H_MIN, DEFAULT_H_MAX, DEFAULT_STEPS)
        .expect("default range is valid")
}

/// 17 significant digits: enough for a lossless f64 round-trip, with a dot
/// decimal separator regardless of locale.
pub fn format_g17(x: f64) -> String {
    format!("{x:.16e}")
}

/// Write header plus one line per row.
pub fn write_csv<W: Write>(out: &mut W, rows: &[FigureRow]) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            format_g17(row.h),
            format_g17(row.exact.re),
            format_g17(row.exact.im),
            format_g17(row.r0.re),
            format_g17(row.r0.im),
            format_g17(row.r0r1.re),
            format_g17(row.r0r1.im),
            format_g17(row.r0r1r2.re),
            format_g17(row.r0r1r2.im),
        )?;
    }
    Ok(())
}
