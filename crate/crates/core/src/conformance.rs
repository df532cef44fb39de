//! Empirical digit-law diagnostics: log-mantissa ECDF, exact Kolmogorov
//! sup-distances, shift fitting, the deviation curve, and the first-digit
//! chi-square test.

use serde::Serialize;

use crate::digits::{self, Base, LogUnit};
use crate::error::{Error, Result};
use crate::exp_law::ShiftedExpLaw;

/// Empirical CDF of points on the circle [0, 1).
#[derive(Debug, Clone)]
pub struct LogUnitECDF {
    points: Vec<f64>,
}

impl LogUnitECDF {
    /// Builds the ECDF from already-wrapped circle coordinates.
    pub fn from_points(mut points: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Input("no usable values".to_string()));
        }
        if points.iter().any(|&p| !(0.0..1.0).contains(&p)) {
            return Err(Error::domain("ECDF points must lie in [0, 1)".to_string()));
        }
        points.sort_by(f64::total_cmp);
        Ok(LogUnitECDF { points })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// ECDF(b) = (#points <= b)/n.
    pub fn eval(&self, b: f64) -> f64 {
        self.points.partition_point(|&p| p <= b) as f64 / self.points.len() as f64
    }

    /// Every `stride`-th point, for cheap approximate objectives.
    fn thin(&self, cap: usize) -> LogUnitECDF {
        if self.points.len() <= cap {
            return self.clone();
        }
        let stride = self.points.len().div_ceil(cap);
        LogUnitECDF { points: self.points.iter().copied().step_by(stride).collect() }
    }
}

/// Builds the log-mantissa ECDF of positive data. Zeros, negatives, and
/// non-finite entries are dropped; the second return value counts them.
pub fn ecdf_log_mantissa(values: &[f64], base: Base) -> Result<(LogUnitECDF, usize)> {
    let mut points = Vec::with_capacity(values.len());
    let mut dropped = 0usize;
    for &v in values {
        if v.is_finite() && v > 0.0 {
            points.push(digits::log_mantissa(v, base)?.value());
        } else {
            dropped += 1;
        }
    }
    if points.is_empty() {
        return Err(Error::Input("no usable values".to_string()));
    }
    Ok((LogUnitECDF::from_points(points)?, dropped))
}

/// Reference law for a sup-distance comparison.
#[derive(Clone, Copy)]
pub enum Law<'a> {
    /// Benford's law: the uniform CDF on the circle.
    Benford,
    /// A (possibly shifted) exponential digit law.
    ShiftedExp(&'a ShiftedExpLaw),
}

/// Exact Kolmogorov sup-distance, evaluated at both one-sided limits of
/// every jump point — never on a grid.
pub fn sup_distance(ecdf: &LogUnitECDF, law: Law<'_>) -> f64 {
    let n = ecdf.n() as f64;
    let mut sup = 0.0f64;
    for (i, &x) in ecdf.points().iter().enumerate() {
        let g = match law {
            Law::Benford => x,
            Law::ShiftedExp(l) => l.cdf_unchecked(x),
        };
        sup = sup.max(((i + 1) as f64 / n - g).abs());
        sup = sup.max((i as f64 / n - g).abs());
    }
    sup
}

const SHIFT_GRID: usize = 1024;
const SHIFT_TOL: f64 = 1e-6;
// caps on ECDF size for the two objective stages; the returned d_min is
// always the exact sup-distance on the full ECDF
const COARSE_CAP: usize = 4096;
const REFINE_CAP: usize = 65_536;

/// Fits the rotation: minimizes `s -> sup_distance(ecdf, shifted_exp(B, s))`
/// over a 1024-point grid (smallest argmin wins ties), then golden-section
/// refinement of the bracketing interval to |delta s| < 1e-6.
pub fn estimate_shift(ecdf: &LogUnitECDF, base: Base) -> Result<(LogUnit, f64)> {
    if ecdf.n() < 2 {
        return Err(Error::domain("shift estimation needs at least 2 points".to_string()));
    }
    let objective = |sub: &LogUnitECDF, s: f64| -> Result<f64> {
        let law = ShiftedExpLaw::new(base, s)?;
        Ok(sup_distance(sub, Law::ShiftedExp(&law)))
    };

    let coarse = ecdf.thin(COARSE_CAP);
    let mut best_j = 0usize;
    let mut best = f64::INFINITY;
    for j in 0..SHIFT_GRID {
        let d = objective(&coarse, j as f64 / SHIFT_GRID as f64)?;
        if d < best {
            best = d;
            best_j = j;
        }
    }

    let refine = ecdf.thin(REFINE_CAP);
    let width = 1.0 / SHIFT_GRID as f64;
    let mut lo = best_j as f64 / SHIFT_GRID as f64 - width;
    let mut hi = lo + 2.0 * width;
    let invphi = (5.0f64.sqrt() - 1.0) / 2.0;
    let mut a = hi - invphi * (hi - lo);
    let mut b = lo + invphi * (hi - lo);
    let mut fa = objective(&refine, a)?;
    let mut fb = objective(&refine, b)?;
    while hi - lo > SHIFT_TOL {
        if fa <= fb {
            hi = b;
            b = a;
            fb = fa;
            a = hi - invphi * (hi - lo);
            fa = objective(&refine, a)?;
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + invphi * (hi - lo);
            fb = objective(&refine, b)?;
        }
    }
    let s_hat = (0.5 * (lo + hi)).rem_euclid(1.0);
    let law = ShiftedExpLaw::new(base, s_hat)?;
    let d_min = sup_distance(ecdf, Law::ShiftedExp(&law));
    Ok((LogUnit::wrap(s_hat)?, d_min))
}

/// The deviation of the ECDF from Benford's law.
#[derive(Debug, Clone)]
pub struct DeviationCurve {
    /// (b, ECDF(b) - b) at each jump point, using the right-continuous
    /// ECDF value.
    pub points: Vec<(f64, f64)>,
    /// sup |ECDF(b) - b| over both one-sided limits at every jump.
    pub max_abs: f64,
    /// Half the peak-to-peak swing of the deviation: (max - min)/2. This
    /// is the visual amplitude of the plotted oscillation, which differs
    /// from `max_abs` when the curve is not centered on zero.
    pub amplitude: f64,
}

/// Tabulates ECDF(b) - b at the jump points together with its sup norm
/// and oscillation amplitude.
pub fn deviation_curve(ecdf: &LogUnitECDF) -> DeviationCurve {
    let n = ecdf.n() as f64;
    let mut points = Vec::with_capacity(ecdf.n());
    let mut hi = 0.0f64;
    let mut lo = 0.0f64;
    for (i, &x) in ecdf.points().iter().enumerate() {
        let upper = (i + 1) as f64 / n - x;
        let lower = i as f64 / n - x;
        points.push((x, upper));
        hi = hi.max(upper);
        lo = lo.min(lower);
    }
    let max_abs = hi.max(-lo);
    DeviationCurve { points, max_abs, amplitude: (hi - lo) / 2.0 }
}

/// Pearson chi-square of observed first-digit counts against Benford's
/// digit probabilities. Requires an integer base; dof = B - 2. Returns
/// (chisq, dof, observed digit frequencies for digits 1..B-1).
pub fn digit_chi_square(values: &[f64], base: Base) -> Result<(f64, usize, Vec<f64>)> {
    if !base.is_integer() {
        return Err(Error::domain(format!(
            "first-digit test needs an integer base, got {}",
            base.value()
        )));
    }
    let b = base.value() as usize;
    let mut counts = vec![0u64; b - 1];
    for &v in values {
        if v.is_finite() && v > 0.0 {
            let d = digits::mantissa(v, base)?.floor() as usize;
            counts[d.clamp(1, b - 1) - 1] += 1;
        }
    }
    let n: u64 = counts.iter().sum();
    if n == 0 {
        return Err(Error::Input("no usable values".to_string()));
    }
    let nf = n as f64;
    let mut chisq = 0.0;
    let mut freqs = Vec::with_capacity(b - 1);
    for (i, &c) in counts.iter().enumerate() {
        let p = digits::benford_digit_prob((i + 1) as u32, base)?;
        let expected = nf * p;
        chisq += (c as f64 - expected).powi(2) / expected;
        freqs.push(c as f64 / nf);
    }
    Ok((chisq, b - 2, freqs))
}

/// Flat summary of every digit diagnostic for one data set.
#[derive(Debug, Clone, Serialize)]
pub struct ConformanceReport {
    pub n_used: u64,
    pub n_dropped: u64,
    pub base: f64,
    pub d_benford: f64,
    pub d_exp_best: f64,
    pub shift_hat: f64,
    pub amplitude_curve_max: f64,
    pub digit_chisq: Option<f64>,
    pub digit_freqs: Vec<f64>,
}

/// Runs the full diagnostic battery on raw positive data. The chi-square
/// entries are null for non-integer bases.
pub fn conformance_report(values: &[f64], base: Base) -> Result<ConformanceReport> {
    let (ecdf, dropped) = ecdf_log_mantissa(values, base)?;
    let d_benford = sup_distance(&ecdf, Law::Benford);
    let (shift_hat, d_exp_best) = estimate_shift(&ecdf, base)?;
    let curve = deviation_curve(&ecdf);
    let (digit_chisq, digit_freqs) = if base.is_integer() {
        let (chisq, _, freqs) = digit_chi_square(values, base)?;
        (Some(chisq), freqs)
    } else {
        (None, Vec::new())
    };
    Ok(ConformanceReport {
        n_used: ecdf.n() as u64,
        n_dropped: dropped as u64,
        base: base.value(),
        d_benford,
        d_exp_best,
        shift_hat: shift_hat.value(),
        amplitude_curve_max: curve.amplitude,
        digit_chisq,
        digit_freqs,
    })
}
