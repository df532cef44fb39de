//! Order statistics, adjacent differences, and gap normalization.
//!
//! Three normalizations are supported: `global` rescales every gap by `N/L`,
//! `local` by `N f(X_i)` at the gap's left endpoint, and `binned` by
//! `N f(a_k)` for the quantile bin containing the left endpoint. For the
//! uniform distribution the three coincide.

use crate::bins::BinPartition;
use crate::distributions::DistributionModel;
use crate::error::{Error, Result};

/// A sample sorted ascending. With `wrap_l` set the data is treated as
/// periodic on `[0, L]` and a closing gap from the last point back to the
/// first (plus `L`) is included.
#[derive(Debug, Clone)]
pub struct OrderedSample {
    values: Vec<f64>,
    wrap_l: Option<f64>,
    tag: String,
}

/// Sorts a sample. `wrap_l` is only meaningful for data supported on
/// `[0, L]`; values outside that range are rejected.
pub fn order(mut values: Vec<f64>, wrap_l: Option<f64>) -> Result<OrderedSample> {
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::domain("sample contains a non-finite value".to_string()));
    }
    if let Some(l) = wrap_l {
        if !(l.is_finite() && l > 0.0) {
            return Err(Error::domain(format!("wrap length must be positive, got {l}")));
        }
        if values.iter().any(|&v| v < 0.0 || v > l) {
            return Err(Error::domain(format!("wrapped sample must lie in [0, {l}]")));
        }
    }
    values.sort_by(f64::total_cmp);
    Ok(OrderedSample { values, wrap_l, tag: String::new() })
}

impl OrderedSample {
    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.tag = tag.into();
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn wrapped(&self) -> bool {
        self.wrap_l.is_some()
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }
}

/// Which rescaling has been applied to a gap series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapMode {
    Raw,
    Global,
    Local,
    Binned,
}

/// Adjacent order-statistic differences under one normalization mode.
#[derive(Debug, Clone)]
pub struct GapSeries {
    gaps: Vec<f64>,
    mode: GapMode,
}

impl GapSeries {
    pub fn gaps(&self) -> &[f64] {
        &self.gaps
    }

    pub fn mode(&self) -> GapMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }
}

/// Raw adjacent differences; `n` of them for wrapped data, `n - 1` otherwise.
pub fn gaps(ordered: &OrderedSample) -> Result<GapSeries> {
    let v = ordered.values();
    if v.len() < 2 {
        return Err(Error::domain("need at least 2 points to form gaps".to_string()));
    }
    let mut out: Vec<f64> = v.windows(2).map(|w| w[1] - w[0]).collect();
    if let Some(l) = ordered.wrap_l {
        out.push(v[0] + l - v[v.len() - 1]);
    }
    Ok(GapSeries { gaps: out, mode: GapMode::Raw })
}

fn expect_raw(series: &GapSeries) -> Result<()> {
    if series.mode != GapMode::Raw {
        return Err(Error::domain("normalization expects a raw gap series".to_string()));
    }
    Ok(())
}

/// Global rescaling by the mean spacing `L/N`.
pub fn normalize_global(series: &GapSeries, l: f64, n: usize) -> Result<GapSeries> {
    expect_raw(series)?;
    if !(l.is_finite() && l > 0.0) || n == 0 {
        return Err(Error::domain(format!("global normalization needs L > 0 and N >= 1, got L={l}, N={n}")));
    }
    let scale = n as f64 / l;
    Ok(GapSeries { gaps: series.gaps.iter().map(|g| g * scale).collect(), mode: GapMode::Global })
}

/// Local rescaling of gap `i` by `N f(X_{i:N})` at its left endpoint.
pub fn normalize_local(
    series: &GapSeries,
    ordered: &OrderedSample,
    model: &DistributionModel,
) -> Result<GapSeries> {
    expect_raw(series)?;
    let n = ordered.n() as f64;
    let mut out = Vec::with_capacity(series.len());
    for (i, g) in series.gaps.iter().enumerate() {
        // the wrapped closing gap reuses the first point as left endpoint
        let x = ordered.values()[i.min(ordered.n() - 1)];
        let f = model.pdf(x);
        if f <= 0.0 {
            return Err(Error::domain(format!(
                "density is not positive at order statistic index {i} (x = {x})"
            )));
        }
        out.push(g * n * f);
    }
    Ok(GapSeries { gaps: out, mode: GapMode::Local })
}

/// Bin rescaling: every gap in quantile bin `k` is scaled by the same
/// `N f(a_k)`. Gaps falling in bins outside the trimmed window are dropped;
/// the second return value counts them.
pub fn normalize_binned(
    series: &GapSeries,
    ordered: &OrderedSample,
    partition: &BinPartition,
) -> Result<(GapSeries, usize)> {
    expect_raw(series)?;
    let n = ordered.n() as f64;
    let (k_lo, k_hi) = partition.k_range();
    let edges = partition.edges();
    let mut out = Vec::with_capacity(series.len());
    let mut dropped = 0usize;
    for (i, g) in series.gaps.iter().enumerate() {
        let x = ordered.values()[i.min(ordered.n() - 1)];
        match partition.bin_of(x) {
            Some(k) if k >= k_lo && k < k_hi => {
                let f = partition.model().pdf(edges[k]);
                if f <= 0.0 {
                    return Err(Error::domain(format!("density is not positive at bin edge {k}")));
                }
                out.push(g * n * f);
            }
            _ => dropped += 1,
        }
    }
    Ok((GapSeries { gaps: out, mode: GapMode::Binned }, dropped))
}
