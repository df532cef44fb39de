//! Quantile-bin machinery for gap analysis.
//!
//! The support is cut into `N^{1-delta}` bins at the quantiles
//! `F(a_k) = k N^{delta-1}`, each holding about `N^delta` points. Gaps inside
//! bin `k` follow the exponential digit law rotated by `-log_B f(a_k) mod 1`;
//! whether those per-bin shifts spread out over the circle or pile up decides
//! whether the pooled differences look Benford.

use crate::digits::Base;
use crate::distributions::DistributionModel;
use crate::error::{Error, Result};
use crate::rng;
use std::f64::consts::PI;

/// A quantile partition of a model's support. Edge index `k` carries the
/// quantile `a_k = F^{-1}(k N^{delta-1})`; `k_range` is the trimmed window
/// of edge indices used for shift and smallness diagnostics.
#[derive(Debug, Clone)]
pub struct BinPartition {
    model: DistributionModel,
    n: u64,
    delta: f64,
    eps: f64,
    edges: Vec<f64>,
    k_range: (usize, usize),
}

/// Checks `eps` against the admissible window
/// `max(0, 1/3 - delta/2) < eps < delta/2`, naming the violated inequality.
fn check_admissible(delta: f64, eps: f64) -> Result<()> {
    if !(0.0 < delta && delta < 1.0) {
        return Err(Error::Partition(format!("delta must lie in (0, 1), got {delta}")));
    }
    let lower = (1.0 / 3.0 - delta / 2.0).max(0.0);
    if eps <= lower {
        return Err(Error::Partition(format!(
            "eps = {eps} violates eps > max(0, 1/3 - delta/2) = {lower}"
        )));
    }
    if eps >= delta / 2.0 {
        return Err(Error::Partition(format!(
            "eps = {eps} violates eps < delta/2 = {}",
            delta / 2.0
        )));
    }
    Ok(())
}

/// Builds the partition. When `N^{1-delta}` is not an integer the final
/// partial bin is merged into its neighbor (its edge snaps to the top of the
/// support) and stays outside the trimmed window.
pub fn build_partition(
    model: &DistributionModel,
    n: u64,
    delta: f64,
    eps: f64,
) -> Result<BinPartition> {
    check_admissible(delta, eps)?;
    let nf = n as f64;
    let bins_real = nf.powf(1.0 - delta);
    // round-to-nearest when within float noise of an integer, else floor
    let num_bins = if (bins_real - bins_real.round()).abs() < 1e-9 {
        bins_real.round() as usize
    } else {
        bins_real.floor() as usize
    };
    if num_bins < 4 {
        return Err(Error::Partition(format!(
            "N^(1-delta) = {bins_real:.3} yields fewer than 4 bins"
        )));
    }
    let step = nf.powf(delta - 1.0);
    let mut edges = Vec::with_capacity(num_bins + 1);
    edges.push(model.support().0);
    for k in 1..num_bins {
        edges.push(model.quantile(k as f64 * step)?);
    }
    edges.push(model.support().1);

    let k_lo = (eps * bins_real).ceil() as usize;
    let k_hi = (bins_real - eps * bins_real).floor() as usize;
    let k_hi = k_hi.min(num_bins - 1);
    if k_lo >= k_hi {
        return Err(Error::Partition("trimmed edge window is empty".to_string()));
    }
    for k in k_lo..=k_hi {
        if model.pdf(edges[k]) <= 0.0 {
            return Err(Error::Partition(format!(
                "density vanishes at trimmed edge k={k} (x = {})",
                edges[k]
            )));
        }
    }
    Ok(BinPartition { model: model.clone(), n, delta, eps, edges, k_range: (k_lo, k_hi) })
}

impl BinPartition {
    pub fn model(&self) -> &DistributionModel {
        &self.model
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// Bin edges; `edges()[k]` is `a_k`, and bin `k` covers
    /// `[edges()[k], edges()[k+1])`.
    pub fn edges(&self) -> &[f64] {
        &self.edges
    }

    pub fn num_bins(&self) -> usize {
        self.edges.len() - 1
    }

    /// Inclusive window of trimmed edge indices.
    pub fn k_range(&self) -> (usize, usize) {
        self.k_range
    }

    /// Bin index containing `x`, or None outside the support.
    pub fn bin_of(&self, x: f64) -> Option<usize> {
        if x < self.edges[0] || x > self.edges[self.edges.len() - 1] {
            return None;
        }
        let idx = self.edges.partition_point(|&e| e <= x);
        Some(idx.saturating_sub(1).min(self.num_bins() - 1))
    }
}

/// Per-bin rotation of the digit law: `(-log_B f(a_k)) mod 1` for every
/// trimmed edge index.
pub fn shift_sequence(partition: &BinPartition, base: Base) -> Result<Vec<f64>> {
    let (k_lo, k_hi) = partition.k_range;
    let mut shifts = Vec::with_capacity(k_hi - k_lo + 1);
    for k in k_lo..=k_hi {
        let f = partition.model.pdf(partition.edges[k]);
        if f <= 0.0 {
            return Err(Error::Partition(format!("density <= 0 at edge k={k}")));
        }
        shifts.push((-(f.ln() / base.ln())).rem_euclid(1.0));
    }
    Ok(shifts)
}

/// The "not too small" diagnostic:
/// `max_k min(N^{-(eps+delta/2)}, N^{delta-1}) / f(a_k)` over the trimmed
/// window. The hypothesis asks this to tend to zero as N grows.
pub fn smallness_condition(partition: &BinPartition) -> f64 {
    let nf = partition.n as f64;
    let numer = nf.powf(-(partition.eps + partition.delta / 2.0)).min(nf.powf(partition.delta - 1.0));
    let (k_lo, k_hi) = partition.k_range;
    (k_lo..=k_hi)
        .map(|k| numer / partition.model.pdf(partition.edges[k]))
        .fold(0.0, f64::max)
}

/// Exact sup-distance of the shift ECDF to the uniform law on [0, 1).
pub fn equidistribution_test(shifts: &[f64]) -> Result<f64> {
    if shifts.len() < 2 {
        return Err(Error::domain("equidistribution test needs at least 2 shifts".to_string()));
    }
    let mut sorted = shifts.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    let mut sup = 0.0f64;
    for (i, &s) in sorted.iter().enumerate() {
        sup = sup.max(((i + 1) as f64 / n - s).abs());
        sup = sup.max((i as f64 / n - s).abs());
    }
    Ok(sup)
}

/// Seeded experiment for the simultaneous concentration event: fraction of
/// trials in which every bin count stays within `C * N^{eps+delta/2}` of
/// `N^delta`.
pub fn concentration_check(
    model: &DistributionModel,
    n: u64,
    delta: f64,
    eps: f64,
    c_bound: f64,
    trials: u32,
    seed: u64,
) -> Result<f64> {
    if c_bound < 0.0 {
        return Err(Error::domain("C must be >= 0".to_string()));
    }
    if trials == 0 {
        return Err(Error::domain("trials must be >= 1".to_string()));
    }
    let partition = build_partition(model, n, delta, eps)?;
    let nf = n as f64;
    let target = nf.powf(delta);
    let tol = c_bound * nf.powf(eps + delta / 2.0);
    // a merged partial bin is not a quantile bin; leave it out of the event
    let bins_real = nf.powf(1.0 - delta);
    let merged = (bins_real - partition.num_bins() as f64).abs() > 1e-9;
    let checked_bins = if merged { partition.num_bins() - 1 } else { partition.num_bins() };
    let mut ok_trials = 0u32;
    let mut counts = vec![0u64; partition.num_bins()];
    for t in 0..trials {
        counts.iter_mut().for_each(|c| *c = 0);
        let trial_seed = rng::derive_seed(seed, t as u64);
        for i in 0..n {
            let x = model.quantile(rng::unit_open(trial_seed, i))?;
            if let Some(k) = partition.bin_of(x) {
                counts[k] += 1;
            }
        }
        if counts[..checked_bins].iter().all(|&c| (c as f64 - target).abs() <= tol) {
            ok_trials += 1;
        }
    }
    Ok(ok_trials as f64 / trials as f64)
}

/// The analytic failure-probability bound for the simultaneous event:
/// `6 c N^{1 - 3 delta/2 - 3 eps} + sqrt(2/pi) N^{1 - delta - eps}
/// exp(-N^{2 eps} / 2)`.
pub fn berry_esseen_bound(n: u64, delta: f64, eps: f64, c: f64) -> f64 {
    let nf = n as f64;
    6.0 * c * nf.powf(1.0 - 1.5 * delta - 3.0 * eps)
        + (2.0 / PI).sqrt() * nf.powf(1.0 - delta - eps) * (-nf.powf(2.0 * eps) / 2.0).exp()
}
