//! Gaps of uniform order statistics follow shifted exponential digit
//! behavior: raw spacings of N uniform points on [0, L] carry a rotation
//! of log_B(L/N) mod 1, and globally normalized spacings carry none.
//!
//! Run with: `cargo run --release --example uniform_gaps`

use benford_gaps::conformance::{ecdf_log_mantissa, estimate_shift, sup_distance, Law};
use benford_gaps::distributions::DistributionModel;
use benford_gaps::exp_law::ShiftedExpLaw;
use benford_gaps::order_stats::{gaps, normalize_global, order};
use benford_gaps::{Base, Result};

fn main() -> Result<()> {
    let base = Base::new(10.0)?;
    let n = 1_000_000usize;
    let seed = 2024;
    let model = DistributionModel::uniform(1.0)?;

    let ordered = order(model.sample(n, seed)?, Some(1.0))?;
    let raw = gaps(&ordered)?;

    // raw spacings: mean L/N, so logs are rotated by log10(1/N) mod 1
    let predicted = ((1.0 / n as f64).log10()).rem_euclid(1.0).abs();
    let (ecdf, _) = ecdf_log_mantissa(raw.gaps(), base)?;
    let law = ShiftedExpLaw::new(base, predicted)?;
    println!("raw gaps of {n} uniform(0,1) points:");
    println!("  predicted shift  = {predicted:.6}");
    println!("  d(shifted exp)   = {:.6}", sup_distance(&ecdf, Law::ShiftedExp(&law)));
    println!("  d(benford)       = {:.6}", sup_distance(&ecdf, Law::Benford));
    let (shift_hat, d_min) = estimate_shift(&ecdf, base)?;
    println!("  fitted shift     = {:.6} (d = {d_min:.6})", shift_hat.value());

    // normalized spacings: unit exponential, zero shift
    let global = normalize_global(&raw, 1.0, n)?;
    let (ecdf, _) = ecdf_log_mantissa(global.gaps(), base)?;
    let unshifted = ShiftedExpLaw::new(base, 0.0)?;
    println!("globally normalized gaps:");
    println!("  d(exp law)       = {:.6}", sup_distance(&ecdf, Law::ShiftedExp(&unshifted)));
    println!("  d(benford)       = {:.6}", sup_distance(&ecdf, Law::Benford));
    Ok(())
}
