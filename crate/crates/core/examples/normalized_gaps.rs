//! Locally normalized gaps converge to exponential digit behavior for any
//! smooth parent distribution: rescaling each spacing by N f(X_i) removes
//! the density dependence, leaving the universal exponential digit law.
//!
//! Run with: `cargo run --release --example normalized_gaps`

use benford_gaps::conformance::{ecdf_log_mantissa, estimate_shift, sup_distance, Law};
use benford_gaps::distributions::DistributionModel;
use benford_gaps::order_stats::{gaps, normalize_local, order};
use benford_gaps::{Base, Result};

fn main() -> Result<()> {
    let base = Base::new(10.0)?;
    let n = 1_000_000usize;
    let seed = 7;

    let models = [
        DistributionModel::exponential(1.0)?,
        DistributionModel::pareto(2.0, 1.0)?,
        DistributionModel::weibull(1.5, 1.0)?,
        DistributionModel::uniform(3.0)?,
    ];
    println!("{n} draws, locally normalized spacings, base 10:");
    println!("{:>24} {:>12} {:>12} {:>12}", "model", "d_benford", "d_exp_best", "shift_hat");
    for model in &models {
        let ordered = order(model.sample(n, seed)?, None)?;
        let raw = gaps(&ordered)?;
        let local = normalize_local(&raw, &ordered, model)?;
        let (ecdf, _) = ecdf_log_mantissa(local.gaps(), base)?;
        let d_benford = sup_distance(&ecdf, Law::Benford);
        let (shift_hat, d_exp) = estimate_shift(&ecdf, base)?;
        println!(
            "{:>24} {:>12.6} {:>12.6} {:>12.6}",
            model.tag(),
            d_benford,
            d_exp,
            shift_hat.value()
        );
    }
    println!("\nd_exp_best is small (the law fits); d_benford stabilizes near");
    println!("the structural 0.0305 gap between the exponential law and Benford.");
    Ok(())
}
