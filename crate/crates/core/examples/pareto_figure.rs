//! Half-million-sample Pareto experiment: first-digit histogram of the
//! locally normalized spacings against Benford's probabilities, and the
//! oscillating deviation curve of the log-mantissa ECDF.
//!
//! Run with: `cargo run --release --example pareto_figure`

use benford_gaps::conformance::{deviation_curve, digit_chi_square, ecdf_log_mantissa};
use benford_gaps::digits::benford_digit_prob;
use benford_gaps::distributions::{pareto_figure1_exponent, DistributionModel};
use benford_gaps::order_stats::{gaps, normalize_local, order};
use benford_gaps::{Base, Result};

fn main() -> Result<()> {
    let base = Base::new(10.0)?;
    let n = 500_000usize;
    let seed = 0;

    // the unique Pareto exponent with unit variance (x_min = 1)
    let a = pareto_figure1_exponent();
    let check = a / ((a - 1.0).powi(2) * (a - 2.0));
    println!("Pareto exponent a = {a:.12} (variance check: a/((a-1)^2(a-2)) = {check:.12})");

    let model = DistributionModel::pareto(a, 1.0)?;
    let ordered = order(model.sample(n, seed)?, None)?;
    let raw = gaps(&ordered)?;
    let local = normalize_local(&raw, &ordered, &model)?;

    let (chisq, dof, freqs) = digit_chi_square(local.gaps(), base)?;
    println!("\nfirst digits of {n} normalized spacings vs Benford:");
    println!("{:>6} {:>10} {:>10} {:>10}", "digit", "observed", "benford", "diff");
    for (i, &f) in freqs.iter().enumerate() {
        let p = benford_digit_prob((i + 1) as u32, base)?;
        println!("{:>6} {:>10.5} {:>10.5} {:>+10.5}", i + 1, f, p, f - p);
    }
    println!("chi-square = {chisq:.2} on {dof} dof");

    let (ecdf, _) = ecdf_log_mantissa(local.gaps(), base)?;
    let curve = deviation_curve(&ecdf);
    println!("\ndeviation curve ECDF(b) - b (coarse trace):");
    for &(b, d) in curve.points.iter().step_by(curve.points.len() / 16) {
        let bar = "#".repeat(((d.abs() * 800.0) as usize).min(40));
        println!("  b={b:.3} {d:+.5} {bar}");
    }
    println!("sup |curve| = {:.5}, oscillation amplitude = {:.5}", curve.max_abs, curve.amplitude);
    Ok(())
}
