//! Exact digit law of the standard exponential: direct series vs the
//! Fourier route, the gamma-coefficient table, truncation bounds, and the
//! maximum deviation from Benford's law.
//!
//! Run with: `cargo run --release --example digit_law_tables`

use benford_gaps::exp_law::{
    build_gamma_table, cdf_direct, max_benford_deviation, pdf_direct, pdf_series,
    prob_interval_base_10, prob_interval_base_e, table_for_bound,
};
use benford_gaps::{Base, Result};

fn main() -> Result<()> {
    let b10 = Base::new(10.0)?;
    let be = Base::new(std::f64::consts::E)?;

    println!("base-10 digit law of the standard exponential");
    println!("{:>6} {:>12} {:>12} {:>12}", "b", "F(b)", "F'(b)", "F(b)-b");
    for i in 0..=10 {
        let b = i as f64 / 10.0;
        println!(
            "{:>6.1} {:>12.8} {:>12.8} {:>+12.8}",
            b,
            cdf_direct(b, b10)?,
            pdf_direct(b, b10)?,
            cdf_direct(b, b10)? - b
        );
    }

    let table = build_gamma_table(b10, 4)?;
    println!("\nFourier coefficients Gamma(1 + 2 pi i m / ln 10):");
    for t in &table.terms {
        println!("  m={}  modulus={:.7}  phase={:+.7}", t.m, t.modulus, t.phase);
    }
    println!(
        "truncation at M={}: rigorous bound {:.3e} (c1={:.4}, c2={})",
        table.truncation_m, table.bound_at_m, table.c1, table.c2
    );

    // the truncated series tracks the direct sum within the bound
    let fine = table_for_bound(b10, 1e-12)?;
    let mut worst = 0.0f64;
    for i in 0..=512 {
        let b = i as f64 / 512.0;
        worst = worst.max((pdf_series(b, &fine).0 - pdf_direct(b, b10)?).abs());
    }
    println!("series vs direct density, 512 points: max |diff| = {worst:.3e}");

    let (dev10, at10) = max_benford_deviation(b10)?;
    let (deve, ate) = max_benford_deviation(be)?;
    println!("\nmax |F_B(b) - b|:");
    println!("  base 10: {dev10:.10} at b = {at10:.6}");
    println!("  base e:  {deve:.10e} at b = {ate:.6}");

    println!("\ntwo-term closed interval formulas:");
    println!(
        "  base e,  P(log mantissa in [0.2, 0.7])  = {:.9}",
        prob_interval_base_e(0.2, 0.7)?
    );
    println!(
        "  base 10, P(first digit = 1) ~ P([0, log10 2]) = {:.9}",
        prob_interval_base_10(0.0, 2f64.log10())?
    );
    Ok(())
}
