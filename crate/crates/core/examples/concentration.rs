//! Simultaneous bin-count concentration: with N^{1-delta} quantile bins of
//! N points, every bin count stays within C N^{eps + delta/2} of N^delta
//! with probability tending to one, and the analytic Berry-Esseen-style
//! failure bound decays monotonically in N.
//!
//! Run with: `cargo run --release --example concentration`

use benford_gaps::bins::{berry_esseen_bound, concentration_check};
use benford_gaps::distributions::DistributionModel;
use benford_gaps::Result;

fn main() -> Result<()> {
    let model = DistributionModel::uniform(1.0)?;
    let (delta, eps, c) = (0.6, 0.25, 1.0);

    let fraction = concentration_check(&model, 100_000, delta, eps, c, 100, 1)?;
    println!("uniform(1), N=100000, delta={delta}, eps={eps}, C={c}, 100 trials:");
    println!("  all-bins concentration fraction = {fraction:.2}");

    println!("\nanalytic failure bound 6 C N^(1-3d/2-3e) + sqrt(2/pi) N^(1-d-e) exp(-N^(2e)/2):");
    let mut prev = f64::INFINITY;
    for exp in 3..=9u32 {
        let n = 10u64.pow(exp);
        let bound = berry_esseen_bound(n, delta, eps, c);
        println!("  N=10^{exp}: {bound:.4e} {}", if bound < prev { "(decreasing)" } else { "" });
        prev = bound;
    }

    // at the admissibility edge eps = 1/3 - delta/2 the bound stalls
    let edge = 1.0f64 / 3.0 - delta / 2.0;
    println!("\nat the edge eps = 1/3 - delta/2 = {edge:.4} the first term is N-independent:");
    for exp in [4u32, 6, 8] {
        let n = 10u64.pow(exp);
        println!("  N=10^{exp}: {:.4e}", berry_esseen_bound(n, delta, edge, c));
    }
    Ok(())
}
