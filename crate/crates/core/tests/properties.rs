//! Property-based invariants across the library surface.

use proptest::prelude::*;

use benford_gaps::conformance::{ecdf_log_mantissa, sup_distance, Law};
use benford_gaps::digits::{self, Base};
use benford_gaps::distributions::DistributionModel;
use benford_gaps::exp_law::{
    cdf_direct, prob_interval_base_10, prob_interval_base_e, ShiftedExpLaw,
};
use benford_gaps::order_stats::{gaps, order};
use benford_gaps::rng;

fn bases() -> impl Strategy<Value = f64> {
    prop_oneof![Just(2.0), Just(std::f64::consts::E), Just(10.0), 1.1f64..40.0]
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 256,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn mantissa_reconstructs_value(x in 1e-30f64..1e30, b in bases()) {
        let base = Base::new(b).unwrap();
        let m = digits::mantissa(x, base).unwrap();
        prop_assert!((1.0..b).contains(&m), "mantissa {m} outside [1, {b})");
        // x / m is an integer power of b in log space
        let k = (x / m).ln() / b.ln();
        prop_assert!((k - k.round()).abs() < 1e-6, "k = {k}");
    }

    #[test]
    fn log_mantissa_is_on_circle(x in 1e-30f64..1e30, b in bases()) {
        let base = Base::new(b).unwrap();
        let u = digits::log_mantissa(x, base).unwrap().value();
        prop_assert!((0.0..1.0).contains(&u));
    }

    #[test]
    fn benford_cdf_monotone(s in 0.0f64..1.0, t in 0.0f64..1.0, b in bases()) {
        let base = Base::new(b).unwrap();
        let (lo, hi) = if s <= t { (s, t) } else { (t, s) };
        // benford_cdf takes a mantissa in [1, B); map circle coords up
        let f = |u: f64| digits::benford_cdf(b.powf(u), base).unwrap();
        prop_assert!(f(lo) <= f(hi) + 1e-12);
        prop_assert!((f(lo) - lo).abs() < 1e-9);
    }

    #[test]
    fn exponential_law_cdf_is_a_cdf(a in 0.0f64..1.0, c in 0.0f64..1.0, b in bases()) {
        let base = Base::new(b).unwrap();
        let (lo, hi) = if a <= c { (a, c) } else { (c, a) };
        prop_assert!(cdf_direct(lo, base).unwrap() <= cdf_direct(hi, base).unwrap() + 1e-12);
        prop_assert!(cdf_direct(0.0, base).unwrap().abs() < 1e-12);
        prop_assert!((cdf_direct(1.0, base).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn shifted_law_wraps_cleanly(shift in -3.0f64..3.0, b in prop_oneof![Just(2.0), Just(10.0)]) {
        let base = Base::new(b).unwrap();
        let law = ShiftedExpLaw::new(base, shift).unwrap();
        prop_assert!(law.cdf(0.0).unwrap().abs() < 1e-9);
        prop_assert!((law.cdf(1.0).unwrap() - 1.0).abs() < 1e-9);
        let mut prev = 0.0;
        for i in 0..=64 {
            let v = law.cdf(i as f64 / 64.0).unwrap();
            prop_assert!(v >= prev - 1e-12);
            prev = v;
        }
    }

    #[test]
    fn interval_formulas_track_direct_series(a in 0.0f64..1.0, c in 0.0f64..1.0) {
        let (lo, hi) = if a <= c { (a, c) } else { (c, a) };
        let be = Base::new(std::f64::consts::E).unwrap();
        let b10 = Base::new(10.0).unwrap();
        let exact_e = cdf_direct(hi, be).unwrap() - cdf_direct(lo, be).unwrap();
        let exact_10 = cdf_direct(hi, b10).unwrap() - cdf_direct(lo, b10).unwrap();
        prop_assert!((prob_interval_base_e(lo, hi).unwrap() - exact_e).abs() <= 6.32e-7);
        prop_assert!((prob_interval_base_10(lo, hi).unwrap() - exact_10).abs() <= 8.5e-5);
    }

    #[test]
    fn gaps_are_nonnegative_and_telescope(values in prop::collection::vec(0.0f64..1e6, 2..200)) {
        let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let series = gaps(&order(values, None).unwrap()).unwrap();
        prop_assert!(series.gaps().iter().all(|&g| g >= 0.0));
        let sum: f64 = series.gaps().iter().sum();
        prop_assert!((sum - (hi - lo)).abs() <= 1e-6 * (1.0 + hi.abs()));
    }

    #[test]
    fn sup_distance_invariant_under_base_power_scaling(
        seed in 0u64..1000,
        k in -3i32..4,
    ) {
        let model = DistributionModel::exponential(1.0).unwrap();
        let data = model.sample(500, seed).unwrap();
        let base = Base::new(10.0).unwrap();
        let scale = 10f64.powi(k);
        let scaled: Vec<f64> = data.iter().map(|x| x * scale).collect();
        let (e1, _) = ecdf_log_mantissa(&data, base).unwrap();
        let (e2, _) = ecdf_log_mantissa(&scaled, base).unwrap();
        let d1 = sup_distance(&e1, Law::Benford);
        let d2 = sup_distance(&e2, Law::Benford);
        prop_assert!((d1 - d2).abs() < 1e-9, "d1={d1} d2={d2}");
    }

    #[test]
    fn rng_streams_are_deterministic_and_open(seed in any::<u64>(), index in 0u64..1_000_000) {
        let u = rng::unit_open(seed, index);
        prop_assert!(u > 0.0 && u < 1.0);
        prop_assert_eq!(rng::word(seed, index), rng::word(seed, index));
        prop_assert_eq!(rng::derive_seed(seed, 3), rng::derive_seed(seed, 3));
    }

    #[test]
    fn quantile_cdf_round_trip(u in 1e-9f64..0.999_999_999, which in 0usize..4) {
        let model = match which {
            0 => DistributionModel::uniform(2.0).unwrap(),
            1 => DistributionModel::exponential(1.5).unwrap(),
            2 => DistributionModel::pareto(2.5, 1.0).unwrap(),
            _ => DistributionModel::weibull(1.5, 2.0).unwrap(),
        };
        let x = model.quantile(u).unwrap();
        prop_assert!((model.cdf(x) - u).abs() < 1e-9, "cdf(quantile({u})) drifted");
    }

    #[test]
    fn model_spec_round_trip(l in 0.1f64..100.0, rate in 0.1f64..100.0) {
        let spec = format!("uniform:L={l}");
        let m: DistributionModel = spec.parse().unwrap();
        prop_assert_eq!(m.support(), (0.0, l));
        let spec = format!("exponential:rate={rate}");
        let m: DistributionModel = spec.parse().unwrap();
        prop_assert!((m.pdf(0.0) - rate).abs() < 1e-12);
    }
}
