//! Mantissa and significant-digit primitives, plus the Benford reference law.
//!
//! Every value `x > 0` factors uniquely as `x = m * B^k` with `m` in `[1, B)`
//! and integer `k`; `m` is the mantissa. A data set is Benford base `B`
//! exactly when its base-`B` logarithms are equidistributed modulo one.

use crate::error::{Error, Result};
use serde::Serialize;

/// Logarithm base for digit analysis. Must be strictly greater than 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Base(f64);

impl Base {
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || value <= 1.0 {
            return Err(Error::domain(format!("base must be finite and > 1, got {value}")));
        }
        Ok(Base(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn ln(self) -> f64 {
        self.0.ln()
    }

    /// True when the base is an integer >= 2, which is what first-digit
    /// histograms require.
    pub fn is_integer(self) -> bool {
        self.0.fract() == 0.0 && self.0 >= 2.0
    }
}

/// A point on the circle [0, 1), in units of log_B. Arithmetic is modulo 1.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct LogUnit(f64);

impl LogUnit {
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || !(0.0..1.0).contains(&value) {
            return Err(Error::domain(format!("log-unit must lie in [0, 1), got {value}")));
        }
        Ok(LogUnit(value))
    }

    /// Wraps an arbitrary finite real onto the circle.
    pub fn wrap(value: f64) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::domain("cannot wrap a non-finite value".to_string()));
        }
        let mut v = value.rem_euclid(1.0);
        if v >= 1.0 {
            v = 0.0;
        }
        Ok(LogUnit(v))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

fn check_positive(x: f64) -> Result<()> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain(format!("expected a positive finite value, got {x}")));
    }
    Ok(())
}

/// Mantissa of `x` in base `B`: the unique `m` in `[1, B)` with
/// `x = m * B^k`. Computed by exponent extraction and a single division so
/// that extreme magnitudes do not accumulate drift.
pub fn mantissa(x: f64, base: Base) -> Result<f64> {
    check_positive(x)?;
    let b = base.value();
    let k = (x.ln() / base.ln()).floor();
    let mut m = x / pow_int(b, k);
    // One-step fixups for rounding at the boundary of [1, B).
    while m >= b {
        m /= b;
    }
    while m < 1.0 {
        m *= b;
    }
    // A mantissa that rounds to exactly B canonicalizes to 1.
    if m >= b {
        m = 1.0;
    }
    Ok(m)
}

/// Integer power of the base, split into two half-powers so that huge
/// exponents stay inside f64 range as long as the result does.
fn pow_int(b: f64, k: f64) -> f64 {
    let half = (k / 2.0).trunc();
    b.powf(half) * b.powf(k - half)
}

/// `log_B x mod 1`, the circle coordinate of the mantissa.
pub fn log_mantissa(x: f64, base: Base) -> Result<LogUnit> {
    check_positive(x)?;
    LogUnit::wrap(x.ln() / base.ln())
}

/// Benford CDF on the mantissa scale: `P(mantissa <= s) = log_B s`.
pub fn benford_cdf(s: f64, base: Base) -> Result<f64> {
    let b = base.value();
    if !s.is_finite() || s < 1.0 || s > b {
        return Err(Error::domain(format!("mantissa argument must lie in [1, {b}], got {s}")));
    }
    Ok(s.ln() / base.ln())
}

/// Probability of first digit `d` under Benford's law:
/// `log_B(d+1) - log_B d`.
pub fn benford_digit_prob(d: u32, base: Base) -> Result<f64> {
    if !base.is_integer() {
        return Err(Error::domain(format!(
            "first digits need an integer base >= 2, got {}",
            base.value()
        )));
    }
    let b = base.value() as u32;
    if d < 1 || d > b - 1 {
        return Err(Error::domain(format!("digit must lie in 1..={}, got {d}", b - 1)));
    }
    Ok(((d as f64 + 1.0).ln() - (d as f64).ln()) / base.ln())
}
