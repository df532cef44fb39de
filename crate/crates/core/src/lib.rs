//! Digit laws of order-statistic spacings.
//!
//! Adjacent gaps of a large ordered sample are asymptotically exponential,
//! and the leading digits of exponential data follow a law that is close
//! to — but provably never equal to — Benford's law. This crate provides:
//!
//! - the exact digit law of the standard exponential in any base `B > 1`
//!   ([`exp_law`]): direct series, Fourier series with complex-gamma
//!   coefficients, rigorous truncation bounds, and closed two-term
//!   approximations for bases `e` and `10`;
//! - seeded, counter-based Monte Carlo sampling ([`rng`],
//!   [`distributions`]) with bit-identical replay;
//! - order statistics and the global/local/binned gap normalizations
//!   ([`order_stats`]);
//! - quantile-bin partitions and their digit-shift diagnostics ([`bins`]);
//! - empirical conformance tests ([`conformance`]): exact Kolmogorov
//!   sup-distances, shift fitting, deviation curves, first-digit chi-square;
//! - a deterministic CLI ([`cli`]) emitting JSON reports and CSV curves.

pub mod bins;
pub mod cli;
pub mod conformance;
pub mod digits;
pub mod distributions;
pub mod error;
pub mod exp_law;
pub mod gamma;
pub mod order_stats;
pub mod report;
pub mod rng;

pub use digits::Base;
pub use error::{Error, Result};
