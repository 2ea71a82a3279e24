//! Exact enumeration of resonant Rossby-wave triads on the integer lattice.
//!
//! A wavenumber `n = (n1, n2)` takes part in a non-trivial resonance when it
//! splits as `n = k + (n - k)` with all three zonal components nonzero and
//! `sigma(n) = sigma(k) + sigma(n - k)`, where `sigma(n) = n1 / |n|²` is the
//! Rossby dispersion relation with the constant `-beta` factored out.
//!
//! All verdicts are decided in exact integer arithmetic. The kernel in
//! [`exact_core`] is generic over [`ExactInt`]; the aliases below fix the
//! scalar for the common cases.

pub mod cli;
pub mod cluster_graph;
pub mod error;
pub mod exact_core;
pub mod partner_search;
pub mod verification;

pub use error::{Error, Result};
pub use exact_core::ExactInt;

use num_bigint::BigInt;

/// Lattice point with `i64` components.
pub type Wavenumber = exact_core::Wavenumber<i64>;
/// Lattice point with unbounded components.
pub type BigWavenumber = exact_core::Wavenumber<BigInt>;
/// Canonical resonant triad of `i64` lattice points.
pub type Triad = exact_core::ResonantTriad<i64>;
/// Exact rational with `i128` parts.
pub type Fraction = exact_core::ReducedFraction<i128>;
/// Exact rational with unbounded parts.
pub type BigFraction = exact_core::ReducedFraction<BigInt>;
/// Partner quartic with `i128` coefficients.
pub type Quartic = exact_core::QuarticPoly<i128>;
/// Partner quartic with unbounded coefficients.
pub type BigQuartic = exact_core::QuarticPoly<BigInt>;
