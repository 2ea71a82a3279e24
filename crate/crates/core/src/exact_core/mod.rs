//! Exact integer/rational kernel: dispersion surrogate, resonance predicate,
//! canonical triads and the partner quartic.

pub mod fraction;
pub mod quartic;
pub mod resonance;
pub mod scalar;
pub mod wavenumber;

pub use fraction::ReducedFraction;
pub use quartic::{quartic_coeffs, QuarticPoly};
pub use resonance::{
    canonical_triad, check_admissible, is_resonant, is_resonant_exact, is_resonant_lattice, residual, sigma,
    ResonantTriad,
};
pub use scalar::{exact_sqrt, with_widening, ExactInt};
pub use wavenumber::Wavenumber;
