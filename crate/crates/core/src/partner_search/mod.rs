//! Complete bounded partner search and enumeration of the resonance set.
//!
//! For a resonant decomposition `n = k + (n - k)`, `|sigma(k)| <= 1/|k|`
//! gives `|n1|/|n|² <= 2 / min(|k|, |n - k|)`, so the shorter leg lies in the
//! disk of radius `2|n|²/|n1|`. Searching that disk and adding complements
//! therefore finds every partner.

mod enumerate;
pub mod jsonl;

pub use enumerate::{
    enumerate_lambda, enumerate_lambda_with, quadrant_points, EnumerateOptions, EnumerationReport, EnumerationStats,
};

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact_core::{is_resonant_lattice, quartic_coeffs, with_widening, Wavenumber};

/// Inclusive Euclidean bound on the shorter leg of any decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBound {
    pub radius: i64,
}

impl SearchBound {
    /// Largest `|y|` with `x² + y² <= radius²`, or `None` outside the disk.
    pub(crate) fn column_height(&self, x: i64) -> Option<u64> {
        let r = self.radius as i128;
        let rem = r * r - (x as i128) * (x as i128);
        (rem >= 0).then(|| num_integer::Roots::sqrt(&rem) as u64)
    }
}

/// `ceil(2 |n|² / |n1|)`
pub fn search_radius(n: &Wavenumber<i64>) -> Result<SearchBound> {
    if n.n1 == 0 {
        return Err(Error::ZeroZonal(n.to_string()));
    }
    let norm2 = (n.n1 as i128).pow(2) + (n.n2 as i128).pow(2);
    let a = (n.n1 as i128).abs();
    let radius = (2 * norm2 + a - 1) / a;
    let radius = i64::try_from(radius).map_err(|_| Error::Overflow)?;
    Ok(SearchBound { radius })
}

/// Every `k` with `is_resonant(n, k)`, sorted; closed under `k -> n - k`.
///
/// Scans each admissible zonal `x` in the search disk and extracts the
/// integer roots of the partner quartic restricted to the disk column.
pub fn find_partners(n: &Wavenumber<i64>) -> Result<Vec<Wavenumber<i64>>> {
    let bound = search_radius(n)?;
    let mut found = BTreeSet::new();
    for x in -bound.radius..=bound.radius {
        if x == 0 || x == n.n1 {
            continue;
        }
        let Some(height) = bound.column_height(x) else { continue };
        for y in column_roots(n, x, height)? {
            let k = Wavenumber::new(x, y);
            if !is_resonant_lattice(n, &k)? {
                return Err(Error::MalformedTriad(format!(
                    "quartic root {k} of {n} failed the exact check"
                )));
            }
            found.insert(n.checked_sub(&k)?);
            found.insert(k);
        }
    }
    Ok(found.into_iter().collect())
}

fn column_roots(n: &Wavenumber<i64>, x: i64, height: u64) -> Result<Vec<i64>> {
    with_widening(
        || quartic_coeffs(n, &x)?.integer_roots(height),
        || quartic_coeffs(&n.widen::<i128>(), &(x as i128))?.integer_roots(height),
        || quartic_coeffs(&n.widen::<BigInt>(), &BigInt::from(x))?.integer_roots(height),
    )
}

/// Brute-force reference for [`find_partners`]: tests every lattice point
/// of the search disk directly.
pub fn naive_partner_oracle(n: &Wavenumber<i64>) -> Result<Vec<Wavenumber<i64>>> {
    let bound = search_radius(n)?;
    let mut found = BTreeSet::new();
    for x in -bound.radius..=bound.radius {
        if x == 0 || x == n.n1 {
            continue;
        }
        let Some(height) = bound.column_height(x) else { continue };
        let height = height as i64;
        for y in -height..=height {
            let k = Wavenumber::new(x, y);
            if is_resonant_lattice(n, &k)? {
                found.insert(n.checked_sub(&k)?);
                found.insert(k);
            }
        }
    }
    Ok(found.into_iter().collect())
}
