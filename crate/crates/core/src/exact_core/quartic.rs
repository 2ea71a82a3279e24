//! The partner quartic and its exact integer roots.
//!
//! For fixed `n` and partner zonal component `x`, clearing the three
//! denominators of the resonance condition leaves a quartic in the partner's
//! meridional component `y`:
//!
//! ```text
//! n1·y⁴ − 2·n1·n2·y³ − 2·n1·x(n1−x)·y²
//!     + 2·n2·x(n1(n1−x) + n2²)·y
//!     − n1·x(n1−x)(x² − n1·x + n1² + 2·n2²) − n2⁴·x
//! ```
//!
//! which is identically `n1·A·B − N·(x·B + (n1−x)·A)` with `A = x² + y²`,
//! `B = (n1−x)² + (n2−y)²`, `N = |n|²`. Since `A` and `B` are nonzero for
//! admissible `x`, integer roots are exactly the resonant partners `(x, y)`.

use std::collections::BTreeSet;

use super::resonance::check_admissible;
use super::scalar::{self, small, ExactInt};
use super::wavenumber::Wavenumber;
use crate::error::Result;

/// `a4·y⁴ + a3·y³ + a2·y² + a1·y + a0`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticPoly<T> {
    pub a4: T,
    pub a3: T,
    pub a2: T,
    pub a1: T,
    pub a0: T,
}

impl<T: ExactInt> QuarticPoly<T> {
    pub fn new(a4: T, a3: T, a2: T, a1: T, a0: T) -> Self {
        Self { a4, a3, a2, a1, a0 }
    }

    /// Coefficients from the constant term upwards.
    pub fn ascending(&self) -> [&T; 5] {
        [&self.a0, &self.a1, &self.a2, &self.a3, &self.a4]
    }

    pub fn is_zero(&self) -> bool {
        self.ascending().iter().all(|c| c.is_zero())
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, y: &T) -> Result<T> {
        [&self.a3, &self.a2, &self.a1, &self.a0]
            .into_iter()
            .try_fold(self.a4.clone(), |acc, c| scalar::add(&scalar::mul(&acc, y)?, c))
    }

    fn eval_i64(&self, y: i64) -> Result<T> {
        self.eval(&small(y))
    }

    fn to_f64(&self) -> [f64; 5] {
        self.ascending().map(|c| c.to_f64().unwrap_or(f64::NAN))
    }

    /// All integer roots in `[-bound, bound]`, ascending.
    ///
    /// Real critical points are located in floating point; between them the
    /// polynomial is monotone, so each integer segment holds at most one root
    /// and is searched by exact bisection. A margin of integers around every
    /// critical point is evaluated exactly, so float error in locating the
    /// critical points never costs a root.
    pub fn integer_roots(&self, bound: u64) -> Result<Vec<i64>> {
        let bound = i64::try_from(bound).unwrap_or(i64::MAX);
        if self.is_zero() {
            return Ok((-bound..=bound).collect());
        }
        let coeffs = self.to_f64();
        let deriv = derivative(&coeffs);
        let span = bound as f64 + 1.0;
        let mut crit = real_roots(&deriv, -span, span);
        crit.retain(|c| c.is_finite());
        crit.sort_by(f64::total_cmp);

        let mut roots = BTreeSet::new();
        let mut seg_lo = -bound;
        for c in crit {
            let near_lo = (c.floor() as i64).saturating_sub(MARGIN).max(-bound);
            let near_hi = (c.ceil() as i64).saturating_add(MARGIN).min(bound);
            if near_lo > seg_lo {
                self.monotone_root(seg_lo, near_lo - 1, &mut roots)?;
            }
            for y in near_lo..=near_hi {
                if self.eval_i64(y)?.is_zero() {
                    roots.insert(y);
                }
            }
            seg_lo = seg_lo.max(near_hi + 1);
        }
        if seg_lo <= bound {
            self.monotone_root(seg_lo, bound, &mut roots)?;
        }
        Ok(roots.into_iter().collect())
    }

    fn monotone_root(&self, mut lo: i64, mut hi: i64, roots: &mut BTreeSet<i64>) -> Result<()> {
        let sign_lo = self.eval_i64(lo)?.signum();
        let sign_hi = self.eval_i64(hi)?.signum();
        if sign_lo.is_zero() {
            roots.insert(lo);
        }
        if sign_hi.is_zero() {
            roots.insert(hi);
        }
        if sign_lo.is_zero() || sign_hi.is_zero() || sign_lo == sign_hi {
            return Ok(());
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            let s = self.eval_i64(mid)?.signum();
            if s.is_zero() {
                roots.insert(mid);
                return Ok(());
            }
            if s == sign_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(())
    }
}

const MARGIN: i64 = 2;

/// Coefficients (times `n1`) of the partner quartic for `n` and zonal `x`.
pub fn quartic_coeffs<T: ExactInt>(n: &Wavenumber<T>, x: &T) -> Result<QuarticPoly<T>> {
    check_admissible(
        n,
        &Wavenumber {
            n1: x.clone(),
            n2: T::zero(),
        },
    )?;
    use scalar::{add, mul, product, square, sub};
    let (n1, n2) = (&n.n1, &n.n2);
    let two = small::<T>(2);
    let m = sub(n1, x)?; // n1 - x
    let xm = mul(x, &m)?; // x(n1 - x)
    let n2sq = square(n2)?;

    let a4 = n1.clone();
    let a3 = -product(&[&two, n2, n1])?;
    let a2 = -product(&[&two, &xm, n1])?;
    let a1 = product(&[&two, n2, x, &add(&mul(n1, &m)?, &n2sq)?])?;
    // x² − n1·x + n1² + 2·n2²
    let tail = add(
        &add(&sub(&square(x)?, &mul(n1, x)?)?, &square(n1)?)?,
        &mul(&two, &n2sq)?,
    )?;
    let a0 = sub(&-product(&[n1, &xm, &tail])?, &product(&[&square(&n2sq)?, x])?)?;
    Ok(QuarticPoly { a4, a3, a2, a1, a0 })
}

fn derivative(c: &[f64]) -> Vec<f64> {
    c.iter().enumerate().skip(1).map(|(i, v)| v * i as f64).collect()
}

fn horner(c: &[f64], y: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, v| acc * y + v)
}

/// Approximate real roots of `c` (ascending coefficients) inside `[lo, hi]`.
///
/// Reports every sign change; tangential roots may or may not be reported.
/// Extra reports are harmless to callers, which only use them as breakpoints.
fn real_roots(c: &[f64], lo: f64, hi: f64) -> Vec<f64> {
    let deg = match c.iter().rposition(|v| *v != 0.0) {
        Some(d) => d,
        None => return Vec::new(),
    };
    let c = &c[..=deg];
    let inside = |r: &f64| *r >= lo && *r <= hi;
    match deg {
        0 => Vec::new(),
        1 => [-c[0] / c[1]].into_iter().filter(inside).collect(),
        2 => {
            let (a, b, k) = (c[2], c[1], c[0]);
            let disc = b * b - 4.0 * a * k;
            if disc < 0.0 {
                return Vec::new();
            }
            // Cancellation-free pair of quadratic roots.
            let q = -0.5 * (b + b.signum() * disc.sqrt());
            let mut r = if q == 0.0 { vec![0.0] } else { vec![q / a, k / q] };
            r.retain(inside);
            r
        }
        _ => {
            let mut breaks = vec![lo];
            let mut inner = real_roots(&derivative(c), lo, hi);
            inner.sort_by(f64::total_cmp);
            breaks.extend(inner);
            breaks.push(hi);
            let mut out = Vec::new();
            for w in breaks.windows(2) {
                let (a, b) = (w[0], w[1]);
                let (fa, fb) = (horner(c, a), horner(c, b));
                if fa == 0.0 {
                    out.push(a);
                } else if fb != 0.0 && fa.signum() != fb.signum() {
                    out.push(bisect(c, a, b, fa));
                }
            }
            if horner(c, hi) == 0.0 {
                out.push(hi);
            }
            out
        }
    }
}

fn bisect(c: &[f64], mut a: f64, mut b: f64, fa: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = horner(c, mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == fa.signum() {
            a = mid;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}
