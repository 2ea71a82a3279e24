//! Brute-force checks of the number-theoretic claims behind the search:
//! no resonance on the zonal axis, no nontrivial square `X⁴ + X²Y² + Y⁴`,
//! the `(m⁴, m·l³)` family, and the on-axis quartic identity.
//!
//! Outer loops run on the ambient rayon pool; results are merged in a fixed
//! order, so reports do not depend on the thread count.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_core::{
    canonical_triad, exact_sqrt, is_resonant_lattice, quartic_coeffs, ExactInt, QuarticPoly, ResonantTriad, Wavenumber,
};
use crate::partner_search::search_radius;

type Point = Wavenumber<i64>;

pub const DEFAULT_SEED: u64 = 0x5eed_2014;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub bounds: BTreeMap<String, i64>,
    pub checked: u64,
    pub counterexamples: Vec<Vec<i64>>,
    pub wall_time_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Consistent,
    CounterexampleFound,
}

impl VerificationReport {
    fn new(
        claim: &str,
        bounds: &[(&str, i64)],
        checked: u64,
        counterexamples: Vec<Vec<i64>>,
        started: Instant,
    ) -> Self {
        let verdict = if counterexamples.is_empty() {
            Verdict::Consistent
        } else {
            Verdict::CounterexampleFound
        };
        Self {
            claim: claim.to_owned(),
            bounds: bounds.iter().map(|(k, v)| ((*k).to_owned(), *v)).collect(),
            checked,
            counterexamples,
            wall_time_ms: started.elapsed().as_millis() as u64,
            seed: None,
            verdict,
        }
    }

    pub fn is_consistent(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// One-line human summary, e.g. `0 counterexamples / 125250 cases`.
    pub fn summary(&self) -> String {
        format!(
            "{} counterexamples / {} cases",
            self.counterexamples.len(),
            self.checked
        )
    }
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidArgument(what.to_owned()))
    }
}

/// Searches the full disk of every on-axis `n = (n1, 0)`, `1 <= n1 <= n1_max`,
/// for a resonant partner. Negative `n1` follow by the zonal mirror.
pub fn verify_axis_theorem(n1_max: i64) -> Result<VerificationReport> {
    verify_axis_theorem_with(n1_max, is_resonant_lattice)
}

/// [`verify_axis_theorem`] with a substitute predicate, for harness tests.
pub fn verify_axis_theorem_with<F>(n1_max: i64, resonant: F) -> Result<VerificationReport>
where
    F: Fn(&Point, &Point) -> Result<bool> + Sync,
{
    require(n1_max >= 1, "n1_max must be >= 1")?;
    let started = Instant::now();
    let per_n1: Vec<(u64, Vec<Vec<i64>>)> = (1..=n1_max)
        .into_par_iter()
        .map(|n1| {
            let n = Wavenumber::new(n1, 0);
            let bound = search_radius(&n)?;
            let mut checked = 0;
            let mut bad = Vec::new();
            for x in -bound.radius..=bound.radius {
                if x == 0 || x == n1 {
                    continue;
                }
                let Some(h) = bound.column_height(x) else { continue };
                let h = h as i64;
                for y in -h..=h {
                    checked += 1;
                    if resonant(&n, &Wavenumber::new(x, y))? {
                        bad.push(vec![n1, x, y]);
                    }
                }
            }
            Ok((checked, bad))
        })
        .collect::<Result<_>>()?;
    let checked = per_n1.iter().map(|p| p.0).sum();
    let bad = per_n1.into_iter().flat_map(|p| p.1).collect();
    Ok(VerificationReport::new(
        "axis-nonexistence",
        &[("n1_max", n1_max)],
        checked,
        bad,
        started,
    ))
}

/// Classification of one `(X, Y)` pair for `X⁴ + X²Y² + Y⁴ = Z²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaCase {
    /// `X = 0` or `Y = 0`; `Z` is the square root of the form.
    Trivial(BigInt),
    NotSquare,
    /// A nontrivial solution; would be a counterexample.
    Square(BigInt),
}

pub fn lemma_case(x: i64, y: i64) -> LemmaCase {
    let (x, y) = (BigInt::from(x), BigInt::from(y));
    let (x2, y2) = (&x * &x, &y * &y);
    let form = &x2 * &x2 + &x2 * &y2 + &y2 * &y2;
    match exact_sqrt(&form) {
        Some(z) if x2 == BigInt::from(0) || y2 == BigInt::from(0) => LemmaCase::Trivial(z),
        Some(z) => LemmaCase::Square(z),
        None => LemmaCase::NotSquare,
    }
}

fn lemma_form<T: ExactInt>(x: i64, y: i64) -> Result<bool> {
    use crate::exact_core::scalar::{add, mul};
    let (x, y) = (T::from(x), T::from(y));
    let (x2, y2) = (mul(&x, &x)?, mul(&y, &y)?);
    let form = add(&add(&mul(&x2, &x2)?, &mul(&x2, &y2)?)?, &mul(&y2, &y2)?)?;
    Ok(exact_sqrt(&form).is_some())
}

/// Checks every `1 <= X <= Y <= bound`; the form is symmetric and even.
pub fn verify_diophantine_lemma(bound: i64) -> Result<VerificationReport> {
    require(bound >= 1, "bound must be >= 1")?;
    let started = Instant::now();
    let per_x: Vec<Vec<Vec<i64>>> = (1..=bound)
        .into_par_iter()
        .map(|x| {
            let mut bad = Vec::new();
            for y in x..=bound {
                let square = match lemma_form::<i128>(x, y) {
                    Err(Error::Overflow) => lemma_form::<BigInt>(x, y)?,
                    other => other?,
                };
                if square {
                    bad.push(vec![x, y]);
                }
            }
            Ok(bad)
        })
        .collect::<Result<_>>()?;
    let checked = (bound as u64) * (bound as u64 + 1) / 2;
    let bad = per_x.into_iter().flatten().collect();
    Ok(VerificationReport::new(
        "quartic-form-lemma",
        &[("max", bound)],
        checked,
        bad,
        started,
    ))
}

/// Triads of `n = (m⁴, m·l³)` with partner `(l⁴, -m³·l)` for `m != l`.
pub fn generate_family(m_max: i64, l_max: i64) -> Result<Vec<ResonantTriad<i64>>> {
    require(m_max >= 1 && l_max >= 1, "m_max and l_max must be >= 1")?;
    let mut out = Vec::new();
    for m in 1..=m_max {
        for l in 1..=l_max {
            if m == l {
                continue;
            }
            let (n, k) = family_pair(m, l)?;
            if !is_resonant_lattice(&n, &k)? {
                return Err(Error::FamilyViolation { m, l });
            }
            out.push(canonical_triad(&n, &k)?);
        }
    }
    Ok(out)
}

/// `(n, k) = ((m⁴, m·l³), (l⁴, -m³·l))`
pub fn family_pair(m: i64, l: i64) -> Result<(Point, Point)> {
    let p = |b: i64, e: u32| b.checked_pow(e).ok_or(Error::Overflow);
    let mul = |a: i64, b: i64| a.checked_mul(b).ok_or(Error::Overflow);
    let n = Wavenumber::new(p(m, 4)?, mul(m, p(l, 3)?)?);
    let k = Wavenumber::new(p(l, 4)?, -mul(p(m, 3)?, l)?);
    Ok((n, k))
}

/// Value of `y⁴ − 2x(n1−x)y² + x²(n1−x)² − n1²·x(n1−x)` and of
/// `(y² − x(n1−x))² − n1²·x(n1−x)` at one point.
fn on_axis_forms(n1: i128, x: i128, y: i128) -> (i128, i128) {
    let p = x * (n1 - x);
    let y2 = y * y;
    let expanded = y2 * y2 - 2 * p * y2 + p * p - n1 * n1 * p;
    let squared = (y2 - p) * (y2 - p) - n1 * n1 * p;
    (expanded, squared)
}

/// The on-axis quartic, divided through by `n1`.
fn on_axis_quartic(n1: i128, x: i128) -> QuarticPoly<i128> {
    let p = x * (n1 - x);
    QuarticPoly::new(1, 0, -2 * p, 0, p * p - n1 * n1 * p)
}

/// Random spot checks that the partner quartic at `n2 = 0` is `n1` times the
/// on-axis quartic and that the latter equals its completed-square form.
pub fn check_proof_identity(sample_count: u64, bound: i64, seed: u64) -> Result<VerificationReport> {
    require(sample_count >= 1, "sample_count must be >= 1")?;
    require(bound >= 2, "bound must be >= 2")?;
    require(bound <= 1_000_000, "bound must be <= 1000000")?;
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for _ in 0..sample_count {
        let n1 = loop {
            let v = rng.gen_range(-bound..=bound);
            if v != 0 {
                break v;
            }
        };
        let x = loop {
            let v = rng.gen_range(-bound..=bound);
            if v != 0 && v != n1 {
                break v;
            }
        };
        let y = rng.gen_range(-bound..=bound);
        if !identity_holds(n1, x, y)? {
            bad.push(vec![n1, x, y]);
        }
    }
    let mut report = VerificationReport::new(
        "on-axis-quartic-identity",
        &[("samples", sample_count as i64), ("max", bound)],
        sample_count,
        bad,
        started,
    );
    report.seed = Some(seed);
    Ok(report)
}

fn identity_holds(n1: i64, x: i64, y: i64) -> Result<bool> {
    let (a, b, c) = (n1 as i128, x as i128, y as i128);
    let (expanded, squared) = on_axis_forms(a, b, c);
    let general = quartic_coeffs(&Wavenumber::new(a, 0), &b)?;
    let reduced = on_axis_quartic(a, b);
    let scaled = QuarticPoly::new(
        a * reduced.a4,
        a * reduced.a3,
        a * reduced.a2,
        a * reduced.a1,
        a * reduced.a0,
    );
    Ok(expanded == squared
        && general == scaled
        && general.a3 == 0
        && general.a1 == 0
        && reduced.eval(&c)? == expanded
        && general.eval(&c)? == a * expanded)
}
