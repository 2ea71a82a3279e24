//! Dispersion surrogate, the resonance predicate and canonical triads.
//!
//! The Rossby dispersion relation is `omega = -beta * sigma(n)` with
//! `sigma(n) = n1 / (n1² + n2²)`. `beta > 0` multiplies every term of a
//! resonance condition identically, so only `sigma` is ever evaluated.

use serde::{Deserialize, Serialize};

use super::fraction::ReducedFraction;
use super::scalar::{self, with_widening, ExactInt};
use super::wavenumber::Wavenumber;
use crate::error::{Error, Result, ZeroLeg};

/// `sigma(n) = n1 / |n|²` in lowest terms.
pub fn sigma<T: ExactInt>(n: &Wavenumber<T>) -> Result<ReducedFraction<T>> {
    if n.is_zero() {
        return Err(Error::ZeroVector);
    }
    ReducedFraction::new(n.n1.clone(), n.norm2()?)
}

/// Rejects decompositions `n = k + (n - k)` with a vanishing zonal component.
pub fn check_admissible<T: ExactInt>(n: &Wavenumber<T>, k: &Wavenumber<T>) -> Result<()> {
    if n.n1.is_zero() {
        Err(Error::TrivialInteraction(ZeroLeg::Source))
    } else if k.n1.is_zero() {
        Err(Error::TrivialInteraction(ZeroLeg::Partner))
    } else if n.n1 == k.n1 {
        Err(Error::TrivialInteraction(ZeroLeg::Complement))
    } else {
        Ok(())
    }
}

/// Exact test of `sigma(n) = sigma(k) + sigma(n - k)`.
///
/// Cross-multiplies the three denominators: with `A = |k|²`, `B = |n - k|²`,
/// `N = |n|²` the condition is `n1·A·B = N·(k1·B + (n1 - k1)·A)`.
pub fn is_resonant<T: ExactInt>(n: &Wavenumber<T>, k: &Wavenumber<T>) -> Result<bool> {
    check_admissible(n, k)?;
    let m = n.checked_sub(k)?;
    let (big_n, a, b) = (n.norm2()?, k.norm2()?, m.norm2()?);
    let lhs = scalar::product(&[&n.n1, &a, &b])?;
    let rhs = scalar::mul(
        &big_n,
        &scalar::add(&scalar::mul(&k.n1, &b)?, &scalar::mul(&m.n1, &a)?)?,
    )?;
    Ok(lhs == rhs)
}

/// `is_resonant` in `T`, redone in `BigInt` if `T` overflows.
pub fn is_resonant_exact<T: ExactInt>(n: &Wavenumber<T>, k: &Wavenumber<T>) -> Result<bool> {
    match is_resonant(n, k) {
        Err(Error::Overflow) => is_resonant(&n.to_big(), &k.to_big()),
        other => other,
    }
}

/// `is_resonant` on lattice points, widening past `i64` only on overflow.
pub fn is_resonant_lattice(n: &Wavenumber<i64>, k: &Wavenumber<i64>) -> Result<bool> {
    with_widening(
        || is_resonant(n, k),
        || is_resonant(&n.widen::<i128>(), &k.widen::<i128>()),
        || is_resonant(&n.widen::<num_bigint::BigInt>(), &k.widen::<num_bigint::BigInt>()),
    )
}

/// `sigma(n) - sigma(k) - sigma(n - k)`, exactly.
pub fn residual<T: ExactInt>(n: &Wavenumber<T>, k: &Wavenumber<T>) -> Result<ReducedFraction<T>> {
    check_admissible(n, k)?;
    let m = n.checked_sub(k)?;
    sigma(n)?.checked_sub(&sigma(k)?)?.checked_sub(&sigma(&m)?)
}

/// Zero-sum triple `{a, b, c}` whose `sigma` values also sum to zero.
///
/// Always held in canonical form: members sorted lexicographically, and of
/// the triad and its negation the lexicographically smaller sorted tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[Wavenumber<T>; 3]")]
#[serde(try_from = "[Wavenumber<T>; 3]")]
#[serde(bound(
    serialize = "T: ExactInt + Serialize",
    deserialize = "T: ExactInt + serde::de::DeserializeOwned"
))]
pub struct ResonantTriad<T: Clone> {
    members: [Wavenumber<T>; 3],
}

impl<T: ExactInt> ResonantTriad<T> {
    /// Validates and canonicalizes an arbitrary zero-sum resonant triple.
    pub fn from_members(a: Wavenumber<T>, b: Wavenumber<T>, c: Wavenumber<T>) -> Result<Self> {
        let malformed = |why: &str| Error::MalformedTriad(format!("{{{a}, {b}, {c}}}: {why}"));
        let sum = a.checked_add(&b)?.checked_add(&c)?;
        if !sum.is_zero() {
            return Err(malformed("members do not sum to zero"));
        }
        if a.n1.is_zero() || b.n1.is_zero() || c.n1.is_zero() {
            return Err(malformed("zero zonal component"));
        }
        // -c = a + b, so resonance of the triple is resonance of (-c, a).
        if !is_resonant_exact(&c.neg(), &a)? {
            return Err(malformed("sigma values do not sum to zero"));
        }
        Ok(Self::canonical(a, b, c))
    }

    fn canonical(a: Wavenumber<T>, b: Wavenumber<T>, c: Wavenumber<T>) -> Self {
        let mut pos = [a, b, c];
        pos.sort();
        let mut neg = [pos[0].neg(), pos[1].neg(), pos[2].neg()];
        neg.sort();
        Self { members: pos.min(neg) }
    }

    pub fn members(&self) -> &[Wavenumber<T>; 3] {
        &self.members
    }

    pub fn a(&self) -> &Wavenumber<T> {
        &self.members[0]
    }

    pub fn b(&self) -> &Wavenumber<T> {
        &self.members[1]
    }

    pub fn c(&self) -> &Wavenumber<T> {
        &self.members[2]
    }

    /// Squared norms of the members, in member order.
    pub fn norms2(&self) -> Result<[T; 3]> {
        Ok([
            self.members[0].norm2()?,
            self.members[1].norm2()?,
            self.members[2].norm2()?,
        ])
    }

    /// Image under `(n1, n2) -> (n1, -n2)`, canonicalized.
    pub fn mirror_meridional(&self) -> Self {
        let [a, b, c] = &self.members;
        Self::canonical(a.mirror_meridional(), b.mirror_meridional(), c.mirror_meridional())
    }

    pub fn checked_scale(&self, j: &T) -> Result<Self> {
        let [a, b, c] = &self.members;
        Ok(Self::canonical(
            a.checked_scale(j)?,
            b.checked_scale(j)?,
            c.checked_scale(j)?,
        ))
    }
}

impl<T: Clone> From<ResonantTriad<T>> for [Wavenumber<T>; 3] {
    fn from(t: ResonantTriad<T>) -> Self {
        t.members
    }
}

impl<T: ExactInt> TryFrom<[Wavenumber<T>; 3]> for ResonantTriad<T> {
    type Error = Error;

    fn try_from([a, b, c]: [Wavenumber<T>; 3]) -> Result<Self> {
        Self::from_members(a, b, c)
    }
}

impl<T: ExactInt> std::fmt::Display for ResonantTriad<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a, b, c] = &self.members;
        write!(f, "{{{a}, {b}, {c}}}")
    }
}

/// Canonical form of `{k, n - k, -n}` for a resonant pair.
pub fn canonical_triad<T: ExactInt>(n: &Wavenumber<T>, k: &Wavenumber<T>) -> Result<ResonantTriad<T>> {
    if !is_resonant_exact(n, k)? {
        return Err(Error::NotResonant {
            n1: n.n1.to_string(),
            n2: n.n2.to_string(),
            k1: k.n1.to_string(),
            k2: k.n2.to_string(),
        });
    }
    let m = n.checked_sub(k)?;
    Ok(ResonantTriad::canonical(k.clone(), m, n.neg()))
}
