use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::scalar::{self, ExactInt};
use crate::error::Result;

/// A point `(n1, n2)` of the integer wavenumber lattice.
///
/// `n1` is the zonal component, `n2` the meridional one. The derived ordering
/// is lexicographic on `(n1, n2)`. Serializes as a two-element array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[T; 2]", into = "[T; 2]")]
pub struct Wavenumber<T: Clone> {
    pub n1: T,
    pub n2: T,
}

impl<T: Clone> From<[T; 2]> for Wavenumber<T> {
    fn from([n1, n2]: [T; 2]) -> Self {
        Self { n1, n2 }
    }
}

impl<T: Clone> From<Wavenumber<T>> for [T; 2] {
    fn from(w: Wavenumber<T>) -> Self {
        [w.n1, w.n2]
    }
}

impl<T: ExactInt> Wavenumber<T> {
    pub fn new(n1: impl Into<T>, n2: impl Into<T>) -> Self {
        Self {
            n1: n1.into(),
            n2: n2.into(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.n1.is_zero() && self.n2.is_zero()
    }

    /// `n1² + n2²`
    pub fn norm2(&self) -> Result<T> {
        scalar::add(&scalar::square(&self.n1)?, &scalar::square(&self.n2)?)
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        Ok(Self {
            n1: scalar::add(&self.n1, &rhs.n1)?,
            n2: scalar::add(&self.n2, &rhs.n2)?,
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        Ok(Self {
            n1: scalar::sub(&self.n1, &rhs.n1)?,
            n2: scalar::sub(&self.n2, &rhs.n2)?,
        })
    }

    pub fn checked_scale(&self, j: &T) -> Result<Self> {
        Ok(Self {
            n1: scalar::mul(&self.n1, j)?,
            n2: scalar::mul(&self.n2, j)?,
        })
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(&self) -> Self {
        Self {
            n1: -self.n1.clone(),
            n2: -self.n2.clone(),
        }
    }

    /// `(n1, n2) -> (n1, -n2)`
    pub fn mirror_meridional(&self) -> Self {
        Self {
            n1: self.n1.clone(),
            n2: -self.n2.clone(),
        }
    }

    /// `(n1, n2) -> (-n1, n2)`
    pub fn mirror_zonal(&self) -> Self {
        Self {
            n1: -self.n1.clone(),
            n2: self.n2.clone(),
        }
    }

    pub fn to_big(&self) -> Wavenumber<BigInt> {
        Wavenumber {
            n1: self.n1.clone().into(),
            n2: self.n2.clone().into(),
        }
    }

    /// Whether `self == j * other` for some integer `j >= 2`.
    pub fn is_multiple_of(&self, other: &Self) -> bool {
        if other.is_zero() || self.is_zero() {
            return false;
        }
        // Pick the nonzero component of `other` to recover j.
        let (num, den) = if !other.n1.is_zero() {
            (&self.n1, &other.n1)
        } else {
            (&self.n2, &other.n2)
        };
        if !num.is_multiple_of(den) {
            return false;
        }
        let j = num.clone() / den.clone();
        j >= scalar::small(2) && other.n1.clone() * j.clone() == self.n1 && other.n2.clone() * j == self.n2
    }
}

impl Wavenumber<i64> {
    /// Lossless conversion into a wider scalar.
    pub fn widen<U: ExactInt>(&self) -> Wavenumber<U> {
        Wavenumber {
            n1: U::from(self.n1),
            n2: U::from(self.n2),
        }
    }
}

impl<T: ExactInt> fmt::Display for Wavenumber<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n1, self.n2)
    }
}
