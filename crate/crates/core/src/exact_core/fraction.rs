use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::{self, ExactInt};
use crate::error::{Error, Result};

/// Exact rational in lowest terms with a positive denominator.
///
/// Zero is always `0/1`. Serializes as the string `"num/den"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedFraction<T> {
    num: T,
    den: T,
}

impl<T: ExactInt> ReducedFraction<T> {
    pub fn new(num: T, den: T) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g.clone(), den / g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Self { num, den })
    }

    pub fn zero() -> Self {
        Self {
            num: T::zero(),
            den: T::one(),
        }
    }

    pub fn from_integer(v: T) -> Self {
        Self { num: v, den: T::one() }
    }

    pub fn numer(&self) -> &T {
        &self.num
    }

    pub fn denom(&self) -> &T {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        let num = scalar::add(&scalar::mul(&self.num, &rhs.den)?, &scalar::mul(&rhs.num, &self.den)?)?;
        Self::new(num, scalar::mul(&self.den, &rhs.den)?)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(&rhs.neg())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        Self::new(scalar::mul(&self.num, &rhs.num)?, scalar::mul(&self.den, &rhs.den)?)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(&self) -> Self {
        Self {
            num: -self.num.clone(),
            den: self.den.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.num.to_f64().unwrap_or(f64::NAN) / self.den.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T: ExactInt> fmt::Display for ReducedFraction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl<T: ExactInt + FromStr> FromStr for ReducedFraction<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseFraction(s.to_owned());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: T = num.parse().map_err(|_| bad())?;
        let den: T = den.parse().map_err(|_| bad())?;
        Self::new(num, den).map_err(|_| bad())
    }
}

impl<T: ExactInt> Serialize for ReducedFraction<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de, T: ExactInt + FromStr> Deserialize<'de> for ReducedFraction<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
