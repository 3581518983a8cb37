//! Extended valuation values: nonnegative rationals together with `-inf`
//! and `+inf`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// A value of a Dumas valuation.
///
/// `NegInf` is the value of zero under a valuation of the first kind and
/// `PosInf` the value of zero under one of the second kind. Finite values
/// are exact nonnegative rationals so that scaled valuations `omega / d` fit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtValue {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl ExtValue {
    pub fn zero() -> Self {
        ExtValue::Finite(BigRational::zero())
    }

    pub fn from_int<T: Into<BigInt>>(v: T) -> Self {
        let v = v.into();
        assert!(!v.is_negative(), "valuation values are nonnegative");
        ExtValue::Finite(BigRational::from_integer(v))
    }

    /// Finite value `num / den`; panics on a negative value.
    pub fn ratio<T: Into<BigInt>>(num: T, den: T) -> Self {
        let q = BigRational::new(num.into(), den.into());
        assert!(!q.is_negative(), "valuation values are nonnegative");
        ExtValue::Finite(q)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtValue::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            ExtValue::Finite(q) => Some(q),
            _ => None,
        }
    }

    /// The value as an integer, if it is finite and integral.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_finite()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    pub fn checked_add(&self, other: &ExtValue) -> Result<ExtValue> {
        use ExtValue::*;
        match (self, other) {
            (NegInf, PosInf) | (PosInf, NegInf) => Err(Error::KindMixing),
            (NegInf, _) | (_, NegInf) => Ok(NegInf),
            (PosInf, _) | (_, PosInf) => Ok(PosInf),
            (Finite(a), Finite(b)) => Ok(Finite(a + b)),
        }
    }

    /// Multiply by a nonnegative integer; `0 * inf` is taken to be `inf`.
    pub fn scale(&self, k: u64) -> ExtValue {
        match self {
            ExtValue::Finite(q) => ExtValue::Finite(q * BigRational::from_integer(k.into())),
            inf => inf.clone(),
        }
    }

    pub fn div_int(&self, d: u64) -> ExtValue {
        match self {
            ExtValue::Finite(q) => ExtValue::Finite(q / BigRational::from_integer(d.into())),
            inf => inf.clone(),
        }
    }
}

impl PartialOrd for ExtValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtValue {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtValue::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

/// Panics on `-inf + +inf`; use [`ExtValue::checked_add`] where kinds may mix.
impl std::ops::Add for &ExtValue {
    type Output = ExtValue;
    fn add(self, rhs: &ExtValue) -> ExtValue {
        self.checked_add(rhs)
            .expect("added values of different kinds")
    }
}

impl fmt::Display for ExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtValue::NegInf => f.write_str("-inf"),
            ExtValue::PosInf => f.write_str("+inf"),
            ExtValue::Finite(q) if q.is_integer() => write!(f, "{}", q.numer()),
            ExtValue::Finite(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}
