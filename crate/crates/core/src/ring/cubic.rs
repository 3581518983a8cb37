//! The order `Z[alpha]`, `alpha^3 = delta`, in a pure cubic field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::integer::{power_free, Freeness};
use super::quadratic::FreenessCheck;
use crate::error::{Error, Result};

pub(crate) type Coords = [BigInt; 3];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicOrder {
    delta: BigInt,
}

impl CubicOrder {
    pub fn new(delta: impl Into<BigInt>) -> Result<Self> {
        Self::with_check(delta, FreenessCheck::default())
    }

    pub fn with_check(delta: impl Into<BigInt>, check: FreenessCheck) -> Result<Self> {
        let delta = delta.into();
        if delta.abs() < BigInt::from(2) {
            return Err(Error::InvalidRing(format!(
                "|delta| must be at least 2, got {delta}"
            )));
        }
        if let FreenessCheck::TrialDivision(bound) = check {
            match power_free(&delta, 3, bound) {
                Freeness::Free => {}
                Freeness::Divisible(_) => return Err(Error::NotCubeFree(delta.to_string())),
                Freeness::Undecided => {
                    return Err(Error::InvalidRing(format!(
                        "cannot decide cube-freeness of {delta} by trial division up to {bound}"
                    )))
                }
            }
        }
        Ok(CubicOrder { delta })
    }

    pub fn delta(&self) -> &BigInt {
        &self.delta
    }

    pub(crate) fn mul(&self, x: &Coords, y: &Coords) -> Coords {
        let [a1, b1, c1] = x;
        let [a2, b2, c2] = y;
        let dl = &self.delta;
        [
            a1 * a2 + dl * (b1 * c2 + c1 * b2),
            a1 * b2 + b1 * a2 + dl * c1 * c2,
            a1 * c2 + c1 * a2 + b1 * b2,
        ]
    }

    /// `a^3 + delta b^3 + delta^2 c^3 - 3 delta a b c`.
    pub(crate) fn norm(&self, x: &Coords) -> BigInt {
        let [a, b, c] = x;
        let dl = &self.delta;
        a * a * a + dl * b * b * b + dl * dl * c * c * c - BigInt::from(3) * dl * a * b * c
    }

    /// The product of the two other conjugates, an element of `Z[alpha]`
    /// with `x * adjugate(x) = N(x)`.
    pub(crate) fn adjugate(&self, x: &Coords) -> Coords {
        let [a, b, c] = x;
        let dl = &self.delta;
        [a * a - dl * b * c, dl * c * c - a * b, b * b - a * c]
    }

    /// Cramer's rule on the multiplication matrix of `y`; the adjugate
    /// matrix is multiplication by [`Self::adjugate`].
    pub(crate) fn exact_div(&self, x: &Coords, y: &Coords) -> Result<Option<Coords>> {
        let ny = self.norm(y);
        if ny.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if x.iter().all(Zero::is_zero) {
            return Ok(Some([BigInt::zero(), BigInt::zero(), BigInt::zero()]));
        }
        if !(self.norm(x) % &ny).is_zero() {
            return Ok(None);
        }
        let [p, q, r] = self.mul(x, &self.adjugate(y));
        let (qa, ra) = p.div_rem(&ny);
        let (qb, rb) = q.div_rem(&ny);
        let (qc, rc) = r.div_rem(&ny);
        Ok((ra.is_zero() && rb.is_zero() && rc.is_zero()).then_some([qa, qb, qc]))
    }
}
