//! Orders `Z + Z*k*theta` in quadratic fields `Q(sqrt d)`.
//!
//! An element `a + b*k*theta` is stored by its lattice coordinates `(a, b)`,
//! so every stored pair is an element of the order and products stay inside
//! it without checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::integer::{power_free, Freeness};
use crate::error::{Error, Result};

pub(crate) type Pair = [BigInt; 2];

/// Which generator `theta` the order is built on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadForm {
    /// `theta = sqrt(d)`, `theta^2 = d`.
    Sqrt,
    /// `theta = (1 + sqrt(d))/2`, `theta^2 = theta + (d-1)/4`; needs `d = 1 mod 4`.
    Omega,
}

/// How square-freeness of `d` is established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FreenessCheck {
    /// Trial division by primes up to the bound.
    TrialDivision(u64),
    /// The caller vouches for it.
    Asserted,
}

impl Default for FreenessCheck {
    fn default() -> Self {
        FreenessCheck::TrialDivision(1_000_000)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadOrder {
    d: BigInt,
    form: QuadForm,
    k: BigInt,
    // theta^2 = t_lin*theta + t_const
    t_lin: BigInt,
    t_const: BigInt,
}

impl QuadOrder {
    pub fn new(d: impl Into<BigInt>, form: QuadForm, k: impl Into<BigInt>) -> Result<Self> {
        Self::with_check(d, form, k, FreenessCheck::default())
    }

    pub fn with_check(
        d: impl Into<BigInt>,
        form: QuadForm,
        k: impl Into<BigInt>,
        check: FreenessCheck,
    ) -> Result<Self> {
        let d = d.into();
        let k = k.into();
        if d.is_zero() || d.is_one() {
            return Err(Error::InvalidRing(format!("d = {d} is not allowed")));
        }
        if !k.is_positive() {
            return Err(Error::InvalidRing(format!(
                "index k = {k} must be positive"
            )));
        }
        if let FreenessCheck::TrialDivision(bound) = check {
            match power_free(&d, 2, bound) {
                Freeness::Free => {}
                Freeness::Divisible(_) => return Err(Error::NotSquareFree(d.to_string())),
                Freeness::Undecided => {
                    return Err(Error::InvalidRing(format!(
                        "cannot decide square-freeness of {d} by trial division up to {bound}"
                    )))
                }
            }
        }
        let (t_lin, t_const) = match form {
            QuadForm::Sqrt => (BigInt::zero(), d.clone()),
            QuadForm::Omega => {
                if d.mod_floor(&BigInt::from(4)) != BigInt::one() {
                    return Err(Error::InvalidRing(format!(
                        "omega form requires d = 1 mod 4, got d = {d}"
                    )));
                }
                (BigInt::one(), (&d - 1) / 4)
            }
        };
        Ok(QuadOrder {
            d,
            form,
            k,
            t_lin,
            t_const,
        })
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn form(&self) -> QuadForm {
        self.form
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    /// Lattice coordinates of `x + y*theta`, if that field element lies in
    /// the order.
    pub fn from_theta_coords(&self, x: BigInt, y: BigInt) -> Option<Pair> {
        let (b, r) = y.div_rem(&self.k);
        r.is_zero().then_some([x, b])
    }

    /// `(x, y)` with the element equal to `x + y*theta`.
    pub fn theta_coords(&self, a: &BigInt, b: &BigInt) -> Pair {
        [a.clone(), b * &self.k]
    }

    pub(crate) fn mul(&self, x: &Pair, y: &Pair) -> Pair {
        // (a1 + b1 k t)(a2 + b2 k t), t^2 = l t + c
        let [a1, b1] = x;
        let [a2, b2] = y;
        let bb = b1 * b2;
        let a = a1 * a2 + &bb * &self.k * &self.k * &self.t_const;
        let b = a1 * b2 + a2 * b1 + &bb * &self.k * &self.t_lin;
        [a, b]
    }

    pub(crate) fn norm(&self, x: &Pair) -> BigInt {
        let [a, b] = x;
        let y = b * &self.k;
        match self.form {
            QuadForm::Sqrt => a * a - &self.d * &y * &y,
            QuadForm::Omega => a * a + a * &y - &y * &y * &self.t_const,
        }
    }

    pub(crate) fn conjugate(&self, x: &Pair) -> Pair {
        let [a, b] = x;
        match self.form {
            QuadForm::Sqrt => [a.clone(), -b],
            // x + y w  ->  (x + y) - y w
            QuadForm::Omega => [a + b * &self.k, -b],
        }
    }

    pub(crate) fn exact_div(&self, x: &Pair, y: &Pair) -> Result<Option<Pair>> {
        let ny = self.norm(y);
        if ny.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if x.iter().all(Zero::is_zero) {
            return Ok(Some([BigInt::zero(), BigInt::zero()]));
        }
        if !(self.norm(x) % &ny).is_zero() {
            return Ok(None);
        }
        // x / y = x * conj(y) / N(y); conj(y) lies in the order
        let [p, q] = self.mul(x, &self.conjugate(y));
        let (qa, ra) = p.div_rem(&ny);
        let (qb, rb) = q.div_rem(&ny);
        Ok((ra.is_zero() && rb.is_zero()).then_some([qa, qb]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn pair(a: i64, b: i64) -> Pair {
        [bi(a), bi(b)]
    }

    #[test]
    fn construction_checks() {
        assert!(QuadOrder::new(10, QuadForm::Sqrt, 1).is_ok());
        assert_eq!(
            QuadOrder::new(8, QuadForm::Sqrt, 1),
            Err(Error::NotSquareFree("8".into()))
        );
        assert!(QuadOrder::new(3, QuadForm::Omega, 1).is_err());
        assert!(QuadOrder::new(-3, QuadForm::Omega, 1).is_ok());
        assert!(QuadOrder::new(1, QuadForm::Sqrt, 1).is_err());
        assert!(QuadOrder::new(5, QuadForm::Sqrt, 0).is_err());
        assert!(QuadOrder::with_check(8, QuadForm::Sqrt, 1, FreenessCheck::Asserted).is_ok());
    }

    #[test]
    fn omega_conjugate_pair() {
        // (2 + w)(3 - w) = 6 + w - w^2 = 6 + w - (w + 1) = 5
        let r = QuadOrder::new(5, QuadForm::Omega, 1).unwrap();
        let x = pair(2, 1);
        assert_eq!(r.conjugate(&x), pair(3, -1));
        assert_eq!(r.mul(&x, &r.conjugate(&x)), pair(5, 0));
        assert_eq!(r.norm(&x), bi(5));
    }

    #[test]
    fn index_folded_into_lattice() {
        let r = QuadOrder::new(11, QuadForm::Sqrt, 425).unwrap();
        assert_eq!(
            r.from_theta_coords(bi(999250), bi(1846625)),
            Some(pair(999250, 4345))
        );
        assert_eq!(r.from_theta_coords(bi(10), bi(55)), None);
        // form 2 with index: w-coordinate multiple of k
        let r = QuadOrder::new(5, QuadForm::Omega, 3).unwrap();
        let x = pair(1, 1); // 1 + 3w
        let x2 = r.mul(&x, &x);
        // (1 + 3w)^2 = 1 + 6w + 9(w + 1) = 10 + 15w -> b = 5
        assert_eq!(x2, pair(10, 5));
        assert_eq!(r.norm(&x2), r.norm(&x) * r.norm(&x));
    }
}
