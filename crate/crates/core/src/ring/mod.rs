//! The supported integral domains and their elements.
//!
//! A [`Ring`] is a descriptor; elements are plain data ([`Elem`]) and every
//! operation goes through the descriptor so that mismatches are caught.

pub mod cubic;
pub mod integer;
pub mod quadratic;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use cubic::CubicOrder;
pub use quadratic::{FreenessCheck, QuadForm, QuadOrder};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::value::ExtValue;

/// Safety cap on the number of divisions performed by [`Ring::ord`].
pub const ORD_ITERATION_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    Quadratic(QuadOrder),
    Cubic(CubicOrder),
    Poly(PolyRing),
}

/// `base[vars]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    base: Box<Ring>,
    vars: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Int(BigInt),
    /// Lattice coordinates `(a, b)` of `a + b*k*theta`.
    Quad([BigInt; 2]),
    /// `a + b*alpha + c*alpha^2`.
    Cubic([BigInt; 3]),
    Poly(Polynomial),
}

impl Elem {
    pub fn int(n: impl Into<BigInt>) -> Elem {
        Elem::Int(n.into())
    }

    pub fn quad(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Elem {
        Elem::Quad([a.into(), b.into()])
    }

    pub fn cubic(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Elem {
        Elem::Cubic([a.into(), b.into(), c.into()])
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Elem::Int(n) => n.is_zero(),
            Elem::Quad(c) => c.iter().all(Zero::is_zero),
            Elem::Cubic(c) => c.iter().all(Zero::is_zero),
            Elem::Poly(p) => p.is_zero(),
        }
    }
}

impl PolyRing {
    pub fn new(base: Ring, vars: Vec<String>) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidRing(
                "polynomial ring needs a variable".into(),
            ));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) || base.has_var(v) {
                return Err(Error::InvalidRing(format!(
                    "variable `{v}` is declared twice"
                )));
            }
        }
        Ok(PolyRing {
            base: Box::new(base),
            vars,
        })
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

impl Ring {
    pub fn quadratic(d: i64, form: QuadForm, k: i64) -> Result<Ring> {
        Ok(Ring::Quadratic(QuadOrder::new(d, form, k)?))
    }

    pub fn cubic(delta: i64) -> Result<Ring> {
        Ok(Ring::Cubic(CubicOrder::new(delta)?))
    }

    /// `self[vars]`.
    pub fn poly<S: Into<String>>(self, vars: impl IntoIterator<Item = S>) -> Result<Ring> {
        Ok(Ring::Poly(PolyRing::new(
            self,
            vars.into_iter().map(Into::into).collect(),
        )?))
    }

    /// Adjoin one more variable. For a polynomial ring the variable is put
    /// first in its own list rather than nested.
    pub fn extend(&self, var: &str) -> Result<Ring> {
        match self {
            Ring::Poly(pr) => {
                let mut vars = pr.vars.clone();
                vars.insert(0, var.to_string());
                Ok(Ring::Poly(PolyRing::new((*pr.base).clone(), vars)?))
            }
            r => r.clone().poly([var]),
        }
    }

    pub fn has_var(&self, name: &str) -> bool {
        match self {
            Ring::Poly(pr) => pr.vars.iter().any(|v| v == name) || pr.base.has_var(name),
            _ => false,
        }
    }

    pub fn as_poly(&self) -> Option<&PolyRing> {
        match self {
            Ring::Poly(pr) => Some(pr),
            _ => None,
        }
    }

    /// Whether `x` has the shape of an element of this ring.
    pub fn contains(&self, x: &Elem) -> bool {
        match (self, x) {
            (Ring::Integers, Elem::Int(_)) => true,
            (Ring::Quadratic(_), Elem::Quad(_)) => true,
            (Ring::Cubic(_), Elem::Cubic(_)) => true,
            (Ring::Poly(pr), Elem::Poly(p)) => p.arity() == pr.arity(),
            _ => false,
        }
    }

    fn check(&self, x: &Elem) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch(self.to_string()))
        }
    }

    pub fn zero(&self) -> Elem {
        self.from_int(BigInt::zero())
    }

    pub fn one(&self) -> Elem {
        self.from_int(BigInt::one())
    }

    /// The image of an integer.
    pub fn from_int(&self, n: impl Into<BigInt>) -> Elem {
        let n = n.into();
        match self {
            Ring::Integers => Elem::Int(n),
            Ring::Quadratic(_) => Elem::Quad([n, BigInt::zero()]),
            Ring::Cubic(_) => Elem::Cubic([n, BigInt::zero(), BigInt::zero()]),
            Ring::Poly(pr) => Elem::Poly(Polynomial::constant(pr, pr.base.from_int(n))),
        }
    }

    pub fn add(&self, x: &Elem, y: &Elem) -> Result<Elem> {
        self.check(x)?;
        self.check(y)?;
        Ok(match (self, x, y) {
            (_, Elem::Int(a), Elem::Int(b)) => Elem::Int(a + b),
            (_, Elem::Quad([a1, b1]), Elem::Quad([a2, b2])) => Elem::Quad([a1 + a2, b1 + b2]),
            (_, Elem::Cubic(u), Elem::Cubic(v)) => {
                Elem::Cubic([&u[0] + &v[0], &u[1] + &v[1], &u[2] + &v[2]])
            }
            (Ring::Poly(pr), Elem::Poly(f), Elem::Poly(g)) => Elem::Poly(pr.add(f, g)?),
            _ => unreachable!("checked above"),
        })
    }

    pub fn neg(&self, x: &Elem) -> Result<Elem> {
        self.check(x)?;
        Ok(match (self, x) {
            (_, Elem::Int(a)) => Elem::Int(-a),
            (_, Elem::Quad([a, b])) => Elem::Quad([-a, -b]),
            (_, Elem::Cubic([a, b, c])) => Elem::Cubic([-a, -b, -c]),
            (Ring::Poly(pr), Elem::Poly(f)) => Elem::Poly(pr.neg(f)?),
            _ => unreachable!("checked above"),
        })
    }

    pub fn sub(&self, x: &Elem, y: &Elem) -> Result<Elem> {
        self.add(x, &self.neg(y)?)
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Result<Elem> {
        self.check(x)?;
        self.check(y)?;
        Ok(match (self, x, y) {
            (_, Elem::Int(a), Elem::Int(b)) => Elem::Int(a * b),
            (Ring::Quadratic(o), Elem::Quad(u), Elem::Quad(v)) => Elem::Quad(o.mul(u, v)),
            (Ring::Cubic(o), Elem::Cubic(u), Elem::Cubic(v)) => Elem::Cubic(o.mul(u, v)),
            (Ring::Poly(pr), Elem::Poly(f), Elem::Poly(g)) => Elem::Poly(pr.mul(f, g)?),
            _ => unreachable!("checked above"),
        })
    }

    pub fn pow(&self, x: &Elem, e: u32) -> Result<Elem> {
        let mut acc = self.one();
        let mut base = x.clone();
        let mut e = e;
        self.check(x)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base)?;
            }
        }
        Ok(acc)
    }

    /// `q` with `x = y*q`, if it exists in the ring.
    pub fn exact_div(&self, x: &Elem, y: &Elem) -> Result<Option<Elem>> {
        self.check(x)?;
        self.check(y)?;
        if y.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self, x, y) {
            (_, Elem::Int(a), Elem::Int(b)) => {
                let (q, r) = a.div_rem(b);
                r.is_zero().then_some(Elem::Int(q))
            }
            (Ring::Quadratic(o), Elem::Quad(u), Elem::Quad(v)) => {
                o.exact_div(u, v)?.map(Elem::Quad)
            }
            (Ring::Cubic(o), Elem::Cubic(u), Elem::Cubic(v)) => o.exact_div(u, v)?.map(Elem::Cubic),
            (Ring::Poly(pr), Elem::Poly(f), Elem::Poly(g)) => pr.exact_div(f, g)?.map(Elem::Poly),
            _ => unreachable!("checked above"),
        })
    }

    /// Field norm down to `Z`; the identity on `Z`.
    pub fn norm(&self, x: &Elem) -> Result<BigInt> {
        self.check(x)?;
        match (self, x) {
            (_, Elem::Int(a)) => Ok(a.clone()),
            (Ring::Quadratic(o), Elem::Quad(u)) => Ok(o.norm(u)),
            (Ring::Cubic(o), Elem::Cubic(u)) => Ok(o.norm(u)),
            _ => Err(Error::Unsupported("norm of a polynomial".into())),
        }
    }

    pub fn conjugate(&self, x: &Elem) -> Result<Elem> {
        self.check(x)?;
        match (self, x) {
            (Ring::Quadratic(o), Elem::Quad(u)) => Ok(Elem::Quad(o.conjugate(u))),
            (Ring::Integers, Elem::Int(_)) => Ok(x.clone()),
            _ => Err(Error::Unsupported(format!("conjugation in {self}"))),
        }
    }

    pub fn is_unit(&self, x: &Elem) -> bool {
        if !self.contains(x) {
            return false;
        }
        match (self, x) {
            (_, Elem::Int(a)) => a.abs().is_one(),
            (Ring::Poly(pr), Elem::Poly(f)) => f
                .constant_coeff()
                .filter(|_| f.num_terms() == 1)
                .is_some_and(|c| pr.base.is_unit(c)),
            _ => self.norm(x).is_ok_and(|n| n.abs().is_one()),
        }
    }

    /// Number of times `p` divides `x`; `+inf` for `x = 0`.
    pub fn ord(&self, x: &Elem, p: &Elem) -> Result<ExtValue> {
        self.check(x)?;
        self.check(p)?;
        if p.is_zero() || self.is_unit(p) {
            return Err(Error::ZeroOrUnitModulus);
        }
        if x.is_zero() {
            return Ok(ExtValue::PosInf);
        }
        let mut cur = x.clone();
        for k in 0..ORD_ITERATION_CAP {
            match self.exact_div(&cur, p)? {
                Some(q) => cur = q,
                None => return Ok(ExtValue::from_int(k)),
            }
        }
        Err(Error::IterationCap(ORD_ITERATION_CAP))
    }

    /// Degree of the ring as a `Z`-module, for orders.
    pub fn field_degree(&self) -> Option<u32> {
        match self {
            Ring::Integers => Some(1),
            Ring::Quadratic(_) => Some(2),
            Ring::Cubic(_) => Some(3),
            Ring::Poly(_) => None,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => f.write_str("Z"),
            Ring::Quadratic(o) => {
                let name = match o.form() {
                    QuadForm::Sqrt => "sqrt",
                    QuadForm::Omega => "omega",
                };
                write!(f, "Z[{name}({})", o.d())?;
                if !o.k().is_one() {
                    write!(f, ",k={}", o.k())?;
                }
                f.write_str("]")
            }
            Ring::Cubic(o) => write!(f, "Z[cbrt({})]", o.delta()),
            Ring::Poly(pr) => write!(f, "{}[{}]", pr.base, pr.vars.join(",")),
        }
    }
}


#[cfg(test)]
mod properties {
    use proptest::prelude::*;

    use super::*;
    use crate::sample::{random_elem, rng_for, SampleSpec};

    fn rings() -> Vec<Ring> {
        vec![
            Ring::Integers,
            Ring::quadratic(10, QuadForm::Sqrt, 1).unwrap(),
            Ring::quadratic(5, QuadForm::Omega, 1).unwrap(),
            Ring::quadratic(11, QuadForm::Sqrt, 5).unwrap(),
            Ring::quadratic(-7, QuadForm::Omega, 3).unwrap(),
            Ring::cubic(12).unwrap(),
            Ring::quadratic(2, QuadForm::Sqrt, 1)
                .unwrap()
                .poly(["Y"])
                .unwrap(),
        ]
    }

    fn triple(r: &Ring, seed: u64) -> (Elem, Elem, Elem) {
        let mut rng = rng_for(seed, 0);
        let spec = SampleSpec {
            coeff_bound: 50,
            max_terms: 3,
            max_exp: 2,
            boost: None,
        };
        (
            random_elem(r, &mut rng, &spec),
            random_elem(r, &mut rng, &spec),
            random_elem(r, &mut rng, &spec),
        )
    }

    proptest! {
        #[test]
        fn commutative_ring_laws(seed in any::<u64>()) {
            for r in rings() {
                let (x, y, z) = triple(&r, seed);
                prop_assert!(r.contains(&r.mul(&x, &y).unwrap()));
                prop_assert_eq!(r.add(&x, &y).unwrap(), r.add(&y, &x).unwrap());
                prop_assert_eq!(r.mul(&x, &y).unwrap(), r.mul(&y, &x).unwrap());
                let xy_z = r.mul(&r.mul(&x, &y).unwrap(), &z).unwrap();
                prop_assert_eq!(xy_z, r.mul(&x, &r.mul(&y, &z).unwrap()).unwrap());
                let lhs = r.mul(&x, &r.add(&y, &z).unwrap()).unwrap();
                let rhs = r.add(&r.mul(&x, &y).unwrap(), &r.mul(&x, &z).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
                prop_assert_eq!(r.mul(&x, &r.one()).unwrap(), x.clone());
                prop_assert!(r.add(&x, &r.neg(&x).unwrap()).unwrap().is_zero());
            }
        }

        #[test]
        fn norm_is_multiplicative(seed in any::<u64>()) {
            for r in rings().into_iter().filter(|r| r.as_poly().is_none()) {
                let (x, y, _) = triple(&r, seed);
                let n = r.norm(&r.mul(&x, &y).unwrap()).unwrap();
                prop_assert_eq!(n, r.norm(&x).unwrap() * r.norm(&y).unwrap());
                prop_assert_eq!(r.norm(&x).unwrap().is_zero(), x.is_zero());
            }
        }

        #[test]
        fn exact_division_inverts_multiplication(seed in any::<u64>()) {
            for r in rings() {
                let (x, y, _) = triple(&r, seed);
                if y.is_zero() {
                    continue;
                }
                let xy = r.mul(&x, &y).unwrap();
                prop_assert_eq!(r.exact_div(&xy, &y).unwrap(), Some(x.clone()));
                if let Some(q) = r.exact_div(&x, &y).unwrap() {
                    prop_assert_eq!(r.mul(&q, &y).unwrap(), x.clone());
                }
            }
        }

        #[test]
        fn ord_adds_over_products(a in 1i64..5000, b in 1i64..5000, p in prop::sample::select(vec![2i64, 3, 5, 7])) {
            let z = Ring::Integers;
            let (x, y, p) = (Elem::int(a), Elem::int(b), Elem::int(p));
            let lhs = z.ord(&z.mul(&x, &y).unwrap(), &p).unwrap();
            let rhs = z.ord(&x, &p).unwrap().checked_add(&z.ord(&y, &p).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
