//! Dumas valuations: weighted degree, weighted codegree, `ord_p`, and their
//! scalings by `1/d`, with an axiom-checking harness.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::par;
use crate::poly::WeightVector;
use crate::ring::integer::is_prime;
use crate::ring::{Elem, Ring};
use crate::value::ExtValue;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// `omega(0) = -inf`, `omega(x + y) <= max`.
    First,
    /// `omega(0) = +inf`, `omega(x + y) >= min`.
    Second,
}

impl Kind {
    pub fn infinity(self) -> ExtValue {
        match self {
            Kind::First => ExtValue::NegInf,
            Kind::Second => ExtValue::PosInf,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::First => "first",
            Kind::Second => "second",
        })
    }
}

/// Why an element is known to be prime.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PrimeCertificate {
    /// `|p|` is a prime integer.
    Integer(BigInt),
    /// The norm of the element is a prime integer, which makes it a prime
    /// element of any order containing it.
    Norm(BigInt),
    /// A variable of a polynomial ring over a domain, up to a unit.
    Variable(String),
    /// A prime of the coefficient ring, viewed as a constant.
    Constant(Box<PrimeCertificate>),
}

impl fmt::Display for PrimeCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeCertificate::Integer(p) => write!(f, "|{p}| is prime"),
            PrimeCertificate::Norm(n) => write!(f, "norm {n} is prime"),
            PrimeCertificate::Variable(v) => write!(f, "variable {v}"),
            PrimeCertificate::Constant(c) => write!(f, "constant: {c}"),
        }
    }
}

/// A primality certificate for `p` in `ring`, if one of the supported
/// arguments applies. `None` does not mean `p` is composite.
pub fn certify_prime(ring: &Ring, p: &Elem) -> Option<PrimeCertificate> {
    if !ring.contains(p) {
        return None;
    }
    match (ring, p) {
        (Ring::Integers, Elem::Int(n)) => is_prime(n).then(|| PrimeCertificate::Integer(n.abs())),
        (Ring::Quadratic(_) | Ring::Cubic(_), _) => {
            let n = ring.norm(p).ok()?;
            is_prime(&n).then_some(PrimeCertificate::Norm(n))
        }
        (Ring::Poly(pr), Elem::Poly(f)) => {
            if f.num_terms() != 1 {
                return None;
            }
            let (idx, c) = f.leading()?;
            if idx.is_zero() {
                certify_prime(pr.base(), c).map(|c| PrimeCertificate::Constant(Box::new(c)))
            } else if idx.total() == 1 && pr.base().is_unit(c) {
                let i = idx.exps().iter().position(|&e| e == 1)?;
                Some(PrimeCertificate::Variable(pr.vars()[i].clone()))
            } else {
                None
            }
        }
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    DegNu(WeightVector),
    CodegNu(WeightVector),
    OrdP {
        p: Elem,
        certificate: Option<PrimeCertificate>,
    },
    Scaled {
        inner: Box<Valuation>,
        d: u32,
    },
}

impl Valuation {
    /// `ord_p` on `ring`; `p` must be a nonzero non-unit. A primality
    /// certificate is attached when one can be found.
    pub fn ord_p(ring: &Ring, p: Elem) -> Result<Valuation> {
        if !ring.contains(&p) {
            return Err(Error::DescriptorMismatch(ring.to_string()));
        }
        if p.is_zero() || ring.is_unit(&p) {
            return Err(Error::ZeroOrUnitModulus);
        }
        let certificate = certify_prime(ring, &p);
        Ok(Valuation::OrdP { p, certificate })
    }

    pub fn scaled(inner: Valuation, d: u32) -> Result<Valuation> {
        if d == 0 {
            return Err(Error::InvalidRing(
                "scaling denominator must be positive".into(),
            ));
        }
        Ok(Valuation::Scaled {
            inner: Box::new(inner),
            d,
        })
    }

    pub fn kind(&self) -> Kind {
        match self {
            Valuation::DegNu(_) => Kind::First,
            Valuation::CodegNu(_) | Valuation::OrdP { .. } => Kind::Second,
            Valuation::Scaled { inner, .. } => inner.kind(),
        }
    }

    pub fn is_scaled(&self) -> bool {
        matches!(self, Valuation::Scaled { .. })
    }

    /// The innermost `ord_p` prime certificate; `None` for other families.
    pub fn prime_certificate(&self) -> Option<&PrimeCertificate> {
        match self {
            Valuation::OrdP { certificate, .. } => certificate.as_ref(),
            Valuation::Scaled { inner, .. } => inner.prime_certificate(),
            _ => None,
        }
    }

    pub fn is_ord_p(&self) -> bool {
        match self {
            Valuation::OrdP { .. } => true,
            Valuation::Scaled { inner, .. } => inner.is_ord_p(),
            _ => false,
        }
    }

    pub fn evaluate(&self, ring: &Ring, x: &Elem) -> Result<ExtValue> {
        match self {
            Valuation::DegNu(nu) | Valuation::CodegNu(nu) => {
                let (Ring::Poly(pr), Elem::Poly(f)) = (ring, x) else {
                    return Err(Error::DescriptorMismatch(ring.to_string()));
                };
                if nu.arity() != pr.arity() || f.arity() != pr.arity() {
                    return Err(Error::ArityMismatch {
                        expected: pr.arity(),
                        got: nu.arity(),
                    });
                }
                if matches!(self, Valuation::DegNu(_)) {
                    f.deg_nu(nu)
                } else {
                    f.codeg_nu(nu)
                }
            }
            Valuation::OrdP { p, .. } => ring.ord(x, p),
            Valuation::Scaled { inner, d } => Ok(inner.evaluate(ring, x)?.div_int(u64::from(*d))),
        }
    }

    /// Runs every axiom on each pair; the report is the same for parallel
    /// and sequential runs.
    pub fn check_axioms(&self, ring: &Ring, pairs: &[(Elem, Elem)]) -> AxiomReport {
        let zero = self.evaluate(ring, &ring.zero());
        let per_pair = par::map_range(pairs.len(), |i| {
            let (x, y) = &pairs[i];
            self.check_pair(ring, x, y, &zero)
        });
        let mut report = AxiomReport {
            pairs: pairs.len(),
            tallies: BTreeMap::new(),
            first_violation: None,
        };
        for (index, outcomes) in per_pair.into_iter().enumerate() {
            for (axiom, outcome) in outcomes {
                let t = report.tallies.entry(axiom).or_default();
                t.checked += 1;
                if let Err(detail) = outcome {
                    t.failed += 1;
                    if report.first_violation.is_none() {
                        report.first_violation = Some(Violation {
                            index,
                            axiom,
                            detail,
                        });
                    }
                }
            }
        }
        report
    }

    fn check_pair(
        &self,
        ring: &Ring,
        x: &Elem,
        y: &Elem,
        zero: &Result<ExtValue>,
    ) -> Vec<(Axiom, std::result::Result<(), String>)> {
        let eval = |e: Result<Elem>| e.and_then(|e| self.evaluate(ring, &e).map(|v| (e, v)));
        let all = (|| {
            Ok::<_, Error>((
                eval(Ok(x.clone()))?,
                eval(Ok(y.clone()))?,
                eval(ring.mul(x, y))?,
                eval(ring.add(x, y))?,
                eval(ring.neg(x))?,
                zero.clone()?,
            ))
        })();
        let ((_, vx), (_, vy), (xy, vxy), (s, vs), (_, vnx), v0) = match all {
            Ok(t) => t,
            Err(e) => return vec![(Axiom::Evaluation, Err(e.to_string()))],
        };
        let inf = self.kind().infinity();
        let mut out = Vec::with_capacity(5);

        let d0 = [(x, &vx), (y, &vy)]
            .iter()
            .find(|(e, v)| !e.is_zero() && !v.is_finite())
            .map_or(Ok(()), |(_, v)| {
                Err(format!("nonzero element has value {v}"))
            });
        out.push((Axiom::D0, d0));

        let d1 = match vx.checked_add(&vy) {
            Ok(sum) if sum == vxy => Ok(()),
            Ok(sum) => Err(format!("omega(xy) = {vxy}, omega(x) + omega(y) = {sum}")),
            Err(e) => Err(e.to_string()),
        };
        out.push((Axiom::D1, d1));

        let d2 = if v0 != inf {
            Err(format!("omega(0) = {v0}"))
        } else {
            [(x, &vx), (y, &vy), (&xy, &vxy), (&s, &vs)]
                .iter()
                .find(|(e, v)| e.is_zero() != (**v == inf))
                .map_or(Ok(()), |(e, v)| {
                    Err(format!("zero = {}, value {v}", e.is_zero()))
                })
        };
        out.push((Axiom::D2, d2));

        let d3 = match self.kind() {
            Kind::First => {
                let m = (&vx).max(&vy);
                if vs > *m || (vx != vy && vs != *m) {
                    Err(format!("omega(x+y) = {vs}, max = {m}"))
                } else {
                    Ok(())
                }
            }
            Kind::Second => {
                let m = (&vx).min(&vy);
                if vs < *m || (vx != vy && vs != *m) {
                    Err(format!("omega(x+y) = {vs}, min = {m}"))
                } else {
                    Ok(())
                }
            }
        };
        out.push((Axiom::D3, d3));

        let sym = if vnx == vx {
            Ok(())
        } else {
            Err(format!("omega(-x) = {vnx}, omega(x) = {vx}"))
        };
        out.push((Axiom::Negation, sym));
        out
    }

    /// True iff some sampled nonzero element has a nonzero value. A `false`
    /// answer only says the sample was inconclusive.
    pub fn is_nontrivial(&self, ring: &Ring, sample: &[Elem]) -> bool {
        sample.iter().any(|x| {
            !x.is_zero()
                && self
                    .evaluate(ring, x)
                    .is_ok_and(|v| v.as_finite().is_some_and(|q| !q.is_zero()))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    D0,
    D1,
    D2,
    D3,
    /// `omega(-x) = omega(x)`.
    Negation,
    /// The valuation could not be evaluated on the pair.
    Evaluation,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: u64,
    pub failed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Index of the pair in the sample.
    pub index: usize,
    pub axiom: Axiom,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub pairs: usize,
    pub tallies: BTreeMap<Axiom, Tally>,
    pub first_violation: Option<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }

    pub fn violations(&self) -> u64 {
        self.tallies.values().map(|t| t.failed).sum()
    }
}
