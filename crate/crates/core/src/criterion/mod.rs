//! Conditions (A), (B1), (B2) on the values `omega(phi_j)`, certificates,
//! and the checkers specialised to orders in number fields.

mod orders;
mod search;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

pub use orders::{cubic_prop_check, normal_thm2_check, orders_thm1_check, quad_cor_check};
pub use search::{
    find_prime_above, search_valuation, Family, SearchBounds, DEFAULT_NU_BOUND, DEFAULT_PRIME_BOUND,
};

use crate::error::{Error, Result};
use crate::poly::{UnivariateView, WeightVector};
use crate::ring::Ring;
use crate::valuation::{Kind, Valuation};
use crate::value::ExtValue;

/// Largest degree for which the criterion is proven, per kind.
pub const FIRST_KIND_MAX_DEGREE: usize = 7;
pub const SECOND_KIND_MAX_DEGREE: usize = 6;

pub fn proven_bound(kind: Kind) -> usize {
    match kind {
        Kind::First => FIRST_KIND_MAX_DEGREE,
        Kind::Second => SECOND_KIND_MAX_DEGREE,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    IrreducibleCertified,
    ConjecturalCertificate,
    NoCertificate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::IrreducibleCertified => "irreducible-certified",
            Verdict::ConjecturalCertificate => "conjectural-certificate",
            Verdict::NoCertificate => "no-certificate",
        })
    }
}

/// Which statement a certificate leans on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Conditions (A) and (B1)/(B2) for a Dumas valuation.
    Criterion,
    /// `ord` at a prime element of an order.
    PrimeElement,
    /// `ord_p` for a rational prime over a quadratic order.
    QuadraticNorm,
    /// `ord_p` over an invariant order in a normal field.
    NormalField,
    /// `ord_p` over `Z[cbrt(delta)]`.
    PureCubic,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Criterion => "criterion",
            Rule::PrimeElement => "prime-element",
            Rule::QuadraticNorm => "quadratic-norm",
            Rule::NormalField => "normal-field",
            Rule::PureCubic => "pure-cubic",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    /// `omega(phi_0), ..., omega(phi_n)`.
    pub values: Vec<ExtValue>,
    pub kind: Kind,
    /// Condition (A), with the reason when it fails.
    pub a: std::result::Result<(), String>,
    /// Indices `j` violating (B1)/(B2).
    pub failing: Vec<usize>,
    /// Every inequality of (B1)/(B2) holds strictly. Informational.
    pub strict: bool,
}

impl ConditionReport {
    pub fn from_values(values: Vec<ExtValue>, kind: Kind) -> Self {
        let n = values.len() - 1;
        let a = check_a(&values, n);
        Self::with_a(values, kind, a)
    }

    fn with_a(values: Vec<ExtValue>, kind: Kind, a: std::result::Result<(), String>) -> Self {
        let n = values.len() - 1;
        let failing = match kind {
            Kind::First => check_b1(&values, n),
            Kind::Second => check_b2(&values, n),
        };
        let strict = failing.is_empty() && b_is_strict(&values, n, kind);
        ConditionReport {
            values,
            kind,
            a,
            failing,
            strict,
        }
    }

    pub fn a_ok(&self) -> bool {
        self.a.is_ok()
    }

    pub fn b_ok(&self) -> bool {
        self.failing.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.a_ok() && self.b_ok()
    }
}

/// (A): `omega(phi_n) = 0`, `omega(phi_0)` a positive integer `m`, and
/// `gcd(n, m) = 1`. `gcd(n, 0)` counts as `n`.
pub fn check_a(values: &[ExtValue], n: usize) -> std::result::Result<(), String> {
    if values.len() != n + 1 {
        return Err(format!("expected {} values, got {}", n + 1, values.len()));
    }
    if values[n] != ExtValue::zero() {
        return Err(format!("omega(phi_n) = {}, not 0", values[n]));
    }
    let m = values[0]
        .as_integer()
        .ok_or_else(|| format!("omega(phi_0) = {} is not an integer", values[0]))?;
    if !m.is_positive() {
        return Err("omega(phi_0) = 0".into());
    }
    let g = m.gcd(&BigInt::from(n));
    if g != BigInt::from(1) {
        return Err(format!("gcd({n}, {m}) = {g}"));
    }
    Ok(())
}

fn ratio(v: &ExtValue) -> Option<&BigRational> {
    v.as_finite()
}

/// Compare `n * omega(phi_j)` with `(n - j) * omega(phi_0)`.
fn b_cmp(values: &[ExtValue], n: usize, j: usize) -> Option<std::cmp::Ordering> {
    let lhs = ratio(&values[j])? * BigRational::from_integer(n.into());
    let rhs = ratio(&values[0])? * BigRational::from_integer((n - j).into());
    Some(lhs.cmp(&rhs))
}

/// (B1): `n omega(phi_j) <= (n - j) omega(phi_0)` for `0 < j < n`; zero
/// coefficients (`-inf`) pass.
pub fn check_b1(values: &[ExtValue], n: usize) -> Vec<usize> {
    (1..n)
        .filter(|&j| match &values[j] {
            ExtValue::NegInf => false,
            ExtValue::PosInf => true,
            _ => match &values[0] {
                ExtValue::PosInf => false,
                ExtValue::NegInf => true,
                _ => b_cmp(values, n, j) == Some(std::cmp::Ordering::Greater),
            },
        })
        .collect()
}

/// (B2): `n omega(phi_j) >= (n - j) omega(phi_0)` for `0 < j < n`; zero
/// coefficients (`+inf`) pass.
pub fn check_b2(values: &[ExtValue], n: usize) -> Vec<usize> {
    (1..n)
        .filter(|&j| match &values[j] {
            ExtValue::PosInf => false,
            ExtValue::NegInf => true,
            _ => match &values[0] {
                ExtValue::NegInf => false,
                ExtValue::PosInf => true,
                _ => b_cmp(values, n, j) == Some(std::cmp::Ordering::Less),
            },
        })
        .collect()
}

fn b_is_strict(values: &[ExtValue], n: usize, kind: Kind) -> bool {
    (1..n).all(|j| {
        !values[j].is_finite()
            || !values[0].is_finite()
            || match kind {
                Kind::First => b_cmp(values, n, j) == Some(std::cmp::Ordering::Less),
                Kind::Second => b_cmp(values, n, j) == Some(std::cmp::Ordering::Greater),
            }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// Coefficient ring of `poly`.
    pub ring: Ring,
    pub poly: UnivariateView,
    pub valuation: Valuation,
    pub rule: Rule,
    pub report: ConditionReport,
    pub theorem_backed: bool,
    pub verdict: Verdict,
    /// Hypotheses that were checked before the conditions.
    pub preconditions: Vec<String>,
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    fn assemble(
        poly: &UnivariateView,
        valuation: Valuation,
        rule: Rule,
        report: ConditionReport,
        backed_if_passed: bool,
        preconditions: Vec<String>,
        mut notes: Vec<String>,
    ) -> Certificate {
        let n = poly.degree();
        let within = n <= proven_bound(report.kind);
        let theorem_backed = report.passed() && within && backed_if_passed;
        let verdict = if theorem_backed {
            Verdict::IrreducibleCertified
        } else if report.passed() {
            if !within {
                notes.push(format!(
                    "degree {n} is beyond the proven range for the {} kind",
                    report.kind
                ));
            }
            Verdict::ConjecturalCertificate
        } else {
            Verdict::NoCertificate
        };
        if report.passed() && report.strict {
            notes.push("all (B) inequalities are strict".into());
        }
        Certificate {
            ring: poly.ring().clone(),
            poly: poly.clone(),
            valuation,
            rule,
            report,
            theorem_backed,
            verdict,
            preconditions,
            notes,
        }
    }
}

fn require_degree(f: &UnivariateView) -> Result<()> {
    if f.degree() < 2 {
        return Err(Error::DegreeTooSmall {
            min: 2,
            got: f.degree(),
        });
    }
    Ok(())
}

/// Evaluate `omega` on every coefficient and check (A) and (B1)/(B2).
pub fn certify(f: &UnivariateView, omega: &Valuation) -> Result<Certificate> {
    require_degree(f)?;
    let values = f
        .coeffs()
        .iter()
        .map(|c| omega.evaluate(f.ring(), c))
        .collect::<Result<Vec<_>>>()?;
    let report = ConditionReport::from_values(values, omega.kind());
    let mut notes = Vec::new();
    let mut backed = true;
    if omega.is_scaled() {
        backed = false;
        notes.push("scaled valuations are never theorem-backed".into());
    }
    if omega.is_ord_p() && omega.prime_certificate().is_none() {
        backed = false;
        notes.push("p carries no primality certificate".into());
    }
    Ok(Certificate::assemble(
        f,
        omega.clone(),
        Rule::Criterion,
        report,
        backed,
        Vec::new(),
        notes,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundMode {
    /// `deg_nu(phi_j) <= floor((n-j) mu / n)`.
    Floor,
    /// `codeg_nu(phi_j) >= ceil((n-j) mu / n)`.
    Ceil,
}

/// The closed-form sufficient conditions with `mu = deg_nu(phi_0)` (floor)
/// or `mu = codeg_nu(phi_0)` (ceil).
pub fn corollary_bounds_check(
    f: &UnivariateView,
    nu: &WeightVector,
    mode: BoundMode,
) -> Result<bool> {
    require_degree(f)?;
    if f.ring().as_poly().is_none() {
        return Err(Error::DescriptorMismatch(f.ring().to_string()));
    }
    let omega = match mode {
        BoundMode::Floor => Valuation::DegNu(nu.clone()),
        BoundMode::Ceil => Valuation::CodegNu(nu.clone()),
    };
    let vals = f
        .coeffs()
        .iter()
        .map(|c| omega.evaluate(f.ring(), c))
        .collect::<Result<Vec<_>>>()?;
    let n = f.degree();
    if vals[n] != ExtValue::zero() {
        return Ok(false);
    }
    let Some(mu) = vals[0].as_integer().and_then(|m| m.to_u64()) else {
        return Ok(false);
    };
    if mu == 0 || crate::ring::integer::gcd_u64(n as u64, mu) != 1 {
        return Ok(false);
    }
    let n64 = n as u64;
    Ok((1..n).all(|j| {
        let num = (n64 - j as u64) * mu;
        match mode {
            BoundMode::Floor => vals[j] <= ExtValue::from_int(num / n64),
            BoundMode::Ceil => vals[j] >= ExtValue::from_int(num.div_ceil(n64)),
        }
    }))
}
