//! Checkers for polynomials over orders in number fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{certify, require_degree, Certificate, ConditionReport, Rule};
use crate::error::{Error, Result};
use crate::poly::UnivariateView;
use crate::ring::integer::{int_ord, is_prime};
use crate::ring::{Elem, Ring};
use crate::valuation::{certify_prime, Kind, Valuation};
use crate::value::ExtValue;

/// Search bound used to exhibit an element of norm `p` in a quadratic order.
pub const NORM_SEARCH_BOUND: u64 = 10_000;

fn require_order(ring: &Ring) -> Result<()> {
    match ring {
        Ring::Poly(_) => Err(Error::Unsupported(format!(
            "{ring} is not an order in a number field"
        ))),
        _ => Ok(()),
    }
}

/// `ord` at a prime element: (C1) `ord(c_n) = 0`, (C2) `gcd(n, ord(c_0)) = 1`,
/// (C3) the (B2) inequalities.
pub fn orders_thm1_check(f: &UnivariateView, frak_p: &Elem) -> Result<Certificate> {
    require_order(f.ring())?;
    require_degree(f)?;
    let ring = f.ring();
    let cert = certify_prime(ring, frak_p).ok_or_else(|| {
        Error::Precondition(vec![
            "the prime element carries no primality certificate".into()
        ])
    })?;
    let mut c = certify(f, &Valuation::ord_p(ring, frak_p.clone())?)?;
    c.rule = Rule::PrimeElement;
    c.preconditions.push(format!("prime element: {cert}"));
    Ok(c)
}

/// `ord_p(N(x))`, `None` when `N(x) = 0`.
fn norm_ord(ring: &Ring, x: &Elem, p: &BigInt) -> Result<Option<u64>> {
    Ok(int_ord(&ring.norm(x)?, p))
}

/// The `ord_p` values of the coefficients, with `p` a rational integer.
fn rational_ords(f: &UnivariateView, p: &BigInt) -> Result<Vec<ExtValue>> {
    let pe = f.ring().from_int(p.clone());
    f.coeffs().iter().map(|c| f.ring().ord(c, &pe)).collect()
}

/// `gcd(n, l) = 1`, with `gcd(n, 0) = n`.
fn gcd_condition(n: usize, l: &ExtValue) -> std::result::Result<BigInt, String> {
    let l = l.as_integer().ok_or_else(|| format!("ord_p(c_0) = {l}"))?;
    if l.gcd(&BigInt::from(n)).is_one() && !l.is_zero() {
        Ok(l)
    } else {
        Err(format!("gcd({n}, {l}) != 1"))
    }
}

fn rational_p_certificate(
    f: &UnivariateView,
    p: &BigInt,
    rule: Rule,
    a: std::result::Result<(), String>,
    values: Vec<ExtValue>,
    preconditions: Vec<String>,
) -> Certificate {
    let report = ConditionReport::with_a(values, Kind::Second, a);
    let valuation = Valuation::OrdP {
        p: f.ring().from_int(p.clone()),
        certificate: None,
    };
    Certificate::assemble(f, valuation, rule, report, true, preconditions, Vec::new())
}

/// A rational odd prime `p` over a quadratic order, with (1)
/// `ord_p(N(c_n)) = 0`, (2) `gcd(n, ord_p(c_0)) = 1`, (3) the (B2)
/// inequalities for `ord_p`.
///
/// Requires `p != 2`, `gcd(p, d) = 1` and an element of norm `+-p` in the
/// order, found by [`super::find_prime_above`] with [`NORM_SEARCH_BOUND`].
pub fn quad_cor_check(f: &UnivariateView, p: &BigInt) -> Result<Certificate> {
    require_degree(f)?;
    let Ring::Quadratic(o) = f.ring() else {
        return Err(Error::Unsupported(format!(
            "{} is not a quadratic order",
            f.ring()
        )));
    };
    let p = p.abs();
    let mut failed = Vec::new();
    if !is_prime(&p) {
        failed.push(format!("{p} is not prime"));
    }
    if p == BigInt::from(2) {
        failed.push("p = 2 is excluded".into());
    }
    if !p.gcd(o.d()).is_one() {
        failed.push(format!("gcd({p}, {}) != 1", o.d()));
    }
    let above = if failed.is_empty() {
        super::find_prime_above(&p, f.ring(), NORM_SEARCH_BOUND)
    } else {
        None
    };
    if failed.is_empty() && above.is_none() {
        failed.push(format!(
            "no element of norm +-{p} in {} with |b| <= {NORM_SEARCH_BOUND}",
            f.ring()
        ));
    }
    if !failed.is_empty() {
        return Err(Error::Precondition(failed));
    }
    let (q, _) = above.expect("checked above");
    let n = f.degree();
    let values = rational_ords(f, &p)?;
    let a = match norm_ord(f.ring(), f.leading(), &p)? {
        Some(0) => gcd_condition(n, &values[0]).map(|_| ()),
        other => Err(format!(
            "ord_p(N(c_n)) = {}",
            other.map_or("+inf".into(), |k| k.to_string())
        )),
    };
    let pre = vec![
        format!("{p} is an odd prime coprime to {}", o.d()),
        format!(
            "element of norm {}: {}",
            f.ring().norm(&q)?,
            crate::text::format_elem(f.ring(), &q)
        ),
    ];
    Ok(rational_p_certificate(
        f,
        &p,
        Rule::QuadraticNorm,
        a,
        values,
        pre,
    ))
}

/// Conditions (1)-(3) shared by the normal-field and pure-cubic checks.
fn norm_conditions(
    f: &UnivariateView,
    p: &BigInt,
) -> Result<(std::result::Result<(), String>, Vec<ExtValue>)> {
    let ring = f.ring();
    let n = f.degree();
    let values = rational_ords(f, p)?;
    let a = (|| {
        match norm_ord(ring, f.leading(), p)? {
            Some(0) => {}
            other => {
                return Ok(Err(format!(
                    "ord_p(N(c_n)) = {}",
                    other.map_or("+inf".into(), |k| k.to_string())
                )))
            }
        }
        let Some(l) = values[0].as_integer() else {
            return Ok(Err("c_0 = 0".into()));
        };
        let pe = ring.from_int(p.clone());
        let mut y = f.coeff(0).clone();
        for _ in 0..crate::ring::integer::to_u64(&l).unwrap_or(0) {
            y = ring
                .exact_div(&y, &pe)?
                .expect("divisible by definition of ord");
        }
        match norm_ord(ring, &y, p)? {
            Some(0) => {}
            other => {
                return Ok(Err(format!(
                    "ord_p(N(c_0/p^l)) = {}",
                    other.map_or("+inf".into(), |k| k.to_string())
                )))
            }
        }
        Ok::<_, Error>(gcd_condition(n, &values[0]).map(|_| ()))
    })()?;
    Ok((a, values))
}

fn check_frak_p(ring: &Ring, p: &BigInt, frak_p: &Elem, failed: &mut Vec<String>) {
    match ring.norm(frak_p) {
        Ok(nm) if nm.abs() == p.abs() => {}
        Ok(nm) => failed.push(format!("N(frak_p) = {nm}, not +-{p}")),
        Err(e) => failed.push(e.to_string()),
    }
}

/// A rational prime `p` over an invariant order in a normal field of
/// degree `m`, with `l = ord_p(c_0)`: (1) `ord_p(N(c_n)) = 0 =
/// ord_p(N(c_0/p^l))`, (2) `gcd(n, l) = 1`, (3) the (B2) inequalities.
///
/// Invariance is automatic for `Z` and quadratic orders and must be asserted
/// otherwise.
pub fn normal_thm2_check(
    f: &UnivariateView,
    p: &BigInt,
    frak_p: &Elem,
    m: u32,
    invariance_asserted: bool,
) -> Result<Certificate> {
    require_order(f.ring())?;
    require_degree(f)?;
    let ring = f.ring();
    let n = f.degree();
    let mut failed = Vec::new();
    let mut pre = Vec::new();
    if !ring.contains(frak_p) {
        return Err(Error::DescriptorMismatch(ring.to_string()));
    }
    match ring {
        Ring::Integers | Ring::Quadratic(_) => pre.push(format!("{ring} is invariant")),
        Ring::Cubic(_) if !invariance_asserted => {
            failed.push("invariance of the order is not asserted".into())
        }
        Ring::Cubic(o) => failed.push(format!("Q(cbrt({})) is not a normal field", o.delta())),
        Ring::Poly(_) => unreachable!("checked above"),
    }
    let deg = ring.field_degree().expect("order");
    if m != deg {
        failed.push(format!("m = {m} but the field has degree {deg}"));
    }
    if !BigInt::from(n).gcd(&BigInt::from(m)).is_one() {
        failed.push(format!("gcd({n}, {m}) != 1"));
    }
    if !is_prime(p) {
        failed.push(format!("{p} is not prime"));
    }
    check_frak_p(ring, p, frak_p, &mut failed);
    if !failed.is_empty() {
        return Err(Error::Precondition(failed));
    }
    pre.push(format!("gcd({n}, {m}) = 1"));
    pre.push(format!("N(frak_p) = {}", ring.norm(frak_p)?));
    let p = p.abs();
    let (a, values) = norm_conditions(f, &p)?;
    Ok(rational_p_certificate(
        f,
        &p,
        Rule::NormalField,
        a,
        values,
        pre,
    ))
}

/// A rational prime `p` over `Z[cbrt(delta)]` with a prime element
/// `frak_p = a + b alpha + c alpha^2` of norm `+-p` such that `p` does not
/// divide `ab - c^2 delta` or does not divide `ac - b^2`; then the
/// conditions of [`normal_thm2_check`].
pub fn cubic_prop_check(f: &UnivariateView, p: &BigInt, frak_p: &Elem) -> Result<Certificate> {
    require_degree(f)?;
    let ring = f.ring();
    let Ring::Cubic(o) = ring else {
        return Err(Error::Unsupported(format!(
            "{ring} is not a pure cubic order"
        )));
    };
    let Elem::Cubic([a, b, c]) = frak_p else {
        return Err(Error::DescriptorMismatch(ring.to_string()));
    };
    let dl = o.delta();
    let mut failed = Vec::new();
    if !is_prime(p) {
        failed.push(format!("{p} is not prime"));
    }
    if p.abs() == BigInt::from(3) {
        failed.push("p = 3 is excluded".into());
    }
    if !p.gcd(dl).is_one() {
        failed.push(format!("gcd({p}, {dl}) != 1"));
    }
    check_frak_p(ring, p, frak_p, &mut failed);
    let s1 = a * b - c * c * dl;
    let s2 = a * c - b * b;
    let side = !(&s1 % p).is_zero() || !(&s2 % p).is_zero();
    if !side {
        failed.push(format!(
            "{p} divides both ab - c^2 delta = {s1} and ac - b^2 = {s2}"
        ));
    }
    if failed.is_empty() {
        let sq = ring.mul(frak_p, frak_p)?;
        if ring.exact_div(&ring.from_int(p.clone()), &sq)?.is_some() {
            failed.push("frak_p^2 divides p".into());
        }
    }
    if !failed.is_empty() {
        return Err(Error::Precondition(failed));
    }
    let pre = vec![
        format!("N(frak_p) = {}", ring.norm(frak_p)?),
        format!("ab - c^2 delta = {s1}, ac - b^2 = {s2}"),
        "frak_p^2 does not divide p".into(),
    ];
    let p = p.abs();
    let (a, values) = norm_conditions(f, &p)?;
    Ok(rational_p_certificate(
        f,
        &p,
        Rule::PureCubic,
        a,
        values,
        pre,
    ))
}
