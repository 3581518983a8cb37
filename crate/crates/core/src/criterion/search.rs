use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{certify, Certificate, Verdict};
use crate::error::{Error, Result};
use crate::par;
use crate::poly::{MultiIndex, UnivariateView, WeightVector};
use crate::ring::integer::{exact_sqrt, is_prime, small_prime_divisors};
use crate::ring::{Elem, QuadForm, Ring};
use crate::valuation::{PrimeCertificate, Valuation};

pub const DEFAULT_NU_BOUND: u32 = 8;
pub const DEFAULT_PRIME_BOUND: u64 = 100_000;
/// Largest number of weight vectors a search will enumerate.
const MAX_NU_CANDIDATES: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    DegNu,
    CodegNu,
    OrdP,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    /// Per-coordinate bound for weight vectors.
    pub nu_bound: u32,
    /// Rational primes tried for `ord_p` are at most this.
    pub prime_bound: u64,
    /// Coordinate bound handed to [`find_prime_above`].
    pub coord_bound: u64,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            nu_bound: DEFAULT_NU_BOUND,
            prime_bound: DEFAULT_PRIME_BOUND,
            coord_bound: 100,
        }
    }
}

/// Look for an element of norm `p` (then `-p`) in an order.
///
/// The bound applies to the irrational coordinates; the rational one is
/// solved for exactly. Candidates are tried by increasing `|c|`, then `|b|`,
/// positive before negative. `None` is inconclusive.
pub fn find_prime_above(
    p: &BigInt,
    ring: &Ring,
    coord_bound: u64,
) -> Option<(Elem, PrimeCertificate)> {
    if !p.is_positive() || !is_prime(p) {
        return None;
    }
    let found = match ring {
        Ring::Integers => Some(Elem::Int(p.clone())),
        Ring::Quadratic(o) => {
            let d = o.d();
            [p.clone(), -p].into_iter().find_map(|s| {
                signed_range(coord_bound).find_map(|b| {
                    let y = &b * o.k();
                    let a = match o.form() {
                        QuadForm::Sqrt => exact_sqrt(&(&s + d * &y * &y))?,
                        QuadForm::Omega => {
                            // a^2 + a y - t y^2 = s
                            let r = exact_sqrt(&(&y * &y * d + BigInt::from(4) * &s))?;
                            let twice = r - &y;
                            if twice.is_odd() {
                                return None;
                            }
                            twice / 2
                        }
                    };
                    Some(Elem::Quad([a, b]))
                })
            })
        }
        Ring::Cubic(o) => {
            let dl = o.delta();
            cubic_candidates(coord_bound)
                .into_iter()
                .find_map(|(b, c)| {
                    // a^3 - 3 delta b c a + (delta b^3 + delta^2 c^3 - p) = 0
                    let pc = -(BigInt::from(3) * dl * &b * &c);
                    let qc = dl * &b * &b * &b + dl * dl * &c * &c * &c - p;
                    integer_cubic_roots(&pc, &qc)
                        .into_iter()
                        .next()
                        .map(|a| Elem::Cubic([a, b, c]))
                })
        }
        Ring::Poly(_) => None,
    }?;
    let n = ring.norm(&found).ok()?;
    Some((found, PrimeCertificate::Norm(n)))
}

/// `1, -1, 2, -2, ..., bound, -bound`.
fn signed_range(bound: u64) -> impl Iterator<Item = BigInt> {
    (1..=bound).flat_map(|v| [BigInt::from(v), -BigInt::from(v)])
}

/// `(b, c)` pairs, by `|c|` then `|b|`, skipping `(0, 0)`.
fn cubic_candidates(bound: u64) -> Vec<(BigInt, BigInt)> {
    let zero_first = |k: u64| std::iter::once(BigInt::zero()).chain(signed_range(k));
    let mut out = Vec::new();
    for c in zero_first(bound) {
        for b in zero_first(bound) {
            if !(b.is_zero() && c.is_zero()) {
                out.push((b, c.clone()));
            }
        }
    }
    out
}

/// Integer roots of `a^3 + p a + q`, ascending.
fn integer_cubic_roots(p: &BigInt, q: &BigInt) -> Vec<BigInt> {
    let g = |a: &BigInt| a * a * a + p * a + q;
    // every root satisfies |a| <= 1 + max(|p|, |q|)
    let cap = BigInt::one() + p.abs().max(q.abs());
    // g is increasing outside (-s, s), where s^2 > -p/3 >= (s-1)^2
    let s: BigInt = if p.is_negative() {
        (-p / BigInt::from(3)).sqrt() + 1
    } else {
        BigInt::zero()
    };
    let mut roots = Vec::new();
    let mut push = |r: Option<BigInt>| {
        if let Some(r) = r {
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
    };
    push(increasing_root(&g, -&cap, -&s));
    // and nonincreasing on [-(s-1), s-1]
    let neg = |a: &BigInt| -g(a);
    push(increasing_root(&neg, -&s + 1, &s - 1));
    push(increasing_root(&g, s.clone(), cap));
    roots.sort();
    roots
}

/// Root of an increasing function on `[lo, hi]` by bisection.
fn increasing_root(
    g: &impl Fn(&BigInt) -> BigInt,
    mut lo: BigInt,
    mut hi: BigInt,
) -> Option<BigInt> {
    if lo > hi || g(&lo).is_positive() || g(&hi).is_negative() {
        return None;
    }
    while lo < hi {
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        if g(&mid).is_negative() {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    g(&lo).is_zero().then_some(lo)
}

/// Search a family for a witnessing valuation. Returns the first
/// theorem-backed certificate in candidate order, else the first
/// conjectural one.
pub fn search_valuation(
    f: &UnivariateView,
    family: Family,
    bounds: SearchBounds,
) -> Result<Option<Certificate>> {
    let candidates = match family {
        Family::DegNu | Family::CodegNu => {
            let pr = f.ring().as_poly().ok_or_else(|| {
                Error::Unsupported(format!(
                    "weighted families need a polynomial coefficient ring, got {}",
                    f.ring()
                ))
            })?;
            nu_candidates(pr.arity(), bounds.nu_bound)?
                .into_iter()
                .map(|nu| match family {
                    Family::DegNu => Valuation::DegNu(nu),
                    _ => Valuation::CodegNu(nu),
                })
                .collect()
        }
        Family::OrdP => ord_candidates(f, bounds)?,
    };
    let certs = par::map_range(candidates.len(), |i| certify(f, &candidates[i]));
    let mut conjectural = None;
    for c in certs {
        let c = c?;
        match c.verdict {
            Verdict::IrreducibleCertified => return Ok(Some(c)),
            Verdict::ConjecturalCertificate if conjectural.is_none() => conjectural = Some(c),
            _ => {}
        }
    }
    Ok(conjectural)
}

/// Nonzero vectors in `{0..bound}^k`, in graded-lexicographic order.
fn nu_candidates(k: usize, bound: u32) -> Result<Vec<WeightVector>> {
    let per = u64::from(bound) + 1;
    let total = per
        .checked_pow(k as u32)
        .filter(|&t| t <= MAX_NU_CANDIDATES)
        .ok_or_else(|| {
            Error::Unsupported(format!("{per}^{k} weight vectors exceed the search limit"))
        })?;
    let mut out: Vec<MultiIndex> = (1..total)
        .map(|mut code| {
            let mut e = vec![0u32; k];
            for slot in e.iter_mut().rev() {
                *slot = (code % per) as u32;
                code /= per;
            }
            MultiIndex::new(e)
        })
        .collect();
    out.sort();
    Ok(out
        .into_iter()
        .map(|i| WeightVector::new(i.exps().to_vec()))
        .collect())
}

fn ord_candidates(f: &UnivariateView, bounds: SearchBounds) -> Result<Vec<Valuation>> {
    let ring = f.ring();
    if matches!(ring, Ring::Poly(_)) {
        return Err(Error::Unsupported(
            "ord_p search over polynomial rings".into(),
        ));
    }
    let c0 = f.coeff(0);
    if c0.is_zero() {
        return Ok(Vec::new());
    }
    let norm = ring.norm(c0)?;
    let mut out = Vec::new();
    for p in small_prime_divisors(&norm, bounds.prime_bound) {
        let p = BigInt::from(p);
        let Some((pi, _)) = find_prime_above(&p, ring, bounds.coord_bound) else {
            continue;
        };
        out.push(Valuation::ord_p(ring, pi.clone())?);
        if let Ring::Quadratic(_) = ring {
            let conj = ring.conjugate(&pi)?;
            if ring.exact_div(&conj, &pi)?.is_none() {
                out.push(Valuation::ord_p(ring, conj)?);
            }
        }
    }
    Ok(out)
}
