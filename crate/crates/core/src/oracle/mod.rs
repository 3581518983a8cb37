//! Bounded factorization search, used as ground truth against certificates.
//!
//! The search is conclusive only within its [`SearchBudget`]: an empty result
//! says no factor with coefficients in the box exists, nothing more.

pub mod fuzz;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::par;
use crate::poly::{MultiIndex, Polynomial, UnivariateView};
use crate::ring::{Elem, PolyRing, Ring};

pub use fuzz::{
    explore_conjecture, fuzz_theorem, random_conditioned_poly, FuzzConfig, FuzzFamily, FuzzMode,
    FuzzReport, WitnessRecord,
};

/// Largest total degree of coefficient polynomials the search accepts.
pub const MAX_COEFF_DEGREE: u64 = 4;
/// Largest number of variables in a polynomial coefficient ring.
pub const MAX_COEFF_VARS: usize = 2;
/// Largest coordinate box the search will materialize.
pub const MAX_BOX: usize = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Bound on every lattice coordinate or integer coefficient of a
    /// candidate factor's coefficients.
    pub coord_bound: u64,
    /// Candidates examined before the search gives up.
    pub max_candidates: u64,
}

impl SearchBudget {
    pub fn new(coord_bound: u64, max_candidates: u64) -> Result<Self> {
        if coord_bound == 0 || max_candidates == 0 {
            return Err(Error::Precondition(vec![
                "search budget must be positive".into()
            ]));
        }
        Ok(SearchBudget {
            coord_bound,
            max_candidates,
        })
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            coord_bound: 10,
            max_candidates: 5_000_000,
        }
    }
}

/// `f = g * h` with both factors of positive degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorWitness {
    g: UnivariateView,
    h: UnivariateView,
}

impl FactorWitness {
    pub fn new(f: &UnivariateView, g: UnivariateView, h: UnivariateView) -> Result<Self> {
        let w = FactorWitness { g, h };
        if verify_witness(f, &w) {
            Ok(w)
        } else {
            Err(Error::Precondition(vec![
                "g*h does not equal f with deg g, deg h >= 1".into(),
            ]))
        }
    }

    /// The factor found by the search.
    pub fn g(&self) -> &UnivariateView {
        &self.g
    }

    /// The cofactor.
    pub fn h(&self) -> &UnivariateView {
        &self.h
    }
}

pub fn verify_witness(f: &UnivariateView, w: &FactorWitness) -> bool {
    w.g.degree() >= 1
        && w.h.degree() >= 1
        && w.g.degree() + w.h.degree() == f.degree()
        && w.g.mul(&w.h).is_ok_and(|p| p == *f)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub witness: Option<FactorWitness>,
    /// Candidates in the enumeration up to the point the search stopped.
    pub candidates: u64,
    /// Whether `max_candidates` cut the enumeration short.
    pub truncated: bool,
}

impl SearchOutcome {
    pub fn conclusive(&self) -> bool {
        self.witness.is_some() || !self.truncated
    }
}

/// First factor of `f` found in the enumeration order, if any.
pub fn bounded_factor_search(
    f: &UnivariateView,
    budget: SearchBudget,
) -> Result<Option<FactorWitness>> {
    Ok(factor_search(f, budget)?.witness)
}

/// For each degree `t = 1..=n/2`, candidates `h = b_t X^t + ... + b_0` with
/// `b_t` a divisor of the leading coefficient (up to sign), `b_0` a divisor
/// of the constant one, and everything in the box. Each is screened by
/// integer evaluations where the ring allows it, then tried by exact
/// division. The order is `t`, then `b_t`, `b_0` and the middle
/// coefficients, each by increasing size.
pub fn factor_search(f: &UnivariateView, budget: SearchBudget) -> Result<SearchOutcome> {
    let n = f.degree();
    if n < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: n });
    }
    let ring = f.ring();
    let shape = Shape::of(f)?;
    let boxed = shape.elements(budget.coord_bound)?;
    let screen = Screen::new(&shape, f)?;
    let box_ev = screen.evaluate_all(&boxed);

    let lead_divs: Vec<usize> = divisors(ring, f.leading(), &boxed)?
        .into_iter()
        .filter(|&i| is_normalized(ring, &boxed[i]))
        .collect();
    let const_divs = if f.coeff(0).is_zero() {
        (0..boxed.len()).collect()
    } else {
        divisors(ring, f.coeff(0), &boxed)?
    };

    let mut left = budget.max_candidates;
    let mut seen = 0u64;
    for t in 1..=n / 2 {
        let inner = (boxed.len() as u128)
            .checked_pow(t as u32 - 1)
            .unwrap_or(u128::MAX);
        let total = (lead_divs.len() as u128)
            .saturating_mul(const_divs.len() as u128)
            .saturating_mul(inner);
        let run = total.min(u128::from(left)) as u64;
        let truncated = total > u128::from(run);
        let found = par::find_map_first(run as usize, |idx| {
            let mut code = idx as u128;
            let mut digits = vec![0usize; t + 1];
            for d in digits[1..t].iter_mut() {
                *d = (code % boxed.len() as u128) as usize;
                code /= boxed.len() as u128;
            }
            digits[0] = const_divs[(code % const_divs.len() as u128) as usize];
            digits[t] = lead_divs[(code / const_divs.len() as u128) as usize];
            if !screen.admits(&digits, &box_ev) {
                return None;
            }
            let coeffs = digits.iter().map(|&i| boxed[i].clone()).collect();
            let attempt = UnivariateView::new(ring.clone(), f.var(), coeffs)
                .and_then(|h| Ok(f.exact_div(&h)?.map(|q| (h, q))));
            match attempt {
                Ok(None) => None,
                Ok(Some((h, q))) => Some(FactorWitness::new(f, h, q)),
                Err(e) => Some(Err(e)),
            }
        });
        seen += run;
        left -= run;
        if let Some(w) = found {
            return Ok(SearchOutcome {
                witness: Some(w?),
                candidates: seen,
                truncated,
            });
        }
        if truncated {
            return Ok(SearchOutcome {
                witness: None,
                candidates: seen,
                truncated: true,
            });
        }
    }
    Ok(SearchOutcome {
        witness: None,
        candidates: seen,
        truncated: false,
    })
}

/// What the coefficients of a candidate factor can look like.
enum Shape {
    Integers,
    /// Lattice coordinates of an order; the count of coordinates.
    Order(usize),
    /// Polynomials over `Z` with support in `support`.
    Poly(PolyRing, Vec<MultiIndex>),
}

impl Shape {
    fn of(f: &UnivariateView) -> Result<Shape> {
        match f.ring() {
            Ring::Integers => Ok(Shape::Integers),
            Ring::Quadratic(_) => Ok(Shape::Order(2)),
            Ring::Cubic(_) => Ok(Shape::Order(3)),
            Ring::Poly(pr) => {
                if *pr.base() != Ring::Integers || pr.arity() > MAX_COEFF_VARS {
                    return Err(Error::Unsupported(format!(
                        "factor search over {}: only Z with at most {MAX_COEFF_VARS} variables",
                        f.ring()
                    )));
                }
                // deg_Y and total degree are additive on R[X]
                let mut per_var = vec![0u32; pr.arity()];
                let mut total = 0u64;
                for c in f.coeffs() {
                    let Elem::Poly(p) = c else {
                        unreachable!("shape checked")
                    };
                    for (v, d) in per_var.iter_mut().enumerate() {
                        *d = (*d).max(p.degree_in(v).unwrap_or(0));
                    }
                    total = total.max(p.total_degree().unwrap_or(0));
                }
                if total > MAX_COEFF_DEGREE {
                    return Err(Error::Unsupported(format!(
                        "coefficient total degree {total} exceeds {MAX_COEFF_DEGREE}"
                    )));
                }
                let support = monomials(&per_var, total);
                Ok(Shape::Poly(pr.clone(), support))
            }
        }
    }

    fn width(&self) -> usize {
        match self {
            Shape::Integers => 1,
            Shape::Order(k) => *k,
            Shape::Poly(_, s) => s.len(),
        }
    }

    /// Every element with coordinates in `[-bound, bound]`, by increasing
    /// largest coordinate.
    fn elements(&self, bound: u64) -> Result<Vec<Elem>> {
        let seq = signed_sequence(bound);
        let width = self.width();
        let size = (seq.len() as u128)
            .checked_pow(width as u32)
            .filter(|&s| s <= MAX_BOX as u128)
            .ok_or_else(|| {
                Error::Unsupported(format!("coordinate box of {}^{width} elements", seq.len()))
            })? as usize;
        let mut points: Vec<Vec<usize>> = (0..size)
            .map(|mut code| {
                let mut v = vec![0; width];
                for slot in v.iter_mut() {
                    *slot = code % seq.len();
                    code /= seq.len();
                }
                v
            })
            .collect();
        // seq[i] has absolute value (i + 1) / 2
        points.sort_by_key(|v| v.iter().map(|&i| i.div_ceil(2)).max());
        Ok(points
            .into_iter()
            .map(|v| {
                let c: Vec<BigInt> = v.iter().map(|&i| seq[i].clone()).collect();
                match self {
                    Shape::Integers => Elem::Int(c[0].clone()),
                    Shape::Order(2) => Elem::Quad([c[0].clone(), c[1].clone()]),
                    Shape::Order(_) => Elem::Cubic([c[0].clone(), c[1].clone(), c[2].clone()]),
                    Shape::Poly(pr, support) => {
                        let terms = support.iter().cloned().zip(c.into_iter().map(Elem::Int));
                        Elem::Poly(Polynomial::from_terms(pr, terms).expect("arity matches"))
                    }
                }
            })
            .collect())
    }
}

/// `0, -1, 1, -2, 2, ..., -bound, bound`.
fn signed_sequence(bound: u64) -> Vec<BigInt> {
    std::iter::once(BigInt::zero())
        .chain((1..=bound).flat_map(|v| [-BigInt::from(v), BigInt::from(v)]))
        .collect()
}

/// Exponent vectors with `e_i <= per_var[i]` and total at most `total`.
fn monomials(per_var: &[u32], total: u64) -> Vec<MultiIndex> {
    let mut out = vec![Vec::new()];
    for &d in per_var {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=d).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    let mut out: Vec<MultiIndex> = out
        .into_iter()
        .filter(|v| v.iter().map(|&e| u64::from(e)).sum::<u64>() <= total)
        .map(MultiIndex::new)
        .collect();
    out.sort();
    out
}

/// Indices of the box elements dividing `x`.
fn divisors(ring: &Ring, x: &Elem, boxed: &[Elem]) -> Result<Vec<usize>> {
    let norm = match ring {
        Ring::Quadratic(_) | Ring::Cubic(_) => Some(ring.norm(x)?),
        _ => None,
    };
    let hits = par::map_range(boxed.len(), |i| {
        let y = &boxed[i];
        if y.is_zero() {
            return Ok(false);
        }
        if let Some(n) = &norm {
            if !n.is_multiple_of(&ring.norm(y)?) {
                return Ok(false);
            }
        }
        Ok(ring.exact_div(x, y)?.is_some())
    });
    let mut out = Vec::new();
    for (i, h) in hits.into_iter().enumerate() {
        if h? {
            out.push(i);
        }
    }
    Ok(out)
}

/// One of each pair `{x, -x}`: the first nonzero coordinate is positive.
fn is_normalized(ring: &Ring, x: &Elem) -> bool {
    match x {
        Elem::Int(n) => n.is_positive(),
        Elem::Quad(c) => c
            .iter()
            .find(|v| !v.is_zero())
            .is_some_and(Signed::is_positive),
        Elem::Cubic(c) => c
            .iter()
            .find(|v| !v.is_zero())
            .is_some_and(Signed::is_positive),
        Elem::Poly(p) => match (ring, p.leading()) {
            (Ring::Poly(pr), Some((_, c))) => is_normalized(pr.base(), c),
            _ => false,
        },
    }
}

/// Evaluation points `(x, y, z)`; `h | f` forces `h(P) | f(P)` in `Z`.
const POINTS: [(i64, [i64; 2]); 4] = [(2, [3, 5]), (-1, [2, -3]), (3, [-2, 7]), (-2, [5, 2])];

/// Integer screening of candidates. Only rings over `Z` are screened.
struct Screen {
    active: bool,
    f_values: Vec<BigInt>,
}

impl Screen {
    fn new(shape: &Shape, f: &UnivariateView) -> Result<Screen> {
        if matches!(shape, Shape::Order(..)) {
            return Ok(Screen {
                active: false,
                f_values: Vec::new(),
            });
        }
        let f_values = POINTS
            .iter()
            .map(|(x, ys)| {
                let x = BigInt::from(*x);
                let mut acc = BigInt::zero();
                for c in f.coeffs().iter().rev() {
                    acc = acc * &x + eval_int(c, ys);
                }
                acc
            })
            .collect();
        Ok(Screen {
            active: true,
            f_values,
        })
    }

    fn evaluate_all(&self, boxed: &[Elem]) -> Vec<[i128; 4]> {
        if !self.active {
            return Vec::new();
        }
        par::map_range(boxed.len(), |i| {
            let mut out = [0i128; 4];
            for (k, (_, ys)) in POINTS.iter().enumerate() {
                out[k] = eval_int(&boxed[i], ys)
                    .to_i128()
                    .expect("box elements are small");
            }
            out
        })
    }

    fn admits(&self, digits: &[usize], ev: &[[i128; 4]]) -> bool {
        if !self.active {
            return true;
        }
        POINTS.iter().enumerate().all(|(k, (x, _))| {
            let x = i128::from(*x);
            let h = digits
                .iter()
                .rev()
                .try_fold(0i128, |acc, &d| acc.checked_mul(x)?.checked_add(ev[d][k]));
            let Some(h) = h else {
                return true;
            };
            let fv = &self.f_values[k];
            if h == 0 {
                fv.is_zero()
            } else {
                (fv % BigInt::from(h)).is_zero()
            }
        })
    }
}

/// An integer or a polynomial over `Z` evaluated at `ys`.
fn eval_int(x: &Elem, ys: &[i64]) -> BigInt {
    match x {
        Elem::Int(n) => n.clone(),
        Elem::Poly(p) => p
            .terms()
            .map(|(i, c)| {
                let m: BigInt = i
                    .exps()
                    .iter()
                    .zip(ys)
                    .map(|(&e, &y)| BigInt::from(y).pow(e))
                    .product();
                m * eval_int(c, &ys[i.arity().min(ys.len())..])
            })
            .sum(),
        _ => unreachable!("screening is limited to rings over Z"),
    }
}
