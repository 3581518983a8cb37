//! Seeded random elements, for property checks and axiom sampling.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::par;
use crate::poly::{MultiIndex, Polynomial, UnivariateView};
use crate::ring::{Elem, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleSpec {
    /// Integer coordinates are drawn from `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: u64,
    /// Polynomials get up to this many terms (before combining).
    pub max_terms: usize,
    pub max_exp: u32,
    /// When set, half of the draws are multiplied by a random power
    /// (up to the third) of this element, so `ord_p` sees positive values.
    pub boost: Option<Elem>,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec {
            coeff_bound: 5,
            max_terms: 4,
            max_exp: 3,
            boost: None,
        }
    }
}

/// The generator for draw `index` of `seed`; independent of scheduling.
pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn coord(rng: &mut impl Rng, bound: u64) -> BigInt {
    let b = bound as i64;
    BigInt::from(rng.gen_range(-b..=b))
}

pub fn random_elem(ring: &Ring, rng: &mut impl Rng, spec: &SampleSpec) -> Elem {
    let x = match ring {
        Ring::Integers => Elem::Int(coord(rng, spec.coeff_bound)),
        Ring::Quadratic(_) => {
            Elem::Quad([coord(rng, spec.coeff_bound), coord(rng, spec.coeff_bound)])
        }
        Ring::Cubic(_) => Elem::Cubic([
            coord(rng, spec.coeff_bound),
            coord(rng, spec.coeff_bound),
            coord(rng, spec.coeff_bound),
        ]),
        Ring::Poly(pr) => {
            let inner = SampleSpec {
                boost: None,
                ..spec.clone()
            };
            let terms: Vec<(MultiIndex, Elem)> = (0..rng.gen_range(0..=spec.max_terms))
                .map(|_| {
                    let e = (0..pr.arity())
                        .map(|_| rng.gen_range(0..=spec.max_exp))
                        .collect();
                    (MultiIndex::new(e), random_elem(pr.base(), rng, &inner))
                })
                .collect();
            Elem::Poly(Polynomial::from_terms(pr, terms).expect("arity matches"))
        }
    };
    match &spec.boost {
        Some(p) if rng.gen_bool(0.5) => {
            let k = rng.gen_range(1..=3);
            let pk = ring.pow(p, k).expect("boost lies in the ring");
            ring.mul(&x, &pk).expect("same ring")
        }
        _ => x,
    }
}

/// `count` pairs, pair `i` drawn from stream `i` of `seed`.
pub fn random_pairs(ring: &Ring, seed: u64, count: usize, spec: &SampleSpec) -> Vec<(Elem, Elem)> {
    par::map_range(count, |i| {
        let mut rng = rng_for(seed, i as u64);
        let a = random_elem(ring, &mut rng, spec);
        let b = random_elem(ring, &mut rng, spec);
        (a, b)
    })
}

/// Factors `g`, `h` over `Z` with degrees at least one summing to at most
/// `max_degree`, coefficients in `[-bound, bound]`, and `f = g h`.
pub fn planted_product(
    rng: &mut impl Rng,
    max_degree: usize,
    bound: u64,
) -> (UnivariateView, UnivariateView, UnivariateView) {
    let dg = rng.gen_range(1..max_degree);
    let dh = rng.gen_range(1..=max_degree - dg);
    let mut factor = |d: usize| {
        let mut c: Vec<BigInt> = (0..d).map(|_| coord(rng, bound)).collect();
        let b = bound.max(1) as i64;
        let lead = loop {
            let v = rng.gen_range(-b..=b);
            if v != 0 {
                break v;
            }
        };
        c.push(BigInt::from(lead));
        UnivariateView::from_ints(Ring::Integers, "X", &c).expect("nonzero leading coefficient")
    };
    let g = factor(dg);
    let h = factor(dh);
    let f = g.mul(&h).expect("same ring");
    (g, h, f)
}
