//! Random instances that satisfy the conditions by construction, fed to the
//! factor search. Under the proven degree bounds no witness may turn up;
//! beyond them any witness is a candidate counterexample.

use num_bigint::BigInt;
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{factor_search, MultiIndex, SearchBudget};
use crate::criterion::{certify, proven_bound, Verdict};
use crate::error::{Error, Result};
use crate::par;
use crate::poly::{weight, Polynomial, UnivariateView, WeightVector};
use crate::ring::{Elem, Ring};
use crate::text::{format_univariate, format_valuation};
use crate::valuation::{Kind, Valuation};

/// Primes drawn for the `ord_p` family.
pub const FUZZ_PRIMES: [u64; 4] = [2, 3, 5, 7];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FuzzFamily {
    /// `ord_p` over `Z`.
    OrdP,
    /// `deg_nu` over `Z[Y, ...]`.
    DegNu,
    /// `codeg_nu` over `Z[Y, ...]`, with tiny supports.
    CodegNu,
}

impl FuzzFamily {
    pub fn kind(self) -> Kind {
        match self {
            FuzzFamily::DegNu => Kind::First,
            FuzzFamily::OrdP | FuzzFamily::CodegNu => Kind::Second,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FuzzMode {
    /// Degrees within the proven bound.
    Validate,
    /// Degrees beyond it.
    Explore,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub seed: u64,
    pub ring: Ring,
    pub n_min: usize,
    pub n_max: usize,
    pub trials: u64,
    pub family: FuzzFamily,
    /// Integer coefficients are drawn from `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: u64,
    /// Total degree cap on polynomial coefficients.
    pub max_coeff_degree: u32,
    pub mode: FuzzMode,
    pub budget: SearchBudget,
}

impl FuzzConfig {
    /// Seed 0, 100 trials and small coefficients. Polynomial coefficients
    /// have total degree at most 3 for `DegNu` and 2 for `CodegNu`, and the
    /// search box is sized to match.
    pub fn new(family: FuzzFamily, mode: FuzzMode, ring: Ring, n_min: usize, n_max: usize) -> Self {
        let (max_coeff_degree, coord_bound) = match family {
            FuzzFamily::OrdP => (0, 10),
            FuzzFamily::DegNu => (3, 2),
            FuzzFamily::CodegNu => (2, 1),
        };
        FuzzConfig {
            seed: 0,
            ring,
            n_min,
            n_max,
            trials: 100,
            family,
            coeff_bound: 3,
            max_coeff_degree,
            mode,
            budget: SearchBudget {
                coord_bound,
                max_candidates: 2_000_000,
            },
        }
    }

    fn check_mode(&self, wanted: FuzzMode) -> Result<()> {
        let bound = proven_bound(self.family.kind());
        if self.mode != wanted {
            return Err(Error::Mode(format!(
                "configuration is in {:?} mode",
                self.mode
            )));
        }
        if self.n_min < 2 || self.n_min > self.n_max {
            return Err(Error::Mode(format!(
                "bad degree range {}..={}",
                self.n_min, self.n_max
            )));
        }
        match wanted {
            FuzzMode::Validate if self.n_max > bound => Err(Error::Mode(format!(
                "validate needs n <= {bound} for the {} kind, got {}",
                self.family.kind(),
                self.n_max
            ))),
            FuzzMode::Explore if self.n_min <= bound => Err(Error::Mode(format!(
                "explore needs n > {bound} for the {} kind, got {}",
                self.family.kind(),
                self.n_min
            ))),
            _ => Ok(()),
        }
    }
}

/// A factorization of a generated instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessRecord {
    pub seed: u64,
    pub index: u64,
    pub poly: String,
    pub valuation: String,
    pub g: String,
    pub h: String,
    pub verdict: Verdict,
    /// The instance had a conjectural certificate, so this refutes the
    /// conjecture at its degree.
    pub candidate_counterexample: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzReport {
    pub family: FuzzFamily,
    pub kind: Kind,
    pub mode: FuzzMode,
    pub seed: u64,
    pub ring: String,
    pub n_min: usize,
    pub n_max: usize,
    pub trials: u64,
    pub certified: u64,
    pub conjectural: u64,
    /// Searches cut short by the candidate budget.
    pub truncated: u64,
    pub witnesses: Vec<WitnessRecord>,
}

fn rng_for(cfg: &FuzzConfig, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index);
    rng
}

fn nonzero(rng: &mut ChaCha8Rng, bound: u64, avoid: Option<u64>) -> BigInt {
    let b = bound.max(1) as i64;
    loop {
        let v = rng.gen_range(-b..=b);
        if v != 0 && avoid.is_none_or(|p| v % p as i64 != 0) {
            return BigInt::from(v);
        }
    }
}

fn any(rng: &mut ChaCha8Rng, bound: u64) -> BigInt {
    let b = bound as i64;
    BigInt::from(rng.gen_range(-b..=b))
}

/// Instance number `index` of `cfg`: a polynomial and a valuation for which
/// the conditions hold by construction. The certificate is checked again
/// before returning.
pub fn random_conditioned_poly(
    cfg: &FuzzConfig,
    index: u64,
) -> Result<(UnivariateView, Valuation)> {
    let mut rng = rng_for(cfg, index);
    let n = rng.gen_range(cfg.n_min..=cfg.n_max);
    let (f, v) = match cfg.family {
        FuzzFamily::OrdP => ord_instance(cfg, &mut rng, n)?,
        FuzzFamily::DegNu | FuzzFamily::CodegNu => weighted_instance(cfg, &mut rng, n)?,
    };
    let cert = certify(&f, &v)?;
    if !cert.report.passed() {
        return Err(Error::Precondition(vec![format!(
            "generated instance {index} fails the conditions: {}",
            format_univariate(&f)?
        )]));
    }
    Ok((f, v))
}

fn ord_instance(
    cfg: &FuzzConfig,
    rng: &mut ChaCha8Rng,
    n: usize,
) -> Result<(UnivariateView, Valuation)> {
    if cfg.ring != Ring::Integers {
        return Err(Error::Unsupported(format!(
            "ord_p instances over {}",
            cfg.ring
        )));
    }
    let p = *FUZZ_PRIMES.choose(rng).expect("nonempty");
    let mu = loop {
        let mu = rng.gen_range(1..=n as u32);
        if (mu as usize).gcd(&n) == 1 {
            break mu;
        }
    };
    let pb = BigInt::from(p);
    let mut c = Vec::with_capacity(n + 1);
    c.push(pb.pow(mu) * nonzero(rng, cfg.coeff_bound, Some(p)));
    for j in 1..n {
        let e = ((n - j) as u32 * mu).div_ceil(n as u32);
        c.push(pb.pow(e) * any(rng, cfg.coeff_bound));
    }
    c.push(nonzero(rng, cfg.coeff_bound, Some(p)));
    let f = UnivariateView::from_ints(Ring::Integers, "X", &c)?;
    Ok((f, Valuation::ord_p(&Ring::Integers, Elem::int(p))?))
}

fn weighted_instance(
    cfg: &FuzzConfig,
    rng: &mut ChaCha8Rng,
    n: usize,
) -> Result<(UnivariateView, Valuation)> {
    let pr = match &cfg.ring {
        Ring::Poly(pr) if *pr.base() == Ring::Integers => pr.clone(),
        r => return Err(Error::Unsupported(format!("weighted instances over {r}"))),
    };
    let first = cfg.family == FuzzFamily::DegNu;
    let pool = monomial_pool(pr.arity(), cfg.max_coeff_degree);
    let (nu, mu) = loop {
        let nu = WeightVector::new((0..pr.arity()).map(|_| rng.gen_range(1..=2)).collect());
        let mut weights: Vec<u64> = pool.iter().map(|i| weight(i, &nu)).collect::<Result<_>>()?;
        weights.sort_unstable();
        weights.dedup();
        let fits: Vec<u64> = weights
            .into_iter()
            .filter(|&w| w > 0 && w.gcd(&(n as u64)) == 1)
            .collect();
        if let Some(&mu) = fits.choose(rng) {
            break (nu, mu);
        }
    };
    let w = |i: &MultiIndex| weight(i, &nu).expect("arity matches");
    let at_weight: Vec<&MultiIndex> = pool.iter().filter(|i| w(i) == mu).collect();
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let rhs = (n - j) as u64 * mu;
        let mut terms: Vec<(MultiIndex, Elem)> = Vec::new();
        if j == 0 {
            let i = (*at_weight.choose(rng).expect("mu is attained")).clone();
            terms.push((i, Elem::Int(nonzero(rng, cfg.coeff_bound, None))));
        }
        if j == n {
            terms.push((
                MultiIndex::zero(pr.arity()),
                Elem::Int(nonzero(rng, cfg.coeff_bound, None)),
            ));
        }
        let allowed: Vec<&MultiIndex> = pool
            .iter()
            .filter(|i| {
                let nw = n as u64 * w(i);
                if first {
                    nw <= rhs
                } else {
                    nw >= rhs
                }
            })
            .collect();
        // at most two extra terms keeps supports tiny
        let extra = if first { allowed.len() } else { 2 };
        for _ in 0..extra {
            if allowed.is_empty() || !rng.gen_bool(0.5) {
                continue;
            }
            let i = (*allowed.choose(rng).expect("nonempty")).clone();
            terms.push((i, Elem::Int(any(rng, cfg.coeff_bound))));
        }
        let p = Polynomial::from_terms(&pr, fix_extremes(terms, j, n, first, &w, mu))?;
        coeffs.push(Elem::Poly(p));
    }
    let f = UnivariateView::new(cfg.ring.clone(), "X", coeffs)?;
    let v = if first {
        Valuation::DegNu(nu)
    } else {
        Valuation::CodegNu(nu)
    };
    Ok((f, v))
}

/// Random extra terms must not cancel the term that pins `omega(phi_0)` or
/// `omega(phi_n)`, so extras on those monomials are dropped.
fn fix_extremes(
    terms: Vec<(MultiIndex, Elem)>,
    j: usize,
    n: usize,
    first: bool,
    w: &impl Fn(&MultiIndex) -> u64,
    mu: u64,
) -> Vec<(MultiIndex, Elem)> {
    if j != 0 && j != n {
        return terms;
    }
    let pinned = terms[0].0.clone();
    let mut out = vec![terms[0].clone()];
    for (i, c) in terms.into_iter().skip(1) {
        if i == pinned {
            continue;
        }
        // phi_n for the first kind must stay constant; phi_0 must not exceed mu
        if j == n && first && !i.is_zero() {
            continue;
        }
        if j == 0 && first && w(&i) > mu {
            continue;
        }
        out.push((i, c));
    }
    out
}

/// Monomials with total degree at most `cap`.
fn monomial_pool(arity: usize, cap: u32) -> Vec<MultiIndex> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=cap).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    let mut out: Vec<MultiIndex> = out
        .into_iter()
        .filter(|v| v.iter().sum::<u32>() <= cap)
        .map(MultiIndex::new)
        .collect();
    out.sort();
    out
}

struct Trial {
    verdict: Verdict,
    truncated: bool,
    witness: Option<WitnessRecord>,
}

fn run_trial(cfg: &FuzzConfig, index: u64) -> Result<Trial> {
    let (f, v) = random_conditioned_poly(cfg, index)?;
    let cert = certify(&f, &v)?;
    let out = factor_search(&f, cfg.budget)?;
    let witness = match out.witness {
        None => None,
        Some(w) => Some(WitnessRecord {
            seed: cfg.seed,
            index,
            poly: format_univariate(&f)?,
            valuation: format_valuation(f.ring(), &v),
            g: format_univariate(w.g())?,
            h: format_univariate(w.h())?,
            verdict: cert.verdict,
            candidate_counterexample: cert.report.passed(),
        }),
    };
    Ok(Trial {
        verdict: cert.verdict,
        truncated: out.truncated && witness.is_none(),
        witness,
    })
}

fn run(cfg: &FuzzConfig) -> Result<FuzzReport> {
    let trials = par::map_range(cfg.trials as usize, |i| run_trial(cfg, i as u64));
    let mut report = FuzzReport {
        family: cfg.family,
        kind: cfg.family.kind(),
        mode: cfg.mode,
        seed: cfg.seed,
        ring: cfg.ring.to_string(),
        n_min: cfg.n_min,
        n_max: cfg.n_max,
        trials: cfg.trials,
        certified: 0,
        conjectural: 0,
        truncated: 0,
        witnesses: Vec::new(),
    };
    for t in trials {
        let t = t?;
        match t.verdict {
            Verdict::IrreducibleCertified => report.certified += 1,
            Verdict::ConjecturalCertificate => report.conjectural += 1,
            Verdict::NoCertificate => {}
        }
        report.truncated += u64::from(t.truncated);
        report.witnesses.extend(t.witness);
    }
    Ok(report)
}

/// Instances within the proven degree bounds; any witness is a bug.
pub fn fuzz_theorem(cfg: &FuzzConfig) -> Result<FuzzReport> {
    cfg.check_mode(FuzzMode::Validate)?;
    run(cfg)
}

/// Instances beyond the proven bounds, where certificates are conjectural.
pub fn explore_conjecture(cfg: &FuzzConfig) -> Result<FuzzReport> {
    cfg.check_mode(FuzzMode::Explore)?;
    run(cfg)
}
