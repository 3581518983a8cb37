//! Sparse multivariate polynomials and weighted degrees.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ring::{Elem, PolyRing, Ring};
use crate::value::ExtValue;

/// Exponent vector, ordered by total degree and then lexicographically
/// (the first differing exponent decides).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exps: Vec<u32>) -> Self {
        MultiIndex(exps)
    }

    pub fn zero(arity: usize) -> Self {
        MultiIndex(vec![0; arity])
    }

    pub fn unit(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        MultiIndex(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, if every exponent stays nonnegative.
    fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<u32>);

impl WeightVector {
    pub fn new(weights: Vec<u32>) -> Self {
        WeightVector(weights)
    }

    pub fn ones(arity: usize) -> Self {
        WeightVector(vec![1; arity])
    }

    pub fn weights(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// The zero vector gives a trivial valuation.
    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
}

/// `|I|_nu`.
pub fn weight(index: &MultiIndex, nu: &WeightVector) -> Result<u64> {
    if index.arity() != nu.arity() {
        return Err(Error::ArityMismatch {
            expected: nu.arity(),
            got: index.arity(),
        });
    }
    Ok(index
        .0
        .iter()
        .zip(&nu.0)
        .map(|(&i, &w)| u64::from(i) * u64::from(w))
        .sum())
}

/// A polynomial with coefficients in the base of some [`PolyRing`].
///
/// No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<MultiIndex, Elem>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Polynomial {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &PolyRing, c: Elem) -> Self {
        Self::monomial(ring, MultiIndex::zero(ring.arity()), c)
    }

    pub fn monomial(ring: &PolyRing, index: MultiIndex, c: Elem) -> Self {
        let mut p = Polynomial::zero(ring.arity());
        if !c.is_zero() {
            p.terms.insert(index, c);
        }
        p
    }

    /// The `i`-th variable.
    pub fn var(ring: &PolyRing, i: usize) -> Self {
        Self::monomial(ring, MultiIndex::unit(ring.arity(), i), ring.base().one())
    }

    /// Sum of the given terms; repeated indices are combined.
    pub fn from_terms(
        ring: &PolyRing,
        terms: impl IntoIterator<Item = (MultiIndex, Elem)>,
    ) -> Result<Self> {
        let mut p = Polynomial::zero(ring.arity());
        for (i, c) in terms {
            if i.arity() != ring.arity() {
                return Err(Error::ArityMismatch {
                    expected: ring.arity(),
                    got: i.arity(),
                });
            }
            p.add_term(ring.base(), i, c)?;
        }
        Ok(p)
    }

    fn add_term(&mut self, base: &Ring, index: MultiIndex, c: Elem) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.remove(&index) {
            None => {
                self.terms.insert(index, c);
            }
            Some(old) => {
                let s = base.add(&old, &c)?;
                if !s.is_zero() {
                    self.terms.insert(index, s);
                }
            }
        }
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, index: &MultiIndex) -> Option<&Elem> {
        self.terms.get(index)
    }

    pub fn constant_coeff(&self) -> Option<&Elem> {
        self.terms.get(&MultiIndex::zero(self.arity))
    }

    pub fn leading(&self) -> Option<(&MultiIndex, &Elem)> {
        self.terms.iter().next_back()
    }

    fn check_nu(&self, nu: &WeightVector) -> Result<()> {
        if nu.arity() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: nu.arity(),
            });
        }
        Ok(())
    }

    pub fn deg_nu(&self, nu: &WeightVector) -> Result<ExtValue> {
        self.check_nu(nu)?;
        Ok(self
            .terms
            .keys()
            .map(|i| weight(i, nu).expect("arity checked"))
            .max()
            .map_or(ExtValue::NegInf, ExtValue::from_int))
    }

    pub fn codeg_nu(&self, nu: &WeightVector) -> Result<ExtValue> {
        self.check_nu(nu)?;
        Ok(self
            .terms
            .keys()
            .map(|i| weight(i, nu).expect("arity checked"))
            .min()
            .map_or(ExtValue::PosInf, ExtValue::from_int))
    }

    /// The monomials of `nu`-weight exactly `k`.
    pub fn homogeneous_component(&self, nu: &WeightVector, k: u64) -> Result<Polynomial> {
        self.check_nu(nu)?;
        let terms = self
            .terms
            .iter()
            .filter(|(i, _)| weight(i, nu).expect("arity checked") == k)
            .map(|(i, c)| (i.clone(), c.clone()))
            .collect();
        Ok(Polynomial {
            arity: self.arity,
            terms,
        })
    }

    /// Largest exponent of variable `i`, `None` for zero.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|k| k.0[i]).max()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(MultiIndex::total).max()
    }
}

impl PolyRing {
    fn check(&self, f: &Polynomial) -> Result<()> {
        if f.arity != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: f.arity,
            });
        }
        Ok(())
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        self.check(f)?;
        self.check(g)?;
        let mut out = f.clone();
        for (i, c) in &g.terms {
            out.add_term(self.base(), i.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn neg(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check(f)?;
        let terms = f
            .terms
            .iter()
            .map(|(i, c)| Ok((i.clone(), self.base().neg(c)?)))
            .collect::<Result<_>>()?;
        Ok(Polynomial {
            arity: f.arity,
            terms,
        })
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        self.add(f, &self.neg(g)?)
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        self.check(f)?;
        self.check(g)?;
        let mut out = Polynomial::zero(f.arity);
        for (i, a) in &f.terms {
            for (j, b) in &g.terms {
                out.add_term(self.base(), i.add(j), self.base().mul(a, b)?)?;
            }
        }
        Ok(out)
    }

    fn mul_term(&self, f: &Polynomial, index: &MultiIndex, c: &Elem) -> Result<Polynomial> {
        let terms = f
            .terms
            .iter()
            .map(|(i, a)| Ok((i.add(index), self.base().mul(a, c)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        // the base is a domain, so no product vanishes
        Ok(Polynomial {
            arity: f.arity,
            terms,
        })
    }

    /// Division by leading terms in the graded order; in a domain this
    /// succeeds exactly when `g` divides `f`.
    pub fn exact_div(&self, f: &Polynomial, g: &Polynomial) -> Result<Option<Polynomial>> {
        self.check(f)?;
        self.check(g)?;
        let (gi, gc) = g.leading().ok_or(Error::DivisionByZero)?;
        let mut r = f.clone();
        let mut q = Polynomial::zero(f.arity);
        while let Some((ri, rc)) = r.leading() {
            let Some(di) = ri.checked_sub(gi) else {
                return Ok(None);
            };
            let Some(c) = self.base().exact_div(rc, gc)? else {
                return Ok(None);
            };
            r = self.sub(&r, &self.mul_term(g, &di, &c)?)?;
            q.terms.insert(di, c);
        }
        Ok(Some(q))
    }

    /// Split `f` by powers of variable `var`.
    pub fn as_univariate(&self, f: &Polynomial, var: &str) -> Result<UnivariateView> {
        self.check(f)?;
        let pos = self
            .var_index(var)
            .ok_or_else(|| Error::UnknownVariable(var.into()))?;
        let coeff_ring = self.without(pos)?;
        let n = f.degree_in(pos).ok_or(Error::ZeroPolynomial)? as usize;
        let mut buckets: Vec<Vec<(MultiIndex, Elem)>> = vec![Vec::new(); n + 1];
        for (i, c) in &f.terms {
            let mut rest = i.0.clone();
            let e = rest.remove(pos) as usize;
            buckets[e].push((MultiIndex(rest), c.clone()));
        }
        let coeffs = buckets
            .into_iter()
            .map(|terms| match &coeff_ring {
                Ring::Poly(cr) => Ok(Elem::Poly(Polynomial {
                    arity: cr.arity(),
                    terms: terms.into_iter().collect(),
                })),
                base => Ok(terms
                    .into_iter()
                    .next()
                    .map_or_else(|| base.zero(), |(_, c)| c)),
            })
            .collect::<Result<Vec<_>>>()?;
        UnivariateView::new(coeff_ring, var, coeffs)
    }

    /// The ring with variable `pos` removed.
    fn without(&self, pos: usize) -> Result<Ring> {
        let mut vars = self.vars().to_vec();
        vars.remove(pos);
        if vars.is_empty() {
            Ok(self.base().clone())
        } else {
            Ok(Ring::Poly(PolyRing::new(self.base().clone(), vars)?))
        }
    }
}

/// `f = phi_n X^n + ... + phi_0` over a coefficient ring, with `phi_n != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnivariateView {
    ring: Ring,
    var: String,
    coeffs: Vec<Elem>,
}

impl UnivariateView {
    /// Trailing zero coefficients are dropped; all-zero input is an error.
    pub fn new(ring: Ring, var: impl Into<String>, mut coeffs: Vec<Elem>) -> Result<Self> {
        while coeffs.last().is_some_and(Elem::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        if coeffs.iter().any(|c| !ring.contains(c)) {
            return Err(Error::DescriptorMismatch(ring.to_string()));
        }
        Ok(UnivariateView {
            ring,
            var: var.into(),
            coeffs,
        })
    }

    /// From integer coefficients `phi_0, ..., phi_n`.
    pub fn from_ints<T: Into<num_bigint::BigInt> + Clone>(
        ring: Ring,
        var: &str,
        c: &[T],
    ) -> Result<Self> {
        let coeffs = c.iter().map(|x| ring.from_int(x.clone())).collect();
        Self::new(ring, var, coeffs)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `phi_0, ..., phi_n`.
    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &Elem {
        &self.coeffs[j]
    }

    pub fn leading(&self) -> &Elem {
        self.coeffs.last().expect("nonzero by construction")
    }

    pub fn mul(&self, other: &UnivariateView) -> Result<UnivariateView> {
        if self.ring != other.ring {
            return Err(Error::DescriptorMismatch(self.ring.to_string()));
        }
        let r = &self.ring;
        let mut out = vec![r.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = r.add(&out[i + j], &r.mul(a, b)?)?;
                }
            }
        }
        UnivariateView::new(r.clone(), self.var.clone(), out)
    }

    /// The quotient `self / h` if `h` divides `self` in `R[X]`.
    pub fn exact_div(&self, h: &UnivariateView) -> Result<Option<UnivariateView>> {
        let r = &self.ring;
        let (n, t) = (self.degree(), h.degree());
        if n < t {
            return Ok(None);
        }
        let mut rem = self.coeffs.clone();
        let mut q = vec![r.zero(); n - t + 1];
        let lead = h.leading();
        for k in (0..=n - t).rev() {
            let top = &rem[k + t];
            if top.is_zero() {
                continue;
            }
            let Some(c) = r.exact_div(top, lead)? else {
                return Ok(None);
            };
            for (j, hj) in h.coeffs.iter().enumerate() {
                if !hj.is_zero() {
                    rem[k + j] = r.sub(&rem[k + j], &r.mul(&c, hj)?)?;
                }
            }
            q[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Ok(None);
        }
        UnivariateView::new(r.clone(), self.var.clone(), q).map(Some)
    }

    /// The ring `R[var]` (with `var` first), and `f` in it.
    pub fn reassemble(&self) -> Result<(Ring, Polynomial)> {
        let full = self.ring.extend(&self.var)?;
        let pr = full.as_poly().expect("extend yields a polynomial ring");
        let pos = 0;
        let mut terms = Vec::new();
        for (e, c) in self.coeffs.iter().enumerate() {
            match c {
                Elem::Poly(p) if matches!(self.ring, Ring::Poly(_)) => {
                    for (i, a) in p.terms() {
                        let mut ex = i.0.clone();
                        ex.insert(pos, e as u32);
                        terms.push((MultiIndex(ex), a.clone()));
                    }
                }
                c => {
                    let mut ex = vec![0; pr.arity()];
                    ex[pos] = e as u32;
                    terms.push((MultiIndex(ex), c.clone()));
                }
            }
        }
        let f = Polynomial::from_terms(pr, terms)?;
        Ok((full, f))
    }
}
