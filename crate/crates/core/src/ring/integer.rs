//! Helpers on unbounded integers: primality, square/cube-freeness, small
//! prime enumeration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Miller-Rabin with the first 13 prime bases is deterministic below this
/// bound (3.317e24).
const MR_DETERMINISTIC_LIMIT: &str = "3317044064679887385961981";
const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Outcome of a primality test on `|n|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Primality {
    Prime,
    Composite,
    /// Passed every round but lies beyond the deterministic range.
    ProbablePrime,
}

pub fn primality(n: &BigInt) -> Primality {
    let n = n.abs();
    if n < BigInt::from(2) {
        return Primality::Composite;
    }
    for &p in &MR_BASES {
        let p = BigInt::from(p);
        if n == p {
            return Primality::Prime;
        }
        if (&n % &p).is_zero() {
            return Primality::Composite;
        }
    }
    let one = BigInt::one();
    let n_minus_one = &n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'bases: for &a in &MR_BASES {
        let mut x = BigInt::from(a).modpow(&d, &n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % &n;
            if x == n_minus_one {
                continue 'bases;
            }
        }
        return Primality::Composite;
    }
    let limit: BigInt = MR_DETERMINISTIC_LIMIT.parse().unwrap();
    if n < limit {
        Primality::Prime
    } else {
        Primality::ProbablePrime
    }
}

/// `|n|` is a proven prime.
pub fn is_prime(n: &BigInt) -> bool {
    primality(n) == Primality::Prime
}

pub fn is_prime_u64(n: u64) -> bool {
    is_prime(&BigInt::from(n))
}

/// Result of a trial-division freeness check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Freeness {
    Free,
    /// Divisible by `p^e` for the reported prime.
    Divisible(u64),
    /// No `p^e` factor with `p` up to the bound, but the cofactor is too
    /// large to conclude.
    Undecided,
}

/// Whether `n` is `e`-th power free, by trial division with primes up to
/// `bound`.
pub fn power_free(n: &BigInt, e: u32, bound: u64) -> Freeness {
    let mut m = n.abs();
    if m.is_zero() {
        return Freeness::Divisible(0);
    }
    let mut p: u64 = 2;
    while p <= bound {
        let pb = BigInt::from(p);
        if &pb * &pb > m {
            // what remains is 1 or a prime
            return Freeness::Free;
        }
        let mut count = 0;
        while (&m % &pb).is_zero() {
            m /= &pb;
            count += 1;
        }
        if count >= e {
            return Freeness::Divisible(p);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // the cofactor has no prime factor <= bound
    let next = BigInt::from(bound + 1);
    if m < next.pow(e) || is_prime(&m) {
        Freeness::Free
    } else {
        Freeness::Undecided
    }
}

/// Primes up to `bound`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &p)| p.then_some(i as u64))
        .collect()
}

/// Prime divisors of `n` that are at most `bound`, ascending.
pub fn small_prime_divisors(n: &BigInt, bound: u64) -> Vec<u64> {
    let n = n.abs();
    if n.is_zero() {
        return Vec::new();
    }
    primes_up_to(bound)
        .into_iter()
        .filter(|&p| (&n % BigInt::from(p)).is_zero())
        .collect()
}

/// Number of times `p` divides `n`; `None` for `n = 0`.
pub fn int_ord(n: &BigInt, p: &BigInt) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let mut m = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return Some(k);
        }
        m = q;
        k += 1;
    }
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Exact integer square root, if `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub(crate) fn to_u64(n: &BigInt) -> Option<u64> {
    n.to_u64()
}
