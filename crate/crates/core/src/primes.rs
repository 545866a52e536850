//! Small-prime utilities: primality, prime-power factorization, sieves.

use serde::Serialize;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `q = p^e` with `p` prime and `e >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PrimePower {
    pub q: u64,
    pub p: u64,
    pub e: u32,
}

impl PrimePower {
    /// Factors `q`, returning `None` unless it is a prime power.
    pub fn factor(q: u64) -> Option<Self> {
        if q < 2 {
            return None;
        }
        let p = smallest_prime_factor(q);
        let mut rest = q;
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        (rest == 1).then_some(PrimePower { q, p, e })
    }
}

fn smallest_prime_factor(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

/// Primes `<= limit` by the sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// All prime powers `<= limit`, ascending.
pub fn prime_powers_up_to(limit: u64) -> Vec<PrimePower> {
    let mut out = Vec::new();
    for p in primes_up_to(limit) {
        let mut q = p;
        let mut e = 1;
        loop {
            out.push(PrimePower { q, p, e });
            match q.checked_mul(p) {
                Some(next) if next <= limit => {
                    q = next;
                    e += 1;
                }
                _ => break,
            }
        }
    }
    out.sort();
    out
}

/// Smallest prime `p` with `p ≡ 1 (mod m)`.
pub fn smallest_prime_congruent_one(m: u64) -> u64 {
    let mut p = m + 1;
    while !is_prime(p) {
        p += m;
    }
    p
}
