//! Divisor enumeration, prime factorization, Euler's totient, and the radical.

/// Prime factorization as (prime, exponent) pairs, ascending by prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFactorization {
    pub factors: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    /// The integer this factorization reconstructs.
    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

/// Canonical factorization of `n` by trial division up to √n.
pub fn prime_factors(n: u64) -> PrimeFactorization {
    assert!(n >= 2, "prime_factors: n must be at least 2");
    let mut rest = n;
    let mut factors = Vec::new();
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    PrimeFactorization { factors }
}

/// All divisors of `n`, ascending, including 1 and `n`.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors: n must be positive");
    if n == 1 {
        return vec![1];
    }
    let mut out = vec![1];
    for &(p, e) in &prime_factors(n).factors {
        let base = out.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            out.extend(base.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// Euler's totient: the number of r in [1, n] with gcd(r, n) = 1.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi: n must be positive");
    if n == 1 {
        return 1;
    }
    // n · Π (1 − 1/p) folded as (n/p)·(p−1) per prime, staying in integers.
    let mut phi = n;
    for &(p, _) in &prime_factors(n).factors {
        phi = phi / p * (p - 1);
    }
    phi
}

/// Product of the distinct prime divisors of `n`; radical(1) = 1.
pub fn radical(n: u64) -> u64 {
    assert!(n >= 1, "radical: n must be positive");
    if n == 1 {
        return 1;
    }
    prime_factors(n).factors.iter().map(|&(p, _)| p).product()
}
