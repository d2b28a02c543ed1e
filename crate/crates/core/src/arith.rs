//! Small-integer helpers: sieving, modular powers, gcd, divisors.

use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sieve of Eratosthenes; returns all primes `<= limit`.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i.saturating_mul(i);
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

struct PrimeCache {
    bound: u64,
    primes: Arc<Vec<u64>>,
}

static PRIME_CACHE: OnceLock<RwLock<PrimeCache>> = OnceLock::new();

/// Cached prime list covering at least `limit`. Readers share the same `Arc`.
pub fn cached_primes(limit: u64) -> Arc<Vec<u64>> {
    let cell = PRIME_CACHE.get_or_init(|| {
        RwLock::new(PrimeCache {
            bound: 0,
            primes: Arc::new(Vec::new()),
        })
    });
    {
        let guard = cell.read().expect("prime cache poisoned");
        if guard.bound >= limit {
            return Arc::clone(&guard.primes);
        }
    }
    let mut guard = cell.write().expect("prime cache poisoned");
    if guard.bound < limit {
        let target = limit.max(guard.bound.saturating_mul(2)).max(1 << 16);
        guard.primes = Arc::new(primes_up_to(target));
        guard.bound = target;
    }
    Arc::clone(&guard.primes)
}

/// Primes `<= limit` taken from the shared cache.
pub fn primes_le(limit: u64) -> Vec<u64> {
    let all = cached_primes(limit);
    let end = all.partition_point(|&p| p <= limit);
    all[..end].to_vec()
}

/// Deterministic primality for machine words (trial division is enough for
/// the index sizes used here, Miller-Rabin handles the rest).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

#[inline]
pub fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Canonical residue of `x` in `[0, m)`.
pub fn mod_floor(x: &BigInt, m: &BigInt) -> BigInt {
    x.mod_floor(m)
}

/// Residue of a `BigInt` modulo a machine word, in `[0, m)`.
pub fn bigint_mod_u64(x: &BigInt, m: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(m));
    u64::try_from(r).expect("residue fits")
}

/// Exact p-adic valuation of a nonzero integer.
pub fn valuation(x: &BigInt, p: u64) -> u32 {
    assert!(!x.is_zero(), "valuation of zero");
    let p = BigInt::from(p);
    let mut v = 0;
    let mut y = x.abs();
    loop {
        let (q, r) = y.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        y = q;
        v += 1;
    }
}

/// Sorted positive divisors of `n`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Euler's totient by trial factorization.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `base^exp` for a small base.
pub fn pow_big(base: u64, exp: u64) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_matches_trial_division() {
        let ps = primes_up_to(1000);
        let naive: Vec<u64> = (2..=1000).filter(|&n| (2..n).all(|d| n % d != 0)).collect();
        assert_eq!(ps, naive);
        assert!(ps.iter().all(|&p| is_prime_u64(p)));
        assert!(!is_prime_u64(3215031751));
        assert!(is_prime_u64(1_000_003));
    }

    #[test]
    fn cached_primes_grow() {
        assert_eq!(primes_le(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(primes_le(200_000).len(), 17984);
    }

    #[test]
    fn divisor_and_totient() {
        assert_eq!(divisors(45), vec![1, 3, 5, 9, 15, 45]);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(97), 96);
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(valuation(&BigInt::from(-1472), 2), 6);
    }
}
