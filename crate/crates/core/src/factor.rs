//! Integer factorization and primality.
//!
//! Trial division by sieved primes up to a bound, then Brent's variant of
//! Pollard rho on what is left. Primality is Miller-Rabin with the first
//! thirteen prime bases below `3.317 * 10^24` (deterministic there) and
//! Baillie-PSW above.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{cached_primes, is_prime_u64};
use crate::error::{Error, Result};
use crate::montgomery::{from_limbs, is_zero, Limbs, Montgomery};

/// Work limits for [`factorize_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorConfig {
    pub trial_bound: u64,
    /// Pollard-rho iterations allowed per cofactor, summed over restarts.
    pub rho_iterations: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            trial_bound: 1_000_000,
            rho_iterations: 100_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// -1, 0 or +1.
    pub sign: i8,
    pub factors: BTreeMap<BigInt, u32>,
}

impl Factorization {
    /// Largest prime factor, with the convention `P(0) = P(+-1) = 1`.
    pub fn largest_prime(&self) -> BigInt {
        self.factors.keys().next_back().cloned().unwrap_or_else(BigInt::one)
    }

    /// `sign * prod p^e`.
    pub fn reconstruct(&self) -> BigInt {
        if self.sign == 0 {
            return BigInt::zero();
        }
        let prod: BigInt = self
            .factors
            .iter()
            .map(|(p, &e)| num_traits::pow(p.clone(), e as usize))
            .product();
        if self.sign < 0 {
            -prod
        } else {
            prod
        }
    }
}

/// [`factorize_with`] under the default budget.
pub fn factorize(n: &BigInt) -> Result<Factorization> {
    factorize_with(n, &FactorConfig::default())
}

pub fn factorize_with(n: &BigInt, cfg: &FactorConfig) -> Result<Factorization> {
    let sign = match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    };
    let mut factors = BTreeMap::new();
    if sign == 0 {
        return Ok(Factorization { sign, factors });
    }
    let mut rest = n.magnitude().clone();

    let primes = cached_primes(cfg.trial_bound);
    let bound = BigUint::from(cfg.trial_bound);
    for &p in primes.iter().take_while(|&&p| p <= cfg.trial_bound) {
        if rest.is_one() {
            break;
        }
        let bp = BigUint::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            factors.insert(BigInt::from(p), e);
        }
    }
    if !rest.is_one() {
        // anything left below bound^2 with no factor <= bound is prime
        let mut stack = vec![rest];
        let mut budget = cfg.rho_iterations;
        while let Some(m) = stack.pop() {
            if m.is_one() {
                continue;
            }
            if m <= &bound * &bound || is_probable_prime(&m) {
                *factors.entry(BigInt::from(m)).or_insert(0) += 1;
                continue;
            }
            if let Some(r) = perfect_power_root(&m) {
                let (root, k) = r;
                for _ in 0..k {
                    stack.push(root.clone());
                }
                continue;
            }
            match pollard_brent(&m, &mut budget) {
                Some(d) => {
                    let other = &m / &d;
                    stack.push(d);
                    stack.push(other);
                }
                None => {
                    return Err(Error::PartialFactorization {
                        cofactor: BigInt::from(m),
                    })
                }
            }
        }
    }
    // merge equal primes found along different branches
    Ok(Factorization { sign, factors })
}

/// `P(n)`: largest prime factor with `P(0) = P(+-1) = 1`.
pub fn largest_prime_factor(n: &BigInt) -> Result<BigInt> {
    Ok(factorize(n)?.largest_prime())
}

const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

fn mr_deterministic_limit() -> BigUint {
    // 3317044064679887385961981: first 13 prime bases suffice below this
    "3317044064679887385961981".parse().expect("literal")
}

/// Primality: exact for `n < 3.317e24`, Baillie-PSW beyond.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    for &p in &MR_BASES {
        if (n % p).is_zero() {
            return false;
        }
    }
    if n < &mr_deterministic_limit() {
        MR_BASES.iter().all(|&a| strong_probable_prime(n, &BigUint::from(a)))
    } else {
        strong_probable_prime(n, &BigUint::from(2u32)) && strong_lucas_probable_prime(n)
    }
}

pub fn is_prime(n: &BigInt) -> bool {
    n.sign() == Sign::Plus && is_probable_prime(n.magnitude())
}

fn strong_probable_prime(n: &BigUint, a: &BigUint) -> bool {
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    let mut x = a.modpow(&d, n);
    if x == one || x == nm1 {
        return true;
    }
    for _ in 1..s {
        x = &x * &x % n;
        if x == nm1 {
            return true;
        }
    }
    false
}

fn jacobi(a: &BigInt, n: &BigUint) -> i32 {
    let n = BigInt::from(n.clone());
    let mut a = a.mod_floor(&n);
    let mut n = n;
    let mut result = 1;
    let three = BigInt::from(3);
    let five = BigInt::from(5);
    let eight = BigInt::from(8);
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = &n % &eight;
            if r == three || r == five {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32) == three && (&n % 4u32) == three {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

fn is_perfect_square(n: &BigUint) -> bool {
    let r = n.sqrt();
    &r * &r == *n
}

/// Strong Lucas test with Selfridge parameters `P = 1, Q = (1 - D)/4`.
fn strong_lucas_probable_prime(n: &BigUint) -> bool {
    if is_perfect_square(n) {
        return false;
    }
    let mut d = BigInt::from(5);
    loop {
        match jacobi(&d, n) {
            -1 => break,
            0 => {
                if d.magnitude() != n {
                    return false;
                }
            }
            _ => {}
        }
        d = if d.sign() == Sign::Plus {
            -(d + 2i32)
        } else {
            -(d - 2i32)
        };
    }
    let nn = BigInt::from(n.clone());
    let q: BigInt = (BigInt::one() - &d) / 4i32;
    let delta: BigInt = &nn + 1u32;
    let s = delta.trailing_zeros().unwrap_or(0);
    let k = &delta >> s;
    // walk the bits of k: U_{2m} = U V, V_{2m} = V^2 - 2Q^m
    let two_inv: BigInt = (&nn + 1u32) / 2u32;
    let mut u = BigInt::one();
    let mut v = BigInt::one();
    let mut qk = q.mod_floor(&nn);
    let bits = k.bits();
    for i in (0..bits - 1).rev() {
        u = (&u * &v).mod_floor(&nn);
        v = (&v * &v - &qk * 2i32).mod_floor(&nn);
        qk = (&qk * &qk).mod_floor(&nn);
        if k.bit(i) {
            let nu = ((&u + &v) * &two_inv).mod_floor(&nn);
            let nv = ((&d * &u + &v) * &two_inv).mod_floor(&nn);
            u = nu;
            v = nv;
            qk = (&qk * &q).mod_floor(&nn);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v - &qk * 2i32).mod_floor(&nn);
        if v.is_zero() {
            return true;
        }
        qk = (&qk * &qk).mod_floor(&nn);
    }
    false
}

/// If `n = r^k` with `k >= 2`, the smallest such root and its exponent.
fn perfect_power_root(n: &BigUint) -> Option<(BigUint, u32)> {
    let bits = n.bits() as u32;
    for k in (2..=bits).rev() {
        let r = n.nth_root(k);
        if r > BigUint::one() && r.pow(k) == *n {
            return Some((r, k));
        }
    }
    None
}

/// Brent's cycle finding with batched gcds. Consumes from `budget`.
/// Sequence steps between gcds; each step of `x -> x^2 + c` costs one unit of budget.
const GCD_BATCH: u64 = 1024;

fn pollard_brent(n: &BigUint, budget: &mut u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    if let Some(small) = n.to_u64() {
        return pollard_brent_u64(small, budget).map(BigUint::from);
    }
    match n.bits() {
        0..=128 => return pollard_brent_mont::<2>(n, budget),
        129..=192 => return pollard_brent_mont::<3>(n, budget),
        193..=256 => return pollard_brent_mont::<4>(n, budget),
        _ => {}
    }
    let one = BigUint::one();
    for c in 1u32.. {
        if *budget == 0 {
            return None;
        }
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut g = one.clone();
        let mut q = one.clone();
        let mut r: u64 = 1;
        while g.is_one() {
            x = y.clone();
            let warm = r.min(*budget);
            for _ in 0..warm {
                y = f(&y);
            }
            *budget -= warm;
            if *budget == 0 {
                return None;
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let steps = GCD_BATCH.min(r - k);
                for _ in 0..steps {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                *budget = budget.saturating_sub(steps);
                g = q.gcd(n);
                k += steps;
                if *budget == 0 && g.is_one() {
                    return None;
                }
            }
            r *= 2;
        }
        if &g == n {
            // backtrack one step at a time
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return Some(g);
        }
    }
    None
}

fn pollard_brent_mont<const L: usize>(n: &BigUint, budget: &mut u64) -> Option<BigUint> {
    let mont = Montgomery::<L>::new(n)?;
    for c in 1u32.. {
        if *budget == 0 {
            return None;
        }
        let c = mont.to_mont(&BigUint::from(c));
        let f = |x: &Limbs<L>| mont.add(&mont.mul(x, x), &c);
        let mut y = mont.to_mont(&BigUint::from(2u32));
        let mut x = y;
        let mut ys = y;
        let mut q = mont.to_mont(&BigUint::one());
        let mut g = BigUint::one();
        let mut r: u64 = 1;
        while g.is_one() {
            x = y;
            let warm = r.min(*budget);
            for _ in 0..warm {
                y = f(&y);
            }
            *budget -= warm;
            if *budget == 0 {
                return None;
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y;
                let steps = GCD_BATCH.min(r - k);
                for _ in 0..steps {
                    y = f(&y);
                    let d = mont.abs_diff(&x, &y);
                    if !is_zero(&d) {
                        q = mont.mul(&q, &d);
                    } else {
                        q = d;
                    }
                }
                *budget = budget.saturating_sub(steps);
                g = from_limbs(&q).gcd(n);
                k += steps;
                if *budget == 0 && g.is_one() {
                    return None;
                }
            }
            r *= 2;
        }
        if &g == n || g.is_zero() {
            loop {
                ys = f(&ys);
                g = from_limbs(&mont.abs_diff(&x, &ys)).gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n && !g.is_zero() {
            return Some(g);
        }
    }
    None
}

fn pollard_brent_u64(n: u64, budget: &mut u64) -> Option<u64> {
    use crate::arith::mul_mod_u64;
    if n % 2 == 0 {
        return Some(2);
    }
    for c in 1u64.. {
        if *budget == 0 {
            return None;
        }
        let f = |x: u64| (mul_mod_u64(x, x, n) + c) % n;
        let (mut x, mut y, mut ys) = (2u64, 2u64, 2u64);
        let (mut g, mut q, mut r) = (1u64, 1u64, 1u64);
        while g == 1 {
            x = y;
            let warm = r.min(*budget);
            for _ in 0..warm {
                y = f(y);
            }
            *budget -= warm;
            if *budget == 0 {
                return None;
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                let steps = GCD_BATCH.min(r - k);
                for _ in 0..steps {
                    y = f(y);
                    q = mul_mod_u64(q, x.abs_diff(y), n);
                }
                *budget = budget.saturating_sub(steps);
                g = num_integer::gcd(q, n);
                k += steps;
                if *budget == 0 && g == 1 {
                    return None;
                }
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = num_integer::gcd(x.abs_diff(ys), n);
                if g != 1 {
                    break;
                }
            }
        }
        if g != n {
            return Some(g);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn conventions_for_zero_and_units() {
        for n in [0, 1, -1] {
            assert_eq!(largest_prime_factor(&b(n)).unwrap(), b(1));
        }
    }

    #[test]
    fn small_examples() {
        let f = factorize(&b(-1472)).unwrap();
        assert_eq!(f.sign, -1);
        assert_eq!(f.factors, [(b(2), 6), (b(23), 1)].into_iter().collect());
        assert_eq!(f.largest_prime(), b(23));
        let f = factorize(&b(252)).unwrap();
        assert_eq!(f.factors, [(b(2), 2), (b(3), 2), (b(7), 1)].into_iter().collect());
    }

    #[test]
    fn splits_semiprime_beyond_trial_bound() {
        // two primes above the trial bound, product ~ 1e26
        let p: BigInt = "10000000000037".parse().unwrap();
        let q: BigInt = "1000000000039".parse().unwrap();
        let f = factorize(&(&p * &q)).unwrap();
        assert_eq!(f.factors, [(q.clone(), 1), (p.clone(), 1)].into_iter().collect());
        let sq = factorize(&(&p * &p * 5)).unwrap();
        assert_eq!(sq.factors[&p], 2);
    }

    #[test]
    fn primality_across_regimes() {
        let mersenne_127: BigUint = (BigUint::one() << 127) - 1u32;
        assert!(is_probable_prime(&mersenne_127));
        assert!(!is_probable_prime(&(&mersenne_127 * 3u32)));
        // strong pseudoprime to bases 2..37 but not 41
        let spsp: BigUint = "3825123056546413051".parse().unwrap();
        assert!(!is_probable_prime(&spsp));
        let carmichael = BigUint::from(561u32);
        assert!(!is_probable_prime(&carmichael));
        assert!(!strong_lucas_probable_prime(&BigUint::from(5459u32 * 5461u32)));
        for p in [5u32, 7, 11, 13, 101, 1009] {
            assert!(strong_lucas_probable_prime(&BigUint::from(p)));
        }
    }

    #[test]
    fn budget_exhaustion_reports_cofactor() {
        let p: BigInt = "1000000000000000003".parse().unwrap();
        let q: BigInt = "1000000000000000009".parse().unwrap();
        let cfg = FactorConfig {
            trial_bound: 1000,
            rho_iterations: 10,
        };
        match factorize_with(&(&p * &q), &cfg) {
            Err(Error::PartialFactorization { cofactor }) => assert_eq!(cofactor, &p * &q),
            other => panic!("expected partial factorization, got {other:?}"),
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn round_trip(hi in 0u64..u64::MAX, lo in 0u64..u64::MAX, neg in any::<bool>()) {
            let mut n: BigInt = (BigInt::from(hi % 1_000_000_000_000) << 64u32) + BigInt::from(lo);
            if neg { n = -n; }
            let f = factorize(&n).unwrap();
            prop_assert_eq!(f.reconstruct(), n);
            for p in f.factors.keys() {
                prop_assert!(is_prime(p));
            }
        }
    }
}
