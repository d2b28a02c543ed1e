//! Fixed-width Montgomery arithmetic for odd moduli of up to `64 * L` bits.
//! Used by Pollard rho, where heap-allocating big integers dominate the cost.

use num_bigint::BigUint;

#[derive(Debug, Clone)]
pub(crate) struct Montgomery<const L: usize> {
    n: [u64; L],
    /// `-n^{-1} mod 2^64`
    n_inv: u64,
    /// `R^2 mod n`, `R = 2^{64 L}`
    r2: [u64; L],
}

pub(crate) type Limbs<const L: usize> = [u64; L];

impl<const L: usize> Montgomery<L> {
    /// `None` when `n` is even or too wide.
    pub fn new(n: &BigUint) -> Option<Self> {
        if n.bits() > 64 * L as u64 || !n.bit(0) {
            return None;
        }
        let limbs = to_limbs::<L>(n)?;
        // Newton iteration for the inverse of n[0] mod 2^64
        let mut inv: u64 = 1;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(limbs[0].wrapping_mul(inv)));
        }
        let r2 = (BigUint::from(1u32) << (128 * L)) % n;
        Some(Montgomery {
            n: limbs,
            n_inv: inv.wrapping_neg(),
            r2: to_limbs::<L>(&r2)?,
        })
    }

    pub fn to_mont(&self, x: &BigUint) -> Limbs<L> {
        let x = to_limbs::<L>(&(x % from_limbs(&self.n))).expect("reduced value fits");
        self.mul(&x, &self.r2)
    }

    #[cfg(test)]
    pub fn from_mont(&self, x: &Limbs<L>) -> BigUint {
        let mut one = [0u64; L];
        one[0] = 1;
        from_limbs(&self.mul(x, &one))
    }

    /// Coarsely Integrated Operand Scanning product `a b R^{-1} mod n`.
    #[inline]
    pub fn mul(&self, a: &Limbs<L>, b: &Limbs<L>) -> Limbs<L> {
        // t has L + 2 words; stored as L words plus two carries
        let mut t = [0u64; L];
        let mut t_hi: u64 = 0;
        let mut t_hi2: u64;
        for i in 0..L {
            let mut carry: u64 = 0;
            for j in 0..L {
                let s = t[j] as u128 + a[j] as u128 * b[i] as u128 + carry as u128;
                t[j] = s as u64;
                carry = (s >> 64) as u64;
            }
            let s = t_hi as u128 + carry as u128;
            t_hi = s as u64;
            t_hi2 = (s >> 64) as u64;

            let m = t[0].wrapping_mul(self.n_inv);
            let s = t[0] as u128 + m as u128 * self.n[0] as u128;
            let mut carry = (s >> 64) as u64;
            for j in 1..L {
                let s = t[j] as u128 + m as u128 * self.n[j] as u128 + carry as u128;
                t[j - 1] = s as u64;
                carry = (s >> 64) as u64;
            }
            let s = t_hi as u128 + carry as u128;
            t[L - 1] = s as u64;
            t_hi = t_hi2 + (s >> 64) as u64;
        }
        if t_hi != 0 || !less_than(&t, &self.n) {
            sub_in_place(&mut t, &self.n);
        }
        t
    }

    #[inline]
    pub fn add(&self, a: &Limbs<L>, b: &Limbs<L>) -> Limbs<L> {
        let mut out = [0u64; L];
        let mut carry = 0u64;
        for i in 0..L {
            let s = a[i] as u128 + b[i] as u128 + carry as u128;
            out[i] = s as u64;
            carry = (s >> 64) as u64;
        }
        if carry != 0 || !less_than(&out, &self.n) {
            sub_in_place(&mut out, &self.n);
        }
        out
    }

    /// `|a - b|` as plain limbs (both reduced).
    #[inline]
    pub fn abs_diff(&self, a: &Limbs<L>, b: &Limbs<L>) -> Limbs<L> {
        let (mut hi, lo) = if less_than(a, b) { (*b, a) } else { (*a, b) };
        sub_in_place(&mut hi, lo);
        hi
    }
}

#[inline]
fn less_than<const L: usize>(a: &[u64; L], b: &[u64; L]) -> bool {
    for i in (0..L).rev() {
        if a[i] != b[i] {
            return a[i] < b[i];
        }
    }
    false
}

#[inline]
fn sub_in_place<const L: usize>(a: &mut [u64; L], b: &[u64; L]) {
    let mut borrow = 0u64;
    for i in 0..L {
        let (d1, o1) = a[i].overflowing_sub(b[i]);
        let (d2, o2) = d1.overflowing_sub(borrow);
        a[i] = d2;
        borrow = u64::from(o1 || o2);
    }
}

pub(crate) fn to_limbs<const L: usize>(x: &BigUint) -> Option<[u64; L]> {
    let digits = x.to_u64_digits();
    if digits.len() > L {
        return None;
    }
    let mut out = [0u64; L];
    out[..digits.len()].copy_from_slice(&digits);
    Some(out)
}

pub(crate) fn from_limbs<const L: usize>(x: &[u64; L]) -> BigUint {
    let mut bytes = Vec::with_capacity(8 * L);
    for w in x {
        bytes.extend_from_slice(&w.to_le_bytes());
    }
    BigUint::from_bytes_le(&bytes)
}

pub(crate) fn is_zero<const L: usize>(x: &[u64; L]) -> bool {
    x.iter().all(|&w| w == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check<const L: usize>(n: BigUint, a: BigUint, b: BigUint) {
        let m = Montgomery::<L>::new(&n).unwrap();
        let (am, bm) = (m.to_mont(&a), m.to_mont(&b));
        assert_eq!(m.from_mont(&m.mul(&am, &bm)), (&a * &b) % &n);
        assert_eq!(m.from_mont(&m.add(&am, &bm)), (&a + &b) % &n);
    }

    proptest! {
        #[test]
        fn matches_biguint(n in prop::collection::vec(any::<u64>(), 1..5),
                           a in prop::collection::vec(any::<u64>(), 1..5),
                           b in prop::collection::vec(any::<u64>(), 1..5)) {
            let mut n = BigUint::new(n.iter().flat_map(|w| [*w as u32, (*w >> 32) as u32]).collect());
            if n < BigUint::from(3u32) { n = BigUint::from(3u32); }
            n.set_bit(0, true);
            let a = BigUint::new(a.iter().map(|w| *w as u32).collect());
            let b = BigUint::new(b.iter().flat_map(|w| [*w as u32, (*w >> 32) as u32]).collect());
            match n.bits() {
                0..=64 => check::<1>(n, a, b),
                65..=128 => check::<2>(n, a, b),
                129..=192 => check::<3>(n, a, b),
                _ => check::<4>(n, a, b),
            }
        }
    }

    #[test]
    fn rejects_even_and_wide() {
        assert!(Montgomery::<2>::new(&BigUint::from(10u32)).is_none());
        assert!(Montgomery::<1>::new(&(BigUint::from(1u32) << 70)).is_none());
    }
}
