//! Homogeneous integer polynomials `Phi_n`, `Psi_n` and `F_n`.
//!
//! `Phi_n(X, Y)` is the homogenized cyclotomic polynomial. For `n >= 3` it is
//! palindromic of even degree, so `Phi_n(X, Y) = Psi_n((X+Y)^2, XY)` for a
//! unique integer form `Psi_n` of half the degree; the roots of `Psi_n(T, 1)`
//! are `4 cos^2(pi j / n)` with `gcd(j, n) = 1`. Likewise
//! `(X^n - Y^n)/(X - Y) = (X+Y)^e F_n((X+Y)^2, XY)` with `e = 1` iff `n` is even.
//!
//! Both are built without complex numbers: write the palindromic polynomial
//! in `t = x + 1/x` through the recurrence `x^k + x^-k = t D_{k-1} - D_{k-2}`,
//! then shift `t = T - 2`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{binomial, divisors, euler_phi, valuation};
use crate::error::{Error, Result};
use crate::ring::bareiss_det;

/// Dense univariate integer polynomial, coefficients low-to-high.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnivariatePoly {
    coeffs: Vec<BigInt>,
}

impl UnivariatePoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        UnivariatePoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Exact division by a monic (or unit-led) divisor; errors on a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::InvalidArgument("division by zero polynomial".into()))?;
        let lead = divisor.leading().expect("nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(Error::IdentityViolation("inexact polynomial division".into()))
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let (q, r) = rem[k + dd].div_rem(lead);
            if !r.is_zero() {
                return Err(Error::IdentityViolation("inexact polynomial division".into()));
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::IdentityViolation("inexact polynomial division".into()));
        }
        Ok(Self::new(quot))
    }

    /// `f(x + shift)` by repeated synthetic division.
    pub fn shift(&self, shift: &BigInt) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &c[j + 1] * shift;
                c[j] += t;
            }
        }
        Self::new(c)
    }
}

/// `sum_i c_i X^{m-i} Y^i`; homogeneous by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomogeneousBivariatePoly {
    coeffs: Vec<BigInt>,
}

impl HomogeneousBivariatePoly {
    /// `coeffs[i]` multiplies `X^{m-i} Y^i`, `m = coeffs.len() - 1`.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("a form needs at least one coefficient".into()));
        }
        Ok(HomogeneousBivariatePoly { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        HomogeneousBivariatePoly {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Dehomogenize at `Y = 1`, returned low-to-high in `X`.
    pub fn dehomogenize(&self) -> UnivariatePoly {
        UnivariatePoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Homogenize a univariate polynomial to exactly `degree`.
    pub fn homogenize(f: &UnivariatePoly, degree: usize) -> Result<Self> {
        if f.degree().is_some_and(|d| d > degree) {
            return Err(Error::InvalidArgument("target degree below polynomial degree".into()));
        }
        let mut c = f.coeffs().to_vec();
        c.resize(degree + 1, BigInt::zero());
        c.reverse();
        Self::new(c)
    }

    /// Expand `P((X+Y)^2, XY) * (X+Y)^extra` into a form of degree
    /// `2m + extra`, via binomial coefficients (no evaluation).
    pub fn substitute_square_sum(&self, extra: u32) -> HomogeneousBivariatePoly {
        let m = self.degree();
        let deg = 2 * m + extra as usize;
        let mut out = vec![BigInt::zero(); deg + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // c X^i Y^i (X+Y)^{2(m-i)+extra}
            let power = (2 * (m - i)) as u64 + extra as u64;
            for k in 0..=power {
                let r = i + k as usize;
                out[r] += c * binomial(power, k);
            }
        }
        HomogeneousBivariatePoly { coeffs: out }
    }
}

impl fmt::Display for HomogeneousBivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

static PHI_CACHE: OnceLock<Mutex<HashMap<u64, UnivariatePoly>>> = OnceLock::new();

/// Univariate `Phi_n(x)` by dividing `x^n - 1` by all `Phi_d`, `d | n, d < n`.
pub fn cyclotomic_univariate(n: u64) -> Result<UnivariatePoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclotomic index must be >= 1".into()));
    }
    let cache = PHI_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cache poisoned").get(&n) {
        return Ok(p.clone());
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    let mut acc = UnivariatePoly::new(num);
    for d in divisors(n) {
        if d < n {
            acc = acc.div_exact(&cyclotomic_univariate(d)?)?;
        }
    }
    cache.lock().expect("cache poisoned").insert(n, acc.clone());
    Ok(acc)
}

/// Homogenized `Phi_n(X, Y)` of degree `phi(n)`.
pub fn phi_poly(n: u64) -> Result<HomogeneousBivariatePoly> {
    let f = cyclotomic_univariate(n)?;
    HomogeneousBivariatePoly::homogenize(&f, euler_phi(n) as usize)
}

/// Rewrite a palindromic polynomial of degree `2h` as `g(x + 1/x) x^h`, then
/// shift to `g(T - 2)`. Returns the shifted polynomial, degree `h`.
fn palindromic_reduce(f: &UnivariatePoly) -> Result<UnivariatePoly> {
    let c = f.coeffs();
    let deg = f
        .degree()
        .ok_or_else(|| Error::InvalidArgument("zero polynomial".into()))?;
    if deg % 2 == 1 || (0..=deg).any(|i| c[i] != c[deg - i]) {
        return Err(Error::IdentityViolation(
            "polynomial is not palindromic of even degree".into(),
        ));
    }
    let h = deg / 2;
    // D_0 = 2 (unused), D_1 = t, D_k = t D_{k-1} - D_{k-2}; x^k + x^-k = D_k(t)
    let t = UnivariatePoly::from_i64(&[0, 1]);
    let mut d_prev = UnivariatePoly::from_i64(&[2]);
    let mut d_cur = t.clone();
    let mut g = vec![BigInt::zero(); h + 1];
    g[0] = c[h].clone();
    for k in 1..=h {
        for (i, dc) in d_cur.coeffs().iter().enumerate() {
            g[i] += &c[h + k] * dc;
        }
        let next = sub_poly(&t.mul(&d_cur), &d_prev);
        d_prev = std::mem::replace(&mut d_cur, next);
    }
    Ok(UnivariatePoly::new(g).shift(&BigInt::from(-2)))
}

fn sub_poly(a: &UnivariatePoly, b: &UnivariatePoly) -> UnivariatePoly {
    let len = a.coeffs().len().max(b.coeffs().len());
    let zero = BigInt::zero();
    UnivariatePoly::new(
        (0..len)
            .map(|i| a.coeffs().get(i).unwrap_or(&zero) - b.coeffs().get(i).unwrap_or(&zero))
            .collect(),
    )
}

/// `Psi_n(X, Y)`, degree `phi(n)/2`, with `Phi_n(X,Y) = Psi_n((X+Y)^2, XY)`.
pub fn psi_poly(n: u64) -> Result<HomogeneousBivariatePoly> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("Psi_n is defined for n >= 3, got {n}")));
    }
    let reduced = palindromic_reduce(&cyclotomic_univariate(n)?)?;
    HomogeneousBivariatePoly::homogenize(&reduced, (euler_phi(n) / 2) as usize)
}

/// `F_n(X, Y)`, degree `floor((n-1)/2)`, with
/// `(X^n - Y^n)/(X - Y) = (X+Y)^{e} F_n((X+Y)^2, XY)`, `e = 1` iff `n` even.
pub fn f_poly(n: u64) -> Result<HomogeneousBivariatePoly> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("F_n is defined for n >= 3, got {n}")));
    }
    let mut geom = UnivariatePoly::new(vec![BigInt::one(); n as usize]);
    if n % 2 == 0 {
        geom = geom.div_exact(&UnivariatePoly::from_i64(&[1, 1]))?;
    }
    let reduced = palindromic_reduce(&geom)?;
    HomogeneousBivariatePoly::homogenize(&reduced, ((n - 1) / 2) as usize)
}

/// Parity flag: 1 iff `n` is even.
pub fn epsilon(n: u64) -> u32 {
    u32::from(n % 2 == 0)
}

/// Exact `sum c_i x^{m-i} y^i`.
pub fn eval_poly(p: &HomogeneousBivariatePoly, x: &BigInt, y: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    let mut ypow = BigInt::one();
    for c in p.coeffs() {
        acc = acc * x + c * &ypow;
        ypow *= y;
    }
    acc
}

/// `eval_poly` reduced into `[0, m)`, with every step reduced mod `m`.
pub fn eval_poly_mod(p: &HomogeneousBivariatePoly, x: &BigInt, y: &BigInt, m: &BigInt) -> Result<BigInt> {
    if *m < BigInt::from(2) {
        return Err(Error::InvalidArgument(format!("modulus must be >= 2, got {m}")));
    }
    let x = x.mod_floor(m);
    let y = y.mod_floor(m);
    let mut acc = BigInt::zero();
    let mut ypow = BigInt::one();
    for c in p.coeffs() {
        acc = (acc * &x + c.mod_floor(m) * &ypow).mod_floor(m);
        ypow = (ypow * &y).mod_floor(m);
    }
    Ok(acc)
}

/// A form with coefficients pre-reduced to a machine-word modulus, for hot loops.
#[derive(Debug, Clone)]
pub struct ModForm {
    coeffs: Vec<u64>,
    modulus: u64,
}

impl ModForm {
    pub fn new(p: &HomogeneousBivariatePoly, modulus: u64) -> Self {
        assert!(modulus >= 2 && modulus < (1 << 32), "modulus out of range");
        let m = BigInt::from(modulus);
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| u64::try_from(c.mod_floor(&m)).expect("reduced"))
            .collect();
        ModForm { coeffs, modulus }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    pub fn eval(&self, x: u64, y: u64) -> u64 {
        let m = self.modulus;
        let (x, y) = (x % m, y % m);
        let mut acc = 0u64;
        let mut ypow = 1u64;
        for &c in &self.coeffs {
            acc = (acc * x + c * ypow) % m;
            ypow = ypow * y % m;
        }
        acc
    }
}

/// Formal partial derivatives `(dP/dX, dP/dY)`.
pub fn partial_derivatives(
    p: &HomogeneousBivariatePoly,
) -> Result<(HomogeneousBivariatePoly, HomogeneousBivariatePoly)> {
    let m = p.degree();
    if m == 0 {
        return Err(Error::InvalidArgument("partial derivatives need degree >= 1".into()));
    }
    let c = p.coeffs();
    let dx = (0..m).map(|i| &c[i] * BigInt::from(m - i)).collect();
    let dy = (1..=m).map(|i| &c[i] * BigInt::from(i)).collect();
    Ok((HomogeneousBivariatePoly::new(dx)?, HomogeneousBivariatePoly::new(dy)?))
}

/// Resultant through the Sylvester matrix determinant.
fn resultant(f: &UnivariatePoly, g: &UnivariatePoly) -> BigInt {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return BigInt::zero();
    };
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut s = vec![BigInt::zero(); size * size];
    // rows hold coefficients high-to-low
    for r in 0..n {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            s[r * size + r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            s[(n + r) * size + r + k] = c.clone();
        }
    }
    bareiss_det(s, size)
}

/// Discriminant `(-1)^{d(d-1)/2} Res(f, f') / lc(f)`; 1 for linear input.
pub fn discriminant(f: &UnivariatePoly) -> Result<BigInt> {
    let d = match f.degree() {
        None => return Err(Error::InvalidArgument("discriminant of the zero polynomial".into())),
        Some(0) => return Err(Error::InvalidArgument("discriminant needs degree >= 1".into())),
        Some(1) => return Ok(BigInt::one()),
        Some(d) => d,
    };
    let res = resultant(f, &f.derivative());
    let lead = f.leading().expect("nonzero");
    let (q, r) = res.div_rem(lead);
    if !r.is_zero() {
        return Err(Error::IdentityViolation(
            "resultant not divisible by leading coefficient".into(),
        ));
    }
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -q } else { q })
}

/// Which disjunct of the prime-power law for `Psi_m(u, v)` holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum PsiPrimeClass {
    /// `p = +-1 (mod m)`.
    PlusMinusOneModM,
    /// `p^a | m`, `a` the exact valuation of `Psi_m(u,v)` at `p`.
    DividesM,
}

/// Classify a prime `p` dividing `Psi_m(u, v)` for coprime `u, v`.
///
/// Accepts `m = 5` or `m >= 7`; the exact valuation `a` is computed here.
pub fn classify_psi_prime_power(m: u64, u: &BigInt, v: &BigInt, p: u64) -> Result<PsiPrimeClass> {
    if m != 5 && m < 7 {
        return Err(Error::InvalidArgument(format!("m must be 5 or >= 7, got {m}")));
    }
    if !u.gcd(v).is_one() {
        return Err(Error::InvalidArgument(format!("gcd({u}, {v}) != 1")));
    }
    let value = eval_poly(&psi_poly(m)?, u, v);
    if value.is_zero() {
        return Err(Error::InvalidArgument(format!("Psi_{m}({u}, {v}) = 0")));
    }
    if !(&value % BigInt::from(p)).is_zero() {
        return Err(Error::InvalidArgument(format!(
            "{p} does not divide Psi_{m}({u}, {v}) = {value}"
        )));
    }
    let a = valuation(&value, p);
    let r = p % m;
    if r == 1 || r == m - 1 {
        return Ok(PsiPrimeClass::PlusMinusOneModM);
    }
    let pa = crate::arith::pow_big(p, a as u64);
    if (BigInt::from(m) % pa).is_zero() {
        return Ok(PsiPrimeClass::DividesM);
    }
    Err(Error::IdentityViolation(format!(
        "prime-power law fails: {p}^{a} || Psi_{m}({u}, {v}) = {value}"
    )))
}

/// For each 1-based index `j`, the primes dividing `U_j` but no earlier term.
/// Zero terms get an empty set and contribute no primes.
pub fn primitive_divisor_scan(terms: &[BigInt]) -> Result<BTreeMap<usize, BTreeSet<BigInt>>> {
    if terms.iter().all(Zero::is_zero) {
        return Err(Error::InvalidArgument("all-zero sequence".into()));
    }
    let mut seen: BTreeSet<BigInt> = BTreeSet::new();
    let mut out = BTreeMap::new();
    for (idx, t) in terms.iter().enumerate() {
        let mut fresh = BTreeSet::new();
        if !t.is_zero() {
            let fac = crate::factor::factorize(t)?;
            for p in fac.factors.keys() {
                if !seen.contains(p) {
                    fresh.insert(p.clone());
                }
            }
            seen.extend(fac.factors.keys().cloned());
        }
        out.insert(idx + 1, fresh);
    }
    Ok(out)
}

/// One golden-file line: `<TAG> n: c0 c1 ... cm`.
pub fn dump_line(tag: &str, n: u64, p: &HomogeneousBivariatePoly) -> String {
    format!("{tag} {n}: {p}")
}

/// Parse a line written by [`dump_line`].
pub fn parse_dump_line(line: &str) -> Result<(String, u64, HomogeneousBivariatePoly)> {
    let bad = || Error::Parse {
        line: 0,
        msg: format!("malformed polynomial line: {line}"),
    };
    let (head, body) = line.split_once(':').ok_or_else(bad)?;
    let mut head = head.split_whitespace();
    let tag = head.next().ok_or_else(bad)?.to_string();
    let n = head.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let coeffs = body
        .split_whitespace()
        .map(|c| c.parse::<BigInt>().map_err(|_| bad()))
        .collect::<Result<Vec<_>>>()?;
    Ok((tag, n, HomogeneousBivariatePoly::new(coeffs)?))
}

/// `|Psi_q(0, 1)|`, i.e. the constant term of `Psi_q(X, 1)`.
pub fn psi_constant_term(q: u64) -> Result<BigInt> {
    let p = psi_poly(q)?;
    Ok(p.coeffs().last().expect("nonempty").clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn form(c: &[i64]) -> HomogeneousBivariatePoly {
        HomogeneousBivariatePoly::from_i64(c)
    }

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_poly(1).unwrap(), form(&[1, -1]));
        assert_eq!(phi_poly(3).unwrap(), form(&[1, 1, 1]));
        assert_eq!(phi_poly(12).unwrap(), form(&[1, 0, -1, 0, 1]));
        assert!(phi_poly(0).is_err());
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_poly(3).unwrap(), form(&[1, -1]));
        assert_eq!(psi_poly(5).unwrap(), form(&[1, -3, 1]));
        assert!(psi_poly(2).is_err());
        for q in [3u64, 5, 7, 11, 13, 17, 19, 23] {
            assert_eq!(eval_poly(&psi_poly(q).unwrap(), &b(4), &b(1)), b(q as i64));
        }
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_poly(3).unwrap(), form(&[1, -1]));
        assert_eq!(f_poly(4).unwrap(), form(&[1, -2]));
        for q in [3u64, 5, 7, 11, 13] {
            assert_eq!(f_poly(q).unwrap(), psi_poly(q).unwrap());
        }
        assert!(f_poly(2).is_err());
    }

    #[test]
    fn evaluation() {
        let psi3 = psi_poly(3).unwrap();
        let psi5 = psi_poly(5).unwrap();
        assert_eq!(eval_poly(&psi3, &b(4), &b(1)), b(3));
        assert_eq!(eval_poly(&psi5, &b(4), &b(1)), b(5));
        assert_eq!(eval_poly(&psi5, &b(0), &b(0)), b(0));
        assert_eq!(eval_poly_mod(&psi3, &b(2), &b(4), &b(7)).unwrap(), b(5));
        assert_eq!(eval_poly_mod(&psi5, &b(4), &b(1), &b(5)).unwrap(), b(0));
        assert!(eval_poly_mod(&psi5, &b(4), &b(1), &b(1)).is_err());
        let fast = ModForm::new(&psi5, 11);
        assert_eq!(fast.eval(6, 1), 19 % 11);
    }

    #[test]
    fn partials() {
        let (dx, dy) = partial_derivatives(&psi_poly(3).unwrap()).unwrap();
        assert_eq!((dx, dy), (form(&[1]), form(&[-1])));
        let (dx, dy) = partial_derivatives(&psi_poly(5).unwrap()).unwrap();
        assert_eq!((dx, dy), (form(&[2, -3]), form(&[-3, 2])));
        assert!(partial_derivatives(&form(&[4])).is_err());
    }

    #[test]
    fn discriminants() {
        let psi5 = psi_poly(5).unwrap().dehomogenize();
        assert_eq!(psi5, UnivariatePoly::from_i64(&[1, -3, 1]));
        assert_eq!(discriminant(&psi5).unwrap(), b(5));
        assert_eq!(discriminant(&psi_poly(3).unwrap().dehomogenize()).unwrap(), b(1));
        let d7 = discriminant(&psi_poly(7).unwrap().dehomogenize()).unwrap();
        assert_eq!(d7.abs(), b(49));
        assert_eq!(discriminant(&UnivariatePoly::from_i64(&[-4, 0, 1])).unwrap(), b(16));
        assert!(discriminant(&UnivariatePoly::zero()).is_err());
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify_psi_prime_power(7, &b(4), &b(1), 7).unwrap(),
            PsiPrimeClass::DividesM
        );
        assert_eq!(
            classify_psi_prime_power(5, &b(6), &b(1), 19).unwrap(),
            PsiPrimeClass::PlusMinusOneModM
        );
        assert!(classify_psi_prime_power(6, &b(6), &b(1), 19).is_err());
        assert!(classify_psi_prime_power(5, &b(6), &b(2), 19).is_err());
        assert!(classify_psi_prime_power(5, &b(6), &b(1), 7).is_err());
    }

    #[test]
    fn shift_and_division() {
        let f = UnivariatePoly::from_i64(&[1, 2, 1]);
        assert_eq!(f.shift(&b(-1)), UnivariatePoly::from_i64(&[0, 0, 1]));
        let g = UnivariatePoly::from_i64(&[1, 1]);
        assert_eq!(f.div_exact(&g).unwrap(), g);
        assert!(f.div_exact(&UnivariatePoly::from_i64(&[2, 1])).is_err());
    }

    #[test]
    fn dump_round_trip() {
        let p = psi_poly(7).unwrap();
        let line = dump_line("PSI", 7, &p);
        assert_eq!(line, "PSI 7: 1 -5 6 -1");
        assert_eq!(parse_dump_line(&line).unwrap(), ("PSI".to_string(), 7, p));
    }

    #[test]
    fn primitive_divisors_of_tau_prefix() {
        let scan = primitive_divisor_scan(&[b(1), b(-24), b(252)]).unwrap();
        assert!(scan[&1].is_empty());
        assert_eq!(scan[&2], [b(2), b(3)].into_iter().collect());
        assert_eq!(scan[&3], [b(7)].into_iter().collect());
        let scan = primitive_divisor_scan(&[b(1), b(-24), b(-1472)]).unwrap();
        assert_eq!(scan[&3], [b(23)].into_iter().collect());
        let ones = primitive_divisor_scan(&[b(1), b(1), b(1)]).unwrap();
        assert!(ones.values().all(BTreeSet::is_empty));
        assert!(primitive_divisor_scan(&[b(0), b(0)]).is_err());
    }
}
