//! Commutative rings `Z` and `Z/mZ`, square matrices over them, and the
//! symmetric-power map `Sym^n : GL_2(R) -> GL_{n+1}(R)`.
//!
//! `Sym^n(A)` is built literally from orbit sums: with `r_j` the vector
//! `(1,..,1,2,..,2)` holding `n-j+1` ones, the entry `c_ij` is the sum over
//! every rearrangement `s` of `r_j` of `a_{t_1 s_1} ... a_{t_n s_n}`, where
//! `t = r_i`. The basis is unnormalized, so off-diagonal entries carry
//! binomial multiplicities (`2 a11 a12` in `Sym^2`).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::{eval_poly, f_poly};
use crate::error::{Error, Result};

/// Largest tensor degree `sym_pow` accepts; orbit enumeration is `2^n`.
pub const MAX_SYM_DEGREE: u32 = 32;

/// Which ring the entries live in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Integers,
    ModM(BigInt),
}

impl RingDescriptor {
    pub fn integers() -> Self {
        RingDescriptor::Integers
    }

    pub fn mod_m(m: impl Into<BigInt>) -> Result<Self> {
        let m = m.into();
        if m < BigInt::from(2) {
            return Err(Error::InvalidArgument(format!("modulus must be >= 2, got {m}")));
        }
        Ok(RingDescriptor::ModM(m))
    }

    pub fn modulus(&self) -> Option<&BigInt> {
        match self {
            RingDescriptor::Integers => None,
            RingDescriptor::ModM(m) => Some(m),
        }
    }

    /// Canonical representative; `[0, m)` over `Z/mZ`.
    pub fn reduce(&self, x: BigInt) -> BigInt {
        match self {
            RingDescriptor::Integers => x,
            RingDescriptor::ModM(m) => x.mod_floor(m),
        }
    }

    pub fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    pub fn one(&self) -> BigInt {
        self.reduce(BigInt::one())
    }

    pub fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &BigInt) -> BigInt {
        self.reduce(-a)
    }

    pub fn pow(&self, a: &BigInt, exp: u64) -> BigInt {
        match self {
            RingDescriptor::Integers => num_traits::pow(a.clone(), exp as usize),
            RingDescriptor::ModM(m) => a.modpow(&BigInt::from(exp), m),
        }
    }

    pub fn eq(&self, a: &BigInt, b: &BigInt) -> bool {
        self.reduce(a.clone()) == self.reduce(b.clone())
    }

    pub fn is_unit(&self, a: &BigInt) -> bool {
        match self {
            RingDescriptor::Integers => a.abs().is_one(),
            RingDescriptor::ModM(m) => a.gcd(m).is_one(),
        }
    }

    /// Every element of a finite ring, in canonical order.
    pub fn elements(&self) -> Option<Vec<BigInt>> {
        let m = self.modulus()?;
        let m = u64::try_from(m).ok()?;
        Some((0..m).map(BigInt::from).collect())
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => write!(f, "Z"),
            RingDescriptor::ModM(m) => write!(f, "Z/{m}Z"),
        }
    }
}

/// Square matrix over a [`RingDescriptor`], entries stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingMatrix {
    ring: RingDescriptor,
    dim: usize,
    entries: Vec<BigInt>,
}

impl RingMatrix {
    pub fn new(ring: RingDescriptor, dim: usize, entries: Vec<BigInt>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("matrix dimension must be positive".into()));
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {dim}x{dim} matrix",
                entries.len()
            )));
        }
        let entries = entries.into_iter().map(|e| ring.reduce(e)).collect();
        Ok(RingMatrix { ring, dim, entries })
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(ring: RingDescriptor, rows: &[&[T]]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch("rows must form a square".into()));
        }
        let entries = rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect();
        Self::new(ring, dim, entries)
    }

    pub fn identity(ring: RingDescriptor, dim: usize) -> Self {
        let mut entries = vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = ring.one();
        }
        RingMatrix { ring, dim, entries }
    }

    pub fn scalar(ring: RingDescriptor, dim: usize, lambda: impl Into<BigInt>) -> Self {
        let lambda = ring.reduce(lambda.into());
        let mut m = Self::identity(ring, dim);
        for i in 0..dim {
            m.entries[i * dim + i] = lambda.clone();
        }
        m
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Zero-based entry access.
    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn mul(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.ring != other.ring || self.dim != other.dim {
            return Err(Error::DimensionMismatch(
                "matrix product needs equal ring and size".into(),
            ));
        }
        let n = self.dim;
        let mut out = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * other.get(k, j);
                }
            }
        }
        RingMatrix::new(self.ring.clone(), n, out)
    }

    pub fn trace(&self) -> BigInt {
        let t = (0..self.dim).map(|i| self.get(i, i)).sum();
        self.ring.reduce(t)
    }

    /// Determinant by fraction-free (Bareiss) elimination over `Z`, reduced
    /// into the ring afterwards.
    pub fn det(&self) -> BigInt {
        self.ring.reduce(bareiss_det(self.entries.clone(), self.dim))
    }

    pub fn is_invertible(&self) -> bool {
        self.ring.is_unit(&self.det())
    }

    pub fn is_identity(&self) -> bool {
        *self == RingMatrix::identity(self.ring.clone(), self.dim)
    }

    fn require_invertible_2x2(&self) -> Result<()> {
        if self.dim != 2 {
            return Err(Error::DimensionMismatch(format!("expected 2x2, got {0}x{0}", self.dim)));
        }
        if !self.is_invertible() {
            return Err(Error::SingularMatrix {
                ring: self.ring.to_string(),
                det: self.det(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

pub(crate) fn bareiss_det(mut a: Vec<BigInt>, n: usize) -> BigInt {
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k * n + k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for c in 0..n {
                a.swap(k * n + c, swap * n + c);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                a[i * n + j] = v / &prev;
            }
        }
        prev = a[k * n + k].clone();
    }
    sign * &a[n * n - 1]
}

/// The orbit of `r_j` under coordinate permutations: all vectors in
/// `{1,2}^n` with exactly `j-1` twos (`j` is one-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiIndexOrbit {
    pub n: u32,
    pub j: u32,
    pub members: Vec<Vec<u8>>,
}

impl MultiIndexOrbit {
    pub fn new(n: u32, j: u32) -> Result<Self> {
        if n == 0 || j == 0 || j > n + 1 {
            return Err(Error::InvalidArgument(format!(
                "orbit index j = {j} outside 1..={}",
                n + 1
            )));
        }
        if n > MAX_SYM_DEGREE {
            return Err(Error::InvalidArgument(format!(
                "tensor degree {n} exceeds {MAX_SYM_DEGREE}"
            )));
        }
        let twos = j - 1;
        let members = (0u64..1 << n)
            .filter(|mask| mask.count_ones() == twos)
            .map(|mask| {
                (0..n)
                    .map(|bit| if mask >> (n - 1 - bit) & 1 == 1 { 2 } else { 1 })
                    .collect()
            })
            .collect();
        Ok(MultiIndexOrbit { n, j, members })
    }

    /// The representative `r_j = (1,..,1,2,..,2)`.
    pub fn representative(&self) -> Vec<u8> {
        let ones = (self.n + 1 - self.j) as usize;
        (0..self.n as usize).map(|k| if k < ones { 1 } else { 2 }).collect()
    }
}

fn check_degree(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("symmetric power degree must be >= 1".into()));
    }
    if n > MAX_SYM_DEGREE {
        return Err(Error::InvalidArgument(format!(
            "degree {n} exceeds supported {MAX_SYM_DEGREE}"
        )));
    }
    Ok(())
}

/// `Sym^n(A)` for an invertible 2x2 matrix, by literal orbit sums.
pub fn sym_pow(a: &RingMatrix, n: u32) -> Result<RingMatrix> {
    check_degree(n)?;
    a.require_invertible_2x2()?;
    let ring = a.ring();
    let dim = n as usize + 1;
    let mut out = vec![BigInt::zero(); dim * dim];
    for i in 0..dim {
        // row multi-index t = r_i: first n-i entries are 1 (zero-based i)
        let ones = n as usize - i;
        let row_sel: Vec<usize> = (0..n as usize).map(|k| if k < ones { 0 } else { 1 }).collect();
        let mut buckets = vec![BigInt::zero(); dim];
        orbit_accumulate(a, &row_sel, 0, 0, BigInt::one(), &mut buckets);
        for (j, v) in buckets.into_iter().enumerate() {
            out[i * dim + j] = ring.reduce(v);
        }
    }
    RingMatrix::new(ring.clone(), dim, out)
}

/// Depth-first walk over `s in {1,2}^n`; the running product of
/// `a_{t_k s_k}` lands in the bucket indexed by the number of twos in `s`.
fn orbit_accumulate(
    a: &RingMatrix,
    row_sel: &[usize],
    depth: usize,
    twos: usize,
    prod: BigInt,
    buckets: &mut [BigInt],
) {
    if depth == row_sel.len() {
        buckets[twos] += prod;
        return;
    }
    let t = row_sel[depth];
    let ring = a.ring();
    for s in 0..2 {
        let e = a.get(t, s);
        if e.is_zero() {
            continue;
        }
        let next = ring.mul(&prod, e);
        if next.is_zero() {
            continue;
        }
        orbit_accumulate(a, row_sel, depth + 1, twos + s, next, buckets);
    }
}

/// `tr(A)^{e} F_{n+1}(tr(A)^2, det A)` with `e = 1` iff `n+1` is even.
pub fn sym_pow_trace(a: &RingMatrix, n: u32) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::InvalidArgument("trace formula needs n >= 2".into()));
    }
    check_degree(n)?;
    a.require_invertible_2x2()?;
    let ring = a.ring();
    let tr = a.trace();
    let det = a.det();
    let f = f_poly(n as u64 + 1)?;
    let value = ring.reduce(eval_poly(&f, &(&tr * &tr), &det));
    if (n + 1) % 2 == 0 {
        Ok(ring.mul(&tr, &value))
    } else {
        Ok(value)
    }
}

/// True iff `Sym^n(A)` is the identity.
pub fn sym_pow_kernel_test(a: &RingMatrix, n: u32) -> Result<bool> {
    Ok(sym_pow(a, n)?.is_identity())
}

/// The scalar characterization of the kernel: `A = lambda I` with `lambda^n = 1`.
pub fn is_scalar_nth_root(a: &RingMatrix, n: u32) -> bool {
    if a.dim() != 2 || !a.get(0, 1).is_zero() || !a.get(1, 0).is_zero() || a.get(0, 0) != a.get(1, 1) {
        return false;
    }
    let ring = a.ring();
    ring.pow(a.get(0, 0), n as u64) == ring.one()
}

/// All of `GL_2(Z/mZ)` in lexicographic entry order.
pub fn gl2_elements(ring: &RingDescriptor) -> Result<Vec<RingMatrix>> {
    let elems = ring
        .elements()
        .ok_or_else(|| Error::InvalidArgument("GL_2 enumeration needs a finite ring".into()))?;
    let mut out = Vec::new();
    for a in &elems {
        for b in &elems {
            for c in &elems {
                for d in &elems {
                    let m = RingMatrix::new(ring.clone(), 2, vec![a.clone(), b.clone(), c.clone(), d.clone()])?;
                    if m.is_invertible() {
                        out.push(m);
                    }
                }
            }
        }
    }
    Ok(out)
}
