//! Fourier coefficients of normalized Hecke eigenforms at prime powers.
//!
//! `tau(n)` comes from the series `X prod (1 - X^n)^24`. The product is the
//! eighth power of Jacobi's `prod (1 - X^n)^3 = sum (-1)^j (2j+1) X^{j(j+1)/2}`,
//! so it is reached by seven multiplications by a sparse series. Coefficients
//! are accumulated with wrapping `i128` arithmetic: the result is exact as long
//! as every `|tau(n)| < 2^127`, which Deligne's bound guarantees for
//! `n <= 2^21`. Longer series add a residue modulo the Mersenne prime
//! `2^61 - 1` and recombine by CRT.
//!
//! For other forms the coefficients `a_f(p)` are ingested from a CSV table;
//! `a_f(p^m)` then follows from `x^2 - a_f(p) x + p^{k-1}`.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{is_prime_u64, pow_big, primes_le};
use crate::error::{Error, Result};

/// Default ceiling on `tau_series` length.
pub const DEFAULT_SERIES_CEILING: u64 = 10_000_000;

const WRAP_SAFE_LIMIT: u64 = 1 << 21;
const MERSENNE_61: u64 = (1 << 61) - 1;

/// `tau(1..=limit)` under the default memory ceiling.
pub fn tau_series(limit: u64) -> Result<Vec<BigInt>> {
    tau_series_with_ceiling(limit, DEFAULT_SERIES_CEILING)
}

pub fn tau_series_with_ceiling(limit: u64, ceiling: u64) -> Result<Vec<BigInt>> {
    Ok(tau_series_raw(limit, ceiling)?.to_bigints())
}

/// Compact storage for a computed series.
#[derive(Debug, Clone)]
pub enum TauValues {
    /// Exact values, index `n - 1`.
    Small(Vec<i128>),
    Large(Vec<BigInt>),
}

impl TauValues {
    pub fn len(&self) -> usize {
        match self {
            TauValues::Small(v) => v.len(),
            TauValues::Large(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `tau(n)`, one-based.
    pub fn get(&self, n: u64) -> Option<BigInt> {
        let i = usize::try_from(n.checked_sub(1)?).ok()?;
        match self {
            TauValues::Small(v) => v.get(i).map(|&x| BigInt::from(x)),
            TauValues::Large(v) => v.get(i).cloned(),
        }
    }

    pub fn to_bigints(&self) -> Vec<BigInt> {
        match self {
            TauValues::Small(v) => v.iter().map(|&x| BigInt::from(x)).collect(),
            TauValues::Large(v) => v.clone(),
        }
    }
}

fn jacobi_cube_terms(len: usize) -> Vec<(usize, i64)> {
    let mut terms = Vec::new();
    let mut j = 0usize;
    loop {
        let e = j * (j + 1) / 2;
        if e >= len {
            break;
        }
        let c = (2 * j + 1) as i64;
        terms.push((e, if j % 2 == 0 { c } else { -c }));
        j += 1;
    }
    terms
}

pub fn tau_series_raw(limit: u64, ceiling: u64) -> Result<TauValues> {
    if limit == 0 {
        return Err(Error::InvalidArgument("series limit must be >= 1".into()));
    }
    if limit > ceiling {
        return Err(Error::BudgetExceeded {
            what: "tau series length".into(),
            required: limit as u128,
            cap: ceiling as u128,
        });
    }
    let len = limit as usize;
    let terms = jacobi_cube_terms(len);

    let mut wrapped = vec![0i128; len];
    for &(e, c) in &terms {
        wrapped[e] = c as i128;
    }
    for _ in 0..7 {
        let mut next = vec![0i128; len];
        for &(e, c) in &terms {
            let c = c as i128;
            for (dst, src) in next[e..].iter_mut().zip(&wrapped[..len - e]) {
                *dst = dst.wrapping_add(src.wrapping_mul(c));
            }
        }
        wrapped = next;
    }
    if limit <= WRAP_SAFE_LIMIT {
        return Ok(TauValues::Small(wrapped));
    }

    let p = MERSENNE_61 as i128;
    let mut residues = vec![0i128; len];
    for &(e, c) in &terms {
        residues[e] = (c as i128).rem_euclid(p);
    }
    for _ in 0..7 {
        let mut next = vec![0i128; len];
        for &(e, c) in &terms {
            let c = c as i128;
            for (dst, src) in next[e..].iter_mut().zip(&residues[..len - e]) {
                *dst = (*dst + src * c).rem_euclid(p);
            }
        }
        residues = next;
    }
    let m1 = BigInt::one() << 128u32;
    let m2 = BigInt::from(MERSENNE_61);
    let modulus = &m1 * &m2;
    let half = &modulus >> 1u32;
    // x = a + m1 * ((b - a) * m1^{-1} mod m2)
    let m1_inv = m1.modpow(&(&m2 - 2u32), &m2);
    let values = wrapped
        .iter()
        .zip(&residues)
        .map(|(&a, &b)| {
            let a = BigInt::from(a as u128);
            let t = ((BigInt::from(b) - &a) * &m1_inv).mod_floor(&m2);
            let x = a + &m1 * t;
            if x > half {
                x - &modulus
            } else {
                x
            }
        })
        .collect();
    Ok(TauValues::Large(values))
}

static DELTA_CACHE: OnceLock<RwLock<Arc<TauValues>>> = OnceLock::new();

/// Shared series for the built-in discriminant form, grown on demand.
pub fn delta_values(limit: u64) -> Result<Arc<TauValues>> {
    let cell = DELTA_CACHE.get_or_init(|| RwLock::new(Arc::new(TauValues::Small(Vec::new()))));
    {
        let guard = cell.read().expect("tau cache poisoned");
        if guard.len() as u64 >= limit {
            return Ok(Arc::clone(&guard));
        }
    }
    let mut guard = cell.write().expect("tau cache poisoned");
    if (guard.len() as u64) < limit {
        let target = limit.max(1 << 12).min(DEFAULT_SERIES_CEILING.max(limit));
        *guard = Arc::new(tau_series_raw(target, DEFAULT_SERIES_CEILING)?);
    }
    Ok(Arc::clone(&guard))
}

/// `tau(n)` for a single `n`.
pub fn tau(n: u64) -> Result<BigInt> {
    let values = delta_values(n)?;
    values
        .get(n)
        .ok_or_else(|| Error::InvalidArgument(format!("tau({n}) undefined")))
}

/// Smallest `n <= limit` with `|tau(n)|` prime.
pub fn first_prime_tau(limit: u64) -> Result<Option<u64>> {
    let values = delta_values(limit)?;
    for n in 1..=limit {
        let t = values.get(n).expect("in range");
        if crate::factor::is_prime(&t.abs()) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Prime-indexed coefficients of a form, `a_p` for every prime `p <= bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    pub bound: u64,
    pub entries: BTreeMap<u64, BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoefficientSource {
    BuiltinDelta,
    Table {
        path: Option<PathBuf>,
        table: Arc<CoefficientTable>,
    },
}

/// A normalized cuspidal eigenform: weight, level and where `a_p` comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenformSpec {
    pub weight: u32,
    pub level: u64,
    pub source: CoefficientSource,
    pub label: String,
}

impl EigenformSpec {
    /// Ramanujan's `Delta`, weight 12 and level 1.
    pub fn delta() -> Self {
        EigenformSpec {
            weight: 12,
            level: 1,
            source: CoefficientSource::BuiltinDelta,
            label: "Delta".into(),
        }
    }

    pub fn from_table(weight: u32, level: u64, table: CoefficientTable, label: impl Into<String>) -> Result<Self> {
        validate_weight_level(weight, level)?;
        Ok(EigenformSpec {
            weight,
            level,
            source: CoefficientSource::Table {
                path: None,
                table: Arc::new(table),
            },
            label: label.into(),
        })
    }

    /// `p^{k-1}`.
    pub fn char_q(&self, p: u64) -> BigInt {
        pow_big(p, (self.weight - 1) as u64)
    }

    /// Largest prime with a known `a_p` (`None` when unbounded).
    pub fn coefficient_bound(&self) -> Option<u64> {
        match &self.source {
            CoefficientSource::BuiltinDelta => None,
            CoefficientSource::Table { table, .. } => Some(table.bound),
        }
    }

    /// `a_f(p)`; rejects `p | N` and primes beyond the table.
    pub fn ap(&self, p: u64) -> Result<BigInt> {
        if !is_prime_u64(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if self.level % p == 0 {
            return Err(Error::InvalidArgument(format!(
                "p = {p} divides the level {}",
                self.level
            )));
        }
        match &self.source {
            CoefficientSource::BuiltinDelta => tau(p),
            CoefficientSource::Table { table, .. } => table
                .entries
                .get(&p)
                .cloned()
                .ok_or(Error::DataExhausted { p, bound: table.bound }),
        }
    }

    /// `a_p` for every prime `p <= x` not dividing `N * extra`, in order.
    /// Fails with `DataExhausted` at the first prime the table lacks.
    pub fn ap_range(&self, x: u64, extra: u64) -> Result<Vec<(u64, BigInt)>> {
        let values = match self.source {
            CoefficientSource::BuiltinDelta => Some(delta_values(x.max(1))?),
            CoefficientSource::Table { .. } => None,
        };
        let mut out = Vec::new();
        for p in primes_le(x) {
            if self.level % p == 0 || (extra != 0 && extra % p == 0) {
                continue;
            }
            let ap = match &values {
                Some(v) => v.get(p).expect("series covers x"),
                None => self.ap(p)?,
            };
            out.push((p, ap));
        }
        Ok(out)
    }
}

fn validate_weight_level(weight: u32, level: u64) -> Result<()> {
    if weight < 2 || weight % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "weight must be even and >= 2, got {weight}"
        )));
    }
    if level == 0 {
        return Err(Error::InvalidArgument("level must be positive".into()));
    }
    Ok(())
}

/// `a_f(p^m)` from the recursion `a(p^m) = a(p) a(p^{m-1}) - p^{k-1} a(p^{m-2})`.
pub fn coeff_prime_power(f: &EigenformSpec, p: u64, m: u32) -> Result<BigInt> {
    let ap = f.ap(p)?;
    Ok(prime_power_from_ap(&ap, &f.char_q(p), m))
}

/// The recursion itself, from `a(p^0) = 1`, `a(p^1) = a_p`.
pub fn prime_power_from_ap(ap: &BigInt, q: &BigInt, m: u32) -> BigInt {
    let mut prev = BigInt::one();
    if m == 0 {
        return prev;
    }
    let mut cur = ap.clone();
    for _ in 1..m {
        let next = ap * &cur - q * &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// All `a_f(p^0..=p^m)`.
pub fn prime_power_sequence(ap: &BigInt, q: &BigInt, m: u32) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(m as usize + 1);
    out.push(BigInt::one());
    if m == 0 {
        return out;
    }
    out.push(ap.clone());
    for i in 2..=m as usize {
        let next = ap * &out[i - 1] - q * &out[i - 2];
        out.push(next);
    }
    out
}

/// `a_f(p^m) = U_{m+1}(a_p, p^{k-1})` by the Lucas doubling ladder.
pub fn coeff_lucas(f: &EigenformSpec, p: u64, m: u32) -> Result<BigInt> {
    let ap = f.ap(p)?;
    Ok(lucas_u(&ap, &f.char_q(p), m as u64 + 1))
}

/// `U_n(P, Q)` with `U_0 = 0`, `U_1 = 1`, using
/// `U_{2k} = U_k V_k`, `V_{2k} = V_k^2 - 2 Q^k` and
/// `U_{k+1} = (P U_k + V_k)/2`, `V_{k+1} = (D U_k + P V_k)/2`.
pub fn lucas_u(p: &BigInt, q: &BigInt, n: u64) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    let d = p * p - q * 4u32;
    let mut u = BigInt::one();
    let mut v = p.clone();
    let mut qk = q.clone();
    let bits = 64 - n.leading_zeros();
    for i in (0..bits - 1).rev() {
        u = &u * &v;
        v = &v * &v - &qk * 2u32;
        qk = &qk * &qk;
        if (n >> i) & 1 == 1 {
            let nu: BigInt = (p * &u + &v) / 2u32;
            let nv: BigInt = (&d * &u + p * &v) / 2u32;
            u = nu;
            v = nv;
            qk = &qk * q;
        }
    }
    u
}

/// Whether `a_f(p^m)` vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ApnPattern {
    Zero,
    NonZero(BigInt),
}

/// Evaluate `a_f(p^m)` from `a_p`, weight `k` and `p`. With `a_p = 0` the
/// value is zero exactly for odd `m` and `(-p^{k-1})^{m/2}` otherwise.
pub fn check_apn_zero_pattern(p: u64, ap: &BigInt, k: u32, m: u32) -> Result<ApnPattern> {
    if !is_prime_u64(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let q = pow_big(p, (k - 1) as u64);
    let value = if ap.is_zero() {
        if m % 2 == 1 {
            BigInt::zero()
        } else {
            num_traits::pow(-q.clone(), (m / 2) as usize)
        }
    } else {
        prime_power_from_ap(ap, &q, m)
    };
    let check = prime_power_from_ap(ap, &q, m);
    if check != value {
        return Err(Error::IdentityViolation(format!(
            "zero-pattern closed form disagrees with recursion at p = {p}, m = {m}"
        )));
    }
    Ok(if value.is_zero() {
        ApnPattern::Zero
    } else {
        ApnPattern::NonZero(value)
    })
}

/// `|a_f(p^m)| <= (m+1) p^{m(k-1)/2}`, compared after squaring.
pub fn deligne_check(f: &EigenformSpec, p: u64, m: u32) -> Result<bool> {
    let a = coeff_prime_power(f, p, m)?;
    Ok(deligne_holds(&a, p, f.weight, m))
}

pub fn deligne_holds(a: &BigInt, p: u64, k: u32, m: u32) -> bool {
    let lhs = a * a;
    let rhs = BigInt::from((m as u64 + 1).pow(2)) * pow_big(p, m as u64 * (k - 1) as u64);
    lhs <= rhs
}

/// Read a `p,a_p` CSV table (`#` comments, optional header) and validate it.
pub fn ingest_table(path: &Path, weight: u32, level: u64) -> Result<EigenformSpec> {
    let text = std::fs::read_to_string(path)?;
    let table = parse_table(&text, weight, level)?;
    let label = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let mut spec = EigenformSpec::from_table(weight, level, table, label)?;
    if let CoefficientSource::Table { path: p, .. } = &mut spec.source {
        *p = Some(path.to_path_buf());
    }
    Ok(spec)
}

/// Parse table text; see [`ingest_table`].
pub fn parse_table(text: &str, weight: u32, level: u64) -> Result<CoefficientTable> {
    validate_weight_level(weight, level)?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut entries = BTreeMap::new();
    let mut first = true;
    for record in reader.records() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map_or(0, |p| p.line()),
            msg: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.iter().all(str::is_empty) {
            continue;
        }
        if record.len() != 2 {
            return Err(Error::Parse {
                line,
                msg: format!("expected 2 fields, found {}", record.len()),
            });
        }
        let p = record[0].parse::<u64>();
        let ap = record[1].parse::<BigInt>();
        let (p, ap) = match (p, ap) {
            (Ok(p), Ok(ap)) => (p, ap),
            _ if first => {
                first = false;
                continue;
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("cannot parse `{},{}`", &record[0], &record[1]),
                })
            }
        };
        first = false;
        if !is_prime_u64(p) {
            return Err(Error::NonPrimeIndex(p));
        }
        if !deligne_holds(&ap, p, weight, 1) {
            return Err(Error::DeligneViolation { p, ap });
        }
        if entries.insert(p, ap).is_some() {
            return Err(Error::DuplicatePrime(p));
        }
    }
    let bound = entries.keys().next_back().copied().unwrap_or(0);
    for p in primes_le(bound) {
        if level % p != 0 && !entries.contains_key(&p) {
            return Err(Error::MissingPrime(p));
        }
    }
    Ok(CoefficientTable { bound, entries })
}

/// Write `a_p` for every prime `p <= bound` as `p,a_p` CSV with a header.
pub fn export_table<W: Write>(f: &EigenformSpec, bound: u64, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(["p", "a_p"]).map_err(io)?;
    for (p, ap) in f.ap_range(bound, 0)? {
        w.write_record([p.to_string(), ap.to_string()]).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

/// Newline-delimited decimal export of `tau(1..=limit)`.
pub fn write_series<W: Write>(values: &[BigInt], mut out: W) -> Result<()> {
    for v in values {
        writeln!(out, "{v}")?;
    }
    Ok(())
}


#[cfg(test)]
mod timing {
    #[test]
    #[ignore]
    fn series_million() {
        let t = std::time::Instant::now();
        let v = super::tau_series_raw(1_000_000, 10_000_000).unwrap();
        eprintln!(
            "len {} in {:?}; first prime tau {:?}",
            v.len(),
            t.elapsed(),
            super::first_prime_tau(63001)
        );
    }
}
