//! Trace-zero densities over `GL_2(Z / l^n Z)` and empirical Chebotarev counts.
//!
//! The target set is the image shape `{A : det A in ((Z/l^n)^x)^{k-1}}` and a
//! matrix is counted when `Psi_q(tr(A)^2, det A) = 0` in the ring.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arith::{gcd_u64, is_prime_u64, pow_mod_u64};
use crate::cyclotomic::{eval_poly, psi_poly, ModForm};
use crate::error::{Error, Result};
use crate::hecke::EigenformSpec;

/// Primes where the mod-`l` image of `Delta` is smaller than the generic shape.
pub const DELTA_EXCEPTIONAL_PRIMES: [u64; 6] = [2, 3, 5, 7, 23, 691];

pub const DEFAULT_ENUMERATION_CAP: u128 = 100_000_000;

/// Work limits shared by the enumerators.
#[derive(Debug, Clone, Copy)]
pub struct EnumerationConfig {
    /// Upper bound on `l^{4n}`, the size of the naive search space.
    pub cap: u128,
    /// Worker threads; `0` uses the global rayon pool.
    pub workers: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            cap: DEFAULT_ENUMERATION_CAP,
            workers: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DensityQuery {
    pub q: u64,
    pub ell: u64,
    pub n: u32,
    #[serde(rename = "k")]
    pub weight: u32,
}

impl DensityQuery {
    pub fn new(q: u64, ell: u64, n: u32, weight: u32) -> Result<Self> {
        if q < 3 || !is_prime_u64(q) {
            return Err(Error::InvalidArgument(format!("q must be an odd prime, got {q}")));
        }
        if !is_prime_u64(ell) {
            return Err(Error::InvalidArgument(format!("ell must be prime, got {ell}")));
        }
        if n == 0 {
            return Err(Error::InvalidArgument("exponent n must be >= 1".into()));
        }
        if weight < 2 || weight % 2 == 1 {
            return Err(Error::InvalidArgument(format!(
                "weight must be even and >= 2, got {weight}"
            )));
        }
        Ok(DensityQuery { q, ell, n, weight })
    }

    pub fn modulus(&self) -> Option<u64> {
        self.ell.checked_pow(self.n)
    }

    /// `gcd(l - 1, k - 1)`.
    pub fn d(&self) -> u64 {
        gcd_u64(self.ell - 1, (self.weight - 1) as u64)
    }

    pub fn is_delta_exceptional(&self) -> bool {
        DELTA_EXCEPTIONAL_PRIMES.contains(&self.ell)
    }

    fn check_budget(&self, cap: u128) -> Result<u64> {
        let required = (self.ell as u128).checked_pow(4 * self.n).unwrap_or(u128::MAX);
        if required > cap {
            return Err(Error::BudgetExceeded {
                what: format!("enumeration over GL2(Z/{}^{})", self.ell, self.n),
                required,
                cap,
            });
        }
        self.modulus()
            .filter(|&m| m < 1 << 32)
            .ok_or_else(|| Error::InvalidArgument("modulus too large".into()))
    }
}

/// Matches per conjugacy type, for `n = 1` and odd `l`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassTally {
    pub central: u64,
    pub nonsemisimple: u64,
    pub split_semisimple: u64,
    pub nonsplit_semisimple: u64,
}

impl ClassTally {
    pub fn total(&self) -> u64 {
        self.central + self.nonsemisimple + self.split_semisimple + self.nonsplit_semisimple
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Empirical {
    pub x: u64,
    pub hits: u64,
    pub total: u64,
    pub freq: f64,
    pub sigma: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DensityReport {
    pub query: DensityQuery,
    #[serde(serialize_with = "ser_display")]
    pub match_count: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub group_order: BigInt,
    #[serde(serialize_with = "ser_ratio")]
    pub delta_exact: BigRational,
    #[serde(serialize_with = "ser_opt_ratio")]
    pub closed_form: Option<BigRational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agrees: Option<bool>,
    /// `l` is one of the exceptional primes of `Delta`.
    pub exceptional: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_tally: Option<ClassTally>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub empirical: Option<Empirical>,
}

impl DensityReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn ser_display<S: Serializer, T: std::fmt::Display>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn format_ratio(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn ser_ratio<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_ratio(r))
}

fn ser_opt_ratio<S: Serializer>(r: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&format_ratio(r)),
        None => s.serialize_none(),
    }
}

fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Closed form of the density at `l^n`, when one is known.
pub fn closed_form(query: &DensityQuery) -> Option<BigRational> {
    let (q, l) = (query.q, query.ell);
    if query.n >= 2 {
        if l == q {
            return if q >= 5 { Some(BigRational::zero()) } else { None };
        }
        let base = closed_form(&DensityQuery { n: 1, ..*query })?;
        return Some(base / BigInt::from(l).pow(query.n - 1));
    }
    Some(if l == q {
        ratio(q, q * q - 1)
    } else if l % q == 1 {
        ratio(q - 1, 2 * (l - 1))
    } else if l % q == q - 1 {
        ratio(q - 1, 2 * (l + 1))
    } else {
        BigRational::zero()
    })
}

/// Unit residues mod `m = l^n` that are `(k-1)`-th powers.
fn det_subgroup(query: &DensityQuery, m: u64) -> Result<Vec<u64>> {
    let l = query.ell;
    let e = (query.weight - 1) as u64;
    let mut member = vec![false; m as usize];
    for u in (1..m).filter(|u| u % l != 0) {
        member[pow_mod_u64(u, e, m) as usize] = true;
    }
    let h: Vec<u64> = (0..m).filter(|&x| member[x as usize]).collect();
    if query.n == 1 && h.len() as u64 != (l - 1) / query.d() {
        return Err(Error::IdentityViolation(format!(
            "determinant subgroup mod {l} has {} elements, expected (l-1)/d = {}",
            h.len(),
            (l - 1) / query.d()
        )));
    }
    Ok(h)
}

/// `|{A in GL2(Z/l^n) : det A in H}| = |GL2| |H| / |U|`.
fn group_order(query: &DensityQuery, h_len: usize) -> BigInt {
    let l = BigInt::from(query.ell);
    let scale = l.pow(4 * (query.n - 1));
    let gl2 = (&l * &l - 1u32) * (&l * &l - &l) * scale;
    let units = (&l - 1u32) * l.pow(query.n - 1);
    gl2 * BigInt::from(h_len) / units
}

pub(crate) fn with_workers<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> T {
    if workers == 0 {
        return job();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(job),
        Err(_) => job(),
    }
}

/// Count of pairs `(b, c)` with `bc = r mod m`, indexed by `r`.
fn product_counts(m: u64) -> Vec<u64> {
    let mut counts = vec![0u64; m as usize];
    for b in 0..m {
        for c in 0..m {
            counts[(b * c % m) as usize] += 1;
        }
    }
    counts
}

/// Number of matrices mod `m` with trace `t` and determinant `det`.
fn fiber_size(t: u64, det: u64, m: u64, counts: &[u64]) -> u64 {
    (0..m)
        .map(|a| {
            let ad = a * ((t + m - a) % m) % m;
            counts[((ad + m - det) % m) as usize]
        })
        .sum()
}

/// Exhaustive density via `(det, trace)` fibers.
pub fn enumerate_density(query: &DensityQuery, cfg: &EnumerationConfig) -> Result<DensityReport> {
    if query.ell == 2 {
        return enumerate_density_brute(query, cfg);
    }
    let m = query.check_budget(cfg.cap)?;
    let form = ModForm::new(&psi_poly(query.q)?, m);
    let h = det_subgroup(query, m)?;
    let counts = product_counts(m);
    let matches: u64 = with_workers(cfg.workers, || {
        h.par_iter()
            .map(|&det| {
                (0..m)
                    .filter(|&t| form.eval(t * t % m, det) == 0)
                    .map(|t| fiber_size(t, det, m, &counts))
                    .sum::<u64>()
            })
            .sum()
    });
    let mut report = finish_report(query, BigInt::from(matches), group_order(query, h.len()));
    if query.n == 1 {
        let tally = tally_classes(query, &form, &h);
        if tally.total() != matches {
            return Err(Error::IdentityViolation(format!(
                "class tally {} differs from fiber count {matches}",
                tally.total()
            )));
        }
        report.class_tally = Some(tally);
    }
    Ok(report)
}

/// The same count by looping over all `l^{4n}` matrices.
pub fn enumerate_density_brute(query: &DensityQuery, cfg: &EnumerationConfig) -> Result<DensityReport> {
    let m = query.check_budget(cfg.cap)?;
    let form = ModForm::new(&psi_poly(query.q)?, m);
    let h = det_subgroup(query, m)?;
    let mut in_h = vec![false; m as usize];
    for &x in &h {
        in_h[x as usize] = true;
    }
    let matches: u64 = with_workers(cfg.workers, || {
        (0..m)
            .into_par_iter()
            .map(|a| {
                let mut hits = 0u64;
                for b in 0..m {
                    for c in 0..m {
                        for d in 0..m {
                            let det = (a * d % m + m - b * c % m) % m;
                            if !in_h[det as usize] {
                                continue;
                            }
                            let t = (a + d) % m;
                            if form.eval(t * t % m, det) == 0 {
                                hits += 1;
                            }
                        }
                    }
                }
                hits
            })
            .sum()
    });
    Ok(finish_report(query, BigInt::from(matches), group_order(query, h.len())))
}

fn finish_report(query: &DensityQuery, matches: BigInt, order: BigInt) -> DensityReport {
    let delta = BigRational::new(matches.clone(), order.clone());
    let closed = closed_form(query);
    let agrees = closed.as_ref().map(|c| *c == delta);
    DensityReport {
        query: *query,
        match_count: matches,
        group_order: order,
        delta_exact: delta,
        closed_form: closed,
        agrees,
        exceptional: query.is_delta_exceptional(),
        class_tally: None,
        empirical: None,
    }
}

fn tally_classes(query: &DensityQuery, form: &ModForm, h: &[u64]) -> ClassTally {
    let l = query.ell;
    let mut tally = ClassTally::default();
    for &det in h {
        for t in 0..l {
            if form.eval(t * t % l, det) != 0 {
                continue;
            }
            let disc = (t * t % l + 4 * l - 4 * det % l) % l;
            if disc == 0 {
                tally.central += 1;
                tally.nonsemisimple += l * l - 1;
            } else if pow_mod_u64(disc, (l - 1) / 2, l) == 1 {
                tally.split_semisimple += l * l + l;
            } else {
                tally.nonsplit_semisimple += l * l - l;
            }
        }
    }
    tally
}

/// Per-type tallies of the matches over `GL2(F_l)`, `l` odd.
pub fn class_counts(query: &DensityQuery, cfg: &EnumerationConfig) -> Result<ClassTally> {
    if query.n != 1 || query.ell == 2 {
        return Err(Error::InvalidArgument("class counts need n = 1 and odd ell".into()));
    }
    enumerate_density(query, cfg)?
        .class_tally
        .ok_or_else(|| Error::IdentityViolation("missing class tally".into()))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HenselCheck {
    pub sampled: usize,
    /// `l^3` away from `l = q`; no fixed value otherwise.
    pub expected: Option<u64>,
    pub min_count: u64,
    pub max_count: u64,
}

impl HenselCheck {
    pub fn holds(&self) -> bool {
        match self.expected {
            Some(e) => self.sampled > 0 && self.min_count == e && self.max_count == e,
            None => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum LiftOutcome {
    Ratio {
        #[serde(serialize_with = "ser_ratio")]
        value: BigRational,
    },
    /// One of the two densities vanishes.
    ZeroDensity,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LiftReport {
    pub q: u64,
    pub ell: u64,
    pub k: u32,
    #[serde(serialize_with = "ser_ratio")]
    pub delta_ell: BigRational,
    #[serde(serialize_with = "ser_ratio")]
    pub delta_ell_squared: BigRational,
    pub outcome: LiftOutcome,
    pub hensel: HenselCheck,
}

impl LiftReport {
    pub fn ratio(&self) -> Option<&BigRational> {
        match &self.outcome {
            LiftOutcome::Ratio { value } => Some(value),
            LiftOutcome::ZeroDensity => None,
        }
    }
}

/// `delta(l^2) / delta(l)` plus a sampled count of solutions lifting from `l` to `l^2`.
pub fn lift_factor(q: u64, ell: u64, k: u32, samples: usize, seed: u64, cfg: &EnumerationConfig) -> Result<LiftReport> {
    let base = DensityQuery::new(q, ell, 1, k)?;
    let square = DensityQuery::new(q, ell, 2, k)?;
    square.check_budget(cfg.cap)?;
    let r1 = enumerate_density(&base, cfg)?;
    let r2 = enumerate_density(&square, cfg)?;
    let outcome = if r1.delta_exact.is_zero() || r2.delta_exact.is_zero() {
        LiftOutcome::ZeroDensity
    } else {
        LiftOutcome::Ratio {
            value: &r2.delta_exact / &r1.delta_exact,
        }
    };
    let hensel = hensel_counts(&base, samples, seed)?;
    Ok(LiftReport {
        q,
        ell,
        k,
        delta_ell: r1.delta_exact,
        delta_ell_squared: r2.delta_exact,
        outcome,
        hensel,
    })
}

/// For sampled `A0` in the level-`l` match set, count the `l^4` shifts
/// `A0 + l V` that still satisfy the equation mod `l^2`.
fn hensel_counts(base: &DensityQuery, samples: usize, seed: u64) -> Result<HenselCheck> {
    let l = base.ell;
    let m = l * l;
    let psi = psi_poly(base.q)?;
    let form_l = ModForm::new(&psi, l);
    let form_m = ModForm::new(&psi, m);
    let h = det_subgroup(base, l)?;
    let mut in_h = vec![false; l as usize];
    for &x in &h {
        in_h[x as usize] = true;
    }
    let mut pool = Vec::new();
    for a in 0..l {
        for b in 0..l {
            for c in 0..l {
                for d in 0..l {
                    let det = (a * d % l + l - b * c % l) % l;
                    let t = (a + d) % l;
                    if in_h[det as usize] && form_l.eval(t * t % l, det) == 0 {
                        pool.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chosen: Vec<_> = pool
        .choose_multiple(&mut rng, samples.min(pool.len()))
        .copied()
        .collect();
    let (mut lo, mut hi) = (u64::MAX, 0u64);
    for [a, b, c, d] in &chosen {
        let mut count = 0u64;
        for x in 0..l {
            for y in 0..l {
                for z in 0..l {
                    for w in 0..l {
                        let (a2, b2, c2, d2) = (a + l * x, b + l * y, c + l * z, d + l * w);
                        let det = (a2 * d2 % m + m - b2 * c2 % m) % m;
                        let t = (a2 + d2) % m;
                        if form_m.eval(t * t % m, det) == 0 {
                            count += 1;
                        }
                    }
                }
            }
        }
        lo = lo.min(count);
        hi = hi.max(count);
    }
    if chosen.is_empty() {
        lo = 0;
    }
    Ok(HenselCheck {
        sampled: chosen.len(),
        expected: (l != base.q).then_some(l * l * l),
        min_count: lo,
        max_count: hi,
    })
}

/// Whether `Psi_q(u, v) != 0 mod q^2` for every `(u, v)` with `gcd(u, v, q) = 1`.
pub fn psi_insoluble_mod_square(q: u64) -> Result<bool> {
    if q < 3 || !is_prime_u64(q) {
        return Err(Error::InvalidArgument(format!("q must be an odd prime, got {q}")));
    }
    let m = q * q;
    let form = ModForm::new(&psi_poly(q)?, m);
    for u in 0..m {
        for v in 0..m {
            if u % q == 0 && v % q == 0 {
                continue;
            }
            if form.eval(u, v) == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ChebotarevSample {
    pub label: String,
    pub q: u64,
    pub d: u64,
    pub x_bound: u64,
    pub hits: u64,
    pub total_primes: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ChebotarevReport {
    pub sample: ChebotarevSample,
    #[serde(serialize_with = "ser_ratio")]
    pub target: BigRational,
    pub frequency: f64,
    /// Binomial standard deviation of the frequency at the target density.
    pub sigma: f64,
    pub deviation: f64,
    pub within_three_sigma: bool,
    pub exceptional: bool,
}

/// `(l, n)` with `d = l^n`.
pub fn prime_power_parts(d: u64) -> Option<(u64, u32)> {
    if d < 2 {
        return None;
    }
    let l = (2..).find(|p| d % p == 0).expect("d >= 2 has a divisor");
    let mut rest = d;
    let mut n = 0;
    while rest % l == 0 {
        rest /= l;
        n += 1;
    }
    (rest == 1).then_some((l, n))
}

/// Frequency of primes `p <= x`, `p` coprime to `dN`, with `d | a_f(p^{q-1}) != 0`.
pub fn chebotarev_sample(
    f: &EigenformSpec,
    q: u64,
    d: u64,
    x: u64,
    cfg: &EnumerationConfig,
) -> Result<ChebotarevReport> {
    if x < 1000 {
        return Err(Error::InvalidArgument(format!("xBound must be >= 1000, got {x}")));
    }
    let (ell, n) =
        prime_power_parts(d).ok_or_else(|| Error::InvalidArgument(format!("d = {d} is not a prime power")))?;
    let query = DensityQuery::new(q, ell, n, f.weight)?;
    let density = enumerate_density(&query, cfg)?;
    let psi = psi_poly(q)?;
    let form = ModForm::new(&psi, d);
    let big_d = BigInt::from(d);
    let rows = f.ap_range(x, d)?;
    let mut hits = 0u64;
    for (p, ap) in &rows {
        let a = ap.mod_floor(&big_d).to_u64().expect("reduced");
        let qp = pow_mod_u64(*p % d, (f.weight - 1) as u64, d);
        if form.eval(a * a % d, qp) != 0 {
            continue;
        }
        if !eval_poly(&psi, &(ap * ap), &f.char_q(*p)).is_zero() {
            hits += 1;
        }
    }
    let total = rows.len() as u64;
    let target = density.delta_exact.clone();
    let t = target.numer().to_f64().unwrap_or(0.0) / target.denom().to_f64().unwrap_or(1.0);
    let frequency = if total == 0 { 0.0 } else { hits as f64 / total as f64 };
    let sigma = if total == 0 {
        0.0
    } else {
        (t * (1.0 - t) / total as f64).sqrt()
    };
    let deviation = (frequency - t).abs();
    Ok(ChebotarevReport {
        sample: ChebotarevSample {
            label: f.label.clone(),
            q,
            d,
            x_bound: x,
            hits,
            total_primes: total,
        },
        target,
        frequency,
        sigma,
        deviation,
        within_three_sigma: deviation <= 3.0 * sigma,
        exceptional: DELTA_EXCEPTIONAL_PRIMES.contains(&ell),
    })
}

impl ChebotarevReport {
    /// Attach the sample to the density report for the same modulus.
    pub fn empirical(&self) -> Empirical {
        Empirical {
            x: self.sample.x_bound,
            hits: self.sample.hits,
            total: self.sample.total_primes,
            freq: self.frequency,
            sigma: self.sigma,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> EnumerationConfig {
        EnumerationConfig::default()
    }

    fn report(q: u64, l: u64, n: u32) -> DensityReport {
        enumerate_density(&DensityQuery::new(q, l, n, 12).unwrap(), &cfg()).unwrap()
    }

    #[test]
    fn documented_examples() {
        let r = report(3, 7, 1);
        assert_eq!(r.match_count, BigInt::from(336));
        assert_eq!(r.group_order, BigInt::from(2016));
        assert_eq!(r.delta_exact, ratio(1, 6));
        assert_eq!(r.agrees, Some(true));
        assert_eq!(report(3, 3, 1).delta_exact, ratio(3, 8));
        assert!(report(5, 7, 1).delta_exact.is_zero());
    }

    #[test]
    fn tallies() {
        let t = report(3, 7, 1).class_tally.unwrap();
        assert_eq!((t.split_semisimple, t.total()), (336, 336));
        let t = report(3, 5, 1).class_tally.unwrap();
        assert_eq!((t.nonsplit_semisimple, t.total()), (80, 80));
        let t = report(3, 3, 1).class_tally.unwrap();
        assert_eq!(t.central + t.nonsemisimple, 18);
    }

    #[test]
    fn fibers_match_brute_force() {
        for (q, l, n) in [(3, 3, 1), (3, 5, 1), (5, 11, 1), (3, 3, 2), (5, 3, 2), (3, 2, 2)] {
            let query = DensityQuery::new(q, l, n, 12).unwrap();
            let fast = enumerate_density(&query, &cfg()).unwrap();
            let slow = enumerate_density_brute(&query, &cfg()).unwrap();
            assert_eq!(fast.match_count, slow.match_count, "{q} {l} {n}");
        }
    }

    #[test]
    fn ell_two() {
        assert_eq!(report(3, 2, 1).match_count, BigInt::from(2));
        assert!(report(5, 2, 1).match_count.is_zero());
    }

    #[test]
    fn budget() {
        let q = DensityQuery::new(5, 11, 2, 12).unwrap();
        match enumerate_density(&q, &cfg()) {
            Err(Error::BudgetExceeded { required, .. }) => assert_eq!(required, 11u128.pow(8)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn lift() {
        let r = lift_factor(3, 5, 12, 16, 0, &cfg()).unwrap();
        assert_eq!(r.ratio(), Some(&ratio(1, 5)));
        assert_eq!(r.delta_ell_squared, ratio(1, 30));
        assert!(r.hensel.holds());
        let r = lift_factor(5, 5, 12, 4, 0, &cfg()).unwrap();
        assert_eq!(r.outcome, LiftOutcome::ZeroDensity);
    }

    #[test]
    fn json_shape() {
        let json = report(3, 7, 1).to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["deltaExact"], "1/6");
        assert_eq!(v["agrees"], true);
        assert_eq!(v["query"]["k"], 12);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power_parts(121), Some((11, 2)));
        assert_eq!(prime_power_parts(12), None);
    }
}
