//! Largest-prime-factor scans over prime-power coefficients, the divisibility
//! tower, and Sato-Tate statistics.

use std::f64::consts::PI;
use std::io::Write;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::divisors;
use crate::density::with_workers;
use crate::error::{Error, Result};
use crate::factor::{factorize_with, FactorConfig};
use crate::hecke::{deligne_holds, prime_power_sequence, EigenformSpec};

/// Smallest integer where `log log p > 1`.
pub const MIN_BOUND_PRIME: u64 = 17;

/// True iff `a_f(p^{d-1})` divides `a_f(p^{2n})` for every divisor `d > 1` of `2n + 1`.
pub fn check_divisibility_tower(f: &EigenformSpec, p: u64, n: u32) -> Result<bool> {
    let ap = f.ap(p)?;
    let seq = prime_power_sequence(&ap, &f.char_q(p), 2 * n);
    Ok(tower_holds(&seq, n))
}

fn tower_holds(seq: &[BigInt], n: u32) -> bool {
    let top = &seq[2 * n as usize];
    divisors(2 * n as u64 + 1).into_iter().filter(|&d| d > 1).all(|d| {
        let lower = &seq[d as usize - 1];
        if lower.is_zero() {
            top.is_zero()
        } else {
            (top % lower).is_zero()
        }
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TowerSweep {
    pub checks: u64,
    /// `(p, n)` pairs where some divisor failed.
    pub failures: Vec<(u64, u32)>,
}

/// Tower check for every prime `p <= p_max` (`p` not dividing the level) and
/// every `n` with `2n + 1 <= max_odd`.
pub fn tower_sweep(f: &EigenformSpec, p_max: u64, max_odd: u32, workers: usize) -> Result<TowerSweep> {
    let rows = f.ap_range(p_max, 0)?;
    let n_max = max_odd.saturating_sub(1) / 2;
    let per_prime: Vec<Vec<(u64, u32)>> = with_workers(workers, || {
        rows.par_iter()
            .map(|(p, ap)| {
                let seq = prime_power_sequence(ap, &f.char_q(*p), 2 * n_max);
                (1..=n_max)
                    .filter(|&n| !tower_holds(&seq, n))
                    .map(|n| (*p, n))
                    .collect()
            })
            .collect()
    });
    Ok(TowerSweep {
        checks: rows.len() as u64 * n_max as u64,
        failures: per_prime.into_iter().flatten().collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase", tag = "mode")]
pub enum BoundKind {
    /// `(log p)^{1/8} (log log p)^{3/8 - eps}`.
    Unconditional { epsilon: f64 },
    /// `c p^{1/14} (log p)^{2/7}`.
    Grh { c: f64 },
}

/// Lower bound for the largest prime factor at `p`, in double precision.
pub fn bound_value(p: u64, kind: BoundKind) -> Result<f64> {
    if p < MIN_BOUND_PRIME {
        return Err(Error::InvalidArgument(format!(
            "bound needs p >= {MIN_BOUND_PRIME}, got {p}"
        )));
    }
    let lp = (p as f64).ln();
    Ok(match kind {
        BoundKind::Unconditional { epsilon } => {
            if !(epsilon >= 0.0) {
                return Err(Error::InvalidArgument(format!("epsilon must be >= 0, got {epsilon}")));
            }
            lp.powf(0.125) * lp.ln().powf(0.375 - epsilon)
        }
        BoundKind::Grh { c } => {
            if !(c > 0.0) {
                return Err(Error::InvalidArgument(format!("c must be positive, got {c}")));
            }
            c * (p as f64).powf(1.0 / 14.0) * lp.powf(2.0 / 7.0)
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RowStatus {
    Ok,
    /// The coefficient vanished; kept with `P(0) = 1` and left out of the fraction.
    Zero,
    /// Factorization ran out of budget.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanRow {
    pub p: u64,
    pub exponent: u32,
    pub value: String,
    pub largest_prime_factor: Option<String>,
    pub bound: f64,
    pub passes: bool,
    pub status: RowStatus,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanSummary {
    pub label: String,
    pub exponent: u32,
    pub bound: BoundKind,
    pub x_bound: u64,
    /// Primes below this are outside the bound's domain and not scanned.
    pub first_prime: u64,
    pub rows: u64,
    pub pass: u64,
    pub fail: u64,
    pub unknown: u64,
    pub zero: u64,
    /// `pass / (pass + fail)`.
    pub pass_fraction: f64,
    pub unknown_fraction: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanResult {
    pub rows: Vec<ScanRow>,
    pub summary: ScanSummary,
}

/// Compare `P(a_f(p^m))` with the bound for every prime `17 <= p <= x`, `p` not dividing the level.
pub fn scan_theorem(
    f: &EigenformSpec,
    exponent: u32,
    kind: BoundKind,
    x: u64,
    factor_cfg: &FactorConfig,
    workers: usize,
) -> Result<ScanResult> {
    if exponent < 2 || exponent % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "exponent must be even and >= 2, got {exponent}"
        )));
    }
    bound_value(MIN_BOUND_PRIME, kind)?;
    let primes: Vec<(u64, BigInt)> = f
        .ap_range(x, 0)?
        .into_iter()
        .filter(|(p, _)| *p >= MIN_BOUND_PRIME)
        .collect();
    let rows: Vec<Result<ScanRow>> = with_workers(workers, || {
        primes
            .par_iter()
            .map(|(p, ap)| scan_row(f, *p, ap, exponent, kind, factor_cfg))
            .collect()
    });
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    let count = |s: RowStatus| rows.iter().filter(|r| r.status == s).count() as u64;
    let pass = rows.iter().filter(|r| r.status == RowStatus::Ok && r.passes).count() as u64;
    let ok = count(RowStatus::Ok);
    let unknown = count(RowStatus::Unknown);
    let summary = ScanSummary {
        label: f.label.clone(),
        exponent,
        bound: kind,
        x_bound: x,
        first_prime: MIN_BOUND_PRIME,
        rows: rows.len() as u64,
        pass,
        fail: ok - pass,
        unknown,
        zero: count(RowStatus::Zero),
        pass_fraction: if ok == 0 { 0.0 } else { pass as f64 / ok as f64 },
        unknown_fraction: if rows.is_empty() {
            0.0
        } else {
            unknown as f64 / rows.len() as f64
        },
    };
    Ok(ScanResult { rows, summary })
}

fn scan_row(
    f: &EigenformSpec,
    p: u64,
    ap: &BigInt,
    exponent: u32,
    kind: BoundKind,
    cfg: &FactorConfig,
) -> Result<ScanRow> {
    let value = prime_power_sequence(ap, &f.char_q(p), exponent)
        .pop()
        .expect("nonempty");
    let bound = bound_value(p, kind)?;
    let mut row = ScanRow {
        p,
        exponent,
        value: value.to_string(),
        largest_prime_factor: None,
        bound,
        passes: false,
        status: RowStatus::Ok,
    };
    if value.is_zero() {
        if !ap.is_zero() {
            return Err(Error::IdentityViolation(format!(
                "a(p^{exponent}) = 0 with a_p != 0 at p = {p}"
            )));
        }
        row.largest_prime_factor = Some("1".into());
        row.status = RowStatus::Zero;
        return Ok(row);
    }
    match factorize_with(&value, cfg) {
        Ok(fac) => {
            let big_p = fac.largest_prime();
            row.passes = big_p.to_f64().map_or(true, |v| v > bound);
            row.largest_prime_factor = Some(big_p.to_string());
        }
        Err(Error::PartialFactorization { .. }) => row.status = RowStatus::Unknown,
        Err(e) => return Err(e),
    }
    Ok(row)
}

/// CSV with header `p,exponent,value,largest_prime_factor,bound,passes,status`.
pub fn write_scan_csv<W: Write>(rows: &[ScanRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record([
        "p",
        "exponent",
        "value",
        "largest_prime_factor",
        "bound",
        "passes",
        "status",
    ])
    .map_err(io)?;
    for r in rows {
        let status = match r.status {
            RowStatus::Ok => "OK",
            RowStatus::Zero => "ZERO",
            RowStatus::Unknown => "UNKNOWN",
        };
        w.write_record([
            r.p.to_string(),
            r.exponent.to_string(),
            r.value.clone(),
            r.largest_prime_factor.clone().unwrap_or_default(),
            format!("{:.12}", r.bound),
            r.passes.to_string(),
            status.to_string(),
        ])
        .map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

/// Sato-Tate distribution function on `[-1, 1]`.
pub fn sato_tate_cdf(t: f64) -> f64 {
    let t = t.clamp(-1.0, 1.0);
    0.5 + (t * (1.0 - t * t).sqrt() + t.asin()) / PI
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SatoTateHistogram {
    pub label: String,
    pub x_bound: u64,
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
    pub expected: Vec<f64>,
    pub sample_size: u64,
    pub max_deviation: f64,
}

/// Histogram of `a_p / (2 p^{(k-1)/2})` over primes `p <= x` not dividing the level.
pub fn sato_tate_histogram(f: &EigenformSpec, x: u64, bins: usize) -> Result<SatoTateHistogram> {
    if bins < 2 || bins % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "bin count must be even and >= 2, got {bins}"
        )));
    }
    if x < 1000 {
        return Err(Error::InvalidArgument(format!("xBound must be >= 1000, got {x}")));
    }
    let edges: Vec<f64> = (0..=bins).map(|i| -1.0 + 2.0 * i as f64 / bins as f64).collect();
    let expected: Vec<f64> = edges
        .windows(2)
        .map(|w| sato_tate_cdf(w[1]) - sato_tate_cdf(w[0]))
        .collect();
    let mut counts = vec![0u64; bins];
    let rows = f.ap_range(x, 0)?;
    let half_weight = (f.weight - 1) as f64 / 2.0;
    for (p, ap) in &rows {
        if !deligne_holds(ap, *p, f.weight, 1) {
            return Err(Error::DeligneViolation { p: *p, ap: ap.clone() });
        }
        let lambda = (ap.to_f64().expect("finite") / (2.0 * (*p as f64).powf(half_weight))).clamp(-1.0, 1.0);
        let idx = (((lambda + 1.0) / 2.0 * bins as f64) as usize).min(bins - 1);
        counts[idx] += 1;
    }
    let n = rows.len() as u64;
    let max_deviation = counts
        .iter()
        .zip(&expected)
        .map(|(&c, e)| if n == 0 { *e } else { (c as f64 / n as f64 - e).abs() })
        .fold(0.0, f64::max);
    Ok(SatoTateHistogram {
        label: f.label.clone(),
        x_bound: x,
        edges,
        counts,
        expected,
        sample_size: n,
        max_deviation,
    })
}

impl SatoTateHistogram {
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(["lo", "hi", "count", "empirical", "expected"])
            .map_err(io)?;
        let n = self.sample_size.max(1) as f64;
        for (i, c) in self.counts.iter().enumerate() {
            w.write_record([
                format!("{:.6}", self.edges[i]),
                format!("{:.6}", self.edges[i + 1]),
                c.to_string(),
                format!("{:.8}", *c as f64 / n),
                format!("{:.8}", self.expected[i]),
            ])
            .map_err(io)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// `P(a(p^{2n-1})) >= P(a(p))` follows from `a(p) | a(p^{2n-1})`; true iff that division is exact.
pub fn odd_exponent_divisible(ap: &BigInt, q: &BigInt, n: u32) -> bool {
    if ap.is_zero() || n == 0 {
        return true;
    }
    let seq = prime_power_sequence(ap, q, 2 * n - 1);
    (seq[2 * n as usize - 1].abs() % ap.abs()).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::tau;

    #[test]
    fn tower_examples() {
        let delta = EigenformSpec::delta();
        assert!(check_divisibility_tower(&delta, 2, 4).unwrap());
        assert!(check_divisibility_tower(&delta, 3, 1).unwrap());
    }

    #[test]
    fn bounds() {
        assert!(bound_value(16, BoundKind::Unconditional { epsilon: 0.1 }).is_err());
        let b = bound_value(17, BoundKind::Unconditional { epsilon: 0.1 }).unwrap();
        assert!(b > 1.0 && b < 1.3, "{b}");
        let g = bound_value(1_000_003, BoundKind::Grh { c: 1.0 }).unwrap();
        assert!((g - 1_000_003f64.powf(1.0 / 14.0) * 1_000_003f64.ln().powf(2.0 / 7.0)).abs() < 1e-12);
    }

    #[test]
    fn small_scan() {
        let res = scan_theorem(
            &EigenformSpec::delta(),
            2,
            BoundKind::Unconditional { epsilon: 0.1 },
            100,
            &FactorConfig::default(),
            0,
        )
        .unwrap();
        assert!(res.rows.iter().all(|r| r.bound < 3.0 && r.passes));
        assert_eq!(res.summary.unknown, 0);
        let mut buf = Vec::new();
        write_scan_csv(&res.rows, &mut buf).unwrap();
        assert!(String::from_utf8(buf).unwrap().starts_with("p,exponent,value"));
    }

    #[test]
    fn cdf_normalized() {
        assert!((sato_tate_cdf(1.0) - 1.0).abs() < 1e-15);
        assert!(sato_tate_cdf(-1.0).abs() < 1e-15);
        assert!((sato_tate_cdf(0.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn odd_exponent() {
        let ap = tau(5).unwrap();
        let q = BigInt::from(5u64.pow(11));
        assert!((1..6).all(|n| odd_exponent_divisible(&ap, &q, n)));
    }
}
