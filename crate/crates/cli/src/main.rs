//! `hecke`: command-line access to the hecke-core operations.

mod config;
mod verify;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hecke_core::cyclotomic::{eval_poly, f_poly, phi_poly, psi_poly, HomogeneousBivariatePoly};
use hecke_core::density::{
    chebotarev_sample, enumerate_density, enumerate_density_brute, lift_factor, DensityQuery, EnumerationConfig,
    DEFAULT_ENUMERATION_CAP,
};
use hecke_core::factor::FactorConfig;
use hecke_core::hecke::{
    coeff_lucas, coeff_prime_power, deligne_holds, first_prime_tau, ingest_table, tau_series, write_series,
    EigenformSpec,
};
use hecke_core::ring::{is_scalar_nth_root, sym_pow, sym_pow_kernel_test, sym_pow_trace, RingDescriptor, RingMatrix};
use hecke_core::scan::{sato_tate_histogram, scan_theorem, tower_sweep, write_scan_csv, BoundKind, RowStatus};
use hecke_core::{Error, Result};
use num_bigint::BigInt;
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "hecke",
    version,
    about = "Coefficients of Hecke eigenforms, cyclotomic forms and trace-zero densities"
)]
struct Cli {
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads, 0 for all cores. Never changes results.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// key=value file supplying defaults for any long flag.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
struct FormArgs {
    /// Coefficient table `p a_p` per line; defaults to Delta.
    #[arg(long)]
    table: Option<PathBuf>,
    /// Weight of the tabulated form.
    #[arg(long, default_value_t = 12)]
    weight: u32,
    /// Level of the tabulated form.
    #[arg(long, default_value_t = 1)]
    level: u64,
}

impl FormArgs {
    fn load(&self) -> Result<EigenformSpec> {
        match &self.table {
            Some(path) => ingest_table(path, self.weight, self.level),
            None => Ok(EigenformSpec::delta()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyKind {
    Phi,
    Psi,
    F,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundMode {
    Unconditional,
    Grh,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Identities,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ramanujan tau(1..=limit) from q prod (1 - q^n)^24.
    ///
    /// Anchor: the smallest n with |tau(n)| prime is 63001.
    Tau {
        #[arg(long)]
        limit: u64,
        /// Print the least n <= limit with |tau(n)| prime.
        #[arg(long)]
        find_first_prime: bool,
    },
    /// a_f(p^m) by the Hecke recursion, cross-checked against the Lucas ladder.
    ///
    /// Anchor: a_f(p^m) = U_{m+1}(a_p, p^{k-1}) and the Deligne bound.
    Coeff {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        form: FormArgs,
    },
    /// Coefficients of Phi_n, Psi_n or F_n as binary forms, highest X power first.
    ///
    /// Anchor: Phi_n(X,Y) = Psi_n((X+Y)^2, XY).
    Psi {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = PolyKind::Psi)]
        kind: PolyKind,
        /// Also evaluate at `x,y`.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        at: Option<Vec<i64>>,
    },
    /// Sym^n of a 2x2 matrix over Z/mZ, with the trace formula and kernel test.
    ///
    /// Anchor: tr Sym^n(A) = tr(A)^e F_{n+1}(tr(A)^2, det A); the kernel is the scalar n-th roots of unity.
    Sympow {
        #[arg(long)]
        modulus: u64,
        /// Entries `a,b,c,d` in row order.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        matrix: Vec<i64>,
        #[arg(long)]
        n: u32,
    },
    /// Exact density of trace-zero Sym^{q-1} images in GL2(Z/l^n Z) with det in the (k-1)-th powers.
    ///
    /// Anchor: density (q-1)/(2(l-1)) for l = 1 mod q and (q-1)/(2(l+1)) for l = -1 mod q.
    Density {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        ell: u64,
        #[arg(long, default_value_t = 12)]
        k: u32,
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Enumerate every matrix instead of fibering over the trace.
        #[arg(long)]
        brute: bool,
        /// Largest l^{4n} allowed.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u128,
    },
    /// Ratio delta(l^2)/delta(l) and the sampled count of lifts from l to l^2.
    ///
    /// Anchor: the ratio is 1/l and every solution mod l has l^3 lifts.
    Lift {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        ell: u64,
        #[arg(long, default_value_t = 12)]
        k: u32,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u128,
    },
    /// Frequency of p <= x with d | a_f(p^{q-1}), compared with the exact density.
    ///
    /// Anchor: Chebotarev applied to the mod-d Galois image.
    Chebotarev {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 1_000_000)]
        x: u64,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u128,
        #[command(flatten)]
        form: FormArgs,
    },
    /// Largest prime factor of a_f(p^m) against the lower bound, for 17 <= p <= x.
    ///
    /// Anchor: P(a_f(p^m)) > (log p)^{1/8} (log log p)^{3/8 - eps}, or c p^{1/14} (log p)^{2/7} under GRH.
    Scan {
        #[arg(long, default_value_t = 2)]
        exponent: u32,
        #[arg(long, value_enum, default_value_t = BoundMode::Unconditional)]
        bound: BoundMode,
        #[arg(long, default_value_t = 0.1)]
        epsilon: f64,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long, default_value_t = 1000)]
        x: u64,
        #[arg(long, default_value_t = 1_000_000)]
        trial_bound: u64,
        /// Pollard-rho iterations per value before the row is UNKNOWN.
        #[arg(long, default_value_t = 100_000_000)]
        rho_iterations: u64,
        #[command(flatten)]
        form: FormArgs,
    },
    /// Divisibility a_f(p^{d-1}) | a_f(p^{2n}) for every d | 2n+1.
    ///
    /// Anchor: the factorization of U_{2n+1} through its divisor-indexed terms.
    Tower {
        #[arg(long, default_value_t = 1000)]
        p_max: u64,
        #[arg(long, default_value_t = 15)]
        max_odd: u32,
        #[command(flatten)]
        form: FormArgs,
    },
    /// Histogram of a_p / (2 p^{(k-1)/2}) against the Sato-Tate measure.
    ///
    /// Anchor: F(t) = 1/2 + (t sqrt(1-t^2) + arcsin t)/pi.
    SatoTate {
        #[arg(long, default_value_t = 1_000_000)]
        x: u64,
        #[arg(long, default_value_t = 20)]
        bins: usize,
        #[command(flatten)]
        form: FormArgs,
    },
    /// Run a self-check suite.
    ///
    /// Anchor: the cyclotomic, Hecke, symmetric-power and tower identities together.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
    },
}

/// Result of a subcommand: output text plus a status code in {0, 2}.
struct Outcome {
    body: String,
    code: u8,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, code: 0 }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } | Error::PartialFactorization { .. } | Error::DataExhausted { .. } => 2,
        Error::IdentityViolation(_) => 3,
        _ => 1,
    }
}

fn json_string(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn poly_json(p: &HomogeneousBivariatePoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

fn matrix_text(m: &RingMatrix) -> String {
    let d = m.dim();
    let mut s = String::new();
    for i in 0..d {
        let row: Vec<String> = (0..d).map(|j| m.get(i, j).to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let workers = cli.workers;
    let enum_cfg = |cap: u128| EnumerationConfig { cap, workers };
    match &cli.command {
        Command::Tau {
            limit,
            find_first_prime,
        } => {
            let fmt = cli.format.unwrap_or(Format::Text);
            if *find_first_prime {
                let first = first_prime_tau(*limit)?;
                let body = match fmt {
                    Format::Json => json_string(&json!({ "limit": limit, "firstPrime": first })),
                    _ => first.map_or_else(|| "none\n".to_string(), |n| format!("{n}\n")),
                };
                return Ok(Outcome::ok(body));
            }
            let values = tau_series(*limit)?;
            let body = match fmt {
                Format::Json => {
                    let v: Vec<String> = values.iter().map(ToString::to_string).collect();
                    json_string(&json!({ "limit": limit, "tau": v }))
                }
                Format::Csv => {
                    let mut buf = Vec::new();
                    write_series(&values, &mut buf)?;
                    String::from_utf8(buf).expect("utf8")
                }
                Format::Text => values
                    .iter()
                    .enumerate()
                    .map(|(i, t)| format!("{} {t}\n", i + 1))
                    .collect(),
            };
            Ok(Outcome::ok(body))
        }
        Command::Coeff { p, m, form } => {
            let f = form.load()?;
            let rec = coeff_prime_power(&f, *p, *m)?;
            let lucas = coeff_lucas(&f, *p, *m)?;
            if rec != lucas {
                return Err(Error::IdentityViolation(format!(
                    "recursion {rec} and Lucas ladder {lucas} disagree at p = {p}, m = {m}"
                )));
            }
            let deligne = deligne_holds(&rec, *p, f.weight, *m);
            if !deligne {
                return Err(Error::IdentityViolation(format!(
                    "Deligne bound fails for a(p^{m}) at p = {p}"
                )));
            }
            let body = match cli.format.unwrap_or(Format::Text) {
                Format::Json => json_string(&json!({
                    "label": f.label, "p": p, "m": m, "value": rec.to_string(), "deligne": deligne,
                })),
                Format::Csv => format!("p,m,value\n{p},{m},{rec}\n"),
                Format::Text => format!("{rec}\n"),
            };
            Ok(Outcome::ok(body))
        }
        Command::Psi { n, kind, at } => {
            let poly = match kind {
                PolyKind::Phi => phi_poly(*n)?,
                PolyKind::Psi => psi_poly(*n)?,
                PolyKind::F => f_poly(*n)?,
            };
            let name = match kind {
                PolyKind::Phi => "Phi",
                PolyKind::Psi => "Psi",
                PolyKind::F => "F",
            };
            if at.as_ref().is_some_and(|xy| xy.len() != 2) {
                return Err(Error::InvalidArgument("--at takes exactly two values x,y".into()));
            }
            let value = at
                .as_ref()
                .map(|xy| eval_poly(&poly, &BigInt::from(xy[0]), &BigInt::from(xy[1])));
            let body = match cli.format.unwrap_or(Format::Text) {
                Format::Json => json_string(&json!({
                    "kind": name,
                    "n": n,
                    "degree": poly.degree(),
                    "coeffs": poly_json(&poly),
                    "value": value.as_ref().map(ToString::to_string),
                })),
                Format::Csv => {
                    let mut s = String::from("i,coeff\n");
                    for (i, c) in poly.coeffs().iter().enumerate() {
                        s.push_str(&format!("{i},{c}\n"));
                    }
                    s
                }
                Format::Text => {
                    let mut s = format!("{name}_{n}: {poly}\n");
                    if let Some(v) = value {
                        s.push_str(&format!("value: {v}\n"));
                    }
                    s
                }
            };
            Ok(Outcome::ok(body))
        }
        Command::Sympow { modulus, matrix, n } => {
            if matrix.len() != 4 {
                return Err(Error::InvalidArgument(
                    "--matrix takes exactly four entries a,b,c,d".into(),
                ));
            }
            let ring = RingDescriptor::mod_m(*modulus)?;
            let a = RingMatrix::new(
                ring.clone(),
                2,
                matrix.iter().map(|&e| ring.reduce(BigInt::from(e))).collect(),
            )?;
            let s = sym_pow(&a, *n)?;
            let trace = s.trace();
            if *n >= 2 && sym_pow_trace(&a, *n)? != trace {
                return Err(Error::IdentityViolation(format!("trace formula fails for Sym^{n}")));
            }
            let in_kernel = sym_pow_kernel_test(&a, *n)?;
            if in_kernel != is_scalar_nth_root(&a, *n) {
                return Err(Error::IdentityViolation(format!(
                    "kernel of Sym^{n} is not the scalar roots"
                )));
            }
            let body = match cli.format.unwrap_or(Format::Text) {
                Format::Json => {
                    let rows: Vec<Vec<String>> = (0..s.dim())
                        .map(|i| (0..s.dim()).map(|j| s.get(i, j).to_string()).collect())
                        .collect();
                    json_string(&json!({
                        "modulus": modulus, "n": n, "matrix": rows,
                        "trace": trace.to_string(), "inKernel": in_kernel,
                    }))
                }
                Format::Csv => matrix_text(&s).lines().map(|l| l.replace(' ', ",") + "\n").collect(),
                Format::Text => format!("{}trace {trace}\nkernel {in_kernel}\n", matrix_text(&s)),
            };
            Ok(Outcome::ok(body))
        }
        Command::Density {
            q,
            ell,
            k,
            n,
            brute,
            cap,
        } => {
            let query = DensityQuery::new(*q, *ell, *n, *k)?;
            let report = if *brute {
                enumerate_density_brute(&query, &enum_cfg(*cap))?
            } else {
                enumerate_density(&query, &enum_cfg(*cap))?
            };
            if report.agrees == Some(false) && !report.exceptional {
                eprintln!("warning: enumeration disagrees with the closed form");
            }
            let body = match cli.format.unwrap_or(Format::Json) {
                Format::Text => format!(
                    "delta({ell}^{n}) = {} for q = {q}, k = {k}; matches {} of {}\n",
                    hecke_core::density::format_ratio(&report.delta_exact),
                    report.match_count,
                    report.group_order
                ),
                _ => report.to_json() + "\n",
            };
            Ok(Outcome::ok(body))
        }
        Command::Lift {
            q,
            ell,
            k,
            samples,
            cap,
        } => {
            let report = lift_factor(*q, *ell, *k, *samples, cli.seed, &enum_cfg(*cap))?;
            let mut body = serde_json::to_string_pretty(&report).expect("json");
            body.push('\n');
            if cli.format == Some(Format::Text) {
                body = format!(
                    "ratio {} hensel {}\n",
                    report
                        .ratio()
                        .map_or("undefined".into(), hecke_core::density::format_ratio),
                    report.hensel.holds()
                );
            }
            if !report.hensel.holds() {
                return Err(Error::IdentityViolation(format!("lift count is not {}^3", ell)));
            }
            Ok(Outcome::ok(body))
        }
        Command::Chebotarev { q, d, x, cap, form } => {
            let f = form.load()?;
            let report = chebotarev_sample(&f, *q, *d, *x, &enum_cfg(*cap))?;
            let body = match cli.format.unwrap_or(Format::Json) {
                Format::Text => format!(
                    "{}/{} = {:.6} target {} (sigma {:.6})\n",
                    report.sample.hits,
                    report.sample.total_primes,
                    report.frequency,
                    hecke_core::density::format_ratio(&report.target),
                    report.sigma
                ),
                _ => serde_json::to_string_pretty(&report).expect("json") + "\n",
            };
            Ok(Outcome::ok(body))
        }
        Command::Scan {
            exponent,
            bound,
            epsilon,
            c,
            x,
            trial_bound,
            rho_iterations,
            form,
        } => {
            let f = form.load()?;
            let kind = match bound {
                BoundMode::Unconditional => BoundKind::Unconditional { epsilon: *epsilon },
                BoundMode::Grh => BoundKind::Grh { c: *c },
            };
            let fcfg = FactorConfig {
                trial_bound: *trial_bound,
                rho_iterations: *rho_iterations,
            };
            let result = scan_theorem(&f, *exponent, kind, *x, &fcfg, workers)?;
            let summary = serde_json::to_string_pretty(&result.summary).expect("json") + "\n";
            let body = match cli.format.unwrap_or(Format::Csv) {
                Format::Csv => {
                    let mut buf = Vec::new();
                    write_scan_csv(&result.rows, &mut buf)?;
                    eprint!("{summary}");
                    String::from_utf8(buf).expect("utf8")
                }
                Format::Json => json_string(&json!({ "summary": result.summary, "rows": result.rows })),
                Format::Text => summary,
            };
            let partial = result.rows.iter().any(|r| r.status == RowStatus::Unknown);
            Ok(Outcome {
                body,
                code: if partial { 2 } else { 0 },
            })
        }
        Command::Tower { p_max, max_odd, form } => {
            let f = form.load()?;
            let sweep = tower_sweep(&f, *p_max, *max_odd, workers)?;
            let body = match cli.format.unwrap_or(Format::Json) {
                Format::Text => format!("{} checks, {} failures\n", sweep.checks, sweep.failures.len()),
                Format::Csv => {
                    let mut s = String::from("p,n\n");
                    for (p, n) in &sweep.failures {
                        s.push_str(&format!("{p},{n}\n"));
                    }
                    s
                }
                Format::Json => serde_json::to_string_pretty(&sweep).expect("json") + "\n",
            };
            if !sweep.failures.is_empty() {
                print!("{body}");
                return Err(Error::IdentityViolation(format!("tower fails at {:?}", sweep.failures)));
            }
            Ok(Outcome::ok(body))
        }
        Command::SatoTate { x, bins, form } => {
            let f = form.load()?;
            let hist = sato_tate_histogram(&f, *x, *bins)?;
            let body = match cli.format.unwrap_or(Format::Csv) {
                Format::Csv => {
                    let mut buf = Vec::new();
                    hist.write_csv(&mut buf)?;
                    String::from_utf8(buf).expect("utf8")
                }
                Format::Json => serde_json::to_string_pretty(&hist).expect("json") + "\n",
                Format::Text => format!(
                    "{} primes, {} bins, max deviation {:.6}\n",
                    hist.sample_size, bins, hist.max_deviation
                ),
            };
            Ok(Outcome::ok(body))
        }
        Command::Verify {
            suite: Suite::Identities,
        } => {
            let checks = verify::identities(workers)?;
            let body = match cli.format.unwrap_or(Format::Text) {
                Format::Json => {
                    let v: Vec<_> = checks
                        .iter()
                        .map(|c| json!({ "name": c.name, "cases": c.cases, "failures": c.failures }))
                        .collect();
                    json_string(&json!(v))
                }
                _ => checks
                    .iter()
                    .map(|c| {
                        let status = if c.failures.is_empty() { "ok  " } else { "FAIL" };
                        format!("{status} {} ({} cases)\n", c.name, c.cases)
                    })
                    .collect(),
            };
            if let Some(e) = verify::first_violation(&checks) {
                print!("{body}");
                return Err(e);
            }
            Ok(Outcome::ok(body))
        }
    }
}

fn write_body(out: &Option<PathBuf>, body: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, body)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn run(argv: Vec<String>) -> u8 {
    let argv = match config::apply(argv) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(&cli).and_then(|o| write_body(&cli.out, &o.body).map(|_| o.code)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(run(std::env::args().collect()))
}
