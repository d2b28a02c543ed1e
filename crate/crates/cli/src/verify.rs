use hecke_core::arith::{pow_big, primes_le};
use hecke_core::cyclotomic::{discriminant, eval_poly, f_poly, phi_poly, psi_constant_term, psi_poly};
use hecke_core::hecke::{coeff_lucas, coeff_prime_power, delta_values, prime_power_from_ap, EigenformSpec};
use hecke_core::ring::{gl2_elements, is_scalar_nth_root, sym_pow, sym_pow_kernel_test, sym_pow_trace, RingDescriptor};
use hecke_core::scan::tower_sweep;
use hecke_core::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed};

pub struct Check {
    pub name: &'static str,
    pub cases: u64,
    pub failures: Vec<String>,
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn cyclotomic_specializations() -> Result<Check> {
    let mut check = Check {
        name: "Phi_n(x,y) = Psi_n((x+y)^2, xy)",
        cases: 0,
        failures: Vec::new(),
    };
    for n in 3..=60u64 {
        let (phi, psi) = (phi_poly(n)?, psi_poly(n)?);
        for x in -4..=4i64 {
            for y in -4..=4i64 {
                check.cases += 1;
                let s = big(x + y);
                if eval_poly(&phi, &big(x), &big(y)) != eval_poly(&psi, &(&s * &s), &big(x * y)) {
                    check.failures.push(format!("n={n} x={x} y={y}"));
                }
            }
        }
    }
    Ok(check)
}

fn geometric_specializations() -> Result<Check> {
    let mut check = Check {
        name: "(x^n - y^n)/(x - y) = (x+y)^e F_n((x+y)^2, xy)",
        cases: 0,
        failures: Vec::new(),
    };
    for n in 3..=40u64 {
        let f = f_poly(n)?;
        for x in -4..=4i64 {
            for y in -4..=4i64 {
                if x == y {
                    continue;
                }
                check.cases += 1;
                let (bx, by) = (big(x), big(y));
                let lhs =
                    (num_traits::pow(bx.clone(), n as usize) - num_traits::pow(by.clone(), n as usize)) / (&bx - &by);
                let s = &bx + &by;
                let mut rhs = eval_poly(&f, &(&s * &s), &(&bx * &by));
                if n % 2 == 0 {
                    rhs *= &s;
                }
                if lhs != rhs {
                    check.failures.push(format!("n={n} x={x} y={y}"));
                }
            }
        }
    }
    Ok(check)
}

fn psi_invariants() -> Result<Check> {
    let mut check = Check {
        name: "|Psi_q(0,1)| = 1 and |disc Psi_q| = q^((q-3)/2)",
        cases: 0,
        failures: Vec::new(),
    };
    for q in [3u64, 5, 7, 11, 13, 17, 19, 23] {
        check.cases += 1;
        let c = psi_constant_term(q)?;
        let d = discriminant(&psi_poly(q)?.dehomogenize())?;
        if !c.abs().is_one() || d.abs() != pow_big(q, (q - 3) / 2) {
            check.failures.push(format!("q={q}"));
        }
    }
    Ok(check)
}

fn hecke_consistency() -> Result<Check> {
    let mut check = Check {
        name: "series, recursion and Lucas agree on tau(p^m)",
        cases: 0,
        failures: Vec::new(),
    };
    let limit = 100_000u64;
    let series = delta_values(limit)?;
    let f = EigenformSpec::delta();
    for p in primes_le(limit) {
        let mut pm = p;
        let mut m = 1u32;
        while pm <= limit {
            check.cases += 1;
            let direct = series.get(pm).expect("in range");
            if coeff_prime_power(&f, p, m)? != direct || coeff_lucas(&f, p, m)? != direct {
                check.failures.push(format!("p={p} m={m}"));
            }
            pm = match pm.checked_mul(p) {
                Some(v) => v,
                None => break,
            };
            m += 1;
        }
    }
    Ok(check)
}

fn psi_factorization() -> Result<Check> {
    let mut check = Check {
        name: "a(p^(q-1)) = Psi_q(a_p^2, p^11)",
        cases: 0,
        failures: Vec::new(),
    };
    let f = EigenformSpec::delta();
    for q in [3u64, 5, 7, 11, 13] {
        let psi = psi_poly(q)?;
        for p in primes_le(500) {
            check.cases += 1;
            let ap = f.ap(p)?;
            let qq = f.char_q(p);
            if prime_power_from_ap(&ap, &qq, q as u32 - 1) != eval_poly(&psi, &(&ap * &ap), &qq) {
                check.failures.push(format!("q={q} p={p}"));
            }
        }
    }
    Ok(check)
}

fn symmetric_powers() -> Result<Check> {
    let mut check = Check {
        name: "Sym^n trace formula and scalar kernel",
        cases: 0,
        failures: Vec::new(),
    };
    for m in [3u64, 5] {
        let ring = RingDescriptor::mod_m(m)?;
        for a in gl2_elements(&ring)? {
            for n in 2..=5 {
                check.cases += 1;
                let trace_ok = sym_pow(&a, n)?.trace() == sym_pow_trace(&a, n)?;
                let kernel_ok = sym_pow_kernel_test(&a, n)? == is_scalar_nth_root(&a, n);
                if !trace_ok || !kernel_ok {
                    check.failures.push(format!("m={m} n={n} A={:?}", a.entries()));
                }
            }
        }
    }
    Ok(check)
}

fn divisibility_tower(workers: usize) -> Result<Check> {
    let sweep = tower_sweep(&EigenformSpec::delta(), 1000, 15, workers)?;
    Ok(Check {
        name: "a(p^(d-1)) | a(p^(2n)) for d | 2n+1",
        cases: sweep.checks,
        failures: sweep.failures.iter().map(|(p, n)| format!("p={p} n={n}")).collect(),
    })
}

pub fn identities(workers: usize) -> Result<Vec<Check>> {
    Ok(vec![
        cyclotomic_specializations()?,
        geometric_specializations()?,
        psi_invariants()?,
        hecke_consistency()?,
        psi_factorization()?,
        symmetric_powers()?,
        divisibility_tower(workers)?,
    ])
}

/// First failing check as an identity violation.
pub fn first_violation(checks: &[Check]) -> Option<Error> {
    checks
        .iter()
        .find(|c| !c.failures.is_empty())
        .map(|c| Error::IdentityViolation(format!("{}: {}", c.name, c.failures.join(", "))))
}
