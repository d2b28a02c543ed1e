use std::fs;

use hecke_core::hecke::{coeff_prime_power, export_table, ingest_table, EigenformSpec};
use hecke_core::scan::{sato_tate_histogram, tower_sweep};
use hecke_core::Error;

fn exported_delta(bound: u64) -> (tempfile::TempDir, std::path::PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("delta.csv");
    let file = fs::File::create(&path).unwrap();
    export_table(&EigenformSpec::delta(), bound, file).unwrap();
    (dir, path)
}

#[test]
fn exported_table_reproduces_builtin_coefficients() {
    let (_dir, path) = exported_delta(2000);
    let table = ingest_table(&path, 12, 1).unwrap();
    let delta = EigenformSpec::delta();
    for p in [2u64, 3, 97, 1999] {
        for m in 0..6 {
            assert_eq!(
                coeff_prime_power(&table, p, m).unwrap(),
                coeff_prime_power(&delta, p, m).unwrap()
            );
        }
    }
    assert!(matches!(table.ap(2003), Err(Error::DataExhausted { p: 2003, .. })));
}

#[test]
fn sweeps_agree_between_table_and_builtin() {
    let (_dir, path) = exported_delta(5000);
    let table = ingest_table(&path, 12, 1).unwrap();
    let delta = EigenformSpec::delta();
    assert_eq!(
        tower_sweep(&table, 5000, 21, 1).unwrap(),
        tower_sweep(&delta, 5000, 21, 2).unwrap()
    );
    let a = sato_tate_histogram(&table, 5000, 10).unwrap();
    let b = sato_tate_histogram(&delta, 5000, 10).unwrap();
    assert_eq!(a.counts, b.counts);
    assert!(sato_tate_histogram(&table, 6000, 10).is_err());
}

#[test]
fn malformed_tables_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&str, fn(&Error) -> bool); 5] = [
        ("p,a_p\n2,-24\n4,1\n", |e| matches!(e, Error::NonPrimeIndex(4))),
        ("2,-24\n2,-24\n", |e| matches!(e, Error::DuplicatePrime(2))),
        ("2,-24\n5,4830\n", |e| matches!(e, Error::MissingPrime(3))),
        ("2,100000\n", |e| matches!(e, Error::DeligneViolation { p: 2, .. })),
        ("2,-24\n3,abc\n", |e| matches!(e, Error::Parse { .. })),
    ];
    for (i, (text, expect)) in cases.iter().enumerate() {
        let path = dir.path().join(format!("bad{i}.csv"));
        fs::write(&path, text).unwrap();
        let err = ingest_table(&path, 12, 1).unwrap_err();
        assert!(expect(&err), "case {i}: {err:?}");
    }
    assert!(matches!(
        ingest_table(&dir.path().join("missing.csv"), 12, 1),
        Err(Error::Io(_))
    ));
}
