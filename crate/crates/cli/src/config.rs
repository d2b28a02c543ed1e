//! `--config FILE`: `key = value` lines that fill in flags missing from argv.

use std::fs;

use hecke_core::{Error, Result};

fn config_path(argv: &[String]) -> Option<String> {
    let mut it = argv.iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            return it.next().cloned();
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Some(p.to_string());
        }
    }
    None
}

fn has_flag(argv: &[String], key: &str) -> bool {
    let flag = format!("--{key}");
    let prefixed = format!("--{key}=");
    argv.iter().any(|a| *a == flag || a.starts_with(&prefixed))
}

pub fn parse(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| Error::Parse {
            line: i as u64 + 1,
            msg: format!("expected key=value, got {line:?}"),
        })?;
        let key = k.trim().replace('_', "-");
        if key.is_empty() || key == "config" {
            return Err(Error::Parse {
                line: i as u64 + 1,
                msg: format!("invalid key {k:?}"),
            });
        }
        out.push((key, v.trim().to_string()));
    }
    Ok(out)
}

/// Append config entries as flags, leaving explicit flags untouched.
pub fn apply(mut argv: Vec<String>) -> Result<Vec<String>> {
    let Some(path) = config_path(&argv) else {
        return Ok(argv);
    };
    let text = fs::read_to_string(&path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
    for (key, value) in parse(&text)? {
        if has_flag(&argv, &key) {
            continue;
        }
        match value.as_str() {
            "true" => argv.push(format!("--{key}")),
            "false" => {}
            _ => argv.push(format!("--{key}={value}")),
        }
    }
    Ok(argv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_comments_and_underscores() {
        let kv = parse("# defaults\nrho_iterations = 10\n\nx=2000 # bound\n").unwrap();
        assert_eq!(
            kv,
            vec![("rho-iterations".into(), "10".into()), ("x".into(), "2000".into())]
        );
    }

    #[test]
    fn rejects_lines_without_equals() {
        assert!(matches!(parse("x 10"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn explicit_flags_win() {
        let argv = args(&["hecke", "scan", "--x", "50"]);
        assert!(has_flag(&argv, "x"));
        assert!(!has_flag(&argv, "exponent"));
        assert_eq!(config_path(&args(&["hecke", "--config=a.cfg"])), Some("a.cfg".into()));
    }
}
