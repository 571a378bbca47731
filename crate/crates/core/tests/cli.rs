//! Exit codes, determinism and golden JSON reports of the command-line tool.

use std::path::PathBuf;

use klschur::cli::{run, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("klschur").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

/// Reports at (n, r) = (2, 2) kept under tests/golden; regenerate with UPDATE_GOLDEN=1.
const GOLDEN: &[(&str, &[&str], i32)] = &[
    ("hecke_klpoly", &["--json", "hecke", "--r", "2", "klpoly"], EXIT_OK),
    ("hecke_cells", &["--json", "hecke", "--r", "2", "cells"], EXIT_OK),
    ("hecke_afn", &["--json", "hecke", "--r", "2", "afn"], EXIT_OK),
    ("hecke_verify", &["--json", "hecke", "--r", "2", "verify"], EXIT_OK),
    ("qschur_basis", &["--json", "qschur", "--n", "2", "--r", "2", "basis"], EXIT_OK),
    ("qschur_cells", &["--json", "qschur", "--n", "2", "--r", "2", "cells"], EXIT_OK),
    ("qschur_verify", &["--json", "qschur", "--n", "2", "--r", "2", "verify"], EXIT_OK),
    ("wedderburn_gram", &["--json", "wedderburn", "--n", "2", "--r", "2", "gram"], EXIT_OK),
    ("wedderburn_dual", &["--json", "wedderburn", "--n", "2", "--r", "2", "dual"], EXIT_OK),
    ("wedderburn_basis", &["--json", "wedderburn", "--n", "2", "--r", "2", "basis"], EXIT_OK),
    ("wedderburn_m", &["--json", "wedderburn", "--n", "2", "--r", "2", "M"], EXIT_OK),
    ("wedderburn_d", &["--json", "wedderburn", "--n", "2", "--r", "2", "D"], EXIT_OK),
    ("wedderburn_d_rescaled", &["--json", "wedderburn", "--n", "2", "--r", "2", "--schur", "0=2", "--schur", "1=v", "D"], EXIT_OK),
    ("wedderburn_verify", &["--json", "wedderburn", "--n", "2", "--r", "2", "verify"], EXIT_OK),
    ("asymptotic_phi", &["--json", "asymptotic", "--n", "2", "--r", "2", "phi"], EXIT_OK),
    ("asymptotic_verify", &["--json", "asymptotic", "--n", "2", "--r", "2", "verify"], EXIT_OK),
    ("james_e2", &["--json", "james", "--n", "2", "--r", "2", "--e", "2", "--primes", "5,13"], EXIT_FAILURE),
    ("james_e3", &["--json", "james", "--n", "2", "--r", "2", "--e", "3", "--primes", "7,13"], EXIT_OK),
    ("verify_all", &["--json", "verify-all", "--n", "2", "--r", "2"], EXIT_OK),
];

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}

#[test]
fn golden_reports() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (name, args, expected_code) in GOLDEN {
        let (code, out, err) = invoke(args);
        assert_eq!(code, *expected_code, "{name}: {err}");
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(doc["schemaVersion"], "1.0");
        assert!(doc["config"].is_object());
        let path = golden_path(name);
        if update {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, &out).unwrap();
        } else {
            let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
            assert_eq!(out, expected, "{name} differs from its golden file");
        }
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["--json", "wedderburn", "--n", "2", "--r", "3", "D"][..],
        &["--json", "james", "--n", "3", "--r", "2", "--e", "3", "--primes", "7,13", "--both-roots"][..],
        &["--json", "qschur", "--n", "2", "--r", "3", "basis"][..],
    ] {
        assert_eq!(invoke(args), invoke(args));
    }
}

#[test]
fn worked_structure_constant() {
    let (code, out, _) = invoke(&[
        "qschur", "--n", "3", "--r", "3", "fconst", "(2,1,0):e:(1,1,1)", "(1,1,1):s2:(2,1,0)", "(2,1,0):s2:(2,1,0)",
    ]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "1\n"));
    let (_, out, _) = invoke(&[
        "qschur", "--n", "3", "--r", "3", "fconst", "(1,1,1):s1:(1,1,1)", "(1,1,1):s2:(2,1,0)", "(2,1,0):s2:(2,1,0)",
    ]);
    assert_eq!(out, "0\n");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["qschur", "--r", "2", "basis"][..],
        &["hecke", "--r", "2", "bogus"][..],
        &["hecke", "--r", "6", "cells"][..],
        &["qschur", "--n", "4", "--r", "4", "basis"][..],
        &["qschur", "--n", "2", "--r", "2", "fconst", "0", "1", "99"][..],
        &["wedderburn", "--n", "2", "--r", "2", "--schur", "7=v", "D"][..],
        &["wedderburn", "--n", "2", "--r", "2", "--schur", "0=0", "D"][..],
        &["wedderburn", "--n", "2", "--r", "2", "--schur", "0=v^", "D"][..],
        &["james", "--n", "2", "--r", "2", "--e", "7", "--primes", "7"][..],
        &["james", "--n", "2", "--r", "2", "--e", "2", "--primes", "3"][..],
        &["james", "--n", "2", "--r", "2", "--e", "2", "--primes", "15"][..],
    ] {
        let (code, _, err) = invoke(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn help_and_force() {
    assert_eq!(invoke(&["--help"]).0, EXIT_OK);
    let (code, out, _) = invoke(&["--force", "--max-r", "1", "hecke", "--r", "2", "afn"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("s1"));
}

#[test]
fn small_primes_are_allowed_on_request() {
    let args = ["--json", "james", "--n", "2", "--r", "3", "--e", "1", "--primes", "3"];
    assert_eq!(invoke(&args).0, EXIT_USAGE);
    let (code, out, err) = invoke(&[&args[..], &["--allow-small-ell"]].concat());
    assert_ne!(code, EXIT_USAGE, "{err}");
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["result"]["perPrime"][0]["outsideHypothesis"], true);
}
