//! Exit-status contract of the command line, in process and through the
//! built binary.

mod common;

use std::process::Command;

use common::fixtures_dir;
use holoreduce::cli::{run, EXIT_MATH, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = run(std::iter::once("holoreduce").chain(args.iter().copied()), &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn fixture(name: &str) -> String {
    fixtures_dir().join(format!("{name}.fixture")).display().to_string()
}

const DOMB32: &str = "(n+1)^3 + (2*n+3)*(5*n^2+15*n+12)*S + 16*(n+2)^3*S^2";

fn write_temp(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("holoreduce-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn golden_matrix() {
    let upper_a2_i2 = fixture("upper_a2_i2");
    let cong2 = fixture("domb16_cong_lower");
    let valid: Vec<Vec<&str>> = vec![
        vec!["classify", "--operator", DOMB32],
        vec!["reduce", "--operator", DOMB32, "--poly", "n^4"],
        vec![
            "rational-reduce", "--operator", DOMB32, "--poly", "3*n+1", "--factor", "(n+2)^2",
            "--side", "upper", "--order", "2",
        ],
        vec!["verify", "--fixture", &upper_a2_i2, "--mode", "exact"],
        vec!["verify", "--fixture", &upper_a2_i2, "--mode", "numeric", "--N", "1000"],
        vec!["verify", "--fixture", &cong2, "--mode", "congruence", "--primes", "7,13,19"],
        vec!["eval", "--sequence", "franel", "--from", "0", "--to", "5"],
        vec!["sum", "--sequence", "franel", "--multiplier", "1/(n+1)", "--from", "0", "--to", "5"],
    ];
    let malformed: Vec<Vec<&str>> = vec![
        vec![],
        vec!["classify"],
        vec!["classify", "--operator", "S*n"],
        vec!["classify", "--operator", "S-1", "--format", "yaml"],
        vec!["reduce", "--operator", "S^-1", "--poly", "n"],
        vec!["rational-reduce", "--operator", DOMB32, "--poly", "1", "--factor", "n+7", "--side", "upper", "--order", "2"],
        vec!["rational-reduce", "--operator", DOMB32, "--poly", "1", "--factor", "n+2", "--side", "middle", "--order", "2"],
        vec!["verify", "--fixture", "/nonexistent.fixture", "--mode", "exact"],
        vec!["verify", "--fixture", &cong2, "--mode", "congruence", "--primes", "11"],
        vec!["verify", "--fixture", &cong2, "--mode", "numeric"],
        vec!["eval", "--sequence", "unknown", "--from", "0"],
    ];
    for args in &valid {
        for format in ["text", "latex", "structured"] {
            let mut a = args.clone();
            a.extend(["--format", format]);
            let (code, out) = call(&a);
            assert_eq!(code, EXIT_OK, "{a:?}\n{out}");
        }
    }
    for args in &malformed {
        assert_eq!(call(args).0, EXIT_USAGE, "{args:?}");
    }
}

#[test]
fn math_failures_exit_one() {
    let corrupted = std::fs::read_to_string(fixtures_dir().join("upper_a2_i2.fixture"))
        .unwrap()
        .replace("18/pi", "19/pi");
    let path = write_temp("upper_a2_i2.fixture", &corrupted);
    std::fs::copy(fixtures_dir().join("domb_neg32.fixture"), std::path::Path::new(&path).with_file_name("domb_neg32.fixture")).unwrap();
    let (code, out) = call(&["verify", "--fixture", &path, "--mode", "numeric", "--N", "1000"]);
    assert_eq!(code, EXIT_MATH, "{out}");
    assert!(out.starts_with("FAIL\n") && out.contains("abs_error:"), "{out}");
    let (code, out) = call(&["verify", "--fixture", &path, "--mode", "exact"]);
    assert_eq!(code, EXIT_MATH, "{out}");
    assert!(out.contains("target_matches: false"), "{out}");

    let cong = std::fs::read_to_string(fixtures_dir().join("domb16_cong_lower.fixture"))
        .unwrap()
        .replace("3/2 mod", "5/2 mod");
    let path = write_temp("bad_cong.fixture", &cong);
    let (code, out) = call(&["verify", "--fixture", &path, "--mode", "congruence", "--primes", "13,7"]);
    assert_eq!(code, EXIT_MATH);
    assert!(out.contains("primes: [7, 13]") && out.contains("failing_primes: [7, 13]"), "{out}");

    // 2^(n^2) has no small annihilator
    let terms: String = (0..40u32).map(|n| format!("{}\n", num_bigint::BigInt::from(2).pow(n * n % 41))).collect();
    let path = write_temp("wild.terms", &terms);
    let (code, out) = call(&["guess", "--terms", &path, "--max-order", "1", "--max-deg", "1"]);
    assert_eq!(code, EXIT_MATH);
    assert!(out.starts_with("none\n"));
}

#[test]
fn guess_from_files() {
    let ones = write_temp("ones.terms", &"1\n".repeat(30));
    let (code, out) = call(&["guess", "--terms", &ones, "--max-order", "1", "--max-deg", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("(-1) + S\n"), "{out}");
    let few = write_temp("few.terms", "1\n1\n");
    assert_eq!(call(&["guess", "--terms", &few]).0, EXIT_USAGE);
    let franel: String = (0..40u64)
        .map(|n| format!("{}\n", holoreduce::sequences::closed::franel(n)))
        .collect();
    let path = write_temp("franel.terms", &format!("# Franel numbers\n{franel}"));
    let (code, out) = call(&["guess", "--terms", &path, "--format", "structured"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["annihilator"]["coeffs"].as_array().unwrap().len(), 3);
}

#[test]
fn known_reductions_through_the_cli() {
    let (code, out) = call(&[
        "reduce",
        "--operator",
        "8*(2+n)^4*S^2 - n*(3+2*n)*(12+15*n+5*n^2)*S + 2*(n-1)*n*(1+n)^2",
        "--poly",
        "n*(n-1)*(3*n+1)",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("remainder: 2*n^2 + 4*n + 2\n"), "{out}");
    assert!(out.contains("multiplier: -1\n"), "{out}");
    let (code, out) = call(&[
        "rational-reduce", "--operator", DOMB32, "--poly", "3*n+1", "--factor", "(n+2)^2",
        "--side", "upper", "--order", "3",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("denominator: n^6 + 12*n^5 + 58*n^4 + 144*n^3 + 193*n^2 + 132*n + 36\n"), "{out}");
    let (code, out) = call(&[
        "rational-reduce", "--operator", DOMB32, "--poly", "3*n+1", "--factor", "1",
        "--side", "upper", "--order", "2",
    ]);
    assert_eq!(code, EXIT_OK);
    let (_, plain) = call(&["reduce", "--operator", DOMB32, "--poly", "3*n+1"]);
    let rem = |s: &str| s.lines().find(|l| l.starts_with("remainder")).map(str::to_string);
    assert_eq!(rem(&plain), out.lines().find(|l| l.starts_with("remainder_numer")).map(|l| l.replacen("remainder_numer", "remainder", 1)));
}

#[test]
fn auto_grow_reports_cap() {
    let harmonic = "n*(n+1)^2 - (n+1)*(n+2)*(2*n+3)*S + (n+2)^2*(n+3)*S^2";
    let (code, out) = call(&[
        "rational-reduce", "--operator", harmonic, "--poly", "n^6", "--factor", "n+2",
        "--side", "upper", "--order", "2", "--auto-grow",
    ]);
    assert_eq!(code, EXIT_MATH, "{out}");
    assert!(out.contains("cap: 8\n") && out.contains("2..=10"), "{out}");
    let (code, out) = call(&[
        "rational-reduce", "--operator", DOMB32, "--poly", "3*n+1", "--factor", "(n+2)^2",
        "--side", "upper", "--order", "2", "--auto-grow",
    ]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("order_requested: 2\norder: 2\n"), "{out}");
}

#[test]
fn binary_and_structured_stability() {
    let bin = env!("CARGO_BIN_EXE_holoreduce");
    let run_bin = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let args = ["classify", "--operator", DOMB32, "--format", "structured"];
    let a = run_bin(&args);
    let b = run_bin(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], "holoreduce-v1");
    assert_eq!(v["degL"], 3);
    assert_eq!(run_bin(&["classify", "--operator", "S*"]).status.code(), Some(2));
}
