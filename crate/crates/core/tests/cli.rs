//! End-to-end runs of the command line against golden outputs.

use std::path::{Path, PathBuf};

use chainform::cli::{run, CliOutput};

const GOLDEN: [&str; 3] = ["b3", "young21", "w321"];

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn cli(args: &[&str]) -> CliOutput {
    run(std::iter::once("chainform").chain(args.iter().copied()))
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

#[test]
fn builders_reproduce_golden_posets() {
    let dir = tempfile::tempdir().unwrap();
    for (name, spec) in [
        ("b3", vec!["boolean", "3"]),
        ("young21", vec!["young", "-", "/", "2,1"]),
        ("w321", vec!["weak-order", "321"]),
    ] {
        let out = dir.path().join(format!("{name}.poset"));
        let mut args = vec!["build"];
        args.extend(spec);
        args.extend(["-o", path_str(&out)]);
        let r = cli(&args);
        assert_eq!(r.code, 0, "{}", r.stderr);
        let built = std::fs::read_to_string(&out).unwrap();
        let golden = std::fs::read_to_string(golden_dir().join(format!("{name}.poset"))).unwrap();
        assert_eq!(built, golden, "{name}");
    }
}

#[test]
fn golden_outputs_are_byte_exact_across_runs_and_threads() {
    for name in GOLDEN {
        let poset = golden_dir().join(format!("{name}.poset"));
        for cmd in ["fp", "stats", "check"] {
            let expected = std::fs::read_to_string(golden_dir().join(format!("{name}.{cmd}.txt"))).unwrap();
            for threads in ["1", "4", "1", "4"] {
                let r = cli(&["--threads", threads, cmd, path_str(&poset)]);
                assert_eq!(r.code, 0, "{name} {cmd}: {}", r.stderr);
                assert_eq!(r.stdout, expected, "{name} {cmd} threads={threads}");
            }
        }
    }
}

#[test]
fn fp_methods_and_bases() {
    let b3 = golden_dir().join("b3.poset");
    let b3 = path_str(&b3);
    let reference = cli(&["fp", b3]).stdout;
    for method in ["via_M", "via_dF", "via_chains"] {
        assert_eq!(cli(&["fp", b3, "--method", method]).stdout, reference, "{method}");
    }
    assert_eq!(cli(&["fp", b3, "--basis", "s"]).stdout, "+1 s[3] +2 s[2,1] +1 s[1,1,1]\n");
    assert_eq!(cli(&["fp", b3, "--basis", "m"]).stdout, "+1 m[3] +3 m[2,1] +6 m[1,1,1]\n");
    let w = golden_dir().join("w321.poset");
    assert_eq!(cli(&["fp", path_str(&w), "--basis", "s"]).stdout, "+1 s[2,1]\n");
    assert_eq!(cli(&["fp", path_str(&w), "--basis", "F"]).stdout, "+1 F[1|3] +1 F[2|3]\n");
}

#[test]
fn non_symmetric_poset_reports_error_name() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("chain.poset");
    assert_eq!(cli(&["build", "chain", "1,3,2", "-o", path_str(&p)]).code, 0);
    let r = cli(&["fp", path_str(&p), "--basis", "s"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("NotSymmetric"), "{}", r.stderr);
    assert_eq!(cli(&["fp", path_str(&p), "--basis", "F"]).stdout, "+1 F[2|3]\n");
}

#[test]
fn product_coproduct_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let x = dir.path().join("x.poset");
    let xx = dir.path().join("xx.poset");
    assert_eq!(cli(&["build", "chain", "1", "-o", path_str(&x)]).code, 0);
    let r = cli(&["product", path_str(&x), path_str(&x), "-o", path_str(&xx)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(cli(&["fp", path_str(&xx)]).stdout, "+1 M[2] +2 M[1,1]\n");
    let r = cli(&["coproduct", path_str(&xx)]);
    assert_eq!(r.stdout.lines().count(), 3);
    assert!(r.stdout.contains("+2 {elements 2; cover 0 1 1}⊗{elements 2; cover 0 1 1}"));
    let b3 = golden_dir().join("b3.poset");
    let r = cli(&["hopf-verify", path_str(&xx), path_str(&b3)]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    assert!(!r.stdout.contains("FAIL"));
    assert!(r.stdout.lines().count() > 20);
}

#[test]
fn error_exit_codes() {
    let r = cli(&["fp", "nonexistent.poset"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("IoError"));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.poset");
    std::fs::write(&bad, "elements 3\ncover 0 1 1\ncover 0 2 1\n").unwrap();
    let r = cli(&["validate", path_str(&bad)]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("NoUniqueBounds"), "{}", r.stderr);
    let big = dir.path().join("b5.poset");
    assert_eq!(cli(&["build", "boolean", "5", "-o", path_str(&big)]).code, 0);
    let r = cli(&["--max-rank", "4", "stats", path_str(&big)]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("RankLimitExceeded"));
    assert_eq!(cli(&["build", "cube", "3"]).code, 1);
    let r = cli(&["fp", path_str(&big), "--method", "via_x"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("--method"));
    assert_eq!(cli(&[]).code, 2);
}

#[test]
fn validate_and_chains() {
    let y = golden_dir().join("young21.poset");
    assert_eq!(cli(&["validate", path_str(&y)]).stdout, "valid: 5 elements, rank 3, 5 covers\n");
    assert_eq!(
        cli(&["chains", path_str(&y)]).stdout,
        "0 1 2 4 | 0 -1 1 | {1}\n0 1 3 4 | 0 1 -1 | {2}\n"
    );
}

#[test]
fn threads_env_fallback() {
    // Only checks that a bad value is ignored and a good one is accepted.
    let b3 = golden_dir().join("b3.poset");
    let expected = std::fs::read_to_string(golden_dir().join("b3.fp.txt")).unwrap();
    std::env::set_var(chainform::cli::THREADS_ENV, "2");
    assert_eq!(cli(&["fp", path_str(&b3)]).stdout, expected);
    std::env::set_var(chainform::cli::THREADS_ENV, "many");
    assert_eq!(cli(&["fp", path_str(&b3)]).stdout, expected);
    std::env::remove_var(chainform::cli::THREADS_ENV);
}
