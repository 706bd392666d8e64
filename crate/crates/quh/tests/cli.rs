//! End-to-end tests of the command-line surface through `cli::run`.

use std::fs;
use std::path::PathBuf;

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let argv = std::iter::once("quh").chain(args.iter().copied());
    let code = quh::cli::run(argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("quh-cli-test-{}-{name}", std::process::id()));
    fs::write(&path, contents).unwrap();
    path
}

#[test]
fn paley_3_emits_the_order_4_block() {
    let (code, out) = run(&["paley", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "4\n++++\n-+-+\n-++-\n--++\n");
}

#[test]
fn jacobsthal_has_zero_diagonal() {
    let (code, out) = run(&["jacobsthal", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "3\n0-+\n+0-\n-+0\n");
}

#[test]
fn verify_skew_failure_message_and_exit_code() {
    let sym = temp_file("sym", "2\n++\n+-\n");
    let (code, out) = run(&["verify", sym.to_str().unwrap(), "--kind", "skew"]);
    assert_eq!(out, "FAIL: H+Ht != 2I\n");
    assert_eq!(code, 1);
    fs::remove_file(sym).unwrap();
}

#[test]
fn verify_ok_paths() {
    let (_, paley) = run(&["paley", "7"]);
    let f = temp_file("paley7", &paley);
    for kind in ["hadamard", "skew"] {
        let (code, out) = run(&["verify", f.to_str().unwrap(), "--kind", kind]);
        assert_eq!((code, out.as_str()), (0, "OK\n"), "kind={kind}");
    }
    fs::remove_file(f).unwrap();

    let (_, fks) = run(&["fks", "3", "2"]);
    let f = temp_file("fks32", &fks);
    let (code, out) = run(&["verify", f.to_str().unwrap(), "--kind", "quh"]);
    assert_eq!((code, out.as_str()), (0, "OK\n"));
    fs::remove_file(f).unwrap();
}

#[test]
fn pipeline_fks_morph_verify() {
    for (q, t) in [(3u32, 1u32), (3, 2), (7, 1), (7, 2)] {
        let (code, quh_text) = run(&["fks", &q.to_string(), &t.to_string()]);
        assert_eq!(code, 0);
        let (code, skew_text) = run(&["paley", &q.to_string()]);
        assert_eq!(code, 0);
        let quh_file = temp_file(&format!("quh-{q}-{t}"), &quh_text);
        let skew_file = temp_file(&format!("skew-{q}-{t}"), &skew_text);
        let (code, morphed) = run(&[
            "morph",
            quh_file.to_str().unwrap(),
            skew_file.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        let morphed_file = temp_file(&format!("morphed-{q}-{t}"), &morphed);
        let (code, out) = run(&["verify", morphed_file.to_str().unwrap(), "--kind", "hadamard"]);
        assert_eq!((code, out.as_str()), (0, "OK\n"), "q={q} t={t}");
        for f in [quh_file, skew_file, morphed_file] {
            fs::remove_file(f).unwrap();
        }
    }
}

#[test]
fn emitted_matrices_reparse_identically() {
    let (_, text) = run(&["paley", "11"]);
    let parsed = quh::matrix::parse_pm(&text).unwrap();
    assert_eq!(quh::matrix::format_pm(&parsed), text);
    let (_, qt) = run(&["fks", "7", "1"]);
    let pair = quh::constructions::parse_quh(&qt).unwrap();
    assert_eq!(quh::constructions::format_quh(&pair), qt);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["paley", "27"],
        vec!["fks", "3", "3"],
        vec!["table", "7", "--max-n", "60"],
        vec!["density", "7", "--limit", "1000"],
    ] {
        let (c1, o1) = run(&args);
        let (c2, o2) = run(&args);
        assert_eq!((c1, &o1), (c2, &o2), "args={args:?}");
        assert_eq!(c1, 0);
    }
}

#[test]
fn nonexist_and_table_output() {
    let (code, out) = run(&["nonexist", "5", "43"]);
    assert_eq!((code, out.as_str()), (0, "EMPTY witness=5\n"));
    let (code, out) = run(&["nonexist", "3", "7"]);
    assert_eq!((code, out.as_str()), (0, "UNKNOWN\n"));
    let (code, out) = run(&["table", "7", "--max-n", "50"]);
    assert_eq!((code, out.as_str()), (0, "17\n31\n41\n47\n"));
}

#[test]
fn split_type_and_density_output() {
    let (code, out) = run(&["split-type", "5", "43"]);
    assert_eq!(code, 0);
    assert!(out.contains("K2"), "got {out:?}");
    let (code, out) = run(&["density", "7", "--limit", "100"]);
    assert_eq!(code, 0);
    assert!(out.contains('/'), "got {out:?}");
}

#[test]
fn search_outcomes() {
    let (code, out) = run(&["search", "5", "43"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("EMPTY"), "got {out:?}");

    let (code, out) = run(&["search", "3", "3"]);
    assert_eq!(code, 0, "H(3, X_3) exists, no inconsistency expected");
    assert!(out.starts_with("FOUND"), "got {out:?}");

    let (code, out) = run(&["search", "4", "1", "--budget", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("ABORTED"), "got {out:?}");
}

#[test]
fn minpoly_check_reports() {
    let (_, paley) = run(&["paley", "3"]);
    let f = temp_file("minpoly-3", &paley);
    let (code, out) = run(&["minpoly-check", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("holds"));
    assert!(out.contains("minimal: no"), "m+1 = 4 is a square: {out:?}");
    fs::remove_file(f).unwrap();

    let (_, paley) = run(&["paley", "7"]);
    let f = temp_file("minpoly-7", &paley);
    let (code, out) = run(&["minpoly-check", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("minimal: yes"), "{out:?}");
    fs::remove_file(f).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["paley", "5"]).0, 2); // 5 ≡ 1 mod 4
    assert_eq!(run(&["paley", "x"]).0, 2);
    assert_eq!(run(&["nonexist", "4", "7"]).0, 2); // even n
    assert_eq!(run(&["nonexist", "5", "3"]).0, 2); // p = 3 routed elsewhere
    assert_eq!(run(&["morph", "/nonexistent/a", "/nonexistent/b"]).0, 2);
    assert_eq!(run(&["split-type", "2", "7"]).0, 2);
    assert_eq!(run(&["density", "7", "--limit", "2"]).0, 2);
    let bad = temp_file("bad-pm", "2\n+x\n++\n");
    assert_eq!(run(&["verify", bad.to_str().unwrap(), "--kind", "hadamard"]).0, 2);
    fs::remove_file(bad).unwrap();
}
