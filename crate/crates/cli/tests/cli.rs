use std::io::Write;
use std::process::{Command, Stdio};

use colorlie_cli::fixtures::NAMES;
use colorlie_cli::report::digest;
use serde_json::Value;

fn colorlie(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_colorlie"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().expect("exit code"), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out) = colorlie(args);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")))
}

fn status<'a>(report: &'a Value, check: &str) -> &'a str {
    report["checks"][check]["status"].as_str().unwrap_or_else(|| panic!("no check {check}"))
}

#[test]
fn gl11_is_lie() {
    let (code, r) = json(&["check", "lie", "--fixture", "gl11"]);
    assert_eq!(code, 0);
    for c in ["graded", "skew", "jacobi-j1", "jacobi-j2", "j1-j2-relation"] {
        assert_eq!(status(&r, c), "pass");
    }
}

#[test]
fn broken_jacobi_fails_with_its_witness() {
    let (code, r) = json(&["check", "lie", "--fixture", "broken-jacobi"]);
    assert_eq!(code, 1);
    let w = &r["checks"]["jacobi-j2"]["witness"];
    assert_eq!(w["labels"], serde_json::json!(["x", "y", "z"]));
    // [[x,y],z] − [x,[y,z]] + [y,[x,z]] = [x,z] − 0 + [y,y] = y
    assert_eq!(w["lhs"], "{y: 1}");
    assert_eq!(w["rhs"], "0");
    assert_eq!(status(&r, "skew"), "pass");
    assert_eq!(status(&r, "j1-j2-relation"), "pass");
}

#[test]
fn omni_homotopy_on_the_super_plane() {
    let (code, r) = json(&["omni", "verify-homotopy", "--fixture", "omni-super-plane"]);
    assert_eq!(code, 0);
    assert_eq!(status(&r, "homotopy"), "pass");
}

#[test]
fn as_printed_h_is_an_input_error() {
    let (code, r) = json(&["l2", "check", "--fixture", "omni-super-plane-l2", "--h-form", "as-printed"]);
    assert_eq!(code, 2);
    assert_eq!(r["error"]["kind"], "UnboundSymbol");
}

#[test]
fn printed_i_form_fails_on_the_omni_construction() {
    let (code, r) = json(&["l2", "check", "--fixture", "omni-super-plane-l2", "--i-form", "printed"]);
    assert_eq!(code, 1);
    assert_eq!(status(&r, "i"), "fail");
    let (code, _) = json(&["l2", "check", "--fixture", "omni-super-plane-l2"]);
    assert_eq!(code, 0);
}

#[test]
fn abelian_fixture_passes_every_applicable_check() {
    let runs: &[&[&str]] = &[
        &["check", "bicharacter"],
        &["check", "lie"],
        &["check", "leibniz"],
        &["omni", "leibniz"],
        &["omni", "homotopy"],
        &["omni", "dirac"],
        &["omni", "derivations"],
        &["omni", "dirac-from-lie"],
        &["omni", "dirac-from-lie", "--subspace", "W"],
        &["l2", "from-omni"],
    ];
    for args in runs {
        let mut a = args.to_vec();
        a.extend(["--fixture", "abelian-z2-dim2"]);
        let (code, out) = colorlie(&a);
        assert_eq!(code, 0, "{a:?}: {out}");
    }
}

/// Every fixture with a command it passes, and the broken ones with a command they fail.
#[test]
fn fixture_coverage() {
    let cases: &[(&str, &[&str], i32)] = &[
        ("abelian-z2-dim2", &["check", "lie"], 0),
        ("broken-jacobi", &["check", "lie"], 1),
        ("broken-jacobi", &["check", "leibniz"], 1),
        ("broken-jacobi", &["omni", "dirac"], 1),
        ("broken-l3", &["l2", "check"], 1),
        ("broken-l3", &["lc2", "jacobiator"], 1),
        ("gl-klein", &["omni", "derivations"], 0),
        ("gl11", &["check", "representation"], 0),
        ("gl11", &["omni", "dirac-from-lie"], 0),
        ("gl11-in-dim5", &["omni", "dirac-from-lie", "--subspace", "W"], 0),
        ("gl11-supertrace", &["check", "quadratic"], 0),
        ("gl11-supertrace", &["l2", "string"], 0),
        ("inn-der-gl11", &["l2", "crossed-to-strict"], 0),
        ("inn-der-gl11-strict", &["l2", "strict-to-crossed"], 0),
        ("inn-der-gl11-strict", &["lc2", "roundtrip"], 0),
        ("omni-klein-plane", &["omni", "leibniz"], 0),
        ("omni-line", &["l2", "from-omni"], 0),
        ("omni-super-plane", &["omni", "dirac", "--subspace", "endomorphisms"], 0),
        ("omni-super-plane", &["omni", "lie-from-dirac", "--subspace", "vectors"], 0),
        ("omni-super-plane-l2", &["lc2", "jacobiator"], 0),
        ("omni-z3-plane", &["omni", "homotopy"], 0),
        ("sl2", &["check", "lie"], 0),
        ("sl2-killing", &["l2", "string"], 0),
        ("sl2-string", &["l2", "skeletal"], 0),
        ("sl2-string", &["lc2", "roundtrip"], 0),
    ];
    for name in NAMES {
        assert!(cases.iter().any(|(n, _, c)| n == name && *c == 0) || name.starts_with("broken"), "{name}");
    }
    for (name, args, expected) in cases {
        let mut a = args.to_vec();
        a.extend(["--fixture", name]);
        let (code, out) = colorlie(&a);
        assert_eq!(code, *expected, "{a:?}: {out}");
    }
}

#[test]
fn suite_is_deterministic() {
    let (code, a) = colorlie(&["suite", "--seed", "7", "--trials", "4"]);
    assert_eq!(code, 0, "{a}");
    let (_, b) = colorlie(&["suite", "--seed", "7", "--trials", "4"]);
    assert_eq!(a, b);
    let r: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(r["seed"], 7);
    assert!(r["checks"].as_object().unwrap().contains_key("omni-z3-plane/homotopy"));
}

#[test]
fn files_and_stdin_give_the_same_digest() {
    let (_, text) = colorlie(&["fixtures", "gl11"]);
    let path = std::env::temp_dir().join(format!("colorlie-gl11-{}.json", std::process::id()));
    std::fs::write(&path, &text).unwrap();
    let (code, from_file) = json(&["check", "lie", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, 0);
    assert_eq!(from_file["input_sha256"], digest(text.as_bytes()));

    let mut child = Command::new(env!("CARGO_BIN_EXE_colorlie"))
        .args(["check", "lie", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let from_stdin: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(from_stdin, from_file);
}

#[test]
fn text_and_json_agree() {
    let (_, r) = json(&["lc2", "jacobiator", "--fixture", "broken-l3"]);
    let (_, text) = colorlie(&["lc2", "jacobiator", "--fixture", "broken-l3", "--format", "text"]);
    for (name, c) in r["checks"].as_object().unwrap() {
        let tag = match c["status"].as_str().unwrap() {
            "pass" => "PASS",
            "fail" => "FAIL",
            _ => "SKIP",
        };
        assert!(text.lines().any(|l| l.starts_with(&format!("{tag} {name}"))), "{name}");
    }
    assert!(text.contains("elapsed:"));
    assert!(r.get("elapsed").is_none());
}

#[test]
fn input_errors_exit_2() {
    let (code, r) = json(&["frobnicate"]);
    assert_eq!((code, r["error"]["kind"].as_str()), (2, Some("UnknownCommand")));
    let (code, r) = json(&["fixtures", "gl12"]);
    assert_eq!((code, r["error"]["kind"].as_str()), (2, Some("UnknownFixture")));
    let (code, r) = json(&["check", "lie", "--fixture", "gl11", "--max-dim", "3"]);
    assert_eq!((code, r["error"]["kind"].as_str()), (2, Some("TooLarge")));
    let (code, r) = json(&["l2", "skeletal", "--fixture", "inn-der-gl11-strict"]);
    assert_eq!((code, r["error"]["kind"].as_str()), (2, Some("InputError")));
    let (code, _) = json(&["check", "lie"]);
    assert_eq!(code, 2);
}

#[test]
fn bad_bicharacter_and_bad_literal() {
    let dir = std::env::temp_dir();
    let bad_eps = dir.join(format!("colorlie-eps-{}.json", std::process::id()));
    std::fs::write(
        &bad_eps,
        r#"{"cyclotomic_order": 4, "group": {"cyclic_orders": [2, 2]},
            "bicharacter": {"exponents": [[0, 1], [1, 0]]},
            "space": {"basis": [{"name": "a", "degree": [1, 0]}]}}"#,
    )
    .unwrap();
    let p = bad_eps.to_str().unwrap();
    let (code, r) = json(&["check", "bicharacter", p]);
    assert_eq!(code, 1);
    assert_eq!(status(&r, "skew-symmetry"), "fail");
    assert_eq!(status(&r, "well-defined"), "fail");
    let (code, r) = json(&["check", "lie", p]);
    assert_eq!((code, r["error"]["kind"].as_str()), (2, Some("InvalidBicharacter")));
    std::fs::remove_file(&bad_eps).unwrap();

    let bad_lit = dir.join(format!("colorlie-lit-{}.json", std::process::id()));
    std::fs::write(
        &bad_lit,
        r#"{"cyclotomic_order": 1, "group": {"cyclic_orders": [1]},
  "bicharacter": {"exponents": [[0]]},
  "space": {"basis": [{"name": "x", "degree": [0]}]},
  "bracket": {"entries": [{"i": 0, "j": 0, "k": 0, "coeff": "1//2*z"}]}}"#,
    )
    .unwrap();
    let (code, r) = json(&["check", "lie", bad_lit.to_str().unwrap()]);
    std::fs::remove_file(&bad_lit).unwrap();
    assert_eq!((code, r["error"]["kind"].as_str()), (2, Some("ParseError")));
    assert!(r["error"]["message"].as_str().unwrap().contains("line 4"));
}
