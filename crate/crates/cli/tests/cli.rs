use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use zerosum_cli::run;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn zerosum(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("zerosum").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap_or_else(|e| panic!("bad json {e}: {s}"))
}

#[test]
fn check_matching_pennies() {
    let (code, out, _) = zerosum(&["check", &fixture("matching_pennies.json")]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["status"], "adversarial");
    assert_eq!(v["alpha"], "1/1");
    assert_eq!(v["beta"], "0/1");
    assert!(v["witness"].is_null());
}

#[test]
fn check_cube_game_reports_mismatch() {
    let (code, out, _) = zerosum(&["check", &fixture("cube_game.json")]);
    assert_eq!(code, 1);
    let v = json(&out);
    assert_eq!(v["status"], "not_adversarial");
    assert_eq!(v["witness"]["kind"], "affine_mismatch");
    assert_eq!(v["witness"]["cell"], serde_json::json!([1, 0]));
    assert_eq!(v["witness"]["expected"], "-2/1");
    assert_eq!(v["witness"]["actual"], "-8/1");
}

#[test]
fn check_degenerate_and_prisoners() {
    let (code, out, _) = zerosum(&["check", &fixture("constant.json")]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!((v["status"].as_str(), v["beta"].as_str()), (Some("degenerate"), Some("8/1")));

    let (code, out, _) = zerosum(&["check", &fixture("prisoners_dilemma.json")]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["status"], "not_adversarial");
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"rows": 2, "cols": 2, "u1": [[1]], "u2": [[1]]}"#).unwrap();
    let (code, out, err) = zerosum(&["check", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("error"), "{err}");

    let (code, _, err) = zerosum(&["check", "/nonexistent/game.json"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());

    let (code, _, err) = zerosum(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn normalize_writes_zero_sum_game() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("z.json");
    let (code, _, _) = zerosum(&["normalize", &fixture("disguised.json"), "--out", target.to_str().unwrap()]);
    assert_eq!(code, 0);
    let z = zerosum_core::format::parse_game(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert!(z.is_zero_sum());
    assert_eq!(z.u1(), &zerosum_core::Matrix::from_i64(&[&[-1, -5], &[-5, -1]]).unwrap());

    let (code, out, _) = zerosum(&["normalize", &fixture("cube_game.json")]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["status"], "not_adversarial");
}

#[test]
fn solve_reports_both_scales() {
    let (code, out, _) = zerosum(&["solve", &fixture("disguised.json")]);
    assert_eq!(code, 0);
    let v = json(&out);
    // v1 = 2·u1 − 3 has value −3 at the uniform equilibrium; u1 pays 0 there
    assert_eq!(v["value"], "-3/1");
    assert_eq!(v["u1_value"], "0/1");
    assert_eq!(v["row_strategy"], serde_json::json!(["1/2", "1/2"]));
    assert_eq!(v["col_strategy"], serde_json::json!(["1/2", "1/2"]));
    assert_eq!(v["detection"]["alpha"], "2/1");

    let (code, _, _) = zerosum(&["solve", &fixture("prisoners_dilemma.json")]);
    assert_eq!(code, 1);
}

#[test]
fn audit_axioms_passes() {
    let (code, out, _) = zerosum(&["audit-axioms", &fixture("cube_game.json"), "--lens", "u2", "--samples", "100", "--seed", "3"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["lens"], "u2");
    assert_eq!(v["axioms"].as_array().unwrap().len(), 5);

    let (code, _, _) = zerosum(&["audit-axioms", &fixture("cube_game.json"), "--lens", "u3"]);
    assert_eq!(code, 2);
}

#[test]
fn mv_check() {
    let (code, out, _) = zerosum(&["mv-check", &fixture("offsets.json")]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["lambda2"], "1/1");
    assert_eq!(v["row_offsets"], serde_json::json!(["0/1", "1/1"]));
    assert_eq!(v["col_offsets"], serde_json::json!(["1/1", "2/1"]));

    let (code, out, _) = zerosum(&["mv-check", &fixture("prisoners_dilemma.json")]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["status"], "none_found");
}

#[test]
fn equilibria_listing() {
    let (code, out, _) = zerosum(&["equilibria", &fixture("prisoners_dilemma.json")]);
    assert_eq!(code, 0);
    let v = json(&out);
    let eqs = v["equilibria"].as_array().unwrap();
    assert_eq!(eqs.len(), 1);
    assert_eq!(eqs[0]["payoff1"], "1/1");
}

#[test]
fn gen_then_check_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let p = path.to_str().unwrap();
    let (code, _, _) = zerosum(&["gen", "--family", "disguised-zero-sum", "--rows", "4", "--cols", "3", "--seed", "9", "--out", p]);
    assert_eq!(code, 0);
    let (code, out, _) = zerosum(&["check", p]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["status"], "adversarial");

    let (code, _, _) = zerosum(&["gen", "--family", "ordinal-not-affine", "--rows", "3", "--cols", "3", "--seed", "9", "--out", p]);
    assert_eq!(code, 0);
    let (code, _, _) = zerosum(&["check", p]);
    assert_eq!(code, 1);

    let (code, _, err) = zerosum(&["gen", "--family", "ordinal-not-affine", "--rows", "1", "--cols", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("bad generator spec"), "{err}");
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["gen", "--family", "strategic-zero-sum", "--rows", "3", "--cols", "4", "--seed", "17"],
        vec!["audit-axioms", "CUBE", "--samples", "50", "--seed", "2"],
        vec!["solve", "DISGUISED"],
    ] {
        let (cube, disguised) = (fixture("cube_game.json"), fixture("disguised.json"));
        let args: Vec<&str> = args
            .iter()
            .map(|a| match *a {
                "CUBE" => cube.as_str(),
                "DISGUISED" => disguised.as_str(),
                a => a,
            })
            .collect();
        let first = zerosum(&args);
        assert_eq!(first, zerosum(&args));
        assert_eq!(first.0, 0);
    }
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bench.csv");
    let p = path.to_str().unwrap();
    let (code, _, err) = zerosum(&[
        "bench", "--families", "disguised-zero-sum,uniform", "--sizes", "2,3x4,7", "--seeds", "0,1", "--out", p,
    ]);
    assert_eq!(code, 0, "{err}");
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,rows,cols,seed,detect_ns,lp_ns,enum_ns,agree"));
    assert_eq!(lines.count(), 12);
    assert!(text.contains("disguised-zero-sum,3,4,1,"));
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_zerosum");
    let status = Command::new(exe).args(["check", &fixture("matching_pennies.json")]).output().unwrap();
    assert_eq!(status.status.code(), Some(0));
    let status = Command::new(exe).args(["check", &fixture("cube_game.json")]).output().unwrap();
    assert_eq!(status.status.code(), Some(1));
    let status = Command::new(exe).args(["check", "missing.json"]).output().unwrap();
    assert_eq!(status.status.code(), Some(2));
    assert!(!status.stderr.is_empty());
}
