use std::process::Command;

use autoarc::cli::execute;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["autoarc"];
    full.extend_from_slice(args);
    let code = execute(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn auto_node_order_two() {
    let (code, out, _) = run(&["auto", "--vars", "x,y", "--gens", "x*y", "--point", "0,0", "--n", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["fat"]["length"], 3);
    assert_eq!(v["grid"].as_array().unwrap().len(), 2);
    // x*y on a length-3 fat point: one equation per basis coordinate, interreduced
    assert_eq!(v["generators"].as_array().unwrap().len(), 9);
}

#[test]
fn jet_of_cusp_has_length_seven() {
    let (code, out, _) = run(&["jet", "--vars", "x,y", "--gens", "y^2-x^3", "--point", "0,0", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["length"], 7);
}

#[test]
fn count_factors_free_variables() {
    let (code, out, _) = run(&["count", "--vars", "a,b,c,d", "--gens", "a*c", "--prime", "3"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["count"], "45");
    assert_eq!(v["occurring_variables"], 2);
}

#[test]
fn arc_over_explicit_fat_point() {
    let (code, out, _) = run(&["arc", "--vars", "x,y", "--gens", "x*y", "--fat-vars", "t", "--fat-gens", "t^2"]);
    assert_eq!(code, 0);
    let linear = run(&["arc", "--vars", "x,y", "--gens", "x*y", "--n", "2"]).1;
    assert_eq!(json(&out)["generators"], json(&linear)["generators"]);
}

#[test]
fn reduce_auto_node() {
    let (code, out, _) = run(&["reduce", "--vars", "x,y", "--gens", "x*y", "--n", "4"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["affine_rank"], 4);
    assert_eq!(v["factors"].as_array().unwrap().len(), 2);
}

#[test]
fn zeta_of_the_line() {
    let (code, out, _) = run(&["zeta", "--vars", "x", "--n", "3"]);
    assert_eq!(code, 0);
    let v = json(&out);
    let coeffs = v["report"]["computed"]["coeffs"].as_array().unwrap();
    assert_eq!(coeffs.len(), 4);
    for c in coeffs {
        assert_eq!(c["L_coeffs"]["-1"], 1);
    }
    assert_eq!(v["closed_form_source"], "detected");
    assert!(v["table"].as_str().unwrap().contains("match"));
}

#[test]
fn theta_of_cusp_against_closed_form() {
    let (code, out, _) = run(&["theta", "--vars", "x,y", "--gens", "y^2-x^3", "--n", "4", "--compare", "cusp"]);
    assert_eq!(code, 0);
    let v = json(&out);
    let fits = v["shift_fits"].as_array().unwrap();
    assert_eq!(fits.len(), 1);
    assert_eq!(fits[0]["a"], 1);
}

#[test]
fn script_matches_flags() {
    let dir = std::env::temp_dir().join(format!("autoarc-script-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("job.json");
    std::fs::write(
        &path,
        r#"{"command": "auto", "vars": ["x", "y"], "gens": ["y^2 - x^3"], "point": "0,0", "n": 3}"#,
    )
    .unwrap();
    let (code, from_script, _) = run(&["--script", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (_, from_flags, _) = run(&["auto", "--vars", "x,y", "--gens", "y^2 - x^3", "--point", "0,0", "--n", "3"]);
    assert_eq!(from_script, from_flags);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_byte_identical() {
    let args = ["zeta", "--vars", "x,y", "--gens", "x*y", "--n", "5", "--normalization", "codim", "--compare", "node"];
    assert_eq!(run(&args).1, run(&args).1);
}

#[test]
fn exit_codes() {
    let cases: [(&[&str], i32, &str); 6] = [
        (&["count", "--vars", "a", "--gens", "a*q", "--prime", "3"], 2, "parse_error"),
        (&["auto", "--vars", "x,y", "--gens", "x*y+", "--n", "2"], 2, "parse_error"),
        (&["count", "--vars", "a", "--gens", "a", "--prime", "9"], 3, "precondition_failed"),
        (&["jet", "--vars", "x,y", "--gens", "x*y", "--point", "1,1", "--n", "2"], 3, "precondition_failed"),
        (&["count", "--vars", "a,b,c", "--gens", "a*b*c", "--prime", "101", "--budget-points", "1000"], 4, "budget_exceeded"),
        (&["frobnicate"], 2, "parse_error"),
    ];
    for (args, code, name) in cases {
        let (c, out, err) = run(args);
        assert_eq!(c, code, "{args:?}");
        assert!(out.is_empty());
        assert_eq!(json(&err)["error"]["code"], name, "{args:?}");
    }
}

/// Run as a separate process: the Groebner budget is process-wide.
#[test]
fn groebner_budget_is_enforced() {
    let out = Command::new(env!("CARGO_BIN_EXE_autoarc"))
        .args(["auto", "--vars", "x,y", "--gens", "y^2-x^3", "--n", "4", "--budget-groebner", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(json(&String::from_utf8(out.stderr).unwrap())["error"]["kind"], "groebner_budget");
}

#[test]
fn binary_reports_errors_on_stderr() {
    let bin = env!("CARGO_BIN_EXE_autoarc");
    let ok = Command::new(bin)
        .args(["count", "--vars", "a,b", "--gens", "a*b", "--prime", "5"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&String::from_utf8(ok.stdout).unwrap())["count"], "9");

    let bad = Command::new(bin)
        .args(["count", "--vars", "a,b", "--gens", "a*b", "--prime", "5"])
        .env(autoarc::cli::ENV_BUDGET_POINTS, "10")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(4));
    assert!(bad.stdout.is_empty());
    assert_eq!(json(&String::from_utf8(bad.stderr).unwrap())["error"]["kind"], "count_budget");
}

#[test]
fn verify_suite_exit_status() {
    let (c, out, _) = run(&["verify", "paper-tables"]);
    assert_eq!(c, 0);
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"][0]["id"], "criterion 1");
}
