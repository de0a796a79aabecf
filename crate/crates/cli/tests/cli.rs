use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubic-torsion"))
        .args(args)
        .env_remove("CUBIC_TORSION_OUTPUT_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn classify_reports_galois_type() {
    let out = run(&["classify", "x^3 + 2x^2 - x - 1"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["galois_type"], "CYCLIC");
    assert_eq!(v["discriminant"], "49");
    assert_eq!(v["pure_candidate"], false);

    let v = json(&run(&["classify", r#"["-2", "0", "0", "1"]"#]));
    assert_eq!(v["galois_type"], "COMPLEX");
    assert_eq!(v["pure_candidate"], true);
}

#[test]
fn invalid_math_input_exits_three() {
    assert_eq!(run(&["classify", "x^3 - 1"]).status.code(), Some(3));
    assert_eq!(run(&["torsion", "--curve", "[0, 0]"]).status.code(), Some(3));
    assert_eq!(run(&["torsion", "--curve", "[-3, 2]"]).status.code(), Some(3));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify-family", "F99"]).status.code(), Some(2));
    assert_eq!(run(&["torsion", "--curve", "[1, 2, 3]"]).status.code(), Some(2));
    assert_eq!(run(&["verify-family", "FIXED_49A3", "--params", "1"]).status.code(), Some(2));
    assert_eq!(run(&["obstruction", "F13"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn torsion_over_q_and_cubic_field() {
    let v = json(&run(&["torsion", "--curve", "[0, 1]"]));
    assert_eq!(v["field"], "Q");
    assert_eq!(v["torsion"], "Z/6");
    assert_eq!(v["points"].as_array().unwrap().len(), 6);

    let curve = r#"{"a": ["1", "-1", "0", "-107", "552"]}"#;
    let v = json(&run(&["torsion", "--curve", curve, "--field", "x^3 + x^2 - 2x - 1"]));
    assert_eq!(v["torsion"], "Z/14");
    assert_eq!(v["field_class"]["galois_type"], "CYCLIC");
    assert_eq!(v["points"].as_array().unwrap().len(), 14);
}

#[test]
fn verify_family_keeps_parameter_order() {
    let out = run(&["verify-family", "F18_CYCLIC", "--params", "2,-3,1/2,0"]);
    assert!(out.status.success());
    let v = json(&out);
    let params: Vec<&str> = v["reports"].as_array().unwrap().iter().map(|r| r["parameter"].as_str().unwrap()).collect();
    assert_eq!(params, ["2", "-3", "1/2", "0"]);
    assert_eq!(v["summary"]["verified"], 3);
    assert_eq!(v["summary"]["excluded"], 1);
    assert_eq!(v["reports"][3]["status"], "EXCLUDED");
    assert!(String::from_utf8_lossy(&out.stderr).contains("3 verified, 1 excluded"));
}

#[test]
fn reports_are_byte_stable_across_thread_counts() {
    let args = ["verify-family", "F14_KUBERT7", "--params", "2,3,-1/2"];
    let one = run(&[&["--jobs", "1"], &args[..]].concat());
    let many = run(&[&["--jobs", "4"], &args[..]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, many.stdout);
    assert!(!String::from_utf8_lossy(&one.stdout).contains("timings"));

    let timed = json(&run(&[&["--timings"], &args[..]].concat()));
    assert!(timed["reports"][0]["timings"]["construct_ms"].is_number());
}

#[test]
fn obstruction_finds_only_known_points() {
    let out = run(&["obstruction", "F14_KUBERT7", "--height", "30"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["genus"], 2);
    assert_eq!(v["points_found"], serde_json::json!(["(0, 0)", "(1, 0)", "inf"]));
    assert_eq!(v["matches_expected"], true);
    assert_eq!(v["substitution_identity"], true);
}

#[test]
fn output_dir_receives_a_copy() {
    let dir = std::env::temp_dir().join(format!("cubic-torsion-cli-{}", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_cubic-torsion"))
        .args(["obstruction", "F18_KUBERT9", "--height", "10"])
        .env("CUBIC_TORSION_OUTPUT_DIR", &dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    let written = std::fs::read(dir.join("obstruction-F18_KUBERT9.json")).unwrap();
    assert_eq!(written, out.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn fixed_member_and_excluded_parameter() {
    let v = json(&run(&["verify-family", "FIXED_49A3"]));
    assert_eq!(v["reports"][0]["status"], "VERIFIED");
    assert_eq!(v["reports"][0]["torsion"], "Z/14");

    let out = run(&["verify-family", "F13", "--params", "0"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["reports"][0]["status"], "EXCLUDED");

    assert_eq!(run(&["verify-family", "F13", "--params", "1/x"]).status.code(), Some(2));
    assert_eq!(run(&["verify-family", "F13", "--params", "1/0"]).status.code(), Some(2));
}
