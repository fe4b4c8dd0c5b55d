use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_subproj")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    let (code, out, err) = run(&a);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}")))
}

#[test]
fn homology_of_multiplication_by_two() {
    let (code, v) = json(&["homology", &fixture("sphere-disc.json"), "--object", "mult2"]);
    assert_eq!(code, 0);
    assert_eq!(v["degrees"][0]["invariant_factors"], serde_json::json!(["2"]));
    assert_eq!(v["degrees"][1]["description"], "0");
    let (_, out, _) = run(&["homology", &fixture("sphere-disc.json"), "--object", "mult2", "--degree", "-3"]);
    assert_eq!(out.trim(), "H_-3 = 0");
}

#[test]
fn subproj_all_routes_on_the_short_exact_sequence() {
    let f = fixture("exmp-1-spherR.json");
    for (n, code) in [("disc", 0), ("shifted", 0), ("M", 1)] {
        let (c, v) = json(&["subproj", &f, "--m", "M", "--n", n, "--route", "all"]);
        assert_eq!(c, code, "{n}");
        let statuses: Vec<&str> = v["routes"].as_array().unwrap().iter().map(|r| r["status"].as_str().unwrap()).collect();
        let want = if code == 0 { "YES" } else { "NO" };
        assert_eq!(statuses, vec![want; 3], "{n}");
    }
}

#[test]
fn hypothesis_not_met_is_reported_under_all_and_rejected_alone() {
    let f = fixture("ex-2main1.json");
    let (code, v) = json(&["subproj", &f, "--m", "discX", "--n", "discY", "--route", "all"]);
    assert_eq!(code, 1);
    assert_eq!(v["routes"][1]["status"], "hypothesis-not-met");
    assert_eq!(v["verdict"], "NO");
    let (code, _, err) = run(&["subproj", &f, "--m", "discX", "--n", "discY", "--route", "kernel"]);
    assert_eq!(code, 2);
    assert!(err.contains("not applicable"));
}

#[test]
fn homk_reports_z_for_the_third_complex() {
    let (code, out, _) = run(&["homk", &fixture("exmp-2-spherR.json"), "--source", "M_down", "--target", "X3"]);
    assert_eq!((code, out.trim()), (0, "Z"));
}

#[test]
fn cone_output_is_a_document_with_an_exact_sequence() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = run(&["cone", &fixture("sphere-disc.json"), "--map", "include"]);
    assert_eq!(code, 0);
    let p = dir.path().join("cone.json");
    std::fs::write(&p, out).unwrap();
    let p = p.to_string_lossy();
    assert_eq!(run(&["check", &p]).0, 0);
    let (_, h) = json(&["homology", &p, "--object", "cone"]);
    let descs: Vec<&str> = h["degrees"].as_array().unwrap().iter().map(|d| d["description"].as_str().unwrap()).collect();
    assert_eq!(descs, vec!["0", "Z"]);
}

#[test]
fn pullback_and_shift_emit_loadable_documents() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = run(&["pullback", &fixture("exmp-1-spherR.json"), "--g", "p", "--f", "p"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["chain_maps"]["g_prime"].is_object() && v["complexes"]["D"].is_object());
    let (code, out, _) = run(&["shift", &fixture("sphere-disc.json"), "--object", "discZ", "--by", "-1"]);
    assert_eq!(code, 0);
    let p = dir.path().join("s.json");
    std::fs::write(&p, out).unwrap();
    let (_, h) = json(&["homology", &p.to_string_lossy(), "--object", "discZ"]);
    assert_eq!(h["degrees"][0]["degree"], -1);
}

#[test]
fn nullhomotopy_witness_round_trip_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json").to_string_lossy().into_owned();
    let (code, _, _) = run(&["nullhomotopy", &fixture("sphere-disc.json"), "--map", "collapse", "--out", &w]);
    assert_eq!(code, 0);
    assert_eq!(run(&["check", &w]).0, 0);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&w).unwrap()).unwrap();
    v["witness"][0]["matrix"]["entries"][0][0] = "5".into();
    std::fs::write(&w, v.to_string()).unwrap();
    assert_eq!(run(&["check", &w]).0, 1);
    assert_eq!(run(&["nullhomotopy", &fixture("torsion-z4.json"), "--map", "twice"]).0, 1);
}

#[test]
fn verify_reports_are_replayable() {
    let dir = tempfile::tempdir().unwrap();
    let (code, v) = json(&["verify", "thm-4-1", "--ring", "Zmod:4", "--trials", "30", "--seed", "5", "--sequential"]);
    assert_eq!(code, 0);
    assert_eq!(v["kind"], "suite-report");
    let p = dir.path().join("r.json");
    std::fs::write(&p, v.to_string()).unwrap();
    assert_eq!(run(&["check", &p.to_string_lossy()]).0, 0);
    let mut forged = v.clone();
    forged["positives"] = (v["positives"].as_u64().unwrap() + 1).into();
    std::fs::write(&p, forged.to_string()).unwrap();
    assert_eq!(run(&["check", &p.to_string_lossy()]).0, 1);
    assert_eq!(run(&["verify", "oracle", "--ring", "Z"]).0, 2);
    assert_eq!(run(&["verify", "snf", "--ring", "Zmod:1"]).0, 2);
}

#[test]
fn invalid_documents_name_the_problem() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(
        &p,
        r#"{"complexes": {"N": {"window": [0, 2],
            "components": [{"degree": 0, "module": {"generators": 1}}, {"degree": 1, "module": {"generators": 1}}, {"degree": 2, "module": {"generators": 1}}],
            "differentials": [{"degree": 1, "matrix": {"rows": 1, "cols": 1, "entries": [["1"]]}}, {"degree": 2, "matrix": {"rows": 1, "cols": 1, "entries": [["1"]]}}]}}}"#,
    )
    .unwrap();
    let (code, _, err) = run(&["check", &p.to_string_lossy()]);
    assert_eq!(code, 2);
    assert!(err.contains("N") && err.contains("degree 2"), "{err}");
    std::fs::write(&p, "").unwrap();
    assert_eq!(run(&["check", &p.to_string_lossy()]).0, 0);
}

#[test]
fn suites_are_listed() {
    let (code, out, _) = run(&["suites"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "prop-spherR"));
}
