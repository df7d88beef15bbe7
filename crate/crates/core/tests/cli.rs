use std::path::Path;
use std::process::{Command, Output};

use propone::algorithms::TraceEvent;
use serde_json::Value as Json;

fn propone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_propone"))
        .args(args)
        .env_remove("PROPONE_ENUM_CAP")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Json {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn run_round_robin_on_rr_satiating() {
    let out = propone(&["run", "--fixture", "rr_satiating", "--alg", "round_robin"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(
        doc["allocation"]["bundles"],
        serde_json::json!([[0, 1, 2], [3, 4, 5]])
    );
    assert_eq!(doc["report"]["agents"][1]["prop1"]["status"], "unsatisfied");
    assert_eq!(doc["report"]["is_prop1"], false);
}

#[test]
fn run_fast_algorithm_is_prop1() {
    let out = propone(&[
        "run",
        "--fixture",
        "rr_satiating",
        "--alg",
        "prop1_submodular_fast",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["report"]["is_prop1"], true);
}

#[test]
fn run_second_to_last_with_order() {
    let out = propone(&[
        "run",
        "--fixture",
        "rr_satiating",
        "--alg",
        "rr",
        "--order",
        "0,1",
        "--stop",
        "second-to-last",
    ]);
    let doc = json(&out);
    assert_eq!(doc["allocation"]["pool"], serde_json::json!([2, 3]));
    assert_eq!(doc["report"]["is_prop1"], true);
    assert_eq!(doc["report"]["is_proportional"], Json::Null);
}

#[test]
fn run_on_empty_instance() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("empty.json");
    std::fs::write(
        &file,
        r#"{"n": 2, "m": 0, "valuations": [
            {"kind": "additive", "weights": [], "declared_class": "additive"},
            {"kind": "additive", "weights": [], "declared_class": "additive"}]}"#,
    )
    .unwrap();
    let out = propone(&["run", "--instance", path(&file)]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(
        json(&out)["allocation"]["bundles"],
        serde_json::json!([[], []])
    );
}

#[test]
fn run_trace_replays_to_the_output() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.jsonl");
    let out = propone(&[
        "run",
        "--fixture",
        "xos7",
        "--alg",
        "prop1_subadditive",
        "--trace",
        path(&trace),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&trace).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let (summary, events) = lines.split_last().unwrap();
    let events: Vec<TraceEvent> = events
        .iter()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let summary: Json = serde_json::from_str(summary).unwrap();
    assert_eq!(summary["event"], "summary");
    let trace = propone::algorithms::RunTrace {
        events,
        ..Default::default()
    };
    let replayed = trace.replay(3, 7).unwrap();
    let doc = json(&out);
    let reported: propone::instance::Allocation =
        serde_json::from_value(doc["allocation"].clone()).unwrap();
    assert_eq!(replayed, reported);
}

#[test]
fn check_exit_codes() {
    let ok = propone(&["check", "--fixture", "xos7", "--pinned", "--require", "ef1"]);
    assert_eq!(ok.status.code(), Some(0));
    let unmet = propone(&[
        "check",
        "--fixture",
        "xos7",
        "--pinned",
        "--require",
        "prop1",
    ]);
    assert_eq!(unmet.status.code(), Some(1));
    assert_eq!(json(&unmet)["unmet"], serde_json::json!(["prop1"]));
    let po = propone(&[
        "check",
        "--fixture",
        "xos7",
        "--pinned",
        "--require",
        "ef1,po",
    ]);
    assert_eq!(po.status.code(), Some(0));
}

#[test]
fn check_single_agent_and_bad_allocations() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("one.json");
    std::fs::write(
        &inst,
        r#"{"n": 1, "m": 3, "valuations": [
            {"kind": "additive", "weights": [1, "1/2", 0], "declared_class": "additive"}]}"#,
    )
    .unwrap();
    let all = dir.path().join("all.json");
    std::fs::write(&all, r#"{"bundles": [[0, 1, 2]]}"#).unwrap();
    let out = propone(&[
        "check",
        "--instance",
        path(&inst),
        "--allocation",
        path(&all),
        "--require",
        "prop1,prop",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let dup = dir.path().join("dup.json");
    std::fs::write(&dup, r#"{"bundles": [[0, 1, 2]], "pool": [1]}"#).unwrap();
    let out = propone(&[
        "check",
        "--instance",
        path(&inst),
        "--allocation",
        path(&dup),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("duplicate good 1"));

    let partial = dir.path().join("partial.json");
    std::fs::write(&partial, r#"{"bundles": [[0]], "pool": [1, 2]}"#).unwrap();
    let out = propone(&[
        "check",
        "--instance",
        path(&inst),
        "--allocation",
        path(&partial),
        "--require",
        "prop",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_instance_reports_location() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.json");
    std::fs::write(
        &file,
        r#"{"n": 1, "m": 1, "valuations": [
            {"kind": "tabular", "values": {"0": 1, "1": 2}, "declared_class": "monotone-general"}]}"#,
    )
    .unwrap();
    let out = propone(&["run", "--instance", path(&file)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not normalized"));
}

#[test]
fn gen_is_deterministic_and_needs_a_seed() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let args = |p: &Path| {
        vec![
            "gen".to_string(),
            "--class".into(),
            "satiating-submodular".into(),
            "--n".into(),
            "3".into(),
            "--m".into(),
            "8".into(),
            "--seed".into(),
            "7".into(),
            "--out".into(),
            path(p).to_string(),
        ]
    };
    for p in [&a, &b] {
        let args = args(p);
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(propone(&args).status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let alias = propone(&[
        "generate", "--class", "additive", "--n", "2", "--m", "2", "--seed", "1",
    ]);
    assert_eq!(alias.status.code(), Some(0));
    let missing = propone(&["gen", "--class", "additive", "--n", "2", "--m", "2"]);
    assert_eq!(missing.status.code(), Some(2));
    let unknown = propone(&[
        "gen",
        "--class",
        "gross-substitutes",
        "--n",
        "2",
        "--m",
        "2",
        "--seed",
        "1",
    ]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn verify_single_claim() {
    let out = propone(&["verify", "--claim", "T6.3"]);
    assert_eq!(out.status.code(), Some(0));
    let table = String::from_utf8(out.stdout).unwrap();
    assert!(table.contains("2187 allocations scanned"));
    assert!(table.contains("PASS"));
    assert_eq!(
        propone(&["verify", "--claim", "T0.0"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_json_output() {
    let out = propone(&[
        "verify", "--claim", "T3.1", "--trials", "10", "--seed", "4", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc[0]["claim"], "T3.1");
    assert_eq!(doc[0]["trials"], 10);
    assert_eq!(doc[0]["counterexample"], Json::Null);
}

#[test]
fn enumeration_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_propone"))
        .args(["verify", "--claim", "T6.3"])
        .env("PROPONE_ENUM_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("enumeration cap"));
}

#[test]
fn bench_emits_csv_within_bounds() {
    let out = propone(&["bench", "--class", "satiating-submodular", "--trials", "50"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let col = |name: &str| header.iter().position(|h| *h == name).unwrap();
    let rows: Vec<Vec<String>> = lines
        .map(|l| l.split(',').map(String::from).collect())
        .collect();
    assert_eq!(rows.len(), 50);
    for r in &rows {
        let fast: usize = r[col("fast_loops")].parse().unwrap();
        let m: usize = r[col("m")].parse().unwrap();
        assert!(fast <= m);
        assert_eq!(r[col("fast_prop1")], "true");
        assert_eq!(r[col("alg1_prop1")], "true");
    }
}
