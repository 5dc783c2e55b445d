use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_prerad-lab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).to_string()
}

fn tmp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("prerad-lab-test-{}-{name}", std::process::id()))
}

#[test]
fn check_section2_on_zn4_reports_the_split_and_exits_zero() {
    let o = run(&["check", "--ring", "zn:4", "--suite", "section2"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.contains("S2.lemma-BJKNco.2v3"));
    assert!(out.contains("reported"));
    assert!(out.contains("\"module\":\"Z4\""));
    assert!(!out.contains("fails"));
}

#[test]
fn check_writes_byte_identical_reports() {
    let p1 = tmp("r1.json");
    let p2 = tmp("r2.json");
    for p in [&p1, &p2] {
        let o = run(&[
            "check",
            "--ring",
            "zn:4",
            "--suite",
            "section2",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(o.status.success());
    }
    let a = std::fs::read(&p1).unwrap();
    let b = std::fs::read(&p2).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b, "reruns must be byte-identical");
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["ring"], "zn:4");
    std::fs::remove_file(p1).ok();
    std::fs::remove_file(p2).ok();
}

#[test]
fn check_from_config_file() {
    let cfg = tmp("cfg.json");
    std::fs::write(&cfg, r#"{"ring":"zn:4","suites":["section5"]}"#).unwrap();
    let o = run(&["check", "--config", cfg.to_str().unwrap(), "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["suites"], serde_json::json!(["section5"]));
    assert_eq!(v["universe"]["max_order"], 16);
    std::fs::remove_file(cfg).ok();
}

#[test]
fn check_with_empty_suites_exits_zero() {
    let cfg = tmp("empty.json");
    std::fs::write(&cfg, r#"{"ring":"zn:2","suites":[]}"#).unwrap();
    let o = run(&["check", "--config", cfg.to_str().unwrap(), "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["propositions"], serde_json::json!([]));
    std::fs::remove_file(cfg).ok();
}

#[test]
fn check_usage_errors_are_nonzero() {
    assert!(!run(&["check"]).status.success());
    assert!(!run(&["check", "--ring", "zn:0"]).status.success());
    assert!(!run(&["check", "--ring", "zn:4", "--suite", "section9"])
        .status
        .success());
    let o = run(&["check", "--config", "/nonexistent.json", "--ring", "zn:4"]);
    assert!(!o.status.success(), "--config conflicts with --ring");
}

#[test]
fn inspect_eval_matches_the_documented_example() {
    let o = run(&["inspect", "eval", "zn:6", "reject(Z6)", "Z2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn inspect_hom_counts_morphisms() {
    let o = run(&["inspect", "hom", "zn:6", "Z2", "Z6"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("2 morphisms"));
}

#[test]
fn inspect_lattice_is_the_three_chain() {
    let o = run(&["inspect", "lattice", "zn:4", "Z4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("3 submodules"));
    assert!(out.contains("edge [0] < [1]"));
    assert!(out.contains("edge [1] < [2]"));
    assert!(!out.contains("edge [0] < [2]"), "no transitive edges");
}

#[test]
fn compute_products_over_z4() {
    let o = run(&["compute", "box", "zn:4", "Z4", "2", "2"]);
    assert_eq!(stdout(&o).trim(), "full");
    let o = run(&["compute", "comult", "zn:4", "Z4", "2", "2"]);
    assert_eq!(stdout(&o).trim(), "{0,2}");
    let o = run(&["compute", "tot", "zn:4", "Z4", "2"]);
    let out = stdout(&o);
    assert!(out.contains("full") && out.contains("universal: true") && out.contains("minimal: true"));
}

#[test]
fn compute_eval_json_carries_the_expression_tree() {
    let o = run(&[
        "compute", "eval", "zn:4", "colon(reject(Z4),reject(Z4))", "Z4", "--json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["expr"]["op"], "colon");
    // reject of Z4 on Z4 itself is 0 (the identity has zero kernel)
    assert_eq!(v["value"], serde_json::json!([0]));

    let o = run(&["compute", "eval", "zn:4", "idealtrad(2)", "Z4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], serde_json::json!([0, 2]));
}

#[test]
fn universe_lists_preset_classes() {
    let o = run(&["universe", "--ring", "zn:6"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("9 classes"));
    assert!(out.contains("Z6"));

    let o = run(&["universe", "--ring", "triangular:2:2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("#1") && out.contains("#2"), "simples disambiguated");
}

#[test]
fn errors_name_the_unknown_object() {
    let o = run(&["inspect", "lattice", "zn:4", "Q8"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("Q8"));
    let o = run(&["compute", "eval", "zn:4", "frobnicate", "Z4"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("frobnicate"));
}
