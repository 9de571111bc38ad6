use std::process::{Command, Output};

fn hcc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hcc")).args(args).output().expect("hcc runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn classes_lists_odd_partitions() {
    let o = hcc(&["classes", "--type", "A", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let lambdas: Vec<_> = v.as_array().unwrap().iter().map(|l| l["lambda"].clone()).collect();
    assert_eq!(lambdas, vec![serde_json::json!([3, 1]), serde_json::json!([1, 1, 1, 1])]);
}

#[test]
fn classes_for_b2_by_convention() {
    let count = |conv: &str| {
        json(&hcc(&["classes", "--type", "B", "--n", "2", "--convention", conv])).as_array().unwrap().len()
    };
    assert_eq!(count("no-length-filter"), 2);
    assert_eq!(count("length-filter"), 1);
}

#[test]
fn normalize_b_node() {
    let o = hcc(&["normalize", "--type", "B", "--n", "2", "--expr", "s2*x2"]);
    assert_eq!(o.status.code(), Some(0));
    // -x2 s2 - sqrt2 v, with sqrt2 = z - z^3
    let s = stdout(&o);
    assert!(s.contains("((-1*z + 1*z^3)*v) * [1,2]"), "{s}");
    assert!(s.contains("-1 * x2 * [1,-2]"), "{s}");
}

#[test]
fn spin_normalize_b_node() {
    let o = hcc(&["spin-normalize", "--type", "B", "--n", "2", "--expr", "t2*b2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o).is_array() || json(&o).is_object());
}

#[test]
fn verify_a1_reports_each_degree() {
    let o = hcc(&["verify", "--type", "A", "--n", "2", "--max-deg", "4"]);
    let v = json(&o);
    assert_eq!(v["dims"], serde_json::json!([1, 1, 1, 1, 2]));
    assert_eq!(v["candidates"], serde_json::json!([1, 0, 1, 0, 2]));
    // odd degrees hold a class with no candidate
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_a2_degree_zero_passes() {
    let o = hcc(&["verify", "--type", "A", "--n", "3", "--max-deg", "0", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "degree,dim,candidates,verdict\n0,2,2,verified-dim-match\n");
}

#[test]
fn latex_output_is_a_table() {
    let o = hcc(&["verify", "--type", "B", "--n", "3", "--max-deg", "0", "--format", "latex"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("\\begin{tabular}") && s.contains("\\end{tabular}"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--type", "B", "--n", "2", "--max-deg", "2", "--mode", "filtered"];
    assert_eq!(hcc(&args).stdout, hcc(&args).stdout);
    let args = ["check", "associativity", "--type", "A", "--n", "3", "--cases", "20"];
    assert_eq!(hcc(&args).stdout, hcc(&args).stdout);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(hcc(&["classes", "--type", "E", "--n", "3"]).status.code(), Some(2));
    assert_eq!(hcc(&["classes", "--type", "D", "--n", "3"]).status.code(), Some(2));
    let o = hcc(&["verify", "--type", "D", "--n", "4", "--max-deg", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--allow-large"));
    assert_eq!(hcc(&["normalize", "--type", "A", "--n", "2", "--expr", "s5"]).status.code(), Some(2));
}

#[test]
fn large_run_with_flag() {
    let o = hcc(&["verify", "--type", "D", "--n", "4", "--max-deg", "0", "--allow-large"]);
    let v = json(&o);
    assert_eq!(v["dims"], serde_json::json!([4]));
    assert_eq!(v["candidates"], serde_json::json!([4]));
}

#[test]
fn reduce_window() {
    let v = json(&hcc(&["reduce", "--type", "A", "--n", "3", "--window=2,3,1"]));
    assert!(v["hecke_clifford"]["class"].is_object());
    let v = json(&hcc(&["reduce", "--type", "A", "--n", "3", "--window=2,1,3"]));
    assert_eq!(v["hecke_clifford"], "zero");
}

#[test]
fn morita_check_a2() {
    let o = hcc(&["morita-check", "--type", "A", "--n", "3", "--max-deg", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["solutions"].as_array().unwrap().len(), 2);
    assert_eq!(v["relations_ok"], true);
    assert_eq!(v["verify_iso"]["passed"], true);
}

#[test]
fn check_suites_pass() {
    for suite in ["relations", "center", "reduction", "trace"] {
        let o = hcc(&["check", suite, "--type", "B", "--n", "2"]);
        assert_eq!(o.status.code(), Some(0), "{suite}");
        assert_eq!(json(&o)["passed"], true);
    }
}

#[test]
fn resolve_conventions_matches_fixture() {
    let o = hcc(&["resolve-conventions"]);
    assert_eq!(o.status.code(), Some(0));
    let shipped: serde_json::Value = serde_json::from_str(include_str!("../../core/data/conventions.json")).unwrap();
    assert_eq!(json(&o), shipped);
}
