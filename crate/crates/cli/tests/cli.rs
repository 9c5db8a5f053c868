use std::fs;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::tempdir;

fn lconn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lconn"))
        .args(args)
        .output()
        .expect("lconn runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn missing_corpus_exits_2() {
    let out = lconn(&["verify", "--corpus", "missing.gct"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.gct"));
}

#[test]
fn unknown_theorem_exits_2() {
    let out = lconn(&["verify", "--theorem", "thm9.9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_catalog_exits_2() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("bad.gct");
    fs::write(&path, "group T degree 2\ngen (1,3)\nend\n").unwrap();
    let out = lconn(&["verify", "--corpus", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn thm_1_3_up_to_order_100() {
    let out = lconn(&["verify", "--theorem", "thm1.3", "--max-order", "100", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&out);
    let verdicts = report["verdicts"].as_array().unwrap();
    assert!(verdicts.iter().all(|v| v["theorem_id"] == "thm1.3"));
    let a5 = verdicts
        .iter()
        .find(|v| v["instance"]["group"] == "A5")
        .expect("A5 included");
    assert_eq!(a5["holds"], true);
    assert!(verdicts.iter().all(|v| v["instance"]["group"] != "S5"));
    assert_eq!(report["header"]["flags"]["max_order"], 100);
    assert_eq!(report["header"]["catalog_source"], "shipped");
}

#[test]
fn report_file_and_stdout() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("r.json");
    let p = path.to_str().unwrap();
    let quiet = lconn(&["verify", "--theorem", "baer-suzuki", "--max-order", "24", "--report", p]);
    assert_eq!(quiet.status.code(), Some(0));
    assert!(quiet.stdout.is_empty());
    let written = fs::read(&path).unwrap();
    let echoed = lconn(&["verify", "--theorem", "baer-suzuki", "--max-order", "24", "--report", p, "--json"]);
    assert_eq!(echoed.stdout, written);
    assert_eq!(fs::read(&path).unwrap(), written);
}

#[test]
fn query_s4() {
    let out = lconn(&["query", "S4", "--json"]);
    assert!(out.status.success());
    let q = json(&out);
    assert_eq!(q["order"], 24);
    assert_eq!(q["radicals"]["N"]["order"], 4);
    let fitting: Vec<u64> = q["series"]["fitting"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["order"].as_u64().unwrap())
        .collect();
    assert_eq!(fitting, vec![1, 4, 12, 24]);
    assert_eq!(q["nilpotent_length"], 3);
    assert_eq!(q["pi_length"], 2);

    let text = String::from_utf8(lconn(&["query", "S4"]).stdout).unwrap();
    assert!(text.contains("nilpotent length 3"));
}

#[test]
fn query_a5_and_c1() {
    let q = json(&lconn(&["query", "A5", "--json"]));
    assert_eq!(q["radicals"]["S"]["order"], 1);
    assert_eq!(q["residuals"]["A"]["order"], 60);
    assert_eq!(q["nilpotent_length"], Value::Null);

    let q = json(&lconn(&["query", "C1", "--json"]));
    assert_eq!(q["order"], 1);
    for key in ["N", "S", "O_pi"] {
        assert_eq!(q["radicals"][key]["order"], 1);
    }
    for key in ["A", "N", "O^pi"] {
        assert_eq!(q["residuals"][key]["order"], 1);
    }
    assert_eq!(q["hypercenter"]["order"], 1);
    assert_eq!(q["nilpotent_length"], 0);
}

#[test]
fn query_unknown_group_exits_2() {
    assert_eq!(lconn(&["query", "M11"]).status.code(), Some(2));
    assert_eq!(lconn(&["query", "S4", "--pi", "4"]).status.code(), Some(2));
}

#[test]
fn search_is_seeded() {
    let args = ["search", "--seed", "3", "--max-order", "24", "--samples", "4", "--jobs", "2"];
    let a = lconn(&args);
    let b = lconn(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let r = json(&a);
    assert!(r["findings"].as_array().unwrap().iter().any(|f| f["kind"] == "sharp-pi-length"
        && f["group"] == "S4"
        && f["a"] == "Klein"
        && f["b"] == "S3"));
}

#[test]
fn search_f2_contrast_small_groups() {
    let out = lconn(&["search", "--kind", "b", "--max-order", "60", "--samples", "0"]);
    assert!(out.status.success());
    let r = json(&out);
    assert!(r["findings"]
        .as_array()
        .unwrap()
        .iter()
        .all(|f| f["kind"] == "f2-contrast"));
    assert_eq!(lconn(&["search", "--kind", "z"]).status.code(), Some(2));
}

#[test]
fn catalog_build_matches_shipped_and_validates() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("c.gct");
    let out = lconn(&["catalog", "build", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let built = fs::read_to_string(&path).unwrap();
    assert_eq!(built, lconn_core::corpus::SHIPPED_SOURCE);

    let out = lconn(&["catalog", "validate", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("0 issues"));

    fs::write(&path, format!("{built}factorization S4 C3 C2\n")).unwrap();
    let out = lconn(&["catalog", "validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("factorization S4 C3 C2 is false"));
}
