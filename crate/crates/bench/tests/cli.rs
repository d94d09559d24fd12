use std::process::Command;

fn ctwork(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ctwork")).args(args).output().expect("runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(s: &str) -> serde_json::Value {
    serde_json::from_str(s.trim()).expect("one JSON object")
}

#[test]
fn verify_log_dyson() {
    let (code, out, _) = ctwork(&["verify", "log-dyson", "--n", "3", "--k", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["status"], "exact-equal");
    assert_eq!(v["lhs"]["exact"], "35/3");
    assert_eq!(v["rhs"]["exact"], "35/3");
    for key in ["id", "params", "tol", "tail", "ms"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn verify_csv_and_dyson_vector() {
    let (code, out, _) = ctwork(&["verify", "dyson", "--n", "3", "--a", "1,1,2", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("id,n,a,"));
    assert!(lines[1].contains(",12,12,exact-equal,"));
}

#[test]
fn verify_complex_within_tolerance() {
    let (code, out, _) =
        ctwork(&["verify", "complex-morris", "--n", "3", "--a", "1", "--b", "1", "--u", "1/2", "--trunc", "200"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["status"], "within-tolerance");
    assert!(v["tail"].as_f64().unwrap() > 0.0);
    assert_eq!(v["params"]["u"], "1/2");
}

#[test]
fn certificate_and_d4() {
    let (code, out, _) = ctwork(&["certificate"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["verified"], true);
    let (code, out, _) = ctwork(&["d4", "--u", "2"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["value"], "192");
    assert_eq!(v["macdonald"], "192");
    let (code, _, err) = ctwork(&["d4", "--u", "4"]);
    assert_eq!(code, 2);
    assert!(err.contains("limited"));
}

#[test]
fn pfaffian_file() {
    let dir = std::env::temp_dir().join(format!("ctwork-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.json");
    std::fs::write(&path, r#"{"rows": [[0, 1, 2, 3], [-1, 0, 4, 5], [-2, -4, 0, "6"], [-3, -5, "-6", 0]]}"#).unwrap();
    let (code, out, _) = ctwork(&["pfaffian", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v = json(&out);
    // 1*6 - 2*5 + 3*4
    assert_eq!(v["pfaffian"], "8");
    assert_eq!(v["definition"], "8");
    assert_eq!(v["det"], "64");
    std::fs::write(&path, "[[0, 1], [1, 0]]").unwrap();
    let (code, _, _) = ctwork(&["pfaffian", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn fit_pn_json() {
    let (code, out, _) = ctwork(&["fit-pn", "--family", "a", "--n", "3", "--samples", "1/2,1/4", "--trunc", "100"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["fitted"].as_array().unwrap().len(), 1);
    assert!((v["fitted"][0].as_f64().unwrap() - 1.0).abs() < 1e-4);
    let (code, _, err) = ctwork(&["fit-pn", "--n", "7"]);
    assert_eq!(code, 2);
    assert!(err.contains("unbounded"));
}

#[test]
fn suite_by_name_and_number() {
    let (code, out, err) = ctwork(&["suite", "signatures"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["criterion"], 10);
    assert!(err.contains("PASS"));
    let (code, out, _) = ctwork(&["suite", "11", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.lines().nth(1).unwrap().starts_with("11,certificate,"));
}

#[test]
fn usage_errors() {
    let (code, _, err) = ctwork(&["verify", "no-such-family"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown kernel family"));
    let (code, _, _) = ctwork(&["verify", "log-dyson", "--n", "4"]);
    assert_eq!(code, 2);
    let (code, _, _) = ctwork(&["frobnicate"]);
    assert_ne!(code, 0);
    let (code, _, _) = ctwork(&["suite", "99"]);
    assert_eq!(code, 2);
    let (code, _, err) = ctwork(&["verify", "bc-complex", "--n", "5", "--u", "1/2"]);
    assert_eq!(code, 2);
    assert!(err.contains("unbounded"));
}
