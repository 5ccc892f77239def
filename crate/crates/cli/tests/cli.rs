use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn nodal(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nodal"))
        .current_dir(dir)
        .args(args)
        .args(["--timestamp", "1700000000"])
        .output()
        .expect("binary runs")
}

fn ok_json(dir: &Path, args: &[&str]) -> Value {
    let out = nodal(dir, args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn write(dir: &Path, name: &str, v: &Value) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
    p
}

#[test]
fn grid_independence_has_defect_one() {
    let dir = TempDir::new().unwrap();
    let grid = nodal(dir.path(), &["gen-grid", "--a", "3", "--field", "rational", "--out", "grid.json"]);
    assert!(grid.status.success());
    let r = ok_json(dir.path(), &["independence", "--input", "grid.json", "--degree", "3", "--field", "rational"]);
    assert_eq!(r["report"]["defect"], 1);
    assert_eq!(r["report"]["rank"], 8);
    assert_eq!(r["report"]["failures"].as_array().unwrap().len(), 9);
    assert_eq!(r["manifest"]["command"], "independence");
}

#[test]
fn certify_small_case() {
    let dir = TempDir::new().unwrap();
    let gen = nodal(dir.path(), &["gen-star", "--n", "3", "--k", "2", "--size", "5", "--seed", "4", "--out", "s.json"]);
    assert!(gen.status.success());
    let r = ok_json(dir.path(), &["certify", "--input", "s.json", "--n", "3", "--k", "2"]);
    let certs = r["report"]["certificates"].as_array().unwrap();
    assert_eq!(certs.len(), 5);
    assert!(certs.iter().all(|c| c["degree"] == 2));
    assert_eq!(r["report"]["cross_check"], "pass");
    assert_eq!(r["report"]["route"], "small-cases");
}

#[test]
fn example_node_count() {
    let dir = TempDir::new().unwrap();
    let r = ok_json(dir.path(), &["gen-example", "--n", "2", "--k", "2", "--field", "fp:101", "--seed", "7"]);
    assert_eq!(r["report"]["nodes"]["node_count"], 4);
    assert_eq!(r["report"]["f"].as_array().unwrap().len(), 3);
}

#[test]
fn cb_and_star_checks() {
    let dir = TempDir::new().unwrap();
    nodal(dir.path(), &["gen-grid", "--a", "3", "--out", "g.json"]);
    let cb = ok_json(dir.path(), &["cb-check", "--input", "g.json", "--degrees", "3,3"]);
    assert_eq!(cb["report"]["prediction"]["critical_degree"], 3);
    assert_eq!(cb["report"]["agrees"], true);
    let star = ok_json(dir.path(), &["star-check", "--input", "g.json", "--coefficient", "2", "--t-max", "1"]);
    assert_eq!(star["report"]["satisfies"], false);
    assert_eq!(star["report"]["witness"]["incident"].as_array().unwrap().len(), 3);
}

#[test]
fn replay_reproduces_reports() {
    let dir = TempDir::new().unwrap();
    nodal(dir.path(), &["gen-star", "--n", "4", "--k", "3", "--size", "14", "--seed", "2", "--out", "s.json"]);
    let runs: [&[&str]; 3] = [
        &["certify", "--input", "s.json", "--n", "4", "--k", "3", "--seed", "5", "--out", "b.json"],
        &["sweep", "--n-min", "2", "--n-max", "3", "--samples", "2", "--format", "csv", "--out", "w.csv"],
        &["gen-example", "--n", "3", "--k", "2", "--seed", "9", "--out", "e.json"],
    ];
    for args in runs {
        assert!(nodal(dir.path(), args).status.success(), "{args:?}");
    }
    for report in ["s.json", "b.json", "w.csv", "e.json"] {
        let out = nodal(dir.path(), &["replay", "--report", report]);
        assert!(out.status.success(), "{report}: {}", String::from_utf8_lossy(&out.stderr));
    }
    // A tampered report no longer matches.
    let path = dir.path().join("e.json");
    let text = std::fs::read_to_string(&path).unwrap().replace("\"attempts\": 1", "\"attempts\": 2");
    std::fs::write(&path, text).unwrap();
    assert_eq!(nodal(dir.path(), &["replay", "--report", "e.json"]).status.code(), Some(4));
}

#[test]
fn sweep_csv_rows() {
    let dir = TempDir::new().unwrap();
    let out = nodal(dir.path(), &["sweep", "--n-min", "2", "--n-max", "3", "--samples", "3", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# manifest: "));
    assert!(lines.next().unwrap().starts_with("n,k,degree,node_bound"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[1].starts_with("3,2,2,5,5,3,3,3,0,"), "{}", rows[1]);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    assert_eq!(nodal(dir.path(), &["gen-grid", "--a", "3", "--field", "fp:101", "--out", "g.json"]).status.code(), Some(0));
    assert_eq!(nodal(dir.path(), &["gen-grid", "--a", "3", "--field", "fp:103"]).status.code(), Some(2));
    assert_eq!(nodal(dir.path(), &["gen-grid", "--a", "3", "--field", "fp:100"]).status.code(), Some(2));
    assert_eq!(nodal(dir.path(), &["gen-grid", "--a", "9", "--field", "fp:7"]).status.code(), Some(2));
    assert_eq!(nodal(dir.path(), &["independence"]).status.code(), Some(2));
    // The document is over 𝔽_101; reading it as ℚ is a field mismatch.
    assert_eq!(
        nodal(dir.path(), &["independence", "--input", "g.json", "--degree", "2", "--field", "rational"]).status.code(),
        Some(2)
    );
    std::fs::write(dir.path().join("bad.json"), "{ not json").unwrap();
    assert_eq!(nodal(dir.path(), &["independence", "--input", "bad.json", "--degree", "2"]).status.code(), Some(2));

    let line: Vec<Value> = (0..5).map(|s| json!([1.to_string(), s.to_string(), "0", "0", "0", "0"])).collect();
    write(dir.path(), "line.json", &json!({"field": "fp:1009", "ambient_dim": 5, "points": line}));
    let star = nodal(dir.path(), &["certify", "--input", "line.json", "--n", "3", "--k", "3"]);
    assert_eq!(star.status.code(), Some(3), "{}", String::from_utf8_lossy(&star.stderr));
    let big = nodal(dir.path(), &["certify", "--input", "line.json", "--n", "2", "--k", "2"]);
    assert_eq!(big.status.code(), Some(3));
    assert_eq!(nodal(dir.path(), &["certify", "--input", "line.json", "--n", "2", "--k", "3"]).status.code(), Some(2));
}

#[test]
fn projection_override_drives_the_decomposition() {
    // Twelve points over the conic x0·x2 = x1² at scattered heights in x3,
    // plus six points off it, in ℙ⁵ with x4 = x5 = 0.
    let dir = TempDir::new().unwrap();
    let mut pts: Vec<Value> = (0..12i64)
        .map(|s| json!([1, s, s * s, (s * s * s * 7 + 3 * s + 11) % 1009, 0, 0].map(|v: i64| v.to_string())))
        .collect();
    for s in 0..6i64 {
        pts.push(json!([1, 100 + s, (5 * s * s * s + 2) % 1009, 500 + s * s, 0, 0].map(|v: i64| v.to_string())));
    }
    write(dir.path(), "cone.json", &json!({"field": "fp:1009", "ambient_dim": 5, "points": pts}));
    let axis = json!({
        "field": "fp:1009",
        "matrix": [["1","0","0","0","0","0"], ["0","1","0","0","0","0"], ["0","0","1","0","0","0"]],
        "seed": null,
        "attempts": 0
    });
    write(dir.path(), "axis.json", &axis);
    let r = ok_json(
        dir.path(),
        &["certify", "--input", "cone.json", "--n", "5", "--k", "2", "--intermediate-dim", "5", "--projection", "axis.json"],
    );
    assert_eq!(r["report"]["route"], "decomposition");
    assert_eq!(r["report"]["decomposition"]["budget"], 4);
    assert_eq!(r["report"]["decomposition"]["counts"], json!([[2, 1]]));
    assert_eq!(r["report"]["certificates"].as_array().unwrap().len(), 18);
    assert_eq!(r["report"]["divergences"], json!([]));
}
