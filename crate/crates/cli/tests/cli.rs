use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_omsignal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Self {
        Files {
            dir: TempDir::new().unwrap(),
        }
    }

    fn write(&self, name: &str, body: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p
    }

    fn cube3(&self) -> PathBuf {
        self.write(
            "cube3.txt",
            "# cube\n+++\n++-\n+-+\n+--\n-++\n-+-\n--+\n---\n",
        )
    }

    fn square(&self) -> PathBuf {
        self.write("square.txt", "++\n+-\n-+\n--\n")
    }

    fn hexagon(&self) -> PathBuf {
        self.write(
            "hex.json",
            r#"{"t": 3, "vertices": ["-++", "-+-", "++-", "+--", "+-+", "--+"]}"#,
        )
    }
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_exit_codes() {
    let f = Files::new();
    let out = run(&["validate", "--input", s(&f.cube3())]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["overall"], true);

    let bad = f.write("bad.txt", "+++\n+0-\n");
    let out = run(&["validate", "--input", s(&bad)]);
    assert_eq!(code(&out), 3);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2") && err.contains("+0-"), "{err}");

    let disc = f.write("disc.txt", "++\n--\n");
    let out = run(&["validate", "--input", s(&disc)]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["overall"], false);

    let out = run(&["validate", "--input", "/nonexistent/file"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn arrangement_inputs() {
    let f = Files::new();
    let lines = f.write(
        "lines.json",
        r#"{"d": 2, "vectors": [["1","0"],["0","1"],["1","1"]]}"#,
    );
    let out = run(&["topes", "--input", s(&lines)]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["count"], 6);
    let out = run(&["topes", "--input", s(&lines), "--format", "csv"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 6);

    let parallel = f.write("par.json", r#"{"d": 2, "vectors": [["1","0"],["2","0"]]}"#);
    assert_eq!(code(&run(&["validate", "--input", s(&parallel)])), 1);
    let broken = f.write("broken.json", r#"{"d": 2, "vectors": [["1","x"]]}"#);
    assert_eq!(code(&run(&["validate", "--input", s(&broken)])), 3);
}

#[test]
fn cycle_listing_and_limits() {
    let f = Files::new();
    let out = run(&["cycles", "--input", s(&f.square())]);
    assert_eq!(json(&out)["count"], 1);
    let out = run(&["cycles", "--input", s(&f.cube3())]);
    let v = json(&out);
    assert_eq!(v["count"], 4);
    assert_eq!(v["cycles"][0]["flip_order"].as_array().unwrap().len(), 6);
    let out = run(&["cycles", "--input", s(&f.cube3()), "--limit", "2"]);
    assert_eq!(json(&out)["count"], 2);
    assert_eq!(
        code(&run(&["cycles", "--input", s(&f.cube3()), "--limit", "0"])),
        3
    );
}

#[test]
fn verify_campaigns() {
    let f = Files::new();
    let out = run(&["verify", "--input", s(&f.cube3())]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["overall"], true);
    assert_eq!(v["cycles"].as_array().unwrap().len(), 4);
    assert_eq!(v["two_cycle"].as_array().unwrap().len(), 6);

    let lines = f.write(
        "lines.json",
        r#"{"d": 2, "vectors": [["1","0"],["0","1"],["1","1"]]}"#,
    );
    assert_eq!(code(&run(&["verify", "--input", s(&lines)])), 0);

    let corrupt = f.write(
        "corrupt.json",
        r#"{"t": 3, "vertices": ["-++", "-+-", "++-", "+--", "+-+", "-++"]}"#,
    );
    assert_eq!(code(&run(&["verify", "--input", s(&corrupt)])), 1);
    assert_eq!(code(&run(&["verify", "--input", s(&f.hexagon())])), 0);

    let out_path = f.dir.path().join("report.json");
    let out = run(&[
        "verify",
        "--input",
        s(&f.cube3()),
        "--output",
        s(&out_path),
        "--seed",
        "3",
    ]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["config"]["seed"], 3);

    assert_eq!(
        code(&run(&[
            "verify",
            "--input",
            s(&f.cube3()),
            "--tolerance",
            "-1"
        ])),
        3
    );
}

#[test]
fn hosted_cycle_file() {
    let f = Files::new();
    let lines = f.write(
        "lines.json",
        r#"{"d": 2, "vectors": [["1","0"],["0","1"],["1","1"]]}"#,
    );
    let out = run(&["validate", "--input", s(&f.hexagon()), "--host", s(&lines)]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    let membership = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "membership")
        .unwrap();
    assert_eq!(membership["passed"], false);
    assert_eq!(code(&run(&["validate", "--input", s(&f.hexagon())])), 0);
}

#[test]
fn spectrum_exports() {
    let f = Files::new();
    let out = run(&["spectrum", "--input", s(&f.square())]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    let mut rows = text.lines();
    assert_eq!(rows.next(), Some("k,re,im,magnitude_squared,sin2_weight"));
    let mags: Vec<f64> = rows
        .map(|r| r.split(',').nth(3).unwrap().parse().unwrap())
        .collect();
    for (m, want) in mags.iter().zip([16.0, 4.0, 0.0, 4.0]) {
        assert!((m.sqrt() - f64::sqrt(want)).abs() < 1e-9, "{mags:?}");
    }

    let out = run(&[
        "spectrum",
        "--input",
        s(&f.hexagon()),
        "--tope=---",
        "--format",
        "json",
    ]);
    let v = json(&out);
    let mags: Vec<f64> = v["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["magnitude_squared"].as_f64().unwrap())
        .collect();
    for (m, want) in mags.iter().zip([81.0, 0.0, 0.0, 9.0, 0.0, 0.0]) {
        assert!((m - want).abs() < 1e-9, "{mags:?}");
    }

    assert_eq!(
        code(&run(&[
            "spectrum",
            "--input",
            s(&f.square()),
            "--cycle",
            "99"
        ])),
        3
    );
}

#[test]
fn committee_and_decompose() {
    let f = Files::new();
    let out = run(&["committee", "--input", s(&f.hexagon())]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["committee"]["cardinality"], 3);
    assert_eq!(v["committee"]["positions"], serde_json::json!([0, 2, 4]));
    assert!(v["exact"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["value"] == 3));
    assert_eq!(v["agree"], true);

    let out = run(&["decompose", "--input", s(&f.hexagon()), "--tope=---"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["coefficients"], serde_json::json!([-1, 1, -1]));
    assert_eq!(
        v["decomposition"]["positions"],
        serde_json::json!([1, 3, 5])
    );

    assert_eq!(code(&run(&["decompose", "--input", s(&f.hexagon())])), 3);
    assert_eq!(
        code(&run(&[
            "decompose",
            "--input",
            s(&f.hexagon()),
            "--tope=++"
        ])),
        3
    );
    let out = run(&["committee", "--input", s(&f.hexagon()), "--format", "csv"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn two_cycle_report() {
    let f = Files::new();
    let out = run(&[
        "two-cycle",
        "--input",
        s(&f.cube3()),
        "--cycle",
        "0",
        "--other",
        "3",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["pass"], true);
    let (a, b) = (
        v["cardinalities"][0].as_f64().unwrap(),
        v["cardinalities"][1].as_f64().unwrap(),
    );
    assert!((v["combined_spectral"].as_f64().unwrap() - (a + b)).abs() < 1e-6);
    assert!(v["checks"][0].get("residual").is_some());
    assert_eq!(code(&run(&["two-cycle", "--input", s(&f.square())])), 3);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
    assert_eq!(code(&run(&["frobnicate"])), 3);
    assert_eq!(code(&run(&["validate"])), 3);
}
