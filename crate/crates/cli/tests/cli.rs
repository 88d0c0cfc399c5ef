use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::TempDir;

fn kmcover() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_kmcover"));
    cmd.env_remove("KMCOVER_JOBS");
    cmd
}

fn run(args: &[&str]) -> Output {
    kmcover().args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn generated(dir: &TempDir, family: &str, rank: usize) -> PathBuf {
    let out = run(&["generate", "--family", family, "--rank", &rank.to_string()]);
    assert_eq!(code(&out), 0);
    write(dir, &format!("{family}-{rank}.txt"), &stdout(&out))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

fn corpus(name: &str) -> String {
    format!("{}/../core/tests/data/affine/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn validate_exit_codes() {
    let dir = TempDir::new().unwrap();
    let ok = write(&dir, "ok.txt", "2 -1\n-1 2\n");
    assert_eq!(code(&run(&["validate", s(&ok)])), 0);

    let bad = write(&dir, "bad.txt", "2 1\n-1 2\n");
    let out = run(&["validate", s(&bad)]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("(1,2)"));
    let out = run(&["--json", "validate", s(&bad)]);
    assert_eq!(code(&out), 2);
    let v = json(&out);
    assert_eq!(v["valid"], false);
    assert_eq!(v["violations"][0]["row"], 1);
    assert_eq!(v["violations"][0]["col"], 2);

    let malformed = write(&dir, "malformed.txt", "2 -1\n-1 two\n");
    assert_eq!(code(&run(&["validate", s(&malformed)])), 3);
    let ragged = write(&dir, "ragged.json", r#"{"rows": [[2, -1], [-1]]}"#);
    assert_eq!(code(&run(&["validate", s(&ragged)])), 3);
    assert_eq!(code(&run(&["validate", "/nonexistent/matrix.txt"])), 3);
}

#[test]
fn center_of_affine_a2() {
    let dir = TempDir::new().unwrap();
    let a2 = generated(&dir, "affine-a", 2);
    let out = run(&["center", s(&a2)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "finite part: Z_3; torus rank: 1");
    let v = json(&run(&["--json", "center", s(&a2)]));
    assert_eq!(v["finite_part"]["invariant_factors"], serde_json::json!([3]));
    assert_eq!(v["torus_rank"], 1);
    assert!(v.get("generators").is_none());
}

#[test]
fn center_generators_in_json() {
    let dir = TempDir::new().unwrap();
    let a3 = generated(&dir, "finite-a", 3);
    let v = json(&run(&["--json", "center", s(&a3)]));
    assert_eq!(v["finite_part"]["order"], 4);
    assert_eq!(v["generators"][0]["coweight"], serde_json::json!(["3/4", "1/2", "1/4"]));
    assert_eq!(v["generators"][0]["order"], 4);
}

#[test]
fn parabolic_json_report() {
    let dir = TempDir::new().unwrap();
    let a3 = generated(&dir, "finite-a", 3);
    let out = run(&["--json", "parabolic", s(&a3), "--subset", "1,2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["structure"], "split");
    assert_eq!(v["gamma"]["invariant_factors"], serde_json::json!([3]));
    assert_eq!(v["subset"], serde_json::json!(["1", "2"]));
    assert_eq!(v["levi_components"][0]["family"], "A2");
    assert_eq!(v["torus_factor_rank"], 1);

    let text = stdout(&run(&["parabolic", s(&a3), "--subset", "1,2", "--fast"]));
    assert!(text.contains("Z_3"));

    let empty = json(&run(&["--json", "parabolic", s(&a3), "--subset", ""]));
    assert_eq!(empty["gamma"]["order"], 1);
    assert_eq!(empty["torus_factor_rank"], 3);
}

#[test]
fn parabolic_semidirect_and_rejections() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "m.json", r#"{"rows": [[2, -2, 0], [-2, 2, 0], [0, 0, 2]]}"#);
    let v = json(&run(&["--json", "parabolic", s(&m), "--subset", "1,2"]));
    assert_eq!(v["structure"], "semidirect");
    assert!(v.get("gamma").is_none());
    assert_eq!(v["det_levi"], 0);

    assert_eq!(code(&run(&["parabolic", s(&m), "--subset", "1,2,3"])), 2);
    assert_eq!(code(&run(&["parabolic", s(&m), "--subset", "4"])), 2);
    let bad = write(&dir, "bad.txt", "2 -1\n0 2\n");
    assert_eq!(code(&run(&["parabolic", s(&bad), "--subset", "1"])), 2);
}

#[test]
fn affine_labels_start_at_zero() {
    let dir = TempDir::new().unwrap();
    let a3 = generated(&dir, "affine-a", 3);
    let v = json(&run(&["--json", "parabolic", s(&a3), "--subset", "0,2"]));
    assert_eq!(v["gamma"]["invariant_factors"], serde_json::json!([2]));
    assert_eq!(v["subset"], serde_json::json!(["0", "2"]));
}

#[test]
fn classify_types() {
    let v = json(&run(&["--json", "classify", &corpus("g2_1.txt")]));
    assert_eq!(v["type"], "affine");
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "m.txt", "2 -1 0\n-3 2 0\n0 0 2\n");
    let v = json(&run(&["--json", "classify", s(&m)]));
    assert_eq!(v["type"], "finite");
    let families: Vec<&str> = v["components"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["family"].as_str().unwrap())
        .collect();
    assert_eq!(families, vec!["G2", "A1"]);
    let text = stdout(&run(&["classify", s(&m)]));
    assert!(text.starts_with("type: finite\n"));
}

#[test]
fn generate_round_trips() {
    let dir = TempDir::new().unwrap();
    for (family, rank) in [
        ("affine-a", 2),
        ("affine-a", 5),
        ("finite-a", 4),
        ("finite-e", 6),
        ("finite-c", 3),
    ] {
        let grid = generated(&dir, family, rank);
        let out = run(&["--json", "generate", "--family", family, "--rank", &rank.to_string()]);
        let doc = json(&out);
        let json_path = write(&dir, &format!("{family}-{rank}.json"), &stdout(&out));

        // the grid carries the same rows and labels
        let text = fs::read_to_string(&grid).unwrap();
        let labels_line = text.lines().next().unwrap();
        let labels: Vec<&str> = labels_line.trim_start_matches("# labels:").split_whitespace().collect();
        assert_eq!(serde_json::json!(labels), doc["labels"]);
        let rows: Vec<Vec<i64>> = text
            .lines()
            .skip(1)
            .map(|l| l.split_whitespace().map(|x| x.parse().unwrap()).collect())
            .collect();
        assert_eq!(serde_json::json!(rows), doc["rows"]);
        assert_eq!(doc["n"], rank as u64 + u64::from(family == "affine-a"));

        // and both re-parse to the same document
        let digest = |p: &Path| {
            let out = run(&[
                "--json",
                "enumerate",
                s(p),
                "--out",
                s(&dir.path().join("scratch.jsonl")),
                "--fast",
            ]);
            json(&out)["digest"].clone()
        };
        assert_eq!(digest(&grid), digest(&json_path));
    }
    assert_eq!(code(&run(&["generate", "--family", "affine-b", "--rank", "3"])), 2);
    assert_eq!(code(&run(&["generate", "--family", "affine-a", "--rank", "1"])), 2);
}

#[test]
fn enumerate_is_byte_identical_across_jobs() {
    let dir = TempDir::new().unwrap();
    let m = write(
        &dir,
        "m.txt",
        "2 -1 0 0 -2\n-1 2 -3 0 0\n0 -1 2 -1 0\n0 0 -2 2 -1\n-1 0 0 -1 2\n",
    );
    let mut outputs = Vec::new();
    for jobs in ["1", "2", "8"] {
        let path = dir.path().join(format!("cat-{jobs}.jsonl"));
        let out = run(&["enumerate", s(&m), "--out", s(&path), "--jobs", jobs]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        outputs.push(fs::read(&path).unwrap());
    }
    let path = dir.path().join("cat-env.jsonl");
    let out = kmcover()
        .env("KMCOVER_JOBS", "3")
        .args(["enumerate", s(&m), "--out", s(&path)])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    outputs.push(fs::read(&path).unwrap());
    let piped = run(&["enumerate", s(&m), "--jobs", "4"]);
    outputs.push(piped.stdout);

    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
    let text = String::from_utf8(outputs[0].clone()).unwrap();
    let records: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 31);
    assert_eq!(records[0]["subset"], serde_json::json!([]));
    assert_eq!(records[1]["subset"], serde_json::json!(["1"]));
    assert_eq!(records[30]["subset"], serde_json::json!(["2", "3", "4", "5"]));
    for r in &records {
        assert_eq!(r["tool_version"], env!("CARGO_PKG_VERSION"));
        assert_eq!(r["subset"], r["report"]["subset"]);
        let factors = r["report"]["gamma"]["invariant_factors"].as_array();
        if let Some(f) = factors {
            let f: Vec<u64> = f.iter().map(|x| x.as_u64().unwrap()).collect();
            assert!(f.windows(2).all(|w| w[1] % w[0] == 0));
        }
    }
}

#[test]
fn enumerate_resumes_and_never_duplicates() {
    let dir = TempDir::new().unwrap();
    let a3 = generated(&dir, "affine-a", 3);
    let full = dir.path().join("full.jsonl");
    assert_eq!(code(&run(&["enumerate", s(&a3), "--out", s(&full)])), 0);
    let expected = fs::read_to_string(&full).unwrap();
    assert_eq!(expected.lines().count(), 15);

    // interrupted run: five complete records and half of the sixth
    let partial = dir.path().join("partial.jsonl");
    let lines: Vec<&str> = expected.lines().collect();
    let mut text: String = lines[..5].iter().map(|l| format!("{l}\n")).collect();
    text.push_str(&lines[5][..20]);
    fs::write(&partial, text).unwrap();
    let v = json(&run(&["--json", "enumerate", s(&a3), "--out", s(&partial)]));
    assert_eq!(v["written"], 10);
    assert_eq!(v["skipped"], 5);
    assert_eq!(fs::read_to_string(&partial).unwrap(), expected);

    let v = json(&run(&["--json", "enumerate", s(&a3), "--out", s(&partial)]));
    assert_eq!(v["written"], 0);
    assert_eq!(fs::read_to_string(&partial).unwrap(), expected);

    // a second matrix shares the catalog
    let a4 = generated(&dir, "finite-a", 4);
    let v = json(&run(&["--json", "enumerate", s(&a4), "--out", s(&partial)]));
    assert_eq!(v["written"], 15);
    assert_eq!(fs::read_to_string(&partial).unwrap().lines().count(), 30);

    let garbage = write(&dir, "garbage.jsonl", "not json\n");
    assert_eq!(code(&run(&["enumerate", s(&a3), "--out", s(&garbage)])), 3);
}

#[test]
fn enumerate_limit() {
    let dir = TempDir::new().unwrap();
    let a4 = generated(&dir, "finite-a", 4);
    let out = dir.path().join("c.jsonl");
    assert_eq!(code(&run(&["enumerate", s(&a4), "--out", s(&out), "--limit", "3"])), 2);
    assert!(!out.exists() || fs::read_to_string(&out).unwrap().is_empty());
    assert_eq!(
        code(&run(&[
            "enumerate",
            s(&a4),
            "--out",
            s(&out),
            "--limit",
            "3",
            "--force"
        ])),
        0
    );
}

#[test]
fn reads_stdin() {
    let mut child = kmcover()
        .args(["center", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"2 -1 0\n-1 2 -1\n0 -1 2\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(stdout(&out).trim(), "finite part: Z_4; torus rank: 0");
}

#[test]
fn version_and_usage() {
    let out = run(&["--version"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out).trim(),
        format!("kmcover {} (catalog format 1)", env!("CARGO_PKG_VERSION"))
    );
    assert_eq!(code(&run(&["frobnicate"])), 3);
}
