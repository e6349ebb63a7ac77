use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const TRIANGLE: &str = r#"{"name": "triangle", "maximal_simplices": [["a","b"],["b","c"],["a","c"]]}"#;
const RP2: &str = r#"{"name": "rp2", "maximal_simplices": [
  [1,2,4],[2,3,4],[1,3,5],[3,4,5],[1,4,6],[4,5,6],[1,2,5],[2,5,6],[2,3,6],[1,3,6]]}"#;
const TRIANGLE_COVER: &str = r#"{"complex": "triangle.json", "parts": {"A": [["a","b"]], "B": [["b","c"]], "C": [["a","c"]]}}"#;
const HEXAGON_COVER: &str = r#"{
  "complex": {"name": "hexagon", "maximal_simplices": [[1,2],[2,3],[3,4],[4,5],[5,6],[6,1]]},
  "parts": {"U1": [[1,2],[2,3],[3,4]], "U2": [[4,5],[5,6],[6,1]]}
}"#;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        let ws = Workspace { dir: TempDir::new().unwrap() };
        ws.write("triangle.json", TRIANGLE);
        ws.write("rp2.json", RP2);
        ws.write("triangle_cover.json", TRIANGLE_COVER);
        ws.write("hexagon_cover.json", HEXAGON_COVER);
        ws.write("square.txt", "# unit square\n0 0\n1 0\n1 1\n0 1\n");
        ws
    }

    fn write(&self, name: &str, contents: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        fs::write(&p, contents).unwrap();
        p
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }
}

fn run(args: &[&str], file: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homnerve"))
        .args(&args[..1])
        .arg(file)
        .args(&args[1..])
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn free_ranks(doc: &Value) -> Vec<u64> {
    doc["degrees"].as_array().unwrap().iter().map(|d| d["free_rank"].as_u64().unwrap()).collect()
}

#[test]
fn homology_of_circle() {
    let ws = Workspace::new();
    let out = run(&["homology"], &ws.path("triangle.json"));
    assert_eq!(code(&out), 0);
    assert_eq!(free_ranks(&json(&out)), vec![1, 1]);
    let out = run(&["homology", "--reduced"], &ws.path("triangle.json"));
    assert_eq!(free_ranks(&json(&out)), vec![0, 1]);
}

#[test]
fn homology_torsion_and_coefficients() {
    let ws = Workspace::new();
    let doc = json(&run(&["homology"], &ws.path("rp2.json")));
    assert_eq!(doc["degrees"][1]["torsion"], serde_json::json!([2]));
    assert_eq!(free_ranks(&doc), vec![1, 0, 0]);
    let doc = json(&run(&["homology", "--coeff", "p:2"], &ws.path("rp2.json")));
    assert_eq!(free_ranks(&doc), vec![1, 1, 1]);
    assert_eq!(doc["coeff"], "p:2");
    let doc = json(&run(&["homology", "--coeff", "q"], &ws.path("rp2.json")));
    assert_eq!(free_ranks(&doc), vec![1, 0, 0]);
}

#[test]
fn empty_complex_reports_zero() {
    let ws = Workspace::new();
    let p = ws.write("empty.json", r#"{"name": "empty", "maximal_simplices": []}"#);
    let out = run(&["homology"], &p);
    assert_eq!(code(&out), 0);
    assert_eq!(free_ranks(&json(&out)), vec![0]);
}

#[test]
fn input_errors_exit_2() {
    let ws = Workspace::new();
    assert_eq!(code(&run(&["homology", "--coeff", "p:4"], &ws.path("triangle.json"))), 2);
    assert_eq!(code(&run(&["homology", "--coeff", "r"], &ws.path("triangle.json"))), 2);
    let bad = ws.write("bad.json", "{\"maximal_simplices\": [[\"a\", \"a\"]]}");
    assert_eq!(code(&run(&["homology"], &bad)), 2);
    let garbage = ws.write("garbage.json", "not json");
    assert_eq!(code(&run(&["homology"], &garbage)), 2);
    assert_eq!(code(&run(&["homology"], &ws.path("missing.json"))), 2);
    let pts = ws.write("bad.txt", "0 0\n1 x\n");
    assert_eq!(code(&run(&["rips", "--r", "1"], &pts)), 2);
    assert_eq!(code(&run(&["rips", "--r", "0"], &ws.path("square.txt"))), 2);
    assert_eq!(code(&run(&["check", "--mode", "collapse", "--coeff", "z"], &ws.path("triangle_cover.json"))), 2);
}

#[test]
fn nerve_outputs_and_round_trip() {
    let ws = Workspace::new();
    let out = run(&["nerve"], &ws.path("triangle_cover.json"));
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["maximal_simplices"], serde_json::json!([["A", "B"], ["A", "C"], ["B", "C"]]));
    let nerve = ws.write("nerve.json", std::str::from_utf8(&out.stdout).unwrap());
    let h = json(&run(&["homology"], &nerve));
    assert_eq!(free_ranks(&h), vec![1, 1]);

    let doc = json(&run(&["nerve"], &ws.path("hexagon_cover.json")));
    assert_eq!(doc["maximal_simplices"], serde_json::json!([["U1", "U2"]]));
    let one = ws.write("one.json", r#"{"complex": "triangle.json", "parts": {"X": [["a","b"],["b","c"],["a","c"]]}}"#);
    assert_eq!(json(&run(&["nerve"], &one))["maximal_simplices"], serde_json::json!([["X"]]));
    let truncated = json(&run(&["nerve", "--max-dim", "0"], &ws.path("triangle_cover.json")));
    assert_eq!(truncated["maximal_simplices"].as_array().unwrap().len(), 3);
}

#[test]
fn invalid_cover_exits_3() {
    let ws = Workspace::new();
    let p = ws.write("partial.json", r#"{"complex": "triangle.json", "parts": {"A": [["a","b"]]}}"#);
    let out = run(&["nerve"], &p);
    assert_eq!(code(&out), 3);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("[b,c]") && err.contains("[a,c]"), "{err}");
    let q = ws.write("outside.json", r#"{"complex": "triangle.json", "parts": {"A": [["a","b","c"]]}}"#);
    assert_eq!(code(&run(&["check"], &q)), 3);
}

#[test]
fn rips_fixtures() {
    let ws = Workspace::new();
    let doc = json(&run(&["rips", "--r", "1.2"], &ws.path("square.txt")));
    assert_eq!(free_ranks(&doc["homology"]), vec![1, 1]);
    let doc = json(&run(&["rips", "--r", "3/2", "--max-dim", "3"], &ws.path("square.txt")));
    assert_eq!(free_ranks(&doc["homology"]), vec![1, 0, 0, 0]);
    let doc = json(&run(&["rips", "--r", "0.5"], &ws.path("square.txt")));
    assert_eq!(free_ranks(&doc["homology"]), vec![4]);
    // Strict rule: an edge of length exactly r is excluded.
    let doc = json(&run(&["rips", "--r", "1"], &ws.path("square.txt")));
    assert_eq!(free_ranks(&doc["homology"]), vec![4]);
}

#[test]
fn rips_matrix_form_and_labels() {
    let ws = Workspace::new();
    let m = ws.write("m.txt", "matrix\na 0 1 2 1\nb 1 0 1 2\nc 2 1 0 1\nd 1 2 1 0\n");
    let doc = json(&run(&["rips", "--r", "1.5"], &m));
    assert_eq!(free_ranks(&doc["homology"]), vec![1, 1]);
    assert_eq!(doc["complex"]["maximal_simplices"][0], serde_json::json!(["a", "b"]));
    let asym = ws.write("asym.txt", "matrix\na 0 1\nb 2 0\n");
    assert_eq!(code(&run(&["rips", "--r", "1"], &asym)), 2);
    let labeled = ws.write("lab.txt", "p, 0, 0\nq, 3, 4\n");
    let doc = json(&run(&["rips", "--r", "5.01"], &labeled));
    assert_eq!(doc["complex"]["maximal_simplices"], serde_json::json!([["p", "q"]]));
}

#[test]
fn theorem_mode() {
    let ws = Workspace::new();
    let out = run(&["check", "--mode", "theorem", "--k", "1"], &ws.path("triangle_cover.json"));
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["hypothesis"]["passed"], true);
    assert_eq!(doc["conclusion1"], serde_json::json!([true, true]));

    let out = run(&["check", "--k", "1"], &ws.path("hexagon_cover.json"));
    assert_eq!(code(&out), 0, "hypothesis failure is informational");
    let doc = json(&out);
    assert_eq!(doc["hypothesis"]["passed"], false);
    assert_eq!(doc["hypothesis"]["violations"][0]["sigma"], serde_json::json!(["U1", "U2"]));
    assert_eq!(doc["hypothesis"]["violations"][0]["degree"], 0);

    let out = run(&["check", "--k", "2", "--trace"], &ws.path("triangle_cover.json"));
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["proof_trace"]["passed"], true);
}

#[test]
fn property_modes_pass() {
    let ws = Workspace::new();
    for cover in ["triangle_cover.json", "hexagon_cover.json"] {
        for mode in ["prop1", "collapse", "dowker", "gmap"] {
            let out = run(&["check", "--mode", mode], &ws.path(cover));
            assert_eq!(code(&out), 0, "{cover} {mode}: {}", String::from_utf8_lossy(&out.stderr));
            assert_eq!(json(&out)["passed"], true);
        }
    }
    let doc = json(&run(&["check", "--mode", "prop1", "--coeff", "p:2"], &ws.path("hexagon_cover.json")));
    assert!(doc["rows"].as_array().unwrap().iter().all(|r| r["exact"] == true));
    let doc = json(&run(&["check", "--mode", "collapse"], &ws.path("triangle_cover.json")));
    assert_eq!(doc["betti"], serde_json::json!([1, 1]));
}

#[test]
fn reports_are_deterministic() {
    let ws = Workspace::new();
    for args in [&["check", "--k", "1", "--trace"][..], &["nerve"], &["check", "--mode", "collapse"]] {
        let a = run(args, &ws.path("hexagon_cover.json"));
        let b = run(args, &ws.path("hexagon_cover.json"));
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.stderr, b.stderr);
    }
}
