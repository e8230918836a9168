use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antiforcing"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn generate(dir: &Path, family: &str, params: &str, file: &str) -> String {
    let path = dir.join(file);
    let o = run(&["generate", family, params, "--out", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path.to_str().unwrap().to_string()
}

fn compute(input: &str, inv: &str) -> Value {
    let o = run(&["compute", "--in", input, "--inv", inv]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn value<'a>(report: &'a Value, name: &str) -> &'a Value {
    let entries = report["invariants"].as_array().unwrap();
    &entries.iter().find(|e| e["name"] == name).unwrap()["value"]
}

#[test]
fn generate_trunc_para_and_dodecahedron() {
    let o = run(&["generate", "trunc-para", "5,5,3,2"]);
    assert_eq!(stdout(&o).lines().count(), 15);
    let o = run(&["generate", "named", "dodecahedron"]);
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 30);
    assert!(text.starts_with("p 20 30\n"));
}

#[test]
fn compute_goldens() {
    let dir = tempfile::tempdir().unwrap();
    let tri = generate(dir.path(), "named", "triphenylene", "triphenylene.hex");
    let r = compute(&tri, "af_spectrum");
    assert_eq!(value(&r, "af_spectrum")["value_set"], serde_json::json!([2, 3, 4]));

    let c6 = generate(dir.path(), "named", "c6", "c6.graph");
    let r = compute(&c6, "f,af");
    assert_eq!((value(&r, "f"), value(&r, "af")), (&Value::from(1), &Value::from(1)));

    let d = generate(dir.path(), "named", "dodecahedron", "dodeca.graph");
    let r = compute(&d, "f_spectrum");
    assert_eq!(value(&r, "f_spectrum")["value_set"], serde_json::json!([3]));
}

#[test]
fn compute_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let tri = generate(dir.path(), "named", "triphenylene", "t.hex");
    let strip = |mut r: Value| {
        for e in r["invariants"].as_array_mut().unwrap() {
            e["runtime_ms"] = Value::Null;
        }
        r
    };
    let inv = "f,F,af,Af,clar,fries,fries_min,i_dual";
    assert_eq!(strip(compute(&tri, inv)), strip(compute(&tri, inv)));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = generate(dir.path(), "named", "c6", "c6.graph");
    assert_eq!(run(&["compute", "--in", &c6, "--inv", "clar"]).status.code(), Some(3));

    let broken = dir.path().join("broken.graph");
    std::fs::write(&broken, "p 3 1\ne 0 9\n").unwrap();
    let o = run(&["compute", "--in", broken.to_str().unwrap(), "--inv", "f"]);
    assert_eq!(o.status.code(), Some(2));

    let tri = generate(dir.path(), "named", "triphenylene", "t.hex");
    let o = run(&["compute", "--in", &tri, "--inv", "f_spectrum", "--max-matchings", "3"]);
    assert_eq!(o.status.code(), Some(4));

    assert_eq!(run(&["verify", "--suite", "thm99"]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    let o = run(&["verify", "--suite", "thm16", "--max-cells", "6"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("thm16: "));
    let o = run(&["verify", "--suite", "thm5", "--max-cells", "2"]);
    assert!(o.status.success());
}

#[test]
fn polyhex_corpus_is_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        let o = run(&["generate", "polyhex-corpus", "4", "--out", d.path().to_str().unwrap()]);
        assert!(o.status.success());
    }
    let mut names: Vec<_> = std::fs::read_dir(a.path())
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    names.sort();
    assert_eq!(names.len(), 44);
    for n in names {
        let x = std::fs::read(a.path().join(&n)).unwrap();
        let y = std::fs::read(b.path().join(&n)).unwrap();
        assert_eq!(x, y);
    }
}
