use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fermat-zagreb"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn compute_path_file_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "p4.txt", "# path\n4\n0 1\n1 2\n2 3\n");
    let o = run(&["compute", "--input", &f]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["comparison"], "zero");
    assert_eq!(v["class"], "tree");
    assert_eq!(v["eps3"], serde_json::json!([3, 3, 3, 3]));
    assert_eq!((v["f1"].as_u64(), v["f2"].as_u64()), (Some(36), Some(27)));
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        [
            "n",
            "m",
            "class",
            "eps3",
            "f1",
            "f2",
            "e1",
            "e2",
            "z1",
            "z2",
            "comparison"
        ]
    );
}

#[test]
fn compute_star_is_negative() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "s5.txt", "5\n0 1\n0 2\n0 3\n0 4\n");
    let v = json(&run(&["compute", "--input", &f]));
    assert_eq!(v["comparison"], "negative");
    assert_eq!(v["eps3"], serde_json::json!([2, 3, 3, 3, 3]));
    assert_eq!(v["f1"], 40);
}

#[test]
fn compute_reads_graph6() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "k4.g6", "C~\n");
    let v = json(&run(&["compute", "--input", &f]));
    assert_eq!((v["n"].as_u64(), v["m"].as_u64()), (Some(4), Some(6)));
    assert_eq!(v["class"], "multicyclic");
    let f = write(dir.path(), "k4h.g6", ">>graph6<<C~\n");
    assert_eq!(json(&run(&["compute", "--input", &f]))["m"], 6);
}

#[test]
fn input_errors_use_parse_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("bad.txt", "3\n0 1\n1 x\n"),
        ("loop.txt", "3\n0 1\n1 1\n"),
        ("range.txt", "3\n0 1\n1 3\n"),
        ("split.txt", "4\n0 1\n2 3\n"),
        ("empty.txt", "# nothing\n"),
        ("g6.txt", "C\n"),
    ];
    for (name, body) in cases {
        let f = write(dir.path(), name, body);
        let o = run(&["compute", "--input", &f]);
        assert_eq!(o.status.code(), Some(3), "{name}");
        assert!(o.stdout.is_empty());
        assert!(
            String::from_utf8_lossy(&o.stderr).starts_with("error:"),
            "{name}"
        );
    }
    let o = run(&["compute", "--input", "/nonexistent/graph.txt"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors() {
    for args in [
        &["verify", "tree", "2..50"][..],
        &["verify", "unicyclic", "3..10"],
        &["verify", "tree", "9..2"],
        &["verify", "forest", "2..5"],
        &["formula", "multicyclic", "2", "0"],
        &["search", "hill-climb"],
        &["search", "exhaustive-small", "--max-n", "9"],
        &["compute"],
        &["compute", "--family", "wheel:6"],
        &["enumerate", "tree", "13"],
        &["compute", "--family", "path:3", "--threads", "0"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_commands() {
    let o = run(&["verify", "tree", "2..9"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["instance_count"], 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47);
    assert_eq!(v["equality_instances"].as_array().unwrap().len(), 8);
    assert_eq!(v["failures"], serde_json::json!([]));

    let o = run(&["verify", "unicyclic", "3..7", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "class,n_min,n_max,instances,failures,equality_instances,aborted\nunicyclic,3,7,54,0,10,false\n"
    );
}

#[test]
fn formula_commands() {
    let sign = |args: &[&str]| json(&run(args))["sign"].as_str().unwrap().to_string();
    assert_eq!(sign(&["formula", "bicyclic", "67"]), "positive");
    assert_eq!(sign(&["formula", "bicyclic", "68"]), "negative");
    assert_eq!(sign(&["formula", "multicyclic", "3", "0"]), "positive");
    let o = run(&["formula", "bicyclic", "68", "--format", "text"]);
    assert_eq!(stdout(&o), "bicyclic x=68: -2053/44310 (negative)\n");
}

#[test]
fn search_exit_codes_and_witnesses() {
    let o = run(&["search", "exhaustive-small", "--max-n", "8"]);
    assert_eq!(o.status.code(), Some(4));
    let v = json(&o);
    assert!(!v["negative"].as_array().unwrap().is_empty());
    assert_eq!(v["complete"], false);

    let dir = tempfile::tempdir().unwrap();
    let wd = dir.path().join("w");
    let o = run(&[
        "search",
        "family-sweep",
        "--budget",
        "10000",
        "--witness-dir",
        wd.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let first = &v["positive"][0];
    assert_eq!(first["comparison"], "positive");

    let edges = wd.join("positive-000.edges");
    let record: Value =
        serde_json::from_str(&fs::read_to_string(wd.join("positive-000.json")).unwrap()).unwrap();
    assert_eq!(record["graph6"], first["graph6"]);
    let recomputed = json(&run(&["compute", "--input", edges.to_str().unwrap()]));
    for key in ["n", "m", "f1", "f2", "e1", "e2", "z1", "z2", "comparison"] {
        assert_eq!(recomputed[key], record[key], "{key}");
        assert_eq!(recomputed[key], first[key], "{key}");
    }
    assert!(wd.join("negative-004.edges").exists());
    assert!(!wd.join("negative-005.edges").exists());
}

#[test]
fn csv_and_json_agree() {
    let j = json(&run(&["enumerate", "tree", "7"]));
    let c = stdout(&run(&["enumerate", "tree", "7", "--format", "csv"]));
    let mut lines = c.lines();
    assert_eq!(
        lines.next(),
        Some("name,n,m,class,f1,f2,e1,e2,z1,z2,comparison")
    );
    let rows: Vec<&str> = lines.collect();
    let items = j.as_array().unwrap();
    assert_eq!(rows.len(), items.len());
    assert_eq!(rows.len(), 11);
    for (row, item) in rows.iter().zip(items) {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[0], item["name"].as_str().unwrap());
        for (i, key) in ["n", "m"].iter().enumerate() {
            assert_eq!(fields[i + 1], item[key].to_string());
        }
        assert_eq!(fields[3], item["class"].as_str().unwrap());
        for (i, key) in ["f1", "f2", "e1", "e2", "z1", "z2"].iter().enumerate() {
            assert_eq!(fields[i + 4], item[key].to_string(), "{key}");
        }
        assert_eq!(fields[10], item["comparison"].as_str().unwrap());
    }
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = run(&[
        "compute",
        "--family",
        "cycle:6",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["comparison"], "zero");
    assert_eq!(v["class"], "unicyclic");
}

#[test]
fn single_vertex_has_no_comparison() {
    let v = json(&run(&["compute", "--family", "path:1"]));
    assert_eq!(v["comparison"], Value::Null);
    assert_eq!(v["f1"], 0);
}
