use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const H1: &str = "9 3\n2 3 4 6\n1 2 3 4 5 7\n2 8 9\n";
const H2: &str = "6 5\n1 2 5\n3 4\n4 5 6\n1 3 5\n2 6\n";

fn minhit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minhit")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn file(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn ehs_on_h1() {
    let dir = tempfile::tempdir().unwrap();
    let p = file(dir.path(), "h1.txt", H1);
    let o = minhit(&["ehs", &p]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[3], "count 11");
    let reduced = stdout(&minhit(&["ehs", "--reduce", &p]));
    assert!(reduced.ends_with("count 11\n"));
}

#[test]
fn mhs_first_grade_on_h2() {
    let dir = tempfile::tempdir().unwrap();
    let p = file(dir.path(), "h2.txt", H2);
    let out = stdout(&minhit(&["mhs", "--grade", "first", &p]));
    let rows: Vec<&str> = out.lines().filter(|l| !l.starts_with('#') && !l.starts_with("count")).collect();
    assert_eq!(rows.len(), 4);
    assert!(out.contains("count 9\n"));
}

#[test]
fn hs_cutoff_on_h2() {
    let dir = tempfile::tempdir().unwrap();
    let p = file(dir.path(), "h2.txt", H2);
    let out = stdout(&minhit(&["hs", "--cutoff", "3", &p]));
    assert_eq!(out.lines().filter(|l| !l.starts_with("count")).count(), 4);
}

#[test]
fn json_mode() {
    let dir = tempfile::tempdir().unwrap();
    let p = file(dir.path(), "h2.txt", H2);
    let o = minhit(&["--format", "json", "mhs", &p]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exact"], "9");
    assert_eq!(v["final_rows"].as_array().unwrap().len(), 4);
    let c: serde_json::Value = serde_json::from_str(&stdout(&minhit(&["--format", "json", "count", "--of", "ehs", &p])))
        .unwrap();
    assert!(c["count"].is_string());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(minhit(&["nonsense"]).status.code(), Some(1));
    assert_eq!(minhit(&["gen", "--w", "4", "--h", "1", "--k", "2"]).status.code(), Some(1));
    let bad = file(dir.path(), "bad.txt", "3 1\n0 1\n");
    let o = minhit(&["ehs", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let missing = dir.path().join("nope.txt");
    assert_eq!(minhit(&["ehs", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn mnmc_cache_is_keyed_by_content() {
    let dir = tempfile::tempdir().unwrap();
    let p = file(dir.path(), "h2.txt", H2);
    let cache = dir.path().join("mnmc.txt");
    let c = cache.to_str().unwrap();
    let first = stdout(&minhit(&["mhs", "--mnmc-cache", c, &p]));
    let text = fs::read_to_string(&cache).unwrap();
    assert!(text.starts_with("# hypergraph-sha256: "));
    assert_eq!(text.lines().nth(1), Some("6 8"));
    let second = stdout(&minhit(&["mhs", "--mnmc-cache", c, &p]));
    assert_eq!(first, second);
    // a stale cache for other content is rebuilt
    fs::write(&cache, "# hypergraph-sha256: 00\n6 1\n1 2\n").unwrap();
    let third = stdout(&minhit(&["mhs", "--mnmc-cache", c, &p]));
    assert_eq!(first, third);
    assert!(fs::read_to_string(&cache).unwrap().contains("6 8"));
}

#[test]
fn deterministic_text() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    let gs = g.to_str().unwrap();
    assert!(minhit(&["gen", "--w", "14", "--h", "7", "--k", "4", "--seed", "5", "-o", gs]).status.success());
    let a = stdout(&minhit(&["--workers", "1", "classify", "--seed", "3", gs]));
    let b = stdout(&minhit(&["--workers", "4", "classify", "--seed", "3", gs]));
    assert_eq!(a, b);
    assert!(a.contains("estimate"));
}

#[test]
fn matchings_of_a_square() {
    let dir = tempfile::tempdir().unwrap();
    let p = file(dir.path(), "c4.txt", "4 4\n1 2\n2 3\n3 4\n4 1\n");
    let out = stdout(&minhit(&["matchings", &p]));
    assert!(out.ends_with("count 2\n"));
}

#[test]
fn samples_are_minimal_transversals() {
    let dir = tempfile::tempdir().unwrap();
    let p = file(dir.path(), "h2.txt", H2);
    let out = stdout(&minhit(&["sample", "-n", "12", "--seed", "4", &p]));
    let mhs = ["1 2 4", "1 4 6", "2 3 4", "2 3 5", "2 4 5", "3 5 6", "4 5 6", "1 3 6", "2 3 6"];
    assert_eq!(out.lines().count(), 12);
    for l in out.lines() {
        assert!(mhs.contains(&l), "{l}");
    }
}
