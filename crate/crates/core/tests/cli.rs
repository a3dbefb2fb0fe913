use std::path::Path;
use std::process::{Command, Output};

use knotcomm::catalog::Catalog;

fn knotcomm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotcomm"))
        .args(args)
        .env_remove("KNOTCOMM_CATALOG")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn invariants_of_9_48() {
    let o = knotcomm(&["invariants", "9_48"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("alexander: t^4 - 7t^3 + 11t^2 - 7t + 1"));
    assert!(text.contains("mahler measure: 5.106964"));
    assert!(text.contains("tau: 1.630605"));
    assert!(text.contains("rho: 1.645122"));
    assert!(text.contains("signature: 2"));
}

#[test]
fn compare_exit_codes() {
    let o = knotcomm(&["compare", "9_48", "12n_642", "--n1", "8", "--n2", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("orientation-reversing"));
    assert!(stdout(&o).ends_with("overall: pass\n"));

    let o = knotcomm(&["compare", "9_48", "12n_642", "--n1", "8", "--n2", "6", "--epsilon", "+1"]);
    assert_eq!(o.status.code(), Some(1));
    let o = knotcomm(&["compare", "9_48", "12n_642", "--n1", "8", "--n2", "6", "--epsilon", "-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(knotcomm(&["compare", "9_48", "12n_642", "--n1", "4", "--n2", "3"]).status.code(), Some(1));
    assert_eq!(knotcomm(&["compare", "Ds", "Df"]).status.code(), Some(1));

    let o = knotcomm(&["compare", "9_48", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown knot 'nope'"));

    let o = knotcomm(&["compare", "trefoil", "9_48", "--n1", "6", "--n2", "1"]);
    assert_eq!(o.status.code(), Some(5));
    assert!(stderr(&o).contains("b1"));

    assert_eq!(knotcomm(&["--radius", "2", "invariants", "9_48"]).status.code(), Some(6));
    assert_eq!(knotcomm(&["growth", "trefoil"]).status.code(), Some(6));
    assert_eq!(knotcomm(&["frobnicate"]).status.code(), Some(6));
}

#[test]
fn scan_finds_the_reversing_ratio() {
    let o = knotcomm(&["--nmax", "48", "compare", "9_48", "12n_642"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("4:3  first exact pass at covers 8 and 6"));
}

#[test]
fn catalog_from_env_and_flag() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "extra.json",
        r#"{"version": 1, "knots": [
            {"name": "prod", "alexander": [1, 0, -53, 182, -261, 182, -53, 0, 1], "signature": 4}
        ]}"#,
    );
    let o = Command::new(env!("CARGO_BIN_EXE_knotcomm"))
        .args(["invariants", "prod"])
        .env("KNOTCOMM_CATALOG", &path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("rho: undetermined"));

    let o = knotcomm(&["--catalog", &path, "catalog", "list"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("prod") && stdout(&o).contains("9_48"));
    assert_eq!(knotcomm(&["invariants", "prod"]).status.code(), Some(2));
}

#[test]
fn catalog_export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("export.json");
    let o = knotcomm(&["catalog", "export", "--output", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let loaded = Catalog::load(&out).unwrap();
    let builtin = Catalog::builtin();
    assert_eq!(loaded.names(), builtin.names());
    for k in builtin.knots() {
        let l = loaded.get(k.name()).unwrap();
        assert_eq!(l.alexander(), k.alexander());
        assert_eq!(l.signature().ok(), k.signature().ok());
    }
    assert_eq!(loaded.to_json_string(), builtin.to_json_string());
}

#[test]
fn catalog_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "bad.json",
        "{\"version\": 1, \"knots\": [\n  {\"name\": \"a\", \"alexander\": [1, -3, 1]},\n  {\"name\": \"b\", \"alexander\": [1, 1]}\n]}",
    );
    let o = knotcomm(&["--catalog", &path, "catalog", "list"]);
    assert_eq!(o.status.code(), Some(6));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn csv_output_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let runs: Vec<Vec<u8>> = (0..2)
        .map(|i| {
            let p = dir.path().join(format!("sig{i}.csv"));
            let o = knotcomm(&["signature", "9_48", "--samples", "33", "--output", p.to_str().unwrap()]);
            assert_eq!(o.status.code(), Some(0));
            std::fs::read(p).unwrap()
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
    let text = String::from_utf8(runs[0].clone()).unwrap();
    assert!(text.starts_with("turn,sigma\n0,0\n"));
    assert!(text.contains("jump"));
    assert!(text.trim_end().ends_with("0.500000000000000,2"));

    let a = stdout(&knotcomm(&["growth", "9_48", "--kmax", "20"]));
    let b = stdout(&knotcomm(&["growth", "9_48", "--kmax", "20"]));
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 21);
}

#[test]
fn covers_table_flags_infinite_homology() {
    let o = knotcomm(&["covers", "trefoil", "--to", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "n,b1,torsion_order,infinite\n1,1,1,false\n2,1,3,false\n3,1,4,false\n4,1,3,false\n5,1,1,false\n6,3,0,true\n"
    );
}
