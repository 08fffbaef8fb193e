use std::path::{Path, PathBuf};

use serde_json::Value;
use uidiso::{parse_edge_list, verify_mapping, IsoMapping};
use uidiso_cli::{run_cli, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE};

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("uidiso").chain(args.iter().copied());
    let code = run_cli(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write_temp(dir: &tempfile::TempDir, name: &str, body: &[u8]) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn uid_rows_for_vertex_four() {
    let (code, out, _) = run(&["uid", &data("g1.el"), "--vertex", "4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "vertex 4 -2 5 6 3 2 -2 4 7 4 2 4 1 3 4 -2 4 6 4 2 4 2 3 4 -2\n\
         degree 4 -2 1 2 2 3 -2 4 1 4 3 4 1 2 4 -2 -1 2 -1 -1 -1 3 -1 -1 -2\n"
    );
    let (_, json, _) = run(&["uid", &data("g2.el"), "--vertex", "D", "--json"]);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["vertexRow"][0], "D");
    assert_eq!(v["degreeRow"][0], 4);
    assert_eq!(v["degreeRow"].as_array().unwrap().len(), 25);
}

#[test]
fn uid_for_every_root() {
    let (code, seq, _) = run(&["uid", &data("g3.el"), "--json"]);
    assert_eq!(code, EXIT_OK);
    let (_, par, _) = run(&["uid", &data("g3.el"), "--json", "--parallel"]);
    assert_eq!(seq, par);
    let v: Value = serde_json::from_str(&seq).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 8);
    assert_eq!(v[7]["root"], "8");
}

#[test]
fn uid_errors() {
    let (code, _, err) = run(&["uid", &data("g1.el"), "--vertex", "9"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("no vertex labelled"));
    let dir = tempfile::tempdir().unwrap();
    let split = write_temp(&dir, "split.el", b"3\n1 2\n");
    let (code, _, err) = run(&["uid", split.to_str().unwrap(), "--vertex", "1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("disconnected"));
}

#[test]
fn iso_on_the_worked_pair() {
    let (code, out, _) = run(&["iso", &data("g1.el"), &data("g2.el")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "isomorphic\n1→G 2→F 3→E 4→D 5→C 6→B 7→A\n");
}

#[test]
fn iso_json_mapping_re_verifies() {
    let (code, out, _) = run(&["iso", "--json", &data("g1.el"), &data("g2.el")]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "isomorphic");
    let g1 = parse_edge_list(&std::fs::read_to_string(data("g1.el")).unwrap()).unwrap();
    let g2 = parse_edge_list(&std::fs::read_to_string(data("g2.el")).unwrap()).unwrap();
    let forward: Vec<usize> = (0..g1.n())
        .map(|x| {
            let image = v["mapping"][g1.label(x)].as_str().unwrap();
            g2.vertex_by_label(image).unwrap()
        })
        .collect();
    assert!(verify_mapping(&g1, &g2, &IsoMapping::from_forward(forward).unwrap()));
}

#[test]
fn iso_from_every_root_label() {
    for root in 1..=7 {
        let (code, out, _) = run(&["iso", &data("g1.el"), &data("g2.el"), "--root", &root.to_string()]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("isomorphic"));
    }
}

#[test]
fn negative_verdicts_exit_one() {
    let (code, out, _) = run(&["check", &data("k3.el")]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert_eq!(out, "not permissible: neighbours 2 and 3 of vertex 1 share key (2, [2, 2])\n");

    let (code, out, _) = run(&["iso", &data("p4.el"), &data("star.el")]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert!(out.starts_with("inapplicable: second graph"));

    let (code, out, _) = run(&["iso", &data("g1.el"), &data("g3.el")]);
    assert_eq!((code, out.as_str()), (EXIT_NEGATIVE, "non-isomorphic\n"));

    let (code, out, _) = run(&["oracle-iso", &data("p4.el"), &data("star.el"), "--json"]);
    assert_eq!(code, EXIT_NEGATIVE);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "non-isomorphic");
    assert!(v.get("mapping").is_none());
}

#[test]
fn check_json_schema() {
    let (code, out, _) = run(&["check", "--json", &data("g3.el")]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["permissible"], true);
    assert_eq!(v["reason"], "Permissible");
    assert!(v.get("witness").is_none());

    let dir = tempfile::tempdir().unwrap();
    let split = write_temp(&dir, "split.el", b"2\n");
    let (code, out, _) = run(&["check", "--json", split.to_str().unwrap()]);
    assert_eq!(code, EXIT_NEGATIVE);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["reason"], "NotConnected");
}

#[test]
fn graph6_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write_temp(&dir, "k2.g6", b"A_\n");
    let (code, out, _) = run(&["check", k2.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "permissible\n"));

    let plain = write_temp(&dir, "k2.txt", b"A_");
    let (code, _, err) = run(&["check", plain.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 1"), "{err}");
    let (code, _, _) = run(&["check", "--format", "graph6", plain.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);

    let bad = write_temp(&dir, "bad.g6", b"A\x20");
    let (code, _, err) = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("offset 1"), "{err}");
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(run(&["check", "--nope", &data("g1.el")]).0, EXIT_USAGE);
    assert_eq!(run(&["check", "/nonexistent/graph.el"]).0, EXIT_USAGE);
    assert_eq!(run(&["census", "--max-n", "8"]).0, EXIT_USAGE);
    assert_eq!(run(&["census", "--max-n", "0"]).0, EXIT_USAGE);
    assert_eq!(run(&["--help"]).0, EXIT_OK);
}

#[test]
fn census_rows() {
    let (code, out, _) = run(&["census", "--max-n", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "1\t1\t1\t1\t1\t1.0000\n");

    let (_, out, _) = run(&["census", "--max-n", "4", "--json", "--parallel"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[3]["total"], 11);
    assert_eq!(rows[3]["fraction"], 0.0909);
}

#[test]
fn run_report_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let (code, _, _) = run(&[
        "iso",
        &data("g1.el"),
        &data("g2.el"),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["command"], "iso");
    assert_eq!(v["payload"]["verdict"], "isomorphic");
    assert_eq!(v["inputsDigest"].as_str().unwrap().len(), 64);
    assert!(v["wallTimeMs"].as_f64().unwrap() >= 0.0);

    // same inputs, same digest
    let again = dir.path().join("again.json");
    run(&["iso", &data("g1.el"), &data("g2.el"), "--report", again.to_str().unwrap()]);
    let w: Value = serde_json::from_str(&std::fs::read_to_string(&again).unwrap()).unwrap();
    assert_eq!(v["inputsDigest"], w["inputsDigest"]);
}

#[test]
fn bench_reports_every_order() {
    let (code, out, _) = run(&[
        "bench", "--min-n", "4", "--max-n", "7", "--samples", "3", "--json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0]["samples"], 3);
    // nothing permissible exists on five vertices
    assert_eq!(rows[1]["samples"], 0);
    assert_eq!(rows[3]["n"], 7);

    assert_eq!(run(&["bench", "--min-n", "5", "--max-n", "4"]).0, EXIT_USAGE);
}
