//! Exit-code contract and output checks for the binary, run against a
//! scripted matrix of known graphs.

use std::io::Write;
use std::process::{Command, Output};

fn linkirr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linkirr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("linkirr-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

#[test]
fn check_exit_codes() {
    // link-irregular -> 0
    let out = linkirr(&["check", "builtin:counterexample12"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("link-irregular: yes"));
    assert!(text.contains("L(0): {2,3,3,3,4,4,5}"));

    // not link-irregular -> 1
    let k5 = write_temp("k5.g6", "D~{\n");
    let out = linkirr(&["check", k5.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // missing input -> 2
    let out = linkirr(&["check", "/nonexistent/path.g6"]);
    assert_eq!(out.status.code(), Some(2));

    // unknown builtin -> 2
    let out = linkirr(&["check", "builtin:mystery"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(linkirr(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(linkirr(&["check"]).status.code(), Some(2));
    assert_eq!(linkirr(&["enumerate", "--n", "4", "--bogus"]).status.code(), Some(2));
}

#[test]
fn enumerate_streams_graph6() {
    let out = linkirr(&["enumerate", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<&str> = std::str::from_utf8(&out.stdout).unwrap().lines().collect();
    assert_eq!(lines.len(), 11);
    assert!(String::from_utf8_lossy(&out.stderr).contains("11 classes"));
    // every line parses back
    for line in lines {
        assert!(line.chars().all(|c| ('?'..='~').contains(&c)), "{line}");
    }
}

#[test]
fn enumerate_regular_and_connected() {
    let out = linkirr(&["enumerate", "--n", "8", "--r", "2"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 3);
    let out = linkirr(&["enumerate", "--n", "8", "--r", "2", "--connected"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 1);
    // parity violation -> 2
    let out = linkirr(&["enumerate", "--n", "9", "--r", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_summary() {
    let out = linkirr(&["search", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("1 hits / 156 examined"), "{text}");

    let out = linkirr(&["search", "--n", "6", "--all-r", "--format", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert_eq!(parsed.as_array().unwrap().len(), 5); // r = 1..5 all feasible at n = 6
}

#[test]
fn planar_exit_codes_and_certificates() {
    let out = linkirr(&["planar", "builtin:planar16"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("embedding"));

    let k33 = write_temp("k33.edges", "0 3, 0 4, 0 5, 1 3, 1 4, 1 5, 2 3, 2 4, 2 5\n");
    let out = linkirr(&["planar", k33.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("K3,3 subdivision"));
}

#[test]
fn links_table_and_single_vertex() {
    let out = linkirr(&["links", "builtin:counterexample12"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("L(8): {3,3,3,3,3,3,4}"));
    assert_eq!(text.lines().count(), 12);

    let out = linkirr(&["links", "builtin:icosahedron", "--vertex", "0"]);
    // the link of any icosahedron vertex is a 5-cycle
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "Dhc");

    let out = linkirr(&["links", "builtin:icosahedron", "--vertex", "99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bounds_output() {
    let out = linkirr(&["bounds", "--n", "6"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("edge_lower (2n-5):                7"));
    assert!(text.contains("11"));

    let out = linkirr(&["bounds", "--n", "12", "--r", "7", "--format", "structured"]);
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert_eq!(parsed["edge_lower"], 19);
    assert_eq!(parsed["edge_upper"], 58);
    assert_eq!(parsed["moments"]["g"], "1044");

    // below the defined range -> 2
    assert_eq!(linkirr(&["bounds", "--n", "5"]).status.code(), Some(2));
}

#[test]
fn edge_list_files_with_base() {
    let doc = write_temp("c5.edges", "# cycle, labels from 1\n1 2, 2 3, 3 4, 4 5, 5 1\n");
    let out = linkirr(&["check", doc.to_str().unwrap(), "--base", "1"]);
    assert_eq!(out.status.code(), Some(1)); // C5 is not link-irregular
    assert!(String::from_utf8_lossy(&out.stdout).contains("order: 5  edges: 5"));
}

#[test]
fn structured_check_is_json() {
    let out = linkirr(&["check", "builtin:unique6", "--format", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert_eq!(parsed["verdict"]["link_irregular"], true);
    assert_eq!(parsed["subject"]["order"], 6);
}

#[test]
fn verify_subset_runs() {
    let out = linkirr(&["verify-paper", "--only", "c1,c9"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS c1"));
    assert!(text.contains("PASS c9"));

    let out = linkirr(&["verify-paper", "--only", "c99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn checkpointed_search_resumes() {
    let dir = std::env::temp_dir().join(format!("linkirr-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let ckpt = dir.join("search6.ckpt");
    let _ = std::fs::remove_file(&ckpt);
    let args = ["search", "--n", "6", "--checkpoint", ckpt.to_str().unwrap()];
    let first = linkirr(&args);
    assert_eq!(first.status.code(), Some(0));
    let second = linkirr(&args);
    assert_eq!(second.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&second.stdout).contains("1 hits / 156 examined"));
    let _ = std::fs::remove_file(&ckpt);
}
