use std::path::Path;
use std::process::{Command, Output};

use gklab::prime_graph::{gk_graph, PrimeGraph};

fn gklab(args: &[&str]) -> Output {
    gklab_env(args, &[])
}

fn gklab_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gklab"));
    cmd.args(args).env_remove("GKLAB_MAX_ORDER");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

const S3_SPEC: &str = r#"{"groups": {"S3": {"type": "perm", "degree": 3, "gens": [[[1, 2]], [[1, 2, 3]]]}}}"#;

/// Rebuilds a graph literal from the node and edge lines of a DOT block.
fn literal_from_dot(dot: &str) -> String {
    let mut parts = Vec::new();
    let mut covered = std::collections::BTreeSet::new();
    for line in dot.lines().map(str::trim) {
        if let Some((a, b)) = line.trim_end_matches(';').split_once(" -- ") {
            covered.insert(a.to_string());
            covered.insert(b.to_string());
            parts.push(format!("{a}-{b}"));
        }
    }
    for line in dot.lines().map(str::trim) {
        if let Some((v, _)) = line.split_once(" [label=") {
            if !covered.contains(v) {
                parts.push(v.to_string());
            }
        }
    }
    parts.join(",")
}

#[test]
fn analyze_s3() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "s3.json", S3_SPEC);
    let out = gklab(&["analyze", &spec]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let g = &report["groups"][0];
    assert_eq!(g["order"], 6);
    assert_eq!(g["graph"]["vertices"], serde_json::json!([2, 3]));
    assert_eq!(g["graph"]["edges"], serde_json::json!([]));
    assert_eq!(g["rationality"]["is_rational"], true);
    assert_eq!(g["frobenius"]["kind"], "frobenius");
    assert_eq!(report["tool"]["name"], "gklab");
}

#[test]
fn reports_are_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "mixed.json",
        include_str!("data/s4.json"),
    );
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for target in [&a, &b] {
        let out = gklab(&["analyze", &spec, "--out", target.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(a, b);
    assert_eq!(stdout(&gklab(&["analyze", &spec])).as_bytes(), a.as_slice());
    let report: serde_json::Value = serde_json::from_slice(&a).unwrap();
    let orders: Vec<u64> = report["groups"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["order"].as_u64().unwrap())
        .collect();
    assert_eq!(orders, [6, 24, 300, 48]);
}

#[test]
fn bad_specs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write(dir.path(), "empty.json", r#"{"groups": {}}"#);
    let out = gklab(&["analyze", &empty]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert!(out.stdout.is_empty());

    let undefined = write(dir.path(), "u.json", r#"{"groups": {"A": {"type": "direct", "factors": ["B"]}}}"#);
    assert_eq!(gklab(&["analyze", &undefined]).status.code(), Some(2));
    let broken = write(dir.path(), "b.json", "{ not json");
    assert_eq!(gklab(&["analyze", &broken]).status.code(), Some(2));
    assert_eq!(gklab(&["analyze", "/nonexistent/spec.json"]).status.code(), Some(2));
}

#[test]
fn cap_exceeded_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let big = write(
        dir.path(),
        "big.json",
        r#"{"groups": {"S": {"type": "perm", "degree": 8, "gens": [[[1, 2, 3, 4, 5, 6, 7, 8]], [[1, 2]]]}}}"#,
    );
    let out = gklab_env(&["analyze", &big], &[("GKLAB_MAX_ORDER", "1000")]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
    let out = gklab_env(&["graph", "fig3.r"], &[("GKLAB_MAX_ORDER", "100")]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn dot_for_catalog_groups() {
    let out = gklab(&["graph", "fig3.l", "--dot"]);
    assert_eq!(out.status.code(), Some(0));
    let dot = stdout(&out);
    assert!(dot.starts_with("graph "));
    for v in ["2", "3", "7"] {
        assert!(dot.contains(&format!("{v} [label=\"{v}\"]")));
    }
    assert_eq!(dot.matches(" -- ").count(), 1);
    assert!(dot.contains("2 -- 3;"));

    let trivial = stdout(&gklab(&["graph", "trivial", "--dot"]));
    assert!(!trivial.contains("label"));

    let p = stdout(&gklab(&["graph", "fig3.p", "--dot"]));
    assert_eq!(p.matches("[label=").count(), 4);
    let lit = literal_from_dot(&p);
    assert_eq!(
        PrimeGraph::parse_literal(&lit).unwrap(),
        PrimeGraph::parse_literal("2-3-5-7-2").unwrap()
    );
}

#[test]
fn dot_round_trips_through_the_literal_parser() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["fig3.h", "fig3.k", "fig3.r", "twofrob.c", "S4", "C7:C6"] {
        let file = dir.path().join("g.dot");
        let out = gklab(&["graph", name, "--dot", file.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
        let dot = std::fs::read_to_string(&file).unwrap();
        let want = gk_graph(&gklab::catalog::resolve(name).unwrap());
        assert_eq!(PrimeGraph::parse_literal(&literal_from_dot(&dot)).unwrap(), want, "{name}");
        assert_eq!(PrimeGraph::from_dot(&dot).unwrap(), want);
    }
}

#[test]
fn graph_of_spec_groups_and_unknown_names() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "s3.json", S3_SPEC);
    assert_eq!(stdout(&gklab(&["graph", &spec])), "S3: 2,3\n");
    let out = gklab(&["graph", "no-such-group"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn verify_suites() {
    for (suite, summary) in [
        ("figure3", "figure3: 18/18 passed"),
        ("twofrobenius", "twofrobenius: 4/4 passed"),
        ("frobenius-families", "frobenius-families: 13/13 passed"),
        ("classifier", "classifier: 54/54 passed"),
    ] {
        let out = gklab(&["verify", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        assert!(stdout(&out).contains(summary), "{suite}");
    }
    let out = gklab(&["verify", "invariants", "--seed", "3", "--count", "40", "--max-order", "600"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).contains("FAIL"));
    assert_eq!(gklab(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn classify_literals() {
    let cases = [
        (&["classify", "2-3", "--class", "cut"][..], "realized: (d)"),
        (&["classify", "2,3,5", "--class", "cut"][..], "forbidden: three-primes rule"),
        (&["classify", "3-2-5", "--class", "rational"][..], "open:"),
        (&["classify", "2-5,3", "--class", "cut"][..], "forbidden:"),
    ];
    for (args, prefix) in cases {
        let out = gklab(args);
        assert_eq!(out.status.code(), Some(0));
        assert!(stdout(&out).starts_with(prefix), "{args:?}: {}", stdout(&out));
    }
    assert_eq!(gklab(&["classify", "2-x", "--class", "cut"]).status.code(), Some(2));
    assert_eq!(gklab(&["classify", "2-4", "--class", "cut"]).status.code(), Some(2));
}
