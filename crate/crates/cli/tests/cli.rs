use std::collections::BTreeMap;
use std::process::{Command, Output};

use serde::Deserialize;
use serde_json::Value;

/// Independent copy of the report schema; unknown fields are rejected.
#[derive(Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
struct Schema {
    command: String,
    inputs: Value,
    result: Value,
    #[serde(default)]
    counts: Option<BTreeMap<String, u64>>,
    status: String,
}

fn cubix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubix"))
        .args(args)
        .env_remove("CUBIX_CACHE")
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> Schema {
    let out = cubix(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let s: Schema = serde_json::from_slice(&out.stdout).expect("report parses");
    assert!(s.status == "ok" || s.status == "fail");
    s
}

fn count(r: &Schema, k: &str) -> u64 {
    r.counts.as_ref().and_then(|c| c.get(k)).copied().unwrap_or_else(|| panic!("missing count {k}"))
}

#[test]
fn enum_counts() {
    assert_eq!(count(&report(&["enum", "lines"]), "lines"), 27);
    assert_eq!(count(&report(&["enum", "roots"]), "roots"), 72);
    assert_eq!(count(&report(&["enum", "cusps"]), "cusps"), 40);
    assert_eq!(count(&report(&["enum", "tritangents"]), "tritangents"), 45);
    assert_eq!(count(&report(&["enum", "double-sixes"]), "double_sixes"), 36);
    let h = report(&["enum", "hyperplanes", "--height", "1"]);
    assert_eq!(h.result["items"].as_array().unwrap().len() as u64, count(&h, "hyperplanes"));
}

#[test]
fn lines_carry_vectors_and_adjacency() {
    let r = report(&["enum", "lines"]);
    let items = r.result["items"].as_array().unwrap();
    for (i, item) in items.iter().enumerate() {
        assert_eq!(item["index"], i);
        assert_eq!(item["vector"].as_array().unwrap().len(), 7);
        assert_eq!(item["meets"].as_array().unwrap().len(), 10);
    }
}

#[test]
fn output_is_deterministic() {
    let a = cubix(&["enum", "cusps"]);
    let b = cubix(&["enum", "cusps"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_finite_and_weyl() {
    let f = report(&["verify", "finite"]);
    assert_eq!(f.status, "ok");
    assert_eq!(count(&f, "null_points"), 40);
    let w = report(&["verify", "weyl"]);
    assert_eq!(w.status, "ok");
    assert_eq!(count(&w, "weyl_order"), 51_840);
    assert_eq!(count(&w, "po_order"), 51_840);
}

#[test]
fn verify_small_suites() {
    // Cusp surjection in the ball suite needs the default height 2.
    for args in [&["verify", "lattice", "--height", "1"][..], &["verify", "ball"], &["verify", "milnor"]] {
        let suite = args[1];
        let r = report(args);
        assert_eq!(r.status, "ok", "{suite}: {:?}", r.result);
        assert!(r.result["checks"].as_array().unwrap().iter().all(|c| c["ok"] == true));
    }
}

#[test]
fn ball_commands() {
    let d = report(&["ball", "dist", "[1,0,0,0,0]", "[1,0.6,0,0,0]"]);
    assert_eq!(d.result["text"], "1.386294361120");
    let g = report(&["ball", "gap", "[1,0,0,0,0]", "normal=[0,1,0,0,0]"]);
    assert_eq!(g.result["gap"], 0.0);
    let c = report(&["ball", "cusp-class", "[1,1,0,0,0]"]);
    assert_eq!(c.result["text"], "(1,1,0,0,0)");
    let m = report(&["ball", "member", "[1,0,0,0,0]", "--height", "1"]);
    assert_eq!(m.result["member"], true);
    let a = report(&["ball", "apply", "[[1,0,0,0,0],[0,w,0,0,0],[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]]", "[1,0,0,0,0]"]);
    assert_eq!(a.result["point"][0], "1.000000000000");
}

#[test]
fn milnor_commands() {
    let r = report(&["milnor", "--exponents", "2,2,2,3"]);
    assert_eq!(r.result["milnor_number"], 2);
    assert_eq!(r.result["order"], 6);
    assert_eq!(r.result["eigenvalues"], serde_json::json!(["1/6", "5/6"]));
    let r = report(&["milnor", "--exponents", "2,2,2"]);
    assert_eq!((r.result["milnor_number"].as_u64(), r.result["order"].as_u64()), (Some(1), Some(2)));
    let r = report(&["milnor", "--exponents", "2,2,3,3"]);
    assert_eq!((r.result["milnor_number"].as_u64(), r.result["order"].as_u64()), (Some(4), Some(3)));
}

#[test]
fn exit_codes() {
    assert_eq!(cubix(&["enum", "bogus"]).status.code(), Some(64));
    assert_eq!(cubix(&[]).status.code(), Some(64));
    assert_eq!(cubix(&["--help"]).status.code(), Some(0));
    assert_eq!(cubix(&["--version"]).status.code(), Some(0));
    assert_eq!(cubix(&["enum", "hyperplanes", "--height", "0"]).status.code(), Some(64));
    assert_eq!(cubix(&["ball", "dist", "[1,1,0,0,0]", "[1,0,0,0,0]"]).status.code(), Some(65));
    assert_eq!(cubix(&["ball", "dist", "[1,x,0,0,0]", "[1,0,0,0,0]"]).status.code(), Some(65));
    assert_eq!(cubix(&["ball", "cusp-class", "[2+w,2+w,0,0,0]"]).status.code(), Some(65));
    assert_eq!(cubix(&["milnor", "--exponents", "2,1"]).status.code(), Some(65));
    assert_eq!(cubix(&["verify", "weyl", "--cap", "1000"]).status.code(), Some(2));
}

#[test]
fn text_format() {
    let out = cubix(&["milnor", "--exponents", "2,2,2,3", "--format", "text"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("milnor [ok]"));
    assert!(s.contains("order: 6"));
}

#[test]
fn cache_directory_and_env_override() {
    let flag_dir = tempfile::tempdir().unwrap();
    let env_dir = tempfile::tempdir().unwrap();
    let run = |env: bool| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_cubix"));
        c.args(["verify", "weyl", "--cache", flag_dir.path().to_str().unwrap()]);
        if env {
            c.env("CUBIX_CACHE", env_dir.path());
        } else {
            c.env_remove("CUBIX_CACHE");
        }
        c.output().unwrap()
    };
    assert!(run(false).status.success());
    assert!(flag_dir.path().join("weyl_e6.json").exists());
    assert!(flag_dir.path().join("o53.json").exists());
    let warm = run(false);
    assert!(warm.status.success());

    assert!(run(true).status.success());
    assert!(env_dir.path().join("weyl_e6.json").exists());
}
