use std::path::PathBuf;
use std::process::{Command, Output};

use mixsing::input::{load_polynomial, CORPUS};
use mixsing_core::j10::{build, int, Case, J10Params};
use mixsing_core::parse::{parse, Bindings};
use serde_json::Value;

fn mixsing(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mixsing")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = mixsing(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mixsing-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

#[test]
fn exit_codes() {
    assert_eq!(mixsing(&["analyze", "--poly", "0"]).status.code(), Some(3));
    assert_eq!(mixsing(&["analyze", "--poly", "z1 +"]).status.code(), Some(2));
    assert_eq!(mixsing(&["analyze", "--poly", "z1*k"]).status.code(), Some(2));
    assert_eq!(mixsing(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(mixsing(&["analyze"]).status.code(), Some(1));
    assert_eq!(mixsing(&["resolve", "--poly", "rho.mp", "--chart", "S"]).status.code(), Some(1));
    assert_eq!(mixsing(&["analyze", "--poly", "missing.mp"]).status.code(), Some(1));
    assert_eq!(mixsing(&["certify", "--sweep", "case=IV", "kgrid=1:3:1"]).status.code(), Some(3));
    assert_eq!(mixsing(&["--help"]).status.code(), Some(0));
    let err = mixsing(&["analyze", "--poly", "0"]);
    assert!(err.stdout.is_empty());
    assert!(String::from_utf8_lossy(&err.stderr).contains("zero polynomial"));
}

#[test]
fn analyze_reports_degrees() {
    let v = json(&["analyze", "--poly", "j10_case4_k3.mp"]);
    let h = &v["homogeneity"];
    assert_eq!((h["radial_degree"].as_i64(), h["polar_degree"].as_i64()), (Some(6), Some(2)));
    let faces: Vec<_> = v["faces"].as_array().unwrap().iter().map(|f| f["weight"].clone()).collect();
    assert_eq!(faces, [serde_json::json!([1, 1]), serde_json::json!([1, 2]), serde_json::json!([1, 3])]);

    let rho = json(&["analyze", "--poly", "rho.mp"]);
    assert_eq!(rho["homogeneity"]["radial_degree"], 2);
    assert_eq!(rho["homogeneity"]["polar_degree"], 0);
}

#[test]
fn chart_strings() {
    let v = json(&["resolve", "--poly", "j10_case4_k3.mp", "--chart", "S,E1"]);
    assert_eq!(v["chart"]["reduced"], "1 - 6*u1*u2^2 + 11*u1*~u1*u2^2*~u2^2 - 6*u1^2*~u1*u2^4*~u2^2");
    let v = json(&["resolve", "--poly", "j10_case4_k3.mp", "--chart", "P,E2"]);
    assert_eq!(v["chart"]["reduced"], "u2^2*~u2 - 6*u2*~u2 + 11*u2 - 6");
    assert_eq!(v["chart"]["exceptional_factor"], "u1^4*~u1^2");
}

#[test]
fn resolve_and_certify_verdicts() {
    let out = mixsing(&["resolve", "--poly", "j10_case4_k3.mp", "--format", "text"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("L(Σ*) empty: true"));

    let v = json(&["certify", "--poly", "j10_case4_k3.mp", "--starts", "2000"]);
    assert_eq!(
        v["verdict"],
        "strongly Newton non-degenerate ((1,1),(1,3): symbolic; (1,2): search-clean + upgrade)"
    );
    let v = json(&["certify", "--poly", "rho.mp", "--starts", "200"]);
    assert_eq!(v["verdict"], "Newton non-degenerate; NOT strongly");
}

#[test]
fn sweep_is_labelled_exploratory() {
    let v = json(&["certify", "--sweep", "case=IV", "kgrid=2.5:3.5:0.5", "--starts", "300"]);
    assert_eq!(v["exploratory"], true);
    let ks: Vec<_> = v["rows"].as_array().unwrap().iter().map(|r| r["k"].as_str().unwrap().to_string()).collect();
    assert_eq!(ks, ["5/2", "3", "7/2"]);
    let empty = json(&["certify", "--sweep", "case=IV", "kgrid=", "--starts", "10"]);
    assert!(empty["rows"].as_array().unwrap().is_empty());
}

/// Every polynomial string in the reports reparses to the same canonical form.
#[test]
fn emitted_polynomials_round_trip() {
    fn walk(v: &Value, key: &str, out: &mut Vec<String>) {
        match v {
            Value::Object(m) => m.iter().for_each(|(k, x)| walk(x, k, out)),
            Value::Array(a) => a.iter().for_each(|x| walk(x, key, out)),
            Value::String(s)
                if ["polynomial", "face_function", "pullback", "reduced", "restriction", "exceptional_factor"]
                    .contains(&key) =>
            {
                out.push(s.clone())
            }
            _ => {}
        }
    }
    let mut strings = Vec::new();
    for (name, _) in CORPUS {
        walk(&json(&["analyze", "--poly", name]), "", &mut strings);
        walk(&json(&["resolve", "--poly", name]), "", &mut strings);
    }
    assert!(strings.len() > 50);
    for s in strings {
        let as_z = s.replace('u', "z");
        let p = parse(&as_z, &Bindings::new()).unwrap();
        let back = if s.contains('u') { p.display_as('u').to_string() } else { p.to_string() };
        assert_eq!(back, s);
    }
}

#[test]
fn corpus_matches_family_builder() {
    for (i, case) in Case::ALL.into_iter().enumerate() {
        let (f, _) = load_polynomial(&format!("j10_case{}_k3.mp", i + 1), &Default::default()).unwrap();
        assert_eq!(f, build(&J10Params::case(case, int(3)).unwrap()), "case {case}");
    }
    let mut params = std::collections::BTreeMap::new();
    params.insert("k".to_string(), "7/2".to_string());
    let (f, _) = load_polynomial("j10_case4_k3.mp", &params).unwrap();
    assert_eq!(f, build(&J10Params::case(Case::IV, mixsing_core::j10::ratio(7, 2)).unwrap()));
}

#[test]
fn out_dir_config_reproduces_run() {
    let dir = scratch("out");
    let args = ["certify", "--poly", "oka_9_17.mp", "--starts", "500", "--seed", "7", "--out"];
    let out = mixsing(&[&args[..], &[dir.to_str().unwrap()]].concat());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let first = std::fs::read_to_string(dir.join("certify.json")).unwrap();
    let config = dir.join("run_config.toml");
    std::fs::remove_file(dir.join("certify.json")).unwrap();
    let again = mixsing(&["certify", "--config", config.to_str().unwrap()]);
    assert!(again.status.success() && again.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(dir.join("certify.json")).unwrap(), first);
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn other_formats() {
    let svg = mixsing(&["analyze", "--poly", "j10_case2_k3.mp", "--format", "svg"]);
    assert!(String::from_utf8_lossy(&svg.stdout).starts_with("<svg"));
    assert_eq!(mixsing(&["lemma", "--format", "svg"]).status.code(), Some(1));
    let t = mixsing(&["classify", "--format", "text"]);
    assert!(String::from_utf8_lossy(&t.stdout).contains("IV    2 2 1 2 1 4"));
    let lemma = json(&["lemma", "--param", "k=3"]);
    assert_eq!(lemma["passes"], true);
    assert_eq!(json(&["classify"])["rows"].as_array().unwrap().len(), 5);
}

#[test]
fn thread_cap_does_not_change_output() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_mixsing"))
            .args(["certify", "--poly", "j10_case3_k3.mp", "--starts", "600"])
            .env("MST_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}
