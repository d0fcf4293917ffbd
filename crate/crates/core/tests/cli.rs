use std::path::{Path, PathBuf};

use lelong::cli::run_with_io;
use lelong::rational::parse_rational;
use serde_json::Value;
use tempfile::TempDir;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("lelong").chain(args.iter().copied());
    let code = run_with_io(argv, &mut out, &mut err);
    Outcome { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn json(o: &Outcome) -> Value {
    assert_eq!(o.code, 0, "stderr: {}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn strings(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::String(x) => out.push(x.clone()),
        Value::Array(a) => a.iter().for_each(|x| strings(x, out)),
        Value::Object(m) => m.values().for_each(|x| strings(x, out)),
        _ => {}
    }
}

#[test]
fn subcommands_on_phi_star() {
    let d = TempDir::new().unwrap();
    let phi = write(&d, "phi.json", r#"{"n": 2, "generators": [[3, 0], [1, 1], [0, 3]]}"#);
    let u = write(&d, "u.json", r#"{"n": 2, "generators": [[1, 0]]}"#);
    let m2 = write(&d, "m2.json", r#"{"n": 2, "generators": [[2, 0], [0, 2], [1, 1]]}"#);
    let j = write(&d, "j.json", r#"{"n": 2, "generators": [[1, 1]]}"#);

    assert_eq!(run(&["dir-lelong", s(&phi), "--a", "1,1"]).stdout, "{\"nu\": \"2\"}\n");
    assert_eq!(
        run(&["gamma", s(&phi)]).stdout,
        "{\"atoms\": [{\"mass\": \"3\", \"t\": [\"-1/3\", \"-2/3\"]}, {\"mass\": \"3\", \"t\": [\"-2/3\", \"-1/3\"]}], \"total\": \"6\"}\n"
    );
    assert_eq!(run(&["lelong", s(&u), s(&phi), "--normalized"]).stdout, "{\"nu_tilde\": \"1/2\"}\n");
    assert_eq!(run(&["type", s(&u), s(&phi)]).stdout, "{\"sigma\": \"1/3\"}\n");
    assert_eq!(run(&["extremal", s(&phi)]).stdout, "{\"a\": [\"1/2\", \"1/2\"], \"flat\": false}\n");
    assert_eq!(run(&["flat", s(&m2)]).stdout, "{\"flat\": true}\n");
    let flat = json(&run(&["flat", s(&phi)]));
    assert_eq!(flat["flat"], Value::Bool(false));
    assert!(flat["witness"].is_array());
    assert_eq!(run(&["mixed", s(&phi), s(&m2), "--oracle", "polarization"]).stdout, "{\"e\": \"4\", \"oracle\": \"4\"}\n");
    assert_eq!(run(&["loj", s(&phi)]).stdout, "{\"L\": \"3\"}\n");

    let rep = json(&run(&["contain", s(&j), s(&phi), "-p", "6"]));
    assert_eq!(rep["exponents"], serde_json::json!([2, 2]));
    assert_eq!(rep["hypothesis"], Value::Bool(true));
    assert_eq!(rep["summary"]["closure"], Value::Bool(true));
    assert_eq!(rep["summary"]["literal"], Value::Bool(false));
}

#[test]
fn gamma_total_matches_mass_and_rationals_round_trip() {
    let d = TempDir::new().unwrap();
    let docs = [
        r#"{"n": 2, "generators": [[7, 0], [2, 3], [0, 5], [1, 4]]}"#,
        r#"{"n": 3, "generators": [[5, 0, 0], [0, 4, 0], [0, 0, 3], [1, 1, 1], [2, 2, 0]]}"#,
        r#"{"n": 2, "generators": [["5/2", 0], ["1/3", "2/3"], [0, 4]], "name": "rational"}"#,
    ];
    for (k, doc) in docs.iter().enumerate() {
        let f = write(&d, &format!("w{k}.json"), doc);
        let gamma = json(&run(&["gamma", s(&f)]));
        let mass = json(&run(&["mass", s(&f)]));
        assert_eq!(gamma["total"], mass["tau"]);
        let mut all = Vec::new();
        strings(&gamma, &mut all);
        for text in all {
            assert_eq!(parse_rational(&text).unwrap().to_string(), text);
        }
        assert_eq!(run(&["gamma", s(&f)]).stdout, run(&["gamma", s(&f)]).stdout);
    }
}

#[test]
fn monte_carlo_option_reports_estimate() {
    let d = TempDir::new().unwrap();
    let phi = write(&d, "phi.json", r#"{"n": 2, "generators": [[3, 0], [1, 1], [0, 3]]}"#);
    let v = json(&run(&["mass", s(&phi), "--oracle", "monte-carlo", "--samples", "20000", "--seed", "5"]));
    assert_eq!(v["tau"], "6");
    let mc = &v["monte_carlo"];
    let est = mc["covolume"].as_f64().unwrap();
    let se = mc["standard_error"].as_f64().unwrap();
    assert!((est - 3.0).abs() <= 4.0 * se);
    assert_eq!(mc["seed"], 5);
}

#[test]
fn error_exit_codes() {
    let d = TempDir::new().unwrap();
    let bad = write(&d, "bad.json", "{\"n\": 2, \"generators\": [[1, 0]");
    let big = write(&d, "big.json", r#"{"n": 7, "generators": [[1, 0, 0, 0, 0, 0, 0]]}"#);
    let neg = write(&d, "neg.json", r#"{"n": 2, "generators": [["1/-2", 1]]}"#);
    let line = write(&d, "line.json", r#"{"n": 2, "generators": [[1, 0]]}"#);
    let phi = write(&d, "phi.json", r#"{"n": 2, "generators": [[3, 0], [1, 1], [0, 3]]}"#);
    let phi3 = write(&d, "phi3.json", r#"{"n": 3, "generators": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}"#);

    let o = run(&["mass", s(&bad)]);
    assert_eq!(o.code, 2);
    assert!(!o.stderr.is_empty() && o.stdout.is_empty());
    assert_eq!(run(&["mass", s(&big)]).code, 2);
    assert_eq!(run(&["mass", s(&neg)]).code, 2);
    assert_eq!(run(&["mass", "/nonexistent/file.json"]).code, 2);
    assert_eq!(run(&["mass", s(&line)]).code, 3);
    assert_eq!(run(&["lelong", s(&phi), s(&line)]).code, 3);
    assert_eq!(run(&["mixed", s(&phi), s(&line)]).code, 3);
    assert_eq!(run(&["lelong", s(&phi), s(&phi3)]).code, 2);
    assert_eq!(run(&["plot", s(&phi3), "-o", s(&d.path().join("x.svg"))]).code, 2);
    assert_eq!(run(&["dir-lelong", s(&phi), "--a", "1,0"]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);

    let o = run(&["contain", s(&line), s(&phi), "-p", "-4"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("p must be a positive integer"));
}

#[test]
fn plot_writes_svg() {
    let d = TempDir::new().unwrap();
    let phi = write(&d, "phi.json", r#"{"n": 2, "generators": [[3, 0], [1, 1], [0, 3]]}"#);
    let out = d.path().join("phi.svg");
    assert_eq!(run(&["plot", s(&phi), "-o", s(&out)]).code, 0);
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.contains("version=\"1.1\""));
    assert!(svg.contains("viewBox=\"0 0 4.0000 4.0000\""));
    assert_eq!(svg.matches("<line").count(), 2);
    assert!(svg.contains("(-1/3, -2/3)") && svg.contains("(-2/3, -1/3)"));
}
