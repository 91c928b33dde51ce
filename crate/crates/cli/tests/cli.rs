use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_spectral-lab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn construct(args: &[&str]) -> String {
    let mut all = vec!["construct"];
    all.extend_from_slice(args);
    let o = run(&all, "");
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn constructions_print_one_line() {
    let rk = construct(&["rk", "--k", "1", "--s", "3", "--t", "3"]);
    assert_eq!(rk.lines().count(), 1);
    let o = run(&["spectrum", "--format", "csv"], &rk);
    assert_eq!(o.status.code(), Some(0));
    let row = stdout(&o).lines().last().unwrap().to_string();
    assert_eq!(row.split(',').nth(2).unwrap().split_whitespace().count(), 7);

    let b = construct(&["blowup", "--base", "p2k1", "--sizes", "2,3,1"]);
    let o = run(&["certify", "--claim", "thm1.1", "--k", "1"], &b);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["certificates"][0]["verdict"], "holds_equality");

    let t = construct(&["t-tree", "--legs", "1,2,4"]);
    assert_eq!(t.trim().len(), 6);
}

#[test]
fn bad_parameters_exit_two() {
    assert_eq!(run(&["construct", "cycle", "--n", "2"], "").status.code(), Some(2));
    assert_eq!(run(&["certify", "--claim", "nope"], "D]o\n").status.code(), Some(2));
    assert_eq!(run(&["search", "census", "--n", "5", "--k", "0"], "").status.code(), Some(2));
}

#[test]
fn spectrum_text_rows() {
    let c5 = construct(&["cycle", "--n", "5"]);
    let o = run(&["spectrum"], &c5);
    assert_eq!(stdout(&o).trim(), "2.000000000, 0.618033989, 0.618033989, -1.618033989, -1.618033989");
    let o = run(&["spectrum"], "@\n");
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn malformed_input() {
    let o = run(&["spectrum"], "D]o\nbad!\n@\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let o = run(&["spectrum", "--continue-on-error"], "D]o\nbad!\n@\n");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn certify_outcomes() {
    let k4 = construct(&["complete", "--n", "4"]);
    let o = run(&["certify", "--claim", "all-classical"], &k4);
    assert_eq!(o.status.code(), Some(0));
    let certs = json(&o)["certificates"].as_array().unwrap().clone();
    assert!(certs.len() >= 5);
    assert!(certs.iter().all(|c| c["verdict"] != "violated"));

    let k33 = construct(&["complete-bipartite", "--s", "3", "--t", "3"]);
    let o = run(&["certify", "--claim", "thm1.4", "--k", "2"], &k33);
    let v = json(&o);
    assert_eq!(v["certificates"][0]["verdict"], "not_applicable");
    assert_eq!(v["config"]["command"], "certify");

    let c5 = construct(&["cycle", "--n", "5"]);
    let o = run(&["certify", "--claim", "conj_bollobas_nikiforov", "--k", "2", "--format", "text"], &c5);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("conj_bollobas_nikiforov"));
}

#[test]
fn extremal_search_names_rk() {
    let o = run(&["search", "extremal", "--n", "7", "--k", "1"], "");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["report"]["confirmed"], true);
    let found = v["report"]["extremal_graphs"][0].as_str().unwrap().to_string();
    let rk = construct(&["rk", "--k", "1", "--s", "3", "--t", "3"]);
    let a = run(&["spectrum"], &format!("{found}\n"));
    let b = run(&["spectrum"], &rk);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn census_and_scan() {
    let o = run(&["search", "census", "--n", "8", "--k", "1"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["report"]["confirmed"], true);

    let o = run(&["search", "scan", "--n", "8", "--claim", "thm1.1", "--k", "1"], "");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let ce = &v["report"]["counterexamples"];
    assert!(ce.is_null() || ce.as_array().unwrap().is_empty());
}

#[test]
fn workers_do_not_change_output() {
    let a = run(&["search", "census", "--n", "7", "--k", "1", "--workers", "1"], "");
    let b = run(&["search", "census", "--n", "7", "--k", "1", "--workers", "3"], "");
    assert_eq!(a.stdout, b.stdout);
}
