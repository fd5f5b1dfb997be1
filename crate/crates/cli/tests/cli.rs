use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artin-rrs"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn reduce_example() {
    let o = run(&["reduce", "bcbcabacbcB", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "cbcbabcbc");
}

#[test]
fn reduce_empty_word() {
    let o = run(&["reduce", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "");
}

#[test]
fn equal_and_length() {
    let o = run(&["equal", "aba", "bab"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "true"));
    let o = run(&["equal", "a", "b"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "false"));
    let o = run(&["length", "abaB"]);
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn json_documents() {
    let v = json(&run(&["--json", "reduce", "bcbcabacbcB"]));
    assert_eq!(v["geodesic"], "cbcbabcbc");
    assert_eq!(v["length"], 9);
    let v = json(&run(&["equal", "ac", "ca", "--json"]));
    assert_eq!(v["equal"], true);
    let v = json(&run(&["oracle-length", "abaB", "--slack", "2", "--json"]));
    assert_eq!((v["length"].as_u64(), v["slack"].as_u64()), (Some(2), Some(2)));
}

#[test]
fn trace_schema() {
    let v = json(&run(&["trace", "bcbcabacbcB", "--json"]));
    let events = v.as_array().unwrap();
    let last: Vec<&serde_json::Value> = events.iter().filter(|e| e["step"] == 10).collect();
    assert_eq!(last.len(), 3);
    assert_eq!(last[0]["kind"], "tau_abc");
    assert_eq!(last[0]["before"], "bcbcaba");
    assert_eq!(last[2]["kind"], "free-cancel");
    assert!(last[2]["span"].is_array());
    for e in events {
        let keys: Vec<&String> = e.as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 5);
    }
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&["reduce", "abx"]).status.code(), Some(1));
    assert_eq!(run(&["reduce", "ab", "--n", "4"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(
        run(&["reduce", "ab", "--n", "4", "--allow-small-n"]).status.code(),
        Some(0)
    );
}

#[test]
fn resource_errors_exit_3() {
    let o = run(&["oracle-length", "abcABCabcABC", "--slack", "4", "--node-cap", "5"]);
    assert_eq!(o.status.code(), Some(3));
    let long = "abcABC".repeat(8);
    assert_eq!(run(&["oracle-length", &long]).status.code(), Some(3));
}

#[test]
fn fuzz_is_clean_and_deterministic() {
    let args = [
        "fuzz",
        "--count",
        "30",
        "--max-len",
        "8",
        "--seed",
        "3",
        "--slack",
        "4",
        "--json",
    ];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    let v = json(&a);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert_eq!(stdout(&a), stdout(&run(&args)));
}

#[test]
fn fuzz_reports_violations_with_exit_2() {
    // below n = 5 the reduction is not always geodesic
    let o = run(&[
        "fuzz",
        "--n",
        "3",
        "--allow-small-n",
        "--count",
        "300",
        "--max-len",
        "10",
        "--seed",
        "1",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    let first = &v["violations"][0];
    assert!(first["minimized"].as_str().unwrap().len() <= first["word"].as_str().unwrap().len());
}

#[test]
fn bench_reports_constants() {
    let v = json(&run(&["bench", "--len", "200", "--repeat", "3", "--json"]));
    assert_eq!(v["repeat"], 3);
    assert!(v["c"].as_f64().unwrap() > 0.0);
    assert!(v["c_push"].as_f64().unwrap() > 0.0);
}
