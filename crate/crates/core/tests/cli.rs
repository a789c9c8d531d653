use std::process::{Command, Output};

fn qschur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qschur")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_all_passes() {
    let o = qschur(&["verify", "all", "--n", "3", "--r", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("all asserted suites pass"));
}

#[test]
fn drinfeld_json() {
    let o = qschur(&["drinfeld", "from-partition", "--lambda", "2,1", "--n", "4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["display"][1], "Q_2 = (1 - a*q^-2*u)");
    assert_eq!(v["tuple"]["degrees"], serde_json::json!([2, 1, 0, 0]));
    // Q_2 = 1 - a q^-2 u: constant 1, linear coefficient -a q^-2.
    let q2 = &v["tuple"]["polys"][1];
    assert_eq!(q2[1], serde_json::json!([{"ea": 1, "eq": -2, "num": "-1", "den": "1"}]));
}

#[test]
fn report_only_never_fails() {
    let o = qschur(&["verify", "eval-compat", "--which", "Fn", "--n", "2", "--r", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "report-only");
    assert_eq!(v["cases"], 4);
}

#[test]
fn mutated_action_fails_with_exit_1() {
    let o = qschur(&["verify", "hecke", "--n", "2", "--r", "2", "--variant", "flipped-middle-exponent"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qschur(&["verify", "qgl", "--bogus"]).status.code(), Some(2));
    assert_eq!(qschur(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(qschur(&["verify", "qgl", "--window", "7..9"]).status.code(), Some(2));
    assert_eq!(qschur(&["verify", "jm", "--r", "9"]).status.code(), Some(2));
    assert_eq!(qschur(&["drinfeld", "from-partition", "--lambda", "1,1,1", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn json_reports_are_reproducible() {
    let args = ["verify", "all", "--n", "2", "--r", "2", "--json", "--no-timing"];
    let a = qschur(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_qschur")).args(args).env("QSCHUR_WORKERS", "3").output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    for rep in v.as_array().unwrap() {
        for key in ["suite", "config", "cases", "failures", "status", "elapsed_ms"] {
            assert!(rep.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn small_queries() {
    let o = qschur(&["segments", "from-partition", "--lambda", "2,1"]);
    assert_eq!(stdout(&o).trim(), "[a*q^-1; 2) + [a*q^2; 1)");
    let o = qschur(&["central-scalar", "--lambda", "2,1", "--t", "1", "--sign", "plus"]);
    assert_eq!(stdout(&o).trim(), "c_1^plus((2,1)) = a*q^2 + a + a*q^-2");
    let o = qschur(&["hecke", "murphy", "--r", "2", "--j", "2"]);
    assert_eq!(stdout(&o).trim(), "L_2 = (a - a*q^-2)*T[2,1] + (a)*T[1,2]");
    let o = qschur(&["hecke", "ev", "--r", "2", "--word", "X1 X1^-1"]);
    assert_eq!(stdout(&o).trim(), "ev_a(X1 X1^-1) = T[1,2]");
}
