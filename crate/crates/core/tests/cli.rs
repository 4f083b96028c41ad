use std::process::{Command, Output};

fn hyperalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperalg")).args(args).env_remove("HYPER_SOLVER").output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hyperalg(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn roots_report() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--json", "roots", "q^2 + 1"])).unwrap();
    assert_eq!(v["dimension"], 2);
    assert_eq!(v["roots"], serde_json::json!([{"type": "sphere", "x": "0", "y": "1"}]));
    assert_eq!(stdout(&["roots", "q^2 + 1"]), "sphere x = 0, y = 1\ndimension 2");
}

#[test]
fn rewrite_and_mul() {
    assert!(stdout(&["rewrite", "q2*q1 = 0"]).starts_with("exists t1 (q2*t1 = 0 and t1 - q1 = 0)"));
    assert_eq!(stdout(&["mul", "--sig", "octonion", "e1", "e7"]), "e6");
    assert_eq!(stdout(&["mul", "i", "j", "-k"]), "1");
}

#[test]
fn eval_lower_and_sets() {
    assert_eq!(stdout(&["eval", "q^2 + 1 = 0", "j"]), "true");
    assert_eq!(stdout(&["eval", "q1*q2 - q2*q1", "i", "j"]), "2k");
    assert_eq!(stdout(&["lower", "q - i*q*i - j*q*j - k*q*k = 0"]), "4*q_0 = 0 and 0 = 0 and 0 = 0 and 0 = 0");
    let set = r#"{"union": [{"polys": ["q - i"]}, {"polys": ["q + i"]}]}"#;
    assert_eq!(stdout(&["set", "member", set, "-i"]), "true");
    assert_eq!(stdout(&["set", "member", set, "j"]), "false");
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--json", "set", "vanish", "--point", "i", "--point", "-i", "--degree", "2"])).unwrap();
    assert_eq!(v["dimension"], 4);
}

#[test]
fn realize_circle_point() {
    let out = stdout(&["realize", "x^2 + y^2 - 1", "--at", "3/5,4/5"]);
    assert!(out.lines().last().unwrap().ends_with("in target: true, projects to (3/5, 4/5)"));
}

#[test]
fn exit_codes() {
    assert_eq!(hyperalg(&["roots", "q^2 +"]).status.code(), Some(1));
    assert_eq!(hyperalg(&["set", "member", "{}", "i"]).status.code(), Some(1));
    assert_eq!(hyperalg(&["smt", "q*q = -1", "--check"]).status.code(), Some(2));
    let script = stdout(&["smt", "q*q = -1"]);
    assert!(script.starts_with("(set-logic NRA)"));
}

#[test]
fn deterministic_selftest() {
    let a = hyperalg(&["--seed", "3", "--json", "selftest", "--suite", "rewrite", "--suite", "lowering"]);
    let b = hyperalg(&["--seed", "3", "--json", "selftest", "--suite", "rewrite", "--suite", "lowering"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
