use std::process::{Command, Output};

fn csm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_csm"))
        .args(args)
        .env("CSM_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ffunc_latex() {
    let o = csm(&["ffunc", "--k", "2", "--n", "4", "--window", "2,5,4,7", "--format", "latex"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("\\frac{"));
    assert_eq!(s.matches(" + ").count(), 5);
    assert!(s.contains("(x_{1}-y_{1})(x_{1}-y_{2})(x_{2}-y_{3})(x_{2}-y_{4})"));
}

#[test]
fn ffunc_json_is_stable() {
    let args = ["ffunc", "--k", "2", "--n", "4", "--window", "2,5,4,7", "--format", "json"];
    let a = stdout(&csm(&args));
    let b = stdout(&csm(&args));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["pipe_dreams"], 6);
    assert_eq!(v["value"]["den"].as_array().unwrap().len(), 8);
}

#[test]
fn pipedreams_json_count() {
    let o = csm(&["pipedreams", "--k", "2", "--n", "4", "--window", "2,5,4,7", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 6);
    assert!(arr.contains(&serde_json::json!({"k": 2, "n": 4, "rows": ["BBBB", "XBXB"]})));
}

#[test]
fn pipedreams_plain() {
    let o = csm(&["pipedreams", "--k", "1", "--n", "2", "--window", "2,3"]);
    assert_eq!(stdout(&o), "BB\n");
}

#[test]
fn bruhat_queries() {
    let o = csm(&["bruhat", "--n", "4", "--parabolic", "2", "--u", "2134", "--w", "4132"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "true");
    for alg in ["cover", "coset", "affine"] {
        let o = csm(&["bruhat", "--n", "3", "--parabolic", "1", "--u", "321", "--w", "123", "--algorithm", alg]);
        assert_eq!(stdout(&o).trim(), "false", "{alg}");
    }
    let o = csm(&["bruhat", "--f", "3,2", "--g", "3,2"]);
    assert_eq!(stdout(&o).trim(), "true");
    let o = csm(&["bruhat", "--n", "3", "--parabolic", "1", "--format", "dot"]);
    assert!(stdout(&o).starts_with("digraph"));
}

#[test]
fn poset_dot() {
    let o = csm(&["poset", "--n", "3", "--parabolic", "1"]);
    let s = stdout(&o);
    assert_eq!(s.matches(" -> ").count(), 6);
}

#[test]
fn localize_kinds() {
    let o = csm(&["localize", "--kind", "affine", "--window", "3,2", "--mu", "1,0;0,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[3,2]: (y1 - y2)/(1 + y1 - y2)\n[1,4]: 0\n");
    let o = csm(&["localize", "--kind", "csm", "--w", "21"]);
    assert_eq!(stdout(&o), "12: 1\n21: -y1 + y2 + 1\n");
    let o = csm(&["localize", "--kind", "projected", "--lambda", "1,0", "--u", "12", "--w", "12", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["space"], "G/P");
    let o = csm(&["localize", "--kind", "richardson", "--u", "123", "--w", "321", "--parabolic", "1", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn verify_suites() {
    let o = csm(&["verify", "thm75", "--k", "1", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().filter(|l| l.starts_with("PASS")).count(), 7);
    let o = csm(&["verify", "ybe", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["failures"], serde_json::json!([]));
    let o = csm(&["verify", "thm36", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("144 instances, 144 passed, 0 failed"));
}

#[test]
fn usage_errors_exit_two() {
    let o = csm(&["ffunc", "--k", "2", "--n", "4", "--window", "2,5,4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("expected n = 4"));
    let o = csm(&["ffunc", "--k", "2", "--n", "2", "--window", "2,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("repeat modulo"));
    let o = csm(&["verify", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    let o = csm(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn guards_lower_but_not_raise() {
    let o = csm(&["--guard", "pipe_cells=4", "ffunc", "--k", "2", "--n", "4", "--window", "2,5,4,7"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("k*n"));
    let o = csm(&["--guard", "pipe_cells=30", "ffunc", "--k", "1", "--n", "2", "--window", "2,3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = csm(&["--unsafe-limits", "--guard", "pipe_cells=30", "ffunc", "--k", "1", "--n", "2", "--window", "2,3"]);
    assert_eq!(o.status.code(), Some(0));
}
