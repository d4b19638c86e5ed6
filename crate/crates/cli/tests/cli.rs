use std::process::{Command, Output};

fn skein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein"))
        .args(args)
        .env_remove("SKEIN_MAX_STRANDS")
        .output()
        .expect("spawn skein")
}

fn stdout(args: &[&str]) -> String {
    let out = skein(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    skein(args).status.code().unwrap()
}

#[test]
fn qdim_text() {
    assert_eq!(
        stdout(&["qdim", "-p", "1", "-N", "4"]),
        "[4] = s^3 + s + s^-1 + s^-3\nclassical dimension: 4\n"
    );
    let out = stdout(&["qdim", "-p", "4,2,1", "-N", "3"]);
    let first = out.lines().next().unwrap();
    // [3][5] = (s^2 + 1 + s^-2)(s^4 + s^2 + 1 + s^-2 + s^-4)
    assert_eq!(first, "[3][5] = s^6 + 2*s^4 + 3*s^2 + 3 + 3*s^-2 + 2*s^-4 + s^-6");
    assert!(out.ends_with("classical dimension: 15\n"));
    assert_eq!(stdout(&["qdim", "-p", "1,1,1", "-N", "2"]), "0\nclassical dimension: 0\n");
    assert_eq!(stdout(&["qdim", "-p", "1,1", "-N", "2"]), "1\nclassical dimension: 1\n");
}

#[test]
fn qdim_json() {
    let out = stdout(&["qdim", "-p", "2", "-N", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["partition"], serde_json::json!([2]));
    assert_eq!(v["N"], 2);
    assert_eq!(v["factored"], "[3]");
    assert_eq!(v["qdim"], "s^2 + 1 + s^-2");
    assert_eq!(v["dim"], 3);
}

#[test]
fn alpha_forms() {
    assert_eq!(stdout(&["alpha", "-p", "1"]).lines().next().unwrap(), "1");
    assert_eq!(stdout(&["alpha", "-p", "2"]).lines().next().unwrap(), "s*[2] = s^2 + 1");
    let out = stdout(&["alpha", "-p", "4,2,1"]);
    let first = out.lines().next().unwrap();
    assert!(first.starts_with("s^3*[6][4][3][2] = "), "{first}");
    // s^3 [6][4][3][2] has leading term s^(3 + 5 + 3 + 2 + 1) = s^14 and 7 cell lines follow.
    assert!(first.contains("= s^14 + "), "{first}");
    assert_eq!(out.lines().count(), 8);
    assert!(out.contains("cell (1,1): content 0, hook 6\n"));
}

#[test]
fn homfly_values() {
    assert_eq!(stdout(&["homfly", "-n", "1", "-w", ""]), "X = (-v + v^-1)/(s - s^-1)\n");
    let unlink = stdout(&["homfly", "-n", "2", "-w", "1 -1"]);
    assert!(unlink.starts_with("X = (v^2 - 2 + v^-2)/("), "{unlink}");
    // v^-2 z^2 + 2 v^-2 - v^-4 with z = s - s^-1.
    let mirror = stdout(&["homfly", "-n", "2", "-w", "-1 -1 -1", "--normalized"]);
    assert_eq!(mirror.lines().nth(1).unwrap(), "P = v^-2*s^2 - v^-4 + v^-2*s^-2");
    let trefoil = stdout(&["homfly", "-n", "2", "-w", "1 1 1", "--normalized"]);
    assert_eq!(trefoil.lines().nth(1).unwrap(), "P = v^2*s^2 - v^4 + v^2*s^-2");
}

#[test]
fn table_csv() {
    assert_eq!(
        stdout(&["table", "--max-cells", "1", "-N", "2"]),
        "partition,alpha,qdim,dim\n1,1,s + s^-1,2\n"
    );
    assert_eq!(
        stdout(&["table", "--max-cells", "2", "-N", "2"]),
        "partition,alpha,qdim,dim\n1,1,s + s^-1,2\n2,s^2 + 1,s^2 + 1 + s^-2,3\n\"1,1\",1 + s^-2,1,1\n"
    );
}

#[test]
fn table_json() {
    let out = stdout(&["table", "--max-cells", "2", "-N", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(
        rows[2],
        serde_json::json!({"partition": [1, 1], "alpha": "1 + s^-2", "qdim": "1", "dim": 1})
    );
}

#[test]
fn verify_suites() {
    let out = stdout(&["verify", "--max-cells", "3", "--checks", "idempotency"]);
    assert!(out.starts_with("PASS idempotency ("), "{out}");
    assert!(stdout(&["verify", "--max-cells", "4", "--checks", "marel"]).starts_with("PASS marel"));
    let out = stdout(&["verify", "--max-cells", "2", "--checks", "orthogonality"]);
    assert!(out.starts_with("PASS orthogonality (1 cases)"), "{out}");
    let out = stdout(&["verify", "--max-cells", "3"]);
    assert_eq!(out.lines().count(), 10);
    assert!(out.ends_with("all 9 checks passed\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
    assert_eq!(code(&[]), 1);
    assert_eq!(code(&["qdim", "-p", "2,3", "-N", "2"]), 1);
    assert_eq!(code(&["qdim", "-p", "x", "-N", "2"]), 1);
    assert_eq!(code(&["qdim", "-p", "2", "-N", "0"]), 1);
    assert_eq!(code(&["alpha", "-p", "-1"]), 1);
    assert_eq!(code(&["homfly", "-n", "2", "-w", "2"]), 1);
    assert_eq!(code(&["homfly", "-n", "2", "-w", "0"]), 1);
    assert_eq!(code(&["homfly", "-n", "2", "-w", "1 a"]), 1);
    assert_eq!(code(&["table", "--max-cells", "9", "-N", "2"]), 1);
    assert_eq!(code(&["verify", "--max-cells", "6"]), 1);
    assert_eq!(code(&["verify", "--checks", "bogus"]), 1);
}

#[test]
fn guards_widen() {
    assert_eq!(code(&["homfly", "-n", "8", "-w", "1 2 3 4 5 6 7"]), 1);
    let out = stdout(&["--unsafe-max", "8", "homfly", "-n", "8", "-w", "1 2 3 4 5 6 7"]);
    assert!(out.starts_with("X = "));
    let env = Command::new(env!("CARGO_BIN_EXE_skein"))
        .args(["table", "--max-cells", "9", "-N", "2"])
        .env("SKEIN_MAX_STRANDS", "9")
        .output()
        .unwrap();
    assert!(env.status.success());
    // A smaller override never narrows the defaults.
    assert_eq!(code(&["--unsafe-max", "2", "table", "--max-cells", "8", "-N", "3"]), 0);
}

#[test]
fn deterministic_output() {
    for args in [
        &["table", "--max-cells", "6", "-N", "3"][..],
        &["table", "--max-cells", "5", "-N", "2", "--format", "json"][..],
        &["verify", "--max-cells", "3"][..],
    ] {
        let a = skein(args);
        let b = skein(args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}
