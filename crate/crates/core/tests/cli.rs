use std::process::Command;

fn osp(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_osp")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn roots_json() {
    let (code, out, _) = osp(&["roots", "--l", "2", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rank"], 2);
    assert_eq!(v["odd_pos"], serde_json::json!([["1", "0"], ["0", "1"]]));
    assert_eq!(v["rho"], serde_json::json!(["3/2", "1/2"]));
}

#[test]
fn prv_rank_one() {
    let (code, out, _) = osp(&["prv", "--l", "1", "--lambda", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("(φ(β1)-1)^1 · (φ(β1))^1 · (φ(β1)+1/2)^1"), "{out}");
}

#[test]
fn verify_exits_zero() {
    let (code, out, _) = osp(&["verify", "--l", "2", "--depth", "6", "--order", "8"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("allPass: true"));
}

#[test]
fn json_is_byte_stable() {
    for args in [
        &["hesselink", "--l", "2", "--lambda", "2,1", "--order", "6", "--method", "both", "--json"][..],
        &["mult", "--l", "2", "--lambda", "2,1", "--json"][..],
        &["verify", "--l", "1", "--depth", "4", "--order", "6", "--json"][..],
    ] {
        let first = osp(args);
        let second = osp(args);
        assert_eq!(first.0, 0);
        assert_eq!(first.1, second.1);
    }
}

#[test]
fn hesselink_both_reports_agreement() {
    let (code, out, _) = osp(&["hesselink", "--l", "1", "--lambda", "1", "--order", "4", "--method", "both", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["agree"], true);
    assert_eq!(v["direct"], serde_json::json!([0, 0, 1]));
}

#[test]
fn errors_map_to_exit_codes() {
    assert_eq!(osp(&["tau", "--l", "1"]).0, 1);
    assert_eq!(osp(&["tau", "--l", "1", "--nu", "1.5"]).0, 1);
    let (code, _, err) = osp(&["mult", "--l", "1", "--lambda", "-1"]);
    assert_eq!(code, 2);
    assert!(err.contains("-1"));
    assert_eq!(osp(&["shapovalov", "--l", "1", "--nu", "-2"]).0, 2);
    assert_eq!(osp(&["weyl", "--l", "7"]).0, 4);
    assert_eq!(osp(&["weyl", "--l", "2", "--cap", "1"]).0, 4);
    assert_eq!(osp(&["verify", "--l", "1", "--order", "1000"]).0, 4);
}

#[test]
fn shift_table_and_annihilator_text() {
    let (code, out, _) = osp(&["heslem", "--l", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("r=3  gamma=0  w=[-1,+2]  word=s1·s2·s1"), "{out}");
    let (code, out, _) = osp(&["annihilator", "--l", "2", "--lambda", "0,-1/2", "--prv", "1,0"]);
    assert_eq!(code, 0);
    assert!(out.contains("centrally generated: false"));
    assert!(out.contains(">= 1"));
}
