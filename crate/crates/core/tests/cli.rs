// The `censym` binary: exit statuses and the documented command examples.

use std::process::Command;

use serde_json::Value;

fn censym(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_censym")).args(args).output().expect("binary runs");
    (out.status.code().expect("exit code"), String::from_utf8(out.stdout).unwrap())
}

fn json_lines(s: &str) -> Vec<Value> {
    s.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn frobenius_at_three_passes() {
    let (code, out) = censym(&["verify", "--n", "3", "--ring", "int", "--check", "frobenius", "--json"]);
    assert_eq!(code, 0);
    let rs = json_lines(&out);
    assert_eq!(rs.len(), 1);
    assert_eq!(rs[0]["verdict"], "pass");
    let names: Vec<&str> = rs[0]["clauses"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"left-identity") && names.contains(&"right-identity"));
}

#[test]
fn cellchain_gf2_two_layers_of_four() {
    let (code, out) = censym(&["verify", "--n", "4", "--ring", "gf:2", "--check", "cellchain", "--json"]);
    assert_eq!(code, 0);
    let r = &json_lines(&out)[0];
    assert_eq!(r["verdict"], "pass");
    assert_eq!(r["witness"]["layer_ranks"], serde_json::json!([4, 4]));
}

#[test]
fn split_over_integers_is_unknown_and_exits_zero() {
    let (code, out) = censym(&["verify", "--n", "2", "--ring", "int", "--check", "split", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(json_lines(&out)[0]["verdict"], "unknown");
}

#[test]
fn a_failing_check_exits_one() {
    // E(a) = a + cac is 2a at n = 1
    let (code, out) = censym(&["verify", "--n", "1", "--check", "frobenius", "--json"]);
    assert_eq!(code, 1);
    let r = &json_lines(&out)[0];
    assert_eq!(r["verdict"], "fail");
    assert_eq!(r["counterexample"]["lhs"], "[2]");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--ring", "zmod:1", "--n", "2"][..],
        &["verify", "--check", "nonsense"],
        &["table"],
        &["iso", "--kind", "even", "--n", "3"],
        &["iso", "--kind", "wedderburn", "--n", "3", "--ring", "int"],
        &["frobenius", "--n", "2", "--matrix-file", "/nonexistent/file"],
        &["bogus"],
    ] {
        assert_eq!(censym(args).0, 2, "{args:?}");
    }
    assert_eq!(censym(&["--help"]).0, 0);
}

#[test]
fn table_examples() {
    let (code, out) = censym(&["table", "--n", "3", "--ring", "int"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "f1_2 * f2_1 = f1_1 + f1_3"));
    assert!(out.lines().any(|l| l == "f2_1 * f1_2 = 2*f2_2"));
    let (_, one) = censym(&["table", "--n", "1"]);
    assert_eq!(one, "f1_1 * f1_1 = f1_1\n");
    let (_, js) = censym(&["table", "--n", "2", "--json"]);
    let v: Value = serde_json::from_str(&js).unwrap();
    assert_eq!(v["products"].as_array().unwrap().len(), 4);
}

#[test]
fn demo_bisymmetric() {
    let (code, out) = censym(&["demo-bisymmetric", "--json"]);
    assert_eq!(code, 0);
    let r = &json_lines(&out)[0];
    assert_eq!(r["witness"]["product"], serde_json::json!([["0", "2", "0"], ["0", "0", "0"], ["0", "2", "0"]]));
    assert_eq!(r["witness"]["flags"]["product"]["bisymmetric"], false);
    assert_eq!(r["witness"]["flags"]["product"]["centrosymmetric"], true);
    assert_eq!(r["witness"]["flags"]["left"]["bisymmetric"], true);
    let (code, text) = censym(&["demo-bisymmetric"]);
    assert_eq!(code, 0);
    assert!(text.contains("bisymmetric: false  centrosymmetric: true"));
}

#[test]
fn iso_kinds() {
    for (kind, n, ring) in [
        ("s2", "2", "int"),
        ("s3", "3", "gf:2"),
        ("even", "6", "rat"),
        ("odd-quotient", "5", "int"),
        ("wedderburn", "5", "gf:5"),
        ("morita", "6", "int"),
        ("endring", "7", "int"),
    ] {
        let (code, out) = censym(&["iso", "--kind", kind, "--n", n, "--ring", ring, "--json"]);
        assert_eq!(code, 0, "{kind}");
        for r in json_lines(&out) {
            assert_eq!(r["verdict"], "pass", "{kind}");
            assert!(r["witness"]["images"].is_array());
        }
    }
    let (_, out) = censym(&["iso", "--kind", "morita", "--n", "8", "--json"]);
    assert_eq!(json_lines(&out).len(), 3);
}

#[test]
fn centre_and_dump() {
    let (code, out) = censym(&["centre", "--n", "4", "--ring", "gf:3", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(json_lines(&out)[0]["witness"]["dimension"], 2);
    let (code, out) = censym(&["dump-algebra", "--n", "3", "--ring", "int"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rank"], 5);
    assert_eq!(v["labels"][0], "f1_1");
    let (_, out) = censym(&["dump-algebra", "--n", "2", "--kind", "matrix"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["labels"], serde_json::json!(["E1_1", "E1_2", "E2_1", "E2_2"]));
}

#[test]
fn matrix_file_feeds_the_frobenius_identities() {
    let dir = std::env::temp_dir().join(format!("censym-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.txt");
    std::fs::write(&path, "n 3 ring rat\n1/2 0 3\n-1 2 0\n0 0 7/3\n").unwrap();
    let p = path.to_str().unwrap();
    let (code, out) = censym(&["frobenius", "--n", "3", "--ring", "rat", "--matrix-file", p, "--json"]);
    assert_eq!(code, 0);
    let rs = json_lines(&out);
    assert_eq!(rs.len(), 3);
    assert!(rs[0]["clauses"][1]["detail"].as_str().unwrap().contains("1 supplied"));
    // a file over another ring is a usage error
    assert_eq!(censym(&["frobenius", "--n", "3", "--ring", "int", "--matrix-file", p]).0, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}
