use std::process::{Command, Output};

use serde_json::Value;

fn qchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qchar")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

type Table = Vec<(Vec<i64>, Vec<(i64, i64)>)>;

fn schur_table(v: &Value) -> Table {
    v["schur"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            let key = e["key"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
            let coeff = e["coefficient"]
                .as_array()
                .unwrap()
                .iter()
                .map(|t| (t[0].as_i64().unwrap(), t[1].as_i64().unwrap()))
                .collect();
            (key, coeff)
        })
        .collect()
}

#[test]
fn sl3_adjoint_pair() {
    let out = qchar(&["char", "--rank", "2", "--n", "1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["rank"], 2);
    assert_eq!(v["n"], serde_json::json!([[1, 1]]));
    assert_eq!(v["top"], serde_json::json!([2, 1, 0]));
    // s_(2,1) + q^-1 s_(1,1,1)
    assert_eq!(schur_table(&v), vec![(vec![2, 1, 0], vec![(0, 1)]), (vec![1, 1, 1], vec![(-1, 1)])]);
}

#[test]
fn sl2_two_fundamentals() {
    let v = json(&qchar(&["char", "--rank", "1", "--n", "2"]));
    assert_eq!(schur_table(&v), vec![(vec![2, 0], vec![(0, 1)]), (vec![1, 1], vec![(-1, 1)])]);
    let mult = &v["multiplicities"];
    assert_eq!(mult[1]["key"], serde_json::json!([0, 0]));
}

#[test]
fn empty_product_is_trivial() {
    let v = json(&qchar(&["char", "--rank", "2", "--n", "0,0"]));
    assert_eq!(schur_table(&v), vec![(vec![0, 0, 0], vec![(0, 1)])]);
}

#[test]
fn higher_level_input() {
    let out = qchar(&["char", "--rank", "1", "--level", "2", "--n", "0;1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    // a single level-two module is irreducible
    assert_eq!(schur_table(&v), vec![(vec![2, 0], vec![(0, 1)])]);
}

#[test]
fn output_is_reproducible() {
    let args = ["char", "--rank", "3", "--n", "1,0,1"];
    let first = qchar(&args);
    let second = qchar(&args);
    assert!(!first.stdout.is_empty());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn csv_and_text_formats() {
    let csv = qchar(&["char", "--rank", "1", "--n", "2", "--format", "csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("table,key,q_exponent,coefficient"));
    assert!(text.contains("schur,\"(1,1)\",-1,1"));

    let text = String::from_utf8(qchar(&["char", "--rank", "1", "--n", "2", "--format", "text"]).stdout).unwrap();
    assert!(text.contains("s(1,1): q^-1"));
}

#[test]
fn writes_to_file() {
    let path = std::env::temp_dir().join(format!("qchar-out-{}.json", std::process::id()));
    let out = qchar(&["char", "--rank", "1", "--n", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(v["top"], serde_json::json!([1, 0]));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["char", "--rank", "2", "--n", "1,x"][..],
        &["char", "--rank", "2", "--n", "1"],
        &["char", "--rank", "0", "--n", ""],
        &["char", "--rank", "1", "--n", "-1"],
        &["verify", "--suite", "bogus"],
        &["frobnicate"],
    ] {
        let out = qchar(args);
        assert_eq!(out.status.code(), Some(2), "{:?}", args);
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn verify_lemmas_passes() {
    let out = qchar(&["verify", "--suite", "lemmas", "--bound", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["suite"], "lemmas");
    assert_eq!(v["passed"], true);
    let reports = v["reports"].as_array().unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r["failures"] == 0 && r["points"].as_u64().unwrap() > 0));
}

#[test]
fn verify_text_and_csv() {
    let text = qchar(&["verify", "--suite", "eigen", "--rank", "1", "--format", "text"]);
    assert_eq!(text.status.code(), Some(0));
    assert!(String::from_utf8(text.stdout).unwrap().ends_with("suite eigen: PASS (1 checks)\n"));

    let csv = qchar(&["verify", "--suite", "whittaker", "--bound", "2", "--order", "8", "--format", "csv"]);
    assert_eq!(csv.status.code(), Some(0));
    let text = String::from_utf8(csv.stdout).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().skip(1).all(|l| l.contains(",true,")));
}
