use std::process::{Command, Output};

fn categorify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_categorify")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn trefoil_table_json() {
    let o = categorify(&["kh", "2: 1 1 1", "--table", "--format", "json"]);
    assert!(o.status.success());
    let got: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let want = serde_json::json!([
        {"i": 0, "j": 1, "rank": 1, "torsion": []},
        {"i": 0, "j": 3, "rank": 1, "torsion": []},
        {"i": 2, "j": 5, "rank": 1, "torsion": []},
        {"i": 3, "j": 7, "rank": 0, "torsion": [2]},
        {"i": 3, "j": 9, "rank": 1, "torsion": []},
    ]);
    assert_eq!(got, want);
}

#[test]
fn pd_and_braid_agree() {
    let pd = categorify(&["jones", "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]"]);
    let braid = categorify(&["jones", "2: -1 -1 -1"]);
    assert!(pd.status.success() && braid.status.success());
    let mirror = categorify(&["jones", "2: 1 1 1"]);
    let pd = stdout(&pd);
    assert!(pd == stdout(&braid) || pd == stdout(&mirror));
}

#[test]
fn unknown_suite_is_usage_error() {
    let o = categorify(&["verify", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bogus"));
}

#[test]
fn bad_input_is_usage_error() {
    assert_eq!(categorify(&["kh", "2: 1 7"]).status.code(), Some(2));
    assert_eq!(categorify(&["kh"]).status.code(), Some(2));
    assert_eq!(
        categorify(&["graph", "kh", "v 2 / e 1 2", "--theory", "qn", "--n", "3", "--jwindow=-4..4"]).status.code(),
        Some(2)
    );
}

#[test]
fn tutte_of_triangle() {
    let o = categorify(&["graph", "poly", "v 3 / e 1 2 / e 2 3 / e 1 3", "--tutte"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "x^2 + x + y");
}

#[test]
fn graph_file_input() {
    let path = std::env::temp_dir().join(format!("categorify-cli-{}.graph", std::process::id()));
    std::fs::write(&path, "v 2\ne 1 2\ne 1 2\n").unwrap();
    let o = categorify(&["graph", "poly", path.to_str().unwrap(), "--tutte"]);
    std::fs::remove_file(&path).ok();
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "x + y");
}

#[test]
fn theorem24_for_t34() {
    let o = categorify(&["verify", "theorem24", "--p", "3", "--q", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("PASS"));
}

#[test]
fn thread_count_does_not_change_output() {
    let run = |threads: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_categorify"))
            .env("CATEGORIFY_THREADS", threads)
            .args(["kh", "3: 1 -2 1 -2", "--format", "csv"])
            .output()
            .unwrap();
        assert!(o.status.success());
        o.stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn slow_tier_is_gated() {
    let word = format!("2:{}", " 1".repeat(13));
    assert_eq!(categorify(&["kh", &word]).status.code(), Some(2));
}
