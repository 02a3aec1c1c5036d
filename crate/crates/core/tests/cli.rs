use std::process::Command;

fn pq(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_pq")).args(args).env_remove("PQ_CACHE_DIR").output().expect("pq runs")
}

fn stdout(o: &std::process::Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_exit_codes() {
    let ok = pq(&["verify", "qybe", "--n", "3", "--mode", "symbolic"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("PASS qybe [mode=\"symbolic\" n=3]"));
    assert_eq!(pq(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(pq(&["verify", "manin", "--n", "0"]).status.code(), Some(2));
}

#[test]
fn malformed_words_are_usage_errors() {
    assert_eq!(pq(&["brauer", "eval", "--l", "3", "--word", "t1 x2"]).status.code(), Some(2));
    assert_eq!(pq(&["brauer", "eval", "--l", "3", "--word", "c3"]).status.code(), Some(2));
    assert_eq!(pq(&["pbw", "--n", "2", "--word", "t(1,"]).status.code(), Some(2));
}

#[test]
fn brauer_eval_json_is_an_operator() {
    let o = pq(&["brauer", "eval", "--n", "1", "--l", "3", "--word", "c1 c1", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let op = pq_core::superspace::GradedOperator::from_json(&v).unwrap();
    assert!(op.is_zero());
    assert_eq!(op.legs(), 3);
}

#[test]
fn pbw_subcommand() {
    let o = pq(&["pbw", "--n", "2", "--word", "t(1,-2) t(2,2)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "(q) t(2,2) t(1,-2)");
    let zero = pq(&["pbw", "--n", "1", "--word", "t(-1,1) t(1,1)"]);
    assert_eq!(stdout(&zero).trim(), "0");
}

#[test]
fn relations_and_cache_directory() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_pq"))
            .args(["relations", "--n", "2", "--format", "json"])
            .env("PQ_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert!(first.status.success());
    assert!(dir.path().join("relations-n2-l0.json").exists());
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["relations"].as_array().unwrap().len(), 90);
}

#[test]
fn report_files_are_written() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("reports");
    let o = pq(&["verify", "brauer", "--n", "1", "--l", "3", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let names: Vec<String> = std::fs::read_dir(&out).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    assert_eq!(names.len(), 4);
    assert!(names.iter().all(|n| n.ends_with(".json") && !n.starts_with('.')));
}

#[test]
fn centralizer_sides() {
    let o = pq(&["centralizer", "--n", "1", "--l", "2", "--side", "classical", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["params"]["dim"], 3);
    let o = pq(&["centralizer", "--n", "2", "--l", "2", "--mode", "sampled", "--seed", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
}
