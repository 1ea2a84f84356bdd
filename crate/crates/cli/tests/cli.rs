use std::io::Write;
use std::process::{Command, Output, Stdio};

fn subtree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subtree")).args(args).output().expect("spawn")
}

fn subtree_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_subtree"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field(o: &Output, key: &str) -> String {
    let v: serde_json::Value = serde_json::from_str(stdout(o).trim()).unwrap();
    v[key].as_str().unwrap().to_string()
}

#[test]
fn compute_path_and_clique() {
    let p5 = subtree(&["compute", "family:path:5", "--format", "jsonl"]);
    assert!(p5.status.success());
    assert_eq!(field(&p5, "mu"), "7/3");
    assert_eq!(field(&p5, "N"), "15");

    let k4 = subtree(&["compute", "family:clique:4", "--format", "jsonl"]);
    assert_eq!(field(&k4, "N"), "38");
    assert_eq!(field(&k4, "mu"), "58/19");
}

#[test]
fn compute_graph6_and_local_means() {
    let k3 = subtree(&["compute", "Bw", "--vertex", "0", "--edge", "0-1", "--format", "jsonl"]);
    assert!(k3.status.success());
    assert_eq!(field(&k3, "mu"), "2");
    // K3 subtrees through vertex 0: {0}, two edges, three spanning paths.
    assert_eq!(field(&k3, "mu(v=0)"), "7/3");
    // Through edge 01: the edge and the two spanning paths that use it.
    assert_eq!(field(&k3, "mu(e=0-1)"), "8/3");
}

#[test]
fn compute_reads_stdin() {
    let o = subtree_stdin(&["compute", "-", "--format", "jsonl"], "Bw\n");
    assert_eq!(field(&o, "N"), "9");
}

#[test]
fn compute_rejects_bad_input() {
    assert_eq!(subtree(&["compute", "family:nope:3"]).status.code(), Some(2));
    assert_eq!(subtree(&["compute", "family:path:5", "--edge", "0-2"]).status.code(), Some(2));
    assert_eq!(subtree(&["compute", "family:path:4", "--vertex", "7"]).status.code(), Some(2));
    assert_eq!(subtree(&["compute", "Bw", "--tree", "0-1,1-2,2-0"]).status.code(), Some(2));
}

#[test]
fn generate_connected_and_trees() {
    let o = subtree(&["generate", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 6);
    let t = subtree(&["generate", "8", "--trees"]);
    assert_eq!(stdout(&t).lines().count(), 23);
    assert_eq!(subtree(&["generate", "9"]).status.code(), Some(2));
}

#[test]
fn scan_min_path_all_hold() {
    let o = subtree(&["scan", "--n", "6", "--checks", "min-path"]);
    assert!(o.status.success());
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 112);
    assert!(lines.iter().all(|v| v["status"] == "holds"));
}

#[test]
fn scan_reports_malformed_line() {
    let o = subtree_stdin(&["scan", "--input", "-", "--checks", "min-path"], "Bw\nCh\n!!bad\nBw\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    // The graphs before the bad line are still reported.
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn scan_resume_matches_single_pass() {
    let dir = tempfile::tempdir().unwrap();
    let full = dir.path().join("full.jsonl");
    let part = dir.path().join("part.jsonl");
    let ck = dir.path().join("ck.json");
    let base = ["scan", "--n", "6", "--checks", "min-path,max-clique", "--no-runtime", "--checkpoint-every", "10"];
    let run = |extra: &[&str]| {
        let mut args = base.to_vec();
        args.extend_from_slice(extra);
        subtree(&args)
    };
    assert!(run(&["--output", full.to_str().unwrap()]).status.success());
    let first = run(&["--output", part.to_str().unwrap(), "--checkpoint", ck.to_str().unwrap(), "--stop-after", "30"]);
    assert!(first.status.success());
    assert!(std::fs::read_to_string(&part).unwrap().lines().count() < 224);
    let second = run(&["--output", part.to_str().unwrap(), "--checkpoint", ck.to_str().unwrap(), "--resume"]);
    assert!(second.status.success());
    assert_eq!(std::fs::read(&full).unwrap(), std::fs::read(&part).unwrap());
}

#[test]
fn scan_csv_has_header() {
    let o = subtree(&["scan", "--n", "3", "--checks", "min-path", "--format", "csv"]);
    let out = stdout(&o);
    assert!(out.starts_with("check,graph,status,violation,witness,mu,mu_float,runtime_ms"));
    assert_eq!(out.lines().count(), 3);
}

#[test]
fn repro_exit_codes() {
    let ok = subtree(&["repro", "join-deletion-2-6"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("reproduced"));
    assert_eq!(subtree(&["repro", "no-such-repro"]).status.code(), Some(2));
    assert_eq!(subtree(&["repro", "dbstar-23-8-local"]).status.code(), Some(2));
    let list = subtree(&["repro", "--list"]);
    assert_eq!(stdout(&list).lines().count(), 9);
}

#[test]
fn missing_output_directory_is_io_error() {
    let o = subtree(&["scan", "--n", "3", "--output", "/nonexistent-dir/x.jsonl"]);
    assert_eq!(o.status.code(), Some(3));
}
