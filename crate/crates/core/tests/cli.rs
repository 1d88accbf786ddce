mod common;

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn toughcycle(args: &[&str], stdin: &str, workers: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_toughcycle"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.env_remove("TOUGHCYCLE_WORKERS");
    if let Some(w) = workers {
        cmd.env("TOUGHCYCLE_WORKERS", w);
    }
    let mut child = cmd.spawn().expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_petersen() {
    let o = toughcycle(&["compute", "IheA@GUAo"], "", None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n=10 m=15 δ=3 κ=3 τ=4/3 c=9 hamiltonian=false petersen=true\n");
}

#[test]
fn compute_reads_words_from_stdin() {
    let o = toughcycle(&["compute", "-"], "C~\nBw\n", None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("n=4 m=6 δ=3 κ=3 τ=inf c=4"), "{}", lines[0]);
}

#[test]
fn bad_word_exits_2() {
    let o = toughcycle(&["compute", "B w"], "", None);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 1"));
}

#[test]
fn gen_then_verify() {
    let gen = toughcycle(&["gen", "petersen"], "", None);
    let o = toughcycle(&["verify", "-", "--theorems", "1,C1", "--format", "records"], &stdout(&gen), None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "IheA@GUAo\t1\tpetersen-exception\t10\t3\t3\t4\t3\t9\nIheA@GUAo\tC1\tpetersen-exception\t10\t3\t3\t4\t3\t9\n"
    );
}

#[test]
fn counterexample_exits_1() {
    let o = toughcycle(
        &["verify", "-", "--theorems", "A", "--inject-c-offset", "-4", "--format", "records"],
        "E~~w\n",
        None,
    );
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "E~~w\tA\tcounterexample\t6\t5\t5\t1\t0\t2\n");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(toughcycle(&["verify", "/definitely/missing.g6"], "", None).status.code(), Some(2));
    assert_eq!(toughcycle(&["verify", "-", "--theorems", "Q"], "", None).status.code(), Some(2));
    assert_eq!(toughcycle(&["gen", "bogus", "3"], "", None).status.code(), Some(2));
    assert_eq!(toughcycle(&["frobnicate"], "", None).status.code(), Some(2));
    assert_eq!(toughcycle(&["verify", "-"], "", Some("zero")).status.code(), Some(2));
}

#[test]
fn worker_count_does_not_change_results() {
    let corpus = common::data_path("connected_n6.g6");
    let path = corpus.to_str().unwrap();
    let args = ["verify", path, "--theorems", "A,B,1,C1,C,L1,L2,L3", "--format", "records"];
    let one = toughcycle(&args, "", Some("1"));
    let many = toughcycle(&args, "", Some("4"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&many));
    assert_eq!(stdout(&one).lines().count(), 112 * 8);
}

#[test]
fn search_matches_exact_on_petersen() {
    let o = toughcycle(&["search", "IheA@GUAo", "--exact", "--seed", "3"], "", None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("length=9\n"), "{text}");
    assert!(text.ends_with("exact=9 MATCH\n"), "{text}");
}

#[test]
fn gen_connected_matches_corpus() {
    let o = toughcycle(&["gen", "connected", "5"], "", None);
    let ours: std::collections::BTreeSet<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(ours.len(), 21);
    let reference: std::collections::BTreeSet<String> = common::corpus(5)
        .iter()
        .map(|g| toughcycle::encode_graph6(&toughcycle::enumerate::canonical_form(g)))
        .collect();
    assert_eq!(ours, reference);
}
