use std::io::Write;
use std::process::{Command, Output, Stdio};

use irreg_core::canonical_code;
use irreg_core::formats::parse_graph6;

fn irreg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_irreg"))
        .args(args)
        .env_remove("IRREG_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn irreg_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_irreg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(args: &[&str]) -> String {
    let o = irreg(&[&["gen"], args].concat());
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o).trim().to_string()
}

#[test]
fn compute_grotzsch_from_edge_list() {
    let edges = gen(&["named", "grotzsch", "--format", "edges"]);
    let o = irreg_stdin(&["compute"], &edges);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("two_walk: a=1 b=10"), "{text}");
    assert!(text.contains("Var=50/121"), "{text}");
}

#[test]
fn compute_tripartite() {
    let code = gen(&["multipartite", "2", "3", "5"]);
    let text = stdout(&irreg(&["compute", "--graph", &code]));
    assert!(text.contains("S=12\n"), "{text}");
    assert!(text.contains("Omega=13/100"), "{text}");
    assert!(text.contains("IRD=60/7"), "{text}");
}

#[test]
fn compute_regular_graph() {
    let code = gen(&["cycle", "5"]);
    let text = stdout(&irreg(&["compute", "--graph", &code]));
    assert!(text.contains("regular; S=0; Omega: undefined"), "{text}");
}

#[test]
fn compute_json_is_exact() {
    let code = gen(&["multipartite", "2", "3", "5"]);
    let o = irreg(&["compute", "--graph", &code, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["measures"]["var"]["num"], 39);
    assert_eq!(v["measures"]["var"]["den"], 25);
    assert_eq!(v["measures"]["omega"]["decimal"], "0.13");
}

#[test]
fn parse_errors_exit_2() {
    let o = irreg_stdin(&["compute"], "0 1\n1 x\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(
        irreg(&["compute", "--graph", "~~~~"]).status.code(),
        Some(2)
    );
}

#[test]
fn gen_sizes() {
    for (args, n, m) in [
        (&["wheel", "6"][..], 6, 10),
        (&["cs", "7", "2"][..], 7, 11),
        (&["named", "diamond"][..], 4, 5),
    ] {
        let g = parse_graph6(&gen(args)).unwrap();
        assert_eq!((g.n(), g.edge_count()), (n, m), "{args:?}");
    }
}

#[test]
fn gen_round_trip_keeps_the_class() {
    let g6 = parse_graph6(&gen(&["cs", "9", "3"])).unwrap();
    let edges = gen(&["cs", "9", "3", "--format", "edges"]);
    let from_edges = irreg_core::formats::parse_edge_list(&edges).unwrap();
    let direct = irreg_core::generators::complete_split(9, 3).unwrap();
    let code = canonical_code(&direct).unwrap();
    assert_eq!(canonical_code(&g6).unwrap(), code);
    assert_eq!(canonical_code(&from_edges).unwrap(), code);
}

#[test]
fn gen_bad_parameters_exit_2() {
    assert_eq!(irreg(&["gen", "cs", "7", "0"]).status.code(), Some(2));
    assert_eq!(irreg(&["gen", "wheel", "x"]).status.code(), Some(2));
    assert_eq!(irreg(&["gen", "hypercube", "3"]).status.code(), Some(2));
    assert_eq!(irreg(&["gen", "named", "nope"]).status.code(), Some(2));
}

#[test]
fn enum_counts() {
    let count = |args: &[&str]| {
        stdout(&irreg(&[&["enum", "--count"], args].concat()))
            .trim()
            .to_string()
    };
    assert_eq!(
        count(&["--n", "6", "--m", "12", "--connected", "--irregular"]),
        "4"
    );
    assert_eq!(count(&["--trees", "--n", "4"]), "2");
    assert_eq!(count(&["--n", "7", "--m", "11", "--connected"]), "138");
    assert_eq!(count(&["--n", "4", "--strategy", "subsets"]), "11");
}

#[test]
fn enum_stream_is_deterministic() {
    let a = stdout(&irreg(&[
        "enum",
        "--n",
        "6",
        "--connected",
        "--workers",
        "1",
    ]));
    let b = stdout(&irreg(&[
        "enum",
        "--n",
        "6",
        "--connected",
        "--workers",
        "4",
    ]));
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 112);
}

#[test]
fn enum_beyond_caps_exit_3() {
    assert_eq!(
        irreg(&["enum", "--n", "9", "--count"]).status.code(),
        Some(3)
    );
    assert_eq!(
        irreg(&["enum", "--trees", "--n", "13"]).status.code(),
        Some(3)
    );
    assert_eq!(irreg(&["verify", "--max-n", "9"]).status.code(), Some(3));
}

#[test]
fn verify_passes() {
    let o = irreg(&["verify", "--suite", "all", "--connected", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 violations"));
}

#[test]
fn verify_unknown_suite_exit_2() {
    assert_eq!(
        irreg(&["verify", "--suite", "nope", "--max-n", "3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_reports_are_byte_identical_without_timings() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, workers: &str| {
        let path = dir.path().join(name);
        let o = irreg(&[
            "verify",
            "--trees",
            "--max-n",
            "9",
            "--no-timings",
            "--workers",
            workers,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        std::fs::read(path).unwrap()
    };
    let a = run("a.json", "1");
    assert_eq!(a, run("b.json", "4"));
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["suite_id"], "all");
    assert!(v.get("elapsed_ms").is_none());
}

#[test]
fn verify_csv_summary() {
    let o = irreg(&[
        "verify",
        "--unicyclic",
        "--max-n",
        "6",
        "--suite",
        "cyclic",
        "--suite",
        "omega",
        "--format",
        "csv",
    ]);
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 3, "{text}");
    assert!(lines[0].starts_with("suite_id,population"));
    assert!(lines[1].starts_with("cyclic,"));
}

#[test]
fn conjectures_pass_and_list_equalities() {
    let o = irreg(&["conjectures", "--max-n", "6", "--include-disconnected"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("deviation-conjecture:"));
    assert!(text.contains("  equality "));
}

#[test]
fn extremal_case() {
    let text = stdout(&irreg(&["extremal", "--n", "7", "--m", "11"]));
    assert!(
        text.contains("coincide: true; maximizer: CS(7,2)"),
        "{text}"
    );
    assert!(text.contains("q=1: 14, q=2: 1"), "{text}");
    assert_eq!(
        irreg(&["extremal", "--n", "7", "--m", "5"]).status.code(),
        Some(2)
    );
}

#[test]
fn cache_directory_from_env() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_irreg"))
            .args(["enum", "--n", "5", "--connected"])
            .env("IRREG_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    assert_eq!(first.stdout, run().stdout);
}

#[test]
fn split_k_rule() {
    let text = stdout(&irreg(&["split-k", "--n", "12"]));
    assert!(
        text.contains("rule k=[4], argmax k=[4], max S=112/3"),
        "{text}"
    );
}
