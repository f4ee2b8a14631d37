use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

use fishburn::{reference, UpperTriMatrix};

fn fishburn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fishburn"))
        .args(args)
        .env_remove("FISHBURN_POSET_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn ascent_table_small() {
    let o = fishburn(&["table", "--source", "ascent", "--n-max", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,k,count");
    assert!(lines.ends_with(&["3,1,2", "3,2,2", "3,3,1"]));
}

#[test]
fn series_table_degree_zero() {
    let o = fishburn(&["table", "--source", "series", "--n-max", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n,k,count\n0,0,1\n");
}

#[test]
fn sources_agree() {
    let run = |source: &str, extra: &[&str]| {
        let mut args = vec!["table", "--source", source, "--n-max", "6"];
        args.extend_from_slice(extra);
        let o = fishburn(&args);
        assert!(o.status.success(), "{source}");
        stdout(&o)
    };
    let ascent = run("ascent", &[]);
    assert_eq!(run("posets", &[]), ascent);
    assert_eq!(run("series", &[]), ascent);
    assert_eq!(run("matrices", &[]), ascent);
    assert_eq!(run("matrices", &["--class", "i"]), ascent);
}

#[test]
fn json_counts_are_numbers() {
    let o = fishburn(&[
        "series",
        "--form",
        "pt",
        "--max-deg",
        "40",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v = json(&o);
    let last = v.as_array().unwrap().last().unwrap();
    assert_eq!(last["n"], 40);
    assert!(last["coefficient"].is_number());
}

#[test]
fn pt_csv_header() {
    let o = fishburn(&["series", "--form", "pt", "--max-deg", "4"]);
    assert_eq!(stdout(&o), "n,coefficient\n0,1\n1,1\n2,2\n3,5\n4,15\n");
}

#[test]
fn verify_conjecture_passes() {
    let o = fishburn(&["verify", "--target", "conjecture", "--max-deg", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["conjecture"]["identity_ok"], true);
}

#[test]
fn verify_involution_finds_reference_orbit() {
    let o = fishburn(&["verify", "--target", "involution", "--n-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["reference_orbit_found"], true);
    let runs = v["involution"].as_array().unwrap();
    assert_eq!(runs.len(), 6);
    let mut keys: Vec<&str> = runs[0]
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    keys.sort_unstable();
    assert_eq!(
        keys,
        [
            "case1_count",
            "case2_count",
            "identity_ok",
            "improper_count",
            "n",
            "witnesses"
        ]
    );
}

#[test]
fn verify_all_passes() {
    let o = fishburn(&["verify", "--target", "all", "--n-max", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    for key in [
        "involution",
        "bijection",
        "conjecture",
        "composition",
        "counts",
    ] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn composition_target_alias() {
    let o = fishburn(&["verify", "--target", "lemma31", "--n-max", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["target"], "composition");
}

#[test]
fn out_of_bound_is_usage_error() {
    for args in [
        &["table", "--source", "matrices", "--n-max", "40"][..],
        &["table", "--source", "posets", "--n-max", "12"],
        &["verify", "--n-max", "99"],
        &["series", "--max-deg", "1000"],
    ] {
        assert_eq!(fishburn(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn poset_bound_env_override() {
    let run = |limit: &str| {
        Command::new(env!("CARGO_BIN_EXE_fishburn"))
            .args(["table", "--source", "posets", "--n-max", "3"])
            .env("FISHBURN_POSET_MAX_N", limit)
            .output()
            .unwrap()
    };
    assert_eq!(run("2").status.code(), Some(2));
    assert!(run("3").status.success());
}

#[test]
fn examples_reproduce() {
    let o = fishburn(&["examples"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let all = v["examples"].as_array().unwrap();
    assert_eq!(all.len(), 3);
    assert!(all.iter().all(|e| e["ok"] == true));

    let traced = fishburn(&["examples", "--trace"]);
    assert!(traced.status.success());
    let ms = UpperTriMatrix::parse_text_many(&stdout(&traced)).unwrap();
    assert_eq!(ms[0], reference::improper_m8());
    assert_eq!(&ms[3..], &reference::removal_chain()[..]);
}

fn trace_stdin(algorithm: &str, input: &str, extra: &[&str]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fishburn"))
        .args(["trace", "--algorithm", algorithm])
        .args(extra)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn trace_removal_matches_chain() {
    let source = reference::removal_source().to_text();
    let o = trace_stdin("removal", &source, &[]);
    assert!(o.status.success());
    let ms = UpperTriMatrix::parse_text_many(&stdout(&o)).unwrap();
    assert_eq!(ms, reference::removal_chain());

    let last = trace_stdin("removal", &source, &["--final-only"]);
    let ms = UpperTriMatrix::parse_text_many(&stdout(&last)).unwrap();
    assert_eq!(ms, vec![reference::removal_target()]);
}

#[test]
fn trace_addition_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("target.txt");
    std::fs::write(&path, reference::removal_target().to_text()).unwrap();
    let o = fishburn(&[
        "trace",
        "--algorithm",
        "addition",
        "--input",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let mut ms = UpperTriMatrix::parse_text_many(&stdout(&o)).unwrap();
    ms.reverse();
    assert_eq!(ms, reference::removal_chain());
}

#[test]
fn trace_phi_pair() {
    let o = trace_stdin("phi", reference::PHI_CASE1, &[]);
    assert!(o.status.success());
    let ms = UpperTriMatrix::parse_text_many(&stdout(&o)).unwrap();
    assert_eq!(ms, vec![reference::phi_case1(), reference::phi_case2()]);
}

#[test]
fn trace_rejects_bad_input() {
    assert_eq!(
        trace_stdin("removal", "dim=2\n1 0\n1 1\n", &[])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(trace_stdin("phi", "dim=1\n1\n", &[]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--target", "all", "--n-max", "4"];
    assert_eq!(fishburn(&args).stdout, fishburn(&args).stdout);
    let args = [
        "table", "--source", "posets", "--n-max", "6", "--format", "json",
    ];
    assert_eq!(fishburn(&args).stdout, fishburn(&args).stdout);
}
