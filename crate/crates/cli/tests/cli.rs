use std::process::{Command, Output};

use schubert_cli::{parse_request, run, Action, Format, UsageError};
use schubert_levi::{ParabolicSet, Permutation};
use serde_json::Value;

fn schubert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn argv<'a>(args: &[&'a str]) -> Vec<&'a str> {
    std::iter::once("schubert").chain(args.iter().copied()).collect()
}

#[test]
fn parses_analyze_request() {
    let req = parse_request(argv(&["analyze", "--n", "4", "--w", "3,4,1,2", "--levi", "2"])).unwrap();
    assert_eq!(req.format, Format::Text);
    assert_eq!(
        req.action,
        Action::Analyze {
            w: "3,4,1,2".parse::<Permutation>().unwrap(),
            parabolic: ParabolicSet::empty(4),
            d: None,
            levi: Some(ParabolicSet::new(4, [2]).unwrap()),
        }
    );
}

#[test]
fn rejects_bad_input_before_running() {
    let bad: &[&[&str]] = &[
        &["analyze", "--n", "4", "--w", "3,3,1,2"],
        &["analyze", "--n", "5", "--w", "3,4,1,2"],
        &["analyze", "--w", "3,4,1,2", "--d", "1"],
        &["heads", "--w", "3,4,1,2", "--levi", "4"],
        &["toroidal", "--w", "2,1,3", "--d", "2", "--levi", "1"],
        &["bp", "--w", "3,4,1,2", "--parabolic", "1,3", "--quotient", "1"],
        &["sweep", "--check", "nonsense"],
        &["analyze", "--w", "1,2", "--format", "yaml"],
        &["frobnicate"],
    ];
    for args in bad {
        let err = parse_request(argv(args)).unwrap_err();
        assert!(!matches!(err, UsageError::Display(_)), "{args:?}");
    }
}

#[test]
fn usage_errors_exit_2() {
    let o = schubert(&["analyze", "--n", "4", "--w", "3,3,1,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("repeats"));
    assert!(o.stdout.is_empty());
    assert_eq!(schubert(&["analyze"]).status.code(), Some(2));
    assert_eq!(schubert(&["--help"]).status.code(), Some(0));
}

#[test]
fn analyze_gl4_example() {
    let o = schubert(&["analyze", "--n", "4", "--w", "3,4,1,2", "--levi", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("l_max = {2}"), "{text}");
    assert!(text.contains("boundary: 1,4,3,2; 3,1,4,2; 3,2,1,4"), "{text}");

    let o = schubert(&["analyze", "--w", "3,4,1,2", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["l_max"], serde_json::json!([2]));
    assert_eq!(v["boundary"], serde_json::json!([[1, 4, 3, 2], [3, 1, 4, 2], [3, 2, 1, 4]]));
    assert_eq!(v["poincare"], serde_json::json!([1, 3, 5, 4, 1]));
}

#[test]
fn toroidal_instances() {
    let o = schubert(&[
        "toroidal", "--n", "6", "--d", "2", "--w", "2,6,1,3,4,5", "--levi", "1,3,4,5", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "fails");
    for d in v["divisors"].as_array().unwrap() {
        assert_eq!(d["criterion"], "violated");
        assert_eq!(d["witness"], serde_json::json!([1, 2, 3, 4, 5, 6]));
    }

    let o = schubert(&["toroidal", "--n", "4", "--d", "2", "--w", "1,4,2,3", "--levi", "2,3"]);
    assert!(stdout(&o).contains("verdict: passes-necessary"));
}

#[test]
fn bp_worked_instance() {
    let o = schubert(&["bp", "--w", "3,2,1", "--quotient", "1", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let d = &v["decomposition"];
    assert_eq!(d["v"], serde_json::json!([2, 3, 1]));
    assert_eq!(d["u"], serde_json::json!([2, 1, 3]));
    assert_eq!(d["bp"], true);
}

#[test]
fn head_oracle_sweep_is_clean() {
    let o = schubert(&["sweep", "--check", "head-oracle", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 disagreements"));

    let o = schubert(&["sweep", "--check", "head-oracle", "--max-n", "6", "--format", "json"]);
    let text = stdout(&o);
    let last: Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(last["summary"]["failures"], 0);
    assert_eq!(last["summary"]["instances"].as_u64().unwrap() as usize, text.lines().count() - 1);
}

#[test]
fn json_lines_round_trip_byte_identically() {
    let cases: &[&[&str]] = &[
        &["sweep", "--check", "divisor-stability", "--max-n", "5", "--format", "json"],
        &["analyze", "--w", "2,6,1,3,4,5", "--d", "2", "--format", "json"],
        &["bp", "--w", "4,2,3,1", "--d", "2", "--levi", "1,3", "--format", "json"],
        &["classify", "--max-m", "20", "--format", "json"],
    ];
    for args in cases {
        let o = schubert(args);
        assert!(o.status.success(), "{args:?}");
        for line in stdout(&o).lines() {
            let v: Value = serde_json::from_str(line).unwrap();
            assert_eq!(serde_json::to_string(&v).unwrap(), line);
        }
    }
}

#[test]
fn sequential_and_parallel_output_match() {
    let args = ["sweep", "--check", "singular", "--max-n", "6", "--format", "json"];
    let par = schubert(&args);
    let seq = schubert(&[&args[..], &["--sequential"]].concat());
    assert_eq!(par.stdout, seq.stdout);
}

#[test]
fn rank_limit_exit_3() {
    let o = schubert(&["sweep", "--check", "smoothness", "--max-n", "9"]);
    assert_eq!(o.status.code(), Some(3));
    let o = schubert(&["analyze", "--w", "9,8,7,6,5,4,3,2,1"]);
    assert_eq!(o.status.code(), Some(3));
    let o = schubert(&["analyze", "--w", "2,1,3,4,5,6,7,8,9", "--rank-limit", "9"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn run_writes_to_given_writer() {
    let req = parse_request(argv(&["classify", "--max-m", "10"])).unwrap();
    let mut buf = Vec::new();
    let outcome = run(&req, &mut buf).unwrap();
    assert_eq!(outcome.violations, 0);
    let text = String::from_utf8(buf).unwrap();
    assert!(text.contains("Gr(i+1, m+2)"));
}
