use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const FIGURE_HEIGHT: &str = "[[0,1,2,3,4],[1,2,3,2,3],[2,3,2,1,2],[3,2,3,2,1],[4,3,2,1,0]]";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vertexlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_vertexlab"))
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

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad JSON ({e}): {}{}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_asm_four() {
    let out = run(&["count", "asm", "4", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["result"]["enumerated"], 42);
    assert_eq!(v["result"]["formula"], "42");
    assert_eq!(v["result"]["agree"], true);
}

#[test]
fn count_dt_three() {
    let v = json(&run(&["count", "dt", "3", "--format", "json"]));
    assert_eq!(v["result"]["enumerated"], "64");
    assert_eq!(v["result"]["tiler"], "64");
    assert_eq!(v["result"]["formula"], "64");
}

#[test]
fn count_fpl_by_link_three() {
    let v = json(&run(&["count", "fpl-by-link", "3", "--format", "json"]));
    assert_eq!(v["result"]["sorted"], serde_json::json!([2, 2, 1, 1, 1]));
    assert_eq!(v["result"]["rotation_invariant"], true);
    assert_eq!(v["result"]["counts"].as_array().unwrap().len(), 5);
}

#[test]
fn count_dwbc_diagrams() {
    let out = run(&["count", "dwbc", "3", "--emit-diagram", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["diagrams"].as_array().unwrap().len(), 7);
}

#[test]
fn size_cap_exit_code() {
    let out = run(&["count", "asm", "30"]);
    assert_eq!(code(&out), 2);
    let out = Command::new(env!("CARGO_BIN_EXE_vertexlab"))
        .args(["count", "dt", "3"])
        .env("VERTEXLAB_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    assert_eq!(code(&run(&["lr", "--lambda", "9,9", "--mu", "2"])), 2);
}

#[test]
fn malformed_input_exit_code() {
    assert_eq!(code(&run(&["count", "nothing", "3"])), 3);
    assert_eq!(
        code(&run(&["schur", "eval", "--shape", "2,x", "--vars", "1,2"])),
        3
    );
    let bad = run_stdin(
        &["convert", "--from", "asm", "--to", "config", "-"],
        "[[1,1],[0,0]]",
    );
    assert_eq!(code(&bad), 3);
    let bad = run_stdin(&["convert", "--from", "config", "--to", "asm", "-"], "{}");
    assert_eq!(code(&bad), 3);
    assert_eq!(
        code(&run(&["izergin", "--q", "2", "--xs", "1,2", "--ys", "1,3"])),
        3
    );
}

#[test]
fn help_exits_cleanly() {
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn convert_figure_height() {
    let cfg = run_stdin(
        &[
            "convert", "--from", "height", "--to", "config", "--format", "json", "-",
        ],
        FIGURE_HEIGHT,
    );
    assert_eq!(code(&cfg), 0);
    let cfg = stdout(&cfg);
    let asm = run_stdin(
        &[
            "convert", "--from", "config", "--to", "asm", "--format", "json", "-",
        ],
        &cfg,
    );
    assert_eq!(
        json(&asm),
        serde_json::json!([[0, 0, 1, 0], [0, 1, 0, 0], [1, -1, 0, 1], [0, 1, 0, 0]])
    );
    let bpd = run_stdin(
        &[
            "convert", "--from", "config", "--to", "bpd", "--format", "json", "-",
        ],
        &cfg,
    );
    assert_eq!(json(&bpd), serde_json::json!([3, 1, 4, 2]));
    let pretty = run_stdin(&["convert", "--from", "config", "--to", "bpd", "-"], &cfg);
    assert!(stdout(&pretty).contains("3142"));
}

#[test]
fn convert_round_trips_are_byte_identical() {
    let cfg = stdout(&run_stdin(
        &[
            "convert", "--from", "height", "--to", "config", "--format", "json", "-",
        ],
        FIGURE_HEIGHT,
    ));
    for repr in ["asm", "height", "monotone", "paths"] {
        let there = stdout(&run_stdin(
            &[
                "convert", "--from", "config", "--to", repr, "--format", "json", "-",
            ],
            &cfg,
        ));
        let back = stdout(&run_stdin(
            &[
                "convert", "--from", repr, "--to", "config", "--format", "json", "-",
            ],
            &there,
        ));
        assert_eq!(back, cfg, "{repr}");
    }
    let tri = stdout(&run_stdin(
        &[
            "convert", "--from", "height", "--to", "monotone", "--format", "json", "-",
        ],
        FIGURE_HEIGHT,
    ));
    let asm = stdout(&run_stdin(
        &[
            "convert", "--from", "monotone", "--to", "asm", "--format", "json", "-",
        ],
        &tri,
    ));
    let tri2 = stdout(&run_stdin(
        &[
            "convert", "--from", "asm", "--to", "monotone", "--format", "json", "-",
        ],
        &asm,
    ));
    assert_eq!(tri, tri2);
}

#[test]
fn output_only_targets_are_rejected_as_input() {
    let out = run_stdin(&["convert", "--from", "bpd", "--to", "asm", "-"], "[1]");
    assert_eq!(code(&out), 3);
}

#[test]
fn izergin_random_points_agree() {
    for seed in ["1", "2"] {
        let out = run(&["izergin", "--n", "3", "--seed", seed, "--format", "json"]);
        assert_eq!(code(&out), 0);
        let v = json(&out);
        assert_eq!(v["seed"], seed.parse::<u64>().unwrap());
        assert_eq!(v["result"]["determinant"], v["result"]["brute_force"]);
    }
}

#[test]
fn izergin_free_fermion_point() {
    let v = json(&run(&[
        "izergin", "--q", "i", "--xs", "1,2,3", "--ys", "1/2,5,-7", "--format", "json",
    ]));
    assert_eq!(v["result"]["agree"], true);
    assert_eq!(v["result"]["free_fermion"], v["result"]["brute_force"]);
}

#[test]
fn ybe_holds_everywhere() {
    let v = json(&run(&["ybe", "--seed", "9", "--format", "json"]));
    assert_eq!(v["result"]["entries_holding"], 64);
    let csv = stdout(&run(&["ybe", "--q", "w", "--format", "csv"]));
    assert_eq!(csv.lines().count(), 66);
}

#[test]
fn ldet_all_ones() {
    let v = json(&run(&[
        "ldet",
        "--matrix",
        "[[1,1],[1,1]]",
        "--format",
        "json",
    ]));
    assert_eq!(
        v["result"]["coefficients"],
        serde_json::json!(["1/1", "1/1"])
    );
    assert_eq!(v["result"]["agree"], true);
}

#[test]
fn schur_eval_methods_agree() {
    let v = json(&run(&[
        "schur",
        "eval",
        "--shape",
        "2,1",
        "--vars",
        "2/1,3/1,5/1",
        "--format",
        "json",
    ]));
    assert_eq!(v["result"]["agree"], true);
    let values = v["result"]["values"].as_object().unwrap();
    assert_eq!(values.len(), 4);
    for val in values.values() {
        assert_eq!(val["a"], "280/1");
    }
    let v = json(&run(&[
        "schur", "eval", "--shape", "1", "--vars", "i,-i", "--method", "ssyt", "--format", "json",
    ]));
    assert_eq!(v["result"]["values"]["ssyt"]["a"], "0/1");
}

#[test]
fn cauchy_both_spellings() {
    for args in [
        &[
            "schur", "cauchy", "--m", "2", "--n", "2", "--degree", "4", "--format", "json",
        ][..],
        &[
            "cauchy",
            "--m",
            "1",
            "--n",
            "2",
            "--telescoping",
            "5",
            "--format",
            "json",
        ][..],
    ] {
        let out = run(args);
        assert_eq!(code(&out), 0);
        assert_eq!(json(&out)["ok"], true);
    }
}

#[test]
fn lr_box_square_and_emitted_puzzles() {
    let path = std::env::temp_dir().join(format!("vertexlab-puzzles-{}.json", std::process::id()));
    let out = run(&[
        "lr",
        "--lambda",
        "1",
        "--mu",
        "1",
        "--emit-puzzles",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(
        v["result"]["expansion"],
        serde_json::json!({"1,1": 1, "2": 1})
    );
    let emitted: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    let puzzles = emitted["puzzles"].as_array().unwrap();
    assert_eq!(puzzles.len(), 2);
    assert_eq!(puzzles[0]["puzzle"]["N"], 4);
    assert_eq!(puzzles[0]["puzzle"]["edges"].as_array().unwrap().len(), 30);
}

#[test]
fn lr_methods_agree() {
    let v = json(&run(&[
        "lr", "--lambda", "2,1", "--mu", "2,1", "--method", "both", "--format", "json",
    ]));
    assert_eq!(v["result"]["agree"], true);
    assert_eq!(v["result"]["expansion"]["3,2,1"], 2);
}

#[test]
fn output_independent_of_jobs() {
    let a = run(&[
        "--jobs",
        "1",
        "count",
        "fpl-by-link",
        "4",
        "--format",
        "json",
    ]);
    let b = run(&[
        "--jobs",
        "4",
        "count",
        "fpl-by-link",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["--jobs", "1", "izergin", "--seed", "3", "--format", "csv"]);
    let b = run(&["--jobs", "2", "izergin", "--seed", "3", "--format", "csv"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn seed_echoed_in_headers() {
    let csv = stdout(&run(&["--seed", "4242", "ybe", "--format", "csv"]));
    assert!(csv.starts_with("# vertexlab ybe seed=4242"));
    let pretty = stdout(&run(&["--seed", "4242", "count", "asm", "2"]));
    assert!(pretty.lines().next().unwrap().contains("seed 4242"));
}

#[test]
fn selftest_single_check() {
    let out = run(&["selftest", "--only", "8", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["result"]["summary"]["passed"], 1);
    assert_eq!(code(&run(&["selftest", "--only", "40"])), 3);
}
