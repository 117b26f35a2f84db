use std::io::Write;
use std::path::Path;
use std::process::{Command, Stdio};

use mforge::graph6;
use mforge_core::canon::isomorphic;
use mforge_core::constructions::named_graph;
use mforge_core::Graph;
use serde_json::Value;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn mforge_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mforge"));
    cmd.args(args)
        .env_remove("MFORGE_JOBS")
        .env_remove("MFORGE_BUDGET_STATES")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    Output {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn mforge(args: &[&str], stdin: &str) -> Output {
    mforge_env(args, stdin, &[])
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("tests/golden")
            .join(name),
    )
    .unwrap()
}

fn keys(v: &Value) -> Vec<&str> {
    v.as_object().unwrap().keys().map(|k| k.as_str()).collect()
}

#[test]
fn golden_outputs() {
    let cases: &[(&[&str], &str, i32)] = &[
        (
            &[
                "-g",
                "k5",
                "check",
                "--param",
                "delta",
                "--k",
                "3",
                "--obstruction",
            ],
            "check_k5_obstruction.json",
            0,
        ),
        (
            &["-g", "cycle(5)", "check", "--param", "delta", "--k", "1"],
            "check_c5_member.json",
            1,
        ),
        (&["-g", "d3", "blocktree"], "blocktree_d3.json", 0),
        (
            &["-g", "cmg(2,2,2)", "param", "--tw", "--pw", "--witness"],
            "param_k222_witness.json",
            0,
        ),
        (&["-g", "d3", "audit", "--k", "4"], "audit_d3.json", 0),
        (&["regular-sweep", "--k", "4"], "regular_sweep_4.json", 0),
        (&["-g", "icosahedron", "hj"], "hj_icosahedron.json", 0),
        (
            &[
                "cmg", "--shape", "1,2,2,2", "--param", "delta", "--k", "4", "--verify",
            ],
            "cmg_1222.json",
            0,
        ),
        (
            &["-g", "petersen", "minor", "--target", "k5"],
            "minor_petersen_k5.json",
            0,
        ),
        (
            &[
                "-g",
                "cmg(2,2,2)",
                "add-vertex",
                "--k",
                "3",
                "--set",
                "0,1,2,3,4,5",
            ],
            "add_vertex_k222.json",
            0,
        ),
        (&["-g", "k_1222", "vida"], "vida_k1222.json", 0),
        (
            &["-g", "icosahedron", "small-regular", "--k", "4"],
            "small_regular_icosahedron.json",
            1,
        ),
        (
            &["-g", "cmg(2,2,2)", "four-connected"],
            "four_connected_k222.json",
            0,
        ),
    ];
    for (args, file, code) in cases {
        let out = mforge(args, "");
        assert_eq!(out.code, *code, "{args:?}: {}", out.stderr);
        assert_eq!(out.stdout, golden(file), "{args:?}");
    }
}

#[test]
fn search_writes_graph6_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = dir.path().join("manifest.json");
    let m = manifest.to_str().unwrap();
    let out = mforge(
        &[
            "search",
            "--param",
            "delta",
            "--k",
            "3",
            "--max-order",
            "7",
            "--manifest",
            m,
        ],
        "",
    );
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, golden("search_delta3.g6"));
    assert_eq!(
        std::fs::read_to_string(&manifest).unwrap(),
        golden("manifest_delta3.json")
    );
    let v: Value = serde_json::from_str(&golden("manifest_delta3.json")).unwrap();
    assert_eq!(keys(&v), ["spec", "count", "complete_up_to", "candidates"]);

    let out = mforge(
        &["search", "--param", "delta", "--k", "2", "--max-order", "6"],
        "",
    );
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 1);
    assert_eq!(graph6::decode(lines[0]).unwrap(), Graph::complete(4));
    let manifest: Value = serde_json::from_str(&out.stderr).unwrap();
    assert_eq!(manifest["count"], 1);
    assert_eq!(manifest["complete_up_to"], 6);
}

#[test]
fn search_output_independent_of_jobs() {
    let args = ["search", "--param", "tw", "--k", "3", "--max-order", "7"];
    let one = mforge(&args, "");
    let four = mforge_env(&args, "", &[("MFORGE_JOBS", "4")]);
    let flag = mforge(&[&args[..], &["--jobs", "3"]].concat(), "");
    assert_eq!(one.code, 0);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, flag.stdout);
    assert_eq!(one.stderr, four.stderr);
    assert_eq!(one.stdout.lines().count(), 2);
}

#[test]
fn construct_then_param() {
    let ico = mforge(&["construct", "icosahedron"], "");
    assert_eq!(ico.code, 0);
    let tw = mforge(&["param", "--tw"], &ico.stdout);
    assert_eq!((tw.code, tw.stdout.as_str()), (0, "6\n"));
    let k5 = mforge(&["construct", "complete", "5"], "");
    let check = mforge(
        &["check", "--param", "delta", "--k", "3", "--obstruction"],
        &k5.stdout,
    );
    assert_eq!(check.code, 0);
    let v: Value = serde_json::from_str(&check.stdout).unwrap();
    assert_eq!(v["verdict"], true);
}

#[test]
fn pipelines_compose() {
    let sources: &[&[&str]] = &[
        &["construct", "icosahedron"],
        &["construct", "d3"],
        &["construct", "c5_join_k3bar"],
        &["construct", "k_1222"],
        &["construct", "tight", "4"],
        &["construct", "horned-single", "5"],
        &["construct", "horned-double", "6", "4", "4"],
        &["construct", "cmg", "2", "2", "2", "--plus", "1"],
        &["construct", "k4", "--plus-min"],
    ];
    let sinks: &[&[&str]] = &[
        &["param", "--delta", "--kappa"],
        &["check", "--param", "delta", "--k", "4"],
        &["minor", "--target", "k4"],
        &["blocktree"],
        &["vida"],
    ];
    for src in sources {
        let g = mforge(src, "");
        assert_eq!(g.code, 0, "{src:?}: {}", g.stderr);
        assert_eq!(g.stdout.lines().count(), 1);
        for sink in sinks {
            let out = mforge(sink, &g.stdout);
            assert!(
                out.code == 0 || out.code == 1,
                "{src:?} | {sink:?}: {}",
                out.stderr
            );
            for line in out.stdout.lines() {
                let v: Value = serde_json::from_str(line).unwrap();
                assert!(v.is_object());
            }
        }
    }
    let plus = mforge(&["construct", "cmg", "2", "2", "2", "--plus", "1"], "");
    let g = graph6::decode(plus.stdout.trim()).unwrap();
    assert!(isomorphic(&g, &named_graph("k_1222").unwrap()));
}

#[test]
fn report_schemas() {
    let out = mforge(
        &[
            "-g", "k4", "-g", "cycle(6)", "check", "--param", "tw", "--k", "1",
        ],
        "",
    );
    assert_eq!(out.code, 1);
    let lines: Vec<Value> = out
        .stdout
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(
        keys(&lines[0]),
        [
            "graph",
            "param",
            "k",
            "verdict",
            "failed_condition",
            "witness_parts",
            "witness_graph"
        ]
    );
    let out = mforge(&["-g", "petersen", "param"], "");
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(keys(&v), ["graph", "delta", "kappa", "tw", "pw", "alpha"]);
    assert_eq!(
        (
            v["delta"].as_u64(),
            v["kappa"].as_u64(),
            v["alpha"].as_u64()
        ),
        (Some(3), Some(3), Some(4))
    );
    let out = mforge(&["-g", "tight(4)", "param", "--delta", "--down"], "");
    assert_eq!(out.stdout, "5\n");
}

#[test]
fn dot_export() {
    let out = mforge(&["construct", "path", "3", "--format", "dot"], "");
    assert_eq!(
        out.stdout,
        "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n"
    );
}

#[test]
fn exit_codes() {
    let bad = mforge(&["param", "--tw"], "C~~\n");
    assert_eq!(bad.code, 2);
    assert!(
        bad.stderr.contains("line 1") && bad.stderr.contains("byte 2"),
        "{}",
        bad.stderr
    );
    assert_eq!(mforge(&["param"], "").code, 2);
    assert_eq!(mforge(&["frobnicate"], "").code, 2);
    assert_eq!(
        mforge(&["check", "--param", "genus", "--k", "1"], "C~\n").code,
        2
    );
    assert_eq!(mforge(&["construct", "dodecahedron"], "").code, 2);
    assert_eq!(mforge(&["--help"], "").code, 0);
    let budget = mforge_env(
        &[
            "-g",
            "d3",
            "check",
            "--param",
            "delta",
            "--k",
            "4",
            "--obstruction",
        ],
        "",
        &[("MFORGE_BUDGET_STATES", "10")],
    );
    assert_eq!(budget.code, 3, "{}", budget.stderr);
    assert!(budget.stderr.contains("budget exceeded"));
    let big = mforge(&["enumerate", "--n", "11"], "");
    assert_eq!(big.code, 3);
    let more = mforge(&["--enumerate-max-n", "3", "enumerate", "--n", "4"], "");
    assert_eq!(more.code, 3);
    let neg = mforge(&["-g", "cycle(5)", "minor", "--target", "k4"], "");
    assert_eq!(neg.code, 1);
}

#[test]
fn enumerate_counts() {
    let out = mforge(&["enumerate", "--n", "5", "--connected"], "");
    assert_eq!(out.stdout.lines().count(), 21);
}
